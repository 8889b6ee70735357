//! Exhaustive range computation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::choice::ChoiceSet;
use crate::codec;
use crate::error::{Error, Result};
use crate::ordering::Ordering;
use crate::profile::Profile;
use crate::rules::Rule;

use super::enumerate::{binomial, Mode, ProfileSpace};

/// Number of random profiles used to confirm a rule ignores individual order
/// before enumerating only one profile per multiset.
const ANONYMITY_SAMPLES: usize = 64;

/// Indices per parallel work unit.
const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RangeOptions {
    pub override_guards: bool,
}

/// A witness: the enumeration index at which a choice set was first seen
/// and the profile there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index: u64,
    pub profile: Profile,
}

/// The image of a rule over an enumerated profile space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeReport {
    pub rule: Rule,
    pub m: usize,
    pub n: usize,
    pub mode: Mode,
    pub profiles_examined: u64,
    pub achievable: BTreeMap<ChoiceSet, Witness>,
    pub sizes: BTreeSet<usize>,
}

#[derive(Serialize)]
struct ReportJson {
    rule: Rule,
    m: usize,
    n: usize,
    mode: Mode,
    sizes: Vec<usize>,
    witnesses: BTreeMap<u16, String>,
}

impl RangeReport {
    pub fn contains(&self, s: ChoiceSet) -> bool {
        self.achievable.contains_key(&s)
    }

    pub fn sets(&self) -> impl Iterator<Item = ChoiceSet> + '_ {
        self.achievable.keys().copied()
    }

    /// True when every non-empty subset of the alternatives is achievable.
    pub fn is_complete(&self) -> bool {
        self.achievable.len() == (1usize << self.m) - 1
    }

    pub fn to_json(&self) -> String {
        let j = ReportJson {
            rule: self.rule,
            m: self.m,
            n: self.n,
            mode: self.mode,
            sizes: self.sizes.iter().copied().collect(),
            witnesses: self
                .achievable
                .iter()
                .map(|(s, w)| (s.mask(), codec::emit(&w.profile)))
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "rule {} m={} n={} mode={} profiles={}",
            self.rule, self.m, self.n, self.mode, self.profiles_examined
        );
        let sizes: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "sizes: {}", sizes.join(" "));
        let _ = writeln!(out, "achievable sets: {}", self.achievable.len());
        for (s, w) in &self.achievable {
            let rows: Vec<String> = w.profile.orderings().iter().map(Ordering::to_string).collect();
            let _ = writeln!(out, "{s}: {}", rows.join(" / "));
        }
        out
    }
}

type Partial = BTreeMap<ChoiceSet, Witness>;

fn merge(mut a: Partial, b: Partial) -> Partial {
    for (s, w) in b {
        match a.get(&s) {
            Some(cur) if cur.index <= w.index => {}
            _ => {
                a.insert(s, w);
            }
        }
    }
    a
}

fn check_mode(rule: Rule, mode: Mode) -> Result<()> {
    if rule == Rule::Approval {
        return Err(Error::UnsupportedMode(format!(
            "{rule} (its range needs ballots; use min-gauge)"
        )));
    }
    if mode == Mode::TopsQuotient && !matches!(rule, Rule::Tops | Rule::Plurality) {
        return Err(Error::UnsupportedMode(format!(
            "{rule} in {mode} mode (only tops and plurality read nothing but tops)"
        )));
    }
    Ok(())
}

/// Random spot check that the rule ignores the order of individuals.
fn anonymity_precheck(rule: Rule, m: usize, n: usize) -> Result<()> {
    let table = crate::ordering::all_orderings(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..ANONYMITY_SAMPLES {
        let orderings: Vec<Ordering> = (0..n)
            .map(|_| table[rng.gen_range(0..table.len())].clone())
            .collect();
        let u = Profile::new(m, orderings)?;
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        let v = u.permute_individuals(&sigma)?;
        if rule.apply(&u)? != rule.apply(&v)? {
            return Err(Error::CheckFailed(format!(
                "rule {rule} is not anonymous on\n{u}"
            )));
        }
    }
    Ok(())
}

/// Every choice set `rule` produces over the profile space, each with the
/// first profile (in enumeration order) that produces it.
pub fn range_report(rule: Rule, m: usize, n: usize, mode: Mode, opts: RangeOptions) -> Result<RangeReport> {
    check_mode(rule, mode)?;
    let space = ProfileSpace::new(m, n, mode, opts.override_guards)?;
    if mode.is_anonymous() {
        anonymity_precheck(rule, m, n)?;
    }

    let total = space.len();
    let chunks = total.div_ceil(CHUNK);
    let achievable = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = Partial::new();
            space.for_each_in(c * CHUNK..(c + 1) * CHUNK, |index, u| {
                let s = rule.apply(u).expect("profile-only rule");
                part.entry(s).or_insert_with(|| Witness {
                    index,
                    profile: u.clone(),
                });
            });
            part
        })
        .reduce(Partial::new, merge);

    let sizes = achievable.keys().map(|s| s.len()).collect();
    let report = RangeReport {
        rule,
        m,
        n,
        mode,
        profiles_examined: total,
        achievable,
        sizes,
    };
    validate(&report)?;
    Ok(report)
}

/// Witnesses re-evaluate to their keys, and the family is closed under
/// relabeling alternatives (every size class is complete).
fn validate(report: &RangeReport) -> Result<()> {
    for (s, w) in &report.achievable {
        let got = report.rule.apply(&w.profile)?;
        if got != *s {
            return Err(Error::CheckFailed(format!(
                "witness for {s} evaluates to {got}"
            )));
        }
    }
    for &k in &report.sizes {
        let count = report.achievable.keys().filter(|s| s.len() == k).count() as u64;
        let expected = binomial(report.m as u64, k as u64).expect("small");
        if count != expected {
            return Err(Error::CheckFailed(format!(
                "rule {} at m={} n={}: {count} of {expected} sets of size {k} achieved; \
                 the family is not closed under relabeling",
                report.rule, report.m, report.n
            )));
        }
    }
    Ok(())
}

/// Achievable choice-set sizes, by anonymous enumeration.
pub fn achievable_sizes(rule: Rule, m: usize, n: usize) -> Result<BTreeSet<usize>> {
    Ok(range_report(rule, m, n, Mode::Anonymous, RangeOptions::default())?.sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::evaluate;

    fn sizes(rule: Rule, m: usize, n: usize) -> Vec<usize> {
        achievable_sizes(rule, m, n).unwrap().into_iter().collect()
    }

    #[test]
    fn small_ranges() {
        assert_eq!(sizes(Rule::Copeland, 3, 3), vec![1, 3]);
        assert_eq!(sizes(Rule::TopCycle, 3, 3), vec![1, 3]);
        assert_eq!(sizes(Rule::Tops, 3, 2), vec![1, 2]);
        let r = range_report(Rule::TopCycle, 3, 2, Mode::Anonymous, RangeOptions::default()).unwrap();
        assert!(r.is_complete());
    }

    #[test]
    fn full_and_anonymous_agree() {
        for rule in Rule::ALL.into_iter().filter(|&r| r != Rule::Approval) {
            for n in 1..=3 {
                let full = range_report(rule, 3, n, Mode::Full, RangeOptions::default()).unwrap();
                let anon = range_report(rule, 3, n, Mode::Anonymous, RangeOptions::default()).unwrap();
                let a: Vec<_> = full.sets().collect();
                let b: Vec<_> = anon.sets().collect();
                assert_eq!(a, b, "{rule} n={n}");
            }
        }
    }

    #[test]
    fn tops_quotient_matches_anonymous() {
        for rule in [Rule::Plurality, Rule::Tops] {
            for (m, n) in [(3, 4), (4, 3), (4, 4)] {
                let q = range_report(rule, m, n, Mode::TopsQuotient, RangeOptions::default()).unwrap();
                let a = range_report(rule, m, n, Mode::Anonymous, RangeOptions::default()).unwrap();
                assert_eq!(q.sets().collect::<Vec<_>>(), a.sets().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn mode_restrictions() {
        assert!(matches!(
            range_report(Rule::Approval, 3, 2, Mode::Full, RangeOptions::default()),
            Err(Error::UnsupportedMode(_))
        ));
        assert!(matches!(
            range_report(Rule::Borda, 3, 2, Mode::TopsQuotient, RangeOptions::default()),
            Err(Error::UnsupportedMode(_))
        ));
    }

    #[test]
    fn deterministic_witnesses() {
        let a = range_report(Rule::Borda, 4, 3, Mode::Anonymous, RangeOptions::default()).unwrap();
        let b = range_report(Rule::Borda, 4, 3, Mode::Anonymous, RangeOptions::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        // First-found witness: no earlier profile yields the same set.
        let space = ProfileSpace::new(4, 3, Mode::Anonymous, false).unwrap();
        for (s, w) in &a.achievable {
            assert_eq!(space.get(w.index), w.profile);
            let earlier = space.iter().take(w.index as usize).any(|u| borda_of(&u) == *s);
            assert!(!earlier);
        }
    }

    fn borda_of(u: &Profile) -> ChoiceSet {
        evaluate(Rule::Borda, u, None).unwrap()
    }
}
