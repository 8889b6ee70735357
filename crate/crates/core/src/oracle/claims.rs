//! The theorem checklist: every range result checked at small `(m, n)`
//! against exhaustive enumeration and against the witness builders.

use std::collections::BTreeSet;
use std::fmt::{Debug, Write as _};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::choice::ChoiceSet;
use crate::constructions::{
    append_bottom_alternative, construct_approval, construct_borda, construct_copeland,
    construct_maximin, construct_pareto, construct_plurality, construct_top_cycle,
    copeland_part1, pad_with_inverse_pair, plurality_feasible,
};
use crate::error::Result;
use crate::majority::majority_matrix;
use crate::ordering::{all_orderings, Ordering};
use crate::profile::Profile;
use crate::rules::{self, copeland_scores, evaluate, CopelandVariant, IndexVector, Rule};

use super::enumerate::{Mode, ProfileSpace};
use super::gauge::min_gauge;
use super::range::{range_report, RangeOptions, RangeReport};

pub const DEFAULT_M_MAX: usize = 5;
pub const DEFAULT_N_MAX: usize = 6;

/// Largest anonymous space the checklist enumerates for a general rule.
pub const ENUMERATION_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub params: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    fn check<T: PartialEq + Debug>(&mut self, id: &str, params: String, expected: T, observed: T) {
        let pass = expected == observed;
        self.claims.push(Claim {
            id: id.to_string(),
            params,
            expected: format!("{expected:?}"),
            observed: format!("{observed:?}"),
            pass,
        });
    }

    fn record_error(&mut self, id: &str, params: String, expected: &str, err: impl std::fmt::Display) {
        self.claims.push(Claim {
            id: id.to_string(),
            params,
            expected: expected.to_string(),
            observed: format!("error: {err}"),
            pass: false,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} [{}]", c.id, c.params);
            if c.pass {
                out.push('\n');
            } else {
                let _ = writeln!(out, " expected {} observed {}", c.expected, c.observed);
            }
        }
        let passed = self.claims.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "{passed}/{} claims passed", self.claims.len());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn range_sizes(s: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().copied().collect()
}

fn anonymous_fits(m: usize, n: usize) -> bool {
    ProfileSpace::new(m, n, Mode::Anonymous, false).is_ok_and(|s| s.len() <= ENUMERATION_BUDGET)
}

fn report(rule: Rule, m: usize, n: usize, mode: Mode) -> Result<RangeReport> {
    range_report(rule, m, n, mode, RangeOptions::default())
}

fn all_sets(m: usize) -> impl Iterator<Item = ChoiceSet> {
    (1..(1u32 << m)).map(|mask| ChoiceSet::from_mask(mask as u16))
}

/// Profile from letter columns; letters map to ids in order of first
/// appearance, reading individual 1 first.
pub fn profile_from_letters(columns: &[&str]) -> Profile {
    let mut names: Vec<char> = Vec::new();
    let rows: Vec<Vec<usize>> = columns
        .iter()
        .map(|col| {
            col.chars()
                .map(|c| match names.iter().position(|&x| x == c) {
                    Some(i) => i,
                    None => {
                        names.push(c);
                        names.len() - 1
                    }
                })
                .collect()
        })
        .collect();
    Profile::from_rows(&rows).expect("well-formed letter table")
}

/// True when `a` becomes `b` after renaming alternatives.
pub fn same_up_to_relabeling(a: &Profile, b: &Profile) -> bool {
    if a.m() != b.m() || a.n() != b.n() {
        return false;
    }
    let mut perm = vec![0; a.m()];
    for (&x, &y) in a.individual(0).ranks().iter().zip(b.individual(0).ranks()) {
        perm[x] = y;
    }
    a.relabel_alternatives(&perm).is_ok_and(|r| r == *b)
}

/// True when `a` becomes `b` after renaming alternatives and reordering
/// individuals.
pub fn same_up_to_relabeling_and_order(a: &Profile, b: &Profile) -> bool {
    if a.n() != b.n() || a.n() > 8 {
        return false;
    }
    let mut sigma: Vec<usize> = (0..a.n()).collect();
    loop {
        if let Ok(p) = a.permute_individuals(&sigma) {
            if same_up_to_relabeling(&p, b) {
                return true;
            }
        }
        if !next_perm(&mut sigma) {
            return false;
        }
    }
}

fn next_perm(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Balanced Copeland tables for 5, 7 and 9 alternatives, as letter columns.
pub const COPELAND_TABLES: [(usize, [&str; 3]); 3] = [
    (5, ["axyzb", "byazx", "zxbya"]),
    (7, ["caxyzbd", "byadzxc", "dzxcbya"]),
    (9, ["rcaxyzbds", "sbyardzxc", "dzxcsbyar"]),
];

/// Five-alternative, three-individual top-cycle table.
pub const TOP_CYCLE_TABLE: [&str; 3] = ["xywvz", "zxywv", "ywvzx"];

/// Copeland sizes reachable with odd `n`.
pub fn copeland_odd_sizes(m: usize) -> Vec<usize> {
    (1..=m)
        .filter(|&k| !(m % 2 == 0 && k == m) && !(m % 2 == 1 && m > 1 && k == m - 1))
        .collect()
}

fn copeland_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 3..=m_max {
        for n in (3..=n_max).step_by(2) {
            if !anonymous_fits(m, n) {
                continue;
            }
            let p = format!("m={m} n={n}");
            match report(Rule::Copeland, m, n, Mode::Anonymous) {
                Ok(rep) => r.check("copeland.odd_n.sizes", p, copeland_odd_sizes(m), range_sizes(&rep.sizes)),
                Err(e) => r.record_error("copeland.odd_n.sizes", p, "report", e),
            }
        }
        for n in (2..=n_max).step_by(2) {
            if anonymous_fits(m, n) {
                let p = format!("m={m} n={n}");
                match report(Rule::Copeland, m, n, Mode::Anonymous) {
                    Ok(rep) => r.check("copeland.even_n.complete", p, true, rep.is_complete()),
                    Err(e) => r.record_error("copeland.even_n.complete", p, "report", e),
                }
            }
        }
        for n in 2..=n_max {
            let mut built = Vec::new();
            for k in 1..=m {
                if let Ok(u) = construct_copeland(m, n, k) {
                    built.push(rules::copeland(&u).len());
                }
            }
            let expected = if n % 2 == 0 { (1..=m).collect() } else { copeland_odd_sizes(m) };
            r.check("copeland.construct.sizes", format!("m={m} n={n}"), expected, built);
        }
    }
    for mp in [3, 5, 7, 9] {
        let observed = copeland_part1(mp).map(|u| copeland_scores(&u, CopelandVariant::Wins).0);
        r.check(
            "copeland.part1.balanced",
            format!("m'={mp}"),
            Ok(vec![(mp as i64 - 1) / 2; mp]),
            observed,
        );
    }
    for (mp, table) in COPELAND_TABLES {
        let ok = copeland_part1(mp).is_ok_and(|u| same_up_to_relabeling(&u, &profile_from_letters(&table)));
        r.check("copeland.part1.table", format!("m'={mp}"), true, ok);
    }
}

fn borda_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 3..=m_max {
        for n in 2..=n_max {
            if !anonymous_fits(m, n) {
                continue;
            }
            let p = format!("m={m} n={n}");
            match report(Rule::Borda, m, n, Mode::Anonymous) {
                Ok(rep) => {
                    let expected: Vec<ChoiceSet> = all_sets(m)
                        .filter(|&s| n % 2 == 0 || !(m % 2 == 0 && s == ChoiceSet::full(m)))
                        .collect();
                    r.check("borda.range", p, expected, rep.sets().collect());
                }
                Err(e) => r.record_error("borda.range", p, "report", e),
            }
        }
        for n in (2..=n_max).step_by(2) {
            let misses: Vec<ChoiceSet> = all_sets(m)
                .filter(|&s| !construct_borda(m, n, s).is_ok_and(|u| rules::borda(&u) == s))
                .collect();
            r.check("borda.construct", format!("m={m} n={n}"), Vec::<ChoiceSet>::new(), misses);
        }
    }
}

fn plurality_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 3..=m_max {
        for n in 2..=n_max {
            let mode = if anonymous_fits(m, n) { Mode::Anonymous } else { Mode::TopsQuotient };
            let p = format!("m={m} n={n} mode={mode}");
            match report(Rule::Plurality, m, n, mode) {
                Ok(rep) => {
                    let predicted: Vec<usize> = (1..=m).filter(|&k| plurality_feasible(m, n, k)).collect();
                    r.check("plurality.feasibility", p, predicted, range_sizes(&rep.sizes));
                }
                Err(e) => r.record_error("plurality.feasibility", p, "report", e),
            }
            let misses: Vec<ChoiceSet> = all_sets(m)
                .filter(|&s| plurality_feasible(m, n, s.len()))
                .filter(|&s| !construct_plurality(m, n, s).is_ok_and(|u| rules::plurality(&u) == s))
                .collect();
            r.check("plurality.construct", format!("m={m} n={n}"), Vec::<ChoiceSet>::new(), misses);
        }
    }
}

fn top_cycle_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 3..=m_max {
        for n in 2..=n_max {
            if anonymous_fits(m, n) {
                let p = format!("m={m} n={n}");
                match report(Rule::TopCycle, m, n, Mode::Anonymous) {
                    Ok(rep) => {
                        let expected: Vec<ChoiceSet> =
                            all_sets(m).filter(|s| n % 2 == 0 || s.len() != 2).collect();
                        r.check("top_cycle.range", p, expected, rep.sets().collect());
                    }
                    Err(e) => r.record_error("top_cycle.range", p, "report", e),
                }
            }
            let misses: Vec<ChoiceSet> = all_sets(m)
                .filter(|s| n % 2 == 0 || s.len() != 2)
                .filter(|&s| !construct_top_cycle(m, n, s).is_ok_and(|u| rules::top_cycle(&u) == s))
                .collect();
            r.check("top_cycle.construct", format!("m={m} n={n}"), Vec::<ChoiceSet>::new(), misses);
        }
    }
    if m_max >= 5 && n_max >= 3 {
        let table = profile_from_letters(&TOP_CYCLE_TABLE);
        let built = construct_top_cycle(5, 3, ChoiceSet::full(5));
        let same = built.as_ref().is_ok_and(|u| same_up_to_relabeling_and_order(u, &table));
        r.check("top_cycle.table", "m=5 n=3".into(), true, same);
        r.check("top_cycle.table.choice", "m=5 n=3".into(), ChoiceSet::full(5), rules::top_cycle(&table));
    }
}

fn maximin_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 1..=m_max {
        for n in 1..=n_max {
            let misses: Vec<usize> = (1..=m.min(n))
                .filter(|&k| !construct_maximin(m, n, k).is_ok_and(|u| rules::maximin(&u) == ChoiceSet::prefix(k)))
                .collect();
            r.check("maximin.construct", format!("m={m} n={n}"), Vec::<usize>::new(), misses);
        }
    }
    // Tables for m = 4 alternatives x y z w and n = 4 individuals.
    let tables: [(usize, [&str; 4]); 3] = [
        (1, ["xyzw", "xyzw", "xyzw", "xyzw"]),
        (2, ["yxzw", "xyzw", "xyzw", "xyzw"]),
        (3, ["yzxw", "xzyw", "xyzw", "xyzw"]),
    ];
    let names = ['x', 'y', 'z', 'w'];
    for (k, table) in tables {
        let rows: Vec<Vec<usize>> = table
            .iter()
            .map(|c| c.chars().map(|ch| names.iter().position(|&x| x == ch).expect("letter")).collect())
            .collect();
        let expected = Profile::from_rows(&rows).expect("table");
        r.check("maximin.table", format!("u{k}"), Ok(expected.clone()), construct_maximin(4, 4, k));
        r.check("maximin.table.choice", format!("u{k}"), ChoiceSet::prefix(k), rules::maximin(&expected));
    }
}

fn pareto_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 1..=m_max {
        for n in 2..=n_max.min(3) {
            let misses: Vec<ChoiceSet> = all_sets(m)
                .filter(|&s| !construct_pareto(m, n, s).is_ok_and(|u| rules::pareto(&u) == s))
                .collect();
            r.check("pareto.construct", format!("m={m} n={n}"), Vec::<ChoiceSet>::new(), misses);
        }
    }
    if m_max >= 3 && n_max >= 2 {
        let complete = report(Rule::Pareto, 3, 2, Mode::Anonymous).map(|rep| rep.is_complete());
        r.check("pareto.range", "m=3 n=2".into(), Ok(true), complete);
    }
}

fn approval_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 3..=6 {
        for n in 2..=10 {
            let misses: Vec<ChoiceSet> = all_sets(m)
                .filter(|&s| {
                    let k = s.len();
                    !construct_approval(m, n, s).is_ok_and(|(u, b)| {
                        let gauge_ok = if k >= n { b.gauge() == k.div_ceil(n) } else { b.gauge() <= 2 };
                        gauge_ok && rules::approval(&u, &b).is_ok_and(|w| w == s)
                    })
                })
                .collect();
            r.check("approval.construct", format!("m={m} n={n}"), Vec::<ChoiceSet>::new(), misses);
        }
    }
    let example = construct_approval(6, 10, ChoiceSet::prefix(4)).and_then(|(u, b)| {
        let scores = rules::approval_scores(&u, &b)?;
        Ok((b.values().to_vec(), scores.0))
    });
    let mut b = vec![2, 2];
    b.extend([1; 8]);
    r.check("approval.example", "m=6 n=10 k=4".into(), Ok((b, vec![3, 3, 3, 3, 0, 0])), example);

    for m in 1..=m_max.min(4) {
        for n in 1..=n_max.min(3) {
            let mut observed = Vec::new();
            let mut expected = Vec::new();
            for k in 1..=m {
                let s = ChoiceSet::prefix(k);
                observed.push(min_gauge(m, n, s, false).ok());
                let g = if k >= n {
                    k.div_ceil(n)
                } else if plurality_feasible(m, n, k) {
                    1
                } else {
                    2
                };
                expected.push(Some(g));
            }
            r.check("approval.min_gauge", format!("m={m} n={n}"), expected, observed);
        }
    }
}

/// Sampled structural properties at `(m, n) = (5, 5)`.
pub fn property_claims(r: &mut ClaimReport, samples: usize) {
    let (m, n) = (5, 5);
    let table = all_orderings(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut failures: Vec<String> = Vec::new();
    let mut fail = |what: &str, u: &Profile| {
        if failures.len() < 5 {
            failures.push(format!("{what}: {}", u.orderings().iter().map(Ordering::to_string).collect::<Vec<_>>().join("/")));
        }
    };
    for _ in 0..samples {
        let u = Profile::new(m, (0..n).map(|_| table[rng.gen_range(0..table.len())].clone()).collect())
            .expect("valid");
        let b = IndexVector::new((0..n).map(|_| rng.gen_range(1..=m)).collect(), m).expect("valid");
        let mut pi: Vec<usize> = (0..m).collect();
        pi.shuffle(&mut rng);
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        let relabeled = u.relabel_alternatives(&pi).expect("perm");
        let permuted = u.permute_individuals(&sigma).expect("perm");
        let b_permuted = b.permute(&sigma);
        for rule in Rule::ALL {
            let base = evaluate(rule, &u, Some(&b)).expect("valid");
            if base.is_empty() {
                fail(&format!("{rule} empty"), &u);
            }
            if evaluate(rule, &permuted, Some(&b_permuted)).expect("valid") != base {
                fail(&format!("{rule} anonymity"), &u);
            }
            if evaluate(rule, &relabeled, Some(&b)).expect("valid") != base.map(&pi) {
                fail(&format!("{rule} neutrality"), &u);
            }
        }
        let borda_sum = rules::borda_scores(&u).sum();
        if borda_sum != (n * m * (m + 1) / 2) as i64 {
            fail("borda sum", &u);
        }
        if copeland_scores(&u, CopelandVariant::Wins).sum() != (m * (m - 1) / 2) as i64 {
            fail("copeland sum", &u);
        }
        if rules::copeland(&u) != rules::copeland_with(&u, CopelandVariant::WinsMinusLosses) {
            fail("copeland variants", &u);
        }
        if rules::top_cycle(&u) != rules::top_cycle_by_closure(&u) {
            fail("top cycle routes", &u);
        }
        if !rules::copeland(&u).is_subset(rules::top_cycle(&u)) {
            fail("copeland within top cycle", &u);
        }
        if !rules::tops(&u).is_subset(rules::pareto(&u)) {
            fail("tops within pareto", &u);
        }
        let padded = pad_with_inverse_pair(&u);
        if majority_matrix(&padded).margins() != majority_matrix(&u).margins()
            || rules::borda(&padded) != rules::borda(&u)
            || rules::copeland(&padded) != rules::copeland(&u)
            || rules::top_cycle(&padded) != rules::top_cycle(&u)
        {
            fail("padding", &u);
        }
        let grown = append_bottom_alternative(&u).expect("m < 16");
        if rules::copeland(&grown) != rules::copeland(&u) {
            fail("bottom append", &u);
        }
    }
    r.check(
        "properties.sampled",
        format!("m={m} n={n} samples={samples}"),
        Vec::<String>::new(),
        failures,
    );
}

/// Copeland winners lie inside the top cycle on every profile.
fn cross_check_claims(r: &mut ClaimReport, m_max: usize, n_max: usize) {
    for m in 1..=m_max.min(4) {
        for n in 1..=n_max.min(4) {
            let space = ProfileSpace::new(m, n, Mode::Anonymous, false).expect("small");
            let mut violations = 0u64;
            space.for_each_in(0..space.len(), |_, u| {
                if !rules::copeland(u).is_subset(rules::top_cycle(u)) {
                    violations += 1;
                }
            });
            r.check("copeland.within_top_cycle", format!("m={m} n={n}"), 0, violations);
        }
    }
}

/// Runs the checklist for every instance with `m <= m_max` and `n <= n_max`
/// that fits the enumeration budget.
pub fn verify_claims(m_max: usize, n_max: usize) -> ClaimReport {
    let mut r = ClaimReport::default();
    copeland_claims(&mut r, m_max, n_max);
    borda_claims(&mut r, m_max, n_max);
    plurality_claims(&mut r, m_max, n_max);
    top_cycle_claims(&mut r, m_max, n_max);
    maximin_claims(&mut r, m_max, n_max);
    pareto_claims(&mut r, m_max, n_max);
    approval_claims(&mut r, m_max, n_max);
    cross_check_claims(&mut r, m_max, n_max);
    property_claims(&mut r, 1000);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_tables() {
        let u = profile_from_letters(&["xyz", "yzx", "zxy"]);
        assert_eq!(u, Profile::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap());
        let v = u.relabel_alternatives(&[2, 0, 1]).unwrap();
        assert!(same_up_to_relabeling(&u, &v));
        let w = v.permute_individuals(&[2, 0, 1]).unwrap();
        assert!(same_up_to_relabeling_and_order(&u, &w));
        let unanimous = Profile::unanimous(Ordering::ascending(3), 3).unwrap();
        assert!(!same_up_to_relabeling_and_order(&u, &unanimous));
    }

    #[test]
    fn odd_sizes() {
        assert_eq!(copeland_odd_sizes(3), vec![1, 3]);
        assert_eq!(copeland_odd_sizes(4), vec![1, 2, 3]);
        assert_eq!(copeland_odd_sizes(5), vec![1, 2, 3, 5]);
    }

    #[test]
    fn small_checklist_passes() {
        let r = verify_claims(3, 3);
        assert!(r.all_passed(), "{}", r.to_text());
        assert!(r.claims.iter().any(|c| c.id == "copeland.odd_n.sizes" && c.params == "m=3 n=3"));
    }
}
