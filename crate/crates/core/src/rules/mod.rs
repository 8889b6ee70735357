//! The correspondences: each maps a profile (plus ballot sizes, for
//! approval) to a non-empty set of alternatives. Ties are never broken.

mod top_cycle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::choice::{arg_extreme, ChoiceSet};
use crate::error::{Error, Result};
use crate::majority::MajorityMatrix;
use crate::profile::Profile;

pub use top_cycle::{top_cycle, top_cycle_by_closure, top_cycle_of};

/// Per-alternative integer scores, indexed by alternative id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector(pub Vec<i64>);

impl ScoreVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Scores rearranged largest first.
    pub fn sorted_desc(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn argmax(&self) -> ChoiceSet {
        arg_extreme(&self.0, true)
    }

    pub fn argmin(&self) -> ChoiceSet {
        arg_extreme(&self.0, false)
    }
}

/// Per-individual approval ballot sizes `b_i` in `[1, m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexVector(Vec<usize>);

impl IndexVector {
    pub fn new(b: Vec<usize>, m: usize) -> Result<Self> {
        if let Some((index, &value)) = b.iter().enumerate().find(|(_, &v)| v == 0 || v > m) {
            return Err(Error::BallotOutOfRange { index, value, m });
        }
        if b.is_empty() {
            return Err(Error::BallotLengthMismatch { len: 0, n: 0 });
        }
        Ok(IndexVector(b))
    }

    pub fn uniform(value: usize, n: usize, m: usize) -> Result<Self> {
        IndexVector::new(vec![value; n], m)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest ballot size.
    pub fn gauge(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn permute(&self, sigma: &[usize]) -> IndexVector {
        IndexVector(sigma.iter().map(|&j| self.0[j]).collect())
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Tops,
    Pareto,
    Maximin,
    Borda,
    Plurality,
    TopCycle,
    Copeland,
    Approval,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::Tops,
        Rule::Pareto,
        Rule::Maximin,
        Rule::Borda,
        Rule::Plurality,
        Rule::TopCycle,
        Rule::Copeland,
        Rule::Approval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Tops => "tops",
            Rule::Pareto => "pareto",
            Rule::Maximin => "maximin",
            Rule::Borda => "borda",
            Rule::Plurality => "plurality",
            Rule::TopCycle => "top_cycle",
            Rule::Copeland => "copeland",
            Rule::Approval => "approval",
        }
    }

    /// Evaluates a profile-only rule. Approval needs ballots; see [`evaluate`].
    pub fn apply(self, u: &Profile) -> Result<ChoiceSet> {
        evaluate(self, u, None)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// Uniform dispatch. `ballots` is required for approval and ignored otherwise.
pub fn evaluate(rule: Rule, u: &Profile, ballots: Option<&IndexVector>) -> Result<ChoiceSet> {
    Ok(match rule {
        Rule::Tops => tops(u),
        Rule::Pareto => pareto(u),
        Rule::Maximin => maximin(u),
        Rule::Borda => borda(u),
        Rule::Plurality => plurality(u),
        Rule::TopCycle => top_cycle(u),
        Rule::Copeland => copeland(u),
        Rule::Approval => approval(u, ballots.ok_or(Error::MissingBallots)?)?,
    })
}

/// Dispatch by rule name.
pub fn evaluate_named(rule: &str, u: &Profile, ballots: Option<&IndexVector>) -> Result<ChoiceSet> {
    evaluate(rule.parse()?, u, ballots)
}

pub fn tops(u: &Profile) -> ChoiceSet {
    ChoiceSet::from_ids(u.tops_iter())
}

/// Alternatives that no other alternative beats unanimously.
pub fn pareto(u: &Profile) -> ChoiceSet {
    let mm = MajorityMatrix::new(u);
    let n = u.n() as u32;
    let m = u.m();
    ChoiceSet::from_ids((0..m).filter(|&x| (0..m).all(|y| mm.support(y, x) != n)))
}

/// Worst (largest) rank of each alternative over all individuals.
pub fn worst_ranks(u: &Profile) -> ScoreVector {
    let mut worst = vec![0i64; u.m()];
    for o in u.orderings() {
        for (p, &x) in o.ranks().iter().enumerate() {
            worst[x] = worst[x].max(p as i64 + 1);
        }
    }
    ScoreVector(worst)
}

pub fn maximin(u: &Profile) -> ChoiceSet {
    worst_ranks(u).argmin()
}

/// Sum of 1-based ranks; lower is better.
pub fn borda_scores(u: &Profile) -> ScoreVector {
    let mut scores = vec![0i64; u.m()];
    for o in u.orderings() {
        for (p, &x) in o.ranks().iter().enumerate() {
            scores[x] += p as i64 + 1;
        }
    }
    ScoreVector(scores)
}

pub fn borda(u: &Profile) -> ChoiceSet {
    borda_scores(u).argmin()
}

/// Number of individuals ranking each alternative first.
pub fn plurality_counts(u: &Profile) -> ScoreVector {
    let mut counts = vec![0i64; u.m()];
    for x in u.tops_iter() {
        counts[x] += 1;
    }
    ScoreVector(counts)
}

/// Top-rank count shared by the plurality winners.
pub fn plurality_number(u: &Profile) -> usize {
    plurality_counts(u).0.into_iter().max().unwrap_or(0) as usize
}

pub fn plurality(u: &Profile) -> ChoiceSet {
    plurality_counts(u).argmax()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CopelandVariant {
    /// Number of alternatives defeated by strict majority.
    #[default]
    Wins,
    /// Defeated minus defeating.
    WinsMinusLosses,
}

pub fn copeland_scores(u: &Profile, variant: CopelandVariant) -> ScoreVector {
    copeland_scores_of(&MajorityMatrix::new(u), variant)
}

pub fn copeland_scores_of(mm: &MajorityMatrix, variant: CopelandVariant) -> ScoreVector {
    let m = mm.m();
    ScoreVector(
        (0..m)
            .map(|x| {
                let wins = (0..m).filter(|&y| mm.beats(x, y)).count() as i64;
                match variant {
                    CopelandVariant::Wins => wins,
                    CopelandVariant::WinsMinusLosses => {
                        wins - (0..m).filter(|&y| mm.beats(y, x)).count() as i64
                    }
                }
            })
            .collect(),
    )
}

pub fn copeland(u: &Profile) -> ChoiceSet {
    copeland_scores(u, CopelandVariant::Wins).argmax()
}

pub fn copeland_with(u: &Profile, variant: CopelandVariant) -> ChoiceSet {
    copeland_scores(u, variant).argmax()
}

fn check_ballots(u: &Profile, b: &IndexVector) -> Result<()> {
    if b.len() != u.n() {
        return Err(Error::BallotLengthMismatch {
            len: b.len(),
            n: u.n(),
        });
    }
    if let Some((index, &value)) = b.values().iter().enumerate().find(|(_, &v)| v == 0 || v > u.m()) {
        return Err(Error::BallotOutOfRange {
            index,
            value,
            m: u.m(),
        });
    }
    Ok(())
}

/// Number of individuals approving each alternative, where individual `i`
/// approves their top `b_i` alternatives.
pub fn approval_scores(u: &Profile, b: &IndexVector) -> Result<ScoreVector> {
    check_ballots(u, b)?;
    let mut scores = vec![0i64; u.m()];
    for (o, &bi) in u.orderings().iter().zip(b.values()) {
        for &x in &o.ranks()[..bi] {
            scores[x] += 1;
        }
    }
    Ok(ScoreVector(scores))
}

pub fn approval(u: &Profile, b: &IndexVector) -> Result<ChoiceSet> {
    Ok(approval_scores(u, b)?.argmax())
}

/// Scores shown alongside a choice set, where the rule has them.
pub fn scores(rule: Rule, u: &Profile, ballots: Option<&IndexVector>) -> Result<Option<ScoreVector>> {
    Ok(match rule {
        Rule::Tops | Rule::Pareto | Rule::TopCycle => None,
        Rule::Maximin => Some(worst_ranks(u)),
        Rule::Borda => Some(borda_scores(u)),
        Rule::Plurality => Some(plurality_counts(u)),
        Rule::Copeland => Some(copeland_scores(u, CopelandVariant::Wins)),
        Rule::Approval => Some(approval_scores(u, ballots.ok_or(Error::MissingBallots)?)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::Ordering;

    fn rows<const M: usize>(r: &[[usize; M]]) -> Profile {
        Profile::from_rows(r).unwrap()
    }

    fn paradox() -> Profile {
        rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    }

    fn unanimous(n: usize) -> Profile {
        Profile::unanimous(Ordering::ascending(3), n).unwrap()
    }

    fn opposed() -> Profile {
        rows(&[[0, 1, 2], [2, 1, 0]])
    }

    #[test]
    fn tops_examples() {
        assert_eq!(tops(&unanimous(3)).ids(), vec![0]);
        assert_eq!(tops(&paradox()), ChoiceSet::full(3));
        assert_eq!(tops(&rows(&[[0, 1, 2], [0, 2, 1], [1, 0, 2]])).ids(), vec![0, 1]);
    }

    #[test]
    fn pareto_examples() {
        assert_eq!(pareto(&unanimous(3)).ids(), vec![0]);
        assert_eq!(pareto(&opposed()), ChoiceSet::full(3));
        assert_eq!(pareto(&paradox()), ChoiceSet::full(3));
    }

    #[test]
    fn maximin_examples() {
        // u2: first individual swaps ranks 1 and 2 of the unanimous profile.
        let u2 = rows(&[[1, 0, 2, 3], [0, 1, 2, 3], [0, 1, 2, 3]]);
        assert_eq!(maximin(&u2).ids(), vec![0, 1]);
        let u3 = rows(&[[1, 2, 0, 3], [0, 2, 1, 3], [0, 1, 2, 3]]);
        assert_eq!(maximin(&u3).ids(), vec![0, 1, 2]);
        assert_eq!(maximin(&unanimous(4)).ids(), vec![0]);
    }

    #[test]
    fn borda_examples() {
        assert_eq!(borda_scores(&opposed()).0, vec![4, 4, 4]);
        assert_eq!(borda(&opposed()), ChoiceSet::full(3));
        assert_eq!(borda_scores(&paradox()).0, vec![6, 6, 6]);
        assert_eq!(borda(&paradox()), ChoiceSet::full(3));
        assert_eq!(borda_scores(&unanimous(2)).0, vec![2, 4, 6]);
        assert_eq!(borda(&unanimous(2)).ids(), vec![0]);
    }

    fn with_tops(tops: &[usize], m: usize) -> Profile {
        let orderings = tops
            .iter()
            .map(|&t| {
                let mut r = vec![t];
                r.extend((0..m).filter(|&x| x != t));
                Ordering::new(r).unwrap()
            })
            .collect();
        Profile::new(m, orderings).unwrap()
    }

    #[test]
    fn plurality_examples() {
        let u = with_tops(&[0, 0, 1, 1, 2], 3);
        assert_eq!(plurality(&u).ids(), vec![0, 1]);
        let u = Profile::unanimous(Ordering::ascending(3), 4).unwrap();
        assert_eq!(plurality(&u).ids(), vec![0]);
        assert_eq!(plurality_number(&u), 4);
        let u = with_tops(&[0, 0, 1, 1, 2, 2], 3);
        assert_eq!(plurality(&u), ChoiceSet::full(3));
    }

    #[test]
    fn copeland_examples() {
        assert_eq!(copeland_scores(&paradox(), CopelandVariant::Wins).0, vec![1, 1, 1]);
        assert_eq!(copeland(&paradox()), ChoiceSet::full(3));
        let u = rows(&[[0, 1, 2], [1, 0, 2]]);
        assert_eq!(copeland_scores(&u, CopelandVariant::Wins).0, vec![1, 1, 0]);
        assert_eq!(copeland(&u).ids(), vec![0, 1]);
        assert_eq!(
            copeland_scores(&u, CopelandVariant::WinsMinusLosses).0,
            vec![1, 1, -2]
        );
    }

    #[test]
    fn approval_examples_and_errors() {
        let u = paradox();
        let all = IndexVector::uniform(3, 3, 3).unwrap();
        assert_eq!(approval_scores(&u, &all).unwrap().0, vec![3, 3, 3]);
        assert_eq!(approval(&u, &all).unwrap(), ChoiceSet::full(3));
        let ones = IndexVector::uniform(1, 3, 3).unwrap();
        let u = rows(&[[0, 1, 2], [0, 2, 1], [1, 0, 2]]);
        assert_eq!(approval(&u, &ones).unwrap(), plurality(&u));

        let short = IndexVector::uniform(1, 2, 3).unwrap();
        assert!(matches!(
            approval(&u, &short),
            Err(Error::BallotLengthMismatch { len: 2, n: 3 })
        ));
        assert!(matches!(
            IndexVector::new(vec![1, 0, 1], 3),
            Err(Error::BallotOutOfRange { index: 1, value: 0, .. })
        ));
        assert!(matches!(
            IndexVector::new(vec![1, 4, 1], 3),
            Err(Error::BallotOutOfRange { index: 1, value: 4, .. })
        ));
    }

    #[test]
    fn dispatch() {
        assert_eq!(evaluate_named("copeland", &paradox(), None).unwrap(), ChoiceSet::full(3));
        assert_eq!(evaluate_named("top-cycle", &paradox(), None).unwrap(), ChoiceSet::full(3));
        let u = rows(&[[0, 1, 2], [0, 2, 1], [1, 0, 2]]);
        let ones = IndexVector::uniform(1, 3, 3).unwrap();
        assert_eq!(
            evaluate(Rule::Approval, &u, Some(&ones)).unwrap(),
            plurality(&u)
        );
        assert_eq!(
            evaluate_named("nosuch", &u, None),
            Err(Error::UnknownRule("nosuch".into()))
        );
        assert_eq!(evaluate(Rule::Approval, &u, None), Err(Error::MissingBallots));
        for r in Rule::ALL {
            assert_eq!(r.name().parse::<Rule>().unwrap(), r);
        }
    }

    #[test]
    fn gauge_is_max() {
        let mut b = vec![2, 2];
        b.extend(vec![1; 8]);
        assert_eq!(IndexVector::new(b, 6).unwrap().gauge(), 2);
        assert_eq!(IndexVector::uniform(1, 5, 3).unwrap().gauge(), 1);
        let mut b = vec![3, 3];
        b.extend(vec![2; 4]);
        assert_eq!(IndexVector::new(b, 4).unwrap().gauge(), 3);
    }
}
