use std::fmt;

use crate::choice::ChoiceSet;
use crate::error::{Error, Result};

/// Dense alternative id in `0..m`.
pub type Alternative = usize;

/// A strict ranking of all `m` alternatives, top rank first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordering {
    ranks: Vec<Alternative>,
}

impl Ordering {
    pub fn new(ranks: Vec<Alternative>) -> Result<Self> {
        check_permutation(&ranks)?;
        Ok(Ordering { ranks })
    }

    /// `0, 1, ..., m-1`.
    pub fn ascending(m: usize) -> Self {
        Ordering {
            ranks: (0..m).collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(ranks: Vec<Alternative>) -> Self {
        debug_assert!(check_permutation(&ranks).is_ok());
        Ordering { ranks }
    }

    pub fn ranks(&self) -> &[Alternative] {
        &self.ranks
    }

    pub fn into_ranks(self) -> Vec<Alternative> {
        self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn top(&self) -> Alternative {
        self.ranks[0]
    }

    pub fn inverse(&self) -> Ordering {
        let mut ranks = self.ranks.clone();
        ranks.reverse();
        Ordering { ranks }
    }

    /// 1-based rank of `x` (1 = top).
    pub fn rank_of(&self, x: Alternative) -> Result<usize> {
        self.ranks
            .iter()
            .position(|&a| a == x)
            .map(|p| p + 1)
            .ok_or(Error::UnknownAlternative {
                alt: x,
                m: self.ranks.len(),
            })
    }

    /// The alternatives occupying the top `k` ranks.
    pub fn top_k(&self, k: usize) -> Result<ChoiceSet> {
        let m = self.ranks.len();
        if k == 0 || k > m {
            return Err(Error::RankOutOfRange { k, m });
        }
        Ok(ChoiceSet::from_ids(self.ranks[..k].iter().copied()))
    }

    /// True when `x` sits above `y`.
    pub fn prefers(&self, x: Alternative, y: Alternative) -> bool {
        for &a in &self.ranks {
            if a == x {
                return true;
            }
            if a == y {
                return false;
            }
        }
        false
    }

    /// Position table: `pos[x]` is the 0-based rank of `x`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ranks.len()];
        for (i, &a) in self.ranks.iter().enumerate() {
            pos[a] = i;
        }
        pos
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.ranks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_permutation(ranks: &[usize]) -> Result<()> {
    let m = ranks.len();
    if m == 0 {
        return Err(Error::NotAPermutation {
            m,
            detail: "empty".into(),
        });
    }
    let mut seen = vec![false; m];
    for &a in ranks {
        if a >= m {
            return Err(Error::NotAPermutation {
                m,
                detail: format!("id {a} out of range"),
            });
        }
        if seen[a] {
            return Err(Error::NotAPermutation {
                m,
                detail: format!("id {a} repeated"),
            });
        }
        seen[a] = true;
    }
    Ok(())
}

/// Every ordering of `0..m` in lexicographic order of the rank sequence.
pub fn all_orderings(m: usize) -> Vec<Ordering> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(Ordering {
            ranks: cur.clone(),
        });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(v: &[usize]) -> Ordering {
        Ordering::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(o(&[0, 1, 2]).inverse(), o(&[2, 1, 0]));
        assert_eq!(o(&[1, 0, 2]).inverse().inverse(), o(&[1, 0, 2]));
        let p = o(&[1, 0, 2]);
        let q = p.inverse();
        assert_eq!(q, o(&[2, 0, 1]));
        for x in 0..3 {
            for y in 0..3 {
                if x != y {
                    assert_eq!(p.prefers(x, y), q.prefers(y, x));
                }
            }
        }
    }

    #[test]
    fn rank_of_examples() {
        assert_eq!(o(&[2, 0, 1]).rank_of(2).unwrap(), 1);
        assert_eq!(o(&[2, 0, 1]).rank_of(1).unwrap(), 3);
        assert_eq!(o(&[0, 1, 2, 3]).rank_of(2).unwrap(), 3);
        assert!(matches!(
            o(&[0, 1, 2]).rank_of(3),
            Err(Error::UnknownAlternative { alt: 3, m: 3 })
        ));
    }

    #[test]
    fn top_k_examples() {
        assert_eq!(o(&[2, 0, 1]).top_k(1).unwrap().ids(), vec![2]);
        assert_eq!(o(&[2, 0, 1]).top_k(3).unwrap().ids(), vec![0, 1, 2]);
        assert_eq!(o(&[3, 1, 0, 2]).top_k(2).unwrap().ids(), vec![1, 3]);
        assert!(o(&[0, 1]).top_k(0).is_err());
        assert!(o(&[0, 1]).top_k(3).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Ordering::new(vec![0, 1, 1]).is_err());
        assert!(Ordering::new(vec![0, 3, 1]).is_err());
        assert!(Ordering::new(vec![]).is_err());
    }

    #[test]
    fn all_orderings_is_lexicographic_and_complete() {
        let all = all_orderings(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Ordering::ascending(4));
        assert_eq!(all[23], Ordering::ascending(4).inverse());
        assert_eq!(all_orderings(1).len(), 1);
    }

    #[test]
    fn top_k_matches_rank_of() {
        for ord in all_orderings(4) {
            for k in 1..=4 {
                let top = ord.top_k(k).unwrap();
                assert_eq!(top.len(), k);
                for x in 0..4 {
                    assert_eq!(top.contains(x), ord.rank_of(x).unwrap() <= k);
                }
            }
        }
    }
}
