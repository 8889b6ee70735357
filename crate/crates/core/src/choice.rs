use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::Alternative;

/// Largest supported number of alternatives; sets are packed into a `u16`.
pub const MAX_ALTERNATIVES: usize = 16;

/// A set of alternatives, stored as a bitmask.
///
/// Rules always return non-empty sets; the empty mask is only reachable
/// through [`ChoiceSet::empty`] while a set is being built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ChoiceSet {
    mask: u16,
}

impl ChoiceSet {
    pub const fn empty() -> Self {
        ChoiceSet { mask: 0 }
    }

    pub const fn from_mask(mask: u16) -> Self {
        ChoiceSet { mask }
    }

    /// `{0, 1, ..., k-1}`.
    pub fn prefix(k: usize) -> Self {
        assert!(k <= MAX_ALTERNATIVES);
        ChoiceSet {
            mask: ((1u32 << k) - 1) as u16,
        }
    }

    pub fn full(m: usize) -> Self {
        Self::prefix(m)
    }

    pub fn from_ids<I: IntoIterator<Item = Alternative>>(ids: I) -> Self {
        let mut s = ChoiceSet::empty();
        for x in ids {
            s.insert(x);
        }
        s
    }

    /// Builds a non-empty set of ids, each `< m`.
    pub fn try_from_ids(ids: &[Alternative], m: usize) -> Result<Self> {
        if m > MAX_ALTERNATIVES {
            return Err(Error::TooManyAlternatives {
                m,
                max: MAX_ALTERNATIVES,
            });
        }
        if ids.is_empty() {
            return Err(Error::EmptyChoiceSet);
        }
        if let Some(&alt) = ids.iter().find(|&&x| x >= m) {
            return Err(Error::UnknownAlternative { alt, m });
        }
        Ok(Self::from_ids(ids.iter().copied()))
    }

    pub fn mask(self) -> u16 {
        self.mask
    }

    pub fn insert(&mut self, x: Alternative) {
        assert!(x < MAX_ALTERNATIVES, "alternative {x} exceeds bitmask width");
        self.mask |= 1 << x;
    }

    pub fn contains(self, x: Alternative) -> bool {
        x < MAX_ALTERNATIVES && self.mask & (1 << x) != 0
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_subset(self, other: ChoiceSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(self, other: ChoiceSet) -> ChoiceSet {
        ChoiceSet {
            mask: self.mask | other.mask,
        }
    }

    /// Members of `0..m` outside this set.
    pub fn complement(self, m: usize) -> ChoiceSet {
        ChoiceSet {
            mask: Self::full(m).mask & !self.mask,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Alternative> {
        (0..MAX_ALTERNATIVES).filter(move |&x| self.contains(x))
    }

    /// Members in ascending order.
    pub fn ids(self) -> Vec<Alternative> {
        self.iter().collect()
    }

    /// Image under the alternative map `perm`.
    pub fn map(self, perm: &[Alternative]) -> ChoiceSet {
        ChoiceSet::from_ids(self.iter().map(|x| perm[x]))
    }
}

impl fmt::Display for ChoiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Indices achieving the extreme of `values`; `max` picks argmax, else argmin.
pub(crate) fn arg_extreme(values: &[i64], max: bool) -> ChoiceSet {
    let best = if max {
        values.iter().copied().max()
    } else {
        values.iter().copied().min()
    };
    let best = best.expect("at least one alternative");
    ChoiceSet::from_ids(
        values
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == best)
            .map(|(x, _)| x),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let s = ChoiceSet::from_ids([0, 2]);
        assert_eq!(s.mask(), 0b101);
        assert_eq!(s.len(), 2);
        assert_eq!(s.complement(4).ids(), vec![1, 3]);
        assert!(s.is_subset(ChoiceSet::full(3)));
        assert!(!ChoiceSet::full(3).is_subset(s));
        assert_eq!(s.to_string(), "{0,2}");
        assert_eq!(ChoiceSet::full(16).len(), 16);
    }

    #[test]
    fn try_from_ids_validates() {
        assert_eq!(ChoiceSet::try_from_ids(&[], 3), Err(Error::EmptyChoiceSet));
        assert!(matches!(
            ChoiceSet::try_from_ids(&[3], 3),
            Err(Error::UnknownAlternative { alt: 3, m: 3 })
        ));
        assert_eq!(
            ChoiceSet::try_from_ids(&[2, 0, 2], 3).unwrap().ids(),
            vec![0, 2]
        );
    }

    #[test]
    fn arg_extreme_keeps_ties() {
        assert_eq!(arg_extreme(&[3, 1, 3], true).ids(), vec![0, 2]);
        assert_eq!(arg_extreme(&[3, 1, 3], false).ids(), vec![1]);
    }
}
