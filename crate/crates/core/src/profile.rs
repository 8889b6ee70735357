//! Profiles: one strict ordering per individual over a shared set of
//! alternatives.

use std::fmt;

use crate::choice::MAX_ALTERNATIVES;
use crate::error::{Error, Result};
use crate::ordering::{check_permutation, Alternative, Ordering};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    m: usize,
    orderings: Vec<Ordering>,
}

/// Anonymity-class key: the orderings sorted lexicographically.
///
/// Two profiles share a key exactly when one is a reordering of the other's
/// individuals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<Ordering>);

impl Profile {
    pub fn new(m: usize, orderings: Vec<Ordering>) -> Result<Self> {
        if m > MAX_ALTERNATIVES {
            return Err(Error::TooManyAlternatives {
                m,
                max: MAX_ALTERNATIVES,
            });
        }
        if orderings.is_empty() {
            return Err(Error::EmptyProfile);
        }
        for (index, o) in orderings.iter().enumerate() {
            if o.len() != m {
                return Err(Error::LengthMismatch {
                    index,
                    len: o.len(),
                    m,
                });
            }
        }
        Ok(Profile { m, orderings })
    }

    /// Builds a profile from raw rank rows; `m` is the row length.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyProfile)?;
        let m = first.as_ref().len();
        let orderings = rows
            .iter()
            .map(|r| Ordering::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Profile::new(m, orderings)
    }

    /// `n` copies of one ordering.
    pub fn unanimous(ordering: Ordering, n: usize) -> Result<Self> {
        let m = ordering.len();
        Profile::new(m, vec![ordering; n])
    }

    pub(crate) fn from_parts_unchecked(m: usize, orderings: Vec<Ordering>) -> Self {
        debug_assert!(!orderings.is_empty() && orderings.iter().all(|o| o.len() == m));
        Profile { m, orderings }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.orderings.len()
    }

    pub fn orderings(&self) -> &[Ordering] {
        &self.orderings
    }

    pub fn into_orderings(self) -> Vec<Ordering> {
        self.orderings
    }

    /// Ordering of individual `i` (0-based).
    pub fn individual(&self, i: usize) -> &Ordering {
        &self.orderings[i]
    }

    pub fn push(&mut self, o: Ordering) -> Result<()> {
        if o.len() != self.m {
            return Err(Error::LengthMismatch {
                index: self.orderings.len(),
                len: o.len(),
                m: self.m,
            });
        }
        self.orderings.push(o);
        Ok(())
    }

    /// Replaces every alternative `x` by `perm[x]`.
    pub fn relabel_alternatives(&self, perm: &[Alternative]) -> Result<Profile> {
        if perm.len() != self.m {
            return Err(Error::NotAPermutation {
                m: self.m,
                detail: format!("relabeling has length {}", perm.len()),
            });
        }
        check_permutation(perm)?;
        let orderings = self
            .orderings
            .iter()
            .map(|o| Ordering::from_vec_unchecked(o.ranks().iter().map(|&x| perm[x]).collect()))
            .collect();
        Ok(Profile {
            m: self.m,
            orderings,
        })
    }

    /// Individual `i` of the result is individual `sigma[i]` of `self`.
    pub fn permute_individuals(&self, sigma: &[usize]) -> Result<Profile> {
        if sigma.len() != self.n() {
            return Err(Error::NotAPermutation {
                m: self.n(),
                detail: format!("individual permutation has length {}", sigma.len()),
            });
        }
        check_permutation(sigma)?;
        Ok(Profile {
            m: self.m,
            orderings: sigma.iter().map(|&j| self.orderings[j].clone()).collect(),
        })
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let mut v = self.orderings.clone();
        v.sort();
        CanonicalKey(v)
    }

    /// Set of alternatives each individual ranks first.
    pub fn tops_iter(&self) -> impl Iterator<Item = Alternative> + '_ {
        self.orderings.iter().map(Ordering::top)
    }
}

impl fmt::Display for Profile {
    /// Same text as [`crate::codec::emit`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::codec::emit(self))
    }
}
