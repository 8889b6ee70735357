//! Indexed enumeration of profile spaces.
//!
//! A space is a table of allowed orderings plus a tuple shape. Full mode
//! walks every `n`-tuple of table indices in lexicographic order; anonymous
//! mode walks only non-decreasing tuples, one per multiset. Both support
//! unranking, so any contiguous index range can be visited independently.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordering::{all_orderings, Ordering};
use crate::profile::Profile;

/// Largest `m` enumerated without an explicit override.
pub const MAX_ENUMERATION_M: usize = 6;
/// Largest space size enumerated without an explicit override.
pub const MAX_ENUMERATION_SIZE: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// All `(m!)^n` tuples.
    Full,
    /// One profile per multiset of orderings.
    Anonymous,
    /// Anonymous over the `m` orderings "top `t`, rest ascending". Sound
    /// only for rules that read nothing but each individual's top.
    TopsQuotient,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Anonymous => "anonymous",
            Mode::TopsQuotient => "tops-quotient",
        }
    }

    pub fn is_anonymous(self) -> bool {
        !matches!(self, Mode::Full)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Mode::Full),
            "anonymous" => Ok(Mode::Anonymous),
            "tops-quotient" | "tops_quotient" => Ok(Mode::TopsQuotient),
            _ => Err(Error::InvalidParameters(format!("unknown mode `{s}`"))),
        }
    }
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of non-decreasing `len`-tuples over `0..values`.
pub fn multichoose(values: u64, len: u64) -> Option<u64> {
    if len == 0 {
        return Some(1);
    }
    if values == 0 {
        return Some(0);
    }
    binomial(values + len - 1, len)
}

/// Index tuples over `0..base` of length `len`, either all tuples or only
/// non-decreasing ones, in lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct TupleSpace {
    base: usize,
    len: usize,
    sorted: bool,
    total: u64,
}

impl TupleSpace {
    pub(crate) fn new(base: usize, len: usize, sorted: bool) -> Option<Self> {
        let total = if sorted {
            multichoose(base as u64, len as u64)?
        } else {
            (base as u64).checked_pow(len as u32)?
        };
        Some(TupleSpace {
            base,
            len,
            sorted,
            total,
        })
    }

    pub(crate) fn total(&self) -> u64 {
        self.total
    }

    pub(crate) fn unrank(&self, mut index: u64) -> Vec<usize> {
        debug_assert!(index < self.total);
        let mut out = vec![0; self.len];
        if !self.sorted {
            for slot in out.iter_mut().rev() {
                *slot = (index % self.base as u64) as usize;
                index /= self.base as u64;
            }
            return out;
        }
        let mut lo = 0;
        for i in 0..self.len {
            let remaining = (self.len - i - 1) as u64;
            let mut v = lo;
            loop {
                let block = multichoose((self.base - v) as u64, remaining).expect("fits");
                if index < block {
                    break;
                }
                index -= block;
                v += 1;
            }
            out[i] = v;
            lo = v;
        }
        out
    }

    /// Steps to the next tuple; returns the leftmost changed position, or
    /// `None` past the end.
    pub(crate) fn advance(&self, t: &mut [usize]) -> Option<usize> {
        let i = t.iter().rposition(|&v| v + 1 < self.base)?;
        t[i] += 1;
        let fill = if self.sorted { t[i] } else { 0 };
        for v in &mut t[i + 1..] {
            *v = fill;
        }
        Some(i)
    }
}

/// A finite, indexed space of profiles.
#[derive(Debug, Clone)]
pub struct ProfileSpace {
    m: usize,
    n: usize,
    mode: Mode,
    table: Vec<Ordering>,
    tuples: TupleSpace,
}

impl ProfileSpace {
    pub fn new(m: usize, n: usize, mode: Mode, override_guards: bool) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters("m and n must be at least 1".into()));
        }
        if m > MAX_ENUMERATION_M && !override_guards {
            return Err(Error::GuardExceeded(format!(
                "m = {m} exceeds {MAX_ENUMERATION_M}"
            )));
        }
        let table = match mode {
            Mode::Full | Mode::Anonymous => all_orderings(m),
            Mode::TopsQuotient => (0..m)
                .map(|t| {
                    let mut r = vec![t];
                    r.extend((0..m).filter(|&x| x != t));
                    Ordering::from_vec_unchecked(r)
                })
                .collect(),
        };
        let tuples = TupleSpace::new(table.len(), n, mode.is_anonymous())
            .ok_or_else(|| Error::GuardExceeded("profile count overflows u64".into()))?;
        if tuples.total() > MAX_ENUMERATION_SIZE && !override_guards {
            return Err(Error::GuardExceeded(format!(
                "{} profiles exceeds {MAX_ENUMERATION_SIZE}",
                tuples.total()
            )));
        }
        Ok(ProfileSpace {
            m,
            n,
            mode,
            table,
            tuples,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> u64 {
        self.tuples.total()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: u64) -> Profile {
        self.profile_of(&self.tuples.unrank(index))
    }

    fn profile_of(&self, t: &[usize]) -> Profile {
        Profile::from_parts_unchecked(self.m, t.iter().map(|&i| self.table[i].clone()).collect())
    }

    /// Calls `f(index, profile)` for each index in `range`, in order.
    pub fn for_each_in<F: FnMut(u64, &Profile)>(&self, range: Range<u64>, mut f: F) {
        let end = range.end.min(self.len());
        if range.start >= end {
            return;
        }
        let mut t = self.tuples.unrank(range.start);
        let mut orderings: Vec<Ordering> = t.iter().map(|&i| self.table[i].clone()).collect();
        let mut index = range.start;
        loop {
            let u = Profile::from_parts_unchecked(self.m, orderings);
            f(index, &u);
            orderings = u.into_orderings();
            index += 1;
            if index >= end {
                break;
            }
            let changed = self.tuples.advance(&mut t).expect("index < total");
            for j in changed..self.n {
                orderings[j] = self.table[t[j]].clone();
            }
        }
    }

    pub fn iter(&self) -> ProfileIter {
        self.clone().into_iter()
    }
}

impl IntoIterator for ProfileSpace {
    type Item = Profile;
    type IntoIter = ProfileIter;

    fn into_iter(self) -> ProfileIter {
        let next = (!self.is_empty()).then(|| self.tuples.unrank(0));
        ProfileIter { space: self, next }
    }
}

/// Streams a [`ProfileSpace`] in enumeration order.
pub struct ProfileIter {
    space: ProfileSpace,
    next: Option<Vec<usize>>,
}

impl Iterator for ProfileIter {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        let t = self.next.as_mut()?;
        let u = self.space.profile_of(t);
        if self.space.tuples.advance(t).is_none() {
            self.next = None;
        }
        Some(u)
    }
}

/// Every profile of the space, in enumeration order.
pub fn enumerate_profiles(m: usize, n: usize, mode: Mode, override_guards: bool) -> Result<ProfileIter> {
    Ok(ProfileSpace::new(m, n, mode, override_guards)?.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(ProfileSpace::new(3, 2, Mode::Full, false).unwrap().len(), 36);
        assert_eq!(ProfileSpace::new(3, 2, Mode::Anonymous, false).unwrap().len(), 21);
        assert_eq!(ProfileSpace::new(4, 3, Mode::Anonymous, false).unwrap().len(), 2600);
        assert_eq!(ProfileSpace::new(5, 3, Mode::Anonymous, false).unwrap().len(), 295_240);
        assert_eq!(ProfileSpace::new(5, 6, Mode::TopsQuotient, false).unwrap().len(), 210);
        assert_eq!(binomial(122, 3), Some(295_240));
        assert_eq!(binomial(26, 3), Some(2600));
        assert_eq!(multichoose(6, 0), Some(1));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            ProfileSpace::new(7, 1, Mode::Full, false),
            Err(Error::GuardExceeded(_))
        ));
        assert!(ProfileSpace::new(7, 1, Mode::Full, true).is_ok());
        assert!(matches!(
            ProfileSpace::new(6, 5, Mode::Full, false),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn iteration_matches_unranking() {
        for mode in [Mode::Full, Mode::Anonymous, Mode::TopsQuotient] {
            let space = ProfileSpace::new(3, 3, mode, false).unwrap();
            let listed: Vec<Profile> = space.iter().collect();
            assert_eq!(listed.len() as u64, space.len());
            for (i, u) in listed.iter().enumerate() {
                assert_eq!(&space.get(i as u64), u);
            }
            let mut visited = Vec::new();
            space.for_each_in(5..17, |i, u| visited.push((i, u.clone())));
            assert_eq!(visited.len() as u64, space.len().min(17) - 5);
            for (i, u) in visited {
                assert_eq!(u, listed[i as usize]);
            }
        }
    }

    #[test]
    fn anonymous_is_one_per_multiset() {
        let full = ProfileSpace::new(3, 3, Mode::Full, false).unwrap();
        let anon = ProfileSpace::new(3, 3, Mode::Anonymous, false).unwrap();
        let classes: HashSet<_> = full.iter().map(|u| u.canonical_key()).collect();
        let reps: Vec<_> = anon.iter().map(|u| u.canonical_key()).collect();
        assert_eq!(classes.len(), reps.len());
        assert_eq!(reps.iter().collect::<HashSet<_>>(), classes.iter().collect());
        // Representatives are sorted tuples.
        for u in anon.iter() {
            assert!(u.orderings().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn full_order_is_lexicographic() {
        let listed: Vec<_> = enumerate_profiles(3, 2, Mode::Full, false).unwrap().collect();
        assert!(listed.windows(2).all(|w| w[0].orderings() < w[1].orderings()));
    }
}
