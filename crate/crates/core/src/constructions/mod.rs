//! Witness builders. Each takes the target set (or size) and returns a
//! profile on which the matching rule selects it. Every free ordering
//! choice is fixed to ascending id order so outputs are deterministic;
//! callers are expected to re-evaluate rather than trust the result.

mod approval;
mod copeland;

use crate::choice::{ChoiceSet, MAX_ALTERNATIVES};
use crate::error::{Error, Result};
use crate::ordering::{Alternative, Ordering};
use crate::profile::Profile;

pub use approval::{construct_approval, gauge};
pub use copeland::{
    construct_copeland, copeland_insert_top_element, copeland_part1, copeland_part2,
    copeland_size_infeasibility,
};

pub(crate) fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    if m > MAX_ALTERNATIVES {
        return Err(Error::TooManyAlternatives {
            m,
            max: MAX_ALTERNATIVES,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn check_set(m: usize, s: ChoiceSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyChoiceSet);
    }
    if !s.is_subset(ChoiceSet::full(m)) {
        let alt = s.iter().find(|&x| x >= m).unwrap_or(m);
        return Err(Error::UnknownAlternative { alt, m });
    }
    Ok(())
}

/// `top` followed by `bottom`, both given as rank sequences.
fn stacked<I, J>(top: I, bottom: J) -> Ordering
where
    I: IntoIterator<Item = Alternative>,
    J: IntoIterator<Item = Alternative>,
{
    Ordering::from_vec_unchecked(top.into_iter().chain(bottom).collect())
}

/// `S` ascending over the rest ascending, and `S` descending over the rest
/// ascending.
fn opposed_on_set(m: usize, s: ChoiceSet) -> (Ordering, Ordering) {
    let rest = s.complement(m).ids();
    let up = s.ids();
    let down: Vec<_> = up.iter().rev().copied().collect();
    (stacked(up, rest.clone()), stacked(down, rest))
}

/// Fills the profile up to `n` individuals: individual `j` (1-based) gets
/// ascending order when `j` is odd and its inverse when `j` is even.
/// `n - u.n()` must be even.
fn fill_with_opposed_pairs(u: &mut Profile, n: usize) {
    debug_assert!(n >= u.n() && (n - u.n()) % 2 == 0);
    let q = Ordering::ascending(u.m());
    while u.n() < n {
        let j = u.n() + 1;
        let next = if j % 2 == 1 { q.clone() } else { q.inverse() };
        u.push(next).expect("same m");
    }
}

/// Pareto set equal to `s`: the first two individuals rank `s` on top in
/// opposite orders, everyone ranks the rest below, and the others copy
/// individual 1.
pub fn construct_pareto(m: usize, n: usize, s: ChoiceSet) -> Result<Profile> {
    check_dims(m, n)?;
    check_set(m, s)?;
    if n < 2 {
        return Err(Error::InvalidParameters("pareto witness needs n >= 2".into()));
    }
    let (first, second) = opposed_on_set(m, s);
    let mut orderings = vec![first.clone(), second];
    orderings.extend(std::iter::repeat_n(first, n - 2));
    Profile::new(m, orderings)
}

/// Maximin set `{0, ..., k-1}`. Starting from the unanimous ascending
/// profile, step `j = 2..=k` swaps ranks `j-1` and `j` for individuals
/// `1..j-1`.
pub fn construct_maximin(m: usize, n: usize, k: usize) -> Result<Profile> {
    check_dims(m, n)?;
    if k == 0 || k > m.min(n) {
        return Err(Error::Infeasible(format!(
            "maximin builder needs 1 <= k <= min(m, n) = {}, got k = {k}",
            m.min(n)
        )));
    }
    let mut rows: Vec<Vec<usize>> = vec![(0..m).collect(); n];
    for j in 2..=k {
        for row in rows.iter_mut().take(j - 1) {
            row.swap(j - 2, j - 1);
        }
    }
    Profile::from_rows(&rows)
}

/// Borda set equal to `s` for even `n`: `s` ascending then `s` descending
/// over a shared bottom, then opposed pairs of the full ascending order.
pub fn construct_borda(m: usize, n: usize, s: ChoiceSet) -> Result<Profile> {
    check_dims(m, n)?;
    check_set(m, s)?;
    if n % 2 == 1 {
        return Err(Error::InvalidParameters(
            "the Borda builder handles even n only".into(),
        ));
    }
    let (first, second) = opposed_on_set(m, s);
    let mut u = Profile::new(m, vec![first, second])?;
    fill_with_opposed_pairs(&mut u, n);
    Ok(u)
}

/// Why no size-`k` set is a plurality outcome at `(m, n)`, if that is so.
pub fn plurality_infeasibility(m: usize, n: usize, k: usize) -> Option<String> {
    if k == 0 || k > m {
        return Some(format!("k = {k} is outside [1, {m}]"));
    }
    if k > n {
        return Some(format!("k = {k} exceeds the number of individuals n = {n}"));
    }
    let q = n / k;
    let r = n % k;
    if r == 0 {
        return None;
    }
    if k == m {
        return Some(format!("k = m = {m} does not divide n = {n}"));
    }
    let spill = r.div_ceil(m - k);
    if q > spill {
        None
    } else {
        Some(format!(
            "floor(n/k) = {q} does not exceed ceil(r/(m-k)) = {spill} (r = {r})"
        ))
    }
}

pub fn plurality_feasible(m: usize, n: usize, k: usize) -> bool {
    plurality_infeasibility(m, n, k).is_none()
}

/// Plurality set equal to `s`: `floor(n/k)` individuals top each member,
/// leftover tops go round-robin over the non-members, and every ordering
/// lists the remaining alternatives ascending below its top.
pub fn construct_plurality(m: usize, n: usize, s: ChoiceSet) -> Result<Profile> {
    check_dims(m, n)?;
    check_set(m, s)?;
    let k = s.len();
    if let Some(why) = plurality_infeasibility(m, n, k) {
        return Err(Error::Infeasible(why));
    }
    let q = n / k;
    let r = n % k;
    let losers = s.complement(m).ids();
    let mut tops = Vec::with_capacity(n);
    for x in s.iter() {
        tops.extend(std::iter::repeat_n(x, q));
    }
    tops.extend((0..r).map(|i| losers[i % losers.len()]));
    let orderings = tops
        .into_iter()
        .map(|t| stacked([t], (0..m).filter(move |&x| x != t)))
        .collect();
    Profile::new(m, orderings)
}

/// The three rankings of `s` used for the top-cycle witness: the 3-cycle on
/// `s[0..3]`, then each later element inserted in all three rankings
/// directly below a pivot. The first pivot is `s[1]`; afterwards it is the
/// element inserted last.
pub fn cycle_orderings(s: &[Alternative]) -> Result<[Vec<Alternative>; 3]> {
    if s.len() < 3 {
        return Err(Error::InvalidParameters(format!(
            "a majority cycle needs at least 3 alternatives, got {}",
            s.len()
        )));
    }
    let (x, y, z) = (s[0], s[1], s[2]);
    let mut rows = [vec![x, y, z], vec![y, z, x], vec![z, x, y]];
    let mut pivot = y;
    for &w in &s[3..] {
        for row in rows.iter_mut() {
            let at = row.iter().position(|&a| a == pivot).expect("pivot present");
            row.insert(at + 1, w);
        }
        pivot = w;
    }
    Ok(rows)
}

/// Three-individual profile on `0..k` whose weak majority closure relates
/// every pair.
pub fn cycle_profile(k: usize) -> Result<Profile> {
    let s: Vec<_> = (0..k).collect();
    Profile::from_rows(&cycle_orderings(&s)?)
}

/// Top cycle equal to `s`.
///
/// Odd `n`: individuals 1-3 rank `s` as a majority cycle (or share one
/// ordering when `|s| = 1`) above the rest ascending. Even `n`: individuals
/// 1-2 rank `s` in opposite orders above the rest ascending. The remaining
/// individuals come in opposed pairs.
pub fn construct_top_cycle(m: usize, n: usize, s: ChoiceSet) -> Result<Profile> {
    check_dims(m, n)?;
    check_set(m, s)?;
    let rest = s.complement(m).ids();
    let mut u = if n % 2 == 0 {
        let (first, second) = opposed_on_set(m, s);
        Profile::new(m, vec![first, second])?
    } else {
        if n < 3 {
            return Err(Error::InvalidParameters(
                "odd n top-cycle witness needs n >= 3".into(),
            ));
        }
        match s.len() {
            2 => {
                return Err(Error::Infeasible(
                    "odd n: no two-element set is a top cycle".into(),
                ))
            }
            1 => {
                let o = stacked(s.ids(), rest);
                Profile::new(m, vec![o; 3])?
            }
            _ => {
                let orderings = cycle_orderings(&s.ids())?
                    .into_iter()
                    .map(|top| stacked(top, rest.iter().copied()))
                    .collect();
                Profile::new(m, orderings)?
            }
        }
    };
    fill_with_opposed_pairs(&mut u, n);
    Ok(u)
}

/// Appends ascending order and its inverse. Pairwise margins are unchanged.
pub fn pad_with_inverse_pair(u: &Profile) -> Profile {
    let mut out = u.clone();
    let q = Ordering::ascending(u.m());
    let inv = q.inverse();
    out.push(q).expect("same m");
    out.push(inv).expect("same m");
    out
}

/// Adds alternative `m` at the bottom of every ordering.
pub fn append_bottom_alternative(u: &Profile) -> Result<Profile> {
    let m = u.m() + 1;
    if m > MAX_ALTERNATIVES {
        return Err(Error::TooManyAlternatives {
            m,
            max: MAX_ALTERNATIVES,
        });
    }
    let orderings = u
        .orderings()
        .iter()
        .map(|o| stacked(o.ranks().iter().copied(), [m - 1]))
        .collect();
    Profile::new(m, orderings)
}
