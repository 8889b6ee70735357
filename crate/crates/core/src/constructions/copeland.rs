//! Copeland witnesses.
//!
//! Even `n` is easy: two individuals ranking the target set in opposite
//! orders above a shared bottom tie everything inside the set. Odd `n`
//! cannot produce ties, and the score sum is fixed at `m(m-1)/2`, which
//! rules out `m` winners for even `m` and `m-1` winners for odd `m`.
//! Every other size is reached from two three-individual building blocks:
//!
//! * [`copeland_part1`]: odd `m'` alternatives, every score `(m'-1)/2`.
//! * [`copeland_part2`]: one extra alternative on top of a Part 1 block,
//!   leaving exactly `m'-1` winners among `m'+1` alternatives.
//!
//! Bottom alternatives and opposed pairs of individuals then pad to `(m, n)`.

use crate::choice::ChoiceSet;
use crate::error::{Error, Result};
use crate::ordering::Ordering;
use crate::profile::Profile;

use super::{append_bottom_alternative, check_dims, opposed_on_set, pad_with_inverse_pair};

/// Why no profile with odd `n` has exactly `k` Copeland winners, if so.
pub fn copeland_size_infeasibility(m: usize, k: usize) -> Option<&'static str> {
    if m % 2 == 0 && k == m {
        Some("m even: size m infeasible for odd n")
    } else if m % 2 == 1 && m > 1 && k == m - 1 {
        Some("m odd: size m-1 infeasible for odd n")
    } else {
        None
    }
}

/// Three individuals over an odd number `m` of alternatives with every
/// Copeland score equal to `(m-1)/2`.
///
/// Starts from the 3-cycle on `0, 1, 2` and adds pairs `(p, q) = (2t+1, 2t+2)`
/// for `t = 1, 2, ...`: `p` on top and `q` at the bottom of individual 1;
/// `q` on top of one of individuals 2 and 3 and `p` at the bottom of the
/// other (2 takes `q` when `t` is odd, 3 when `t` is even); finally `p` and
/// `q` go into the middle rank of the orderings they topped or bottomed
/// out of respectively.
pub fn copeland_part1(m: usize) -> Result<Profile> {
    if m % 2 == 0 {
        return Err(Error::InvalidParameters(format!(
            "the balanced block needs odd m, got {m}"
        )));
    }
    check_dims(m, 3)?;
    if m == 1 {
        return Profile::unanimous(Ordering::ascending(1), 3);
    }
    let mut rows = [vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    for t in 1..=(m - 3) / 2 {
        let (p, q) = (2 * t + 1, 2 * t + 2);
        let size = 2 * t + 3;
        rows[0].insert(0, p);
        rows[0].push(q);
        let (q_top, p_bottom) = if t % 2 == 1 { (1, 2) } else { (2, 1) };
        rows[q_top].insert(0, q);
        rows[p_bottom].push(p);
        let middle = (size + 1) / 2 - 1;
        rows[q_top].insert(middle, p);
        rows[p_bottom].insert(middle, q);
    }
    Profile::from_rows(&rows)
}

/// Adds alternative `m` to a three-individual profile: top of individual 1,
/// bottom of individual 2, just above the bottom of individual 3.
pub fn copeland_insert_top_element(u: &Profile) -> Result<Profile> {
    if u.n() != 3 {
        return Err(Error::InvalidParameters(format!(
            "expected 3 individuals, got {}",
            u.n()
        )));
    }
    let t = u.m();
    let mut rows: Vec<Vec<usize>> = u.orderings().iter().map(|o| o.ranks().to_vec()).collect();
    rows[0].insert(0, t);
    rows[1].push(t);
    let at = rows[2].len() - 1;
    rows[2].insert(at, t);
    Profile::from_rows(&rows)
}

/// Even `m >= 4`: `m` alternatives, three individuals, exactly `m-2`
/// Copeland winners.
pub fn copeland_part2(m: usize) -> Result<Profile> {
    if m % 2 == 1 || m < 4 {
        return Err(Error::InvalidParameters(format!(
            "the top-insertion block needs even m >= 4, got {m}"
        )));
    }
    copeland_insert_top_element(&copeland_part1(m - 1)?)
}

/// A profile with exactly `k` Copeland winners.
///
/// The winners are `{0, ..., k-1}` for even `n`; for odd `n` only the size
/// is guaranteed.
pub fn construct_copeland(m: usize, n: usize, k: usize) -> Result<Profile> {
    check_dims(m, n)?;
    if k == 0 || k > m {
        return Err(Error::InvalidParameters(format!(
            "k = {k} is outside [1, {m}]"
        )));
    }
    if n % 2 == 0 {
        let (first, second) = opposed_on_set(m, ChoiceSet::prefix(k));
        let mut u = Profile::new(m, vec![first, second])?;
        while u.n() < n {
            u = pad_with_inverse_pair(&u);
        }
        return Ok(u);
    }
    if n < 3 {
        return Err(Error::InvalidParameters(
            "odd n Copeland witness needs n >= 3".into(),
        ));
    }
    if let Some(why) = copeland_size_infeasibility(m, k) {
        return Err(Error::Infeasible(why.to_string()));
    }
    let mut u = if k % 2 == 1 {
        copeland_part1(k)?
    } else {
        copeland_part2(k + 2)?
    };
    while u.m() < m {
        u = append_bottom_alternative(&u)?;
    }
    while u.n() < n {
        u = pad_with_inverse_pair(&u);
    }
    Ok(u)
}
