use crate::choice::ChoiceSet;
use crate::constructions::check_set;
use crate::error::{Error, Result};
use crate::ordering::all_orderings;

use super::enumerate::TupleSpace;

pub const MAX_GAUGE_M: usize = 4;
pub const MAX_GAUGE_N: usize = 4;

/// Smallest gauge `g` such that some profile and index vector with ballot
/// sizes at most `g` make `s` the approval outcome.
///
/// Searches multisets of (ordering, ballot size) pairs, one per individual,
/// for `g = 1, 2, ...`; approval ignores the order of individuals so
/// multisets cover every (profile, index vector) pair.
pub fn min_gauge(m: usize, n: usize, s: ChoiceSet, override_guards: bool) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters("m and n must be at least 1".into()));
    }
    check_set(m, s)?;
    if (m > MAX_GAUGE_M || n > MAX_GAUGE_N) && !override_guards {
        return Err(Error::GuardExceeded(format!(
            "min-gauge search is limited to m <= {MAX_GAUGE_M}, n <= {MAX_GAUGE_N}"
        )));
    }
    let orderings = all_orderings(m);
    for g in 1..=m {
        // Each item is the set a single individual approves.
        let items: Vec<u16> = orderings
            .iter()
            .flat_map(|o| (1..=g).map(move |b| o.top_k(b).expect("b <= m").mask()))
            .collect();
        let space = TupleSpace::new(items.len(), n, true)
            .ok_or_else(|| Error::GuardExceeded("search space overflows u64".into()))?;
        let mut t = space.unrank(0);
        let mut scores = vec![0u32; m];
        loop {
            scores.iter_mut().for_each(|c| *c = 0);
            for &i in &t {
                let mask = items[i];
                for (x, c) in scores.iter_mut().enumerate() {
                    *c += u32::from(mask >> x & 1);
                }
            }
            let best = *scores.iter().max().expect("m >= 1");
            let winners = ChoiceSet::from_ids((0..m).filter(|&x| scores[x] == best));
            if winners == s {
                return Ok(g);
            }
            if space.advance(&mut t).is_none() {
                break;
            }
        }
    }
    Err(Error::CheckFailed(format!(
        "no gauge up to m achieves {s}; approval with full ballots always should"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(min_gauge(4, 2, ChoiceSet::prefix(3), false).unwrap(), 2);
        assert_eq!(min_gauge(3, 3, ChoiceSet::prefix(1), false).unwrap(), 1);
        assert_eq!(min_gauge(3, 2, ChoiceSet::full(3), false).unwrap(), 2);
        assert!(matches!(
            min_gauge(5, 2, ChoiceSet::prefix(1), false),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn counting_lower_bound() {
        for m in 1..=4 {
            for n in 1..=3 {
                for mask in 1..(1u16 << m) {
                    let s = ChoiceSet::from_mask(mask);
                    let g = min_gauge(m, n, s, false).unwrap();
                    assert!(g >= s.len().div_ceil(n), "m={m} n={n} s={s}: {g}");
                }
            }
        }
    }
}
