use crate::choice::ChoiceSet;
use crate::error::Result;
use crate::profile::Profile;
use crate::rules::IndexVector;

use super::{check_dims, check_set, stacked};

pub fn gauge(b: &IndexVector) -> usize {
    b.gauge()
}

/// Profile and ballot sizes whose approval winners are exactly `s`, with a
/// small gauge: `ceil(k/n)` when `k >= n`, at most 2 when `k < n`.
///
/// Members of `s` are written as a token stream into the grid of
/// (rank, individual) cells, filling rank 1 across all individuals before
/// wrapping to rank 2 from individual 1, and so on. With `k >= n` each
/// member appears once; with `2 <= k < n`, writing `n = kq + r`, each
/// appears `q + 1` times; a singleton is simply everyone's top. Each
/// individual approves exactly their token cells, and the cells below are
/// filled with the remaining alternatives in ascending order.
pub fn construct_approval(m: usize, n: usize, s: ChoiceSet) -> Result<(Profile, IndexVector)> {
    check_dims(m, n)?;
    check_set(m, s)?;
    let k = s.len();
    let members = s.ids();
    let tokens: Vec<usize> = if k == 1 {
        vec![members[0]; n]
    } else if k >= n {
        members
    } else {
        let q = n / k;
        members
            .iter()
            .flat_map(|&x| std::iter::repeat_n(x, q + 1))
            .collect()
    };

    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (cell, &x) in tokens.iter().enumerate() {
        columns[cell % n].push(x);
    }
    let b: Vec<usize> = columns.iter().map(Vec::len).collect();
    let orderings = columns
        .into_iter()
        .map(|top| {
            let approved = ChoiceSet::from_ids(top.iter().copied());
            debug_assert_eq!(approved.len(), top.len(), "member repeated in one column");
            stacked(top, approved.complement(m).iter())
        })
        .collect();
    Ok((Profile::new(m, orderings)?, IndexVector::new(b, m)?))
}
