//! Top cycle: maximal elements of the transitive closure of the weak
//! majority relation.
//!
//! The primary route condenses the complete weak-majority digraph into
//! strongly connected components and returns the unique source component.
//! [`top_cycle_by_closure`] computes the transitive closure directly and is
//! kept as an independent cross-check.

use crate::choice::ChoiceSet;
use crate::majority::MajorityMatrix;
use crate::profile::Profile;

pub fn top_cycle(u: &Profile) -> ChoiceSet {
    top_cycle_of(&MajorityMatrix::new(u))
}

pub fn top_cycle_of(mm: &MajorityMatrix) -> ChoiceSet {
    let m = mm.m();
    // out[x]: alternatives y with x weakly beating y.
    let out: Vec<u16> = (0..m)
        .map(|x| {
            (0..m)
                .filter(|&y| y != x && mm.weakly_beats(x, y))
                .fold(0u16, |acc, y| acc | (1 << y))
        })
        .collect();
    let comp = tarjan(&out);
    let count = comp.iter().copied().max().map_or(0, |c| c + 1);

    // A component is a source when no edge enters it from another component.
    let mut has_incoming = vec![false; count];
    for x in 0..m {
        for y in bits(out[x]) {
            if comp[x] != comp[y] {
                has_incoming[comp[y]] = true;
            }
        }
    }
    let sources: Vec<usize> = (0..count).filter(|&c| !has_incoming[c]).collect();
    debug_assert_eq!(sources.len(), 1, "weak majority digraph is complete");
    ChoiceSet::from_ids((0..m).filter(|&x| comp[x] == sources[0]))
}

/// Direct route: Warshall closure of the weak majority relation, then the
/// alternatives related to every other alternative.
pub fn top_cycle_by_closure(u: &Profile) -> ChoiceSet {
    let mm = MajorityMatrix::new(u);
    let m = mm.m();
    let mut reach = vec![vec![false; m]; m];
    for (x, row) in reach.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = x == y || mm.weakly_beats(x, y);
        }
    }
    for k in 0..m {
        for x in 0..m {
            if reach[x][k] {
                for y in 0..m {
                    if reach[k][y] {
                        reach[x][y] = true;
                    }
                }
            }
        }
    }
    ChoiceSet::from_ids((0..m).filter(|&x| reach[x].iter().all(|&r| r)))
}

fn bits(mask: u16) -> impl Iterator<Item = usize> {
    (0..16).filter(move |&b| mask & (1 << b) != 0)
}

/// Component index per vertex, for a digraph given as adjacency bitmasks.
fn tarjan(out: &[u16]) -> Vec<usize> {
    struct State<'a> {
        out: &'a [u16],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comp: Vec<usize>,
        next_index: usize,
        next_comp: usize,
    }

    fn visit(s: &mut State, v: usize) {
        s.index[v] = Some(s.next_index);
        s.low[v] = s.next_index;
        s.next_index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for w in bits(s.out[v]) {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            loop {
                let w = s.stack.pop().expect("non-empty stack");
                s.on_stack[w] = false;
                s.comp[w] = s.next_comp;
                if w == v {
                    break;
                }
            }
            s.next_comp += 1;
        }
    }

    let m = out.len();
    let mut s = State {
        out,
        index: vec![None; m],
        low: vec![0; m],
        on_stack: vec![false; m],
        stack: Vec::with_capacity(m),
        comp: vec![0; m],
        next_index: 0,
        next_comp: 0,
    };
    for v in 0..m {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{all_orderings, Ordering};

    #[test]
    fn tarjan_on_small_graphs() {
        // 0 -> 1 -> 2 -> 0, 3 -> 0
        let out = [0b0010, 0b0100, 0b0001, 0b0001];
        let comp = tarjan(&out);
        assert_eq!(comp[0], comp[1]);
        assert_eq!(comp[1], comp[2]);
        assert_ne!(comp[3], comp[0]);
    }

    #[test]
    fn paradox_is_one_cycle() {
        let u = Profile::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap();
        assert_eq!(top_cycle(&u), ChoiceSet::full(3));
    }

    #[test]
    fn condorcet_winner_alone() {
        let u = Profile::unanimous(Ordering::new(vec![2, 0, 1]).unwrap(), 3).unwrap();
        assert_eq!(top_cycle(&u).ids(), vec![2]);
    }

    #[test]
    fn routes_agree_on_all_three_voter_profiles_m3() {
        let all = all_orderings(3);
        for a in &all {
            for b in &all {
                for c in &all {
                    let u = Profile::new(3, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    assert_eq!(top_cycle(&u), top_cycle_by_closure(&u));
                }
            }
        }
    }
}
