use proptest::prelude::*;

use scc_range::codec;
use scc_range::constructions::pad_with_inverse_pair;
use scc_range::rules;
use scc_range::{evaluate, majority_matrix, IndexVector, Ordering, Profile, Rule};

fn ordering(m: usize) -> impl Strategy<Value = Ordering> {
    Just((0..m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Ordering::new(v).unwrap())
}

fn profile() -> impl Strategy<Value = Profile> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(m, n)| {
        prop::collection::vec(ordering(m), n).prop_map(move |os| Profile::new(m, os).unwrap())
    })
}

fn profile_with_ballots() -> impl Strategy<Value = (Profile, IndexVector)> {
    profile().prop_flat_map(|u| {
        let m = u.m();
        prop::collection::vec(1..=m, u.n())
            .prop_map(move |b| (u.clone(), IndexVector::new(b, m).unwrap()))
    })
}

proptest! {
    #[test]
    fn codec_round_trip(u in profile()) {
        prop_assert_eq!(codec::parse(&codec::emit(&u)).unwrap(), u);
    }

    #[test]
    fn rules_are_anonymous_and_nonempty(
        (u, b) in profile_with_ballots(),
        seed in any::<u64>(),
    ) {
        let n = u.n();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.rotate_left((seed % n as u64) as usize);
        let v = u.permute_individuals(&sigma).unwrap();
        for rule in Rule::ALL {
            let base = evaluate(rule, &u, Some(&b)).unwrap();
            prop_assert!(!base.is_empty());
            prop_assert_eq!(evaluate(rule, &v, Some(&b.permute(&sigma))).unwrap(), base);
        }
    }

    #[test]
    fn rules_are_neutral((u, b) in profile_with_ballots(), shift in 0usize..16) {
        let m = u.m();
        let pi: Vec<usize> = (0..m).map(|x| (x + shift) % m).collect();
        let v = u.relabel_alternatives(&pi).unwrap();
        for rule in Rule::ALL {
            let base = evaluate(rule, &u, Some(&b)).unwrap();
            prop_assert_eq!(evaluate(rule, &v, Some(&b)).unwrap(), base.map(&pi));
        }
    }

    #[test]
    fn inverse_pair_keeps_margins(u in profile()) {
        let p = pad_with_inverse_pair(&u);
        prop_assert_eq!(p.n(), u.n() + 2);
        prop_assert_eq!(majority_matrix(&p).margins(), majority_matrix(&u).margins());
        prop_assert_eq!(rules::top_cycle(&p), rules::top_cycle(&u));
    }

    #[test]
    fn top_cycle_routes_agree(u in profile()) {
        prop_assert_eq!(rules::top_cycle(&u), rules::top_cycle_by_closure(&u));
        prop_assert!(rules::copeland(&u).is_subset(rules::top_cycle(&u)));
    }
}
