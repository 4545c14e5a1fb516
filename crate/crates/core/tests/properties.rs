use proptest::prelude::*;
use tauweave::weak_order::{all_reduced_words, Permutation, ReducedWord, WeakOrderLattice};
use tauweave::xi::{compatible, enumerate_xi, hom_vanishes, hom_vanishes_with, CriterionOptions};

fn permutation(max_order: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_order)
        .prop_flat_map(|m| Just((1..=m as u8).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn length_is_inversions(w in permutation(7)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.inversions());
        prop_assert_eq!(word.product(), w.clone());
        prop_assert_eq!(w.inverse().inversions(), w.inversions());
    }

    #[test]
    fn every_reduced_word_multiplies_back(w in permutation(5)) {
        for letters in all_reduced_words(&w) {
            prop_assert_eq!(letters.len(), w.length());
            prop_assert_eq!(ReducedWord::new(w.order(), letters).unwrap().product(), w.clone());
        }
    }

    #[test]
    fn left_descent_lowers_length(w in permutation(6), i in 1usize..6) {
        prop_assume!(i < w.order());
        let (v, delta) = w.left_multiply(i).unwrap();
        prop_assert_eq!(v.length() as i64 - w.length() as i64, delta as i64);
        prop_assert_eq!(w.has_left_descent(i), delta < 0);
    }

    #[test]
    fn order_is_antisymmetric(u in permutation(5), v in permutation(5)) {
        prop_assume!(u.order() == v.order());
        if u.leq(&v).unwrap() && v.leq(&u).unwrap() {
            prop_assert_eq!(u, v);
        }
    }

    #[test]
    fn join_is_least_upper_bound(u in permutation(5), v in permutation(5)) {
        prop_assume!(u.order() == v.order());
        let lat = WeakOrderLattice::new(u.order() - 1).unwrap();
        let j = lat.join(&[u.clone(), v.clone()]).unwrap();
        let m = lat.meet(&[u.clone(), v.clone()]).unwrap();
        prop_assert!(u.leq(&j).unwrap() && v.leq(&j).unwrap());
        prop_assert!(m.leq(&u).unwrap() && m.leq(&v).unwrap());
        for w in lat.nodes() {
            if u.leq(w).unwrap() && v.leq(w).unwrap() {
                prop_assert!(j.leq(w).unwrap());
            }
        }
    }

    #[test]
    fn criterion_readings_agree(n in 1usize..6, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let xs = enumerate_xi(n).unwrap();
        let (x, y) = (a.get(&xs), b.get(&xs));
        let direct = CriterionOptions { direct_mirror: true, ..CriterionOptions::default() };
        prop_assert_eq!(hom_vanishes(x, y).unwrap(), hom_vanishes_with(x, y, direct).unwrap());
        prop_assert_eq!(compatible(x, y).unwrap(), compatible(y, x).unwrap());
        prop_assert!(hom_vanishes(x, x).unwrap());
    }
}
