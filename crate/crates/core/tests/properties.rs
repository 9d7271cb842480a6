use num_bigint::BigInt;
use proptest::prelude::*;
use wallcount::counting::{fbar_determinant, recursion_fbar};
use wallcount::genfun::{f_r_series, q_series_exp};
use wallcount::paths::{count_weakly_above, count_weakly_below, f_r_count, fbar_count, q_count};
use wallcount::tableaux::{bijection_counts, count_tableaux, YoungBuilding};
use wallcount::tutte::tutte_polynomial;
use wallcount::{LatticePath, Step};

fn path_strategy(max_len: usize) -> impl Strategy<Value = LatticePath> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|bits| LatticePath::new(bits.into_iter().map(|b| if b { Step::N } else { Step::E }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tutte_at_ones_counts_paths_below(p in path_strategy(14)) {
        let t = tutte_polynomial(&p).unwrap();
        prop_assert_eq!(t.eval_at_ones(), count_weakly_below(&p, p.endpoint()).unwrap());
    }

    #[test]
    fn below_and_above_swap_under_reflection(p in path_strategy(14)) {
        let q = p.reflected();
        prop_assert_eq!(
            count_weakly_below(&p, p.endpoint()).unwrap(),
            count_weakly_above(&q, q.endpoint()).unwrap()
        );
    }

    #[test]
    fn wall_tableaux_biject(m in 1usize..=7, mask in any::<u8>()) {
        let b = YoungBuilding::new(m, (1..=m).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        let c = bijection_counts(&b).unwrap();
        prop_assert!(c.agree(), "{:?}", c);
    }

    #[test]
    fn adding_walls_never_removes_tableaux(m in 1usize..=7, mask in any::<u8>(), extra in 1usize..=7) {
        let walls: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let fewer = YoungBuilding::new(m, walls.iter().copied()).unwrap();
        let more = YoungBuilding::new(m, walls.iter().copied().chain(std::iter::once(extra.min(m)))).unwrap();
        prop_assert!(count_tableaux(&more).unwrap() >= count_tableaux(&fewer).unwrap());
    }

    #[test]
    fn fr_series_matches_dp(k in 1usize..=4, l in 1usize..=4, r_seed in 0usize..4, n in 0usize..=4) {
        let r = 1 + r_seed % l;
        let s = f_r_series(k, l, r, n).unwrap().to_integers().unwrap();
        prop_assert_eq!(&s[n], &f_r_count(k, l, r, n).unwrap());
    }

    #[test]
    fn q_series_matches_dp(k in 1usize..=4, l in 1usize..=4, n in 0usize..=4) {
        let s = q_series_exp(k, l, n).unwrap().to_integers().unwrap();
        prop_assert_eq!(&s[n], &q_count(k, l, n).unwrap());
    }

    #[test]
    fn fbar_counting_methods_agree(m in 2usize..=4, n in 0usize..=3) {
        let dp = fbar_count(m, n).unwrap();
        prop_assert_eq!(&fbar_determinant(m, n).unwrap(), &dp);
        prop_assert_eq!(&recursion_fbar(m, n).unwrap(), &dp);
        prop_assert!(dp > BigInt::from(0));
    }
}
