use num_bigint::{BigInt, BigUint};

use spin_core::cyclotomic::{decompositions, model_matrix, unique_spin_iff_quotient_genus_zero, Decomposition};
use spin_core::{count_invariant, invariant_spins, Pairing};

fn all_small() -> Vec<Decomposition> {
    (1..=6u32).flat_map(|g| (1..=420u64).flat_map(move |n| decompositions(n, g))).collect()
}

#[test]
fn nothing_beyond_the_search_window() {
    for g in 1..=6u32 {
        for n in 421..=2520u64 {
            assert!(decompositions(n, g).is_empty(), "n={n} g={g}");
        }
    }
}

#[test]
fn model_matrices_have_exact_order() {
    for dec in all_small() {
        let a = model_matrix::<BigInt>(&dec);
        assert_eq!(a.matrix().multiplicative_order(dec.order()), Some(dec.order()), "{dec}");
    }
}

#[test]
fn model_counts_with_standard_pairing() {
    for dec in all_small() {
        let a = model_matrix::<BigInt>(&dec);
        let p = Pairing::standard(dec.genus()).unwrap();
        let set = invariant_spins(&a, &p).unwrap();
        let count = count_invariant(&a, &p).unwrap();
        if let Some(h) = set.nullity() {
            assert_eq!(count, BigUint::from(1u8) << h);
        }
        let two_power = |d: u64| d > 1 && d.is_power_of_two();
        if dec.parts().iter().all(|&(d, _)| d > 1 && !two_power(d)) {
            assert_eq!(count, BigUint::from(1u8), "{dec}");
        }
    }
}

#[test]
fn odd_order_uniqueness_matches_quotient_genus() {
    for dec in all_small().into_iter().filter(|d| d.order() % 2 == 1) {
        let check = unique_spin_iff_quotient_genus_zero(&dec).unwrap();
        assert_eq!(check.unique, check.quotient_genus_eigen == 0, "{dec}");
    }
}

#[test]
fn examples() {
    let seven = decompositions(7, 3);
    assert_eq!(seven.len(), 1);
    assert_eq!(seven[0].to_string(), "{(7,1)}");
    assert!(unique_spin_iff_quotient_genus_zero(&seven[0]).unwrap().unique);
    let two: Vec<String> = decompositions(2, 2).iter().map(ToString::to_string).collect();
    let mut want = vec!["{(2,4)}", "{(1,2),(2,2)}", "{(1,1),(2,3)}", "{(1,3),(2,1)}"];
    want.sort();
    let mut got = two.clone();
    got.sort();
    assert_eq!(got, want);
}
