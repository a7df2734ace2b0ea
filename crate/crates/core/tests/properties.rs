use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Euclid;
use proptest::prelude::*;

use spin_core::gf2::{nullspace, rank, solve_affine};
use spin_core::surface::{coordinate_map, random_conjugate_pair, random_symplectic};
use spin_core::{
    count_invariant, group_invariant_spins, invariant_spins, is_symplectic_mod2, quadratic_fixed_count, v_vector,
    BitMatrix, BitVector, HomologyAction, Matrix, Pairing,
};

fn bit_matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
            BitMatrix::from_rows(c, rows.iter().map(|b| BitVector::from_bools(b)).collect()).unwrap()
        })
    })
}

fn system(max: usize) -> impl Strategy<Value = (BitMatrix, BitVector)> {
    bit_matrix(max).prop_flat_map(|m| {
        let rows = m.rows();
        (Just(m), prop::collection::vec(any::<bool>(), rows).prop_map(|b| BitVector::from_bools(&b)))
    })
}

proptest! {
    #[test]
    fn rank_of_transpose(m in bit_matrix(64)) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn solutions_round_trip((m, b) in system(12)) {
        let set = solve_affine(&m, &b).unwrap();
        if set.is_empty() {
            prop_assert_eq!(set.cardinality(), BigUint::from(0u8));
        } else {
            let h = m.cols() - rank(&m);
            prop_assert_eq!(set.cardinality(), BigUint::from(1u8) << h);
            let all = set.elements();
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(distinct.len(), 1usize << h);
            for x in &all {
                prop_assert_eq!(&m.mul_vec(x).unwrap(), &b);
                prop_assert!(set.contains(x));
            }
        }
    }

    #[test]
    fn nullspace_is_independent(m in bit_matrix(40)) {
        let basis = nullspace(&m);
        prop_assert_eq!(basis.len(), m.cols() - rank(&m));
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        if !basis.is_empty() {
            let stacked = BitMatrix::from_rows(m.cols(), basis.clone()).unwrap();
            prop_assert_eq!(rank(&stacked), basis.len());
        }
    }

    #[test]
    fn counts_are_zero_or_powers_of_two(
        g in 1u32..=3,
        entries in prop::collection::vec(-3i64..=3, 36),
    ) {
        let n = 2 * g as usize;
        let rows: Vec<Vec<BigInt>> = (0..n).map(|r| entries[r * n..(r + 1) * n].iter().map(|&v| BigInt::from(v)).collect()).collect();
        let a = HomologyAction::new(g, Matrix::from_rows(rows).unwrap()).unwrap();
        let p = Pairing::standard(g).unwrap();
        let count = count_invariant(&a, &p).unwrap();
        let valid = (0..=2 * g).any(|h| count == BigUint::from(1u8) << h);
        prop_assert!(count == BigUint::from(0u8) || valid);
    }

    #[test]
    fn oracle_agrees_on_symplectic_inputs(g in 1u32..=6, seed in any::<u64>(), steps in 0usize..40) {
        let a = random_symplectic::<BigInt>(g, seed, steps).unwrap();
        let p = Pairing::standard(g).unwrap();
        prop_assert!(is_symplectic_mod2(&a, &p));
        prop_assert_eq!(count_invariant(&a, &p).unwrap(), BigUint::from(quadratic_fixed_count(&a, &p).unwrap()));
    }

    #[test]
    fn oracle_agrees_under_random_pairings(g in 1u32..=4, seed in any::<u64>(), steps in 1usize..30) {
        let (a, p) = random_conjugate_pair::<BigInt>(g, seed, steps).unwrap();
        prop_assert_eq!(count_invariant(&a, &p).unwrap(), BigUint::from(quadratic_fixed_count(&a, &p).unwrap()));
    }

    #[test]
    fn negative_identity_has_zero_shift(g in 1u32..=4, seed in any::<u64>(), steps in 0usize..30) {
        let (_, p) = random_conjugate_pair::<BigInt>(g, seed, steps).unwrap();
        let j = HomologyAction::negative_identity(g).unwrap();
        prop_assert!(v_vector(&j, &p).unwrap().is_zero());
    }

    #[test]
    fn full_count_iff_trivial_affine_map(g in 1u32..=3, seed in any::<u64>(), steps in 0usize..20) {
        let (a, p) = random_conjugate_pair::<BigInt>(g, seed, steps).unwrap();
        let (m, v) = coordinate_map(&a, &p).unwrap();
        let trivial = rank(&m) == 0 && v.is_zero();
        let full = count_invariant(&a, &p).unwrap() == BigUint::from(1u8) << (2 * g);
        prop_assert_eq!(trivial, full);
    }

    #[test]
    fn singleton_and_negative_identity_groups(g in 1u32..=3, seed in any::<u64>(), steps in 0usize..20) {
        let (a, p) = random_conjugate_pair::<BigInt>(g, seed, steps).unwrap();
        let alone = invariant_spins(&a, &p).unwrap().sorted_elements();
        prop_assert_eq!(&group_invariant_spins(&[a.clone()], &p).unwrap().sorted_elements(), &alone);
        let j = HomologyAction::negative_identity(g).unwrap();
        prop_assert_eq!(&group_invariant_spins(&[j, a], &p).unwrap().sorted_elements(), &alone);
    }
}

/// Closure of `gens` with entries reduced mod 2. The pullback depends only on
/// `Ā`, so this finite set carries every element's action.
fn close_mod2(gens: &[HomologyAction], cap: usize) -> Vec<HomologyAction> {
    let reduce = |a: &HomologyAction| {
        let rows = a
            .matrix()
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.rem_euclid(&BigInt::from(2))).collect())
            .collect();
        HomologyAction::new(a.genus(), Matrix::from_rows(rows).unwrap()).unwrap()
    };
    let id = HomologyAction::identity(gens[0].genus()).unwrap();
    let mut seen: BTreeSet<Vec<Vec<BigInt>>> = BTreeSet::from([id.matrix().to_rows()]);
    let mut frontier = vec![id];
    let mut all = Vec::new();
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = reduce(&s.compose(&x).unwrap());
            if seen.insert(y.matrix().to_rows()) {
                assert!(seen.len() <= cap, "group too large");
                frontier.push(y);
            }
        }
        all.push(x);
    }
    all
}

#[test]
fn group_solution_equals_pointwise_intersection() {
    let k = spin_core::fixtures::klein_data().unwrap();
    let gens = [k.r.clone(), k.s.clone(), k.t.clone()];
    let elements = close_mod2(&gens, 100_000);
    assert_eq!(elements.len(), 168);
    let stacked: BTreeSet<_> = group_invariant_spins(&gens, &k.pairing).unwrap().elements().into_iter().collect();
    let mut pointwise: Option<BTreeSet<BitVector>> = None;
    for a in &elements {
        let fixed: BTreeSet<_> = invariant_spins(a, &k.pairing).unwrap().elements().into_iter().collect();
        pointwise = Some(match pointwise {
            None => fixed,
            Some(acc) => acc.intersection(&fixed).cloned().collect(),
        });
    }
    assert_eq!(pointwise.unwrap(), stacked);

    for seed in 0..6u64 {
        let p = Pairing::standard(2).unwrap();
        let gens = [random_symplectic::<BigInt>(2, seed, 3).unwrap(), random_symplectic::<BigInt>(2, seed + 100, 3).unwrap()];
        let elements = close_mod2(&gens, 720);
        let stacked: BTreeSet<_> = group_invariant_spins(&gens, &p).unwrap().elements().into_iter().collect();
        let mut pointwise: BTreeSet<BitVector> = (0..16u64).map(|m| BitVector::from_mask(4, m)).collect();
        for a in &elements {
            let fixed: BTreeSet<_> = invariant_spins(a, &p).unwrap().elements().into_iter().collect();
            pointwise = pointwise.intersection(&fixed).cloned().collect();
        }
        assert_eq!(pointwise, stacked, "seed {seed}");
    }
}
