//! Seeded generators of integer symplectic matrices, for tests and demos.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Action, IntersectionForm};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Product of `steps` random generators of `Sp(2g, Z)` for the standard pairing:
/// transvections `x ↦ x ± <x, v> v` along `v = e_k` or `v = e_k ± e_l`, and
/// the block swap `e_i ↦ e_{i+g}, e_{i+g} ↦ -e_i`.
pub fn random_symplectic<T: Scalar>(genus: u32, seed: u64, steps: usize) -> Result<Action<T>> {
    let pairing = IntersectionForm::<i64>::standard(genus)?;
    let n = 2 * genus as usize;
    let g = genus as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = Matrix::<T>::identity(n);
    for _ in 0..steps {
        let gen = if rng.gen_ratio(1, 8) {
            let mut m = Matrix::<T>::zeros(n, n);
            for i in 0..g {
                m.set(i + g, i, T::one());
                m.set(i, i + g, -T::one());
            }
            m
        } else {
            let mut v = vec![0i64; n];
            let k = rng.gen_range(0..n);
            v[k] = 1;
            if n > 1 && rng.gen_bool(0.5) {
                let l = (k + rng.gen_range(1..n)) % n;
                v[l] = if rng.gen_bool(0.5) { 1 } else { -1 };
            }
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            transvection(&pairing, &v, sign)
        };
        acc = gen.mul(&acc)?;
    }
    Action::new(genus, acc)
}

fn transvection<T: Scalar>(pairing: &IntersectionForm<i64>, v: &[i64], sign: i64) -> Matrix<T> {
    let n = v.len();
    let form = pairing.form();
    let mut m = Matrix::<T>::identity(n);
    for k in 0..n {
        let pk: i64 = (0..n).map(|l| form.get(k, l) * v[l]).sum();
        if pk == 0 {
            continue;
        }
        for (j, &vj) in v.iter().enumerate() {
            let add = T::from_i64_exact(sign * pk * vj);
            let cur = m.get(j, k).clone();
            m.set(j, k, cur + add);
        }
    }
    m
}

/// A random unimodular `U` together with `U^{-1}`, built from `steps`
/// elementary row additions.
pub fn random_unimodular<T: Scalar>(n: usize, seed: u64, steps: usize) -> (Matrix<T>, Matrix<T>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = Matrix::<T>::identity(n);
    let mut inv = Matrix::<T>::identity(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // u <- E u with E = I + c E_ij; inv <- inv E^{-1}.
        for col in 0..n {
            let add = u.get(j, col).clone() * T::from_i64_exact(c);
            let cur = u.get(i, col).clone();
            u.set(i, col, cur + add);
        }
        for row in 0..n {
            let sub = inv.get(row, i).clone() * T::from_i64_exact(c);
            let cur = inv.get(row, j).clone();
            inv.set(row, j, cur - sub);
        }
    }
    (u, inv)
}

/// A random symplectic action expressed in a random non-symplectic basis:
/// `A = U^{-1} M U` with pairing `U^T J U`, so `A^T P A = P` holds exactly.
pub fn random_conjugate_pair<T: Scalar>(
    genus: u32,
    seed: u64,
    steps: usize,
) -> Result<(Action<T>, IntersectionForm<T>)> {
    let m = random_symplectic::<T>(genus, seed, steps)?;
    let n = 2 * genus as usize;
    let (u, inv) = random_unimodular::<T>(n, seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xA5A5, steps);
    let std = IntersectionForm::<T>::standard(genus)?;
    let form = u.transpose().mul(std.form())?.mul(&u)?;
    let a = inv.mul(m.matrix())?.mul(&u)?;
    Ok((Action::new(genus, a)?, IntersectionForm::new(genus, form)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::is_symplectic_mod2;
    use num_bigint::BigInt;

    #[test]
    fn zero_steps_is_identity() {
        let a = random_symplectic::<BigInt>(3, 42, 0).unwrap();
        assert!(a.matrix().is_identity());
    }

    #[test]
    fn outputs_are_integrally_symplectic() {
        for g in 1..=3 {
            let p = IntersectionForm::<BigInt>::standard(g).unwrap();
            for seed in 0..20 {
                let a = random_symplectic::<BigInt>(g, seed, 25).unwrap();
                let lhs = a.matrix().transpose().mul(p.form()).unwrap().mul(a.matrix()).unwrap();
                assert_eq!(&lhs, p.form());
                assert!(is_symplectic_mod2(&a, &p));
            }
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let a = random_symplectic::<i64>(2, 7, 30).unwrap();
        let b = random_symplectic::<i64>(2, 7, 30).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unimodular_inverse() {
        let (u, inv) = random_unimodular::<BigInt>(6, 3, 40);
        assert!(u.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&u).unwrap().is_identity());
    }

    #[test]
    fn conjugate_pair_preserves_form() {
        for seed in 0..10 {
            let (a, p) = random_conjugate_pair::<BigInt>(2, seed, 20).unwrap();
            let lhs = a.matrix().transpose().mul(p.form()).unwrap().mul(a.matrix()).unwrap();
            assert_eq!(&lhs, p.form());
        }
    }
}
