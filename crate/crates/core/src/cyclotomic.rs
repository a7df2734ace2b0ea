//! Cyclotomic polynomials and the rational canonical form of a finite-order
//! homology action.
//!
//! An order-`n` automorphism of a genus-`g` surface acts on `H_1` by a matrix
//! that is similar over `Q` to a direct sum `e_1 C_{d_1} ⊕ ... ⊕ e_r C_{d_r}`,
//! where `C_d` is the companion matrix of `Φ_d`, the `d_i` are distinct divisors
//! of `n` with `lcm = n`, and `Σ e_i φ(d_i) = 2g`. A [`Decomposition`] records
//! that data. The matrix built by [`model_matrix`] is only *rationally* similar
//! to a real automorphism action: use it for similarity invariants (order,
//! determinant parity, eigenspace dimensions), never for its entries.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::surface::Action;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, k) in factorize(n) {
        let current = ds.clone();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            ds.extend(current.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// Euler's totient. Panics on `d = 0`.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1, "euler_phi is defined for d >= 1");
    factorize(d)
        .into_iter()
        .fold(d, |acc, (p, _)| acc / p * (p - 1))
}

/// `Φ_d(1)`: 0 for `d = 1`, `p` when `d` is a power of the prime `p`, else 1.
/// Panics on `d = 0`.
pub fn phi_at_one(d: u64) -> u64 {
    assert!(d >= 1, "phi_at_one is defined for d >= 1");
    match factorize(d).as_slice() {
        [] => 0,
        [(p, _)] => *p,
        _ => 1,
    }
}

/// `Φ_d`, by exact division of `x^d - 1` by the lower cyclotomic factors.
/// Panics on `d = 0`.
pub fn cyclotomic_poly<T: Scalar>(d: u64) -> Poly<T> {
    assert!(d >= 1, "cyclotomic_poly is defined for d >= 1");
    let mut cache = HashMap::new();
    cyclotomic_cached(d, &mut cache)
}

fn cyclotomic_cached<T: Scalar>(d: u64, cache: &mut HashMap<u64, Poly<T>>) -> Poly<T> {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let mut denom = Poly::one();
    for e in divisors(d) {
        if e < d {
            denom = denom.mul(&cyclotomic_cached(e, cache));
        }
    }
    let phi = Poly::x_pow_minus_one(d as usize)
        .div_exact(&denom)
        .expect("x^d - 1 is divisible by the proper cyclotomic factors");
    cache.insert(d, phi.clone());
    phi
}

/// Companion matrix: ones on the superdiagonal, last row `-a_0, ..., -a_{k-1}`.
pub fn companion_matrix<T: Scalar>(p: &Poly<T>) -> Result<Matrix<T>> {
    let Some(k) = p.degree().filter(|&k| k >= 1) else {
        return Err(Error::InvalidPolynomial("companion matrix needs degree >= 1".into()));
    };
    if !p.is_monic() {
        return Err(Error::InvalidPolynomial(format!("{p} is not monic")));
    }
    let mut m = Matrix::zeros(k, k);
    for i in 0..k - 1 {
        m.set(i, i + 1, T::one());
    }
    for (j, a) in p.coeffs()[..k].iter().enumerate() {
        m.set(k - 1, j, -a.clone());
    }
    Ok(m)
}

/// Divisor/multiplicity data `{(d_i, e_i)}` of a rational canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Decomposition {
    order: u64,
    genus: u32,
    parts: Vec<(u64, u32)>,
}

impl Decomposition {
    /// Validates every structural constraint; `parts` may be given in any order.
    pub fn new(order: u64, genus: u32, mut parts: Vec<(u64, u32)>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if order == 0 || genus == 0 {
            return bad("order and genus must be positive".into());
        }
        if parts.is_empty() {
            return bad("no parts".into());
        }
        parts.sort_unstable();
        if parts.windows(2).any(|w| w[0].0 == w[1].0) {
            return bad("divisors must be distinct".into());
        }
        let mut lcm = 1u64;
        let mut dim = 0u64;
        for &(d, e) in &parts {
            if d == 0 || order % d != 0 {
                return bad(format!("{d} does not divide {order}"));
            }
            if e == 0 {
                return bad(format!("multiplicity of {d} is zero"));
            }
            lcm = lcm.lcm(&d);
            dim += u64::from(e) * euler_phi(d);
        }
        if lcm != order {
            return bad(format!("lcm of divisors is {lcm}, not {order}"));
        }
        if dim != 2 * u64::from(genus) {
            return bad(format!("total size {dim} differs from 2g = {}", 2 * genus));
        }
        Ok(Self { order, genus, parts })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `(d_i, e_i)` with `d_1 < d_2 < ...`.
    pub fn parts(&self) -> &[(u64, u32)] {
        &self.parts
    }

    /// Multiplicity of the eigenvalue 1 block (`e_1` when `d_1 = 1`).
    pub fn fixed_multiplicity(&self) -> u32 {
        match self.parts.first() {
            Some(&(1, e)) => e,
            _ => 0,
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|(d, e)| format!("({d},{e})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All admissible decompositions for order `n` on genus `g`, sorted by parts.
pub fn decompositions(n: u64, g: u32) -> Vec<Decomposition> {
    if n == 0 || g == 0 {
        return Vec::new();
    }
    let target = 2 * u64::from(g);
    let candidates: Vec<(u64, u64)> = divisors(n)
        .into_iter()
        .map(|d| (d, euler_phi(d)))
        .filter(|&(_, phi)| phi <= target)
        .collect();
    let mut out = Vec::new();
    let mut parts = Vec::new();
    search(&candidates, 0, target, &mut parts, &mut |parts| {
        let lcm = parts.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d));
        if lcm == n {
            out.push(Decomposition {
                order: n,
                genus: g,
                parts: parts.to_vec(),
            });
        }
    });
    out.sort();
    out
}

fn search(
    candidates: &[(u64, u64)],
    idx: usize,
    remaining: u64,
    parts: &mut Vec<(u64, u32)>,
    emit: &mut impl FnMut(&[(u64, u32)]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    let Some(&(d, phi)) = candidates.get(idx) else {
        return;
    };
    search(candidates, idx + 1, remaining, parts, emit);
    let mut e = 1u32;
    while u64::from(e) * phi <= remaining {
        parts.push((d, e));
        search(candidates, idx + 1, remaining - u64::from(e) * phi, parts, emit);
        parts.pop();
        e += 1;
    }
}

/// `e_1 C_{d_1} ⊕ ... ⊕ e_r C_{d_r}` as a homology action on genus `g`.
pub fn model_matrix<T: Scalar>(dec: &Decomposition) -> Action<T> {
    let mut blocks = Vec::new();
    for &(d, e) in &dec.parts {
        let c = companion_matrix(&cyclotomic_poly::<T>(d)).expect("cyclotomic polynomials are monic");
        blocks.extend(std::iter::repeat_n(c, e as usize));
    }
    Action::new(dec.genus, Matrix::direct_sum(&blocks)).expect("decomposition fixes the size to 2g")
}

/// Parity of `det(I - A^T) = Π Φ_{d_i}(1)^{e_i}`, from the closed form of `Φ_d(1)`.
pub fn shifted_det_is_odd(dec: &Decomposition) -> bool {
    dec.parts
        .iter()
        .fold(1u64, |acc, &(d, e)| acc * (phi_at_one(d) % 2).pow(e))
        % 2
        == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientGenusCheck {
    /// Exactly one invariant spin structure.
    pub unique: bool,
    /// Genus of the orbit surface as read off the eigenvalue-1 block: `e_1 / 2`.
    pub quotient_genus_eigen: u32,
}

/// For odd order: a unique invariant structure exactly when the orbit surface
/// has genus zero.
pub fn unique_spin_iff_quotient_genus_zero(dec: &Decomposition) -> Result<QuotientGenusCheck> {
    if dec.order % 2 == 0 {
        return Err(Error::EvenOrder(dec.order));
    }
    let e1 = dec.fixed_multiplicity();
    if e1 % 2 == 1 {
        return Err(Error::OddFixedMultiplicity(e1));
    }
    let check = QuotientGenusCheck {
        unique: shifted_det_is_odd(dec),
        quotient_genus_eigen: e1 / 2,
    };
    debug_assert_eq!(check.unique, check.quotient_genus_eigen == 0);
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn dec(n: u64, g: u32, parts: &[(u64, u32)]) -> Decomposition {
        Decomposition::new(n, g, parts.to_vec()).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly::<i64>(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly::<i64>(7), Poly::from_i64(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly::<i64>(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly::<BigInt>(4).to_string(), "x^2 + 1");
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_poly::<BigInt>(105);
        assert_eq!(p.degree(), Some(48));
        assert!(p.coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn phi_at_one_cases() {
        assert_eq!(phi_at_one(1), 0);
        assert_eq!(phi_at_one(49), 7);
        assert_eq!(phi_at_one(6), 1);
        assert_eq!(phi_at_one(8), 2);
    }

    #[test]
    fn totient() {
        // Units counted directly.
        for d in 1..=60u64 {
            let units = (1..=d).filter(|k| k.gcd(&d) == 1).count() as u64;
            assert_eq!(euler_phi(d), units, "d={d}");
        }
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn companion_layout() {
        let c1 = companion_matrix(&cyclotomic_poly::<i64>(1)).unwrap();
        assert_eq!(c1.to_rows(), vec![vec![1]]);
        let c4 = companion_matrix(&cyclotomic_poly::<i64>(4)).unwrap();
        assert_eq!(c4.to_rows(), vec![vec![0, 1], vec![-1, 0]]);
        let c7 = companion_matrix(&cyclotomic_poly::<i64>(7)).unwrap();
        assert_eq!(c7.row(5), &[-1; 6]);
        assert_eq!(*c7.get(0, 1), 1);
        assert!(companion_matrix(&Poly::<i64>::from_i64(&[1, 2])).is_err());
        assert!(companion_matrix(&Poly::<i64>::from_i64(&[3])).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompositions(7, 3), vec![dec(7, 3, &[(7, 1)])]);
        assert_eq!(decompositions(1, 4), vec![dec(1, 4, &[(1, 8)])]);
        let two = decompositions(2, 2);
        assert_eq!(
            two,
            vec![
                dec(2, 2, &[(1, 1), (2, 3)]),
                dec(2, 2, &[(1, 2), (2, 2)]),
                dec(2, 2, &[(1, 3), (2, 1)]),
                dec(2, 2, &[(2, 4)]),
            ]
        );
    }

    #[test]
    fn decomposition_validation() {
        assert!(Decomposition::new(6, 1, vec![(2, 2)]).is_err()); // lcm
        assert!(Decomposition::new(7, 3, vec![(7, 2)]).is_err()); // size
        assert!(Decomposition::new(4, 1, vec![(3, 1)]).is_err()); // divisibility
        assert!(Decomposition::new(2, 1, vec![(2, 1), (2, 1)]).is_err());
        assert_eq!(dec(15, 3, &[(5, 1), (3, 1)]).parts(), &[(3, 1), (5, 1)]);
    }

    #[test]
    fn model_matrices() {
        let id = model_matrix::<i64>(&dec(1, 2, &[(1, 4)]));
        assert!(id.matrix().is_identity());
        let seven = model_matrix::<i64>(&dec(7, 3, &[(7, 1)]));
        assert_eq!(seven.matrix().multiplicative_order(20), Some(7));
        let minus = model_matrix::<i64>(&dec(2, 2, &[(2, 4)]));
        assert_eq!(*minus.matrix(), Matrix::<i64>::identity(4).neg());
    }

    #[test]
    fn det_parity() {
        assert!(shifted_det_is_odd(&dec(7, 3, &[(7, 1)])));
        assert!(!shifted_det_is_odd(&dec(1, 3, &[(1, 6)])));
        assert!(!shifted_det_is_odd(&dec(2, 2, &[(2, 4)])));
    }

    #[test]
    fn quotient_genus() {
        let k = unique_spin_iff_quotient_genus_zero(&dec(7, 3, &[(7, 1)])).unwrap();
        assert_eq!(k, QuotientGenusCheck { unique: true, quotient_genus_eigen: 0 });
        let five = unique_spin_iff_quotient_genus_zero(&dec(5, 3, &[(1, 2), (5, 1)])).unwrap();
        assert_eq!(five, QuotientGenusCheck { unique: false, quotient_genus_eigen: 1 });
        let fifteen = unique_spin_iff_quotient_genus_zero(&dec(15, 3, &[(3, 1), (5, 1)])).unwrap();
        assert_eq!(fifteen, QuotientGenusCheck { unique: true, quotient_genus_eigen: 0 });
        assert_eq!(
            unique_spin_iff_quotient_genus_zero(&dec(2, 2, &[(2, 4)])),
            Err(Error::EvenOrder(2))
        );
        // For odd order every φ(d) with d > 1 is even, so e_1 is even and the
        // odd-multiplicity rejection never fires on a validated decomposition.
        for n in (1..40).step_by(2) {
            for g in 1..=4 {
                for d in decompositions(n, g) {
                    assert!(unique_spin_iff_quotient_genus_zero(&d).is_ok(), "{d}");
                }
            }
        }
    }
}
