//! Action of a surface automorphism on spin structures.
//!
//! Conventions, fixed throughout the crate:
//!
//! * `e_1, ..., e_2g` is a basis of integer first homology (not necessarily
//!   symplectic). The pairing is the integer matrix `P[i][j] = <e_i, e_j>`.
//! * The homology matrix `A` has the images of basis vectors as **columns**:
//!   `f_*(e_i) = sum_j A[j][i] e_j`.
//! * A spin structure is recorded by its coordinates `x in GF(2)^2g` relative to
//!   the dual basis and the fixed base structure. Pulling back by `f` sends
//!   `x` to `Ā^T x + V̄`, where `Ā` is `A` mod 2 and `V` is the correction vector
//!   `v_i = sum_{j1 < j2} A[j1][i] A[j2][i] P[j1][j2]`.
//!
//! Getting the transpose wrong here silently produces plausible but wrong
//! answers, so every public entry point goes through [`coordinate_map`].

mod oracle;
mod random;

pub use oracle::quadratic_fixed_count;
pub use random::{random_conjugate_pair, random_symplectic, random_unimodular};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf2::{self, AffineSolutionSet, BitMatrix, BitVector};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Largest genus accepted anywhere in this module (`2g <= 1024`).
pub const MAX_GENUS: u32 = 512;

fn check_genus(genus: u32) -> Result<usize> {
    if genus == 0 {
        return Err(Error::input("genus", "must be at least 1"));
    }
    if genus > MAX_GENUS {
        return Err(Error::BoundExceeded {
            what: "genus",
            limit: MAX_GENUS as usize,
            found: genus as usize,
        });
    }
    Ok(2 * genus as usize)
}

/// An antisymmetric integer pairing on `Z^2g` whose mod-2 reduction is
/// nondegenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm<T> {
    genus: u32,
    form: Matrix<T>,
}

impl<T: Scalar> IntersectionForm<T> {
    pub fn new(genus: u32, form: Matrix<T>) -> Result<Self> {
        let n = check_genus(genus)?;
        if form.rows() != n || form.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "IntersectionForm::new",
                expected: n,
                found: if form.rows() != n { form.rows() } else { form.cols() },
            });
        }
        for i in 0..n {
            for j in 0..n {
                if *form.get(i, j) != -form.get(j, i).clone() {
                    return Err(Error::InvalidPairing(format!(
                        "not antisymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let r = gf2::rank(&form.reduce_mod2());
        if r != n {
            return Err(Error::InvalidPairing(format!(
                "degenerate mod 2 (rank {r}, need {n})"
            )));
        }
        Ok(Self { genus, form })
    }

    /// `<e_i, e_{i+g}> = 1`, `<e_{i+g}, e_i> = -1`, zero elsewhere.
    pub fn standard(genus: u32) -> Result<Self> {
        let n = check_genus(genus)?;
        let g = genus as usize;
        let mut form = Matrix::zeros(n, n);
        for i in 0..g {
            form.set(i, i + g, T::one());
            form.set(i + g, i, -T::one());
        }
        Ok(Self { genus, form })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn form(&self) -> &Matrix<T> {
        &self.form
    }

    pub fn reduce_mod2(&self) -> BitMatrix {
        self.form.reduce_mod2()
    }
}

/// The matrix of `f_*` on integer homology, images of basis vectors in columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action<T> {
    genus: u32,
    matrix: Matrix<T>,
}

impl<T: Scalar> Action<T> {
    pub fn new(genus: u32, matrix: Matrix<T>) -> Result<Self> {
        let n = check_genus(genus)?;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "Action::new",
                expected: n,
                found: if matrix.rows() != n { matrix.rows() } else { matrix.cols() },
            });
        }
        Ok(Self { genus, matrix })
    }

    pub fn identity(genus: u32) -> Result<Self> {
        let n = check_genus(genus)?;
        Ok(Self {
            genus,
            matrix: Matrix::identity(n),
        })
    }

    /// `-I`, the action of the hyperelliptic involution.
    pub fn negative_identity(genus: u32) -> Result<Self> {
        let id = Self::identity(genus)?;
        Ok(Self {
            genus,
            matrix: id.matrix.neg(),
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        2 * self.genus as usize
    }

    pub fn reduce_mod2(&self) -> BitMatrix {
        self.matrix.reduce_mod2()
    }

    /// Composition `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_genus(self.genus, other.genus)?;
        Ok(Self {
            genus: self.genus,
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    /// Whether `det A = ±1`.
    pub fn is_unimodular(&self) -> bool {
        self.matrix
            .determinant()
            .map(|d| d.abs().is_one())
            .unwrap_or(false)
    }
}

/// A spin structure in coordinates relative to the base structure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinStructure {
    genus: u32,
    coords: BitVector,
}

impl SpinStructure {
    pub fn new(genus: u32, coords: BitVector) -> Result<Self> {
        let n = check_genus(genus)?;
        if coords.len() != n {
            return Err(Error::DimensionMismatch {
                context: "SpinStructure::new",
                expected: n,
                found: coords.len(),
            });
        }
        Ok(Self { genus, coords })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn coords(&self) -> &BitVector {
        &self.coords
    }

    /// The pulled-back structure `Ā^T x + V̄`.
    pub fn pullback<T: Scalar>(
        &self,
        action: &Action<T>,
        pairing: &IntersectionForm<T>,
    ) -> Result<SpinStructure> {
        same_genus(self.genus, action.genus)?;
        let (lin, shift) = affine_parts(action, pairing)?;
        let mut x = lin.mul_vec(&self.coords)?;
        x.xor_assign(&shift);
        Ok(SpinStructure {
            genus: self.genus,
            coords: x,
        })
    }
}

fn same_genus(expected: u32, found: u32) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::GenusMismatch { expected, found })
    }
}

/// `Ā^T` and `V̄`: the linear and translation parts of the pullback.
fn affine_parts<T: Scalar>(
    action: &Action<T>,
    pairing: &IntersectionForm<T>,
) -> Result<(BitMatrix, BitVector)> {
    let v = v_vector(action, pairing)?;
    Ok((action.reduce_mod2().transpose(), v))
}

/// `Ā^T - I` and `V̄`. Invariant structures solve `(Ā^T - I) x = V̄`.
pub fn coordinate_map<T: Scalar>(
    action: &Action<T>,
    pairing: &IntersectionForm<T>,
) -> Result<(BitMatrix, BitVector)> {
    let (lin, v) = affine_parts(action, pairing)?;
    Ok((lin.plus_identity()?, v))
}

pub fn standard_pairing<T: Scalar>(genus: u32) -> Result<IntersectionForm<T>> {
    IntersectionForm::standard(genus)
}

/// The correction vector `V` in exact integer arithmetic, before reduction.
pub fn v_vector_int<T: Scalar>(action: &Action<T>, pairing: &IntersectionForm<T>) -> Result<Vec<T>> {
    same_genus(pairing.genus, action.genus)?;
    let n = action.dim();
    let a = &action.matrix;
    let p = &pairing.form;
    Ok((0..n)
        .map(|i| {
            let mut acc = T::zero();
            for j1 in 0..n {
                let x = a.get(j1, i);
                if x.is_zero() {
                    continue;
                }
                for j2 in j1 + 1..n {
                    let pair = p.get(j1, j2);
                    let y = a.get(j2, i);
                    if !pair.is_zero() && !y.is_zero() {
                        acc = acc + x.clone() * y.clone() * pair.clone();
                    }
                }
            }
            acc
        })
        .collect())
}

/// `V̄`, the mod-2 reduction of [`v_vector_int`].
pub fn v_vector<T: Scalar>(action: &Action<T>, pairing: &IntersectionForm<T>) -> Result<BitVector> {
    let v = v_vector_int(action, pairing)?;
    Ok(BitVector::from_bools(
        &v.iter().map(Scalar::is_odd_bit).collect::<Vec<_>>(),
    ))
}

/// Coordinates of all spin structures fixed by the action.
pub fn invariant_spins<T: Scalar>(
    action: &Action<T>,
    pairing: &IntersectionForm<T>,
) -> Result<AffineSolutionSet> {
    let (m, v) = coordinate_map(action, pairing)?;
    gf2::solve_affine(&m, &v)
}

/// Number of fixed spin structures: zero, or `2^h` with `h` the nullity of `Ā^T - I`.
pub fn count_invariant<T: Scalar>(action: &Action<T>, pairing: &IntersectionForm<T>) -> Result<BigUint> {
    Ok(invariant_spins(action, pairing)?.cardinality())
}

/// Structures fixed by every action in the list, solved as one stacked system.
pub fn group_invariant_spins<T: Scalar>(
    actions: &[Action<T>],
    pairing: &IntersectionForm<T>,
) -> Result<AffineSolutionSet> {
    let Some(first) = actions.first() else {
        return Err(Error::EmptyInput("group_invariant_spins needs at least one action"));
    };
    let (mut m, v) = coordinate_map(first, pairing)?;
    let mut rhs: Vec<bool> = v.iter().collect();
    for a in &actions[1..] {
        let (mi, vi) = coordinate_map(a, pairing)?;
        m = m.vstack(&mi)?;
        rhs.extend(vi.iter());
    }
    gf2::solve_affine(&m, &BitVector::from_bools(&rhs))
}

/// Whether `Ā^T P̄ Ā = P̄` over GF(2). Mismatched sizes are simply `false`.
pub fn is_symplectic_mod2<T: Scalar>(action: &Action<T>, pairing: &IntersectionForm<T>) -> bool {
    if action.genus != pairing.genus {
        return false;
    }
    let a = action.reduce_mod2();
    let p = pairing.reduce_mod2();
    gf2::matmul(&a.transpose(), &p)
        .and_then(|ap| gf2::matmul(&ap, &a))
        .map(|lhs| lhs == p)
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type A = Action<BigInt>;
    type P = IntersectionForm<BigInt>;

    #[test]
    fn standard_pairing_small_genus() {
        let p1: P = standard_pairing(1).unwrap();
        assert_eq!(p1.form().to_rows(), vec![vec![0.into(), 1.into()], vec![BigInt::from(-1), 0.into()]]);
        let p2: IntersectionForm<i64> = standard_pairing(2).unwrap();
        let expect = vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, 0, 0, 0], vec![0, -1, 0, 0]];
        assert_eq!(p2.form().to_rows(), expect);
    }

    #[test]
    fn pairing_validation() {
        let bad = Matrix::<i64>::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(matches!(IntersectionForm::new(1, bad), Err(Error::InvalidPairing(_))));
        let even = Matrix::<i64>::from_i64_rows(&[&[0, 2], &[-2, 0]]).unwrap();
        assert!(matches!(IntersectionForm::new(1, even), Err(Error::InvalidPairing(_))));
        let wrong_size = Matrix::<i64>::zeros(3, 3);
        assert!(IntersectionForm::new(1, wrong_size).is_err());
        assert!(IntersectionForm::<i64>::standard(0).is_err());
    }

    #[test]
    fn negative_identity_has_zero_v() {
        for g in 1..=4 {
            let p: P = standard_pairing(g).unwrap();
            let j = A::negative_identity(g).unwrap();
            assert!(v_vector(&j, &p).unwrap().is_zero());
            let s = invariant_spins(&j, &p).unwrap();
            assert_eq!(s.nullity(), Some(2 * g as usize));
        }
    }

    #[test]
    fn identity_mod_two_forces_zero_shift() {
        // Every product in v_i pairs the odd diagonal entry with an even one.
        let p: IntersectionForm<i64> = standard_pairing(1).unwrap();
        let hand = IntersectionForm::new(1, Matrix::from_i64_rows(&[&[0, 3], &[-3, 0]]).unwrap()).unwrap();
        let a = Action::new(1, Matrix::from_i64_rows(&[&[3, 2], &[2, 1]]).unwrap()).unwrap();
        assert!(a.reduce_mod2().is_identity());
        assert_eq!(v_vector_int(&a, &p).unwrap(), vec![6, 2]);
        assert_eq!(v_vector_int(&a, &hand).unwrap(), vec![18, 6]);
        assert_eq!(count_invariant(&a, &hand).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn inconsistent_system_is_empty() {
        // Column 2 is e_1 + e_2, so v_2 = 1, while Ā^T - I = [[1,0],[1,0]]
        // demands x_1 = 0 and x_1 = 1.
        let p: IntersectionForm<i64> = standard_pairing(1).unwrap();
        let a = Action::new(1, Matrix::from_i64_rows(&[&[0, 1], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(v_vector_int(&a, &p).unwrap(), vec![0, 1]);
        let s = invariant_spins(&a, &p).unwrap();
        assert!(s.is_empty());
        assert_eq!(count_invariant(&a, &p).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn transvection_counts() {
        let p: IntersectionForm<i64> = standard_pairing(1).unwrap();
        let t = Action::new(1, Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(v_vector_int(&t, &p).unwrap(), vec![0, 1]);
        assert_eq!(count_invariant(&t, &p).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn pullback_agrees_with_solution_set() {
        let p: P = standard_pairing(2).unwrap();
        let a = random_symplectic::<BigInt>(2, 11, 15).unwrap();
        let s = invariant_spins(&a, &p).unwrap();
        for mask in 0..16u64 {
            let x = SpinStructure::new(2, BitVector::from_mask(4, mask)).unwrap();
            let fixed = x.pullback(&a, &p).unwrap() == x;
            assert_eq!(fixed, s.contains(x.coords()));
        }
    }

    #[test]
    fn symplectic_check() {
        let p: P = standard_pairing(2).unwrap();
        assert!(is_symplectic_mod2(&A::identity(2).unwrap(), &p));
        let mut single = Matrix::<BigInt>::zeros(4, 4);
        single.set(0, 0, BigInt::from(1));
        assert!(!is_symplectic_mod2(&A::new(2, single).unwrap(), &p));
        let other: P = standard_pairing(1).unwrap();
        assert!(!is_symplectic_mod2(&A::identity(2).unwrap(), &other));
    }

    #[test]
    fn group_requires_input_and_matching_genus() {
        let p: P = standard_pairing(2).unwrap();
        assert!(matches!(group_invariant_spins::<BigInt>(&[], &p), Err(Error::EmptyInput(_))));
        let a3 = A::identity(3).unwrap();
        assert!(matches!(
            group_invariant_spins(&[a3], &p),
            Err(Error::GenusMismatch { .. })
        ));
    }
}
