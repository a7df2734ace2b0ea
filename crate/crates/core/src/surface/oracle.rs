//! Brute-force count of fixed spin structures through quadratic refinements.
//!
//! A spin structure is a function `q` on `H_1(C; Z_2)` with
//! `q(u + v) = q(u) + q(v) + <u, v>`, determined by its values `y_i = q(e_i)`.
//! It is fixed by `f` iff `q(f_* e_i) = q(e_i)` for every basis vector. This
//! module evaluates `q` on `f_* e_i` by adding basis vectors one at a time
//! through the refinement identity, and never looks at the correction vector
//! or at Gaussian elimination.

use rayon::prelude::*;

use super::{is_symplectic_mod2, Action, IntersectionForm};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest `2g` the exhaustive sweep accepts.
pub const MAX_ORACLE_DIM: usize = 24;

/// Bitmask model of the mod-2 data: `cols[j]` holds `{k : <e_k, e_j> = 1}`
/// and `images[i]` holds the support of `Ā e_i`.
struct Masks {
    cols: Vec<u32>,
    images: Vec<u32>,
}

impl Masks {
    /// `q_y(u)` built up from `q(0) = 0` along the set bits of `u`.
    fn refine(&self, y: u32, u: u32) -> bool {
        let mut q = 0u32;
        let mut walked = 0u32;
        let mut rest = u;
        while rest != 0 {
            let j = rest.trailing_zeros();
            q ^= (y >> j) & 1;
            q ^= (walked & self.cols[j as usize]).count_ones() & 1;
            walked |= 1 << j;
            rest &= rest - 1;
        }
        q == 1
    }

    fn is_fixed(&self, y: u32) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &u)| self.refine(y, u) == ((y >> i) & 1 == 1))
    }
}

/// Number of quadratic refinements of the pairing fixed by the action.
///
/// Requires the action to preserve the pairing mod 2 and `2g <= 24`.
pub fn quadratic_fixed_count<T: Scalar>(action: &Action<T>, pairing: &IntersectionForm<T>) -> Result<u64> {
    if action.genus() != pairing.genus() {
        return Err(Error::GenusMismatch {
            expected: pairing.genus(),
            found: action.genus(),
        });
    }
    let n = action.dim();
    if n > MAX_ORACLE_DIM {
        return Err(Error::BoundExceeded {
            what: "oracle dimension 2g",
            limit: MAX_ORACLE_DIM,
            found: n,
        });
    }
    if !is_symplectic_mod2(action, pairing) {
        return Err(Error::NotSymplectic);
    }
    let a = action.reduce_mod2();
    let p = pairing.reduce_mod2();
    let masks = Masks {
        cols: (0..n)
            .map(|j| (0..n).filter(|&k| p.get(k, j)).fold(0, |m, k| m | 1 << k))
            .collect(),
        images: (0..n)
            .map(|i| (0..n).filter(|&j| a.get(j, i)).fold(0, |m, j| m | 1 << j))
            .collect(),
    };
    let total = 1u64 << n;
    Ok((0..total)
        .into_par_iter()
        .filter(|&y| masks.is_fixed(y as u32))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::surface::standard_pairing;

    #[test]
    fn identity_and_involution_fix_everything() {
        let p: IntersectionForm<i64> = standard_pairing(2).unwrap();
        assert_eq!(quadratic_fixed_count(&Action::identity(2).unwrap(), &p).unwrap(), 16);
        assert_eq!(quadratic_fixed_count(&Action::negative_identity(2).unwrap(), &p).unwrap(), 16);
    }

    #[test]
    fn rejects_non_symplectic_and_oversized() {
        let p: IntersectionForm<i64> = standard_pairing(1).unwrap();
        let a = Action::new(1, Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]).unwrap()).unwrap();
        assert_eq!(quadratic_fixed_count(&a, &p), Err(Error::NotSymplectic));
        let big: IntersectionForm<i64> = standard_pairing(13).unwrap();
        assert!(matches!(
            quadratic_fixed_count(&Action::identity(13).unwrap(), &big),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn refinement_identity_holds() {
        // q(u + v) = q(u) + q(v) + <u, v> for every pair, genus 2, random y.
        let p: IntersectionForm<i64> = standard_pairing(2).unwrap();
        let pm = p.reduce_mod2();
        let masks = Masks {
            cols: (0..4).map(|j| (0..4).filter(|&k| pm.get(k, j)).fold(0, |m, k| m | 1 << k)).collect(),
            images: vec![],
        };
        let pair = |u: u32, v: u32| {
            (0..4)
                .filter(|&j| v >> j & 1 == 1)
                .map(|j| (u & masks.cols[j]).count_ones())
                .sum::<u32>()
                & 1
                == 1
        };
        for y in [0u32, 5, 9, 15] {
            for u in 0..16 {
                for v in 0..16 {
                    let lhs = masks.refine(y, u ^ v);
                    let rhs = masks.refine(y, u) ^ masks.refine(y, v) ^ pair(u, v);
                    assert_eq!(lhs, rhs, "y={y} u={u} v={v}");
                }
            }
        }
    }
}
