//! Invariant spin structures (theta characteristics) under surface
//! automorphisms.
//!
//! * [`surface`]: spin structures as affine solutions over GF(2) for an
//!   action on `H_1(Σ_g; Z)` and an intersection pairing.
//! * [`cyclotomic`]: canonical forms of finite-order actions built from
//!   companion matrices of cyclotomic polynomials.
//! * [`hyperelliptic`]: the branch-point model, with closed-form counts for
//!   cyclic groups and the genus-2 catalog.
//! * [`fixtures`]: bundled Klein quartic data.
//!
//! Everything is generic over an exact integer [`Scalar`]. `BigInt` is the
//! default; `i64` works when entries stay small.

pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod hyperelliptic;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod surface;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use gf2::{AffineSolutionSet, BitMatrix, BitVector};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::Scalar;
pub use surface::{
    count_invariant, group_invariant_spins, invariant_spins, is_symplectic_mod2, quadratic_fixed_count,
    v_vector, v_vector_int, Action, IntersectionForm, SpinStructure,
};

pub type IntMatrix = Matrix<BigInt>;
pub type HomologyAction = Action<BigInt>;
pub type Pairing = IntersectionForm<BigInt>;
pub type IntPoly = Poly<BigInt>;

pub type IntMatrix64 = Matrix<i64>;
pub type HomologyAction64 = Action<i64>;
pub type Pairing64 = IntersectionForm<i64>;
