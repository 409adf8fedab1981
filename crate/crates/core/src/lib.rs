//! Polynomial u(2) algebras and their realizations.
//!
//! The algebra is spanned by `J₀, J₃, J₊, J₋` with `[J₃, J±] = ±J±`,
//! `J₀` central, and `J₊J₋ = Φ(J₃, J₀)`, `J₋J₊ = Φ(J₃ + 1, J₀)` for the
//! structure function
//!
//! ```text
//! Φ(j, m) = (j + m)(1 + j − m) ∏ᵢ (1 + κᵢ (j + m − 1))
//! ```
//!
//! Modules:
//!
//! * [`kernel`]: structure functions and parameters.
//! * [`repu2`]: finite unitary representations, dimension scan, relation checks.
//! * [`contraction`]: Schwinger map and the large-j limit to `A_{κ}`.
//! * [`higgs`]: two `A_κ` bosons realizing the cubic Higgs algebra.
//! * [`bargmann`]: coherent states and the differential realization.
//!
//! Every computation is generic over [`Scalar`]: use [`Rational`] for exact
//! results or `f64` for fast sweeps.

#![no_std]

extern crate alloc;

pub mod bargmann;
pub mod contraction;
pub mod higgs;
pub mod kernel;
pub mod matrix;
pub mod report;
pub mod repu2;
pub mod scalar;

pub use kernel::{HalfInt, KappaVector, SymCoeffs};
pub use matrix::{Basis, Matrix, OpLabel, OperatorMatrix};
pub use report::{Check, VerificationReport, Witness};
pub use scalar::{RadicalScalar, RadicalSum, Rational, Ring, Scalar};
