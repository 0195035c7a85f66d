//! Exact linear algebra over prime fields `F_p`.
//!
//! Every subspace in the crate is a [`FpMatrix`] whose rows are a basis.
//! Binary matrices are eliminated on bit-packed rows; other primes use a
//! plain `u32` grid with 64-bit intermediate products.

mod gf2;
mod matrix;
mod reduce;
mod scalar;

pub use matrix::{dot, FpMatrix};
pub use reduce::{
    independent_rows_on, is_subspace, kernel_basis, rank, row_basis, rref, rref_natural, same_span,
    solve_linear, space_intersection, space_sum, span_contains, RrefResult,
};
pub use scalar::{FpScalar, Modulus};
