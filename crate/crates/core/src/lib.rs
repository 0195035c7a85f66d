//! Minimal stabilizer measurements for correcting qudit erasures.
//!
//! A stabilizer code over `F_p` is a subspace `C ⊆ F_p^{2n}` that is
//! isotropic for the symplectic form. When the qudits at positions `I` are
//! erased, the erasures are correctable iff `C ∩ F_p^I = C^⊥ ∩ F_p^I`, and
//! then measuring a basis of any `D ⊆ C` with `C = D + (C ∩ F_p^{Ī})` is
//! enough to pin the error down. [`stabilizer::plan_measurements`] finds such
//! a `D` of the least possible dimension, `dim C − dim(C ∩ F_p^{Ī})`, which
//! never exceeds `2|I|`.
//!
//! Modules, bottom up:
//!
//! * [`fpalg`]: prime-field matrices and reduction, with a bit-packed `F_2` path
//! * [`symplectic`]: `(a|b)` vectors, the symplectic form and erasure patterns
//! * [`stabilizer`]: correctability, planning, decoding and extremal counts
//! * [`css`]: the two-sector specialisation `C = C_Z × C_X`
//! * [`surface`]: codes on combinatorial surfaces and their locality
//! * [`oracle`]: brute-force references used by the tests
//! * [`cli`]: the `qerasure` command-line tool
//!
//! Library indices are 0-based. Files and the command line use 1-based qudit
//! indices.
//!
//! ```
//! use qudit_erasure::stabilizer::{plan_measurements, StabilizerCode};
//! use qudit_erasure::symplectic::ErasurePattern;
//!
//! let bell = StabilizerCode::from_rows(2, 2, &[[1, 1, 0, 0], [0, 0, 1, 1]])?;
//! let plan = plan_measurements(&bell, &ErasurePattern::new(2, [0])?)?;
//! assert_eq!(plan.measurement_count(), 2);
//! # Ok::<(), qudit_erasure::error::Error>(())
//! ```

pub mod cli;
pub mod css;
pub mod error;
pub mod fpalg;
pub mod oracle;
pub mod stabilizer;
pub mod surface;
pub mod symplectic;
