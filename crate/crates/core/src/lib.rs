//! Exact computer algebra for the coadjoint orbits of the semidirect product
//! `G = sym(n) ⋊ GL₊(n)` and for the algebraic deformation quantization
//! `U_h / I_h` of the coordinate ring of a regular orbit.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact over the
//! rationals except the eigenvalue/Cholesky steps of [`orbits::normal_form`].
//!
//! Module map:
//! - [`arith`]: rationals, dense matrices, multivariate polynomials, Gröbner bases.
//! - [`lie`]: the block-matrix basis of the Lie algebra, structure constants,
//!   the trace pairing and the Lie–Poisson bracket.
//! - [`orbits`]: the group, its embedding in `Sp(n)`, `Ad`, `Ad*`, normal forms
//!   and orbit dimensions.
//! - [`invariants`]: invariant functions, polynomial semiinvariants, orbit ideals
//!   and the certificate that no nonconstant invariant polynomials exist.
//! - [`quantize`]: the enveloping algebra `U_h`, the symmetrizer, the ideal `I_h`
//!   and the star product on the orbit.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod invariants;
pub mod lie;
pub mod orbits;
pub mod quantize;
pub mod sample;

pub use error::{Error, Result};
