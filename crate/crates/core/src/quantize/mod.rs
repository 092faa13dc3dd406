//! Deformation quantization of a regular orbit through `U_h(𝒢)`.
//!
//! `U_h = T(𝒢)/(XY − YX − h[X, Y])` is handled in PBW normal form. The orbit
//! ideal `(p)` is lifted to `I_h = U_h Sym(p) U_h`, and ordered words on the
//! standard monomials of `(p)` give the `Q[h]`-basis transporting the product
//! of `U_h/I_h` to a star product on `C[𝒢*]/(p)`.

mod enveloping;
mod hpoly;
mod ncpoly;
mod quotient;
mod weights;

pub use enveloping::{EnvelopingAlgebra, SYM_DEGREE_CAP};
pub use hpoly::HPoly;
pub use ncpoly::NCPoly;
pub use quotient::{AxiomReport, BasisCertificate, QuantizedOrbit, QuotientElement, ReductionStrategy, TorsionReport};
pub use weights::{commutator_weight, constant_leading_term, WeightTable};
