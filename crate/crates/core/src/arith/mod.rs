//! Exact scalar, matrix and polynomial arithmetic.

mod groebner;
mod matrix;
mod modular;
mod poly;
mod rational;
mod scalar;

pub use groebner::{
    groebner_basis, groebner_basis_with_limits, poly_normal_form, reduce, standard_monomials,
    GroebnerLimits,
};
pub use matrix::{rational_kernel, rational_rank, Matrix};
pub use modular::{certified_rank, rank_mod_p, rational_mod_p, MODULUS};
pub use poly::{monomials_of_degree, monomials_up_to, Monomial, MonomialOrder, MultiPoly, OrderKind, Vars};
pub use rational::{format_rational, parse_rational, rational_from_f64, rational_to_f64, rat, int, Rational};
pub use scalar::{Field, Ring};
