//! Seeded random inputs: rationals, group elements, points of `𝒢⁺` and
//! polynomials.

use alloc::vec::Vec;

use rand::Rng;

use crate::arith::{int, rat, Matrix, Monomial, MultiPoly, Rational, Vars};
use crate::orbits::{DualPoint, GroupElement};
use crate::quantize::{HPoly, NCPoly};

/// `p/q` with `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den.max(1)))
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, max_num: i64, max_den: i64) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| random_rational(rng, max_num, max_den))
}

pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize, max_num: i64, max_den: i64) -> Matrix<Rational> {
    let m = random_matrix(rng, n, max_num, max_den);
    Matrix::from_fn(n, n, |i, j| if i <= j { m[(i, j)].clone() } else { m[(j, i)].clone() })
}

/// `Mᵗ M + I`, positive definite.
pub fn random_positive_definite<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<Rational> {
    let m = random_matrix(rng, n, 3, 2);
    &(&m.transpose() * &m) + &Matrix::identity_like(&int(0), n)
}

/// `(x, g)` with `det g > 0`.
pub fn random_group_element<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GroupElement<Rational> {
    let x = random_symmetric(rng, n, 3, 2);
    loop {
        let mut g = random_matrix(rng, n, 3, 2);
        let d = g.det();
        if d == int(0) {
            continue;
        }
        if d < int(0) {
            for j in 0..n {
                g[(0, j)] = -g[(0, j)].clone();
            }
        }
        return GroupElement { x, g };
    }
}

pub fn random_dual_point<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DualPoint<Rational> {
    DualPoint { c: random_positive_definite(rng, n), a: random_matrix(rng, n, 3, 2) }
}

/// A regular parameter vector: distinct positive integers in decreasing order.
pub fn random_lambdas<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<Rational> {
    let mut v: Vec<i64> = Vec::with_capacity(k);
    while v.len() < k {
        let x = rng.gen_range(1..=(3 * k as i64 + 2));
        if !v.contains(&x) {
            v.push(x);
        }
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.into_iter().map(int).collect()
}

/// Random polynomial with up to `terms` monomials of degree `≤ max_degree`.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, vars: &Vars, max_degree: u32, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        p.add_term(random_monomial(rng, vars.len(), d), random_rational(rng, 5, 3));
    }
    p
}

/// Random homogeneous quadratic with up to `terms` monomials.
pub fn random_quadratic<R: Rng + ?Sized>(rng: &mut R, vars: &Vars, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for _ in 0..terms {
        p.add_term(random_monomial(rng, vars.len(), 2), random_rational(rng, 5, 3));
    }
    p
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, degree: u32) -> Monomial {
    let mut m = Monomial::one(nvars);
    for _ in 0..degree {
        m.0[rng.gen_range(0..nvars)] += 1;
    }
    m
}

/// Random element of `U_h` with up to `terms` ordered words of length
/// `≤ max_degree` and coefficients of `h`-degree `≤ 1`.
pub fn random_ncpoly<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: u32, terms: usize) -> NCPoly {
    let mut p = NCPoly::zero(dim);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let c = HPoly::from_coeffs(alloc::vec![random_rational(rng, 5, 3), random_rational(rng, 2, 2)]);
        p.add_term(random_monomial(rng, dim, d), c);
    }
    p
}

/// Random letter word of the given length (not necessarily ordered).
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, dim: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..dim)).collect()
}
