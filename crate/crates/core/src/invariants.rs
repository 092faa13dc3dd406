//! Invariant functions, polynomial semiinvariants and orbit ideals on `𝒢⁺`.
//!
//! With `C` the cofactor matrix of `c` (`c Cᵗ = det(c) I`):
//!
//! * `f_i = 4^{−i} tr(c a c⁻¹ − aᵗ)^{2i}` and `π(ac⁻¹)² det(c)` are invariant;
//! * `h_i = tr(c a Cᵗ − det(c) aᵗ)^{2i} = det(c)^{2i} tr(c a c⁻¹ − aᵗ)^{2i}` has weight `det(g)^{−4i}`;
//! * `P = Pf(½(a Cᵗ − C aᵗ)) = π(ac⁻¹) det(c)^k` (even `n = 2k`) has weight `det(g)^{1−2k}`.
//!
//! Weights are measured on sample points and stored, never assumed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{certified_rank, int, monomials_of_degree, rat, rational_from_f64, Field, Matrix, Monomial, MultiPoly, Rational, Ring};
use crate::lie::LieAlgebra;
use crate::orbits::{DualPoint, GroupElement, NormalForm};
use crate::{Error, Result};

/// Pfaffian of a skew-symmetric matrix of even size, by expansion along the
/// first row.
pub fn pfaffian<T: Ring>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() || m.rows() % 2 == 1 {
        return Err(Error::Shape(format!("Pfaffian needs an even square matrix, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_skew() {
        return Err(Error::Domain("Pfaffian of a non-skew matrix".into()));
    }
    if m.rows() == 0 {
        return Err(Error::Shape("Pfaffian of an empty matrix".into()));
    }
    Ok(pf_rec(m, &(0..m.rows()).collect::<Vec<_>>()))
}

fn pf_rec<T: Ring>(m: &Matrix<T>, idx: &[usize]) -> T {
    if idx.len() == 2 {
        return m[(idx[0], idx[1])].clone();
    }
    let mut acc = m[(0, 0)].zero_like();
    for j in 1..idx.len() {
        let a = &m[(idx[0], idx[j])];
        if a.is_zero_elem() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().enumerate().filter(|&(t, _)| t != 0 && t != j).map(|(_, &v)| v).collect();
        let term = a.clone() * pf_rec(m, &rest);
        acc = if j % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

fn check_point<T: Field>(pt: &DualPoint<T>) -> Result<usize> {
    let n = pt.a.rows();
    if !pt.a.is_square() || pt.c.rows() != n || pt.c.cols() != n {
        return Err(Error::Shape("c and a must be square of equal size".into()));
    }
    Ok(n)
}

/// `f_i = 4^{−i} tr(c a c⁻¹ − aᵗ)^{2i}`.
pub fn rational_invariant_f<T: Field>(i: u32, pt: &DualPoint<T>) -> Result<T> {
    check_point(pt)?;
    let ci = pt.c.inverse()?;
    let m = &(&(&pt.c * &pt.a) * &ci) - &pt.a.transpose();
    let mut scale = T::from_i64(1);
    for _ in 0..i {
        scale = scale / T::from_i64(4);
    }
    Ok(m.pow(2 * i).trace() * scale)
}

/// `f_i` at `(I, H)` from the parameters: `tr(H^{2i}) = 2 (−1)^i Σ λ_j^{2i}`.
pub fn invariant_from_lambdas<T: Field>(i: u32, lambdas: &[T]) -> T {
    let s = f_tilde(i, lambdas);
    let two = T::from_i64(2);
    if i.is_multiple_of(2) {
        two * s
    } else {
        -(two * s)
    }
}

/// `f̃_i = Σ λ_j^{2i}`, the generator of invariants on the Cartan slice.
pub fn f_tilde<T: Field>(i: u32, lambdas: &[T]) -> T {
    let mut acc = T::from_i64(0);
    for l in lambdas {
        let mut p = T::from_i64(1);
        for _ in 0..2 * i {
            p = p * l.clone();
        }
        acc = acc + p;
    }
    acc
}

/// `π(A) = Pf(½(A − Aᵗ))`.
pub fn skew_pfaffian<T: Field>(a: &Matrix<T>) -> Result<T> {
    pfaffian(&a.skew_part(&(T::from_i64(1) / T::from_i64(2))))
}

/// `π(ac⁻¹)² det(c)`, the square of the Pfaffian invariant; rational on rational points.
pub fn pfaffian_invariant_squared<T: Field>(pt: &DualPoint<T>) -> Result<T> {
    check_point(pt)?;
    let p = skew_pfaffian(&(&pt.a * &pt.c.inverse()?))?;
    Ok(p.clone() * p * pt.c.det())
}

/// `Pf = π(ac⁻¹) det(c)^{1/2}` for `c` positive definite.
pub fn pfaffian_invariant(pt: &DualPoint<f64>) -> Result<f64> {
    check_point(pt)?;
    let d = pt.c.det();
    if !(d > 0.0) {
        return Err(Error::Domain("det(c) must be positive".into()));
    }
    Ok(skew_pfaffian(&(&pt.a * &pt.c.inverse()?))? * num_traits::Float::sqrt(d))
}

/// `h_i` evaluated directly from the matrices.
pub fn trace_semiinvariant_value<T: Field>(i: u32, pt: &DualPoint<T>) -> Result<T> {
    check_point(pt)?;
    let cof = pt.c.cofactor_matrix();
    let det = pt.c.det();
    let m = &(&(&pt.c * &pt.a) * &cof.transpose()) - &pt.a.transpose().scale(&det);
    Ok(m.pow(2 * i).trace())
}

/// `P = Pf(½(a Cᵗ − C aᵗ))` evaluated directly from the matrices.
pub fn pfaffian_semiinvariant_value<T: Field>(pt: &DualPoint<T>) -> Result<T> {
    check_point(pt)?;
    let cof = pt.c.cofactor_matrix();
    skew_pfaffian(&(&pt.a * &cof.transpose()))
}

/// The generic point: `c` and `a` as matrices of coordinate functions.
pub fn symbolic_point(alg: &LieAlgebra) -> (Matrix<MultiPoly>, Matrix<MultiPoly>) {
    let b = &alg.basis;
    let n = alg.n();
    let var = |k: usize| MultiPoly::var(alg.vars(), k);
    let c = Matrix::from_fn(n, n, |i, j| var(b.c_index(i, j)));
    let a = Matrix::from_fn(n, n, |i, j| var(b.a_index(i, j)));
    (c, a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemiinvariantKind {
    /// `h_i = tr(c a Cᵗ − det(c) aᵗ)^{2i}`.
    Trace(u32),
    /// `P = Pf(½(a Cᵗ − C aᵗ))`.
    Pfaffian,
}

/// Polynomial semiinvariants `h_1, …, h_k` (the last one Pfaffian-type for even
/// `n`) with weights `w` such that `h ∘ Ad*(x, g) = det(g)^w h`.
#[derive(Clone, Debug)]
pub struct SemiinvariantFamily {
    pub n: usize,
    pub k: usize,
    pub kinds: Vec<SemiinvariantKind>,
    pub generators: Vec<MultiPoly>,
    pub weights: Vec<i64>,
    pub alg: LieAlgebra,
}

/// Largest `n` for which the symbolic generators are expanded. At `n = 4` the
/// entries of `c a Cᵗ − det(c) aᵗ` already have degree 5 in 26 variables.
pub const MAX_SYMBOLIC_N: usize = 3;

pub fn semiinvariant_family(n: usize) -> Result<SemiinvariantFamily> {
    if n < 2 {
        return Err(Error::Domain("semiinvariants need n >= 2".into()));
    }
    if n > MAX_SYMBOLIC_N {
        return Err(Error::Capacity(format!("symbolic semiinvariants are limited to n <= {MAX_SYMBOLIC_N}")));
    }
    let alg = LieAlgebra::new(n)?;
    let k = n / 2;
    let (c, a) = symbolic_point(&alg);
    let cof_t = c.cofactor_matrix().transpose();
    let det = c.det_expansion();
    let mut kinds = Vec::new();
    let mut generators = Vec::new();
    let trace_count = if n % 2 == 1 { k } else { k - 1 };
    if trace_count > 0 {
        let m = &(&(&c * &a) * &cof_t) - &a.transpose().scale(&det);
        let m2 = &m * &m;
        let mut power = m2.clone();
        for i in 1..=trace_count as u32 {
            if i > 1 {
                power = &power * &m2;
            }
            kinds.push(SemiinvariantKind::Trace(i));
            generators.push(power.trace());
        }
    }
    if n.is_multiple_of(2) {
        let half = MultiPoly::constant(alg.vars(), rat(1, 2));
        let s = (&a * &cof_t).skew_part(&half);
        kinds.push(SemiinvariantKind::Pfaffian);
        generators.push(pfaffian(&s)?);
    }
    let weights = generators.iter().map(|h| measure_weight(h, n)).collect::<Result<Vec<_>>>()?;
    Ok(SemiinvariantFamily { n, k, kinds, generators, weights, alg })
}

/// Deterministic sample data: a positive definite `c`, a generic `a`, and a
/// group element with `det g = 2` or `3`.
fn weight_samples(n: usize) -> Vec<(DualPoint<Rational>, GroupElement<Rational>)> {
    let mut out = Vec::new();
    for s in 0..2i64 {
        let c = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                int(n as i64 + 2 + (i as i64 + s) % 3)
            } else {
                rat(((i * 3 + j * 3 + s as usize) % 5) as i64 - 2, 3)
            }
        });
        let a = Matrix::from_fn(n, n, |i, j| rat(((i * 7 + j * 3 + 2 * s as usize) % 11) as i64 - 5, 1 + (j as i64 + s) % 2));
        let g = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                if i == 0 {
                    int(2 + s)
                } else {
                    int(1)
                }
            } else if i < j {
                rat(((i + 2 * j + s as usize) % 4) as i64 - 1, 2)
            } else {
                int(0)
            }
        });
        let x = Matrix::from_fn(n, n, |i, j| rat(((i + j + s as usize) % 3) as i64 - 1, 1 + ((i * j) % 2) as i64));
        out.push((DualPoint { c, a }, GroupElement { x, g }));
    }
    out
}

/// Integer `w` with `h(Ad*(p) pt) = det(g)^w h(pt)` on fixed samples; a
/// construction error if `h` is not a semiinvariant there.
pub fn measure_weight(h: &MultiPoly, n: usize) -> Result<i64> {
    let mut found: Option<i64> = None;
    for (pt, p) in weight_samples(n) {
        let before = h.eval(&pt.coordinates());
        let after = h.eval(&p.coadjoint(&pt)?.coordinates());
        let w = solve_weight(&before, &after, &p.g.det())
            .ok_or_else(|| Error::Construction("polynomial is not a semiinvariant on the weight samples".into()))?;
        match found {
            Some(prev) if prev != w => {
                return Err(Error::Construction(format!("inconsistent weights {prev} and {w}")));
            }
            _ => found = Some(w),
        }
    }
    found.ok_or_else(|| Error::Construction("no weight samples".into()))
}

/// `w` with `after = det^w · before`, searched in `[−64, 64]`.
pub fn solve_weight(before: &Rational, after: &Rational, det: &Rational) -> Option<i64> {
    if before.is_zero() {
        return None;
    }
    let ratio = after / before;
    (-64i64..=64).find(|&w| rational_pow(det, w) == ratio)
}

pub fn rational_pow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl SemiinvariantFamily {
    /// Evaluates generator `j` at a rational point.
    pub fn evaluate(&self, j: usize, pt: &DualPoint<Rational>) -> Rational {
        self.generators[j].eval(&pt.coordinates())
    }

    pub fn det_c(&self) -> MultiPoly {
        symbolic_point(&self.alg).0.det_expansion()
    }
}

/// The ideal `(p_1, …, p_k)` of a regular orbit:
/// `p_i = h_i − α_i det(c)^{2i}` for trace-type `h_i` and
/// `p_k = P² − α_k det(c)^{2k−1}` for the Pfaffian-type one.
#[derive(Clone, Debug)]
pub struct OrbitIdeal {
    pub n: usize,
    pub k: usize,
    pub lambdas: Vec<Rational>,
    pub alphas: Vec<Rational>,
    pub exponents: Vec<u32>,
    pub generators: Vec<MultiPoly>,
    pub kinds: Vec<SemiinvariantKind>,
    pub alg: LieAlgebra,
}

/// Distinct nonzero `|λ_i|`, exactly.
pub fn lambdas_regular(lambdas: &[Rational]) -> bool {
    let abs: Vec<Rational> = lambdas.iter().map(|l| l.abs()).collect();
    abs.iter().all(|l| !l.is_zero()) && (0..abs.len()).all(|i| (0..i).all(|j| abs[i] != abs[j]))
}

impl OrbitIdeal {
    /// Ideal of the orbit through `(I, H(λ))`.
    pub fn from_lambdas(family: &SemiinvariantFamily, lambdas: &[Rational]) -> Result<Self> {
        let (n, k) = (family.n, family.k);
        if lambdas.len() != k {
            return Err(Error::Input(format!("expected {k} lambdas, got {}", lambdas.len())));
        }
        if !lambdas_regular(lambdas) {
            return Err(Error::Domain("orbit is not regular".into()));
        }
        let det = family.det_c();
        let mut alphas = Vec::new();
        let mut exponents = Vec::new();
        let mut generators = Vec::new();
        for (kind, h) in family.kinds.iter().zip(&family.generators) {
            let (alpha, e, lead) = match *kind {
                SemiinvariantKind::Trace(i) => (int(1 << (2 * i)) * invariant_from_lambdas(i, lambdas), 2 * i, h.clone()),
                SemiinvariantKind::Pfaffian => {
                    let prod: Rational = lambdas.iter().fold(Rational::one(), |acc, l| acc * l);
                    (&prod * &prod, 2 * k as u32 - 1, h * h)
                }
            };
            generators.push(&lead - &det.pow(e).scale(&alpha));
            alphas.push(alpha);
            exponents.push(e);
        }
        Ok(OrbitIdeal {
            n,
            k,
            lambdas: lambdas.to_vec(),
            alphas,
            exponents,
            generators,
            kinds: family.kinds.clone(),
            alg: family.alg.clone(),
        })
    }

    /// Exact values of the generators at a rational point.
    pub fn evaluate(&self, pt: &DualPoint<Rational>) -> Vec<Rational> {
        let v = pt.coordinates();
        self.generators.iter().map(|p| p.eval(&v)).collect()
    }

    /// Generator values at a float point, each divided by the sum of the
    /// absolute values of its terms there.
    pub fn evaluate_normalized(&self, pt: &DualPoint<f64>) -> Vec<f64> {
        let v = pt.coordinates();
        self.generators
            .iter()
            .map(|p| {
                let mut val = 0.0;
                let mut scale = 0.0;
                for (m, c) in p.terms() {
                    let t = crate::arith::rational_to_f64(c) * m.0.iter().zip(&v).map(|(&e, x)| powi(*x, e)).product::<f64>();
                    val += t;
                    scale += t.abs();
                }
                if scale == 0.0 {
                    0.0
                } else {
                    val / scale
                }
            })
            .collect()
    }

    pub fn vanishes_at(&self, pt: &DualPoint<Rational>) -> bool {
        self.evaluate(pt).iter().all(Zero::is_zero)
    }

    /// The `k × N` Jacobian of `(p_1, …, p_k)` at a point.
    pub fn jacobian_at(&self, pt: &DualPoint<Rational>) -> Matrix<Rational> {
        let partials = self.partials();
        jacobian_from_partials(&partials, &pt.coordinates())
    }

    fn partials(&self) -> Vec<Vec<MultiPoly>> {
        let dim = self.alg.dim();
        self.generators.iter().map(|p| (0..dim).map(|i| p.partial(i)).collect()).collect()
    }
}

fn powi(x: f64, e: u16) -> f64 {
    let mut acc = 1.0;
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn jacobian_from_partials(partials: &[Vec<MultiPoly>], v: &[Rational]) -> Matrix<Rational> {
    let cols = partials.first().map_or(0, Vec::len);
    Matrix::from_fn(partials.len(), cols, |r, i| partials[r][i].eval(v))
}

/// Ideal of the orbit of a regular normal form. Float parameters are converted
/// to the exact rationals they represent.
pub fn orbit_ideal(nf: &NormalForm) -> Result<OrbitIdeal> {
    if !nf.regular {
        return Err(Error::Domain("normal form is not regular".into()));
    }
    let family = semiinvariant_family(nf.n())?;
    let lambdas = nf
        .lambdas
        .iter()
        .map(|&l| rational_from_f64(l).ok_or_else(|| Error::Domain("non-finite lambda".into())))
        .collect::<Result<Vec<_>>>()?;
    OrbitIdeal::from_lambdas(&family, &lambdas)
}

/// True iff the Jacobian of the generators has rank `k` at every point. Points
/// where some generator does not vanish are an input error.
pub fn regularity_check(ideal: &OrbitIdeal, pts: &[DualPoint<Rational>]) -> Result<bool> {
    let partials = ideal.partials();
    for (idx, pt) in pts.iter().enumerate() {
        if !ideal.vanishes_at(pt) {
            return Err(Error::Input(format!("point {idx} is not on the orbit variety")));
        }
        if jacobian_from_partials(&partials, &pt.coordinates()).rank() != ideal.k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial solutions of the infinitesimal invariance equations up to a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCertificate {
    pub n: usize,
    pub degree: u32,
    /// Kernel dimension in each homogeneous degree `0..=degree`.
    pub per_degree: Vec<usize>,
    pub dimension: usize,
}

impl InvariantCertificate {
    pub fn passed(&self) -> bool {
        self.dimension == 1
    }
}

/// Linear vector fields `V_e = Σ_i L_{e,i} ∂_i` of the infinitesimal coadjoint
/// action, `L_{e,i}` the `i`-th coordinate of `proj[X_e, ξ]` at the generic `ξ`.
pub fn infinitesimal_generators(alg: &LieAlgebra) -> Vec<Vec<MultiPoly>> {
    let b = &alg.basis;
    let dim = alg.dim();
    let duals: Vec<Matrix<Rational>> = (0..dim).map(|j| b.dual_element(j)).collect();
    b.elements()
        .iter()
        .map(|x| {
            let mut field: Vec<MultiPoly> = (0..dim).map(|_| MultiPoly::zero(alg.vars())).collect();
            for (j, y) in duals.iter().enumerate() {
                let coords = b.dual_coordinates(&(&(x * y) - &(y * x)));
                for (i, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        field[i].add_term(Monomial::var(dim, j), c);
                    }
                }
            }
            field
        })
        .collect()
}

/// Applies a linear vector field to a polynomial.
pub fn apply_vector_field(field: &[MultiPoly], f: &MultiPoly) -> MultiPoly {
    let mut acc = MultiPoly::zero(f.vars());
    for (i, l) in field.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let d = f.partial(i);
        if !d.is_zero() {
            acc = acc + l * &d;
        }
    }
    acc
}

/// Dimension of `{F : deg F ≤ d, V_e F = 0 for all e}`.
///
/// The vector fields preserve degree, so the system splits by homogeneous
/// degree; each block is ranked exactly.
pub fn no_invariants_certificate(n: usize, d: u32) -> Result<InvariantCertificate> {
    const MAX_ENTRIES: usize = 40_000_000;
    let alg = LieAlgebra::new(n)?;
    let dim = alg.dim();
    let fields = infinitesimal_generators(&alg);
    let mut per_degree = vec![1];
    for deg in 1..=d {
        let monos = monomials_of_degree(dim, deg);
        let rows_n = monos.len() * fields.len();
        if rows_n.saturating_mul(monos.len()) > MAX_ENTRIES {
            return Err(Error::Capacity(format!("invariance system in degree {deg} has {rows_n}x{} entries", monos.len())));
        }
        let index: alloc::collections::BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // Column `j` holds V_e(m_j) for all e; rows are (e, output monomial).
        let images: Vec<Vec<MultiPoly>> = fields
            .iter()
            .map(|fe| monos.iter().map(|m| apply_vector_field(fe, &MultiPoly::monomial(alg.vars(), m.clone(), int(1)))).collect())
            .collect();
        let mut m = Matrix::filled(rows_n, monos.len(), Rational::zero());
        for (e, imgs) in images.iter().enumerate() {
            for (j, p) in imgs.iter().enumerate() {
                for (mono, c) in p.terms() {
                    m[(e * monos.len() + index[mono], j)] = c.clone();
                }
            }
        }
        let kernel = monos.len() - certified_rank(&m);
        per_degree.push(kernel);
    }
    let dimension = per_degree.iter().sum();
    Ok(InvariantCertificate { n, degree: d, per_degree, dimension })
}
