//! The group `G = sym(n) ⋊ GL₊(n)`, its symplectic embedding, the adjoint and
//! coadjoint actions, the normal form of a point of `𝒢⁺` and orbit dimensions.
//!
//! Group law: `(x, g)(y, h) = (x + g y gᵗ, gh)`. This is the law under which
//! `(x, g) ↦ (g, xǧ; 0, ǧ)` is a homomorphism and `Ad`, `Ad*` below are
//! actions (`ǧ = (gᵗ)⁻¹`).

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{rational_to_f64, Field, Matrix, Rational};
use crate::lie::LieAlgebra;
use crate::{Error, Result};

/// Element `(x, g)` of `G`: `x` symmetric, `det g > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<T> {
    pub x: Matrix<T>,
    pub g: Matrix<T>,
}

/// Element `(b, a)` of `𝒢`: the matrix `(a b; 0 −aᵗ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPoint<T> {
    pub b: Matrix<T>,
    pub a: Matrix<T>,
}

/// Point `(c, a)` of `𝒢* ≅ 𝒢₋`: the matrix `(a 0; c −aᵗ)`, `c` symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPoint<T> {
    pub c: Matrix<T>,
    pub a: Matrix<T>,
}

fn check_square<T: Clone>(m: &Matrix<T>, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!("{what} must be {n}x{n}, got {}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

fn half<T: Field>() -> T {
    T::from_i64(1) / T::from_i64(2)
}

impl<T: Field> GroupElement<T> {
    pub fn new(x: Matrix<T>, g: Matrix<T>) -> Result<Self> {
        let n = g.rows();
        check_square(&g, n, "g")?;
        check_square(&x, n, "x")?;
        if !x.is_symmetric() {
            return Err(Error::Domain("x must be symmetric".into()));
        }
        if !g.det().is_positive() {
            return Err(Error::Domain("det(g) must be positive".into()));
        }
        Ok(GroupElement { x, g })
    }

    pub fn identity(n: usize) -> Self {
        let proto = T::from_i64(0);
        GroupElement { x: Matrix::zeros_like(&proto, n, n), g: Matrix::identity_like(&proto, n) }
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    /// `ǧ = (gᵗ)⁻¹`.
    pub fn g_check(&self) -> Result<Matrix<T>> {
        Ok(self.g.inverse()?.transpose())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Shape("group elements of different sizes".into()));
        }
        let x = &self.x + &(&(&self.g * &other.x) * &self.g.transpose());
        Ok(GroupElement { x, g: &self.g * &other.g })
    }

    pub fn inverse(&self) -> Result<Self> {
        let gi = self.g.inverse()?;
        let x = -&(&(&gi * &self.x) * &gi.transpose());
        Ok(GroupElement { x, g: gi })
    }

    /// `(g, xǧ; 0, ǧ) ∈ Sp(n)`.
    pub fn embed_sp(&self) -> Result<Matrix<T>> {
        let gc = self.g_check()?;
        let n = self.n();
        let top_right = &self.x * &gc;
        let proto = T::from_i64(0);
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => self.g[(i, j)].clone(),
            (true, false) => top_right[(i, j - n)].clone(),
            (false, true) => proto.clone(),
            (false, false) => gc[(i - n, j - n)].clone(),
        }))
    }

    /// `Ad(x,g)(b,a) = (g b gᵗ − {g a g⁻¹ x + (g a g⁻¹ x)ᵗ}, g a g⁻¹)`.
    pub fn adjoint(&self, el: &AlgebraPoint<T>) -> Result<AlgebraPoint<T>> {
        let n = self.n();
        check_square(&el.a, n, "a")?;
        check_square(&el.b, n, "b")?;
        if !el.b.is_symmetric() {
            return Err(Error::Domain("b must be symmetric".into()));
        }
        let gi = self.g.inverse()?;
        let conj = &(&self.g * &el.a) * &gi;
        let m = &conj * &self.x;
        let b = &(&(&self.g * &el.b) * &self.g.transpose()) - &(&m + &m.transpose());
        Ok(AlgebraPoint { b, a: conj })
    }

    /// `Ad*(x,g)(c,a) = (ǧ c g⁻¹, g a g⁻¹ + x ǧ c g⁻¹)`.
    pub fn coadjoint(&self, pt: &DualPoint<T>) -> Result<DualPoint<T>> {
        let n = self.n();
        check_square(&pt.a, n, "a")?;
        check_square(&pt.c, n, "c")?;
        let gi = self.g.inverse()?;
        let gc = gi.transpose();
        let c = &(&gc * &pt.c) * &gi;
        let a = &(&(&self.g * &pt.a) * &gi) + &(&self.x * &c);
        Ok(DualPoint { c, a })
    }
}

pub fn group_multiply<T: Field>(p: &GroupElement<T>, q: &GroupElement<T>) -> Result<GroupElement<T>> {
    p.multiply(q)
}

pub fn embed_sp<T: Field>(p: &GroupElement<T>) -> Result<Matrix<T>> {
    p.embed_sp()
}

pub fn adjoint<T: Field>(p: &GroupElement<T>, el: &AlgebraPoint<T>) -> Result<AlgebraPoint<T>> {
    p.adjoint(el)
}

pub fn coadjoint<T: Field>(p: &GroupElement<T>, pt: &DualPoint<T>) -> Result<DualPoint<T>> {
    p.coadjoint(pt)
}

/// The standard symplectic form `J = (0 I; −I 0)`.
pub fn symplectic_form<T: Field>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            T::from_i64(1)
        } else if i >= n && j + n == i {
            T::from_i64(-1)
        } else {
            T::from_i64(0)
        }
    })
}

impl<T: Field> AlgebraPoint<T> {
    pub fn new(b: Matrix<T>, a: Matrix<T>) -> Result<Self> {
        let n = a.rows();
        check_square(&a, n, "a")?;
        check_square(&b, n, "b")?;
        if !b.is_symmetric() {
            return Err(Error::Domain("b must be symmetric".into()));
        }
        Ok(AlgebraPoint { b, a })
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let n = self.a.rows();
        let zero = T::from_i64(0);
        Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => self.a[(i, j)].clone(),
            (true, false) => self.b[(i, j - n)].clone(),
            (false, true) => zero.clone(),
            (false, false) => -self.a[(j - n, i - n)].clone(),
        })
    }
}

impl<T: Field> DualPoint<T> {
    pub fn new(c: Matrix<T>, a: Matrix<T>) -> Result<Self> {
        let n = a.rows();
        check_square(&a, n, "a")?;
        check_square(&c, n, "c")?;
        if !c.is_symmetric() {
            return Err(Error::Domain("c must be symmetric".into()));
        }
        Ok(DualPoint { c, a })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let n = self.n();
        let zero = T::from_i64(0);
        Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => self.a[(i, j)].clone(),
            (true, false) => zero.clone(),
            (false, true) => self.c[(i - n, j)].clone(),
            (false, false) => -self.a[(j - n, i - n)].clone(),
        })
    }

    /// Sylvester's criterion on `c`.
    pub fn is_positive_definite(&self) -> bool {
        (1..=self.n()).all(|k| {
            let idx: Vec<usize> = (0..k).collect();
            self.c.submatrix(&idx).det().is_positive()
        })
    }

    /// Coordinates in the canonical order `a_ij` (row-major), then `c_ij`, `i ≤ j`.
    pub fn coordinates(&self) -> Vec<T> {
        let n = self.n();
        let mut v = Vec::with_capacity(n * n + n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..n {
                v.push(self.a[(i, j)].clone());
            }
        }
        for i in 0..n {
            for j in i..n {
                v.push(self.c[(i, j)].clone());
            }
        }
        v
    }

    pub fn from_coordinates(n: usize, v: &[T]) -> Result<Self> {
        if v.len() != n * n + n * (n + 1) / 2 {
            return Err(Error::Shape(format!("expected {} coordinates", n * n + n * (n + 1) / 2)));
        }
        let a = Matrix::from_fn(n, n, |i, j| v[i * n + j].clone());
        let mut c = Matrix::filled(n, n, T::from_i64(0));
        let mut k = n * n;
        for i in 0..n {
            for j in i..n {
                c[(i, j)] = v[k].clone();
                c[(j, i)] = v[k].clone();
                k += 1;
            }
        }
        Ok(DualPoint { c, a })
    }

    /// `(I, H)` for the block skew matrix with the given parameters.
    pub fn normal_form_point(n: usize, lambdas: &[T]) -> Self {
        let proto = T::from_i64(0);
        DualPoint { c: Matrix::identity_like(&proto, n), a: block_skew(n, lambdas) }
    }
}

impl DualPoint<Rational> {
    pub fn to_f64(&self) -> DualPoint<f64> {
        DualPoint { c: self.c.map(rational_to_f64), a: self.a.map(rational_to_f64) }
    }
}

impl GroupElement<Rational> {
    pub fn to_f64(&self) -> GroupElement<f64> {
        GroupElement { x: self.x.map(rational_to_f64), g: self.g.map(rational_to_f64) }
    }
}

/// `H` with diagonal blocks `(0 λ_i; −λ_i 0)` and, for odd `n`, a zero last row
/// and column.
pub fn block_skew<T: Field>(n: usize, lambdas: &[T]) -> Matrix<T> {
    let mut h = Matrix::filled(n, n, T::from_i64(0));
    for (i, l) in lambdas.iter().enumerate().take(n / 2) {
        h[(2 * i, 2 * i + 1)] = l.clone();
        h[(2 * i + 1, 2 * i)] = -l.clone();
    }
    h
}

/// Relative residual tolerance for normal forms.
pub const NORMAL_FORM_TOLERANCE: f64 = 1e-9;
/// Minimum spacing between consecutive `|λ_i|` (and from zero) for a regular orbit.
pub const REGULARITY_GAP: f64 = 1e-6;

/// Canonical representative `(I, H)` of the coadjoint orbit of a point of `𝒢⁺`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    /// `λ_1 ≥ λ_2 ≥ ...` by absolute value. Only the last one can be negative,
    /// and only for even `n`: the sign of the Pfaffian is an orbit invariant.
    pub lambdas: Vec<f64>,
    pub h: Matrix<f64>,
    /// `Ad*(witness)(c, a) = (I, H)`.
    pub witness: GroupElement<f64>,
    pub regular: bool,
    /// Max-abs residual of `Ad*(witness)(c, a) − (I, H)`, relative to the input scale.
    pub residual: f64,
}

impl NormalForm {
    pub fn n(&self) -> usize {
        self.h.rows()
    }
}

/// Lower-triangular `L` with `m = L Lᵗ`, or `None` if `m` is not positive definite.
pub fn cholesky(m: &Matrix<f64>) -> Option<Matrix<f64>> {
    let n = m.rows();
    let mut l = Matrix::filled(n, n, 0.0);
    for j in 0..n {
        let mut d = m[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) {
            return None;
        }
        let d = sqrt(d);
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Some(l)
}

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix. Returns the
/// eigenvalues and the eigenvectors as columns.
pub fn symmetric_eigen(m: &Matrix<f64>) -> (Vec<f64>, Matrix<f64>) {
    let n = m.rows();
    let mut a = m.clone();
    let mut v = Matrix::identity_like(&0.0, n);
    let scale = a.as_slice().iter().map(|x| x.abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[(i, j)] * a[(i, j)]).sum();
        if sqrt(off) <= 1e-17 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}

fn sqrt(x: f64) -> f64 {
    num_traits::Float::sqrt(x)
}

fn column(m: &Matrix<f64>, j: usize) -> Vec<f64> {
    (0..m.rows()).map(|i| m[(i, j)]).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn mat_vec(m: &Matrix<f64>, v: &[f64]) -> Vec<f64> {
    (0..m.rows()).map(|i| dot(m.row(i), v)).collect()
}

/// Orthogonal `Q` (det +1) with `Qᵗ S Q` block diagonal, blocks `(0 λ; −λ 0)`
/// sorted by decreasing `|λ|`, zero blocks last.
fn skew_schur(s: &Matrix<f64>) -> Matrix<f64> {
    let n = s.rows();
    let scale = s.as_slice().iter().map(|x| x.abs()).fold(0.0, f64::max);
    let tiny = 1e-13 * scale.max(f64::MIN_POSITIVE);
    let sts = &s.transpose() * s;
    let (vals, vecs) = symmetric_eigen(&sts);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap_or(core::cmp::Ordering::Equal));

    let mut pairs: Vec<(Vec<f64>, Vec<f64>)> = Vec::new();
    let mut kernel: Vec<Vec<f64>> = Vec::new();
    let mut used: Vec<Vec<f64>> = Vec::new();
    let orthonormalize = |mut w: Vec<f64>, used: &[Vec<f64>]| -> Option<Vec<f64>> {
        for _ in 0..2 {
            for u in used {
                let d = dot(&w, u);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= d * ui;
                }
            }
        }
        let norm = sqrt(dot(&w, &w));
        (norm > 0.1).then(|| w.into_iter().map(|x| x / norm).collect())
    };
    let candidates = order.iter().map(|&j| column(&vecs, j)).chain((0..n).map(|j| {
        let mut e = alloc::vec![0.0; n];
        e[j] = 1.0;
        e
    }));
    for cand in candidates {
        if used.len() == n {
            break;
        }
        let Some(u) = orthonormalize(cand, &used) else { continue };
        let su = mat_vec(s, &u);
        let lam = sqrt(dot(&su, &su));
        if lam > tiny && used.len() + 1 < n {
            let v: Vec<f64> = su.iter().map(|x| -x / lam).collect();
            let Some(v) = orthonormalize(v, &used) else { continue };
            used.push(u.clone());
            used.push(v.clone());
            pairs.push((u, v));
        } else {
            used.push(u.clone());
            kernel.push(u);
        }
    }
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    for (u, v) in &pairs {
        cols.push(u.clone());
        cols.push(v.clone());
    }
    cols.extend(kernel.iter().cloned());
    let mut q = Matrix::from_fn(n, n, |i, j| cols[j][i]);
    if q.det() < 0.0 {
        if !kernel.is_empty() {
            let j = n - 1;
            for i in 0..n {
                q[(i, j)] = -q[(i, j)];
            }
        } else {
            // Swap the last pair: flips the sign of the last λ.
            let j = 2 * pairs.len() - 2;
            for i in 0..n {
                let t = q[(i, j)];
                q[(i, j)] = q[(i, j + 1)];
                q[(i, j + 1)] = t;
            }
        }
    }
    q
}

/// Moves a point of `𝒢⁺` to its normal form `(I, H)`.
///
/// 1. `c = gᵗ g` (Cholesky) and `Ad*(0, g)` sends `c` to `I`.
/// 2. `Ad*(−sym(a), I)` removes the symmetric part of `a`.
/// 3. `Ad*(0, O)` with `O ∈ SO(n)` puts the skew matrix in block form.
pub fn normal_form(pt: &DualPoint<f64>) -> Result<NormalForm> {
    let n = pt.n();
    if !pt.c.is_symmetric() {
        return Err(Error::Domain("c must be symmetric".into()));
    }
    let l = cholesky(&pt.c).ok_or_else(|| Error::Domain("c is not positive definite".into()))?;
    let p1 = GroupElement { x: Matrix::filled(n, n, 0.0), g: l.transpose() };
    let pt1 = p1.coadjoint(pt)?;
    let h: f64 = half();
    let p2 = GroupElement { x: -&pt1.a.symmetric_part(&h), g: Matrix::identity_like(&0.0, n) };
    let pt2 = p2.coadjoint(&pt1)?;
    let skew = pt2.a.skew_part(&h);
    let q = skew_schur(&skew);
    let p3 = GroupElement { x: Matrix::filled(n, n, 0.0), g: q.transpose() };
    let witness = p3.multiply(&p2)?.multiply(&p1)?;

    let reached = witness.coadjoint(pt)?;
    let lambdas: Vec<f64> = (0..n / 2).map(|i| reached.a[(2 * i, 2 * i + 1)]).collect();
    let hmat = block_skew(n, &lambdas);
    let target = DualPoint::normal_form_point(n, &lambdas);
    let input_scale = pt.c.as_slice().iter().chain(pt.a.as_slice()).map(|x| x.abs()).fold(1.0, f64::max);
    let residual = (&reached.c - &target.c)
        .as_slice()
        .iter()
        .chain((&reached.a - &target.a).as_slice())
        .map(|x| x.abs())
        .fold(0.0, f64::max)
        / input_scale;
    let regular = is_regular(&lambdas);
    Ok(NormalForm { lambdas, h: hmat, witness, regular, residual })
}

/// Distinct, nonzero `|λ_i|` separated by at least [`REGULARITY_GAP`].
pub fn is_regular(lambdas: &[f64]) -> bool {
    let abs: Vec<f64> = lambdas.iter().map(|l| l.abs()).collect();
    abs.iter().all(|&l| l > REGULARITY_GAP) && abs.windows(2).all(|w| w[0] - w[1] > REGULARITY_GAP)
}

/// The `N×N` matrix whose column `e` holds the coordinates of the
/// infinitesimal coadjoint action `ad*(X_e)ξ = proj_{𝒢₋}[X_e, ξ]`.
pub fn infinitesimal_action_matrix(alg: &LieAlgebra, pt: &DualPoint<Rational>) -> Result<Matrix<Rational>> {
    let n = alg.n();
    check_square(&pt.a, n, "a")?;
    check_square(&pt.c, n, "c")?;
    let xi = pt.to_matrix();
    let cols: Vec<Vec<Rational>> = alg
        .basis
        .elements()
        .iter()
        .map(|x| alg.basis.dual_coordinates(&(&(x * &xi) - &(&xi * x))))
        .collect();
    Ok(Matrix::from_fn(alg.dim(), alg.dim(), |i, j| cols[j][i].clone()))
}

/// Orbit dimension at a rational point, with the regular-orbit reference values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDimension {
    /// Exact rank of the infinitesimal coadjoint action.
    pub computed: usize,
    /// `dim G − k`, the dimension of `G / SO(2)^k`.
    pub regular_value: usize,
    /// `n² − k`, the value printed alongside the `G / SO(2)^k` description.
    pub printed_value: usize,
}

pub fn orbit_dimension(alg: &LieAlgebra, pt: &DualPoint<Rational>) -> Result<OrbitDimension> {
    let n = alg.n();
    let k = n / 2;
    let computed = infinitesimal_action_matrix(alg, pt)?.rank();
    Ok(OrbitDimension { computed, regular_value: alg.dim() - k, printed_value: n * n - k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::vec;

    fn q(rows: Vec<Vec<Rational>>) -> Matrix<Rational> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let p = GroupElement::new(q(vec![vec![int(1), int(2)], vec![int(2), int(0)]]), q(vec![vec![int(2), int(1)], vec![int(0), int(1)]])).unwrap();
        let e = GroupElement::<Rational>::identity(2);
        assert_eq!(p.multiply(&e).unwrap(), p);
        assert_eq!(e.multiply(&p).unwrap(), p);
        assert_eq!(e.embed_sp().unwrap(), Matrix::identity_like(&int(0), 4));
    }

    #[test]
    fn scalar_group_law_matches_blocks() {
        let p = GroupElement::new(q(vec![vec![int(1)]]), q(vec![vec![int(2)]])).unwrap();
        let r = GroupElement::new(q(vec![vec![int(4)]]), q(vec![vec![int(3)]])).unwrap();
        let pr = p.multiply(&r).unwrap();
        // 1 + 2·4·2 = 17
        assert_eq!(pr.x, q(vec![vec![int(17)]]));
        assert_eq!(pr.g, q(vec![vec![int(6)]]));
        assert_eq!(pr.embed_sp().unwrap(), &p.embed_sp().unwrap() * &r.embed_sp().unwrap());
    }

    #[test]
    fn embedding_n1() {
        let p = GroupElement::new(q(vec![vec![int(5)]]), q(vec![vec![int(2)]])).unwrap();
        assert_eq!(p.embed_sp().unwrap(), q(vec![vec![int(2), rat(5, 2)], vec![int(0), rat(1, 2)]]));
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(GroupElement::new(q(vec![vec![int(0)]]), q(vec![vec![int(-1)]])).is_err());
        assert!(GroupElement::new(q(vec![vec![int(0), int(1)], vec![int(0), int(0)]]), Matrix::identity_like(&int(0), 2)).is_err());
    }

    #[test]
    fn coadjoint_examples() {
        let p = GroupElement::new(q(vec![vec![int(1)]]), q(vec![vec![int(2)]])).unwrap();
        let pt = DualPoint::new(q(vec![vec![int(4)]]), q(vec![vec![int(3)]])).unwrap();
        let out = p.coadjoint(&pt).unwrap();
        assert_eq!(out.c, q(vec![vec![int(1)]]));
        assert_eq!(out.a, q(vec![vec![int(4)]]));

        // g = I: (c, a) -> (c, a + x c)
        let x = q(vec![vec![int(1), int(2)], vec![int(2), int(-1)]]);
        let shear = GroupElement::new(x.clone(), Matrix::identity_like(&int(0), 2)).unwrap();
        let c = q(vec![vec![int(2), int(1)], vec![int(1), int(3)]]);
        let a = q(vec![vec![int(0), int(5)], vec![int(-1), int(2)]]);
        let moved = shear.coadjoint(&DualPoint::new(c.clone(), a.clone()).unwrap()).unwrap();
        assert_eq!(moved.c, c);
        assert_eq!(moved.a, &a + &(&x * &c));
    }

    #[test]
    fn adjoint_with_identity_g() {
        // g = I: (b, a) -> (b − (a x + (a x)ᵗ), a), checked against block conjugation.
        let x = q(vec![vec![int(1), int(2)], vec![int(2), int(-1)]]);
        let p = GroupElement::new(x.clone(), Matrix::identity_like(&int(0), 2)).unwrap();
        let el = AlgebraPoint::new(q(vec![vec![int(1), int(0)], vec![int(0), int(2)]]), q(vec![vec![int(3), int(1)], vec![int(4), int(1)]])).unwrap();
        let out = p.adjoint(&el).unwrap();
        let ax = &el.a * &x;
        assert_eq!(out.b, &el.b - &(&ax + &ax.transpose()));
        let m = p.embed_sp().unwrap();
        let conj = &(&m * &el.to_matrix()) * &m.inverse().unwrap();
        assert_eq!(conj, out.to_matrix());
    }

    #[test]
    fn normal_form_fixed_point() {
        let pt = DualPoint::normal_form_point(2, &[1.0]);
        let nf = normal_form(&pt).unwrap();
        assert!((nf.lambdas[0] - 1.0).abs() < 1e-12);
        assert!(nf.residual < NORMAL_FORM_TOLERANCE);
        for (w, e) in nf.witness.g.as_slice().iter().zip(Matrix::identity_like(&0.0, 2).as_slice()) {
            assert!((w - e).abs() < 1e-12);
        }
        assert!(nf.regular);
    }

    #[test]
    fn normal_form_removes_symmetric_part() {
        let pt = DualPoint::new(Matrix::identity_like(&0.0, 2), Matrix::from_rows(vec![vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap()).unwrap();
        let nf = normal_form(&pt).unwrap();
        assert!((nf.lambdas[0] - 1.0).abs() < 1e-12);
        assert!(nf.residual < NORMAL_FORM_TOLERANCE);
    }

    #[test]
    fn negative_pfaffian_keeps_sign() {
        let pt = DualPoint::normal_form_point(2, &[-3.0]);
        let nf = normal_form(&pt).unwrap();
        assert!((nf.lambdas[0] + 3.0).abs() < 1e-12);
        let pt4 = DualPoint::normal_form_point(4, &[1.0, -2.0]);
        let nf4 = normal_form(&pt4).unwrap();
        assert!((nf4.lambdas[0] - 2.0).abs() < 1e-12 && (nf4.lambdas[1] + 1.0).abs() < 1e-12, "{:?}", nf4.lambdas);
    }

    #[test]
    fn normal_form_rejects_indefinite_c() {
        let pt = DualPoint::new(Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap(), Matrix::filled(2, 2, 0.0)).unwrap();
        assert!(matches!(normal_form(&pt), Err(Error::Domain(_))));
    }

    #[test]
    fn orbit_dimension_small() {
        let alg = LieAlgebra::new(2).unwrap();
        let reg = DualPoint::normal_form_point(2, &[int(1)]);
        let d = orbit_dimension(&alg, &reg).unwrap();
        assert_eq!(d, OrbitDimension { computed: 6, regular_value: 6, printed_value: 3 });
        // (I, 0) is fixed by SO(3), so its orbit drops below 15 − 1.
        let alg3 = LieAlgebra::new(3).unwrap();
        let deg = DualPoint::normal_form_point(3, &[int(0)]);
        assert_eq!(orbit_dimension(&alg3, &deg).unwrap().computed, 12);
    }

    #[test]
    fn sylvester() {
        let pd = DualPoint::new(q(vec![vec![int(2), int(1)], vec![int(1), int(1)]]), Matrix::filled(2, 2, int(0))).unwrap();
        assert!(pd.is_positive_definite());
        let nd = DualPoint::new(q(vec![vec![int(1), int(2)], vec![int(2), int(1)]]), Matrix::filled(2, 2, int(0))).unwrap();
        assert!(!nd.is_positive_definite());
    }
}
