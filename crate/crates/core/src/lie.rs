//! The Lie algebra `𝒢 = Lie(G)` realized inside `sp(n)` as block matrices
//! `(a b; 0 −aᵗ)`, its structure constants, the trace pairing with
//! `𝒢₋ = {(a 0; c −aᵗ)}`, and the Lie–Poisson bracket on `C[𝒢*]`.
//!
//! Coordinates on `𝒢*` are the matrix entries of a point `(c, a) ∈ 𝒢₋`:
//! `a_ij` for all `i, j` and `c_ij` for `i ≤ j`. Basis letters are indexed so
//! that letter `k` and coordinate `k` are dual up to a positive scale:
//! `tr(X_k · ξ) = s_k · v_k(ξ)` with `s_k = 2` except `s_k = 1` for `c_ii`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Matrix, MultiPoly, Rational, Vars};
use crate::{Error, Result};

/// Which block a basis letter lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterKind {
    /// `(E_ji, 0; 0, −E_ij)`, dual to the coordinate `a_ij`.
    Linear { row: usize, col: usize },
    /// `(0, S_ij; 0, 0)` with `S_ii = E_ii`, `S_ij = E_ij + E_ji`; dual to `c_ij`, `i ≤ j`.
    Symmetric { row: usize, col: usize },
}

#[derive(Clone, Debug)]
pub struct LieBasis {
    n: usize,
    kinds: Vec<LetterKind>,
    elements: Vec<Matrix<Rational>>,
    names: Vec<String>,
    scales: Vec<Rational>,
    vars: Vars,
    // Flattened basis matrices, one column per letter, for exact coordinate solves.
    columns: Matrix<Rational>,
}

/// Sparse structure constants: `[X_i, X_j] = Σ_k c_ij^k X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero entries `(k, c_ij^k)` of `[X_i, X_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i][j].iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// All nonzero `(i, j, k, c_ij^k)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.table.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().flat_map(move |(j, v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |r, c| if r == i && c == j { Rational::one() } else { Rational::zero() })
}

/// Assembles `(tl tr; bl br)` from four `n×n` blocks.
pub fn block(tl: &Matrix<Rational>, tr: &Matrix<Rational>, bl: &Matrix<Rational>, br: &Matrix<Rational>) -> Matrix<Rational> {
    let n = tl.rows();
    Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => tl[(i, j)].clone(),
        (true, false) => tr[(i, j - n)].clone(),
        (false, true) => bl[(i - n, j)].clone(),
        (false, false) => br[(i - n, j - n)].clone(),
    })
}

/// Splits a `2n×2n` matrix into its four `n×n` blocks.
pub fn blocks<T: Clone>(m: &Matrix<T>) -> [Matrix<T>; 4] {
    let n = m.rows() / 2;
    [
        Matrix::from_fn(n, n, |i, j| m[(i, j)].clone()),
        Matrix::from_fn(n, n, |i, j| m[(i, j + n)].clone()),
        Matrix::from_fn(n, n, |i, j| m[(i + n, j)].clone()),
        Matrix::from_fn(n, n, |i, j| m[(i + n, j + n)].clone()),
    ]
}

/// Coordinate names in canonical order: `a_ij` row-major, then `c_ij` for `i ≤ j`.
pub fn coordinate_names(n: usize) -> Vec<String> {
    let fmt = |p: char, i: usize, j: usize| {
        if n < 10 {
            format!("{p}{}{}", i + 1, j + 1)
        } else {
            format!("{p}_{}_{}", i + 1, j + 1)
        }
    };
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(fmt('a', i, j));
        }
    }
    for i in 0..n {
        for j in i..n {
            names.push(fmt('c', i, j));
        }
    }
    names
}

impl LieBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = n² + n(n+1)/2`.
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn kind(&self, k: usize) -> LetterKind {
        self.kinds[k]
    }

    pub fn kinds(&self) -> &[LetterKind] {
        &self.kinds
    }

    pub fn element(&self, k: usize) -> &Matrix<Rational> {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[Matrix<Rational>] {
        &self.elements
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Scale `s_k` with `tr(X_k ξ) = s_k v_k(ξ)`.
    pub fn scale(&self, k: usize) -> &Rational {
        &self.scales[k]
    }

    pub fn scales(&self) -> &[Rational] {
        &self.scales
    }

    /// The coordinate ring `C[𝒢*]` variable list.
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Index of the coordinate `a_ij`.
    pub fn a_index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// Index of the coordinate `c_ij` (either order of `i`, `j`).
    pub fn c_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let n = self.n;
        n * n + i * n - i * i.saturating_sub(1) / 2 + (j - i)
    }

    /// Exact coordinates of `z` in the basis, or `None` if `z ∉ 𝒢`.
    pub fn coordinates(&self, z: &Matrix<Rational>) -> Option<Vec<Rational>> {
        if z.rows() != 2 * self.n || z.cols() != 2 * self.n {
            return None;
        }
        self.columns.solve(z.as_slice())
    }

    /// `Σ_k coeffs[k] X_k`.
    pub fn combine(&self, coeffs: &[Rational]) -> Matrix<Rational> {
        let mut acc = Matrix::zeros_like(&Rational::zero(), 2 * self.n, 2 * self.n);
        for (c, x) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                acc = &acc + &x.scale(c);
            }
        }
        acc
    }

    /// The element `(a 0; c −aᵗ)` of `𝒢₋` representing the point `(c, a)`.
    pub fn dual_matrix(&self, c: &Matrix<Rational>, a: &Matrix<Rational>) -> Matrix<Rational> {
        let z = Matrix::zeros_like(&Rational::zero(), self.n, self.n);
        block(a, &z, c, &(-&a.transpose()))
    }

    /// Basis of `𝒢₋` dual to the coordinates: `Y_k` has `v_l(Y_k) = δ_kl`.
    pub fn dual_element(&self, k: usize) -> Matrix<Rational> {
        let n = self.n;
        let zero = Matrix::zeros_like(&Rational::zero(), n, n);
        match self.kinds[k] {
            LetterKind::Linear { row, col } => self.dual_matrix(&zero, &elementary(n, row, col)),
            LetterKind::Symmetric { row, col } => {
                let mut s = elementary(n, row, col);
                if row != col {
                    s = &s + &elementary(n, col, row);
                }
                self.dual_matrix(&s, &zero)
            }
        }
    }

    /// Coordinates `v_k` of the `𝒢₋` component of a `2n×2n` matrix: `a` is read
    /// from the top-left block, `c` from the bottom-left block. This is the
    /// projection along the annihilator of `𝒢` under the trace pairing.
    pub fn dual_coordinates(&self, z: &Matrix<Rational>) -> Vec<Rational> {
        let n = self.n;
        self.kinds
            .iter()
            .map(|k| match *k {
                LetterKind::Linear { row, col } => z[(row, col)].clone(),
                LetterKind::Symmetric { row, col } => z[(n + row, col)].clone(),
            })
            .collect()
    }

    /// Matrix of `tr(X_k Y_l)` between the `𝒢` basis and the dual `𝒢₋` basis.
    pub fn pairing_matrix(&self) -> Matrix<Rational> {
        let duals: Vec<_> = (0..self.dim()).map(|l| self.dual_element(l)).collect();
        Matrix::from_fn(self.dim(), self.dim(), |k, l| {
            trace_pairing(&self.elements[k], &duals[l]).expect("square blocks")
        })
    }

    /// The linear function `x_k = tr(X_k ·) = s_k v_k` on `𝒢*`.
    pub fn letter_function(&self, k: usize) -> MultiPoly {
        MultiPoly::var(&self.vars, k).scale(&self.scales[k])
    }
}

/// Builds the basis of `𝒢` in canonical letter order and its structure
/// constants, by exact commutators solved back against the basis.
pub fn build_lie_basis(n: usize) -> Result<(LieBasis, StructureConstants)> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let zero = Matrix::zeros_like(&Rational::zero(), n, n);
    let mut kinds = Vec::new();
    let mut elements = Vec::new();
    let mut scales = Vec::new();
    for i in 0..n {
        for j in 0..n {
            kinds.push(LetterKind::Linear { row: i, col: j });
            let e = elementary(n, j, i);
            elements.push(block(&e, &zero, &zero, &(-&e.transpose())));
            scales.push(int(2));
        }
    }
    for i in 0..n {
        for j in i..n {
            kinds.push(LetterKind::Symmetric { row: i, col: j });
            let mut s = elementary(n, i, j);
            if i != j {
                s = &s + &elementary(n, j, i);
            }
            elements.push(block(&zero, &s, &zero, &zero));
            scales.push(if i == j { int(1) } else { int(2) });
        }
    }
    let dim = elements.len();
    let names = coordinate_names(n);
    let vars = Vars::new(names.clone());
    let side = 2 * n;
    let columns = Matrix::from_fn(side * side, dim, |r, k| elements[k].as_slice()[r].clone());
    let basis = LieBasis { n, kinds, elements, names, scales, vars, columns };

    let mut table = alloc::vec![alloc::vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let (xi, xj) = (&basis.elements[i], &basis.elements[j]);
            let comm = &(xi * xj) - &(xj * xi);
            let coords = basis
                .coordinates(&comm)
                .ok_or_else(|| Error::Construction(format!("[X_{i}, X_{j}] left the subalgebra")))?;
            table[i][j] = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    Ok((basis, StructureConstants { dim, table }))
}

/// `⟨A, B⟩ = tr(AB)`.
pub fn trace_pairing(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Result<Rational> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::Shape(format!(
            "cannot pair {}x{} with {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut acc = Rational::zero();
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            acc += &a[(i, k)] * &b[(k, i)];
        }
    }
    Ok(acc)
}

/// Basis, structure constants and the Lie–Poisson tensor on `C[𝒢*]`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub basis: LieBasis,
    pub constants: StructureConstants,
    // poisson[i][j] = {v_i, v_j}, a linear polynomial.
    poisson: Vec<Vec<MultiPoly>>,
}

impl LieAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        let (basis, constants) = build_lie_basis(n)?;
        let dim = basis.dim();
        let vars = basis.vars().clone();
        // Sign convention: {x_i, x_j} = +Σ_k c_ij^k x_k for x_k = tr(X_k ·). In the
        // scaled coordinates this reads {v_i, v_j} = Σ_k c_ij^k s_k / (s_i s_j) v_k.
        // It makes x_i ⋆ x_j − x_j ⋆ x_i = h {x_i, x_j} with XY − YX = h[X, Y].
        let poisson = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut p = MultiPoly::zero(&vars);
                        let denom = basis.scale(i) * basis.scale(j);
                        for (k, c) in constants.bracket(i, j) {
                            p.add_term(crate::arith::Monomial::var(dim, *k), c * basis.scale(*k) / &denom);
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        Ok(LieAlgebra { basis, constants, poisson })
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn vars(&self) -> &Vars {
        self.basis.vars()
    }

    /// `{v_i, v_j}` as a linear polynomial.
    pub fn coordinate_bracket(&self, i: usize, j: usize) -> &MultiPoly {
        &self.poisson[i][j]
    }

    /// Value at a point of the Poisson tensor `({v_i, v_j})_{ij}`.
    pub fn poisson_matrix_at(&self, point: &[Rational]) -> Matrix<Rational> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| self.poisson[i][j].eval(point))
    }
}

/// `{F, G} = Σ_{i,j} {v_i, v_j} ∂_i F ∂_j G`.
pub fn lie_poisson_bracket(f: &MultiPoly, g: &MultiPoly, alg: &LieAlgebra) -> Result<MultiPoly> {
    if f.vars() != alg.vars() || g.vars() != alg.vars() {
        return Err(Error::VariableMismatch);
    }
    let dim = alg.dim();
    let df: Vec<(usize, MultiPoly)> = (0..dim).map(|i| (i, f.partial(i))).filter(|(_, p)| !p.is_zero()).collect();
    let dg: Vec<(usize, MultiPoly)> = (0..dim).map(|j| (j, g.partial(j))).filter(|(_, p)| !p.is_zero()).collect();
    let mut acc = MultiPoly::zero(alg.vars());
    for (i, fi) in &df {
        for (j, gj) in &dg {
            let b = alg.coordinate_bracket(*i, *j);
            if b.is_zero() {
                continue;
            }
            acc = acc + &(b * fi) * gj;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_formula() {
        for n in 1..=4 {
            let (b, _) = build_lie_basis(n).unwrap();
            assert_eq!(b.dim(), n * n + n * (n + 1) / 2);
        }
    }

    #[test]
    fn n1_bracket() {
        // A = diag(1, -1), B = E_12: [A, B] = 2B.
        let (b, sc) = build_lie_basis(1).unwrap();
        assert_eq!(b.element(0), &Matrix::from_rows(alloc::vec![alloc::vec![int(1), int(0)], alloc::vec![int(0), int(-1)]]).unwrap());
        assert_eq!(sc.bracket(0, 1), &[(1, int(2))]);
        assert_eq!(sc.bracket(1, 0), &[(1, int(-2))]);
    }

    #[test]
    fn c_index_matches_names() {
        for n in 1..=4 {
            let (b, _) = build_lie_basis(n).unwrap();
            for i in 0..n {
                for j in i..n {
                    let name = &b.names()[b.c_index(i, j)];
                    assert_eq!(name, &coordinate_names(n)[b.c_index(j, i)]);
                    assert_eq!(b.kind(b.c_index(i, j)), LetterKind::Symmetric { row: i, col: j });
                }
                for j in 0..n {
                    assert_eq!(b.kind(b.a_index(i, j)), LetterKind::Linear { row: i, col: j });
                }
            }
        }
    }

    #[test]
    fn pairing_is_diagonal_with_scales() {
        let (b, _) = build_lie_basis(2).unwrap();
        let p = b.pairing_matrix();
        for k in 0..b.dim() {
            for l in 0..b.dim() {
                let want = if k == l { b.scale(k).clone() } else { Rational::zero() };
                assert_eq!(p[(k, l)], want);
            }
        }
        assert!(!p.det().is_zero());
    }

    #[test]
    fn trace_pairing_examples() {
        let a = Matrix::from_rows(alloc::vec![alloc::vec![int(1), int(0)], alloc::vec![int(0), int(-1)]]).unwrap();
        assert_eq!(trace_pairing(&a, &a).unwrap(), int(2));
        let nil = Matrix::from_rows(alloc::vec![alloc::vec![int(0), int(3)], alloc::vec![int(0), int(0)]]).unwrap();
        assert_eq!(trace_pairing(&nil, &nil).unwrap(), int(0));
        let big = Matrix::zeros_like(&int(0), 3, 3);
        assert!(matches!(trace_pairing(&a, &big), Err(Error::Shape(_))));
    }

    #[test]
    fn n1_poisson() {
        let alg = LieAlgebra::new(1).unwrap();
        let xa = alg.basis.letter_function(0);
        let xb = alg.basis.letter_function(1);
        assert_eq!(lie_poisson_bracket(&xa, &xb, &alg).unwrap(), xb.scale(&int(2)));
    }
}
