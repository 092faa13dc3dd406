use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::rational::Rational;
use super::scalar::{Field, Ring};
use crate::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: alloc::vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Copy of `self` with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Principal submatrix on the given index set (in order).
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros_like(proto: &T, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, proto.zero_like())
    }

    pub fn identity_like(proto: &T, n: usize) -> Self {
        let z = proto.zero_like();
        let o = proto.one_like();
        Matrix::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    fn proto(&self) -> &T {
        self.data.first().expect("matrix operations need a nonempty matrix")
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = self.proto().zero_like();
        let mut out = Matrix::filled(self.rows, rhs.cols, zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero_elem() {
                        continue;
                    }
                    let cur = core::mem::replace(&mut out[(i, j)], a.zero_like());
                    out[(i, j)] = cur + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = self.proto().zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Matrix::identity_like(self.proto(), self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero_elem()
                    && (0..i).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero_elem)
    }

    pub fn symmetric_part(&self, half: &T) -> Self {
        (self + &self.transpose()).scale(half)
    }

    pub fn skew_part(&self, half: &T) -> Self {
        (self - &self.transpose()).scale(half)
    }

    /// Determinant by cofactor expansion. Division free, so it works over any
    /// commutative ring; cost is exponential, intended for n <= 5.
    pub fn det_expansion(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.rows {
            0 => panic!("determinant of an empty matrix"),
            1 => self[(0, 0)].clone(),
            2 => self[(0, 0)].clone() * self[(1, 1)].clone() - self[(0, 1)].clone() * self[(1, 0)].clone(),
            n => {
                let mut acc = self.proto().zero_like();
                for j in 0..n {
                    let a = &self[(0, j)];
                    if a.is_zero_elem() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, j).det_expansion();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Cofactor matrix `C` with `C[i][j] = (-1)^(i+j) det(minor(i, j))`, so that
    /// `m · Cᵗ = det(m) · I`.
    pub fn cofactor_matrix(&self) -> Self {
        let n = self.rows;
        if n == 1 {
            return Matrix::identity_like(self.proto(), 1);
        }
        Matrix::from_fn(n, n, |i, j| {
            let d = self.minor(i, j).det_expansion();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut best: Option<(usize, f64)> = None;
            for i in r..m.rows {
                let v = &m[(i, c)];
                if !v.is_zero_elem() {
                    let mag = v.magnitude();
                    if best.is_none_or(|(_, b)| mag > b) {
                        best = Some((i, mag));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].one_like() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero_elem() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero_elem() {
                        continue;
                    }
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return Vec::new();
        }
        let proto = self.data.first().map(|x| x.zero_like()).unwrap_or_else(|| T::from_i64(0));
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = alloc::vec![proto.zero_like(); self.cols];
                v[f] = proto.one_like();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = m.proto().one_like();
        for c in 0..n {
            let mut best: Option<(usize, f64)> = None;
            for i in c..n {
                if !m[(i, c)].is_zero_elem() {
                    let mag = m[(i, c)].magnitude();
                    if best.is_none_or(|(_, b)| mag > b) {
                        best = Some((i, mag));
                    }
                }
            }
            let Some((p, _)) = best else { return det.zero_like() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero_elem() {
                    continue;
                }
                let f = m[(i, c)].clone() / piv.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let proto = self.proto().clone();
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                proto.one_like()
            } else {
                proto.zero_like()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Solves `self · x = b` for one particular solution, or `None` if inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let proto = b.first().or(self.data.first())?.zero_like();
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![proto; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

/// Exact null-space basis of a rational matrix.
pub fn rational_kernel(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    m.kernel()
}

pub fn rational_rank(m: &Matrix<Rational>) -> usize {
    m.rank()
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;
    use alloc::vec;

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(rational_kernel(&q(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        assert_eq!(rational_kernel(&q(vec![vec![0, 0, 0], vec![0, 0, 0]])).len(), 3);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = rational_kernel(&q(vec![vec![1, 2], vec![2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(k[0][0].clone() * int(-1), k[0][1].clone() * int(2));
    }

    #[test]
    fn det_routes_agree() {
        let m = q(vec![vec![2, -1, 3], vec![0, 4, 5], vec![1, 1, -2]]);
        assert_eq!(m.det(), m.det_expansion());
        assert_eq!(m.det(), int(-43));
    }

    #[test]
    fn cofactor_identity() {
        let m = q(vec![vec![2, -1, 3], vec![0, 4, 5], vec![1, 1, -2]]);
        let c = m.cofactor_matrix();
        let lhs = &m * &c.transpose();
        assert_eq!(lhs, Matrix::identity_like(&int(0), 3).scale(&m.det()));
    }

    #[test]
    fn inverse_and_singular() {
        let m = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity_like(&int(0), 2));
        assert_eq!(q(vec![vec![1, 2], vec![2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = q(vec![vec![1, 2], vec![2, 4]]);
        assert!(m.solve(&[int(1), int(2)]).is_some());
        assert!(m.solve(&[int(1), int(3)]).is_none());
        let x = q(vec![vec![3, 1], vec![1, 2]]).solve(&[int(5), int(5)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
        let _ = rat(1, 2);
    }
}
