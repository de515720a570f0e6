//! Dense row-major matrices over a ring, with exact elimination over fields.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::field::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from row vectors; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Self {
        for c in cols {
            assert_eq!(c.len(), rows, "ragged column");
        }
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn hstack(blocks: &[&Matrix<T>]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack: row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix<T>]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack: column mismatch");
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix<T>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix<T>) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    /// Kronecker product, index `(r, s)` flattened as `r * other.rows + s`.
    pub fn kron(&self, other: &Matrix<T>) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let (r, s) = (i / other.rows, i % other.rows);
            let (c, t) = (j / other.cols, j % other.cols);
            self[(r, c)].clone() * other[(s, t)].clone()
        })
    }

    /// Entries in row-major order as a flat vector.
    pub fn vectorize(&self) -> Vec<T> {
        self.data.clone()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
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

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product: {:?} * {:?}", self.shape(), rhs.shape());
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        let cur = std::mem::replace(&mut out.data[i * rhs.cols + j], T::zero());
                        out.data[i * rhs.cols + j] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
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
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
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

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].try_inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)] * inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    for j in c..m.cols {
                        let t = m[(r, j)];
                        m[(i, j)] = m[(i, j)] - f * t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let reduced = m.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Echelon { reduced, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix<F> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k[(fc, t)] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                k[(pc, t)] = -reduced[(r, fc)];
            }
        }
        k
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solve `self * x = b`; `None` when inconsistent. Free variables are zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::hstack(&[self, &Matrix::from_columns(self.rows, &[b.to_vec()])]);
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced[(r, self.cols)];
        }
        Some(x)
    }

    /// Some `x` with `self * x = rhs`.
    pub fn solve_right(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(rhs.rows, self.rows);
        let cols = rhs.columns().iter().map(|c| self.solve(c)).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(self.cols, &cols))
    }

    /// Some `x` with `x * self = rhs`.
    pub fn solve_left(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        Some(self.transpose().solve_right(&rhs.transpose())?.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(&[self, &Matrix::identity(n)]);
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.block(0, n, n, n))
    }
}

/// Basis of the solution space of a homogeneous linear system given as a
/// closure `x ↦ A x` on `n` unknowns. The constraint matrix is recovered by
/// probing the closure on unit vectors.
pub fn solution_space<F: Field>(n: usize, residual: impl Fn(&[F]) -> Vec<F>) -> Vec<Vec<F>> {
    let mut cols = Vec::with_capacity(n);
    let mut e = vec![F::zero(); n];
    for i in 0..n {
        e[i] = F::one();
        cols.push(residual(&e));
        e[i] = F::zero();
    }
    let rows = cols.first().map_or(0, |c| c.len());
    if rows == 0 {
        return (0..n)
            .map(|i| {
                let mut v = vec![F::zero(); n];
                v[i] = F::one();
                v
            })
            .collect();
    }
    Matrix::from_columns(rows, &cols).kernel().columns()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_rational::Rational64;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn m3(rows: &[&[u64]]) -> Matrix<F3> {
        let cols = rows[0].len();
        Matrix::from_rows(cols, &rows.iter().map(|r| r.iter().map(|&x| F3::new(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_and_kernel() {
        let a = m3(&[&[1, 2, 0], &[2, 1, 0]]);
        let e = a.rref();
        assert_eq!(e.pivots, vec![0]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m3(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let inv = a.inverse().expect("invertible");
        assert_eq!(&a * &inv, Matrix::identity(3));
        let singular = m3(&[&[1, 2], &[2, 1]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_rows(2, &[vec![F2::new(1), F2::new(1)], vec![F2::new(1), F2::new(1)]]);
        assert!(a.solve(&[F2::new(1), F2::new(0)]).is_none());
        let x = a.solve(&[F2::new(1), F2::new(1)]).unwrap();
        assert_eq!(a.apply(&x), vec![F2::new(1), F2::new(1)]);
    }

    #[test]
    fn rational_rank() {
        let r = |n| Rational64::from_integer(n);
        let a = Matrix::from_rows(3, &[vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(1), r(0), r(1)]]);
        assert_eq!(a.rank(), 2);
        assert!((&a * &a.kernel()).is_zero());
    }

    #[test]
    fn kron_indexing() {
        let a = m3(&[&[1, 2], &[0, 1]]);
        let b = m3(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k[(1, 2)], F3::new(2));
        assert_eq!(k[(2, 3)], F3::new(1));
    }
}
