//! Subspaces of `F^n` stored canonically in reduced row echelon form.
//!
//! Two subspaces are equal iff their stored bases are equal, so subobject
//! comparisons elsewhere in the crate are plain `==`.

use crate::field::{Field, FiniteField};
use crate::matrix::{Echelon, Matrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    /// Reduced echelon basis, one vector per row.
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[F]>,
    {
        let rows: Vec<Vec<F>> = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        Self::from_row_matrix(&Matrix::from_rows(ambient, &rows))
    }

    /// Row space of `m`.
    pub fn from_row_matrix(m: &Matrix<F>) -> Self {
        let Echelon { reduced, pivots } = m.rref();
        Subspace { ambient: m.cols(), basis: reduced, pivots }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::from_row_matrix(&m.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        self.basis.transpose()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                    *x = *x - *ci * *b;
                }
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of every column of `m` (which must lie in the subspace).
    pub fn coords_matrix(&self, m: &Matrix<F>) -> Option<Matrix<F>> {
        let cols = m.columns().iter().map(|c| self.coords(c)).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(self.dim(), &cols))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.ambient == self.ambient && (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Self {
        assert_eq!(self.ambient, other.ambient);
        Self::from_row_matrix(&Matrix::vstack(&[&self.basis, &other.basis]))
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let b = self.basis_matrix();
        let q = other.quotient().projection;
        let k = (&q * &b).kernel();
        Self::column_space(&(&b * &k))
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn image(&self, f: &Matrix<F>) -> Self {
        assert_eq!(f.cols(), self.ambient);
        let img = f * &self.basis_matrix();
        Subspace::column_space(&img).with_ambient(f.rows())
    }

    /// `{ v : f v ∈ target }`.
    pub fn preimage(f: &Matrix<F>, target: &Subspace<F>) -> Self {
        assert_eq!(f.rows(), target.ambient);
        let q = target.quotient().projection;
        Subspace::column_space(&(&q * f).kernel()).with_ambient(f.cols())
    }

    fn with_ambient(mut self, n: usize) -> Self {
        if self.dim() == 0 {
            self.ambient = n;
            self.basis = Matrix::zeros(0, n);
        }
        self
    }

    /// Quotient data `F^n → F^n / self` using the standard complement spanned
    /// by the non-pivot coordinates.
    pub fn quotient(&self) -> Quotient<F> {
        let n = self.ambient;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut projection = Matrix::zeros(free.len(), n);
        let mut section = Matrix::zeros(n, free.len());
        for (t, &fc) in free.iter().enumerate() {
            projection[(t, fc)] = F::one();
            section[(fc, t)] = F::one();
            for (i, &pc) in self.pivots.iter().enumerate() {
                projection[(t, pc)] = -self.basis[(i, fc)];
            }
        }
        Quotient { projection, section }
    }

    /// Express a subspace contained in `self` in `self`'s coordinates.
    pub fn relative(&self, inner: &Subspace<F>) -> Option<Subspace<F>> {
        let m = self.coords_matrix(&inner.basis_matrix())?;
        Some(Subspace::column_space(&m).with_ambient(self.dim()))
    }
}

impl<F: FiniteField> Subspace<F> {
    /// Representatives of the nonzero cosets of `F^n / self` up to scalars:
    /// combinations of the complement coordinates whose leading coefficient is 1.
    pub fn complement_directions(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        let q = F::order();
        let m = free.len();
        let mut out = Vec::new();
        let total = q.checked_pow(m as u32).unwrap_or(u64::MAX);
        for code in 1..total {
            let mut digits = Vec::with_capacity(m);
            let mut c = code;
            for _ in 0..m {
                digits.push(F::from_u64(c % q));
                c /= q;
            }
            // Leading (highest index) nonzero digit must be one.
            let lead = digits.iter().rev().find(|d| !d.is_zero()).copied();
            if lead != Some(F::one()) {
                continue;
            }
            let mut v = vec![F::zero(); self.ambient];
            for (d, &fc) in digits.iter().zip(&free) {
                v[fc] = *d;
            }
            out.push(v);
        }
        out
    }
}

/// A linear surjection onto a quotient space together with a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<F> {
    /// `(n - k) x n`; kills the subspace.
    pub projection: Matrix<F>,
    /// `n x (n - k)`; `projection * section = 1`.
    pub section: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}
