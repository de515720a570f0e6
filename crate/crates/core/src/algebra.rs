//! Finite-dimensional associative unital algebras given by structure constants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::matrix::Matrix;
use crate::module::ModuleRep;
use crate::subspace::Subspace;

/// An associative unital algebra over `F` with a fixed basis `b_0..b_{n-1}`.
///
/// `b_i · b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    labels: Vec<String>,
    table: Vec<Vec<F>>,
    unit: Vec<F>,
}

/// Unvalidated structure-constant data.
#[derive(Clone, Debug)]
pub struct AlgebraTable<F> {
    pub labels: Vec<String>,
    /// Sparse `(i, j, k, c)` entries: `b_i b_j` has coefficient `c` on `b_k`.
    /// Repeated entries accumulate.
    pub products: Vec<(usize, usize, usize, F)>,
    pub unit: Vec<F>,
}

impl<F: FiniteField> AlgebraTable<F> {
    pub fn validate(&self) -> Result<Algebra<F>> {
        let n = self.labels.len();
        let mut table = vec![vec![F::zero(); n]; n * n];
        for &(i, j, k, c) in &self.products {
            if i >= n || j >= n || k >= n {
                return Err(Error::DimensionMismatch(format!(
                    "product entry ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            table[i * n + j][k] = table[i * n + j][k] + c;
        }
        Algebra::new(self.labels.clone(), table, self.unit.clone())
    }
}

impl<F: FiniteField> Algebra<F> {
    /// Validates primality, unit and associativity exhaustively on basis triples.
    pub fn new(labels: Vec<String>, table: Vec<Vec<F>>, unit: Vec<F>) -> Result<Self> {
        if !F::is_valid() {
            return Err(Error::NotPrimeCharacteristic(F::characteristic()));
        }
        let n = labels.len();
        if table.len() != n * n || table.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch(format!("structure table must be {n}x{n}x{n}")));
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!("unit must have length {n}")));
        }
        let alg = Algebra { labels, table, unit };
        for i in 0..n {
            let bi = alg.basis_vector(i);
            if alg.mul(&alg.unit, &bi) != bi || alg.mul(&bi, &alg.unit) != bi {
                return Err(Error::NoUnit);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = alg.product(i, j).to_vec();
                for k in 0..n {
                    let left = alg.mul(&ij, &alg.basis_vector(k));
                    let right = alg.mul(&alg.basis_vector(i), alg.product(j, k));
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// Coefficients of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, &t) in out.iter_mut().zip(self.product(i, j)) {
                    *o = *o + c * t;
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x·a` on coordinate columns.
    pub fn right_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|k| self.mul(&self.basis_vector(k), a)).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `x ↦ a·x` on coordinate columns.
    pub fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|k| self.mul(a, &self.basis_vector(k))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// The right regular module `A_A`.
    pub fn regular_module(&self) -> ModuleRep<F> {
        let action = (0..self.dim()).map(|i| self.right_mult(&self.basis_vector(i))).collect();
        ModuleRep::from_action_unchecked(self.dim(), action)
    }

    /// Sparse `(i, j, k, c)` listing of the nonzero structure constants.
    pub fn sparse_table(&self) -> Vec<(usize, usize, usize, u64)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.to_u64()));
                    }
                }
            }
        }
        out
    }

    pub fn table_report(&self) -> AlgebraReport {
        AlgebraReport {
            p: F::characteristic(),
            basis: self.labels.clone(),
            mul: self.sparse_table().into_iter().map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c]).collect(),
            unit: self.unit.iter().map(|c| c.to_u64()).collect(),
        }
    }
}

/// Serializable view of an algebra in the sparse quadruple format.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraReport {
    pub p: u64,
    pub basis: Vec<String>,
    pub mul: Vec<[u64; 4]>,
    pub unit: Vec<u64>,
}

/// A two-sided ideal, stored as a subspace of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F> {
    space: Subspace<F>,
}

impl<F: FiniteField> Ideal<F> {
    pub fn new(alg: &Algebra<F>, vectors: &[Vec<F>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != alg.dim()) {
            return Err(Error::BadIdealBasis);
        }
        let space = Subspace::span(alg.dim(), vectors);
        if space.dim() != vectors.len() {
            return Err(Error::BadIdealBasis);
        }
        for x in space.basis_vectors() {
            for i in 0..alg.dim() {
                let b = alg.basis_vector(i);
                if !space.contains(&alg.mul(&x, &b)) || !space.contains(&alg.mul(&b, &x)) {
                    return Err(Error::NotTwoSided);
                }
            }
        }
        Ok(Ideal { space })
    }

    pub fn zero(alg: &Algebra<F>) -> Self {
        Ideal { space: Subspace::zero(alg.dim()) }
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Ideal basis vectors in algebra coordinates (the echelon basis).
    pub fn basis(&self) -> Vec<Vec<F>> {
        self.space.basis_vectors()
    }

    pub fn is_square_zero(&self, alg: &Algebra<F>) -> bool {
        let b = self.basis();
        b.iter().all(|x| b.iter().all(|y| alg.mul(x, y).iter().all(|c| c.is_zero())))
    }

    /// Matrix of `x ↦ a·x` on the ideal, in ideal coordinates.
    pub fn left_action(&self, alg: &Algebra<F>, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> =
            self.basis().iter().map(|x| self.space.coords(&alg.mul(a, x)).expect("two-sided ideal")).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `x ↦ x·a` on the ideal, in ideal coordinates.
    pub fn right_action(&self, alg: &Algebra<F>, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> =
            self.basis().iter().map(|x| self.space.coords(&alg.mul(x, a)).expect("two-sided ideal")).collect();
        Matrix::from_columns(self.dim(), &cols)
    }
}

/// `A/I` with its basis of coset representatives.
///
/// Representatives are the standard basis vectors of `A` at the non-pivot
/// columns of the ideal's echelon basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F> {
    pub algebra: Algebra<F>,
    /// `dim A x dim A/I`; column `t` is the representative of the `t`-th basis coset.
    pub representatives: Matrix<F>,
    /// `dim A/I x dim A`; kills `I`.
    pub projection: Matrix<F>,
}

impl<F: FiniteField> QuotientAlgebra<F> {
    pub fn new(alg: &Algebra<F>, ideal: &Ideal<F>) -> Result<Self> {
        let q = ideal.space().quotient();
        let reps = q.section.columns();
        let free: Vec<usize> = (0..alg.dim()).filter(|c| !ideal.space().pivots().contains(c)).collect();
        let labels: Vec<String> = free.iter().map(|&c| format!("[{}]", alg.labels()[c])).collect();
        let m = labels.len();
        let mut table = Vec::with_capacity(m * m);
        for s in 0..m {
            for t in 0..m {
                table.push(q.projection.apply(&alg.mul(&reps[s], &reps[t])));
            }
        }
        let unit = q.projection.apply(alg.unit());
        let algebra = Algebra::new(labels, table, unit)?;
        Ok(QuotientAlgebra { algebra, representatives: q.section, projection: q.projection })
    }

    pub fn representative(&self, t: usize) -> Vec<F> {
        self.representatives.column(t)
    }
}

/// Small algebras used by fixtures and tests.
pub mod known {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn one<F: FiniteField>() -> F {
        F::one()
    }

    /// The ground field, basis `{1}`.
    pub fn ground_field<F: FiniteField>() -> Algebra<F> {
        AlgebraTable { labels: labels(&["1"]), products: vec![(0, 0, 0, one())], unit: vec![one()] }
            .validate()
            .expect("ground field")
    }

    /// `F[t]/(t^2)` with basis `{1, t}`.
    pub fn dual_numbers<F: FiniteField>() -> Algebra<F> {
        AlgebraTable {
            labels: labels(&["1", "t"]),
            products: vec![(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one())],
            unit: vec![one(), F::zero()],
        }
        .validate()
        .expect("dual numbers")
    }

    /// `F[x,y]/(x^2, xy, y^2)` with basis `{1, x, y}`.
    pub fn fat_point<F: FiniteField>() -> Algebra<F> {
        AlgebraTable {
            labels: labels(&["1", "x", "y"]),
            products: vec![(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one()), (0, 2, 2, one()), (2, 0, 2, one())],
            unit: vec![one(), F::zero(), F::zero()],
        }
        .validate()
        .expect("fat point")
    }

    /// Upper-triangular 2x2 matrices with basis `{e11, e12, e22}`.
    pub fn upper_triangular2<F: FiniteField>() -> Algebra<F> {
        AlgebraTable {
            labels: labels(&["e11", "e12", "e22"]),
            products: vec![(0, 0, 0, one()), (0, 1, 1, one()), (1, 2, 1, one()), (2, 2, 2, one())],
            unit: vec![one(), F::zero(), one()],
        }
        .validate()
        .expect("upper triangular")
    }

    /// `F × F` with basis of the two idempotents.
    pub fn split_product<F: FiniteField>() -> Algebra<F> {
        AlgebraTable {
            labels: labels(&["e1", "e2"]),
            products: vec![(0, 0, 0, one()), (1, 1, 1, one())],
            unit: vec![one(), one()],
        }
        .validate()
        .expect("split product")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F2 = Fp<2>;

    fn f(x: u64) -> F2 {
        F2::new(x)
    }

    #[test]
    fn dual_numbers_valid() {
        let a = known::dual_numbers::<F2>();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.product(1, 1), &[f(0), f(0)]);
    }

    #[test]
    fn triangular_valid() {
        let a = known::upper_triangular2::<F2>();
        assert_eq!(a.dim(), 3);
        // e12 e11 = 0, e11 e12 = e12
        assert_eq!(a.product(1, 0), &[f(0), f(0), f(0)]);
        assert_eq!(a.product(0, 1), &[f(0), f(1), f(0)]);
    }

    #[test]
    fn detects_non_associativity() {
        // e unit, a·a = b, a·b = 0, b·a = a: (aa)a = a but a(aa) = 0.
        let t = AlgebraTable {
            labels: vec!["e".into(), "a".into(), "b".into()],
            products: vec![
                (0, 0, 0, f(1)),
                (0, 1, 1, f(1)),
                (1, 0, 1, f(1)),
                (0, 2, 2, f(1)),
                (2, 0, 2, f(1)),
                (1, 1, 2, f(1)),
                (2, 1, 1, f(1)),
            ],
            unit: vec![f(1), f(0), f(0)],
        };
        assert!(matches!(t.validate(), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn detects_missing_unit() {
        let t = AlgebraTable {
            labels: vec!["1".into(), "t".into()],
            products: vec![(0, 0, 0, f(1)), (0, 1, 1, f(1))],
            unit: vec![f(1), f(0)],
        };
        assert_eq!(t.validate(), Err(Error::NoUnit));
    }

    #[test]
    fn rejects_composite_modulus() {
        let t = AlgebraTable::<Fp<4>> {
            labels: vec!["1".into()],
            products: vec![(0, 0, 0, Fp::new(1))],
            unit: vec![Fp::new(1)],
        };
        assert_eq!(t.validate(), Err(Error::NotPrimeCharacteristic(4)));
    }

    #[test]
    fn ideals() {
        let a = known::dual_numbers::<F2>();
        let i = Ideal::new(&a, &[vec![f(0), f(1)]]).unwrap();
        assert!(i.is_square_zero(&a));
        let whole = Ideal::new(&a, &[vec![f(1), f(0)], vec![f(0), f(1)]]).unwrap();
        assert!(!whole.is_square_zero(&a));

        let tri = known::upper_triangular2::<F2>();
        // span{e11} is only a one-sided ideal
        assert_eq!(Ideal::new(&tri, &[vec![f(1), f(0), f(0)]]), Err(Error::NotTwoSided));
    }

    #[test]
    fn quotient_algebra() {
        let tri = known::upper_triangular2::<F2>();
        let i = Ideal::new(&tri, &[vec![f(0), f(1), f(0)]]).unwrap();
        let q = QuotientAlgebra::new(&tri, &i).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(q.algebra.labels(), &["[e11]".to_string(), "[e22]".to_string()]);
        assert_eq!(q.algebra.unit(), &[f(1), f(1)]);
    }
}
