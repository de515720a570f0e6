//! Finite-dimensional right modules and their morphisms.
//!
//! Convention: elements are column vectors and `x·b_i = action[i] * x`.
//! Because the action is on the right, `action(a·b) = action(b) * action(a)`.
//! A morphism `f: M → N` is a `dim N x dim M` matrix with
//! `f * action_M(b) = action_N(b) * f` for every basis element `b`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleRep<F> {
    dim: usize,
    action: Vec<Matrix<F>>,
}

impl<F: Field> ModuleRep<F> {
    pub fn from_action_unchecked(dim: usize, action: Vec<Matrix<F>>) -> Self {
        debug_assert!(action.iter().all(|m| m.shape() == (dim, dim)));
        ModuleRep { dim, action }
    }

    /// The zero module over an algebra with `n` basis elements.
    pub fn zero(n: usize) -> Self {
        ModuleRep { dim: 0, action: vec![Matrix::zeros(0, 0); n] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Number of algebra basis elements this module is defined over.
    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.action
    }

    /// Action matrix of the algebra element with coordinates `a`.
    pub fn act(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, r) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                m = &m + &r.scale(c);
            }
        }
        m
    }

    pub fn direct_sum(&self, other: &ModuleRep<F>) -> Self {
        assert_eq!(self.algebra_dim(), other.algebra_dim());
        let action = self.action.iter().zip(&other.action).map(|(a, b)| Matrix::block_diag(&[a, b])).collect();
        ModuleRep { dim: self.dim + other.dim, action }
    }

    /// Transport the module along an invertible `basis` (columns = new basis
    /// in old coordinates). Returns the new module and the isomorphism
    /// new → old, whose matrix is `basis`.
    pub fn change_basis(&self, basis: &Matrix<F>) -> (ModuleRep<F>, ModuleHom<F>) {
        let inv = basis.inverse().expect("change of basis must be invertible");
        let action = self.action.iter().map(|r| &(&inv * r) * basis).collect();
        let new = ModuleRep { dim: self.dim, action };
        let iso = ModuleHom::new_unchecked(new.clone(), self.clone(), basis.clone());
        (new, iso)
    }

    pub fn is_submodule(&self, w: &Subspace<F>) -> bool {
        let b = w.basis_matrix();
        self.action.iter().all(|r| {
            let img = r * &b;
            img.columns().iter().all(|c| w.contains(c))
        })
    }

    /// The smallest submodule containing `w`.
    pub fn closure(&self, w: &Subspace<F>) -> Subspace<F> {
        let mut cur = w.clone();
        loop {
            let b = cur.basis_matrix();
            let mut next = cur.clone();
            for r in &self.action {
                next = next.sum(&Subspace::column_space(&(r * &b)));
            }
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// The submodule generated by `vectors`.
    pub fn generated(&self, vectors: &[Vec<F>]) -> Subspace<F> {
        self.closure(&Subspace::span(self.dim, vectors))
    }

    /// Restriction to a submodule in its echelon basis, with the inclusion.
    pub fn submodule(&self, w: &Subspace<F>) -> Result<(ModuleRep<F>, ModuleHom<F>)> {
        if w.ambient() != self.dim {
            return Err(Error::DimensionMismatch("subspace ambient".into()));
        }
        let b = w.basis_matrix();
        let mut action = Vec::with_capacity(self.action.len());
        for r in &self.action {
            action.push(w.coords_matrix(&(r * &b)).ok_or(Error::NotSubmodule)?);
        }
        let sub = ModuleRep { dim: w.dim(), action };
        Ok((sub.clone(), ModuleHom::new_unchecked(sub, self.clone(), b)))
    }

    /// Quotient by a submodule, with the projection.
    pub fn quotient(&self, w: &Subspace<F>) -> Result<(ModuleRep<F>, ModuleHom<F>)> {
        if !self.is_submodule(w) {
            return Err(Error::NotSubmodule);
        }
        let q = w.quotient();
        let action = self.action.iter().map(|r| &(&q.projection * r) * &q.section).collect();
        let quo = ModuleRep { dim: q.dim(), action };
        Ok((quo.clone(), ModuleHom::new_unchecked(self.clone(), quo, q.projection)))
    }

    /// `upper / lower` for submodules `lower ⊆ upper`.
    pub fn subquotient(&self, upper: &Subspace<F>, lower: &Subspace<F>) -> Result<ModuleRep<F>> {
        let (u, _) = self.submodule(upper)?;
        let rel = upper.relative(lower).ok_or(Error::NotSubmodule)?;
        Ok(u.quotient(&rel)?.0)
    }

    /// Basis of `Hom(self, other)`.
    pub fn hom_space(&self, other: &ModuleRep<F>) -> Vec<Matrix<F>> {
        assert_eq!(self.algebra_dim(), other.algebra_dim(), "modules over different algebras");
        let (m, n) = (self.dim, other.dim);
        if m == 0 || n == 0 {
            return Vec::new();
        }
        // Row-major vec(X A - B X) = (I ⊗ Aᵀ - B ⊗ I) vec(X).
        let id_n = Matrix::identity(n);
        let id_m = Matrix::identity(m);
        let blocks: Vec<Matrix<F>> =
            self.action.iter().zip(&other.action).map(|(a, b)| &id_n.kron(&a.transpose()) - &b.kron(&id_m)).collect();
        let refs: Vec<&Matrix<F>> = blocks.iter().collect();
        let sys = if refs.is_empty() { Matrix::zeros(0, n * m) } else { Matrix::vstack(&refs) };
        sys.kernel().columns().into_iter().map(|v| Matrix::from_vec(n, m, v)).collect()
    }

    pub fn hom_dim(&self, other: &ModuleRep<F>) -> usize {
        self.hom_space(other).len()
    }

    /// Checks linearity in the algebra argument implicitly (actions are given
    /// per basis element), the unit acting as identity and the right-module
    /// axiom on all basis pairs.
    pub fn validate(&self, alg: &Algebra<F>) -> Result<()>
    where
        F: FiniteField,
    {
        if self.action.len() != alg.dim() {
            return Err(Error::NotModule(format!(
                "{} action matrices for an algebra of dimension {}",
                self.action.len(),
                alg.dim()
            )));
        }
        if self.action.iter().any(|m| m.shape() != (self.dim, self.dim)) {
            return Err(Error::NotModule("action matrix has wrong shape".into()));
        }
        if self.act(alg.unit()) != Matrix::identity(self.dim) {
            return Err(Error::NotModule("unit does not act as identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if self.act(alg.product(i, j)) != &self.action[j] * &self.action[i] {
                    return Err(Error::NotModule(format!("axiom fails on basis pair ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn new(alg: &Algebra<F>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self>
    where
        F: FiniteField,
    {
        let m = ModuleRep { dim, action };
        m.validate(alg)?;
        Ok(m)
    }
}

impl<F: FiniteField> ModuleRep<F> {
    /// An isomorphism `self → other`, searching the hom space exhaustively.
    pub fn find_isomorphism(&self, other: &ModuleRep<F>, cap: u64) -> Result<Option<Matrix<F>>> {
        if self.dim != other.dim {
            return Ok(None);
        }
        if self.dim == 0 {
            return Ok(Some(Matrix::zeros(0, 0)));
        }
        let basis = self.hom_space(other);
        first_invertible_combination(&basis, cap)
    }

    pub fn is_isomorphic(&self, other: &ModuleRep<F>, cap: u64) -> Result<bool> {
        Ok(self.find_isomorphism(other, cap)?.is_some())
    }
}

/// Search `span(basis)` for an invertible matrix.
pub(crate) fn first_invertible_combination<F: FiniteField>(basis: &[Matrix<F>], cap: u64) -> Result<Option<Matrix<F>>> {
    first_combination(basis, cap, |m| m.is_invertible())
}

/// Search `span(basis)` for a matrix satisfying `pred`, trying the basis
/// elements first and then every combination.
pub(crate) fn first_combination<F: FiniteField>(
    basis: &[Matrix<F>],
    cap: u64,
    pred: impl Fn(&Matrix<F>) -> bool,
) -> Result<Option<Matrix<F>>> {
    if basis.is_empty() {
        return Ok(None);
    }
    for b in basis {
        if pred(b) {
            return Ok(Some(b.clone()));
        }
    }
    let q = F::order();
    let total = q.checked_pow(basis.len() as u32).filter(|&t| t <= cap).ok_or(Error::EnumerationBudgetExceeded(cap))?;
    let (r, c) = basis[0].shape();
    for code in 1..total {
        let mut m = Matrix::zeros(r, c);
        let mut x = code;
        for b in basis {
            let d = F::from_u64(x % q);
            x /= q;
            if !d.is_zero() {
                m = &m + &b.scale(&d);
            }
        }
        if pred(&m) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom<F> {
    source: ModuleRep<F>,
    target: ModuleRep<F>,
    matrix: Matrix<F>,
}

impl<F: Field> ModuleHom<F> {
    pub fn new(source: ModuleRep<F>, target: ModuleRep<F>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.shape() != (target.dim, source.dim) {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix is {:?}, expected {}x{}",
                matrix.shape(),
                target.dim,
                source.dim
            )));
        }
        let ok = source.action.iter().zip(&target.action).all(|(a, b)| &matrix * a == b * &matrix);
        if !ok {
            return Err(Error::NotHom);
        }
        Ok(ModuleHom { source, target, matrix })
    }

    pub fn new_unchecked(source: ModuleRep<F>, target: ModuleRep<F>, matrix: Matrix<F>) -> Self {
        debug_assert_eq!(matrix.shape(), (target.dim, source.dim));
        ModuleHom { source, target, matrix }
    }

    pub fn identity(m: &ModuleRep<F>) -> Self {
        ModuleHom { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.dim) }
    }

    pub fn zero(source: &ModuleRep<F>, target: &ModuleRep<F>) -> Self {
        ModuleHom { source: source.clone(), target: target.clone(), matrix: Matrix::zeros(target.dim, source.dim) }
    }

    pub fn source(&self) -> &ModuleRep<F> {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleHom<F>) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::NotComposable);
        }
        Ok(ModuleHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &first.matrix,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }

    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn image(&self) -> Subspace<F> {
        Subspace::column_space(&self.matrix)
    }

    pub fn kernel_space(&self) -> Subspace<F> {
        Subspace::column_space(&self.matrix.kernel())
    }

    /// Kernel object and its inclusion into the source.
    pub fn kernel(&self) -> (ModuleRep<F>, ModuleHom<F>) {
        self.source.submodule(&self.kernel_space()).expect("kernel of a hom is a submodule")
    }

    /// Cokernel object and the projection from the target.
    pub fn cokernel(&self) -> (ModuleRep<F>, ModuleHom<F>) {
        self.target.quotient(&self.image()).expect("image of a hom is a submodule")
    }

    pub fn direct_sum(&self, other: &ModuleHom<F>) -> Self {
        ModuleHom {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            matrix: Matrix::block_diag(&[&self.matrix, &other.matrix]),
        }
    }
}

/// Inclusion of the `k`-th summand `parts[k] → ⊕ parts`.
pub fn summand_inclusion<F: Field>(parts: &[&ModuleRep<F>], k: usize) -> ModuleHom<F> {
    let total = parts.iter().skip(1).fold(parts[0].clone(), |acc, m| acc.direct_sum(m));
    let off: usize = parts[..k].iter().map(|m| m.dim()).sum();
    let mut mat = Matrix::zeros(total.dim(), parts[k].dim());
    mat.set_block(off, 0, &Matrix::identity(parts[k].dim()));
    ModuleHom::new_unchecked(parts[k].clone(), total, mat)
}
