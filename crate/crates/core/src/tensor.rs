//! `M ⊗_A N` for a right module `M` and a sub-bimodule `N ⊆ A`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::matrix::Matrix;
use crate::module::{ModuleHom, ModuleRep};
use crate::subspace::{Quotient, Subspace};

/// The tensor product as a right `A`-module, together with the presentation
/// `M ⊗_F N ↠ M ⊗_A N` used to build induced maps.
///
/// `M ⊗_F N` has basis `e_r ⊗ n_s` at index `r * dim N + s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorProduct<F> {
    pub module: ModuleRep<F>,
    pub presentation: Quotient<F>,
    pub left_dim: usize,
    pub right_dim: usize,
}

/// Matrices of the left and right actions of `A` on a sub-bimodule `N ⊆ A`,
/// in the echelon basis of `N`.
#[derive(Clone, Debug)]
pub struct BimoduleActions<F> {
    pub basis: Vec<Vec<F>>,
    pub left: Vec<Matrix<F>>,
    pub right: Vec<Matrix<F>>,
}

impl<F: FiniteField> BimoduleActions<F> {
    pub fn new(alg: &Algebra<F>, n: &Subspace<F>) -> Result<Self> {
        if n.ambient() != alg.dim() {
            return Err(Error::DimensionMismatch("bimodule must be a subspace of the algebra".into()));
        }
        let basis = n.basis_vectors();
        let mut left = Vec::with_capacity(alg.dim());
        let mut right = Vec::with_capacity(alg.dim());
        for i in 0..alg.dim() {
            let b = alg.basis_vector(i);
            let mut lc = Vec::with_capacity(basis.len());
            let mut rc = Vec::with_capacity(basis.len());
            for x in &basis {
                lc.push(n.coords(&alg.mul(&b, x)).ok_or_else(|| Error::NotBimodule(format!("b_{i}·N ⊄ N")))?);
                rc.push(n.coords(&alg.mul(x, &b)).ok_or_else(|| Error::NotBimodule(format!("N·b_{i} ⊄ N")))?);
            }
            left.push(Matrix::from_columns(basis.len(), &lc));
            right.push(Matrix::from_columns(basis.len(), &rc));
        }
        Ok(BimoduleActions { basis, left, right })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `M ⊗_A N`, computed as the cokernel of the balancing map
/// `m ⊗ a ⊗ x ↦ m·a ⊗ x − m ⊗ a·x`.
pub fn tensor_over_algebra<F: FiniteField>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
    n: &Subspace<F>,
) -> Result<TensorProduct<F>> {
    let acts = BimoduleActions::new(alg, n)?;
    tensor_with_actions(m, &acts)
}

pub fn tensor_with_actions<F: FiniteField>(m: &ModuleRep<F>, acts: &BimoduleActions<F>) -> Result<TensorProduct<F>> {
    if m.algebra_dim() != acts.left.len() {
        return Err(Error::DimensionMismatch("module and bimodule over different algebras".into()));
    }
    let (d, k) = (m.dim(), acts.dim());
    let id_d = Matrix::identity(d);
    let id_k = Matrix::identity(k);
    let relations: Vec<Matrix<F>> =
        m.actions().iter().zip(&acts.left).map(|(r, l)| &r.kron(&id_k) - &id_d.kron(l)).collect();
    let refs: Vec<&Matrix<F>> = relations.iter().collect();
    let rel_space = if refs.is_empty() || d * k == 0 {
        Subspace::zero(d * k)
    } else {
        Subspace::column_space(&Matrix::hstack(&refs))
    };
    let free_action: Vec<Matrix<F>> = acts.right.iter().map(|r| id_d.kron(r)).collect();
    let free = ModuleRep::from_action_unchecked(d * k, free_action);
    let (module, proj) = free.quotient(&rel_space)?;
    let presentation = Quotient { projection: proj.matrix().clone(), section: rel_space.quotient().section };
    Ok(TensorProduct { module, presentation, left_dim: d, right_dim: k })
}

impl<F: FiniteField> TensorProduct<F> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `f ⊗ id_N : self → target` for `f: M → M'`.
    pub fn induced(&self, f: &ModuleHom<F>, target: &TensorProduct<F>) -> ModuleHom<F> {
        let lifted = f.matrix().kron(&Matrix::identity(self.right_dim));
        let mat = &(&target.presentation.projection * &lifted) * &self.presentation.section;
        ModuleHom::new_unchecked(self.module.clone(), target.module.clone(), mat)
    }
}
