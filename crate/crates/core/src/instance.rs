//! An algebra `A` with a square-zero ideal `I`, and the functors between
//! `mod-A` and `mod-A/I` built from it.
//!
//! `B = mod-A/I` sits inside `mod-A` through [`Instance::inflate`]. Every
//! `A`-module `M` is the extension `0 → MI → M → M/MI → 0` of two `B`-modules.

use std::sync::OnceLock;

use crate::algebra::{Algebra, Ideal, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::lattice::SimpleBasis;
use crate::matrix::Matrix;
use crate::module::{ModuleHom, ModuleRep};
use crate::subspace::Subspace;
use crate::tensor::{tensor_with_actions, BimoduleActions, TensorProduct};

#[derive(Debug)]
pub struct Instance<F> {
    a: Algebra<F>,
    ideal: Ideal<F>,
    quotient: QuotientAlgebra<F>,
    ideal_actions: BimoduleActions<F>,
    cap: u64,
    simples_a: OnceLock<SimpleBasis<F>>,
    simples_b: OnceLock<SimpleBasis<F>>,
}

/// `ĵ(M) = M ⊗_A I` as a `B`-module, with the tensor presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTilde<F> {
    pub module: ModuleRep<F>,
    pub tensor: TensorProduct<F>,
}

impl<F: FiniteField> Instance<F> {
    pub fn new(a: Algebra<F>, ideal: Ideal<F>, cap: u64) -> Result<Self> {
        if !ideal.is_square_zero(&a) {
            return Err(Error::IdealNotSquareZero);
        }
        let quotient = QuotientAlgebra::new(&a, &ideal)?;
        let ideal_actions = BimoduleActions::new(&a, ideal.space())?;
        Ok(Instance { a, ideal, quotient, ideal_actions, cap, simples_a: OnceLock::new(), simples_b: OnceLock::new() })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.a
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    /// The algebra `A/I`.
    pub fn quotient_algebra(&self) -> &Algebra<F> {
        &self.quotient.algebra
    }

    pub fn quotient_data(&self) -> &QuotientAlgebra<F> {
        &self.quotient
    }

    pub fn ideal_actions(&self) -> &BimoduleActions<F> {
        &self.ideal_actions
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn simples_a(&self) -> Result<&SimpleBasis<F>> {
        if let Some(s) = self.simples_a.get() {
            return Ok(s);
        }
        let s = SimpleBasis::of_algebra(&self.a, self.cap)?;
        Ok(self.simples_a.get_or_init(|| s))
    }

    pub fn simples_b(&self) -> Result<&SimpleBasis<F>> {
        if let Some(s) = self.simples_b.get() {
            return Ok(s);
        }
        let s = SimpleBasis::of_algebra(&self.quotient.algebra, self.cap)?;
        Ok(self.simples_b.get_or_init(|| s))
    }

    /// `i: B → A`; same space, `I` acting by zero.
    pub fn inflate(&self, yb: &ModuleRep<F>) -> ModuleRep<F> {
        let proj = &self.quotient.projection;
        let action = (0..self.a.dim()).map(|i| yb.act(&proj.column(i))).collect();
        ModuleRep::from_action_unchecked(yb.dim(), action)
    }

    pub fn inflate_hom(&self, f: &ModuleHom<F>) -> ModuleHom<F> {
        ModuleHom::new_unchecked(self.inflate(f.source()), self.inflate(f.target()), f.matrix().clone())
    }

    pub fn is_in_b(&self, m: &ModuleRep<F>) -> bool {
        self.ideal.basis().iter().all(|x| m.act(x).is_zero())
    }

    /// View an `A`-module killed by `I` as a `B`-module.
    pub fn deflate(&self, m: &ModuleRep<F>) -> Result<ModuleRep<F>> {
        if !self.is_in_b(m) {
            return Err(Error::NotInB);
        }
        let action = (0..self.quotient.algebra.dim()).map(|t| m.act(&self.quotient.representative(t))).collect();
        Ok(ModuleRep::from_action_unchecked(m.dim(), action))
    }

    pub fn deflate_hom(&self, f: &ModuleHom<F>) -> Result<ModuleHom<F>> {
        Ok(ModuleHom::new_unchecked(self.deflate(f.source())?, self.deflate(f.target())?, f.matrix().clone()))
    }

    /// The submodule `M·I`.
    pub fn mi(&self, m: &ModuleRep<F>) -> Subspace<F> {
        let mut w = Subspace::zero(m.dim());
        for x in self.ideal.basis() {
            w = w.sum(&Subspace::column_space(&m.act(&x)));
        }
        w
    }

    /// `{ x ∈ M : x·I = 0 }`.
    pub fn annihilator_of_i(&self, m: &ModuleRep<F>) -> Subspace<F> {
        let mats: Vec<Matrix<F>> = self.ideal.basis().iter().map(|x| m.act(x)).collect();
        if mats.is_empty() {
            return Subspace::full(m.dim());
        }
        let refs: Vec<&Matrix<F>> = mats.iter().collect();
        Subspace::column_space(&Matrix::vstack(&refs).kernel())
    }

    /// `i^L(M) = M/MI` and the unit `M → i(i^L M)`.
    pub fn i_left_adjoint(&self, m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleHom<F>) {
        let (q, proj) = m.quotient(&self.mi(m)).expect("MI is a submodule");
        (self.deflate(&q).expect("M/MI is killed by I"), proj)
    }

    pub fn i_left_adjoint_hom(&self, f: &ModuleHom<F>) -> ModuleHom<F> {
        let (qs, _) = self.i_left_adjoint(f.source());
        let (qt, pt) = self.i_left_adjoint(f.target());
        let mat = &(pt.matrix() * f.matrix()) * &self.mi(f.source()).quotient().section;
        ModuleHom::new_unchecked(qs, qt, mat)
    }

    /// `j(M) = M·I` as a `B`-module, with its inclusion `i(j M) → M`.
    pub fn j_functor(&self, m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleHom<F>) {
        let (sub, incl) = m.submodule(&self.mi(m)).expect("MI is a submodule");
        (self.deflate(&sub).expect("MI·I = 0"), incl)
    }

    pub fn j_hom(&self, f: &ModuleHom<F>) -> ModuleHom<F> {
        let (js, _) = self.j_functor(f.source());
        let (jt, _) = self.j_functor(f.target());
        let src = self.mi(f.source());
        let tgt = self.mi(f.target());
        let img = f.matrix() * &src.basis_matrix();
        let mat = tgt.coords_matrix(&img).expect("f(MI) ⊆ NI");
        ModuleHom::new_unchecked(js, jt, mat)
    }

    /// `ĵ(M) = M ⊗_A I` with its `B`-module structure.
    pub fn j_tilde(&self, m: &ModuleRep<F>) -> JTilde<F> {
        let tensor = tensor_with_actions(m, &self.ideal_actions).expect("ideal is a bimodule");
        let module = self.deflate(&tensor.module).expect("I² = 0 kills M ⊗ I");
        JTilde { module, tensor }
    }

    pub fn j_tilde_hom(&self, f: &ModuleHom<F>) -> ModuleHom<F> {
        let s = self.j_tilde(f.source());
        let t = self.j_tilde(f.target());
        self.j_tilde_hom_between(f, &s, &t)
    }

    pub fn j_tilde_hom_between(&self, f: &ModuleHom<F>, s: &JTilde<F>, t: &JTilde<F>) -> ModuleHom<F> {
        let m = s.tensor.induced(f, &t.tensor);
        ModuleHom::new_unchecked(s.module.clone(), t.module.clone(), m.matrix().clone())
    }

    /// `m ⊗ x ↦ m·x` as a matrix `ĵ(M) → M` (the canonical `i(ĵ M) → M`).
    pub fn multiplication_matrix(&self, m: &ModuleRep<F>, jt: &JTilde<F>) -> Matrix<F> {
        let k = self.ideal.dim();
        let mut full = Matrix::zeros(m.dim(), m.dim() * k);
        for (s, x) in self.ideal_actions.basis.iter().enumerate() {
            let act = m.act(x);
            for r in 0..m.dim() {
                for i in 0..m.dim() {
                    full[(i, r * k + s)] = act[(i, r)];
                }
            }
        }
        &full * &jt.tensor.presentation.section
    }

    /// The natural map `ĵ(M) → j(M)`.
    pub fn jtilde_to_j(&self, m: &ModuleRep<F>) -> ModuleHom<F> {
        let jt = self.j_tilde(m);
        let (jm, _) = self.j_functor(m);
        let mult = self.multiplication_matrix(m, &jt);
        let mat = self.mi(m).coords_matrix(&mult).expect("products land in MI");
        ModuleHom::new_unchecked(jt.module, jm, mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::known;
    use crate::field::Fp;

    type F2 = Fp<2>;

    pub(crate) fn dual() -> Instance<F2> {
        let a = known::dual_numbers::<F2>();
        let i = Ideal::new(&a, &[vec![F2::new(0), F2::new(1)]]).unwrap();
        Instance::new(a, i, crate::lattice::DEFAULT_CAP).unwrap()
    }

    #[test]
    fn rejects_non_square_zero() {
        let a = known::dual_numbers::<F2>();
        let whole = Ideal::new(&a, &[vec![F2::new(1), F2::new(0)], vec![F2::new(0), F2::new(1)]]).unwrap();
        assert!(matches!(Instance::new(a, whole, 100), Err(Error::IdealNotSquareZero)));
    }

    #[test]
    fn inflate_simple() {
        let inst = dual();
        let s = inst.simples_b().unwrap().get(0).clone();
        let is = inst.inflate(&s);
        is.validate(inst.algebra()).unwrap();
        assert!(is.action(1).is_zero());
        assert_eq!(inst.inflate(&ModuleRep::zero(1)).dim(), 0);
    }

    #[test]
    fn left_adjoint_and_j_on_regular() {
        let inst = dual();
        let a = inst.algebra().regular_module();
        assert_eq!(inst.i_left_adjoint(&a).0.dim(), 1);
        assert_eq!(inst.j_functor(&a).0.dim(), 1);
        let a2 = a.direct_sum(&a);
        assert_eq!(inst.j_functor(&a2).0.dim(), 2);
        let s = inst.inflate(inst.simples_b().unwrap().get(0));
        assert_eq!(inst.j_functor(&s).0.dim(), 0);
        assert_eq!(inst.i_left_adjoint(&a.direct_sum(&s)).0.dim(), 2);
    }

    #[test]
    fn jtilde_to_j_examples() {
        let inst = dual();
        let a = inst.algebra().regular_module();
        let f = inst.jtilde_to_j(&a);
        assert!(f.is_iso());
        let s = inst.inflate(inst.simples_b().unwrap().get(0));
        let g = inst.jtilde_to_j(&s);
        assert_eq!((g.source().dim(), g.target().dim()), (1, 0));
        assert_eq!(g.kernel().0.dim(), 1);
        let z = inst.jtilde_to_j(&ModuleRep::zero(2));
        assert_eq!((z.source().dim(), z.target().dim()), (0, 0));
    }
}
