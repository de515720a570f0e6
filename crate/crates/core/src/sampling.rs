//! Seeded random objects and morphisms for the property suites.
//!
//! Every sample is drawn from its own generator, seeded by
//! [`sample_seed`]`(base, index)`, so a single failing case can be replayed
//! with [`Sampler::new`] alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::auslander::{CHom, CObject, Envelope};
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::matrix::Matrix;
use crate::module::{ModuleHom, ModuleRep};
use crate::pair::{PairHom, PairObject, Pairs};
use crate::subspace::Subspace;

/// The seed of sample `index` in a run seeded with `base`.
pub fn sample_seed(base: u64, index: u64) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index.wrapping_mul(0xD1B5_4A32_D192_ED03)) ^ index
}

pub struct Sampler<'a, F> {
    inst: &'a Instance<F>,
    rng: ChaCha8Rng,
    seed: u64,
}

impl<'a, F: FiniteField> Sampler<'a, F> {
    pub fn new(inst: &'a Instance<F>, seed: u64) -> Self {
        Sampler { inst, rng: ChaCha8Rng::seed_from_u64(seed), seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn scalar(&mut self) -> F {
        F::from_u64(self.rng.gen_range(0..F::order()))
    }

    pub fn vector(&mut self, n: usize) -> Vec<F> {
        (0..n).map(|_| self.scalar()).collect()
    }

    fn combination(&mut self, basis: &[Matrix<F>], rows: usize, cols: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(rows, cols);
        for b in basis {
            let c = self.scalar();
            if !c.is_zero() {
                m = &m + &b.scale(&c);
            }
        }
        m
    }

    /// A random submodule: the closure of up to two random vectors.
    pub fn submodule(&mut self, m: &ModuleRep<F>) -> Subspace<F> {
        let k = self.rng.gen_range(0..=2);
        let vs: Vec<Vec<F>> = (0..k).map(|_| self.vector(m.dim())).collect();
        m.generated(&vs)
    }

    /// A quotient of one or two copies of `A`, sometimes plus a simple.
    pub fn module(&mut self) -> ModuleRep<F> {
        let reg = self.inst.algebra().regular_module();
        let copies = self.rng.gen_range(1..=2);
        let free = (1..copies).fold(reg.clone(), |acc, _| acc.direct_sum(&reg));
        let w = self.submodule(&free);
        let mut m = free.quotient(&w).expect("closure is a submodule").0;
        if self.rng.gen_bool(0.25) {
            if let Ok(simples) = self.inst.simples_a() {
                let i = self.rng.gen_range(0..simples.len());
                m = m.direct_sum(simples.get(i));
            }
        }
        m
    }

    /// A module over `A/I`.
    pub fn b_module(&mut self) -> ModuleRep<F> {
        let m = self.module();
        self.inst.i_left_adjoint(&m).0
    }

    pub fn hom(&mut self, s: &ModuleRep<F>, t: &ModuleRep<F>) -> ModuleHom<F> {
        let basis = s.hom_space(t);
        let m = self.combination(&basis, t.dim(), s.dim());
        ModuleHom::new_unchecked(s.clone(), t.clone(), m)
    }

    /// `M ↠ M/W` for a random submodule `W`.
    pub fn surjection(&mut self, m: &ModuleRep<F>) -> ModuleHom<F> {
        let w = self.submodule(m);
        m.quotient(&w).expect("closure is a submodule").1
    }

    /// `(X, XI + W)` for a random submodule `W` of `ann_I(X)`.
    pub fn pair_on(&mut self, x: &ModuleRep<F>) -> PairObject<F> {
        let ann = self.inst.annihilator_of_i(x);
        let k = self.rng.gen_range(0..=2);
        let vs: Vec<Vec<F>> = (0..k)
            .map(|_| {
                let c = self.vector(ann.dim());
                ann.basis_matrix().apply(&c)
            })
            .collect();
        let y = x.closure(&self.inst.mi(x).sum(&Subspace::span(x.dim(), vs)));
        PairObject::new_unchecked(x.clone(), y)
    }

    pub fn pair(&mut self) -> PairObject<F> {
        let x = self.module();
        self.pair_on(&x)
    }

    pub fn pair_hom(&mut self, s: &PairObject<F>, t: &PairObject<F>) -> PairHom<F> {
        let basis = Pairs::new(self.inst).hom_space(s, t);
        let m = self.combination(&basis, t.x().dim(), s.x().dim());
        PairHom::new_unchecked(s.clone(), t.clone(), m)
    }

    /// `(K, K ∩ Y) ↪ (X, Y)` for a random submodule `K`: a kernel, hence strict.
    pub fn strict_mono(&mut self) -> PairHom<F> {
        let p = self.pair();
        let k = self.submodule(p.x());
        let (kx, incl) = p.x().submodule(&k).expect("closure is a submodule");
        let yk = k.relative(&k.intersection(p.y())).expect("K ∩ Y ⊆ K");
        PairHom::new_unchecked(PairObject::new_unchecked(kx, yk), p, incl.matrix().clone())
    }

    /// `(X, Y) ↠ (X/K, (Y + K)/K)` for a random submodule `K`: a cokernel, hence strict.
    pub fn strict_epi(&mut self) -> PairHom<F> {
        let p = self.pair();
        let k = self.submodule(p.x());
        let (qx, proj) = p.x().quotient(&k).expect("closure is a submodule");
        let yq = p.y().image(proj.matrix());
        PairHom::new_unchecked(p, PairObject::new_unchecked(qx, yq), proj.matrix().clone())
    }

    /// A map out of `z` whose target is random, or `z ⊕ random` with the
    /// first component the identity.
    pub fn pair_hom_from(&mut self, z: &PairObject<F>) -> PairHom<F> {
        let other = self.pair();
        if self.rng.gen_bool(0.5) {
            return self.pair_hom(z, &other);
        }
        let t = z.direct_sum(&other);
        let g = self.pair_hom(z, &other);
        let m = Matrix::vstack(&[&Matrix::identity(z.x().dim()), g.matrix()]);
        PairHom::new_unchecked(z.clone(), t, m)
    }

    /// A map into `w`, dual to [`Self::pair_hom_from`].
    pub fn pair_hom_to(&mut self, w: &PairObject<F>) -> PairHom<F> {
        let other = self.pair();
        if self.rng.gen_bool(0.5) {
            return self.pair_hom(&other, w);
        }
        let s = w.direct_sum(&other);
        let g = self.pair_hom(&other, w);
        let m = Matrix::hstack(&[&Matrix::identity(w.x().dim()), g.matrix()]);
        PairHom::new_unchecked(s, w.clone(), m)
    }

    pub fn c_hom(&mut self, env: &Envelope<'_, F>, s: &CObject<F>, t: &CObject<F>) -> CHom<F> {
        let basis = env.hom_space(s, t);
        let (mut fx, mut fy) = (Matrix::zeros(t.x().dim(), s.x().dim()), Matrix::zeros(t.y().dim(), s.y().dim()));
        for (bx, by) in basis {
            let c = self.scalar();
            if !c.is_zero() {
                fx = &fx + &bx.scale(&c);
                fy = &fy + &by.scale(&c);
            }
        }
        env.make_c_hom(s, t, fx, fy).expect("combination of morphisms is a morphism")
    }

    /// An object of the envelope: `α(P)`, `β(N)`, their sum, or a cokernel of
    /// a random map between `α`-objects (which usually has torsion).
    pub fn c_object(&mut self, env: &Envelope<'_, F>) -> CObject<F> {
        match self.rng.gen_range(0..4) {
            0 => env.alpha(&self.pair()),
            1 => env.beta(&self.b_module()),
            2 => {
                let a = env.alpha(&self.pair());
                let b = env.beta(&self.b_module());
                env.direct_sum(&a, &b)
            }
            _ => {
                let s = env.alpha(&self.pair());
                let t = env.alpha(&self.pair());
                let h = self.c_hom(env, &s, &t);
                env.c_cokernel(&h).0
            }
        }
    }
}
