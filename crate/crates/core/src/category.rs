//! A small interface shared by the three categories in play (modules, pairs,
//! quadruples), and the one admissibility checker for short exact sequences.

use std::fmt::Debug;

use crate::error::{Error, Result};

pub trait ExactCategory {
    type Object: Clone + Debug + PartialEq;
    type Morphism: Clone + Debug;

    fn source<'m>(&self, f: &'m Self::Morphism) -> &'m Self::Object;

    fn target<'m>(&self, f: &'m Self::Morphism) -> &'m Self::Object;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;

    fn is_zero(&self, f: &Self::Morphism) -> bool;

    fn is_iso(&self, f: &Self::Morphism) -> bool;

    fn is_zero_object(&self, x: &Self::Object) -> bool;

    /// The kernel, as its inclusion into `source(f)`.
    fn kernel(&self, f: &Self::Morphism) -> Self::Morphism;

    /// The cokernel, as the projection from `target(f)`.
    fn cokernel(&self, f: &Self::Morphism) -> Self::Morphism;

    /// Some `x` with `mono ∘ x = f`.
    fn lift(&self, mono: &Self::Morphism, f: &Self::Morphism) -> Option<Self::Morphism>;

    /// Some `x` with `x ∘ epi = f`.
    fn descend(&self, epi: &Self::Morphism, f: &Self::Morphism) -> Option<Self::Morphism>;

    fn is_mono(&self, f: &Self::Morphism) -> bool {
        let k = self.kernel(f);
        self.is_zero_object(self.source(&k))
    }

    fn is_epi(&self, f: &Self::Morphism) -> bool {
        let c = self.cokernel(f);
        self.is_zero_object(self.target(&c))
    }

    /// `f = ker(coker f)` up to the canonical comparison.
    fn is_strict_mono(&self, f: &Self::Morphism) -> bool {
        if !self.is_mono(f) {
            return false;
        }
        let k = self.kernel(&self.cokernel(f));
        self.lift(&k, f).is_some_and(|x| self.is_iso(&x))
    }

    /// `f = coker(ker f)` up to the canonical comparison.
    fn is_strict_epi(&self, f: &Self::Morphism) -> bool {
        if !self.is_epi(f) {
            return false;
        }
        let c = self.cokernel(&self.kernel(f));
        self.descend(&c, f).is_some_and(|x| self.is_iso(&x))
    }
}

/// `0 → sub --first--> middle --second--> quotient → 0`.
#[derive(Clone, Debug)]
pub struct Ses<M> {
    pub first: M,
    pub second: M,
}

impl<M> Ses<M> {
    pub fn new(first: M, second: M) -> Self {
        Ses { first, second }
    }
}

/// Which part of admissibility failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SesDefect {
    NotComposable,
    NonzeroComposite,
    FirstNotKernel,
    SecondNotCokernel,
}

impl<M> Ses<M> {
    pub fn sub<'a, C: ExactCategory<Morphism = M>>(&'a self, cat: &C) -> &'a C::Object {
        cat.source(&self.first)
    }

    pub fn middle<'a, C: ExactCategory<Morphism = M>>(&'a self, cat: &C) -> &'a C::Object {
        cat.target(&self.first)
    }

    pub fn quotient<'a, C: ExactCategory<Morphism = M>>(&'a self, cat: &C) -> &'a C::Object {
        cat.target(&self.second)
    }

    /// `first = ker(second)` and `second = coker(first)`.
    pub fn defect<C: ExactCategory<Morphism = M>>(&self, cat: &C) -> Option<SesDefect> {
        if cat.target(&self.first) != cat.source(&self.second) {
            return Some(SesDefect::NotComposable);
        }
        match cat.compose(&self.second, &self.first) {
            Ok(c) if cat.is_zero(&c) => {}
            Ok(_) => return Some(SesDefect::NonzeroComposite),
            Err(_) => return Some(SesDefect::NotComposable),
        }
        let k = cat.kernel(&self.second);
        if !cat.lift(&k, &self.first).is_some_and(|x| cat.is_iso(&x)) {
            return Some(SesDefect::FirstNotKernel);
        }
        let c = cat.cokernel(&self.first);
        if !cat.descend(&c, &self.second).is_some_and(|x| cat.is_iso(&x)) {
            return Some(SesDefect::SecondNotCokernel);
        }
        None
    }

    pub fn validate<C: ExactCategory<Morphism = M>>(&self, cat: &C) -> Result<()> {
        match self.defect(cat) {
            None => Ok(()),
            Some(d) => Err(Error::VerificationFailure(format!("sequence is not admissible: {d:?}"))),
        }
    }
}

/// `mod-A` itself: kernels and cokernels are the linear-algebra ones.
#[derive(Clone, Copy, Debug, Default)]
pub struct Modules<F>(std::marker::PhantomData<F>);

impl<F> Modules<F> {
    pub fn new() -> Self {
        Modules(std::marker::PhantomData)
    }
}

impl<F: crate::field::FiniteField> ExactCategory for Modules<F> {
    type Object = crate::module::ModuleRep<F>;
    type Morphism = crate::module::ModuleHom<F>;

    fn source<'m>(&self, f: &'m Self::Morphism) -> &'m Self::Object {
        f.source()
    }

    fn target<'m>(&self, f: &'m Self::Morphism) -> &'m Self::Object {
        f.target()
    }

    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism> {
        g.after(f)
    }

    fn is_zero(&self, f: &Self::Morphism) -> bool {
        f.is_zero()
    }

    fn is_iso(&self, f: &Self::Morphism) -> bool {
        f.is_iso()
    }

    fn is_zero_object(&self, x: &Self::Object) -> bool {
        x.is_zero()
    }

    fn kernel(&self, f: &Self::Morphism) -> Self::Morphism {
        f.kernel().1
    }

    fn cokernel(&self, f: &Self::Morphism) -> Self::Morphism {
        f.cokernel().1
    }

    fn lift(&self, mono: &Self::Morphism, f: &Self::Morphism) -> Option<Self::Morphism> {
        if mono.target() != f.target() {
            return None;
        }
        let x = mono.matrix().solve_right(f.matrix())?;
        crate::module::ModuleHom::new(f.source().clone(), mono.source().clone(), x).ok()
    }

    fn descend(&self, epi: &Self::Morphism, f: &Self::Morphism) -> Option<Self::Morphism> {
        if epi.source() != f.source() {
            return None;
        }
        let x = epi.matrix().solve_left(f.matrix())?;
        crate::module::ModuleHom::new(epi.target().clone(), f.target().clone(), x).ok()
    }
}
