//! The quasi-abelian category of pairs `(X, Y ⊆ X)` with `Y` and `X/Y` killed
//! by the ideal.
//!
//! `Y` is stored as an echelon subspace of `X`'s coordinates, so two pairs on
//! the same module are equal exactly when their subspaces are.

use crate::category::{ExactCategory, Ses};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::matrix::Matrix;
use crate::module::{first_combination, ModuleHom, ModuleRep};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairObject<F> {
    x: ModuleRep<F>,
    y: Subspace<F>,
}

impl<F: FiniteField> PairObject<F> {
    /// No validation; see [`Pairs::make_pair`].
    pub fn new_unchecked(x: ModuleRep<F>, y: Subspace<F>) -> Self {
        debug_assert_eq!(x.dim(), y.ambient());
        PairObject { x, y }
    }

    pub fn x(&self) -> &ModuleRep<F> {
        &self.x
    }

    pub fn y(&self) -> &Subspace<F> {
        &self.y
    }

    /// `(dim X, dim Y)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.x.dim(), self.y.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn direct_sum(&self, other: &PairObject<F>) -> PairObject<F> {
        PairObject { x: self.x.direct_sum(&other.x), y: subspace_sum_direct(&self.y, &other.y) }
    }

    /// `Y` as a module, with its inclusion into `X`.
    pub fn y_module(&self) -> (ModuleRep<F>, ModuleHom<F>) {
        self.x.submodule(&self.y).expect("Y is a submodule")
    }

    /// `X/Y` with its projection.
    pub fn quotient_module(&self) -> (ModuleRep<F>, ModuleHom<F>) {
        self.x.quotient(&self.y).expect("Y is a submodule")
    }
}

/// `Y₁ ⊕ Y₂ ⊆ X₁ ⊕ X₂`.
pub(crate) fn subspace_sum_direct<F: FiniteField>(a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
    let (n, m) = (a.ambient(), b.ambient());
    let mut vs = Vec::with_capacity(a.dim() + b.dim());
    for v in a.basis_vectors() {
        let mut w = v;
        w.resize(n + m, F::zero());
        vs.push(w);
    }
    for v in b.basis_vectors() {
        let mut w = vec![F::zero(); n];
        w.extend(v);
        vs.push(w);
    }
    Subspace::span(n + m, vs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHom<F> {
    source: PairObject<F>,
    target: PairObject<F>,
    matrix: Matrix<F>,
}

impl<F: FiniteField> PairHom<F> {
    pub fn new(source: PairObject<F>, target: PairObject<F>, matrix: Matrix<F>) -> Result<Self> {
        let f = ModuleHom::new(source.x.clone(), target.x.clone(), matrix)?;
        if !target.y.contains_subspace(&source.y.image(f.matrix())) {
            return Err(Error::NotPairHom);
        }
        Ok(PairHom { source, target, matrix: f.matrix().clone() })
    }

    pub fn new_unchecked(source: PairObject<F>, target: PairObject<F>, matrix: Matrix<F>) -> Self {
        PairHom { source, target, matrix }
    }

    pub fn identity(p: &PairObject<F>) -> Self {
        PairHom { source: p.clone(), target: p.clone(), matrix: Matrix::identity(p.x.dim()) }
    }

    pub fn zero(s: &PairObject<F>, t: &PairObject<F>) -> Self {
        PairHom { source: s.clone(), target: t.clone(), matrix: Matrix::zeros(t.x.dim(), s.x.dim()) }
    }

    pub fn source(&self) -> &PairObject<F> {
        &self.source
    }

    pub fn target(&self) -> &PairObject<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// The underlying module map `X → X'`.
    pub fn x_hom(&self) -> ModuleHom<F> {
        ModuleHom::new_unchecked(self.source.x.clone(), self.target.x.clone(), self.matrix.clone())
    }

    /// The restriction `Y → Y'`, in echelon coordinates.
    pub fn y_matrix(&self) -> Matrix<F> {
        let img = &self.matrix * &self.source.y.basis_matrix();
        self.target.y.coords_matrix(&img).expect("pair hom maps Y into Y'")
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &PairHom<F>) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::NotComposable);
        }
        Ok(PairHom { source: first.source.clone(), target: self.target.clone(), matrix: &self.matrix * &first.matrix })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Bijective on `X` and onto `Y'` on `Y`.
    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible() && self.source.y.dim() == self.target.y.dim()
    }

    pub fn direct_sum(&self, other: &PairHom<F>) -> Self {
        PairHom {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            matrix: Matrix::block_diag(&[&self.matrix, &other.matrix]),
        }
    }

    pub fn scale(&self, c: F) -> Self {
        PairHom { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(&c) }
    }

    pub fn add(&self, other: &PairHom<F>) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::NotComposable);
        }
        Ok(PairHom { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix + &other.matrix })
    }
}

/// How a morphism of pairs sits with respect to the exact structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    Iso,
    StrictMono,
    NonstrictMono,
    StrictEpi,
    NonstrictEpi,
    Neither,
}

impl Strictness {
    pub fn as_str(self) -> &'static str {
        match self {
            Strictness::Iso => "iso",
            Strictness::StrictMono => "strict_mono",
            Strictness::NonstrictMono => "nonstrict_mono",
            Strictness::StrictEpi => "strict_epi",
            Strictness::NonstrictEpi => "nonstrict_epi",
            Strictness::Neither => "neither",
        }
    }
}

/// The pair category over a fixed instance.
#[derive(Clone, Copy, Debug)]
pub struct Pairs<'a, F> {
    inst: &'a Instance<F>,
}

/// A pushout or pullback square's new corner with its two legs.
#[derive(Clone, Debug)]
pub struct Square<F> {
    pub corner: PairObject<F>,
    pub first: PairHom<F>,
    pub second: PairHom<F>,
}

impl<'a, F: FiniteField> Pairs<'a, F> {
    pub fn new(inst: &'a Instance<F>) -> Self {
        Pairs { inst }
    }

    pub fn instance(&self) -> &'a Instance<F> {
        self.inst
    }

    pub fn make_pair(&self, x: ModuleRep<F>, y: Subspace<F>) -> Result<PairObject<F>> {
        if y.ambient() != x.dim() {
            return Err(Error::DimensionMismatch("Y must live in X".into()));
        }
        if !x.is_submodule(&y) {
            return Err(Error::NotSubmodule);
        }
        for a in self.inst.ideal().basis() {
            let act = x.act(&a);
            if !y.basis_vectors().iter().all(|v| act.apply(v).iter().all(|c| c.is_zero())) {
                return Err(Error::NotKilledByI);
            }
        }
        if !y.contains_subspace(&self.inst.mi(&x)) {
            return Err(Error::QuotientNotInB);
        }
        Ok(PairObject { x, y })
    }

    pub fn make_pair_from_vectors(&self, x: ModuleRep<F>, y: &[Vec<F>]) -> Result<PairObject<F>> {
        let n = x.dim();
        self.make_pair(x, Subspace::span(n, y))
    }

    pub fn zero_object(&self) -> PairObject<F> {
        PairObject { x: ModuleRep::zero(self.inst.algebra().dim()), y: Subspace::zero(0) }
    }

    /// `(ker f, ker f ∩ Y)` with its inclusion.
    pub fn pair_kernel(&self, h: &PairHom<F>) -> (PairObject<F>, PairHom<F>) {
        let ks = Subspace::column_space(&h.matrix.kernel());
        let (k, incl) = h.source.x.submodule(&ks).expect("kernel is a submodule");
        let yk = ks.relative(&ks.intersection(&h.source.y)).expect("intersection lies in the kernel");
        let obj = PairObject { x: k, y: yk };
        let m = incl.matrix().clone();
        (obj.clone(), PairHom { source: obj, target: h.source.clone(), matrix: m })
    }

    /// `(X'/f X, image of Y')` with its projection.
    pub fn pair_cokernel(&self, h: &PairHom<F>) -> (PairObject<F>, PairHom<F>) {
        let img = Subspace::column_space(&h.matrix);
        let (q, proj) = h.target.x.quotient(&img).expect("image is a submodule");
        let yq = h.target.y.image(proj.matrix());
        let obj = PairObject { x: q, y: yq };
        let m = proj.matrix().clone();
        (obj.clone(), PairHom { source: h.target.clone(), target: obj, matrix: m })
    }

    pub fn strictness(&self, h: &PairHom<F>) -> Strictness {
        if h.is_iso() {
            return Strictness::Iso;
        }
        if self.is_mono(h) {
            return if self.is_strict_mono(h) { Strictness::StrictMono } else { Strictness::NonstrictMono };
        }
        if self.is_epi(h) {
            return if self.is_strict_epi(h) { Strictness::StrictEpi } else { Strictness::NonstrictEpi };
        }
        Strictness::Neither
    }

    /// Pushout of `f: Z → X₁` and `g: Z → X₂`, as the cokernel of `(f, −g)`.
    pub fn pair_pushout(&self, f: &PairHom<F>, g: &PairHom<F>) -> Result<Square<F>> {
        if f.source != g.source {
            return Err(Error::NotComposable);
        }
        let sum = f.target.direct_sum(&g.target);
        let fg = Matrix::vstack(&[&f.matrix, &g.matrix.scale(&-F::one())]);
        let h = PairHom { source: f.source.clone(), target: sum.clone(), matrix: fg };
        let (corner, c) = self.pair_cokernel(&h);
        let (n1, n2) = (f.target.x.dim(), g.target.x.dim());
        let i1 = Matrix::vstack(&[&Matrix::identity(n1), &Matrix::zeros(n2, n1)]);
        let i2 = Matrix::vstack(&[&Matrix::zeros(n1, n2), &Matrix::identity(n2)]);
        Ok(Square {
            first: PairHom { source: f.target.clone(), target: corner.clone(), matrix: c.matrix() * &i1 },
            second: PairHom { source: g.target.clone(), target: corner.clone(), matrix: c.matrix() * &i2 },
            corner,
        })
    }

    /// Pullback of `f: X₁ → W` and `g: X₂ → W`, as the kernel of `(f, −g)`.
    pub fn pair_pullback(&self, f: &PairHom<F>, g: &PairHom<F>) -> Result<Square<F>> {
        if f.target != g.target {
            return Err(Error::NotComposable);
        }
        let sum = f.source.direct_sum(&g.source);
        let fg = Matrix::hstack(&[&f.matrix, &g.matrix.scale(&-F::one())]);
        let h = PairHom { source: sum, target: f.target.clone(), matrix: fg };
        let (corner, k) = self.pair_kernel(&h);
        let (n1, n2) = (f.source.x.dim(), g.source.x.dim());
        let p1 = Matrix::hstack(&[&Matrix::identity(n1), &Matrix::zeros(n1, n2)]);
        let p2 = Matrix::hstack(&[&Matrix::zeros(n2, n1), &Matrix::identity(n2)]);
        Ok(Square {
            first: PairHom { source: corner.clone(), target: f.source.clone(), matrix: &p1 * k.matrix() },
            second: PairHom { source: corner.clone(), target: g.source.clone(), matrix: &p2 * k.matrix() },
            corner,
        })
    }

    /// `Φ₁(M) = (M, 0)` for a module over `A/I`.
    pub fn phi1(&self, mb: &ModuleRep<F>) -> PairObject<F> {
        let x = self.inst.inflate(mb);
        let n = x.dim();
        PairObject { x, y: Subspace::zero(n) }
    }

    /// `Φ₂(M) = (M, M)` for a module over `A/I`.
    pub fn phi2(&self, mb: &ModuleRep<F>) -> PairObject<F> {
        let x = self.inst.inflate(mb);
        let n = x.dim();
        PairObject { x, y: Subspace::full(n) }
    }

    /// `Φ₁` on an `A`-module that is already killed by `I`.
    pub fn phi1_of_a_module(&self, m: &ModuleRep<F>) -> Result<PairObject<F>> {
        Ok(self.phi1(&self.inst.deflate(m)?))
    }

    pub fn phi2_of_a_module(&self, m: &ModuleRep<F>) -> Result<PairObject<F>> {
        Ok(self.phi2(&self.inst.deflate(m)?))
    }

    pub fn phi1_hom(&self, f: &ModuleHom<F>) -> PairHom<F> {
        PairHom { source: self.phi1(f.source()), target: self.phi1(f.target()), matrix: f.matrix().clone() }
    }

    pub fn phi2_hom(&self, f: &ModuleHom<F>) -> PairHom<F> {
        PairHom { source: self.phi2(f.source()), target: self.phi2(f.target()), matrix: f.matrix().clone() }
    }

    /// `Φ₁^L(X, Y) = X/Y`.
    pub fn phi1_left_adjoint(&self, p: &PairObject<F>) -> ModuleRep<F> {
        self.inst.deflate(&p.quotient_module().0).expect("X/Y is killed by I")
    }

    /// `Φ₂^R(X, Y) = Y`.
    pub fn phi2_right_adjoint(&self, p: &PairObject<F>) -> ModuleRep<F> {
        self.inst.deflate(&p.y_module().0).expect("Y is killed by I")
    }

    pub fn phi1_left_adjoint_hom(&self, h: &PairHom<F>) -> ModuleHom<F> {
        let qs = h.source.y.quotient();
        let qt = h.target.y.quotient();
        let m = &(&qt.projection * &h.matrix) * &qs.section;
        ModuleHom::new_unchecked(self.phi1_left_adjoint(&h.source), self.phi1_left_adjoint(&h.target), m)
    }

    pub fn phi2_right_adjoint_hom(&self, h: &PairHom<F>) -> ModuleHom<F> {
        ModuleHom::new_unchecked(self.phi2_right_adjoint(&h.source), self.phi2_right_adjoint(&h.target), h.y_matrix())
    }

    /// `Φ₂Φ₂^R P ↪ P ↠ Φ₁Φ₁^L P`.
    pub fn canonical_ses(&self, p: &PairObject<F>) -> Ses<PairHom<F>> {
        let sub = self.phi2(&self.phi2_right_adjoint(p));
        let quo = self.phi1(&self.phi1_left_adjoint(p));
        let q = p.y.quotient();
        Ses::new(
            PairHom { source: sub, target: p.clone(), matrix: p.y.basis_matrix() },
            PairHom { source: p.clone(), target: quo, matrix: q.projection },
        )
    }

    /// Basis of the space of pair morphisms `s → t`.
    pub fn hom_space(&self, s: &PairObject<F>, t: &PairObject<F>) -> Vec<Matrix<F>> {
        let basis = s.x.hom_space(&t.x);
        if basis.is_empty() {
            return basis;
        }
        let qt = t.y.quotient().projection;
        let by = s.y.basis_matrix();
        let images: Vec<Matrix<F>> = basis.iter().map(|h| &(&qt * h) * &by).collect();
        let coeffs = crate::matrix::solution_space(basis.len(), |c: &[F]| {
            let mut acc = vec![F::zero(); qt.rows() * by.cols()];
            for (ci, m) in c.iter().zip(&images) {
                if !ci.is_zero() {
                    for (a, b) in acc.iter_mut().zip(m.data()) {
                        *a = *a + *ci * *b;
                    }
                }
            }
            acc
        });
        coeffs
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(t.x.dim(), s.x.dim());
                for (ci, h) in c.iter().zip(&basis) {
                    if !ci.is_zero() {
                        m = &m + &h.scale(ci);
                    }
                }
                m
            })
            .collect()
    }

    pub fn hom_dim(&self, s: &PairObject<F>, t: &PairObject<F>) -> usize {
        self.hom_space(s, t).len()
    }

    pub fn find_isomorphism(&self, s: &PairObject<F>, t: &PairObject<F>) -> Result<Option<PairHom<F>>> {
        if s.dims() != t.dims() {
            return Ok(None);
        }
        if s.is_zero() {
            return Ok(Some(PairHom::zero(s, t)));
        }
        let basis = self.hom_space(s, t);
        Ok(first_combination(&basis, self.inst.cap(), |m| m.is_invertible())?.map(|m| PairHom {
            source: s.clone(),
            target: t.clone(),
            matrix: m,
        }))
    }

    pub fn is_isomorphic(&self, s: &PairObject<F>, t: &PairObject<F>) -> Result<bool> {
        Ok(self.find_isomorphism(s, t)?.is_some())
    }
}

impl<F: FiniteField> ExactCategory for Pairs<'_, F> {
    type Object = PairObject<F>;
    type Morphism = PairHom<F>;

    fn source<'m>(&self, f: &'m PairHom<F>) -> &'m PairObject<F> {
        &f.source
    }

    fn target<'m>(&self, f: &'m PairHom<F>) -> &'m PairObject<F> {
        &f.target
    }

    fn compose(&self, g: &PairHom<F>, f: &PairHom<F>) -> Result<PairHom<F>> {
        g.after(f)
    }

    fn is_zero(&self, f: &PairHom<F>) -> bool {
        f.is_zero()
    }

    fn is_iso(&self, f: &PairHom<F>) -> bool {
        f.is_iso()
    }

    fn is_zero_object(&self, x: &PairObject<F>) -> bool {
        x.is_zero()
    }

    fn kernel(&self, f: &PairHom<F>) -> PairHom<F> {
        self.pair_kernel(f).1
    }

    fn cokernel(&self, f: &PairHom<F>) -> PairHom<F> {
        self.pair_cokernel(f).1
    }

    fn lift(&self, mono: &PairHom<F>, f: &PairHom<F>) -> Option<PairHom<F>> {
        if mono.target != f.target {
            return None;
        }
        let x = mono.matrix.solve_right(&f.matrix)?;
        PairHom::new(f.source.clone(), mono.source.clone(), x).ok()
    }

    fn descend(&self, epi: &PairHom<F>, f: &PairHom<F>) -> Option<PairHom<F>> {
        if epi.source != f.source {
            return None;
        }
        let x = epi.matrix.solve_left(&f.matrix)?;
        PairHom::new(epi.target.clone(), f.target.clone(), x).ok()
    }

    fn is_mono(&self, f: &PairHom<F>) -> bool {
        f.matrix.is_injective()
    }

    fn is_epi(&self, f: &PairHom<F>) -> bool {
        f.matrix.is_surjective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{known, Ideal};
    use crate::field::Fp;

    type F2 = Fp<2>;

    fn dual() -> Instance<F2> {
        let a = known::dual_numbers::<F2>();
        let i = Ideal::new(&a, &[vec![F2::new(0), F2::new(1)]]).unwrap();
        Instance::new(a, i, crate::lattice::DEFAULT_CAP).unwrap()
    }

    fn v(xs: &[u64]) -> Vec<F2> {
        xs.iter().map(|&x| F2::new(x)).collect()
    }

    struct Fix<'a> {
        e: Pairs<'a, F2>,
        a_ta: PairObject<F2>,
        s0: PairObject<F2>,
        ss: PairObject<F2>,
    }

    fn fix(inst: &Instance<F2>) -> Fix<'_> {
        let e = Pairs::new(inst);
        let a = inst.algebra().regular_module();
        let s = inst.simples_b().unwrap().get(0).clone();
        // In the regular module of F2[t]/t² the basis is {1, t}; tA = span(e_1).
        let a_ta = e.make_pair_from_vectors(a, &[v(&[0, 1])]).unwrap();
        Fix { a_ta, s0: e.phi1(&s), ss: e.phi2(&s), e }
    }

    #[test]
    fn make_pair_examples() {
        let inst = dual();
        let f = fix(&inst);
        let a = inst.algebra().regular_module();
        assert_eq!(f.a_ta.dims(), (2, 1));
        assert!(matches!(f.e.make_pair(a.clone(), Subspace::zero(2)), Err(Error::QuotientNotInB)));
        assert!(matches!(f.e.make_pair_from_vectors(a.clone(), &[v(&[1, 0])]), Err(Error::NotSubmodule)));
        assert!(matches!(f.e.make_pair(a, Subspace::full(2)), Err(Error::NotKilledByI)));
        assert_eq!(f.s0.dims(), (1, 0));
    }

    #[test]
    fn kernels() {
        let inst = dual();
        let f = fix(&inst);
        let id = PairHom::identity(&f.a_ta);
        assert_eq!(f.e.pair_kernel(&id).0.dims(), (0, 0));
        let q = PairHom::new(f.a_ta.clone(), f.s0.clone(), Matrix::from_rows(2, &[v(&[1, 0])])).unwrap();
        let (k, _) = f.e.pair_kernel(&q);
        assert_eq!(k.dims(), (1, 1));
        assert!(f.e.is_isomorphic(&k, &f.ss).unwrap());
        let z = PairHom::zero(&f.s0, &f.s0);
        assert_eq!(f.e.pair_kernel(&z).0, f.s0);
    }

    #[test]
    fn cokernels() {
        let inst = dual();
        let f = fix(&inst);
        let id = PairHom::new(f.s0.clone(), f.ss.clone(), Matrix::identity(1)).unwrap();
        assert_eq!(f.e.pair_cokernel(&id).0.dims(), (0, 0));
        assert_eq!(f.e.pair_cokernel(&PairHom::zero(&f.s0, &f.s0)).0, f.s0);
        let incl = PairHom::new(f.ss.clone(), f.a_ta.clone(), Matrix::from_rows(1, &[v(&[0]), v(&[1])])).unwrap();
        let (c, _) = f.e.pair_cokernel(&incl);
        assert_eq!(c.dims(), (1, 0));
    }

    #[test]
    fn strictness_examples() {
        let inst = dual();
        let f = fix(&inst);
        assert_eq!(f.e.strictness(&PairHom::identity(&f.a_ta)), Strictness::Iso);
        let bi = PairHom::new(f.s0.clone(), f.ss.clone(), Matrix::identity(1)).unwrap();
        assert_eq!(f.e.strictness(&bi), Strictness::NonstrictMono);
        let q = PairHom::new(f.a_ta.clone(), f.s0.clone(), Matrix::from_rows(2, &[v(&[1, 0])])).unwrap();
        assert_eq!(f.e.strictness(&q), Strictness::StrictEpi);
        let incl = PairHom::new(f.ss.clone(), f.a_ta.clone(), Matrix::from_rows(1, &[v(&[0]), v(&[1])])).unwrap();
        assert_eq!(f.e.strictness(&incl), Strictness::StrictMono);
        // (A, tA) → (S, S): surjective on X but Y is not all of Y'.
        let q2 = PairHom::new(f.a_ta.clone(), f.ss.clone(), Matrix::from_rows(2, &[v(&[1, 0])])).unwrap();
        assert_eq!(f.e.strictness(&q2), Strictness::NonstrictEpi);
        assert_eq!(f.e.strictness(&PairHom::zero(&f.s0, &f.s0)), Strictness::Neither);
    }

    #[test]
    fn pushouts() {
        let inst = dual();
        let f = fix(&inst);
        let incl = PairHom::new(f.ss.clone(), f.a_ta.clone(), Matrix::from_rows(1, &[v(&[0]), v(&[1])])).unwrap();
        let sq = f.e.pair_pushout(&incl, &PairHom::identity(&f.ss)).unwrap();
        assert!(f.e.is_isomorphic(&sq.corner, &f.a_ta).unwrap());
        assert!(sq.first.is_iso());
        let z = f.e.zero_object();
        let sq = f.e.pair_pushout(&PairHom::zero(&z, &f.s0), &PairHom::zero(&z, &f.ss)).unwrap();
        assert_eq!(sq.corner, f.s0.direct_sum(&f.ss));
        let pb = f.e.pair_pullback(&incl, &incl).unwrap();
        assert!(f.e.is_isomorphic(&pb.corner, &f.ss).unwrap());
    }

    #[test]
    fn adjoints_and_canonical_sequence() {
        let inst = dual();
        let f = fix(&inst);
        assert_eq!(f.e.phi1_left_adjoint(&f.a_ta).dim(), 1);
        assert_eq!(f.e.phi2_right_adjoint(&f.a_ta).dim(), 1);
        assert_eq!((f.e.phi1_left_adjoint(&f.s0).dim(), f.e.phi2_right_adjoint(&f.s0).dim()), (1, 0));
        assert_eq!((f.e.phi1_left_adjoint(&f.ss).dim(), f.e.phi2_right_adjoint(&f.ss).dim()), (0, 1));
        let ses = f.e.canonical_ses(&f.a_ta);
        ses.validate(&f.e).unwrap();
        assert_eq!(ses.sub(&f.e).dims(), (1, 1));
        assert_eq!(ses.quotient(&f.e).dims(), (1, 0));
        assert!(f.e.is_strict_mono(&ses.first) && f.e.is_strict_epi(&ses.second));
        assert!(f.e.canonical_ses(&f.s0).sub(&f.e).is_zero());
        assert!(f.e.canonical_ses(&f.ss).quotient(&f.e).is_zero());
    }

    #[test]
    fn nonadmissible_sequence_is_rejected() {
        let inst = dual();
        let f = fix(&inst);
        // (S,0) → (S,S) → 0 is not admissible: the first map is not a kernel.
        let bi = PairHom::new(f.s0.clone(), f.ss.clone(), Matrix::identity(1)).unwrap();
        let z = f.e.zero_object();
        let ses = Ses::new(bi, PairHom::zero(&f.ss, &z));
        assert_eq!(ses.defect(&f.e), Some(crate::category::SesDefect::FirstNotKernel));
    }

    #[test]
    fn pair_hom_space() {
        let inst = dual();
        let f = fix(&inst);
        assert_eq!(f.e.hom_dim(&f.a_ta, &f.a_ta), 2);
        assert_eq!(f.e.hom_dim(&f.ss, &f.s0), 0);
        assert_eq!(f.e.hom_dim(&f.s0, &f.ss), 1);
    }
}
