//! The abelian envelope of the pair category: quadruples `(X, Y, u, v)` and
//! their equivalent description as modules over a block-matrix algebra `D`.
//!
//! ```text
//!     D = | A     I   |        X = M·e₁,  Y = M·e₂
//!         | A/I   A/I |
//! ```
//!
//! For a right `D`-module `M`, the `(1,2)` block sends `X ⊗ I → Y` (this is
//! `v`) and the `(2,1)` block sends `Y → X` (this is `u`).

use crate::algebra::Algebra;
use crate::category::{ExactCategory, Ses};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::instance::{Instance, JTilde};
use crate::lattice::submodules;
use crate::matrix::{solution_space, Matrix};
use crate::module::{first_combination, ModuleHom, ModuleRep};
use crate::pair::{PairHom, PairObject, Pairs};
use crate::subspace::Subspace;

/// Which block of `D` a basis element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    /// `(1,1)`, a copy of `A`.
    A,
    /// `(1,2)`, a copy of `I` in its echelon basis.
    Ideal,
    /// `(2,1)`, a copy of `A/I`.
    Lower,
    /// `(2,2)`, a copy of `A/I`.
    Corner,
}

#[derive(Clone, Debug)]
pub struct AuslanderAlgebra<F> {
    algebra: Algebra<F>,
    n: usize,
    k: usize,
    m: usize,
}

/// An element of `D` split into blocks: `A`-coordinates, `I`-coordinates and
/// two sets of `A/I`-coordinates.
struct Parts<F> {
    a: Vec<F>,
    x: Vec<F>,
    b: Vec<F>,
    c: Vec<F>,
}

fn add<F: FiniteField>(x: Vec<F>, y: Vec<F>) -> Vec<F> {
    x.into_iter().zip(y).map(|(a, b)| a + b).collect()
}

fn unit_vec<F: FiniteField>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Builds `D` for the instance's square-zero ideal. Associativity and the unit
/// are re-verified by [`Algebra::new`].
pub fn build_auslander_algebra<F: FiniteField>(inst: &Instance<F>) -> Result<AuslanderAlgebra<F>> {
    let a = inst.algebra();
    let ideal = inst.ideal().space();
    let q = inst.quotient_data();
    let ibasis = &inst.ideal_actions().basis;
    let (n, k) = (a.dim(), ideal.dim());
    let m = n - k;

    let from_i = |x: &[F]| -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (c, b) in x.iter().zip(ibasis) {
            for (o, &t) in out.iter_mut().zip(b) {
                *o = *o + *c * t;
            }
        }
        out
    };
    let rep = |y: &[F]| q.representatives.apply(y);
    let proj = |y: &[F]| q.projection.apply(y);

    // | a  x | | a' x' |   | aa' + xb'   ax' + xc' |
    // | b  c | | b' c' | = | ba' + cb'   bx' + cc' |,   bx' = 0 in A/I.
    let mul = |l: &Parts<F>, r: &Parts<F>| -> Parts<F> {
        let xa = from_i(&l.x);
        let a11 = add(a.mul(&l.a, &r.a), a.mul(&xa, &rep(&r.b)));
        let i12 = add(a.mul(&l.a, &from_i(&r.x)), a.mul(&xa, &rep(&r.c)));
        let b21 = proj(&add(a.mul(&rep(&l.b), &r.a), a.mul(&rep(&l.c), &rep(&r.b))));
        let c22 = proj(&a.mul(&rep(&l.c), &rep(&r.c)));
        Parts { a: a11, x: ideal.coords(&i12).expect("A·I + I·A ⊆ I"), b: b21, c: c22 }
    };

    let shape = AuslanderAlgebra { algebra: crate::algebra::known::ground_field(), n, k, m };
    let dim = n + k + 2 * m;

    let ql = q.algebra.labels();
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend((0..k).map(|s| format!("i{s}")));
    labels.extend(ql.iter().map(|l| format!("{l}_21")));
    labels.extend(ql.iter().map(|l| format!("{l}_22")));

    let mut table = Vec::with_capacity(dim * dim);
    for p in 0..dim {
        let lp = shape.split(&unit_vec(dim, p));
        for r in 0..dim {
            table.push(shape.join(&mul(&lp, &shape.split(&unit_vec(dim, r)))));
        }
    }
    let unit =
        shape.join(&Parts { a: a.unit().to_vec(), x: vec![F::zero(); k], b: vec![F::zero(); m], c: proj(a.unit()) });
    let algebra = Algebra::new(labels, table, unit)?;
    Ok(AuslanderAlgebra { algebra, ..shape })
}

impl<F: FiniteField> AuslanderAlgebra<F> {
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.n + self.k + 2 * self.m
    }

    /// `(dim A, dim I, dim A/I)`.
    pub fn block_dims(&self) -> (usize, usize, usize) {
        (self.n, self.k, self.m)
    }

    pub fn block_of(&self, i: usize) -> Block {
        let (oi, ob, oc) = self.offsets();
        match i {
            _ if i < oi => Block::A,
            _ if i < ob => Block::Ideal,
            _ if i < oc => Block::Lower,
            _ => Block::Corner,
        }
    }

    fn offsets(&self) -> (usize, usize, usize) {
        (self.n, self.n + self.k, self.n + self.k + self.m)
    }

    fn split(&self, d: &[F]) -> Parts<F> {
        let (oi, ob, oc) = self.offsets();
        Parts { a: d[..oi].to_vec(), x: d[oi..ob].to_vec(), b: d[ob..oc].to_vec(), c: d[oc..].to_vec() }
    }

    fn join(&self, p: &Parts<F>) -> Vec<F> {
        [&p.a[..], &p.x[..], &p.b[..], &p.c[..]].concat()
    }

    /// `e₁ = diag(1, 0)`.
    pub fn e1(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[..self.n].copy_from_slice(&self.algebra.unit()[..self.n]);
        v
    }

    /// `e₂ = diag(0, 1)`.
    pub fn e2(&self) -> Vec<F> {
        let mut v = self.algebra.unit().to_vec();
        v[..self.n].iter_mut().for_each(|c| *c = F::zero());
        v
    }

    /// `1̄` placed in the `(2,1)` block.
    pub fn lower_unit(&self) -> Vec<F> {
        let (_, ob, oc) = self.offsets();
        let mut v = vec![F::zero(); self.dim()];
        v[ob..oc].copy_from_slice(&self.algebra.unit()[oc..]);
        v
    }
}

/// A quadruple `(X, Y, u, v)`: `X` over `A`, `Y` over `A/I`, `u: i(Y) → X`,
/// `v: ĵ(X) → Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CObject<F> {
    x: ModuleRep<F>,
    y: ModuleRep<F>,
    u: Matrix<F>,
    v: Matrix<F>,
    jt: JTilde<F>,
}

impl<F: FiniteField> CObject<F> {
    pub fn x(&self) -> &ModuleRep<F> {
        &self.x
    }

    pub fn y(&self) -> &ModuleRep<F> {
        &self.y
    }

    pub fn u(&self) -> &Matrix<F> {
        &self.u
    }

    pub fn v(&self) -> &Matrix<F> {
        &self.v
    }

    /// `ĵ(X)` and its tensor presentation.
    pub fn j_tilde(&self) -> &JTilde<F> {
        &self.jt
    }

    /// `(dim X, dim Y)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.x.dim(), self.y.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `v` precomposed with `X ⊗_F I ↠ ĵ(X)`; column `r·dim I + s` is `v(e_r ⊗ n_s)`.
    pub fn v_on_generators(&self) -> Matrix<F> {
        &self.v * &self.jt.tensor.presentation.projection
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CHom<F> {
    source: CObject<F>,
    target: CObject<F>,
    fx: Matrix<F>,
    fy: Matrix<F>,
}

impl<F: FiniteField> CHom<F> {
    pub fn source(&self) -> &CObject<F> {
        &self.source
    }

    pub fn target(&self) -> &CObject<F> {
        &self.target
    }

    pub fn fx(&self) -> &Matrix<F> {
        &self.fx
    }

    pub fn fy(&self) -> &Matrix<F> {
        &self.fy
    }

    pub fn is_zero(&self) -> bool {
        self.fx.is_zero() && self.fy.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.fx.is_invertible() && self.fy.is_invertible()
    }

    pub fn is_injective(&self) -> bool {
        self.fx.is_injective() && self.fy.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.fx.is_surjective() && self.fy.is_surjective()
    }

    pub fn after(&self, first: &CHom<F>) -> Result<CHom<F>> {
        if first.target != self.source {
            return Err(Error::NotComposable);
        }
        Ok(CHom {
            source: first.source.clone(),
            target: self.target.clone(),
            fx: &self.fx * &first.fx,
            fy: &self.fy * &first.fy,
        })
    }

    /// The matrix of the same map between the `D`-module pictures.
    pub fn d_matrix(&self) -> Matrix<F> {
        Matrix::block_diag(&[&self.fx, &self.fy])
    }
}

/// `β(K) ↪ c ↠ c/β(K)` with `c/β(K) ≅ α(X, u(Y))`.
#[derive(Clone, Debug)]
pub struct TorsionDecomposition<F> {
    /// `K = ker u` as an `A/I`-module.
    pub torsion: ModuleRep<F>,
    pub torsion_free: PairObject<F>,
    pub ses: Ses<CHom<F>>,
    /// `c/β(K) → α(X, u(Y))`, an isomorphism.
    pub comparison: CHom<F>,
}

/// Result of comparing the quotient-category hom space with `Hom_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientHom {
    pub dim: usize,
    pub hom_a_dim: usize,
    /// Number of admissible `Y₁'` enumerated.
    pub poset_size: usize,
    /// Every basis map `f` lies in the term indexed by `Y₁ ∩ f⁻¹(Y₂)`.
    pub witnesses_ok: bool,
}

/// `α(Z, Z') ⊕ α(Y, Y) ↠ c`.
#[derive(Clone, Debug)]
pub struct Cover<F> {
    pub pair: PairObject<F>,
    pub map: CHom<F>,
}

/// The category of quadruples over a fixed instance.
#[derive(Clone, Debug)]
pub struct Envelope<'a, F> {
    inst: &'a Instance<F>,
    aus: AuslanderAlgebra<F>,
}

impl<'a, F: FiniteField> Envelope<'a, F> {
    pub fn new(inst: &'a Instance<F>) -> Result<Self> {
        Ok(Envelope { inst, aus: build_auslander_algebra(inst)? })
    }

    pub fn instance(&self) -> &'a Instance<F> {
        self.inst
    }

    pub fn auslander(&self) -> &AuslanderAlgebra<F> {
        &self.aus
    }

    fn pairs(&self) -> Pairs<'a, F> {
        Pairs::new(self.inst)
    }

    pub fn make_c_object(&self, x: ModuleRep<F>, y: ModuleRep<F>, u: Matrix<F>, v: Matrix<F>) -> Result<CObject<F>> {
        if x.algebra_dim() != self.inst.algebra().dim() {
            return Err(Error::InvalidCObject("X is not a module over A".into()));
        }
        if y.algebra_dim() != self.inst.quotient_algebra().dim() {
            return Err(Error::InvalidCObject("Y is not a module over A/I".into()));
        }
        let jt = self.inst.j_tilde(&x);
        if u.shape() != (x.dim(), y.dim()) || v.shape() != (y.dim(), jt.module.dim()) {
            return Err(Error::InvalidCObject("u or v has the wrong shape".into()));
        }
        let iy = self.inst.inflate(&y);
        let uh = ModuleHom::new(iy.clone(), x.clone(), u.clone())
            .map_err(|_| Error::InvalidCObject("u is not a module map".into()))?;
        ModuleHom::new(jt.module.clone(), y.clone(), v.clone())
            .map_err(|_| Error::InvalidCObject("v is not a module map".into()))?;
        let jt_y = self.inst.j_tilde(&iy);
        let ju = self.inst.j_tilde_hom_between(&uh, &jt_y, &jt);
        if !(&v * ju.matrix()).is_zero() {
            return Err(Error::ConditionOneFails);
        }
        if &u * &v != self.inst.multiplication_matrix(&x, &jt) {
            return Err(Error::ConditionTwoFails);
        }
        Ok(CObject { x, y, u, v, jt })
    }

    pub fn make_c_hom(
        &self,
        source: &CObject<F>,
        target: &CObject<F>,
        fx: Matrix<F>,
        fy: Matrix<F>,
    ) -> Result<CHom<F>> {
        let fxh = ModuleHom::new(source.x.clone(), target.x.clone(), fx)?;
        let fyh = ModuleHom::new(source.y.clone(), target.y.clone(), fy)?;
        if fxh.matrix() * &source.u != &target.u * fyh.matrix() {
            return Err(Error::NotHom);
        }
        let jf = self.inst.j_tilde_hom_between(&fxh, &source.jt, &target.jt);
        if fyh.matrix() * &source.v != &target.v * jf.matrix() {
            return Err(Error::NotHom);
        }
        Ok(CHom { source: source.clone(), target: target.clone(), fx: fxh.matrix().clone(), fy: fyh.matrix().clone() })
    }

    pub fn zero_object(&self) -> CObject<F> {
        self.beta(&ModuleRep::zero(self.inst.quotient_algebra().dim()))
    }

    pub fn identity(&self, c: &CObject<F>) -> CHom<F> {
        CHom { source: c.clone(), target: c.clone(), fx: Matrix::identity(c.x.dim()), fy: Matrix::identity(c.y.dim()) }
    }

    pub fn zero_hom(&self, s: &CObject<F>, t: &CObject<F>) -> CHom<F> {
        CHom {
            source: s.clone(),
            target: t.clone(),
            fx: Matrix::zeros(t.x.dim(), s.x.dim()),
            fy: Matrix::zeros(t.y.dim(), s.y.dim()),
        }
    }

    /// Rebuild `v` on `ĵ(X)` from its values on the generators `e_r ⊗ n_s`.
    fn v_from_generators(jt: &JTilde<F>, vg: &Matrix<F>) -> Matrix<F> {
        vg * &jt.tensor.presentation.section
    }

    pub fn direct_sum(&self, c1: &CObject<F>, c2: &CObject<F>) -> CObject<F> {
        let x = c1.x.direct_sum(&c2.x);
        let jt = self.inst.j_tilde(&x);
        let vg = Matrix::block_diag(&[&c1.v_on_generators(), &c2.v_on_generators()]);
        CObject {
            y: c1.y.direct_sum(&c2.y),
            u: Matrix::block_diag(&[&c1.u, &c2.u]),
            v: Self::v_from_generators(&jt, &vg),
            x,
            jt,
        }
    }

    pub fn direct_sum_hom(&self, f: &CHom<F>, g: &CHom<F>) -> CHom<F> {
        CHom {
            source: self.direct_sum(&f.source, &g.source),
            target: self.direct_sum(&f.target, &g.target),
            fx: Matrix::block_diag(&[&f.fx, &g.fx]),
            fy: Matrix::block_diag(&[&f.fy, &g.fy]),
        }
    }

    /// `α(X, Y) = (X, Y, Y ↪ X, ĵ(X) → XI ⊆ Y)`.
    pub fn alpha(&self, p: &PairObject<F>) -> CObject<F> {
        let x = p.x().clone();
        let jt = self.inst.j_tilde(&x);
        let y = self.pairs().phi2_right_adjoint(p);
        let mult = self.inst.multiplication_matrix(&x, &jt);
        let v = p.y().coords_matrix(&mult).expect("XI ⊆ Y");
        CObject { u: p.y().basis_matrix(), v, y, x, jt }
    }

    pub fn alpha_hom(&self, h: &PairHom<F>) -> CHom<F> {
        CHom {
            source: self.alpha(h.source()),
            target: self.alpha(h.target()),
            fx: h.matrix().clone(),
            fy: h.y_matrix(),
        }
    }

    /// `β(Y) = (0, Y, 0, 0)`.
    pub fn beta(&self, yb: &ModuleRep<F>) -> CObject<F> {
        let x = ModuleRep::zero(self.inst.algebra().dim());
        let jt = self.inst.j_tilde(&x);
        CObject { u: Matrix::zeros(0, yb.dim()), v: Matrix::zeros(yb.dim(), jt.module.dim()), y: yb.clone(), x, jt }
    }

    pub fn beta_hom(&self, f: &ModuleHom<F>) -> CHom<F> {
        CHom {
            source: self.beta(f.source()),
            target: self.beta(f.target()),
            fx: Matrix::zeros(0, 0),
            fy: f.matrix().clone(),
        }
    }

    /// The quotient functor to `mod-A`: `(X, Y, u, v) ↦ X`.
    pub fn serre_project(&self, c: &CObject<F>) -> ModuleRep<F> {
        c.x.clone()
    }

    pub fn serre_project_hom(&self, f: &CHom<F>) -> ModuleHom<F> {
        ModuleHom::new_unchecked(f.source.x.clone(), f.target.x.clone(), f.fx.clone())
    }

    pub fn c_kernel(&self, h: &CHom<F>) -> (CObject<F>, CHom<F>) {
        let (kx, ix) = ModuleHom::new_unchecked(h.source.x.clone(), h.target.x.clone(), h.fx.clone()).kernel();
        let (ky, iy) = ModuleHom::new_unchecked(h.source.y.clone(), h.target.y.clone(), h.fy.clone()).kernel();
        let kxs = Subspace::column_space(ix.matrix());
        let kys = Subspace::column_space(iy.matrix());
        let u = kxs.coords_matrix(&(&h.source.u * iy.matrix())).expect("u maps ker fy into ker fx");
        let jt = self.inst.j_tilde(&kx);
        let jix = self.inst.j_tilde_hom_between(&ix, &jt, &h.source.jt);
        let v = kys.coords_matrix(&(&h.source.v * jix.matrix())).expect("v maps ĵ(ker fx) into ker fy");
        let k = CObject { x: kx, y: ky, u, v, jt };
        let incl =
            CHom { source: k.clone(), target: h.source.clone(), fx: ix.matrix().clone(), fy: iy.matrix().clone() };
        (k, incl)
    }

    pub fn c_cokernel(&self, h: &CHom<F>) -> (CObject<F>, CHom<F>) {
        let (qx, px) = ModuleHom::new_unchecked(h.source.x.clone(), h.target.x.clone(), h.fx.clone()).cokernel();
        let (qy, py) = ModuleHom::new_unchecked(h.source.y.clone(), h.target.y.clone(), h.fy.clone()).cokernel();
        let sy = Subspace::column_space(&h.fy).quotient().section;
        let u = &(px.matrix() * &h.target.u) * &sy;
        let jt = self.inst.j_tilde(&qx);
        let jpx = self.inst.j_tilde_hom_between(&px, &h.target.jt, &jt);
        // ĵ is right exact, so ĵ(px) is onto and py·v' descends along it.
        let v = jpx.matrix().solve_left(&(py.matrix() * &h.target.v)).expect("py·v' vanishes on ker ĵ(px)");
        let q = CObject { x: qx, y: qy, u, v, jt };
        let proj =
            CHom { source: h.target.clone(), target: q.clone(), fx: px.matrix().clone(), fy: py.matrix().clone() };
        (q, proj)
    }

    /// Basis of `Hom_C(s, t)` as pairs `(fx, fy)`, solved directly from the
    /// two compatibility squares.
    pub fn hom_space(&self, s: &CObject<F>, t: &CObject<F>) -> Vec<(Matrix<F>, Matrix<F>)> {
        let hx = s.x.hom_space(&t.x);
        let hy = s.y.hom_space(&t.y);
        let (nx, ny) = (hx.len(), hy.len());
        if nx + ny == 0 {
            return Vec::new();
        }
        // Each unknown contributes a column [f u - u' g ; g v - v' ĵ(f)].
        let mut cols: Vec<Vec<F>> = Vec::with_capacity(nx + ny);
        for h in &hx {
            let fh = ModuleHom::new_unchecked(s.x.clone(), t.x.clone(), h.clone());
            let jf = self.inst.j_tilde_hom_between(&fh, &s.jt, &t.jt);
            let mut col = (h * &s.u).data().to_vec();
            col.extend((&t.v * jf.matrix()).scale(&-F::one()).data().iter().copied());
            cols.push(col);
        }
        for g in &hy {
            let mut col = (&t.u * g).scale(&-F::one()).data().to_vec();
            col.extend((g * &s.v).data().iter().copied());
            cols.push(col);
        }
        let rows = cols[0].len();
        let sol = solution_space(nx + ny, |c: &[F]| {
            let mut acc = vec![F::zero(); rows];
            for (ci, col) in c.iter().zip(&cols) {
                if !ci.is_zero() {
                    for (a, b) in acc.iter_mut().zip(col) {
                        *a = *a + *ci * *b;
                    }
                }
            }
            acc
        });
        sol.iter()
            .map(|c| {
                let mut fx = Matrix::zeros(t.x.dim(), s.x.dim());
                let mut fy = Matrix::zeros(t.y.dim(), s.y.dim());
                for (ci, h) in c[..nx].iter().zip(&hx) {
                    fx = &fx + &h.scale(ci);
                }
                for (ci, g) in c[nx..].iter().zip(&hy) {
                    fy = &fy + &g.scale(ci);
                }
                (fx, fy)
            })
            .collect()
    }

    pub fn hom_dim(&self, s: &CObject<F>, t: &CObject<F>) -> usize {
        self.hom_space(s, t).len()
    }

    pub fn hom_basis(&self, s: &CObject<F>, t: &CObject<F>) -> Vec<CHom<F>> {
        self.hom_space(s, t).into_iter().map(|(fx, fy)| CHom { source: s.clone(), target: t.clone(), fx, fy }).collect()
    }

    pub fn find_isomorphism(&self, s: &CObject<F>, t: &CObject<F>) -> Result<Option<CHom<F>>> {
        if s.dims() != t.dims() {
            return Ok(None);
        }
        if s.is_zero() {
            return Ok(Some(self.zero_hom(s, t)));
        }
        let basis: Vec<Matrix<F>> = self.hom_space(s, t).iter().map(|(fx, fy)| Matrix::block_diag(&[fx, fy])).collect();
        let dx = s.x.dim();
        Ok(first_combination(&basis, self.inst.cap(), |m| m.is_invertible())?.map(|m| CHom {
            source: s.clone(),
            target: t.clone(),
            fx: m.block(0, 0, dx, dx),
            fy: m.block(dx, dx, s.y.dim(), s.y.dim()),
        }))
    }

    pub fn is_isomorphic(&self, s: &CObject<F>, t: &CObject<F>) -> Result<bool> {
        Ok(self.find_isomorphism(s, t)?.is_some())
    }

    /// The `D`-module of dimension `dim X + dim Y`, `X`-coordinates first.
    pub fn to_d_module(&self, c: &CObject<F>) -> ModuleRep<F> {
        let (dx, dy) = c.dims();
        let d = dx + dy;
        let q = self.inst.quotient_data();
        let k = self.aus.k;
        let vg = c.v_on_generators();
        let action = (0..self.aus.dim())
            .map(|i| {
                let mut mat = Matrix::zeros(d, d);
                match self.aus.block_of(i) {
                    Block::A => mat.set_block(0, 0, c.x.action(i)),
                    Block::Ideal => {
                        let s = i - self.aus.n;
                        let cols: Vec<usize> = (0..dx).map(|r| r * k + s).collect();
                        mat.set_block(dx, 0, &vg.select_columns(&cols));
                    }
                    Block::Lower => {
                        let t = i - self.aus.n - self.aus.k;
                        mat.set_block(0, dx, &(&c.x.act(&q.representative(t)) * &c.u));
                    }
                    Block::Corner => {
                        let t = i - self.aus.n - self.aus.k - self.aus.m;
                        mat.set_block(dx, dx, c.y.action(t));
                    }
                }
                mat
            })
            .collect();
        ModuleRep::from_action_unchecked(d, action)
    }

    pub fn to_d_hom(&self, f: &CHom<F>) -> ModuleHom<F> {
        ModuleHom::new_unchecked(self.to_d_module(&f.source), self.to_d_module(&f.target), f.d_matrix())
    }

    /// Unpack a `D`-module into a quadruple, together with the change of
    /// basis `m → to_d_module(result)` (an isomorphism of `D`-modules).
    pub fn from_d_module(&self, m: &ModuleRep<F>) -> Result<(CObject<F>, Matrix<F>)> {
        m.validate(&self.aus.algebra).map_err(|e| Error::InvalidCObject(format!("not a D-module: {e}")))?;
        let xs = Subspace::column_space(&m.act(&self.aus.e1()));
        let ys = Subspace::column_space(&m.act(&self.aus.e2()));
        let (dx, dy) = (xs.dim(), ys.dim());
        let basis = Matrix::hstack(&[&xs.basis_matrix(), &ys.basis_matrix()]);
        let (mm, iso) = m.change_basis(&basis);
        let (n, k, nq) = (self.aus.n, self.aus.k, self.aus.m);
        let x = ModuleRep::from_action_unchecked(dx, (0..n).map(|i| mm.action(i).block(0, 0, dx, dx)).collect());
        let y = ModuleRep::from_action_unchecked(
            dy,
            (0..nq).map(|t| mm.action(n + k + nq + t).block(dx, dx, dy, dy)).collect(),
        );
        let u = mm.act(&self.aus.lower_unit()).block(0, dx, dx, dy);
        let mut vg = Matrix::zeros(dy, dx * k);
        for s in 0..k {
            let blk = mm.action(n + s).block(dx, 0, dy, dx);
            for r in 0..dx {
                for row in 0..dy {
                    vg[(row, r * k + s)] = blk[(row, r)];
                }
            }
        }
        let jt = self.inst.j_tilde(&x);
        let v = Self::v_from_generators(&jt, &vg);
        let c = self.make_c_object(x, y, u, v)?;
        let to_new = iso.matrix().inverse().expect("change of basis is invertible");
        Ok((c, to_new))
    }

    /// `β(ker u) ↪ c ↠ (X, Y/ker u, ū, v̄) ≅ α(X, u(Y))`.
    pub fn torsion_decompose(&self, c: &CObject<F>) -> TorsionDecomposition<F> {
        let kspace = Subspace::column_space(&c.u.kernel());
        let (kmod, kincl) = c.y.submodule(&kspace).expect("ker u is a submodule");
        let (yq, py) = c.y.quotient(&kspace).expect("ker u is a submodule");
        let sec = kspace.quotient().section;
        let quo = CObject { x: c.x.clone(), y: yq, u: &c.u * &sec, v: py.matrix() * &c.v, jt: c.jt.clone() };
        let tors = self.beta(&kmod);
        let first =
            CHom { source: tors, target: c.clone(), fx: Matrix::zeros(c.x.dim(), 0), fy: kincl.matrix().clone() };
        let second =
            CHom { source: c.clone(), target: quo.clone(), fx: Matrix::identity(c.x.dim()), fy: py.matrix().clone() };
        let uy = Subspace::column_space(&c.u);
        let pair = PairObject::new_unchecked(c.x.clone(), uy.clone());
        let target = self.alpha(&pair);
        let fy = uy.coords_matrix(&quo.u).expect("ū lands in u(Y)");
        let comparison = CHom { source: quo, target, fx: Matrix::identity(c.x.dim()), fy };
        TorsionDecomposition { torsion: kmod, torsion_free: pair, ses: Ses::new(first, second), comparison }
    }

    /// `Hom` in the quotient by `β(B)` between two torsion-free objects, as
    /// the colimit over `X₁I ⊆ Y₁' ⊆ Y₁` of `Hom_C(α(X₁, Y₁'), α(X₂, Y₂))`.
    pub fn quotient_hom_space(&self, p1: &PairObject<F>, p2: &PairObject<F>) -> Result<QuotientHom> {
        let pairs = self.pairs();
        let (ymod, yincl) = p1.y_module();
        let x1i = self.inst.mi(p1.x());
        let mut poset = Vec::new();
        for w in submodules(&ymod, self.inst.cap())? {
            let w_in_x = w.image(yincl.matrix());
            if w_in_x.contains_subspace(&x1i) {
                poset.push(w_in_x);
            }
        }
        let hom_a = p1.x().hom_space(p2.x());
        let ambient = p1.x().dim() * p2.x().dim();
        let flat = |ms: &[Matrix<F>]| Subspace::span(ambient, ms.iter().map(|m| m.data().to_vec()));
        let mut colim = Subspace::zero(ambient);
        for yp in &poset {
            let src = PairObject::new_unchecked(p1.x().clone(), yp.clone());
            colim = colim.sum(&flat(&pairs.hom_space(&src, p2)));
        }
        let witnesses_ok = hom_a.iter().all(|f| {
            let w = p1.y().intersection(&Subspace::preimage(f, p2.y()));
            poset.contains(&w) && p2.y().contains_subspace(&w.image(f))
        });
        Ok(QuotientHom {
            dim: colim.dim(),
            hom_a_dim: flat(&hom_a).dim(),
            poset_size: poset.len(),
            witnesses_ok: witnesses_ok && colim == flat(&hom_a),
        })
    }

    /// Cover `c` by the image of a pair: a free module onto `X` and `(Y, Y)`.
    pub fn cover_by_e(&self, c: &CObject<F>) -> Result<Cover<F>> {
        let a = self.inst.algebra();
        let n = a.dim();
        let dx = c.x.dim();
        let reg = a.regular_module();
        let free = (0..dx).fold(ModuleRep::zero(n), |acc, _| acc.direct_sum(&reg));
        let mut f = Matrix::zeros(dx, dx * n);
        for r in 0..dx {
            for i in 0..n {
                for row in 0..dx {
                    f[(row, r * n + i)] = c.x.action(i)[(row, r)];
                }
            }
        }
        let fh = ModuleHom::new(free.clone(), c.x.clone(), f.clone())?;
        let pairs = self.pairs();
        let z = pairs.make_pair(free.clone(), self.inst.mi(&free))?;
        let jt_free = self.inst.j_tilde(&free);
        let jf = self.inst.j_tilde_hom_between(&fh, &jt_free, &c.jt);
        let to_j = self.inst.jtilde_to_j(&free);
        let to_j_inv = to_j
            .matrix()
            .inverse()
            .ok_or_else(|| Error::VerificationFailure("ĵ(F) → j(F) is not invertible for a free module".into()))?;
        let g = &(&c.v * jf.matrix()) * &to_j_inv;
        let yy = pairs.phi2(&c.y);
        let pair = z.direct_sum(&yy);
        let source = self.alpha(&pair);
        let fx = Matrix::hstack(&[&f, &c.u]);
        let fy = Matrix::hstack(&[&g, &Matrix::identity(c.y.dim())]);
        let map = self.make_c_hom(&source, c, fx, fy)?;
        Ok(Cover { pair, map })
    }

    /// The `v` making `(X, Y, u, v)` valid for an injective `u`, together
    /// with the dimension of the solution space of condition (ii)'s
    /// homogeneous part (zero exactly when the solution is unique).
    pub fn solve_v(&self, x: &ModuleRep<F>, u: &Matrix<F>) -> Option<(Matrix<F>, usize)> {
        let jt = self.inst.j_tilde(x);
        let mult = self.inst.multiplication_matrix(x, &jt);
        let v = u.solve_right(&mult)?;
        Some((v, u.kernel().cols() * jt.module.dim()))
    }
}

impl<F: FiniteField> ExactCategory for Envelope<'_, F> {
    type Object = CObject<F>;
    type Morphism = CHom<F>;

    fn source<'m>(&self, f: &'m CHom<F>) -> &'m CObject<F> {
        &f.source
    }

    fn target<'m>(&self, f: &'m CHom<F>) -> &'m CObject<F> {
        &f.target
    }

    fn compose(&self, g: &CHom<F>, f: &CHom<F>) -> Result<CHom<F>> {
        g.after(f)
    }

    fn is_zero(&self, f: &CHom<F>) -> bool {
        f.is_zero()
    }

    fn is_iso(&self, f: &CHom<F>) -> bool {
        f.is_iso()
    }

    fn is_zero_object(&self, x: &CObject<F>) -> bool {
        x.is_zero()
    }

    fn kernel(&self, f: &CHom<F>) -> CHom<F> {
        self.c_kernel(f).1
    }

    fn cokernel(&self, f: &CHom<F>) -> CHom<F> {
        self.c_cokernel(f).1
    }

    fn lift(&self, mono: &CHom<F>, f: &CHom<F>) -> Option<CHom<F>> {
        if mono.target != f.target {
            return None;
        }
        let fx = mono.fx.solve_right(&f.fx)?;
        let fy = mono.fy.solve_right(&f.fy)?;
        self.make_c_hom(&f.source, &mono.source, fx, fy).ok()
    }

    fn descend(&self, epi: &CHom<F>, f: &CHom<F>) -> Option<CHom<F>> {
        if epi.source != f.source {
            return None;
        }
        let fx = epi.fx.solve_left(&f.fx)?;
        let fy = epi.fy.solve_left(&f.fy)?;
        self.make_c_hom(&epi.target, &f.target, fx, fy).ok()
    }

    fn is_mono(&self, f: &CHom<F>) -> bool {
        f.is_injective()
    }

    fn is_epi(&self, f: &CHom<F>) -> bool {
        f.is_surjective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{known, Ideal};
    use crate::field::Fp;
    use num_traits::Zero;

    type F2 = Fp<2>;

    fn inst_of(a: Algebra<F2>, ideal: &[Vec<F2>]) -> Instance<F2> {
        let i = Ideal::new(&a, ideal).unwrap();
        Instance::new(a, i, crate::lattice::DEFAULT_CAP).unwrap()
    }

    fn v(xs: &[u64]) -> Vec<F2> {
        xs.iter().map(|&x| F2::new(x)).collect()
    }

    fn dual() -> Instance<F2> {
        inst_of(known::dual_numbers(), &[v(&[0, 1])])
    }

    fn m(rows: &[&[u64]], cols: usize) -> Matrix<F2> {
        Matrix::from_rows(cols, &rows.iter().map(|r| v(r)).collect::<Vec<_>>())
    }

    struct Objs {
        a_ta: PairObject<F2>,
        s: ModuleRep<F2>,
        s2: ModuleRep<F2>,
    }

    fn objs(inst: &Instance<F2>) -> Objs {
        let e = Pairs::new(inst);
        let a_ta = e.make_pair_from_vectors(inst.algebra().regular_module(), &[v(&[0, 1])]).unwrap();
        let s = inst.simples_b().unwrap().get(0).clone();
        Objs { a_ta, s2: s.direct_sum(&s), s }
    }

    /// `(S, S², (1 0), 0)`: `u` is not injective.
    fn non_mono(c: &Envelope<'_, F2>, o: &Objs) -> CObject<F2> {
        let x = c.instance().inflate(&o.s);
        c.make_c_object(x, o.s2.clone(), m(&[&[1, 0]], 2), Matrix::zeros(2, 1)).unwrap()
    }

    #[test]
    fn algebra_dimensions() {
        let d = build_auslander_algebra(&dual()).unwrap();
        assert_eq!(d.dim(), 5);
        let f = inst_of(known::ground_field(), &[]);
        assert_eq!(build_auslander_algebra(&f).unwrap().dim(), 3);
        let t = inst_of(known::upper_triangular2(), &[v(&[0, 1, 0])]);
        let dt = build_auslander_algebra(&t).unwrap();
        assert_eq!(dt.dim(), 8);
        assert_eq!(dt.block_dims(), (3, 1, 2));
        let a = dt.algebra();
        let sum: Vec<F2> = dt.e1().iter().zip(dt.e2()).map(|(x, y)| *x + y).collect();
        assert_eq!(sum, a.unit());
        assert_eq!(a.mul(&dt.e1(), &dt.e1()), dt.e1());
        assert!(a.mul(&dt.e1(), &dt.e2()).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn lower_times_ideal_vanishes() {
        let t = inst_of(known::upper_triangular2(), &[v(&[0, 1, 0])]);
        let d = build_auslander_algebra(&t).unwrap();
        for p in 0..d.dim() {
            for q in 0..d.dim() {
                if d.block_of(p) == Block::Lower && d.block_of(q) == Block::Ideal {
                    assert!(d.algebra().product(p, q).iter().all(|x| x.is_zero()));
                }
                if d.block_of(p) == Block::Ideal && d.block_of(q) == Block::Lower {
                    let prod = d.algebra().product(p, q);
                    assert!((0..d.dim()).all(|r| prod[r].is_zero() || d.block_of(r) == Block::A));
                }
            }
        }
    }

    #[test]
    fn make_c_object_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let al = c.alpha(&o.a_ta);
        let rebuilt = c.make_c_object(al.x().clone(), al.y().clone(), al.u().clone(), al.v().clone()).unwrap();
        assert_eq!(rebuilt, al);
        non_mono(&c, &o);
        let x = inst.inflate(&o.s);
        let bad = c.make_c_object(x, o.s2.clone(), m(&[&[1, 0]], 2), m(&[&[0], &[1]], 1));
        assert!(matches!(bad, Err(Error::ConditionOneFails)));
    }

    #[test]
    fn condition_two_detected() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let al = c.alpha(&o.a_ta);
        let r = c.make_c_object(al.x().clone(), al.y().clone(), al.u().clone(), Matrix::zeros(1, 1));
        assert!(matches!(r, Err(Error::ConditionTwoFails)));
    }

    #[test]
    fn alpha_and_beta_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let e = Pairs::new(&inst);
        let o = objs(&inst);
        let al = c.alpha(&o.a_ta);
        assert!(al.u().is_injective() && al.v().is_surjective());
        let s0 = c.alpha(&e.phi1(&o.s));
        assert_eq!(s0.dims(), (1, 0));
        let ss = c.alpha(&e.phi2(&o.s));
        assert_eq!(ss.u(), &Matrix::identity(1));
        assert!(ss.v().is_zero());
        assert_eq!(c.beta(&o.s).dims(), (0, 1));
        assert!(c.beta(&ModuleRep::zero(1)).is_zero());
        assert_eq!(c.beta(&o.s2).dims(), (0, 2));
    }

    #[test]
    fn kernel_and_cokernel_are_componentwise() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let al = c.alpha(&o.a_ta);
        let z = c.zero_hom(&al, &al);
        let (k, _) = c.c_kernel(&z);
        assert_eq!(k, al);
        let (q, _) = c.c_cokernel(&z);
        assert_eq!(q, al);
        let id = c.identity(&al);
        assert!(c.c_kernel(&id).0.is_zero() && c.c_cokernel(&id).0.is_zero());
    }

    #[test]
    fn torsion_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let bs = c.beta(&o.s);
        let t = c.torsion_decompose(&bs);
        assert_eq!(t.torsion.dim(), 1);
        assert!(t.ses.quotient(&c).is_zero());
        let t = c.torsion_decompose(&c.alpha(&o.a_ta));
        assert_eq!(t.torsion.dim(), 0);
        let nm = non_mono(&c, &o);
        let t = c.torsion_decompose(&nm);
        t.ses.validate(&c).unwrap();
        assert_eq!(t.torsion.dim(), 1);
        assert_eq!(t.torsion_free.dims(), (1, 1));
        assert!(t.comparison.is_iso());
    }

    #[test]
    fn serre_projection_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        assert_eq!(c.serre_project(&c.alpha(&o.a_ta)).dim(), 2);
        assert_eq!(c.serre_project(&c.beta(&o.s)).dim(), 0);
        assert_eq!(c.serre_project(&non_mono(&c, &o)).dim(), 1);
    }

    #[test]
    fn quotient_hom_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let e = Pairs::new(&inst);
        let o = objs(&inst);
        let q = c.quotient_hom_space(&o.a_ta, &o.a_ta).unwrap();
        assert_eq!((q.dim, q.hom_a_dim), (2, 2));
        assert!(q.witnesses_ok);
        let q = c.quotient_hom_space(&e.phi1(&o.s), &e.phi2(&o.s)).unwrap();
        assert_eq!((q.dim, q.hom_a_dim), (1, 1));
        let q = c.quotient_hom_space(&e.zero_object(), &o.a_ta).unwrap();
        assert_eq!(q.dim, 0);
    }

    #[test]
    fn cover_examples() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        for obj in [c.beta(&o.s), c.alpha(&o.a_ta), non_mono(&c, &o)] {
            let cov = c.cover_by_e(&obj).unwrap();
            assert!(cov.map.is_surjective(), "{obj:?}");
        }
        let cov = c.cover_by_e(&non_mono(&c, &o)).unwrap();
        assert_eq!(cov.pair.dims(), (2 + 2, 1 + 2));
    }

    #[test]
    fn d_module_roundtrip() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let d = c.auslander().algebra().clone();
        for obj in [c.alpha(&o.a_ta), c.beta(&o.s), c.zero_object(), non_mono(&c, &o)] {
            let dm = c.to_d_module(&obj);
            dm.validate(&d).unwrap();
            assert_eq!(dm.dim(), obj.dims().0 + obj.dims().1);
            let (back, basis) = c.from_d_module(&dm).unwrap();
            assert_eq!(back, obj);
            assert_eq!(basis, Matrix::identity(dm.dim()));
        }
        let bs = c.to_d_module(&c.beta(&o.s));
        assert!(bs.act(&c.auslander().e1()).is_zero());
    }

    #[test]
    fn hom_spaces_agree_with_d_modules() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let objs = [c.alpha(&o.a_ta), c.beta(&o.s), non_mono(&c, &o)];
        for s in &objs {
            for t in &objs {
                assert_eq!(c.hom_dim(s, t), c.to_d_module(s).hom_dim(&c.to_d_module(t)));
            }
        }
    }

    #[test]
    fn v_is_unique_for_injective_u() {
        let inst = dual();
        let c = Envelope::new(&inst).unwrap();
        let o = objs(&inst);
        let al = c.alpha(&o.a_ta);
        let (v, free) = c.solve_v(al.x(), al.u()).unwrap();
        assert_eq!(free, 0);
        assert_eq!(&v, al.v());
    }
}
