//! Grothendieck groups of `mod-A`, `mod-A/I`, the pair category and its
//! envelope, in the bases of their simple objects; the map
//! `γ[X] = [Y] + [X/Y]`; and the K₀-level checks built from them.
//!
//! Classes in the envelope are composition-factor vectors of the associated
//! `D`-module. Pairs are classed through `α`.
//!
//! Sign conventions: relation rows are `[middle] − [sub] − [quotient]`, and
//! `[β(S)] = [Φ₂S] − [Φ₁S]`.

use std::fmt;

use serde::Serialize;

use crate::auslander::{CObject, Envelope};
use crate::category::Ses;
use crate::check::{CheckRecord, Witness};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::lattice::{submodules, SimpleBasis};
use crate::matrix::Matrix;
use crate::module::ModuleRep;
use crate::oracle::{enumerate_modules, module_presentation, pair_presentation, K0Presentation};
use crate::pair::{PairObject, Pairs};
use crate::snf::{smith_normal_form, Snf};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CategoryTag {
    A,
    B,
    E,
    C,
}

impl fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CategoryTag::A => "mod-A",
            CategoryTag::B => "mod-B",
            CategoryTag::E => "E",
            CategoryTag::C => "C",
        };
        f.write_str(s)
    }
}

/// An element of K₀, in the basis of the category's pinned simples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class {
    pub category: CategoryTag,
    pub coords: Vec<i64>,
}

impl K0Class {
    pub fn zero(category: CategoryTag, rank: usize) -> Self {
        K0Class { category, coords: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &K0Class) -> K0Class {
        assert_eq!(self.category, other.category, "classes live in different groups");
        K0Class { category: self.category, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &K0Class) -> K0Class {
        assert_eq!(self.category, other.category, "classes live in different groups");
        K0Class { category: self.category, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }
}

fn columns(rows: usize, cols: Vec<Vec<i64>>) -> Matrix<i64> {
    Matrix::from_columns(rows, &cols)
}

fn is_unimodular(m: &Matrix<i64>) -> bool {
    m.is_square() && {
        let s = smith_normal_form(m);
        s.rank() == m.rows() && s.invariants().iter().all(|&d| d == 1)
    }
}

/// Every valid `Y` for `m`: submodules with `MI ⊆ Y ⊆ ann_I(M)`.
pub fn valid_subobjects<F: FiniteField>(inst: &Instance<F>, m: &ModuleRep<F>) -> Result<Vec<Subspace<F>>> {
    let lower = inst.mi(m);
    let upper = inst.annihilator_of_i(m);
    Ok(submodules(m, inst.cap())?
        .into_iter()
        .filter(|w| w.contains_subspace(&lower) && upper.contains_subspace(w))
        .collect())
}

pub struct K0Engine<'a, F: FiniteField> {
    inst: &'a Instance<F>,
    env: Envelope<'a, F>,
    simples_c: SimpleBasis<F>,
}

impl<'a, F: FiniteField> K0Engine<'a, F> {
    pub fn new(inst: &'a Instance<F>) -> Result<Self> {
        let env = Envelope::new(inst)?;
        let simples_c = SimpleBasis::of_algebra(env.auslander().algebra(), inst.cap())?;
        Ok(K0Engine { inst, env, simples_c })
    }

    pub fn instance(&self) -> &'a Instance<F> {
        self.inst
    }

    pub fn envelope(&self) -> &Envelope<'a, F> {
        &self.env
    }

    pub fn pairs(&self) -> Pairs<'a, F> {
        Pairs::new(self.inst)
    }

    pub fn simples_a(&self) -> Result<&SimpleBasis<F>> {
        self.inst.simples_a()
    }

    pub fn simples_b(&self) -> Result<&SimpleBasis<F>> {
        self.inst.simples_b()
    }

    /// Simple objects of the envelope, as `D`-modules.
    pub fn simples_c(&self) -> &SimpleBasis<F> {
        &self.simples_c
    }

    pub fn rank(&self, tag: CategoryTag) -> Result<usize> {
        Ok(match tag {
            CategoryTag::A => self.simples_a()?.len(),
            CategoryTag::B => self.simples_b()?.len(),
            CategoryTag::E | CategoryTag::C => self.simples_c.len(),
        })
    }

    pub fn class_a(&self, m: &ModuleRep<F>) -> Result<K0Class> {
        Ok(K0Class { category: CategoryTag::A, coords: self.simples_a()?.factors(m)? })
    }

    /// Class of a module over `A/I`.
    pub fn class_b(&self, m: &ModuleRep<F>) -> Result<K0Class> {
        Ok(K0Class { category: CategoryTag::B, coords: self.simples_b()?.factors(m)? })
    }

    pub fn class_c(&self, c: &CObject<F>) -> Result<K0Class> {
        Ok(K0Class { category: CategoryTag::C, coords: self.simples_c.factors(&self.env.to_d_module(c))? })
    }

    /// `[P]`, computed as `[α(P)]`.
    pub fn class_e(&self, p: &PairObject<F>) -> Result<K0Class> {
        Ok(K0Class {
            category: CategoryTag::E,
            coords: self.simples_c.factors(&self.env.to_d_module(&self.env.alpha(p)))?,
        })
    }

    /// `γ[M] = [MI] + [M/MI]`.
    pub fn gamma(&self, m: &ModuleRep<F>) -> Result<K0Class> {
        self.gamma_with(m, &self.inst.mi(m))
    }

    /// `[Y] + [M/Y]` for any submodule `Y` with `Y` and `M/Y` killed by `I`.
    pub fn gamma_with(&self, m: &ModuleRep<F>, y: &Subspace<F>) -> Result<K0Class> {
        if !m.is_submodule(y) {
            return Err(Error::NotSubmodule);
        }
        if !self.inst.annihilator_of_i(m).contains_subspace(y) {
            return Err(Error::NotKilledByI);
        }
        if !y.contains_subspace(&self.inst.mi(m)) {
            return Err(Error::QuotientNotInB);
        }
        let sub = self.inst.deflate(&m.submodule(y)?.0)?;
        let quo = self.inst.deflate(&m.quotient(y)?.0)?;
        Ok(self.class_b(&sub)?.add(&self.class_b(&quo)?))
    }

    /// `i∗: K₀(B) → K₀(A)`, columns indexed by `B`-simples.
    pub fn i_star(&self) -> Result<Matrix<i64>> {
        let sb = self.simples_b()?;
        let cols =
            sb.simples().iter().map(|s| Ok(self.class_a(&self.inst.inflate(s))?.coords)).collect::<Result<_>>()?;
        Ok(columns(self.simples_a()?.len(), cols))
    }

    /// `γ: K₀(A) → K₀(B)`, columns indexed by `A`-simples.
    pub fn gamma_matrix(&self) -> Result<Matrix<i64>> {
        let sa = self.simples_a()?;
        let cols = sa.simples().iter().map(|s| Ok(self.gamma(s)?.coords)).collect::<Result<_>>()?;
        Ok(columns(self.simples_b()?.len(), cols))
    }

    /// `(Φ₁∗, Φ₂∗): K₀(B)² → K₀(C)`: columns `[αΦ₁S₀], …, [αΦ₁S_{s−1}], [αΦ₂S₀], …`.
    pub fn phi_matrix(&self) -> Result<Matrix<i64>> {
        let e = self.pairs();
        let sb = self.simples_b()?;
        let mut cols = Vec::with_capacity(2 * sb.len());
        for s in sb.simples() {
            cols.push(self.class_e(&e.phi1(s))?.coords);
        }
        for s in sb.simples() {
            cols.push(self.class_e(&e.phi2(s))?.coords);
        }
        Ok(columns(self.simples_c.len(), cols))
    }

    /// `(Φ₁^L∗, Φ₂^R∗)` extended to the envelope:
    /// `(X, Y, u, v) ↦ (γ[X] − [Y], [Y])`. On `α(X, Y)` this is `([X/Y], [Y])`.
    pub fn l_of(&self, c: &CObject<F>) -> Result<Vec<i64>> {
        let y = self.class_b(c.y())?;
        let first = self.gamma(c.x())?.sub(&y);
        Ok(first.coords.into_iter().chain(y.coords).collect())
    }

    /// The matrix of [`Self::l_of`] on the simples of the envelope.
    pub fn l_matrix(&self) -> Result<Matrix<i64>> {
        let s = self.simples_b()?.len();
        let cols =
            self.simples_c.simples().iter().map(|t| self.l_of(&self.env.from_d_module(t)?.0)).collect::<Result<_>>()?;
        Ok(columns(2 * s, cols))
    }

    /// `([Φ₁^L P], [Φ₂^R P])` straight from the pair functors.
    pub fn adjoint_classes(&self, p: &PairObject<F>) -> Result<Vec<i64>> {
        let e = self.pairs();
        let a = self.class_b(&e.phi1_left_adjoint(p))?;
        let b = self.class_b(&e.phi2_right_adjoint(p))?;
        Ok(a.coords.into_iter().chain(b.coords).collect())
    }

    /// `β∗: K₀(B) → K₀(C)`.
    pub fn beta_star(&self) -> Result<Matrix<i64>> {
        let sb = self.simples_b()?;
        let cols = sb.simples().iter().map(|s| Ok(self.class_c(&self.env.beta(s))?.coords)).collect::<Result<_>>()?;
        Ok(columns(self.simples_c.len(), cols))
    }

    /// `π∗: K₀(C) → K₀(A)`.
    pub fn pi_star(&self) -> Result<Matrix<i64>> {
        let cols = self
            .simples_c
            .simples()
            .iter()
            .map(|t| Ok(self.class_a(self.env.from_d_module(t)?.0.x())?.coords))
            .collect::<Result<_>>()?;
        Ok(columns(self.simples_a()?.len(), cols))
    }
}

fn snf_artifacts(rec: &mut CheckRecord, prefix: &str, s: &Snf<i64>) {
    rec.set(&format!("{prefix}_snf_diagonal"), s.invariants());
    rec.set(&format!("{prefix}_snf_u"), &s.u);
    rec.set(&format!("{prefix}_snf_v"), &s.v);
}

/// `γ` additivity on `0 → K → M → M/K → 0` with `Y′ = K ∩ MI`, `Y″ = image of MI`.
fn gamma_additive_on<F: FiniteField>(eng: &K0Engine<'_, F>, m: &ModuleRep<F>, k: &Subspace<F>) -> Result<bool> {
    let inst = eng.instance();
    let mi = inst.mi(m);
    let (kmod, _) = m.submodule(k)?;
    let (qmod, proj) = m.quotient(k)?;
    let y1 = k.relative(&k.intersection(&mi)).expect("K ∩ MI ⊆ K");
    let y2 = mi.image(proj.matrix());
    let whole = eng.gamma(m)?;
    let parts = eng.gamma_with(&kmod, &y1)?.add(&eng.gamma_with(&qmod, &y2)?);
    Ok(whole == parts)
}

/// `i∗` and `γ` are mutually inverse, and `γ` is additive on every short
/// exact sequence among modules of dimension at most `dim_bound`.
pub fn check_devissage_k0<F: FiniteField>(inst: &Instance<F>, dim_bound: usize) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let mut rec = CheckRecord::new("k0-devissage");
    let (ra, rb) = (eng.rank(CategoryTag::A)?, eng.rank(CategoryTag::B)?);
    let i_star = eng.i_star()?;
    let gamma = eng.gamma_matrix()?;
    let ab = &i_star * &gamma;
    let ba = &gamma * &i_star;
    rec.set("rank_k0_a", ra);
    rec.set("rank_k0_b", rb);
    rec.set("i_star", &i_star);
    rec.set("gamma", &gamma);
    rec.set("i_star_after_gamma", &ab);
    rec.set("gamma_after_i_star", &ba);
    if ab != Matrix::identity(ra) || ba != Matrix::identity(rb) {
        rec.fail(
            Witness::new("i∗ and γ are not mutually inverse").int_matrix("i_star", &i_star).int_matrix("gamma", &gamma),
        );
    }

    let modules = enumerate_modules(inst.algebra(), eng.simples_a()?, dim_bound, inst.cap())?;
    let mut checked = 0usize;
    for m in &modules {
        for k in submodules(m, inst.cap())? {
            if k.is_zero() || k.is_full() {
                continue;
            }
            checked += 1;
            if !gamma_additive_on(&eng, m, &k)? {
                rec.fail(Witness::new("γ not additive").module("M", m).matrix("K", &k.basis_matrix()));
            }
        }
    }
    rec.set("dim_bound", dim_bound);
    rec.set("modules_enumerated", modules.len());
    rec.set("ses_checked", checked);
    Ok(rec)
}

/// `(Φ₁^L∗, Φ₂^R∗) ∘ (Φ₁∗, Φ₂∗) = 1` and `rank K₀(C) = 2 rank K₀(B)`.
pub fn check_sod_k0<F: FiniteField>(inst: &Instance<F>, dim_bound: usize) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let e = eng.pairs();
    let mut rec = CheckRecord::new("k0-sod");
    let sb = eng.simples_b()?;
    let s = sb.len();
    let rc = eng.rank(CategoryTag::C)?;

    // Directly on objects: the adjoints applied to Φ₁S and Φ₂S.
    let mut cols = Vec::with_capacity(2 * s);
    for t in sb.simples() {
        cols.push(eng.adjoint_classes(&e.phi1(t))?);
    }
    for t in sb.simples() {
        cols.push(eng.adjoint_classes(&e.phi2(t))?);
    }
    let composite = columns(2 * s, cols);
    let g = eng.phi_matrix()?;
    let l = eng.l_matrix()?;
    let lg = &l * &g;
    rec.set("rank_k0_b", s);
    rec.set("rank_k0_c", rc);
    rec.set("composite", &composite);
    rec.set("phi_star", &g);
    rec.set("adjoint_star", &l);
    rec.set("adjoint_star_after_phi_star", &lg);
    let id = Matrix::identity(2 * s);
    if composite != id {
        rec.fail(Witness::new("adjoint composite is not the identity").int_matrix("composite", &composite));
    }
    if lg != id {
        rec.fail(Witness::new("L∘Φ on K₀(C) is not the identity").int_matrix("product", &lg));
    }
    rec.require(rc == 2 * s, "rank K₀(C) ≠ 2·rank K₀(B)");
    let uni = is_unimodular(&g);
    rec.set("phi_star_unimodular", uni);
    rec.require(uni, "(Φ₁∗, Φ₂∗) is not invertible over Z");

    // The closed form agrees with the adjoints on every small pair.
    let modules = enumerate_modules(inst.algebra(), eng.simples_a()?, dim_bound, inst.cap())?;
    let mut pairs_checked = 0usize;
    for m in &modules {
        for y in valid_subobjects(inst, m)? {
            let p = e.make_pair(m.clone(), y)?;
            pairs_checked += 1;
            let via_c = l.apply(&eng.class_e(&p)?.coords);
            let direct = eng.adjoint_classes(&p)?;
            if via_c != direct {
                rec.fail(
                    Witness::new("adjoint classes disagree with the envelope")
                        .module("X", p.x())
                        .matrix("Y", &p.y().basis_matrix()),
                );
            }
        }
    }
    rec.set("pairs_checked", pairs_checked);
    Ok(rec)
}

/// Last nonzero entry positive, column by column.
fn normalize_signs(m: &Matrix<i64>) -> Matrix<i64> {
    let cols = m
        .columns()
        .into_iter()
        .map(|c| match c.iter().rev().find(|&&x| x != 0) {
            Some(&x) if x < 0 => c.iter().map(|v| -v).collect(),
            _ => c,
        })
        .collect::<Vec<_>>();
    columns(m.rows(), cols)
}

/// Whether every column of `a` is an integer combination of columns of `b`.
fn lattice_contains(b: &Matrix<i64>, a: &Matrix<i64>) -> bool {
    let s = smith_normal_form(b);
    a.columns().iter().all(|c| s.solve(c).is_some())
}

/// `K₀(B) → K₀(C) → K₀(A) → 0` is exact.
pub fn check_localization_k0<F: FiniteField>(inst: &Instance<F>) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let mut rec = CheckRecord::new("k0-localization");
    let beta = eng.beta_star()?;
    let pi = eng.pi_star()?;
    let ra = eng.rank(CategoryTag::A)?;

    let spi = smith_normal_form(&pi);
    let surjective = spi.rank() == ra && spi.invariants().iter().all(|&d| d == 1);
    rec.set("pi_star_surjective", surjective);
    rec.require(surjective, "π∗ is not surjective");
    snf_artifacts(&mut rec, "pi_star", &spi);

    let ker = spi.kernel_basis();
    let composite_zero = (&pi * &beta).is_zero();
    let ker_in_im = lattice_contains(&beta, &ker);
    let im_in_ker = composite_zero && lattice_contains(&ker, &beta);
    rec.set("pi_after_beta_zero", composite_zero);
    rec.set("ker_pi_in_im_beta", ker_in_im);
    rec.set("im_beta_in_ker_pi", im_in_ker);
    if !(ker_in_im && im_in_ker) {
        rec.fail(
            Witness::new("ker π∗ ≠ im β∗")
                .int_matrix("beta_star", &beta)
                .int_matrix("pi_star", &pi)
                .int_matrix("ker_pi", &ker),
        );
    }
    snf_artifacts(&mut rec, "beta_star", &smith_normal_form(&beta));

    // The same maps in the (Φ₁, Φ₂) basis of K₀(C).
    let g = eng.phi_matrix()?;
    let l = eng.l_matrix()?;
    if &l * &g == Matrix::identity(g.cols()) && g.is_square() {
        rec.set("beta_star_phi", &(&l * &beta));
        rec.set("pi_star_phi", &(&pi * &g));
        rec.set("ker_pi_star_phi", &normalize_signs(&(&l * &ker)));
    } else {
        rec.fail(Witness::new("(Φ₁, Φ₂) basis unavailable").int_matrix("phi_star", &g));
    }
    rec.set("beta_star", &beta);
    rec.set("pi_star", &pi);
    rec.set("ker_pi_star", &normalize_signs(&ker));
    rec.set("rank_ker_pi_star", ker.cols());
    rec.set("rank_im_beta_star", smith_normal_form(&beta).rank());
    Ok(rec)
}

/// `[β(S)] ↦ (−[S], [S])` for every simple `S` of `B`, along two routes:
/// the closed form on `K₀(C)`, and the admissible sequence
/// `α(S, 0) ↪ α(S, S) ↠ β(S)` pushed through the pair adjoints.
pub fn check_theta_composition<F: FiniteField>(inst: &Instance<F>) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let env = eng.envelope();
    let e = eng.pairs();
    let mut rec = CheckRecord::new("k0-theta");
    let sb = eng.simples_b()?;
    let s = sb.len();
    let mut images = Vec::with_capacity(s);
    for (i, simple) in sb.simples().iter().enumerate() {
        let mut expected = vec![0i64; 2 * s];
        expected[i] = -1;
        expected[s + i] = 1;

        let b = env.beta(simple);
        let route1 = eng.l_of(&b)?;

        let p1 = e.phi1(simple);
        let p2 = e.phi2(simple);
        let a1 = env.alpha(&p1);
        let a2 = env.alpha(&p2);
        let d = simple.dim();
        let first = env.make_c_hom(&a1, &a2, Matrix::identity(d), Matrix::zeros(d, 0))?;
        let second = env.make_c_hom(&a2, &b, Matrix::zeros(0, d), Matrix::identity(d))?;
        let ses = Ses::new(first, second);
        let admissible = ses.defect(env).is_none();
        let additive = eng.class_c(&a2)? == eng.class_c(&a1)?.add(&eng.class_c(&b)?);
        let (c1, c2) = (eng.adjoint_classes(&p1)?, eng.adjoint_classes(&p2)?);
        let route2: Vec<i64> = c2.iter().zip(&c1).map(|(x, y)| x - y).collect();

        if !admissible {
            rec.fail(Witness::new(format!("α(S{i},0) → α(S{i},S{i}) → β(S{i}) is not admissible")));
        }
        if !additive {
            rec.fail(Witness::new(format!("class of α(S{i},S{i}) is not the sum of its parts")));
        }
        if route1 != expected || route2 != expected {
            rec.fail(
                Witness::new(format!("[β(S{i})] has the wrong image"))
                    .int_matrix("closed_form", &Matrix::from_rows(2 * s, std::slice::from_ref(&route1)))
                    .int_matrix("via_sequence", &Matrix::from_rows(2 * s, std::slice::from_ref(&route2))),
            );
        }
        images.push(route1);
    }
    let zero = eng.l_of(&env.zero_object())?;
    rec.require(zero.iter().all(|&x| x == 0), "zero object has a nonzero image");
    rec.set("images", &columns(2 * s, images));
    rec.set("convention", "[β(S)] = [Φ₂S] − [Φ₁S]; columns are simples of B, rows (Φ₁^L, Φ₂^R)");
    Ok(rec)
}

fn presentation_artifacts(rec: &mut CheckRecord, prefix: &str, p: &K0Presentation) {
    rec.set(&format!("{prefix}_generators"), p.generators.len());
    rec.set(&format!("{prefix}_relations"), p.relations.rows());
    rec.set(&format!("{prefix}_rank"), p.free_rank());
    rec.set(
        &format!("{prefix}_snf_diagonal"),
        p.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","),
    );
}

fn class_rows(rows: Vec<Vec<i64>>, width: usize) -> Matrix<i64> {
    Matrix::from_rows(width, &rows)
}

/// The brute-force presentations of `K₀(mod-A)`, `K₀(mod-B)`, `K₀(mod-D)` and
/// `K₀(E)` on objects of dimension at most `dim_bound` are free on the
/// simples, with each generator sent to its class.
pub fn check_oracle_agreement<F: FiniteField>(inst: &Instance<F>, dim_bound: usize) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let cap = inst.cap();
    let mut rec = CheckRecord::new("oracle-crosscheck");
    rec.set("dim_bound", dim_bound);

    let sa = eng.simples_a()?;
    let (pa, mods_a) = module_presentation(inst.algebra(), sa, dim_bound, cap)?;
    let ca = class_rows(mods_a.iter().map(|m| sa.factors(m)).collect::<Result<_>>()?, sa.len());
    presentation_artifacts(&mut rec, "mod_a", &pa);
    rec.require(pa.matches_classes(&ca), "mod-A presentation disagrees with composition factors");

    let sb = eng.simples_b()?;
    let (pb, mods_b) = module_presentation(inst.quotient_algebra(), sb, dim_bound, cap)?;
    let cb = class_rows(mods_b.iter().map(|m| sb.factors(m)).collect::<Result<_>>()?, sb.len());
    presentation_artifacts(&mut rec, "mod_b", &pb);
    rec.require(pb.matches_classes(&cb), "mod-B presentation disagrees with composition factors");

    let sc = eng.simples_c();
    let (pd, mods_d) = module_presentation(eng.envelope().auslander().algebra(), sc, dim_bound, cap)?;
    let cd = class_rows(mods_d.iter().map(|m| sc.factors(m)).collect::<Result<_>>()?, sc.len());
    presentation_artifacts(&mut rec, "mod_d", &pd);
    rec.require(pd.matches_classes(&cd), "mod-D presentation disagrees with composition factors");
    rec.require(pd.free_rank() == 2 * sb.len(), "rank K₀(mod-D) ≠ 2·#simples(B)");

    let (pe, pairs) = pair_presentation(inst, dim_bound)?;
    let ce = class_rows(pairs.iter().map(|p| Ok(eng.class_e(p)?.coords)).collect::<Result<_>>()?, sc.len());
    presentation_artifacts(&mut rec, "pairs", &pe);
    rec.require(pe.matches_classes(&ce), "pair presentation disagrees with classes through α");
    Ok(rec)
}

/// `γ` does not depend on the choice of `Y`, and is additive, on every module
/// of dimension at most `dim_bound`.
pub fn check_gamma_well_defined<F: FiniteField>(inst: &Instance<F>, dim_bound: usize) -> Result<CheckRecord> {
    let eng = K0Engine::new(inst)?;
    let mut rec = CheckRecord::new("gamma-well-defined");
    let modules = enumerate_modules(inst.algebra(), eng.simples_a()?, dim_bound, inst.cap())?;
    let (mut choices, mut sequences) = (0usize, 0usize);
    for m in &modules {
        let reference = eng.gamma(m)?;
        for y in valid_subobjects(inst, m)? {
            choices += 1;
            if eng.gamma_with(m, &y)? != reference {
                rec.fail(Witness::new("γ depends on the choice of Y").module("M", m).matrix("Y", &y.basis_matrix()));
            }
        }
        for k in submodules(m, inst.cap())? {
            if k.is_zero() || k.is_full() {
                continue;
            }
            sequences += 1;
            if !gamma_additive_on(&eng, m, &k)? {
                rec.fail(Witness::new("γ not additive").module("M", m).matrix("K", &k.basis_matrix()));
            }
        }
    }
    rec.set("dim_bound", dim_bound);
    rec.set("modules", modules.len());
    rec.set("choices_of_y", choices);
    rec.set("ses_checked", sequences);
    Ok(rec)
}
