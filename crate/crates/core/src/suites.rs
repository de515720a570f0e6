//! Seeded property suites over sampled objects and morphisms.
//!
//! Each suite draws `samples` independent cases; case `i` uses
//! `sample_seed(seed, i)`, recorded in any witness it produces.

use std::collections::BTreeMap;

use rand::Rng;

use crate::auslander::Envelope;
use crate::category::{ExactCategory, Modules, Ses};
use crate::check::{CheckRecord, Witness};
use crate::error::Result;
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::lattice::submodules;
use crate::module::ModuleRep;
use crate::oracle::extensions;
use crate::pair::{PairHom, Pairs, Strictness};
use crate::sampling::{sample_seed, Sampler};
use crate::subspace::Subspace;

pub const AXIOM_DIAGRAMS: usize = 200;
pub const PROPERTY_SAMPLES: usize = 100;

/// Largest `A/I`-module whose full submodule lattice the Serre suite enumerates.
const SERRE_DIM: usize = 4;

/// Per-property counters: how many cases ran and how many failed.
#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, (usize, usize)>,
}

impl Tally {
    fn record(&mut self, rec: &mut CheckRecord, name: &'static str, ok: bool, witness: impl FnOnce() -> Witness) {
        let e = self.counts.entry(name).or_default();
        e.0 += 1;
        if !ok {
            e.1 += 1;
            rec.fail(witness().with_property(name));
        }
    }

    fn finish(self, rec: &mut CheckRecord) {
        for (name, (n, bad)) in self.counts {
            rec.set(&format!("{name}_cases"), n);
            if bad > 0 {
                rec.set(&format!("{name}_failures"), bad);
            }
        }
    }
}

impl Witness {
    fn with_property(mut self, name: &str) -> Self {
        self.description = format!("{name}: {}", self.description);
        self
    }
}

fn pair_witness<F: FiniteField>(desc: &str, seed: u64, h: &PairHom<F>) -> Witness {
    Witness::new(desc)
        .seed(seed)
        .module("source.X", h.source().x())
        .matrix("source.Y", &h.source().y().basis_matrix())
        .module("target.X", h.target().x())
        .matrix("target.Y", &h.target().y().basis_matrix())
        .matrix("map", h.matrix())
}

/// Strict monos are stable under pushout and strict epis under pullback,
/// along with the basic exact-structure facts about pairs.
pub fn check_axioms<F: FiniteField>(inst: &Instance<F>, seed: u64, diagrams: usize) -> Result<CheckRecord> {
    let e = Pairs::new(inst);
    let modules = Modules::<F>::new();
    let mut rec = CheckRecord::new("axioms");
    let mut t = Tally::default();
    let mut nontrivial = 0usize;
    for i in 0..diagrams as u64 {
        let s = sample_seed(seed, i);
        let mut smp = Sampler::new(inst, s);

        let f = smp.strict_mono();
        let g = smp.pair_hom_from(f.source());
        let sq = e.pair_pushout(&f, &g)?;
        let commutes = sq.first.after(&f)?.matrix() == sq.second.after(&g)?.matrix();
        t.record(&mut rec, "pushout_commutes", commutes, || pair_witness("square does not commute", s, &f));
        t.record(&mut rec, "pushout_of_strict_mono", e.is_strict_mono(&sq.second), || {
            pair_witness("pushout leg is not a strict mono", s, &f).matrix("g", g.matrix())
        });
        if !f.is_iso() && !g.is_zero() {
            nontrivial += 1;
        }

        let f = smp.strict_epi();
        let g = smp.pair_hom_to(f.target());
        let sq = e.pair_pullback(&f, &g)?;
        let commutes = f.after(&sq.first)?.matrix() == g.after(&sq.second)?.matrix();
        t.record(&mut rec, "pullback_commutes", commutes, || pair_witness("square does not commute", s, &f));
        t.record(&mut rec, "pullback_of_strict_epi", e.is_strict_epi(&sq.second), || {
            pair_witness("pullback leg is not a strict epi", s, &f).matrix("g", g.matrix())
        });
        if !f.is_iso() && !g.is_zero() {
            nontrivial += 1;
        }

        let p = smp.pair();
        let q = if smp.rng().gen_bool(0.5) { p.clone() } else { smp.pair() };
        let h = smp.pair_hom(&p, &q);
        let bijective = h.matrix().is_invertible() && h.y_matrix().is_invertible();
        t.record(&mut rec, "iso_iff_bijective", (e.strictness(&h) == Strictness::Iso) == bijective, || {
            pair_witness("strictness disagrees with bijectivity", s, &h)
        });

        let canon = e.canonical_ses(&p);
        t.record(&mut rec, "canonical_ses_admissible", canon.defect(&e).is_none(), || {
            Witness::new("canonical sequence is not admissible").seed(s).module("X", p.x())
        });

        let m = smp.strict_mono();
        let (_, c) = e.pair_cokernel(&m);
        let ses = Ses::new(m.clone(), c.clone());
        let underlying = Ses::new(m.x_hom(), c.x_hom());
        let ok = ses.defect(&e).is_none() && underlying.defect(&modules).is_none();
        t.record(&mut rec, "forgetful_exact", ok, || pair_witness("underlying sequence is not exact", s, &m));

        let y1 = smp.pair_on(p.x());
        let y2 = smp.pair_on(p.x());
        let meet = y1.y().intersection(y2.y());
        t.record(&mut rec, "intersection_of_valid_y", meet.contains_subspace(&inst.mi(p.x())), || {
            Witness::new("XI ⊄ Y₁ ∩ Y₂").seed(s).module("X", p.x())
        });
    }
    rec.set("diagrams", diagrams);
    rec.set("nontrivial_diagrams", nontrivial);
    rec.set("seed", seed as i64);
    t.finish(&mut rec);
    Ok(rec)
}

/// `j`, `ĵ`, `Φ₁`, `Φ₂` and their adjoints.
pub fn check_functors<F: FiniteField>(inst: &Instance<F>, seed: u64, samples: usize) -> Result<CheckRecord> {
    let e = Pairs::new(inst);
    let mut rec = CheckRecord::new("functors");
    let mut t = Tally::default();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let mut smp = Sampler::new(inst, s);

        let m = smp.module();
        let f = smp.surjection(&m);
        t.record(&mut rec, "j_preserves_surjections", inst.j_hom(&f).is_surjective(), || {
            Witness::new("MI → NI is not onto").seed(s).module("M", &m).matrix("f", f.matrix())
        });
        t.record(&mut rec, "jtilde_to_j_surjective", inst.jtilde_to_j(&m).is_surjective(), || {
            Witness::new("M ⊗ I → MI is not onto").seed(s).module("M", &m)
        });

        // i^L ⊣ i
        let n = smp.b_module();
        let (il, _) = inst.i_left_adjoint(&m);
        t.record(&mut rec, "i_adjunction", il.hom_dim(&n) == m.hom_dim(&inst.inflate(&n)), || {
            Witness::new("Hom(M/MI, N) ≠ Hom(M, N)").seed(s).module("M", &m).module("N", &n)
        });

        // Φ₁^L ⊣ Φ₁ and Φ₂ ⊣ Φ₂^R
        let p = smp.pair();
        let left = e.phi1_left_adjoint(&p).hom_dim(&n) == e.hom_dim(&p, &e.phi1(&n));
        let right = n.hom_dim(&e.phi2_right_adjoint(&p)) == e.hom_dim(&e.phi2(&n), &p);
        t.record(&mut rec, "phi_adjunctions", left && right, || {
            Witness::new("adjunction hom dimensions differ").seed(s).module("X", p.x()).module("N", &n)
        });

        // Φ₁^L Φ₁ ≅ id, Φ₂^R Φ₂ ≅ id, Φ₂^R Φ₁ = 0.
        let cap = inst.cap();
        let same = |m: ModuleRep<F>| -> Result<bool> { Ok(m == n || m.is_isomorphic(&n, cap)?) };
        let ok = same(e.phi1_left_adjoint(&e.phi1(&n)))?
            && same(e.phi2_right_adjoint(&e.phi2(&n)))?
            && e.phi2_right_adjoint(&e.phi1(&n)).is_zero();
        t.record(&mut rec, "phi_unit_counit", ok, || {
            Witness::new("adjoint composites are wrong").seed(s).module("N", &n)
        });

        // Φ₁, Φ₂ send short exact sequences of B-modules to admissible ones.
        let w = smp.submodule(&n);
        let (_, incl) = n.submodule(&w)?;
        let (_, proj) = n.quotient(&w)?;
        let ok1 = Ses::new(e.phi1_hom(&incl), e.phi1_hom(&proj)).defect(&e).is_none();
        let ok2 = Ses::new(e.phi2_hom(&incl), e.phi2_hom(&proj)).defect(&e).is_none();
        t.record(&mut rec, "phi_exact", ok1 && ok2, || {
            Witness::new("Φ does not preserve the sequence").seed(s).module("N", &n).matrix("W", &w.basis_matrix())
        });
    }
    rec.set("samples", samples);
    rec.set("seed", seed as i64);
    t.finish(&mut rec);
    Ok(rec)
}

/// Quadruples: the conditions, `α` and `β`, the `D`-module picture, covers.
pub fn check_envelope<F: FiniteField>(inst: &Instance<F>, seed: u64, samples: usize) -> Result<CheckRecord> {
    let env = Envelope::new(inst)?;
    let e = Pairs::new(inst);
    let mut rec = CheckRecord::new("envelope");
    let mut t = Tally::default();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let mut smp = Sampler::new(inst, s);

        let c = smp.c_object(&env);
        let cw = || {
            Witness::new("quadruple")
                .seed(s)
                .module("X", c.x())
                .module("Y", c.y())
                .matrix("u", c.u())
                .matrix("v", c.v())
        };
        let ok = Subspace::column_space(c.u()).contains_subspace(&inst.mi(c.x()));
        t.record(&mut rec, "quotient_in_b", ok, cw);

        let p = smp.pair();
        let a = env.alpha(&p);
        let ok = match env.solve_v(p.x(), a.u()) {
            Some((v, free)) => free == 0 && &v == a.v(),
            None => false,
        };
        t.record(&mut rec, "v_unique", ok, || Witness::new("v is not forced by u").seed(s).module("X", p.x()));

        let q = smp.pair();
        let ok = e.hom_dim(&p, &q) == env.hom_dim(&a, &env.alpha(&q));
        t.record(&mut rec, "alpha_fully_faithful", ok, || {
            Witness::new("hom dimensions differ").seed(s).module("P.X", p.x()).module("Q.X", q.x())
        });
        let (n1, n2) = (smp.b_module(), smp.b_module());
        let ok = n1.hom_dim(&n2) == env.hom_dim(&env.beta(&n1), &env.beta(&n2));
        t.record(&mut rec, "beta_fully_faithful", ok, || {
            Witness::new("hom dimensions differ").seed(s).module("N1", &n1).module("N2", &n2)
        });

        let dc = env.to_d_module(&c);
        let ok = dc.validate(env.auslander().algebra()).is_ok() && env.from_d_module(&dc)?.0 == c;
        t.record(&mut rec, "d_module_roundtrip", ok, cw);

        let c2 = smp.c_object(&env);
        let ok = env.hom_dim(&c, &c2) == dc.hom_dim(&env.to_d_module(&c2));
        t.record(&mut rec, "d_module_homs", ok, cw);

        // Kernels and cokernels computed on quadruples are those of D-modules.
        let h = smp.c_hom(&env, &c, &c2);
        let dh = env.to_d_hom(&h);
        let (_, kin) = env.c_kernel(&h);
        let (_, cpr) = env.c_cokernel(&h);
        let dk = env.to_d_hom(&kin);
        let dq = env.to_d_hom(&cpr);
        let ok = dk.is_injective()
            && dk.image() == dh.kernel_space()
            && dq.is_surjective()
            && dq.kernel_space() == dh.image()
            && Ses::new(kin.clone(), env.c_cokernel(&kin).1).defect(&env).is_none();
        t.record(&mut rec, "exactness_transport", ok, || cw().matrix("fx", h.fx()).matrix("fy", h.fy()));

        let cover = env.cover_by_e(&c)?;
        t.record(&mut rec, "cover_is_epi", env.is_epi(&cover.map), cw);

        // Objects with injective u are in the image of α.
        if c.u().is_injective() {
            let td = env.torsion_decompose(&c);
            t.record(&mut rec, "mono_u_in_alpha_image", td.torsion.is_zero() && td.comparison.is_iso(), cw);
        }
    }
    rec.set("samples", samples);
    rec.set("seed", seed as i64);
    t.finish(&mut rec);
    Ok(rec)
}

/// `(β(B), α(E))` is a torsion pair.
pub fn check_torsion<F: FiniteField>(inst: &Instance<F>, seed: u64, samples: usize) -> Result<CheckRecord> {
    let env = Envelope::new(inst)?;
    let mut rec = CheckRecord::new("torsion");
    let mut t = Tally::default();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let mut smp = Sampler::new(inst, s);

        let n = smp.b_module();
        let p = smp.pair();
        let ok = env.hom_dim(&env.beta(&n), &env.alpha(&p)) == 0;
        t.record(&mut rec, "no_maps_torsion_to_free", ok, || {
            Witness::new("Hom(β N, α P) ≠ 0").seed(s).module("N", &n).module("X", p.x())
        });

        let c = smp.c_object(&env);
        let td = env.torsion_decompose(&c);
        let ok = td.ses.defect(&env).is_none()
            && td.ses.sub(&env).x().is_zero()
            && td.ses.quotient(&env).u().is_injective()
            && td.comparison.is_iso()
            && env
                .make_c_hom(
                    td.comparison.source(),
                    td.comparison.target(),
                    td.comparison.fx().clone(),
                    td.comparison.fy().clone(),
                )
                .is_ok();
        t.record(&mut rec, "torsion_decomposition", ok, || {
            Witness::new("decomposition is not a torsion sequence")
                .seed(s)
                .module("X", c.x())
                .module("Y", c.y())
                .matrix("u", c.u())
                .matrix("v", c.v())
        });
    }
    rec.set("samples", samples);
    rec.set("seed", seed as i64);
    t.finish(&mut rec);
    Ok(rec)
}

/// `β(B)` is a Serre subcategory and the quotient by it is `mod-A`.
pub fn check_serre<F: FiniteField>(inst: &Instance<F>, seed: u64, samples: usize) -> Result<CheckRecord> {
    let env = Envelope::new(inst)?;
    let d = env.auslander().algebra();
    let cap = inst.cap();
    let mut rec = CheckRecord::new("serre");
    let mut t = Tally::default();
    let small_b = |smp: &mut Sampler<'_, F>| -> ModuleRep<F> {
        for _ in 0..20 {
            let n = smp.b_module();
            if n.dim() <= SERRE_DIM {
                return n;
            }
        }
        inst.simples_b().map(|sb| sb.get(0).clone()).unwrap_or_else(|_| ModuleRep::zero(inst.quotient_algebra().dim()))
    };
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let mut smp = Sampler::new(inst, s);

        // Subobjects and quotients of β-objects, found in the D-module picture.
        let n = small_b(&mut smp);
        let dn = env.to_d_module(&env.beta(&n));
        let mut ok = true;
        for w in submodules(&dn, cap)? {
            let sub = dn.submodule(&w)?.0;
            let quo = dn.quotient(&w)?.0;
            ok &= env.from_d_module(&sub)?.0.x().is_zero() && env.from_d_module(&quo)?.0.x().is_zero();
        }
        t.record(&mut rec, "closed_under_sub_and_quotient", ok, || {
            Witness::new("a subquotient of β(N) leaves β(B)").seed(s).module("N", &n)
        });

        // Every extension of two β-objects is a β-object.
        let (n1, n2) = (small_b(&mut smp), small_b(&mut smp));
        let (d1, d2) = (env.to_d_module(&env.beta(&n1)), env.to_d_module(&env.beta(&n2)));
        let mut ok = true;
        for m in extensions(d, &d1, &d2, cap)? {
            ok &= env.from_d_module(&m)?.0.x().is_zero();
        }
        t.record(&mut rec, "closed_under_extension", ok, || {
            Witness::new("an extension leaves β(B)").seed(s).module("N1", &n1).module("N2", &n2)
        });

        // π is exact.
        let c1 = smp.c_object(&env);
        let c2 = smp.c_object(&env);
        let h = smp.c_hom(&env, &c1, &c2);
        let ph = env.serre_project_hom(&h);
        let (k, _) = env.c_kernel(&h);
        let (q, _) = env.c_cokernel(&h);
        let ok = env.serre_project(&k).dim() == ph.kernel_space().dim()
            && env.serre_project(&q).dim() == c2.x().dim() - ph.rank();
        t.record(&mut rec, "projection_exact", ok, || {
            Witness::new("π does not preserve the kernel or cokernel").seed(s).matrix("fx", h.fx()).matrix("fy", h.fy())
        });

        // Homs in the quotient between α-objects are homs of A-modules.
        let p1 = smp.pair();
        let p2 = smp.pair();
        let qh = env.quotient_hom_space(&p1, &p2)?;
        t.record(&mut rec, "quotient_homs_match", qh.dim == qh.hom_a_dim && qh.witnesses_ok, || {
            Witness::new(format!("colimit has dimension {}, Hom_A has {}", qh.dim, qh.hom_a_dim))
                .seed(s)
                .module("X1", p1.x())
                .matrix("Y1", &p1.y().basis_matrix())
                .module("X2", p2.x())
                .matrix("Y2", &p2.y().basis_matrix())
        });
    }
    rec.set("samples", samples);
    rec.set("seed", seed as i64);
    t.finish(&mut rec);
    Ok(rec)
}
