//! Acceptance run over the shipped fixtures: one PASS/FAIL line per criterion.
//!
//! Built with `harness = false` so the lines appear in `cargo test` output.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use devissage::check::{Artifact, CheckRecord};
use devissage::grothendieck as k0;
use devissage::instance::Instance;
use devissage::suites;
use devissage::F2;
use devissage_cli::{parse_config, AnyInstance};

/// A sampled property suite: `(instance, seed, samples)`.
type SampledSuite = fn(&Instance<F2>, u64, usize) -> devissage::Result<CheckRecord>;

const SEED: u64 = 20240601;
const DIM_BOUND: usize = 3;

struct Fixture {
    name: &'static str,
    inst: Instance<F2>,
    /// `(rank K₀(A), rank K₀(B))`.
    ranks: (i64, i64),
}

fn load(name: &'static str, ranks: (i64, i64)) -> Fixture {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
    let cfg = parse_config(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    let AnyInstance::F2(inst) = cfg.into_instance() else {
        panic!("{name}: expected a characteristic-2 fixture");
    };
    Fixture { name, inst, ranks }
}

fn int(rec: &CheckRecord, key: &str) -> Option<i64> {
    match rec.artifact(key) {
        Some(Artifact::Int(n)) => Some(*n),
        _ => None,
    }
}

fn matrix(rec: &CheckRecord, key: &str) -> Option<Vec<Vec<i64>>> {
    match rec.artifact(key) {
        Some(Artifact::Matrix(m)) => Some(m.clone()),
        _ => None,
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `[−I; I]`, the expected images of the torsion simples.
fn minus_id_id(n: usize) -> Vec<Vec<i64>> {
    let id = identity(n);
    id.iter().map(|r| r.iter().map(|x| -x).collect()).chain(id.iter().cloned()).collect()
}

/// Every listed property ran at least `min` cases with no failures.
fn properties_clean(rec: &CheckRecord, props: &[&str], min: i64, problems: &mut Vec<String>, fixture: &str) {
    for p in props {
        let cases = int(rec, &format!("{p}_cases")).unwrap_or(0);
        if cases < min {
            problems.push(format!("{fixture}: {p} ran {cases} < {min} cases"));
        }
        if let Some(bad) = int(rec, &format!("{p}_failures")) {
            problems.push(format!("{fixture}: {p} failed {bad} times"));
        }
    }
    if !rec.passed() {
        problems.push(format!("{fixture}: {} reported {} counterexamples", rec.name, rec.counterexamples));
    }
}

struct Outcome {
    problems: Vec<String>,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn criterion(id: usize, label: &str, limit: Option<Duration>, body: impl FnOnce(&mut Vec<String>)) -> bool {
    let mut problems = Vec::new();
    let start = Instant::now();
    body(&mut problems);
    let out = Outcome { problems, elapsed: start.elapsed(), limit };
    let over = out.limit.is_some_and(|l| out.elapsed > l);
    let ok = out.problems.is_empty() && !over;
    let budget = out.limit.map(|l| format!(" / limit {:.0}s", l.as_secs_f64())).unwrap_or_default();
    println!("{} [{id}] {label} ({:.2}s{budget})", if ok { "PASS" } else { "FAIL" }, out.elapsed.as_secs_f64());
    for p in &out.problems {
        println!("       - {p}");
    }
    if over {
        println!("       - exceeded time limit");
    }
    ok
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn main() {
    let fixtures = [load("dual_numbers_f2", (1, 1)), load("fat_point_f2", (1, 1)), load("triangular2_f2", (2, 2))];
    let mut all = true;

    // Per-fixture limit of 5 s, checked inside.
    all &= criterion(1, "devissage at K0: i_* and gamma mutually inverse, ranks 1/1, 1/1, 2/2", None, |probs| {
        for f in &fixtures {
            let start = Instant::now();
            match k0::check_devissage_k0(&f.inst, DIM_BOUND) {
                Ok(rec) => {
                    let (ra, rb) = f.ranks;
                    if !rec.passed() || int(&rec, "rank_k0_a") != Some(ra) || int(&rec, "rank_k0_b") != Some(rb) {
                        probs.push(format!("{}: ranks or inverse identities wrong", f.name));
                    }
                    let id = identity(ra as usize);
                    if matrix(&rec, "i_star_after_gamma") != Some(id.clone())
                        || matrix(&rec, "gamma_after_i_star") != Some(id)
                    {
                        probs.push(format!("{}: composites are not the identity", f.name));
                    }
                }
                Err(e) => probs.push(format!("{}: {e}", f.name)),
            }
            if start.elapsed() > Duration::from_secs(5) {
                probs.push(format!("{}: took {:.2}s > 5s", f.name, start.elapsed().as_secs_f64()));
            }
        }
    });

    all &= criterion(
        2,
        "semi-orthogonal decomposition at K0: adjoints after Phi is the identity, rank C = 2, 2, 4",
        secs(10),
        |probs| {
            for f in &fixtures {
                match k0::check_sod_k0(&f.inst, DIM_BOUND) {
                    Ok(rec) => {
                        let rc = 2 * f.ranks.1;
                        if !rec.passed()
                            || int(&rec, "rank_k0_c") != Some(rc)
                            || matrix(&rec, "composite") != Some(identity(rc as usize))
                        {
                            probs.push(format!("{}: composite or rank K0(C) wrong", f.name));
                        }
                    }
                    Err(e) => probs.push(format!("{}: {e}", f.name)),
                }
            }
        },
    );

    all &= criterion(
        3,
        "localization at K0: ker pi_* = im beta_* with SNF certificates; dual numbers kernel Z(-1,1)",
        secs(10),
        |probs| {
            for f in &fixtures {
                match k0::check_localization_k0(&f.inst) {
                    Ok(rec) => {
                        let both = [rec.artifact("ker_pi_in_im_beta"), rec.artifact("im_beta_in_ker_pi")]
                            .iter()
                            .all(|a| *a == Some(&Artifact::Bool(true)));
                        let certified =
                            ["pi_star_snf_diagonal", "pi_star_snf_u", "pi_star_snf_v", "beta_star_snf_diagonal"]
                                .iter()
                                .all(|k| rec.artifact(k).is_some());
                        if !rec.passed() || !both || !certified {
                            probs.push(format!("{}: sublattices differ or certificates missing", f.name));
                        }
                        if f.name == "dual_numbers_f2"
                            && matrix(&rec, "ker_pi_star_phi") != Some(vec![vec![-1], vec![1]])
                        {
                            probs.push(format!("{}: kernel is not Z(-1,1)", f.name));
                        }
                    }
                    Err(e) => probs.push(format!("{}: {e}", f.name)),
                }
            }
        },
    );

    all &= criterion(4, "torsion simples map to (-[S], [S]) for every simple of B", None, |probs| {
        for f in &fixtures {
            match k0::check_theta_composition(&f.inst) {
                Ok(rec) => {
                    if !rec.passed() || matrix(&rec, "images") != Some(minus_id_id(f.ranks.1 as usize)) {
                        probs.push(format!("{}: images are not (-id, id)", f.name));
                    }
                }
                Err(e) => probs.push(format!("{}: {e}", f.name)),
            }
        }
    });

    all &= criterion(
        5,
        "brute-force K0 presentations at dim 3: mod-A ranks 1, 1, 2; mod-D rank 2 #simples(B)",
        secs(60),
        |probs| {
            for f in &fixtures {
                match k0::check_oracle_agreement(&f.inst, DIM_BOUND) {
                    Ok(rec) => {
                        if !rec.passed()
                            || int(&rec, "mod_a_rank") != Some(f.ranks.0)
                            || int(&rec, "mod_d_rank") != Some(2 * f.ranks.1)
                        {
                            probs.push(format!("{}: presentation ranks disagree", f.name));
                        }
                    }
                    Err(e) => probs.push(format!("{}: {e}", f.name)),
                }
            }
        },
    );

    all &= criterion(
        6,
        "quasi-abelian axioms: 200 diagrams each, strict monos stable under pushout, strict epis under pullback",
        secs(60),
        |probs| {
            for f in &fixtures {
                match suites::check_axioms(&f.inst, SEED, suites::AXIOM_DIAGRAMS) {
                    Ok(rec) => properties_clean(
                        &rec,
                        &["pushout_of_strict_mono", "pullback_of_strict_epi"],
                        suites::AXIOM_DIAGRAMS as i64,
                        probs,
                        f.name,
                    ),
                    Err(e) => probs.push(format!("{}: {e}", f.name)),
                }
            }
        },
    );

    all &= criterion(
        7,
        "envelope propositions: j, j-tilde, quotient in B, unique v, torsion pair, covers, quotient homs (100 samples)",
        secs(120),
        |probs| {
            let n = suites::PROPERTY_SAMPLES;
            for f in &fixtures {
                let runs: [(SampledSuite, &[&str]); 4] = [
                    (suites::check_functors, &["j_preserves_surjections", "jtilde_to_j_surjective"]),
                    (suites::check_envelope, &["quotient_in_b", "v_unique", "cover_is_epi"]),
                    (suites::check_torsion, &["no_maps_torsion_to_free", "torsion_decomposition"]),
                    (suites::check_serre, &["quotient_homs_match"]),
                ];
                for (run, props) in runs {
                    match run(&f.inst, SEED, n) {
                        Ok(rec) => properties_clean(&rec, props, n as i64, probs, f.name),
                        Err(e) => probs.push(format!("{}: {e}", f.name)),
                    }
                }
            }
        },
    );

    all &= criterion(
        8,
        "gamma independent of the chosen subobject and additive, all modules of dim <= 3",
        None,
        |probs| {
            for f in &fixtures {
                match k0::check_gamma_well_defined(&f.inst, DIM_BOUND) {
                    Ok(rec) => {
                        let exercised =
                            int(&rec, "choices_of_y").unwrap_or(0) > 0 && int(&rec, "ses_checked").unwrap_or(0) > 0;
                        if !rec.passed() || !exercised {
                            probs.push(format!("{}: gamma check failed or enumerated nothing", f.name));
                        }
                    }
                    Err(e) => probs.push(format!("{}: {e}", f.name)),
                }
            }
        },
    );

    if !all {
        std::process::exit(1);
    }
}
