use std::path::PathBuf;
use std::process::{Command, Output};

use devissage::check::Artifact;
use devissage_cli::{
    emit_report, parse_config, parse_selector, run_suite, CheckName, ConfigError, Format, Overrides, RunOptions,
};

const FIXTURES: [&str; 3] = ["dual_numbers_f2", "fat_point_f2", "triangular2_f2"];

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn bin(args: &[&str], env_seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_devissage"));
    cmd.args(args).env_remove("DEVISSAGE_SEED");
    if let Some(s) = env_seed {
        cmd.env("DEVISSAGE_SEED", s);
    }
    cmd.output().expect("binary runs")
}

fn quick(samples: usize) -> Overrides {
    Overrides { samples: Some(samples), ..Overrides::default() }
}

#[test]
fn dual_numbers_devissage_ranks() {
    let cfg = parse_config(fixture("dual_numbers_f2")).unwrap();
    let opts = RunOptions::resolve(&cfg, &Overrides::default());
    let r = run_suite(&cfg, &[CheckName::K0Devissage], &opts).unwrap();
    assert!(r.passed());
    let c = r.check("k0-devissage").unwrap();
    assert_eq!(c.artifact("rank_k0_a"), Some(&Artifact::Int(1)));
    assert_eq!(c.artifact("rank_k0_b"), Some(&Artifact::Int(1)));
}

#[test]
fn every_fixture_passes_all_ten_checks() {
    for name in FIXTURES {
        let cfg = parse_config(fixture(name)).unwrap();
        let opts = RunOptions::resolve(&cfg, &quick(30));
        let r = run_suite(&cfg, &parse_selector("all").unwrap(), &opts).unwrap();
        assert_eq!(r.checks.len(), 10, "{name}");
        let failing: Vec<_> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
        assert!(failing.is_empty(), "{name}: {failing:?}");
    }
}

#[test]
fn corrupted_fixture_fails_validation() {
    match parse_config(fixture("corrupted_nonassociative_f2")) {
        Err(ConfigError::AlgebraInvalid(devissage::Error::NotAssociative(..))) => {}
        other => panic!("unexpected {other:?}"),
    }
    let out = bin(&["validate", fixture("corrupted_nonassociative_f2").to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not associative on basis triple"));
}

#[test]
fn empty_suite_passes_vacuously() {
    let cfg = parse_config(fixture("dual_numbers_f2")).unwrap();
    let opts = RunOptions::resolve(&cfg, &Overrides::default());
    let r = run_suite(&cfg, &parse_selector("").unwrap(), &opts).unwrap();
    assert!(r.passed());
    assert!(r.checks.is_empty());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for name in FIXTURES {
        let cfg = parse_config(fixture(name)).unwrap();
        let opts = RunOptions::resolve(&cfg, &quick(15));
        let checks = parse_selector("all").unwrap();
        let a = emit_report(&run_suite(&cfg, &checks, &opts).unwrap(), Format::Json);
        let b = emit_report(&run_suite(&cfg, &checks, &opts).unwrap(), Format::Json);
        assert_eq!(a, b, "{name}");
    }
    let path = fixture("triangular2_f2");
    let args = ["--samples", "10", "--format", "json", "check", path.to_str().unwrap()];
    let first = bin(&args, None);
    let second = bin(&args, None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_report_shape() {
    let path = fixture("dual_numbers_f2");
    let out = bin(&["--format", "json", "k0", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"status\":\"pass\""));
    assert!(!text.contains("timing_ms"));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["instance"], "dual_numbers_f2");
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["k0-devissage", "k0-sod", "k0-localization", "k0-theta", "oracle-crosscheck"]);
    let loc = &v["checks"][2]["artifacts"];
    assert_eq!(loc["pi_star_snf_diagonal"], serde_json::json!([1]));
    assert_eq!(loc["ker_pi_star_phi"], serde_json::json!([[-1], [1]]));
}

#[test]
fn seed_precedence() {
    let path = fixture("dual_numbers_f2");
    let p = path.to_str().unwrap();
    let seed_of = |out: Output| -> u64 {
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["seed"].as_u64().unwrap()
    };
    let base = ["--format", "json", "check", "--suite", "", p];
    assert_eq!(seed_of(bin(&base, None)), 20240601);
    assert_eq!(seed_of(bin(&base, Some("77"))), 77);
    let flagged = ["--seed", "5", "--format", "json", "check", "--suite", "", p];
    assert_eq!(seed_of(bin(&flagged, Some("77"))), 5);
    assert_eq!(bin(&base, Some("not-a-number")).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let p = fixture("triangular2_f2");
    let p = p.to_str().unwrap();
    assert_eq!(bin(&["validate", p], None).status.code(), Some(0));
    assert_eq!(bin(&["validate", "/nonexistent/config.json"], None).status.code(), Some(2));
    assert_eq!(bin(&["check", "--suite", "nope", p], None).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(bin(&["--cap", "5", "k0", p], None).status.code(), Some(3));
}

#[test]
fn report_writes_file() {
    let dir = std::env::temp_dir().join(format!("devissage-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let p = fixture("fat_point_f2");
    let out =
        bin(&["report", "--suite", "k0-sod,k0-theta", "--out", out_path.to_str().unwrap(), p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(v["checks"][0]["artifacts"]["rank_k0_c"], 2);
    assert_eq!(v["checks"][1]["artifacts"]["images"], serde_json::json!([[-1], [1]]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn auslander_table_is_printed() {
    let p = fixture("triangular2_f2");
    let out = bin(&["--format", "json", "auslander", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 8);
    assert_eq!(v["block_dims"], serde_json::json!([3, 1, 2]));
    assert_eq!(v["table"]["unit"].as_array().unwrap().len(), 8);
}

#[test]
fn timing_is_opt_in() {
    let cfg = parse_config(fixture("dual_numbers_f2")).unwrap();
    let o = Overrides { timing: true, ..Overrides::default() };
    let r = run_suite(&cfg, &[CheckName::K0Theta], &RunOptions::resolve(&cfg, &o)).unwrap();
    assert!(r.timing_ms.as_ref().unwrap().contains_key("k0-theta"));
}
