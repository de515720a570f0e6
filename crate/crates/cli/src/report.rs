//! Aggregated check results and their JSON / text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use devissage::check::{Artifact, CheckRecord, Status, Witness};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format `{other}` (expected json or text)")),
        }
    }
}

/// Field order is the serialization order; every map is a `BTreeMap`, so the
/// JSON is byte-stable. Timing is only present when requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub instance: String,
    pub p: u64,
    pub seed: u64,
    pub dim_bound: usize,
    pub samples: usize,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl Report {
    pub fn new(instance: impl Into<String>, p: u64, seed: u64, dim_bound: usize, samples: usize) -> Self {
        Report {
            instance: instance.into(),
            p,
            seed,
            dim_bound,
            samples,
            status: Status::Pass,
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        if !rec.passed() {
            self.status = Status::Fail;
        }
        self.checks.push(rec);
    }

    pub fn record_time(&mut self, check: &str, ms: u64) {
        self.timing_ms.get_or_insert_with(BTreeMap::new).insert(check.to_string(), ms);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec(report).expect("reports serialize");
            out.push(b'\n');
            out
        }
        Format::Text => render_text(report).into_bytes(),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let passed = r.checks.iter().filter(|c| c.passed()).count();
    let _ = writeln!(out, "instance  {} (p = {})", r.instance, r.p);
    let _ = writeln!(out, "seed      {}", r.seed);
    let _ = writeln!(out, "dim_bound {}   samples {}", r.dim_bound, r.samples);
    let _ = writeln!(out, "status    {}   ({passed}/{} checks pass)", status_word(r.status), r.checks.len());
    for c in &r.checks {
        let _ = writeln!(out);
        let timing = r.timing_ms.as_ref().and_then(|t| t.get(&c.name)).map(|ms| format!("  [{ms} ms]"));
        let _ = writeln!(out, "[{}] {}{}", status_word(c.status), c.name, timing.unwrap_or_default());
        for (k, v) in &c.artifacts {
            render_artifact(&mut out, k, v);
        }
        if c.counterexamples > 0 {
            let _ = writeln!(out, "  counterexamples: {}", c.counterexamples);
        }
        for w in &c.witnesses {
            render_witness(&mut out, w);
        }
    }
    out
}

fn render_artifact(out: &mut String, key: &str, v: &Artifact) {
    match v {
        Artifact::Bool(b) => {
            let _ = writeln!(out, "  {key}: {b}");
        }
        Artifact::Int(n) => {
            let _ = writeln!(out, "  {key}: {n}");
        }
        Artifact::Text(s) => {
            let _ = writeln!(out, "  {key}: {s}");
        }
        Artifact::Vector(xs) => {
            let xs: Vec<String> = xs.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "  {key}: ({})", xs.join(", "));
        }
        Artifact::Matrix(rows) => {
            let _ = writeln!(out, "  {key}:");
            out.push_str(&pretty_matrix(rows, "    "));
        }
    }
}

fn render_witness(out: &mut String, w: &Witness) {
    let _ = write!(out, "  witness: {}", w.description);
    if let Some(seed) = w.seed {
        let _ = write!(out, " (seed {seed})");
    }
    let _ = writeln!(out);
    if !w.dims.is_empty() {
        let dims: Vec<String> = w.dims.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "    dims: ({})", dims.join(", "));
    }
    for (name, m) in &w.matrices {
        let _ = writeln!(out, "    {name}:");
        out.push_str(&pretty_matrix(m, "      "));
    }
}

/// Right-aligned columns in brackets; an empty matrix prints as `[]`.
pub fn pretty_matrix(rows: &[Vec<i64>], indent: &str) -> String {
    if rows.is_empty() || rows.iter().all(|r| r.is_empty()) {
        return format!("{indent}[] ({}x0)\n", rows.len());
    }
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "{indent}[ {} ]", cells.join(" "));
    }
    out
}
