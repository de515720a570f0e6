//! The `auslander` verb: the structure constants of `D`.

use std::fmt::Write as _;

use devissage::algebra::AlgebraReport;
use devissage::auslander::{build_auslander_algebra, Block};
use serde::Serialize;

use crate::config::InstanceConfig;
use crate::suite::SuiteError;
use crate::with_instance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuslanderReport {
    pub instance: String,
    pub dim: usize,
    /// `(dim A, dim I, dim A/I)`.
    pub block_dims: [usize; 3],
    /// Block of each basis element: `a`, `ideal`, `lower` or `corner`.
    pub blocks: Vec<&'static str>,
    pub table: AlgebraReport,
}

fn block_name(b: Block) -> &'static str {
    match b {
        Block::A => "a",
        Block::Ideal => "ideal",
        Block::Lower => "lower",
        Block::Corner => "corner",
    }
}

pub fn auslander_report(cfg: &InstanceConfig) -> Result<AuslanderReport, SuiteError> {
    with_instance!(cfg.instance(), inst => {
        let d = build_auslander_algebra(inst).map_err(|source| SuiteError::Check {
            check: "auslander".to_string(),
            instance: cfg.name.clone(),
            source,
        })?;
        let (n, k, m) = d.block_dims();
        Ok(AuslanderReport {
            instance: cfg.name.clone(),
            dim: d.dim(),
            block_dims: [n, k, m],
            blocks: (0..d.dim()).map(|i| block_name(d.block_of(i))).collect(),
            table: d.algebra().table_report(),
        })
    })
}

/// One line per nonzero product, `b_i · b_j ∋ c b_k`, with block labels.
pub fn render_text(r: &AuslanderReport) -> String {
    let mut out = String::new();
    let [n, k, m] = r.block_dims;
    let _ = writeln!(out, "D for {} over F_{}: dim {} = {n} + {k} + 2·{m}", r.instance, r.table.p, r.dim);
    let _ = writeln!(out, "basis:");
    for (i, (label, block)) in r.table.basis.iter().zip(&r.blocks).enumerate() {
        let _ = writeln!(out, "  d{i:<3} {label:<12} {block}");
    }
    let unit: Vec<String> = r.table.unit.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "unit: ({})", unit.join(", "));
    let _ = writeln!(out, "products (i, j, k, c):");
    for [i, j, k, c] in &r.table.mul {
        let _ = writeln!(out, "  d{i} · d{j} -> {c}·d{k}");
    }
    out
}
