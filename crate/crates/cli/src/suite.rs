//! Check selection and orchestration.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use devissage::check::CheckRecord;
use devissage::field::FiniteField;
use devissage::grothendieck as k0;
use devissage::instance::Instance;
use devissage::suites;
use thiserror::Error;

use crate::config::InstanceConfig;
use crate::report::Report;
use crate::with_instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckName {
    Axioms,
    Functors,
    Envelope,
    Torsion,
    Serre,
    K0Devissage,
    K0Sod,
    K0Localization,
    K0Theta,
    OracleCrosscheck,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::Axioms,
        CheckName::Functors,
        CheckName::Envelope,
        CheckName::Torsion,
        CheckName::Serre,
        CheckName::K0Devissage,
        CheckName::K0Sod,
        CheckName::K0Localization,
        CheckName::K0Theta,
        CheckName::OracleCrosscheck,
    ];

    /// What the `k0` verb runs.
    pub const K0: [CheckName; 5] = [
        CheckName::K0Devissage,
        CheckName::K0Sod,
        CheckName::K0Localization,
        CheckName::K0Theta,
        CheckName::OracleCrosscheck,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Axioms => "axioms",
            CheckName::Functors => "functors",
            CheckName::Envelope => "envelope",
            CheckName::Torsion => "torsion",
            CheckName::Serre => "serre",
            CheckName::K0Devissage => "k0-devissage",
            CheckName::K0Sod => "k0-sod",
            CheckName::K0Localization => "k0-localization",
            CheckName::K0Theta => "k0-theta",
            CheckName::OracleCrosscheck => "oracle-crosscheck",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| SuiteError::UnknownCheck(s.to_string()))
    }
}

/// `"all"`, `"k0"`, or a comma-separated list of check names. The empty
/// string selects nothing. Duplicates are dropped; order follows [`CheckName::ALL`].
pub fn parse_selector(s: &str) -> Result<Vec<CheckName>, SuiteError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "all" => out.extend(CheckName::ALL),
            "k0" => out.extend(CheckName::K0),
            name => out.push(name.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{check} on `{instance}`: {source}")]
    Check {
        check: String,
        instance: String,
        #[source]
        source: devissage::Error,
    },
}

impl SuiteError {
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, SuiteError::Check { source: devissage::Error::EnumerationBudgetExceeded(_), .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub dim_bound: usize,
    /// Sampled cases per property suite; the axiom suite draws twice as many.
    pub samples: usize,
    pub timing: bool,
}

/// Command-line and environment values that take precedence over the config.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub env_seed: Option<u64>,
    pub dim_bound: Option<usize>,
    pub samples: Option<usize>,
    pub timing: bool,
}

/// Bound on module dimension for exhaustive enumeration: 3 when `dim A ≤ 5`, else 2.
pub fn default_dim_bound(algebra_dim: usize) -> usize {
    if algebra_dim <= 5 {
        3
    } else {
        2
    }
}

impl RunOptions {
    /// Seed precedence: flag, then `DEVISSAGE_SEED`, then the config, then 0.
    pub fn resolve(cfg: &InstanceConfig, o: &Overrides) -> Self {
        RunOptions {
            seed: o.seed.or(o.env_seed).or(cfg.options.seed).unwrap_or(0),
            dim_bound: o
                .dim_bound
                .or(cfg.options.dim_bound)
                .unwrap_or_else(|| default_dim_bound(cfg.instance().algebra_dim())),
            samples: o.samples.or(cfg.options.samples).unwrap_or(suites::PROPERTY_SAMPLES),
            timing: o.timing,
        }
    }

    pub fn diagrams(&self) -> usize {
        2 * self.samples
    }
}

fn run_one<F: FiniteField>(inst: &Instance<F>, check: CheckName, o: &RunOptions) -> devissage::Result<CheckRecord> {
    Ok(match check {
        CheckName::Axioms => suites::check_axioms(inst, o.seed, o.diagrams())?,
        CheckName::Functors => suites::check_functors(inst, o.seed, o.samples)?,
        CheckName::Envelope => suites::check_envelope(inst, o.seed, o.samples)?,
        CheckName::Torsion => suites::check_torsion(inst, o.seed, o.samples)?,
        CheckName::Serre => suites::check_serre(inst, o.seed, o.samples)?,
        CheckName::K0Devissage => {
            let mut rec = k0::check_devissage_k0(inst, o.dim_bound)?;
            rec.absorb(k0::check_gamma_well_defined(inst, o.dim_bound)?, "gamma_independence_");
            rec
        }
        CheckName::K0Sod => k0::check_sod_k0(inst, o.dim_bound)?,
        CheckName::K0Localization => k0::check_localization_k0(inst)?,
        CheckName::K0Theta => k0::check_theta_composition(inst)?,
        CheckName::OracleCrosscheck => k0::check_oracle_agreement(inst, o.dim_bound)?,
    })
}

/// Run `checks` in order. An error (as opposed to a failing check) aborts
/// the run and names the check and instance.
pub fn run_suite(cfg: &InstanceConfig, checks: &[CheckName], o: &RunOptions) -> Result<Report, SuiteError> {
    let mut report = Report::new(&cfg.name, cfg.p, o.seed, o.dim_bound, o.samples);
    for &check in checks {
        let start = Instant::now();
        let rec = with_instance!(cfg.instance(), inst => run_one(inst, check, o))
            .map_err(|source| SuiteError::Check { check: check.to_string(), instance: cfg.name.clone(), source })?;
        if o.timing {
            report.record_time(check.as_str(), start.elapsed().as_millis() as u64);
        }
        report.push(rec);
    }
    Ok(report)
}
