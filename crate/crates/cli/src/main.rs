use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use devissage_cli::auslander::{auslander_report, render_text};
use devissage_cli::exit;
use devissage_cli::{
    emit_report, parse_config, parse_selector, run_suite, CheckName, ConfigError, Format, InstanceConfig, Overrides,
    RunOptions, SuiteError,
};

#[derive(Parser)]
#[command(name = "devissage", version, about = "Exact verification suites for pair categories and their envelopes")]
struct Cli {
    /// Base seed for sampled suites (overrides DEVISSAGE_SEED and the config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest module dimension enumerated exhaustively.
    #[arg(long, global = true)]
    dim_bound: Option<usize>,
    /// Enumeration budget (elements visited) before giving up.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Output format: json or text.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Sampled cases per property suite.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Include per-check wall-clock times (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a config.
    Validate { config: PathBuf },
    /// Run checks and print the report.
    Check {
        config: PathBuf,
        /// `all`, `k0`, or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Run the K₀ checks.
    K0 { config: PathBuf },
    /// Print the structure constants of the Auslander-type algebra.
    Auslander { config: PathBuf },
    /// Run checks and write the report (JSON by default).
    Report {
        config: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Config(ConfigError),
    Suite(SuiteError),
    Input(String),
    Io(std::io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Suite(e) if e.is_budget_exceeded() => exit::BUDGET_EXCEEDED,
            Failure::Suite(SuiteError::Check { .. }) => exit::CHECK_FAILED,
            Failure::Config(_) | Failure::Suite(_) | Failure::Input(_) | Failure::Io(_) => exit::INVALID_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Config(e) => e.to_string(),
            Failure::Suite(e) => e.to_string(),
            Failure::Input(s) => s.clone(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

fn load(cli: &Cli, path: &PathBuf) -> Result<InstanceConfig, Failure> {
    let cfg = parse_config(path).map_err(Failure::Config)?;
    match cli.cap {
        Some(cap) => cfg.with_cap(cap).map_err(Failure::Config),
        None => Ok(cfg),
    }
}

fn run_options(cli: &Cli, cfg: &InstanceConfig) -> Result<RunOptions, Failure> {
    let env_seed = match std::env::var("DEVISSAGE_SEED") {
        Ok(s) => {
            Some(s.trim().parse::<u64>().map_err(|_| Failure::Input(format!("DEVISSAGE_SEED is not a u64: `{s}`")))?)
        }
        Err(_) => None,
    };
    let o = Overrides { seed: cli.seed, env_seed, dim_bound: cli.dim_bound, samples: cli.samples, timing: cli.timing };
    Ok(RunOptions::resolve(cfg, &o))
}

fn write_out(bytes: &[u8], out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(Failure::Io),
        None => std::io::stdout().write_all(bytes).map_err(Failure::Io),
    }
}

fn run_checks(
    cli: &Cli,
    path: &PathBuf,
    checks: &[CheckName],
    fmt: Format,
    out: Option<&PathBuf>,
) -> Result<u8, Failure> {
    let cfg = load(cli, path)?;
    let opts = run_options(cli, &cfg)?;
    let report = run_suite(&cfg, checks, &opts).map_err(Failure::Suite)?;
    write_out(&emit_report(&report, fmt), out)?;
    Ok(if report.passed() { exit::PASS } else { exit::CHECK_FAILED })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Validate { config } => {
            let cfg = load(cli, config)?;
            let fmt = cli.format.unwrap_or(Format::Text);
            let dim = cfg.instance().algebra_dim();
            let text = match fmt {
                Format::Json => format!(
                    "{{\"instance\":{},\"p\":{},\"dim_a\":{dim},\"dim_i\":{},\"status\":\"valid\"}}\n",
                    serde_json::to_string(&cfg.name).expect("string serializes"),
                    cfg.p,
                    cfg.ideal.len()
                ),
                Format::Text => {
                    format!("{}: valid (p = {}, dim A = {dim}, dim I = {})\n", cfg.name, cfg.p, cfg.ideal.len())
                }
            };
            write_out(text.as_bytes(), None)?;
            Ok(exit::PASS)
        }
        Command::Check { config, suite } => {
            let checks = parse_selector(suite).map_err(Failure::Suite)?;
            run_checks(cli, config, &checks, cli.format.unwrap_or(Format::Text), None)
        }
        Command::K0 { config } => run_checks(cli, config, &CheckName::K0, cli.format.unwrap_or(Format::Text), None),
        Command::Auslander { config } => {
            let cfg = load(cli, config)?;
            let r = auslander_report(&cfg).map_err(Failure::Suite)?;
            let bytes = match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let mut b = serde_json::to_vec(&r).expect("report serializes");
                    b.push(b'\n');
                    b
                }
                Format::Text => render_text(&r).into_bytes(),
            };
            write_out(&bytes, None)?;
            Ok(exit::PASS)
        }
        Command::Report { config, suite, out } => {
            let checks = parse_selector(suite).map_err(Failure::Suite)?;
            run_checks(cli, config, &checks, cli.format.unwrap_or(Format::Json), out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
