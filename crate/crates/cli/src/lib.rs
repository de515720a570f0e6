//! Configuration, orchestration and reporting for the `devissage` binary.

pub mod auslander;
pub mod config;
pub mod report;
pub mod suite;

pub use config::{parse_config, parse_config_str, AnyInstance, ConfigError, InstanceConfig, Options};
pub use report::{emit_report, Format, Report};
pub use suite::{parse_selector, run_suite, CheckName, Overrides, RunOptions, SuiteError};

/// Process exit codes.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const BUDGET_EXCEEDED: u8 = 3;
}
