//! Command-line experiments for duplication-deletion graphs: seeded
//! replications, `c_d` tables, comparisons and coupling checks, written as
//! JSON or CSV.

pub mod cli;
pub mod compare;
pub mod config;
pub mod couple;
pub mod decimal;
pub mod error;
pub mod experiment;
pub mod report;
pub mod summary;
pub mod theory;

pub use cli::run_with;
pub use compare::{compare, Comparison, Tolerances};
pub use config::{Checkpoints, OutputFormat, RunConfig};
pub use couple::{couple_check, CoupleCheckReport};
pub use error::{CliError, EXIT_FAIL, EXIT_PASS, EXIT_RUNTIME, EXIT_USAGE};
pub use experiment::simulate;
pub use report::{RunReport, Verdict};
pub use theory::{theory_table, TheoryRow, TheoryTable};
