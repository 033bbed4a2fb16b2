//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use dupdel_core::theory::Method;

use crate::compare::{compare, Tolerances};
use crate::config::{seeds_from, Checkpoints, OutputFormat, OutputTarget, RunConfig, DEFAULT_TOL};
use crate::couple::couple_check;
use crate::error::{Result, EXIT_FAIL, EXIT_PASS};
use crate::experiment::simulate;
use crate::report::{emit, from_json, read_file, RunReport, Verdict};
use crate::theory::{parse_theory_rows, theory_table, MethodArg};

#[derive(Debug, Parser)]
#[command(
    name = "dupdel",
    about = "Duplication-deletion random graphs",
    disable_version_flag = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run seeded replications and compare degree proportions with c_d.
    Simulate(SimulateArgs),
    /// Tabulate c_d.
    Theory(TheoryArgs),
    /// Compare a simulation report with a theory table.
    Compare(CompareArgs),
    /// Check the black-subgraph coupling on version-1 runs.
    CoupleCheck(CoupleArgs),
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    /// Comma-separated seed list.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<u64>>,
    /// Number of consecutive seeds starting at --base-seed.
    #[arg(long)]
    pub num_seeds: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub base_seed: u64,
}

impl SeedArgs {
    fn resolve(&self) -> Result<Vec<u64>> {
        seeds_from(self.seeds.clone(), self.num_seeds, self.base_seed)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn target(&self) -> OutputTarget {
        OutputTarget {
            format: self.format,
            path: self.out.clone(),
        }
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 2)]
    pub version: u8,
    /// Default 1000000 for version 2, 100000 for version 1.
    #[arg(long)]
    pub steps: Option<u64>,
    #[command(flatten)]
    pub seeds: SeedArgs,
    /// `pow2` or a comma-separated step list.
    #[arg(long, default_value = "pow2")]
    pub checkpoints: Checkpoints,
    #[arg(long, default_value_t = 5)]
    pub dmax: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Run version 1 coupled with version 2 and record growth diagnostics.
    #[arg(long)]
    pub couple: bool,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long)]
    pub parallelism: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TheoryArgs {
    #[arg(long, default_value_t = 10)]
    pub dmax: usize,
    /// Enclosure width of the bounding iteration.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "quadrature")]
    pub methods: Vec<MethodArg>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// JSON report written by `simulate`.
    pub report: PathBuf,
    /// Table written by `theory`, JSON or CSV.
    pub theory: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 0.02)]
    pub clustering_tol: f64,
    #[arg(long, default_value_t = 0.1)]
    pub global_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CoupleArgs {
    #[arg(long, default_value_t = 100_000)]
    pub steps: u64,
    #[command(flatten)]
    pub seeds: SeedArgs,
    #[arg(long, default_value = "pow2")]
    pub checkpoints: Checkpoints,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long)]
    pub parallelism: Option<usize>,
}

fn default_steps(version: u8) -> u64 {
    if version == 1 {
        100_000
    } else {
        1_000_000
    }
}

/// Execute a parsed command, returning the exit code for a completed run.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Simulate(args) => {
            let config = RunConfig {
                version: args.version,
                steps: args.steps.unwrap_or_else(|| default_steps(args.version)),
                seeds: args.seeds.resolve()?,
                checkpoints: args.checkpoints,
                dmax: args.dmax,
                tol: args.tol,
                couple: args.couple,
            };
            let report = simulate(&config, args.parallelism)?;
            let target = args.output.target();
            emit(&target, &report.render(target.format), stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Theory(args) => {
            let methods: Vec<Method> = args.methods.iter().map(|&m| m.into()).collect();
            let table = theory_table(args.dmax, args.tol, &methods)?;
            let target = args.output.target();
            emit(&target, &table.render(target.format), stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Compare(args) => {
            let report: RunReport = from_json("simulation report", &read_file(&args.report)?)?;
            let theory = parse_theory_rows(&read_file(&args.theory)?)?;
            let tol = Tolerances {
                degree: args.tol,
                average_clustering: args.clustering_tol,
                global_clustering: args.global_tol,
            };
            let comparison = compare(&report, &theory, &tol)?;
            let target = args.output.target();
            emit(&target, &comparison.render(target.format), stdout)?;
            Ok(verdict_code(comparison.verdict))
        }
        Command::CoupleCheck(args) => {
            let seeds = args.seeds.resolve()?;
            let report = couple_check(args.steps, &seeds, &args.checkpoints, args.parallelism)?;
            let target = args.output.target();
            emit(&target, &report.render(target.format), stdout)?;
            Ok(verdict_code(report.verdict))
        }
    }
}

fn verdict_code(v: Verdict) -> i32 {
    if v.is_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Parse `args` (program name first), run, and report errors on `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
