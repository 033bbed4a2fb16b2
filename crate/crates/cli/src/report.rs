//! Report types and their JSON and CSV encodings.
//!
//! Every float is written through [`crate::decimal`], so a report read back
//! and written again is byte-identical.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::config::{OutputFormat, OutputTarget, RunConfig};
use crate::error::{CliError, Result};
use crate::summary::Summary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Self {
        Self::from_pass(verdicts.into_iter().all(Verdict::is_pass))
    }
}

/// Mean and standard error across seeds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    #[serde(with = "crate::decimal")]
    pub mean: f64,
    #[serde(with = "crate::decimal")]
    pub stderr: f64,
}

impl From<Summary> for Estimate {
    fn from(s: Summary) -> Self {
        Self {
            mean: s.mean,
            stderr: s.stderr,
        }
    }
}

impl Estimate {
    pub fn of(xs: &[f64]) -> Self {
        Summary::of(xs).into()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointRecord {
    pub step: u64,
    /// `X[n,d]` indexed by `d`.
    pub degree_counts: Vec<u64>,
    /// `Y[n,k]` indexed by `k` (entry 0 is always 0); version 2 only.
    pub clique_counts: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Clustering {
    #[serde(with = "crate::decimal")]
    pub global: f64,
    #[serde(with = "crate::decimal")]
    pub average: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub step: u64,
    pub edges: u64,
    #[serde(with = "crate::decimal")]
    pub edges_per_step: f64,
    pub red_vertices: u64,
    pub red_edges: u64,
    pub max_degree: u64,
}

impl From<dupdel_core::GrowthSample> for GrowthRecord {
    fn from(g: dupdel_core::GrowthSample) -> Self {
        Self {
            step: g.step as u64,
            edges: g.edges as u64,
            edges_per_step: g.edges_per_step,
            red_vertices: g.red_vertices as u64,
            red_edges: g.red_edges as u64,
            max_degree: g.max_degree as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRecord {
    pub step: u64,
    pub equivalent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRun {
    pub seed: u64,
    pub checkpoints: Vec<CheckpointRecord>,
    /// Of the final graph.
    pub clustering: Clustering,
    /// Coupled runs only.
    pub growth: Option<Vec<GrowthRecord>>,
    /// Coupled runs only: black subgraph equal to the version-2 shadow at
    /// every checkpoint.
    pub coupling_equivalent: Option<bool>,
}

impl SeedRun {
    pub fn final_checkpoint(&self) -> &CheckpointRecord {
        self.checkpoints
            .last()
            .expect("a run records its final step")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusteringSummary {
    pub global: Estimate,
    pub average: Estimate,
}

/// `Y[n,k]` at the final step, normalized by the step count and by the
/// vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CliqueRate {
    pub k: u64,
    pub per_step: Estimate,
    pub per_vertex: Estimate,
    /// `y_k = c_{k-1} / k`, when `k - 1 <= dmax`.
    #[serde(with = "crate::decimal::option")]
    pub theoretical: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryValue {
    pub d: u64,
    #[serde(with = "crate::decimal")]
    pub value: f64,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub d: u64,
    #[serde(with = "crate::decimal")]
    pub empirical_mean: f64,
    #[serde(with = "crate::decimal")]
    pub empirical_stderr: f64,
    #[serde(with = "crate::decimal")]
    pub theoretical: f64,
    #[serde(with = "crate::decimal")]
    pub gap: f64,
    pub verdict: Verdict,
}

impl ComparisonRow {
    pub fn new(d: u64, empirical: Estimate, theoretical: f64, tol: f64) -> Self {
        let gap = (empirical.mean - theoretical).abs();
        Self {
            d,
            empirical_mean: empirical.mean,
            empirical_stderr: empirical.stderr,
            theoretical,
            gap,
            verdict: Verdict::from_pass(gap <= tol),
        }
    }

    pub fn empirical(&self) -> Estimate {
        Estimate {
            mean: self.empirical_mean,
            stderr: self.empirical_stderr,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: RunConfig,
    pub runs: Vec<SeedRun>,
    pub clustering: ClusteringSummary,
    /// Version 2 only.
    pub clique_rates: Option<Vec<CliqueRate>>,
    pub theory: Vec<TheoryValue>,
    /// Final-step degree proportions against `c_d`, `d <= dmax`.
    pub comparison: Vec<ComparisonRow>,
    /// Coupled runs only.
    pub coupling: Option<Verdict>,
    pub verdict: Verdict,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(what: &'static str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        what,
        detail: e.to_string(),
    })
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 output")
}

pub fn from_csv<T: DeserializeOwned>(what: &'static str, text: &str) -> Result<Vec<T>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(|e| CliError::Parse {
            what,
            detail: e.to_string(),
        })
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Whether `text` is a JSON document rather than CSV.
pub fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Write to the target file, or to `stdout` when no path is set.
pub fn emit(target: &OutputTarget, contents: &str, stdout: &mut dyn Write) -> Result<()> {
    match &target.path {
        Some(path) => fs::write(path, contents).map_err(|e| CliError::io(path, e)),
        None => Ok(stdout.write_all(contents.as_bytes())?),
    }
}

impl RunReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => to_csv(&self.comparison),
        }
    }
}
