use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use dupdel_core::{Schedule, Version};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Default comparison tolerance on degree proportions.
pub const DEFAULT_TOL: f64 = 0.01;
/// Relative tolerance of the quadrature used for reference values.
pub const QUADRATURE_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Checkpoints {
    Pow2,
    Explicit(Vec<u64>),
}

impl Checkpoints {
    pub fn schedule(&self) -> Schedule {
        match self {
            Checkpoints::Pow2 => Schedule::PowersOfTwo,
            Checkpoints::Explicit(list) => {
                Schedule::Explicit(list.iter().map(|&s| s as usize).collect())
            }
        }
    }
}

impl FromStr for Checkpoints {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "pow2" {
            return Ok(Checkpoints::Pow2);
        }
        parse_list(s).map(Checkpoints::Explicit)
    }
}

impl fmt::Display for Checkpoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Checkpoints::Pow2 => f.write_str("pow2"),
            Checkpoints::Explicit(list) => {
                let parts: Vec<String> = list.iter().map(u64::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl Serialize for Checkpoints {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Checkpoints {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

pub fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| format!("`{}` is not a non-negative integer: {e}", part.trim()))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

/// Everything that determines a report. Output location and worker count
/// are deliberately absent: they do not change the result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub version: u8,
    pub steps: u64,
    pub seeds: Vec<u64>,
    pub checkpoints: Checkpoints,
    pub dmax: usize,
    #[serde(with = "crate::decimal")]
    pub tol: f64,
    pub couple: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if Version::from_number(self.version).is_none() {
            return Err(CliError::Usage(format!(
                "version must be 1 or 2, got {}",
                self.version
            )));
        }
        if self.steps == 0 {
            return Err(CliError::Usage("--steps must be at least 1".into()));
        }
        if self.seeds.is_empty() {
            return Err(CliError::Usage("at least one seed is required".into()));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(CliError::Usage("--tol must be positive".into()));
        }
        if self.couple && self.version != 1 {
            return Err(CliError::Usage("--couple only applies to version 1".into()));
        }
        Ok(())
    }

    pub fn model_version(&self) -> Version {
        Version::from_number(self.version).expect("validated")
    }
}

/// Where and how to write a command's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputTarget {
    pub format: OutputFormat,
    /// `None` writes to standard output.
    pub path: Option<PathBuf>,
}

pub fn seeds_from(list: Option<Vec<u64>>, count: Option<u64>, base: u64) -> Result<Vec<u64>> {
    match (list, count) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "use either --seeds or --num-seeds, not both".into(),
        )),
        (Some(list), None) => Ok(list),
        (None, Some(k)) => Ok((0..k).map(|i| base.wrapping_add(i)).collect()),
        (None, None) => Ok(vec![base]),
    }
}
