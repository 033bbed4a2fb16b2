//! `dupdel couple-check`: coupled version-1 runs with the black-subgraph
//! check and the growth series.

use serde::{Deserialize, Serialize};

use crate::config::{Checkpoints, OutputFormat};
use crate::error::{CliError, Result};
use crate::experiment::{coupled_trace, fan_out};
use crate::report::{to_csv, to_json, EquivalenceRecord, Estimate, GrowthRecord, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoupledSeed {
    pub seed: u64,
    pub equivalence: Vec<EquivalenceRecord>,
    pub growth: Vec<GrowthRecord>,
}

impl CoupledSeed {
    pub fn all_equivalent(&self) -> bool {
        self.equivalence.iter().all(|e| e.equivalent)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoupleCheckReport {
    pub steps: u64,
    pub checkpoints: Checkpoints,
    pub runs: Vec<CoupledSeed>,
    /// `S_n / n` at the final step across seeds.
    pub final_edges_per_step: Estimate,
    /// Largest `Z_n / ln n` over all seeds and checkpoints with `n >= 2`.
    #[serde(with = "crate::decimal")]
    pub max_red_vertices_per_log_step: f64,
    pub verdict: Verdict,
}

/// Flat CSV row: one per seed and checkpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoupleCsvRow {
    pub seed: u64,
    pub step: u64,
    pub equivalent: bool,
    pub edges: u64,
    #[serde(with = "crate::decimal")]
    pub edges_per_step: f64,
    pub red_vertices: u64,
    pub red_edges: u64,
    pub max_degree: u64,
}

pub fn couple_check(
    steps: u64,
    seeds: &[u64],
    checkpoints: &Checkpoints,
    parallelism: Option<usize>,
) -> Result<CoupleCheckReport> {
    if steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    if seeds.is_empty() {
        return Err(CliError::Usage("at least one seed is required".into()));
    }
    let schedule = checkpoints.schedule();
    let runs = fan_out(seeds, parallelism, |seed| {
        let (_, trace) = coupled_trace(steps as usize, &schedule, seed)?;
        let (equivalence, growth) = trace.into_iter().map(|(_, g, e)| (e, g)).unzip();
        Ok(CoupledSeed {
            seed,
            equivalence,
            growth,
        })
    })?;
    let finals: Vec<f64> = runs
        .iter()
        .map(|r| r.growth.last().expect("final step recorded").edges_per_step)
        .collect();
    let max_ratio = runs
        .iter()
        .flat_map(|r| &r.growth)
        .filter(|g| g.step >= 2)
        .map(|g| g.red_vertices as f64 / (g.step as f64).ln())
        .fold(0.0, f64::max);
    let verdict = Verdict::from_pass(runs.iter().all(CoupledSeed::all_equivalent));
    Ok(CoupleCheckReport {
        steps,
        checkpoints: checkpoints.clone(),
        runs,
        final_edges_per_step: Estimate::of(&finals),
        max_red_vertices_per_log_step: max_ratio,
        verdict,
    })
}

impl CoupleCheckReport {
    pub fn csv_rows(&self) -> Vec<CoupleCsvRow> {
        self.runs
            .iter()
            .flat_map(|r| {
                r.equivalence
                    .iter()
                    .zip(&r.growth)
                    .map(move |(e, g)| CoupleCsvRow {
                        seed: r.seed,
                        step: g.step,
                        equivalent: e.equivalent,
                        edges: g.edges,
                        edges_per_step: g.edges_per_step,
                        red_vertices: g.red_vertices,
                        red_edges: g.red_edges,
                        max_degree: g.max_degree,
                    })
            })
            .collect()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => to_csv(&self.csv_rows()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_runs_are_equivalent() {
        let report = couple_check(500, &[1, 2], &Checkpoints::Pow2, Some(2)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.runs.len(), 2);
        assert_eq!(report.csv_rows().len(), 2 * report.runs[0].growth.len());
        assert_eq!(report.runs[0].growth.last().unwrap().step, 500);
    }
}
