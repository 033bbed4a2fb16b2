//! Empirical report against a theory table.

use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;
use crate::error::{CliError, Result};
use crate::report::{to_csv, to_json, ComparisonRow, RunReport, Verdict};
use crate::theory::TheoryRow;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Per-degree proportion gap.
    pub degree: f64,
    /// Average clustering against `1 - c_0 - c_1`.
    pub average_clustering: f64,
    /// Global clustering against 1.
    pub global_clustering: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            degree: 0.01,
            average_clustering: 0.02,
            global_clustering: 0.1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusteringCheck {
    #[serde(with = "crate::decimal")]
    pub mean: f64,
    #[serde(with = "crate::decimal")]
    pub stderr: f64,
    #[serde(with = "crate::decimal")]
    pub target: f64,
    #[serde(with = "crate::decimal")]
    pub gap: f64,
    #[serde(with = "crate::decimal")]
    pub tol: f64,
    pub verdict: Verdict,
}

impl ClusteringCheck {
    fn new(mean: f64, stderr: f64, target: f64, tol: f64) -> Self {
        let gap = (mean - target).abs();
        Self {
            mean,
            stderr,
            target,
            gap,
            tol,
            verdict: Verdict::from_pass(gap <= tol),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub version: u8,
    pub steps: u64,
    pub seeds: u64,
    pub dmax: u64,
    /// Theory column used as reference.
    pub method: String,
    #[serde(with = "crate::decimal")]
    pub tol: f64,
    pub rows: Vec<ComparisonRow>,
    pub global_clustering: ClusteringCheck,
    pub average_clustering: ClusteringCheck,
    pub verdict: Verdict,
}

impl Comparison {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => to_csv(&self.rows),
        }
    }
}

/// Gaps per degree and for both clustering coefficients. The theory rows
/// must cover exactly `0..=dmax` of the report with an exact column.
pub fn compare(report: &RunReport, theory: &[TheoryRow], tol: &Tolerances) -> Result<Comparison> {
    let dmax = report.config.dmax as u64;
    if dmax < 1 {
        return Err(CliError::Usage(
            "the clustering target needs c_0 and c_1; use dmax >= 1".into(),
        ));
    }
    let theory_dmax = theory.iter().map(|r| r.d).max();
    if theory_dmax != Some(dmax) || theory.len() as u64 != dmax + 1 {
        return Err(CliError::Mismatch(format!(
            "report compares degrees 0..={dmax}, theory table covers {}",
            theory_dmax.map_or("nothing".to_string(), |m| format!("up to {m}"))
        )));
    }
    if report.comparison.len() as u64 != dmax + 1 {
        return Err(CliError::Mismatch(format!(
            "report has {} comparison rows for dmax {dmax}",
            report.comparison.len()
        )));
    }

    let mut method = None;
    let mut exact = Vec::with_capacity(theory.len());
    for (d, row) in (0..=dmax).zip(theory) {
        if row.d != d {
            return Err(CliError::Mismatch(format!(
                "theory rows must list d = 0..={dmax} in order"
            )));
        }
        let Some((m, value)) = row.exact() else {
            return Err(CliError::Mismatch(format!(
                "theory table has no exact value at d = {d} (asymptotic values are not a reference)"
            )));
        };
        if *method.get_or_insert(m) != m {
            return Err(CliError::Mismatch(
                "theory rows mix reference methods".into(),
            ));
        }
        exact.push(value);
    }

    let rows: Vec<ComparisonRow> = report
        .comparison
        .iter()
        .zip(&exact)
        .map(|(r, &c)| ComparisonRow::new(r.d, r.empirical(), c, tol.degree))
        .collect();
    let c = &report.clustering;
    let global = ClusteringCheck::new(c.global.mean, c.global.stderr, 1.0, tol.global_clustering);
    let average = ClusteringCheck::new(
        c.average.mean,
        c.average.stderr,
        1.0 - exact[0] - exact[1],
        tol.average_clustering,
    );
    let verdict = Verdict::all(
        rows.iter()
            .map(|r| r.verdict)
            .chain([global.verdict, average.verdict]),
    );
    Ok(Comparison {
        version: report.config.version,
        steps: report.config.steps,
        seeds: report.runs.len() as u64,
        dmax,
        method: method.expect("at least one row").name().to_string(),
        tol: tol.degree,
        rows,
        global_clustering: global,
        average_clustering: average,
        verdict,
    })
}
