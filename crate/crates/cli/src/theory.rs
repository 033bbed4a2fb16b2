//! The `c_d` table emitted by `dupdel theory`.

use dupdel_core::theory::{
    normalization_residual, recursion_residuals, Method, Tail, TheoreticalDistribution,
};
use serde::{Deserialize, Serialize};

use crate::config::{OutputFormat, QUADRATURE_REL_TOL};
use crate::error::{CliError, Result};
use crate::report::{from_csv, from_json, looks_like_json, to_csv, to_json};

pub const ASYMPTOTIC_NOTE: &str = "asymptotic, not exact";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum MethodArg {
    FixedPoint,
    Quadrature,
    Asymptotic,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::FixedPoint => Method::FixedPoint,
            MethodArg::Quadrature => Method::Quadrature,
            MethodArg::Asymptotic => Method::Asymptotic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryRow {
    pub d: u64,
    #[serde(with = "crate::decimal::option")]
    pub fixed_point: Option<f64>,
    #[serde(with = "crate::decimal::option")]
    pub quadrature: Option<f64>,
    #[serde(with = "crate::decimal::option")]
    pub asymptotic: Option<f64>,
    /// Defining relation at `d`, evaluated on the preferred exact column.
    #[serde(with = "crate::decimal::option")]
    pub recursion_residual: Option<f64>,
    #[serde(with = "crate::decimal::option")]
    pub fp_quad_gap: Option<f64>,
    pub note: Option<String>,
}

impl TheoryRow {
    /// Quadrature if present, else fixed point. The asymptotic column is
    /// never used as a reference.
    pub fn exact(&self) -> Option<(Method, f64)> {
        self.quadrature
            .map(|v| (Method::Quadrature, v))
            .or(self.fixed_point.map(|v| (Method::FixedPoint, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryTable {
    pub dmax: u64,
    #[serde(with = "crate::decimal")]
    pub tol: f64,
    pub methods: Vec<String>,
    /// Achieved enclosure of the bounding iteration.
    #[serde(with = "crate::decimal::option")]
    pub fixed_point_width: Option<f64>,
    /// `|1 - sum c_d - tail|` on the preferred exact column.
    #[serde(with = "crate::decimal::option")]
    pub normalization_residual: Option<f64>,
    #[serde(with = "crate::decimal")]
    pub tail_mass: f64,
    pub rows: Vec<TheoryRow>,
}

fn column(table: Option<&TheoreticalDistribution>, d: usize) -> Option<f64> {
    table.and_then(|t| t.get(d))
}

/// Compute the requested methods for `d <= dmax`. `tol` is the enclosure
/// width of the bounding iteration and, capped at the quadrature default,
/// the relative tolerance of the quadrature.
pub fn theory_table(dmax: usize, tol: f64, methods: &[Method]) -> Result<TheoryTable> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::Usage("--tol must lie in (0, 1)".into()));
    }
    if methods.is_empty() {
        return Err(CliError::Usage("at least one method is required".into()));
    }
    let wants = |m: Method| methods.contains(&m);
    // One extra degree so the relation at dmax can be evaluated.
    let quadrature = wants(Method::Quadrature)
        .then(|| TheoreticalDistribution::quadrature(dmax + 1, tol.min(QUADRATURE_REL_TOL)))
        .transpose()?;
    let fixed_point = wants(Method::FixedPoint)
        .then(|| TheoreticalDistribution::fixed_point(dmax + 1, tol))
        .transpose()?;
    let asymptotic = wants(Method::Asymptotic).then(|| TheoreticalDistribution::asymptotic(dmax));

    let reference = quadrature.as_ref().or(fixed_point.as_ref());
    let residuals = reference.map(|t| recursion_residuals(&t.values));
    let rows = (0..=dmax)
        .map(|d| {
            let fp = column(fixed_point.as_ref(), d);
            let quad = column(quadrature.as_ref(), d);
            let asym = column(asymptotic.as_ref(), d);
            TheoryRow {
                d: d as u64,
                fixed_point: fp,
                quadrature: quad,
                asymptotic: asym,
                recursion_residual: residuals.as_ref().map(|r| r[d]),
                fp_quad_gap: fp.zip(quad).map(|(a, b)| (a - b).abs()),
                note: asym.map(|_| ASYMPTOTIC_NOTE.to_string()),
            }
        })
        .filter(|r| r.fixed_point.is_some() || r.quadrature.is_some() || r.asymptotic.is_some())
        .collect();

    let mut names: Vec<String> = Vec::new();
    for m in [Method::FixedPoint, Method::Quadrature, Method::Asymptotic] {
        if wants(m) {
            names.push(m.name().to_string());
        }
    }
    Ok(TheoryTable {
        dmax: dmax as u64,
        tol,
        methods: names,
        fixed_point_width: fixed_point.as_ref().map(|t| t.tolerance),
        normalization_residual: reference
            .map(|t| normalization_residual(&t.values[..=dmax], Tail::Asymptotic)),
        tail_mass: dupdel_core::theory::tail_estimate(dmax),
        rows,
    })
}

impl TheoryTable {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => to_csv(&self.rows),
        }
    }
}

/// Rows of a theory file in either format.
pub fn parse_theory_rows(text: &str) -> Result<Vec<TheoryRow>> {
    if looks_like_json(text) {
        from_json::<TheoryTable>("theory table", text).map(|t| t.rows)
    } else {
        from_csv("theory table", text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_row_zero() {
        let t = theory_table(10, 1e-8, &[Method::Quadrature]).unwrap();
        assert_eq!(t.rows.len(), 11);
        assert!((t.rows[0].quadrature.unwrap() - 0.403_653).abs() < 5e-7);
        assert!(t
            .rows
            .iter()
            .all(|r| r.recursion_residual.unwrap().abs() < 1e-10));
        assert!(t
            .rows
            .iter()
            .all(|r| r.fixed_point.is_none() && r.note.is_none()));
    }

    #[test]
    fn asymptotic_only_is_flagged() {
        let t = theory_table(1, 1e-8, &[Method::Asymptotic]).unwrap();
        assert_eq!(t.rows.len(), 1);
        let row = &t.rows[0];
        assert_eq!(row.d, 1);
        assert!((row.asymptotic.unwrap() - 0.395_487_911_608_249).abs() < 1e-12);
        assert_eq!(row.note.as_deref(), Some(ASYMPTOTIC_NOTE));
        assert_eq!(row.exact(), None);
        assert_eq!(row.recursion_residual, None);
    }

    #[test]
    fn csv_and_json_rows_agree() {
        let t = theory_table(4, 1e-8, &[Method::Quadrature, Method::Asymptotic]).unwrap();
        let from_json = parse_theory_rows(&t.render(OutputFormat::Json)).unwrap();
        let from_csv = parse_theory_rows(&t.render(OutputFormat::Csv)).unwrap();
        assert_eq!(from_json, from_csv);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(theory_table(3, 0.0, &[Method::Quadrature]).is_err());
        assert!(theory_table(3, 1e-8, &[]).is_err());
    }
}
