//! Monotone bounding iteration for the clique-size limits `y_k`.
//!
//! `y_k` (limit of `Y[n,k] / n`) solves
//!
//! ```text
//! y_1 = (1 + 2 y_2) / 3,   y_k = ((k-1) y_{k-1} + (k+1) y_{k+1}) / (2k+1)   (k >= 2)
//! ```
//!
//! Iterating the right-hand side from `0` gives a nondecreasing sequence of
//! lower bounds, from `1` a nonincreasing sequence of upper bounds. The
//! infinite index set is cut at `k_max`: the lower sequence sees `0` beyond
//! it, the upper one a bound on `y_{k_max+1}` derived from the tail
//! asymptotics. Only `k <= k_max / 2` is reported, far enough from the cut
//! that its influence is below the enclosure tolerance.

use alloc::vec;
use alloc::vec::Vec;

use super::asymptotic::cd_asymptotic;
use crate::error::{Error, Result};

/// Default sweep budget per unit of `k_max`.
pub const SWEEPS_PER_INDEX: usize = 50;

/// Lower and upper bounding sequences; index `i` holds `k = i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundingPair {
    lower: Vec<f64>,
    upper: Vec<f64>,
    upper_boundary: f64,
    sweeps: usize,
    scratch: Vec<f64>,
}

impl BoundingPair {
    /// Start from `a^(0) = 0`, `b^(0) = 1` with the default upper boundary.
    pub fn new(k_max: usize) -> Result<Self> {
        Self::with_boundary(k_max, upper_boundary(k_max))
    }

    pub fn with_boundary(k_max: usize, upper_boundary: f64) -> Result<Self> {
        if k_max < 2 {
            return Err(Error::InvalidArgument("k_max must be at least 2"));
        }
        if !(0.0..=1.0).contains(&upper_boundary) {
            return Err(Error::InvalidArgument("upper boundary must lie in [0, 1]"));
        }
        Ok(Self {
            lower: vec![0.0; k_max],
            upper: vec![1.0; k_max],
            upper_boundary,
            sweeps: 0,
            scratch: vec![0.0; k_max],
        })
    }

    pub fn k_max(&self) -> usize {
        self.lower.len()
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// `a_k` for `k = 1..=k_max`.
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// `b_k` for `k = 1..=k_max`.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// `max_{k <= k_report} (b_k - a_k)`.
    pub fn width(&self, k_report: usize) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .take(k_report)
            .map(|(a, b)| b - a)
            .fold(0.0, f64::max)
    }

    /// One Jacobi sweep of both sequences. Fails if either sequence moves the
    /// wrong way or they cross.
    pub fn sweep(&mut self) -> Result<()> {
        let sweep = self.sweeps + 1;
        apply(&self.lower, 0.0, &mut self.scratch);
        if let Some(index) = first_violation(&self.lower, &self.scratch, |old, new| new >= old) {
            return Err(Error::NotMonotone { sweep, index });
        }
        core::mem::swap(&mut self.lower, &mut self.scratch);

        apply(&self.upper, self.upper_boundary, &mut self.scratch);
        if let Some(index) = first_violation(&self.upper, &self.scratch, |old, new| new <= old) {
            return Err(Error::NotMonotone { sweep, index });
        }
        core::mem::swap(&mut self.upper, &mut self.scratch);

        if let Some(index) = first_violation(&self.lower, &self.upper, |a, b| a <= b) {
            return Err(Error::NotMonotone { sweep, index });
        }
        self.sweeps = sweep;
        Ok(())
    }
}

/// `min(1, 2 c_K^asym / (K + 1))`, a bound on `y_{K+1} = c_K / (K+1)`.
pub fn upper_boundary(k_max: usize) -> f64 {
    (2.0 * cd_asymptotic(k_max) / (k_max + 1) as f64).min(1.0)
}

fn apply(x: &[f64], boundary: f64, out: &mut [f64]) {
    let k_max = x.len();
    out[0] = (1.0 + 2.0 * x[1]) / 3.0;
    for i in 1..k_max {
        let k = (i + 1) as f64;
        let next = if i + 1 < k_max { x[i + 1] } else { boundary };
        out[i] = ((k - 1.0) * x[i - 1] + (k + 1.0) * next) / (2.0 * k + 1.0);
    }
}

fn first_violation(a: &[f64], b: &[f64], ok: impl Fn(f64, f64) -> bool) -> Option<usize> {
    a.iter().zip(b).position(|(&x, &y)| !ok(x, y))
}

/// Converged `y_k` with a certified enclosure.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointSolution {
    /// Midpoints `(a_k + b_k) / 2` for `k = 1..=k_report`.
    pub y: Vec<f64>,
    pub k_max: usize,
    pub k_report: usize,
    /// Final `max_{k <= k_report} (b_k - a_k)`.
    pub width: f64,
    pub bounds: BoundingPair,
}

/// Solve with the default budget of [`SWEEPS_PER_INDEX`]` * k_max` sweeps.
pub fn fixed_point_yk(k_max: usize, tol: f64) -> Result<FixedPointSolution> {
    fixed_point_yk_with_budget(k_max, tol, SWEEPS_PER_INDEX * k_max)
}

pub fn fixed_point_yk_with_budget(
    k_max: usize,
    tol: f64,
    max_sweeps: usize,
) -> Result<FixedPointSolution> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive"));
    }
    let mut bounds = BoundingPair::new(k_max)?;
    let k_report = k_max / 2;
    let mut width = bounds.width(k_report);
    while width >= tol {
        if bounds.sweeps() >= max_sweeps {
            return Err(Error::NoConvergence {
                sweeps: bounds.sweeps(),
                width,
            });
        }
        bounds.sweep()?;
        width = bounds.width(k_report);
    }
    let y = bounds
        .lower()
        .iter()
        .zip(bounds.upper())
        .take(k_report)
        .map(|(a, b)| 0.5 * (a + b))
        .collect();
    Ok(FixedPointSolution {
        y,
        k_max,
        k_report,
        width,
        bounds,
    })
}
