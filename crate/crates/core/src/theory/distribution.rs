//! Tables of `c_d` and the identities they must satisfy.

use alloc::vec::Vec;

use super::asymptotic::cd_asymptotic;
use super::fixed_point::fixed_point_yk;
use super::integral::cd_quadrature_ln;
use crate::error::Result;

/// Smallest truncation used by [`TheoreticalDistribution::fixed_point`].
pub const MIN_K_MAX: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    FixedPoint,
    Quadrature,
    Asymptotic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::FixedPoint => "fixed-point",
            Method::Quadrature => "quadrature",
            Method::Asymptotic => "asymptotic",
        }
    }

    /// Whether values are exact limits up to numerical tolerance, as opposed
    /// to a large-`d` approximation.
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Asymptotic)
    }
}

/// `c_d` for `d = start..=d_max` computed by one method.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoreticalDistribution {
    pub method: Method,
    /// First degree covered: 0, or 1 for the asymptotic formula.
    pub start: usize,
    pub values: Vec<f64>,
    /// Enclosure width (fixed point) or relative tolerance (quadrature);
    /// 0 for the closed form.
    pub tolerance: f64,
    /// Estimated mass beyond `d_max`.
    pub tail_mass: f64,
}

impl TheoreticalDistribution {
    pub fn d_max(&self) -> usize {
        self.start + self.values.len() - 1
    }

    pub fn get(&self, d: usize) -> Option<f64> {
        d.checked_sub(self.start)
            .and_then(|i| self.values.get(i).copied())
    }

    /// Quadrature to relative tolerance `rel_tol` for every `d <= d_max`.
    pub fn quadrature(d_max: usize, rel_tol: f64) -> Result<Self> {
        let values = (0..=d_max)
            .map(|d| cd_quadrature_ln(d, rel_tol).map(|e| e.value()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            method: Method::Quadrature,
            start: 0,
            values,
            tolerance: rel_tol,
            tail_mass: tail_estimate(d_max),
        })
    }

    /// Bounding iteration with enclosure `tol` and truncation
    /// `max(MIN_K_MAX, 2 (d_max + 2))`.
    pub fn fixed_point(d_max: usize, tol: f64) -> Result<Self> {
        let k_max = MIN_K_MAX.max(2 * (d_max + 2));
        let sol = fixed_point_yk(k_max, tol)?;
        let mut values = cd_from_yk(&sol.y);
        values.truncate(d_max + 1);
        Ok(Self {
            method: Method::FixedPoint,
            start: 0,
            values,
            tolerance: sol.width,
            tail_mass: tail_estimate(d_max),
        })
    }

    /// Leading-order asymptotics for `1 <= d <= d_max`.
    pub fn asymptotic(d_max: usize) -> Self {
        let d_max = d_max.max(1);
        Self {
            method: Method::Asymptotic,
            start: 1,
            values: (1..=d_max).map(cd_asymptotic).collect(),
            tolerance: 0.0,
            tail_mass: tail_estimate(d_max),
        }
    }
}

/// `y_{d+1} = c_d / (d+1)`; index `i` of the output is `k = i + 1`.
pub fn yk_from_cd(cd: &[f64]) -> Vec<f64> {
    cd.iter()
        .enumerate()
        .map(|(d, &c)| c / (d + 1) as f64)
        .collect()
}

/// `c_d = (d+1) y_{d+1}`; index `i` of the input is `k = i + 1`.
pub fn cd_from_yk(yk: &[f64]) -> Vec<f64> {
    yk.iter()
        .enumerate()
        .map(|(i, &y)| (i + 1) as f64 * y)
        .collect()
}

/// Tail estimate `2 sum_{d > d_max} c_d^asym`.
pub fn tail_estimate(d_max: usize) -> f64 {
    let mut sum = 0.0;
    let mut d = d_max + 1;
    loop {
        let term = cd_asymptotic(d);
        sum += term;
        // Terms decrease for d >= 1.
        if term <= sum * 1e-18 || term == 0.0 {
            break;
        }
        d += 1;
    }
    2.0 * sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// [`tail_estimate`] beyond the table.
    Asymptotic,
    /// Treat the table as complete.
    Zero,
}

/// `|1 - sum_{d <= d_max} c_d - tail|` for a table starting at `d = 0`.
pub fn normalization_residual(cd: &[f64], tail: Tail) -> f64 {
    let tail = match (tail, cd.len()) {
        (Tail::Zero, _) | (_, 0) => 0.0,
        (Tail::Asymptotic, len) => tail_estimate(len - 1),
    };
    let sum: f64 = cd.iter().sum();
    (1.0 - sum - tail).abs()
}

/// Residuals of the defining relations. Entry 0 is `3 c_0 - 1 - c_1`; entry
/// `d >= 1` is `(2d+3) c_d - (d+1)(c_{d-1} + c_{d+1})`. The table must start
/// at `d = 0`; the result has `cd.len() - 1` entries.
pub fn recursion_residuals(cd: &[f64]) -> Vec<f64> {
    if cd.len() < 2 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(cd.len() - 1);
    out.push(3.0 * cd[0] - 1.0 - cd[1]);
    for d in 1..cd.len() - 1 {
        let k = d as f64;
        out.push((2.0 * k + 3.0) * cd[d] - (k + 1.0) * (cd[d - 1] + cd[d + 1]));
    }
    out
}

/// `(1-z)^2 G'(z) - (3-2z) G(z) + 1` with `G(z) = sum c_d z^d` truncated to
/// the table.
pub fn generating_function_residual(cd: &[f64], z: f64) -> f64 {
    let (mut g, mut dg) = (0.0, 0.0);
    let mut power = 1.0;
    for (d, &c) in cd.iter().enumerate() {
        g += c * power;
        if d + 1 < cd.len() {
            dg += (d + 1) as f64 * cd[d + 1] * power;
        }
        power *= z;
    }
    (1.0 - z) * (1.0 - z) * dg - (3.0 - 2.0 * z) * g + 1.0
}
