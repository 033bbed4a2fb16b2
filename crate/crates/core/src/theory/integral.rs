//! `c_d = (d+1) \int_0^\infty y^d e^{-y} / (1+y)^{d+2} dy` by adaptive
//! quadrature in log space.
//!
//! The integrand is evaluated as `exp(f(y) - f(y_d))` where `f` is its
//! logarithm and `y_d` the peak, so the quadrature sees values in `(0, 1]`
//! whatever `d` is. The window `[0, Y]` is grown until the analytic tail
//! bound `\int_Y^\infty e^{-y} / (1+y)^2 dy <= e^{-Y} / (1+Y)^2` is below a
//! tenth of the requested relative tolerance.

use alloc::vec::Vec;

use super::asymptotic::{log_integrand, peak_location};
use super::quadrature::integrate;
use crate::error::{Error, Result};

/// Subinterval budget per window attempt.
const MAX_INTERVALS: usize = 4000;

/// `c_d` held as its logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdEstimate {
    pub d: usize,
    pub ln_value: f64,
    /// Quadrature error plus tail bound, relative to the value.
    pub rel_error: f64,
}

impl CdEstimate {
    /// Underflows to 0 only for astronomically large `d`.
    pub fn value(&self) -> f64 {
        libm::exp(self.ln_value)
    }
}

pub fn cd_quadrature_ln(d: usize, rel_tol: f64) -> Result<CdEstimate> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidArgument(
            "relative tolerance must be in (0, 1)",
        ));
    }
    let peak = peak_location(d);
    let ln_peak = log_integrand(d, peak);
    let scaled = |y: f64| {
        if y <= 0.0 {
            return if d == 0 { 1.0 } else { 0.0 };
        }
        libm::exp(log_integrand(d, y) - ln_peak)
    };

    // Width of the bulk: the integrand is close to exp(-(y - y_d)^2 / y_d).
    let width = libm::sqrt(peak).max(1.0);
    let floor = libm::log(rel_tol) - 10.0;
    let mut upper = peak + width;
    while log_integrand(d, upper) - ln_peak > floor {
        upper += width;
    }

    let target = libm::log(rel_tol / 10.0);
    loop {
        let breaks = window_breaks(peak, width, upper);
        let est = integrate(scaled, &breaks, rel_tol / 10.0, 0.0, MAX_INTERVALS)?;
        let ln_integral = libm::log(est.value) + ln_peak;
        let ln_tail = -upper - 2.0 * libm::log1p(upper) - ln_integral;
        if ln_tail < target {
            return Ok(CdEstimate {
                d,
                ln_value: libm::log((d + 1) as f64) + ln_integral,
                rel_error: est.error / est.value + libm::exp(ln_tail),
            });
        }
        upper += (ln_tail - target).max(width);
    }
}

/// `c_d` to relative tolerance `rel_tol`.
pub fn cd_quadrature(d: usize, rel_tol: f64) -> Result<f64> {
    cd_quadrature_ln(d, rel_tol).map(|e| e.value())
}

fn window_breaks(peak: f64, width: f64, upper: f64) -> Vec<f64> {
    let mut breaks = Vec::with_capacity(16);
    breaks.push(0.0);
    for k in [-8.0, -4.0, -2.0, 0.0, 2.0, 4.0, 8.0] {
        let x = peak + k * width;
        if x > 0.0 && x < upper {
            breaks.push(x);
        }
    }
    breaks.push(upper);
    breaks.dedup();
    breaks
}
