//! Closed forms around the integral representation of `c_d`.

use core::f64::consts::{E, PI};

/// Logarithm of the integrand `y^d e^{-y} / (1+y)^{d+2}`.
pub fn log_integrand(d: usize, y: f64) -> f64 {
    let d = d as f64;
    let ln_y_term = if d == 0.0 { 0.0 } else { d * libm::log(y) };
    ln_y_term - (d + 2.0) * libm::log1p(y) - y
}

/// Derivative of [`log_integrand`] in `y`.
pub fn log_integrand_slope(d: usize, y: f64) -> f64 {
    let d = d as f64;
    -(y * y + 3.0 * y - d) / (y * (y + 1.0))
}

/// Location of the integrand's maximum, `-3/2 + sqrt(d + 9/4)`.
pub fn peak_location(d: usize) -> f64 {
    -1.5 + libm::sqrt(d as f64 + 2.25)
}

/// `ln((e pi)^{1/2} d^{1/4} e^{-2 sqrt d})`.
pub fn ln_cd_asymptotic(d: usize) -> f64 {
    let x = d as f64;
    0.5 * libm::log(E * PI) + 0.25 * libm::log(x) - 2.0 * libm::sqrt(x)
}

/// Leading-order large-`d` approximation `(e pi)^{1/2} d^{1/4} e^{-2 sqrt d}`.
/// Defined for `d >= 1`; `d = 0` gives 0.
pub fn cd_asymptotic(d: usize) -> f64 {
    if d == 0 {
        return 0.0;
    }
    libm::exp(ln_cd_asymptotic(d))
}
