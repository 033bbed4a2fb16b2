//! Globally adaptive Gauss-Kronrod (7/15) quadrature.

use alloc::vec::Vec;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the odd Kronrod nodes `XGK[1]`, `XGK[3]`, `XGK[5]`, `XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Summed error estimate over subintervals.
    pub error: f64,
}

/// One 15-point Kronrod evaluation with the embedded 7-point Gauss rule.
///
/// The error estimate is the QUADPACK one: `|K15 - G7|` rescaled by the
/// integrand's variation over the interval and floored at the round-off
/// level.
pub fn gauss_kronrod15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Estimate {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut samples = [(0.0, 0.0); 7];
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs_sum = WGK[7] * fc.abs();
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let (lo, hi) = (f(center - dx), f(center + dx));
        samples[j] = (lo, hi);
        kronrod += w * (lo + hi);
        abs_sum += w * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }
    let mean = 0.5 * kronrod;
    let mut spread = WGK[7] * (fc - mean).abs();
    for (&(lo, hi), &w) in samples.iter().zip(&WGK) {
        spread += w * ((lo - mean).abs() + (hi - mean).abs());
    }
    let scale = half.abs();
    let (spread, abs_sum) = (spread * scale, abs_sum * scale);
    let mut error = ((kronrod - gauss) * half).abs();
    if spread != 0.0 && error != 0.0 {
        error = spread * libm::pow(200.0 * error / spread, 1.5).min(1.0);
    }
    if abs_sum > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_sum);
    }
    Estimate {
        value: kronrod * half,
        error,
    }
}

/// Integrate `f` over `[breaks[0], breaks[last]]`, starting from the given
/// subintervals and bisecting the worst one until the summed error estimate
/// drops below `max(abs_tol, rel_tol * |value|)`.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    breaks: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> Result<Estimate> {
    if breaks.len() < 2
        || breaks
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less))
    {
        return Err(Error::InvalidArgument(
            "breakpoints must be strictly increasing",
        ));
    }
    let mut parts: Vec<(f64, f64, Estimate)> = breaks
        .windows(2)
        .map(|w| (w[0], w[1], gauss_kronrod15(&f, w[0], w[1])))
        .collect();
    loop {
        let (value, error) = parts
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.2.value, e + p.2.error));
        if error <= abs_tol.max(rel_tol * value.abs()) {
            return Ok(Estimate { value, error });
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2.error.total_cmp(&y.1 .2.error))
            .map(|(i, _)| i)
            .expect("at least one subinterval");
        let (a, b, _) = parts[worst];
        let mid = 0.5 * (a + b);
        if parts.len() >= max_intervals || !(a < mid && mid < b) {
            return Err(Error::QuadratureBudget {
                intervals: parts.len(),
                rel_error: error / value.abs(),
            });
        }
        parts[worst] = (a, mid, gauss_kronrod15(&f, a, mid));
        parts.push((mid, b, gauss_kronrod15(&f, mid, b)));
    }
}
