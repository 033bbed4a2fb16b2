#![allow(clippy::excessive_precision)]

use dupdel_core::theory::{
    cd_asymptotic, cd_from_yk, cd_quadrature, cd_quadrature_ln, fixed_point,
    generating_function_residual, normalization_residual, peak_location, recursion_residuals,
    tail_estimate, yk_from_cd, Tail, TheoreticalDistribution,
};

/// `c_d` from a 40-digit mpmath quadrature of the integral representation,
/// rescaled by the peak value and split at one-width steps around the peak.
const REFERENCE: [(usize, f64); 14] = [
    (0, 0.403_652_637_676_805_93),
    (1, 0.210_957_913_030_417_78),
    (2, 0.123_742_144_899_238_52),
    (3, 0.077_773_758_401_138_762),
    (4, 0.051_248_811_503_323_698),
    (5, 0.034_973_626_906_173_374),
    (10, 0.007_158_290_140_101_963_5),
    (20, 0.000_666_171_243_930_149_31),
    (50, 4.955_313_743_195_411_8e-6),
    (100, 1.744_332_975_600_829_7e-8),
    (200, 5.371_607_811_158_485_8e-12),
    (250, 2.028_950_183_573_089e-13),
    (1000, 5.448_643_598_555_097_5e-27),
    (4000, 2.665_089_389_728_985_1e-54),
];

/// Composite Simpson on `c_0 = \int_0^1 exp(-y / (1 - y)) dy`.
fn c0_direct(intervals: usize) -> f64 {
    let f = |y: f64| {
        if y >= 1.0 {
            0.0
        } else {
            (-y / (1.0 - y)).exp()
        }
    };
    let h = 1.0 / intervals as f64;
    let mut sum = f(0.0) + f(1.0);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(i as f64 * h);
    }
    sum * h / 3.0
}

#[test]
fn quadrature_matches_reference() {
    for (d, expected) in REFERENCE {
        let got = cd_quadrature(d, 1e-12).unwrap();
        assert!(
            ((got - expected) / expected).abs() < 1e-10,
            "d = {d}: {got} vs {expected}"
        );
    }
}

#[test]
fn c0_two_routes() {
    let direct = c0_direct(200_000);
    let quad = cd_quadrature(0, 1e-12).unwrap();
    assert!((direct - quad).abs() < 1e-10);
    assert!((quad - 0.403_652_6).abs() < 1e-6);
}

#[test]
fn c1_from_c0_identity() {
    let c0 = cd_quadrature(0, 1e-12).unwrap();
    let c1 = cd_quadrature(1, 1e-12).unwrap();
    assert!((c1 - (3.0 * c0 - 1.0)).abs() < 1e-11);
    assert!((c1 - 0.210_957_8).abs() < 1e-6);
}

#[test]
fn average_clustering_limit() {
    let c0 = cd_quadrature(0, 1e-12).unwrap();
    let c1 = cd_quadrature(1, 1e-12).unwrap();
    assert!((1.0 - c0 - c1 - 0.385_38).abs() < 1e-5);
    assert!((2.0 - 4.0 * c0 - 0.385_38).abs() < 1e-5);
}

#[test]
fn reported_error_is_honest() {
    for d in [0, 7, 300, 5000] {
        let est = cd_quadrature_ln(d, 1e-9).unwrap();
        assert!(est.rel_error < 1e-9, "d = {d}");
    }
}

#[test]
fn fixed_point_first_values() {
    let sol = fixed_point::fixed_point_yk(400, 1e-10).unwrap();
    assert_eq!(sol.k_report, 200);
    assert!(sol.width < 1e-10);
    assert!((sol.y[0] - REFERENCE[0].1).abs() < 1e-9);
    // y_1 = (1 + 2 y_2) / 3 within the enclosure width.
    assert!((sol.y[0] - (1.0 + 2.0 * sol.y[1]) / 3.0).abs() <= sol.width);
}

#[test]
fn truncation_does_not_leak_into_report_window() {
    let small = fixed_point::fixed_point_yk(300, 1e-10).unwrap();
    let large = fixed_point::fixed_point_yk(600, 1e-10).unwrap();
    for k in 0..small.k_report {
        assert!((small.y[k] - large.y[k]).abs() < 1e-10, "k = {}", k + 1);
    }
}

#[test]
fn fixed_point_agrees_with_quadrature() {
    let fp = TheoreticalDistribution::fixed_point(50, 1e-9).unwrap();
    let quad = TheoreticalDistribution::quadrature(50, 1e-12).unwrap();
    for d in 0..=50 {
        let (a, b) = (fp.get(d).unwrap(), quad.get(d).unwrap());
        assert!((a - b).abs() < 1e-6, "d = {d}");
    }
    let y_quad = yk_from_cd(&quad.values);
    let y_fp = yk_from_cd(&fp.values);
    for k in 0..50 {
        assert!((y_quad[k] - y_fp[k]).abs() < 1e-8);
    }
    for (a, b) in cd_from_yk(&y_quad).iter().zip(&quad.values) {
        assert!((a - b).abs() <= 1e-15 * b);
    }
}

#[test]
fn identities_on_quadrature_table() {
    let quad = TheoreticalDistribution::quadrature(200, 1e-12).unwrap();
    assert!(quad.values.iter().all(|&c| c > 0.0));
    assert!(normalization_residual(&quad.values, Tail::Asymptotic) < 1e-6);
    for (d, r) in recursion_residuals(&quad.values).into_iter().enumerate() {
        assert!(r.abs() < 1e-10, "d = {d}: {r}");
    }
    for z in [0.0, 0.1, 0.5] {
        let r = generating_function_residual(&quad.values, z);
        assert!(r.abs() < 1e-10, "z = {z}: {r}");
    }
}

#[test]
fn normalization_of_short_tables() {
    let c0 = cd_quadrature(0, 1e-12).unwrap();
    let r = normalization_residual(&[c0], Tail::Asymptotic);
    assert!((r - (1.0 - c0 - tail_estimate(0)).abs()).abs() < 1e-15);
    assert!((normalization_residual(&[c0], Tail::Zero) - (1.0 - c0)).abs() < 1e-15);
    assert!(tail_estimate(200) < 1e-9);
}

#[test]
fn asymptotic_ratio_trend() {
    let ratios: Vec<f64> = [250, 1000, 4000]
        .into_iter()
        .map(|d| {
            let est = cd_quadrature_ln(d, 1e-12).unwrap();
            (est.ln_value - dupdel_core::theory::ln_cd_asymptotic(d)).exp()
        })
        .collect();
    assert!((ratios[0] - 0.945_500_113_072_7).abs() < 1e-9);
    assert!((ratios[2] - 0.985_970_968_301_737).abs() < 1e-9);
    assert!((1.0 - ratios[0]).abs() > (1.0 - ratios[1]).abs());
    assert!((1.0 - ratios[1]).abs() > (1.0 - ratios[2]).abs());
}

#[test]
fn asymptotic_is_not_exact_at_small_degree() {
    let a1 = cd_asymptotic(1);
    assert!((a1 - 0.395_51).abs() < 1e-4);
    assert!((a1 - cd_quadrature(1, 1e-12).unwrap()).abs() > 0.1);
}

#[test]
fn peak_is_the_integrand_maximum() {
    use dupdel_core::theory::asymptotic::log_integrand;
    for d in [1usize, 10, 1000] {
        let y = peak_location(d);
        let f = log_integrand(d, y);
        assert!(f >= log_integrand(d, y * 1.01));
        assert!(f >= log_integrand(d, y * 0.99));
    }
}
