//! Acceptance suite. Runs every criterion at its stated scale and tolerance,
//! prints one line per criterion, and exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::Instant;

use dupdel_cli::config::{Checkpoints, RunConfig};
use dupdel_cli::report::RunReport;
use dupdel_cli::simulate;
use dupdel_core::coupling::run_coupled;
use dupdel_core::theory::{
    cd_quadrature_ln, ln_cd_asymptotic, normalization_residual, recursion_residuals, Tail,
    TheoreticalDistribution,
};
use dupdel_core::{ChoiceStream, CliquePartition, CoupledState, Schedule};

const AVERAGE_CLUSTERING_LIMIT: f64 = 0.385_38;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Version-2 runs with the partition invariants checked after every step.
fn clique_invariants() -> Outcome {
    let (seeds, steps) = (20u64, 10_000);
    for seed in 0..seeds {
        let mut part = CliquePartition::new();
        let mut stream = ChoiceStream::new(seed);
        for step in 1..=steps {
            if let Err(e) = part
                .step(stream.next_picks())
                .and_then(|_| part.check_invariants())
            {
                return outcome(false, format!("seed {seed}, step {step}: {e}"));
            }
            if part.vertex_count() != step + 1 {
                return outcome(
                    false,
                    format!(
                        "seed {seed}, step {step}: vertex count {}",
                        part.vertex_count()
                    ),
                );
            }
        }
    }
    outcome(
        true,
        format!("{seeds} seeds x {steps} steps, invariants checked at every step"),
    )
}

/// Black subgraph of the coupled version-1 run against an independent
/// version-2 run on the same seed.
fn coupling_oracle() -> Outcome {
    let (seeds, steps) = (20u64, 10_000usize);
    let marks = Schedule::Explicit((1..=steps).filter(|s| s % 50 == 0).collect());
    let marks: Vec<usize> = {
        let mut m = marks.steps(steps);
        m.extend(Schedule::PowersOfTwo.steps(steps));
        m.sort_unstable();
        m.dedup();
        m
    };
    let mut compared = 0;
    for seed in 0..seeds {
        let mut coupled = CoupledState::new();
        let mut standalone = CliquePartition::new();
        let mut a = ChoiceStream::new(seed);
        let mut b = ChoiceStream::new(seed);
        let mut next = marks.iter().peekable();
        for step in 1..=steps {
            coupled.step(a.next_picks()).unwrap();
            standalone.step(b.next_picks()).unwrap();
            if next.peek() == Some(&&step) {
                next.next();
                compared += 1;
                if coupled.black_component_sizes() != standalone.size_multiset() {
                    return outcome(
                        false,
                        format!("seed {seed}, step {step}: component sizes differ"),
                    );
                }
            }
        }
    }
    outcome(
        true,
        format!(
            "{seeds} seeds x {steps} steps, {compared} checkpoints with identical size multisets"
        ),
    )
}

fn fixed_point_vs_quadrature() -> Outcome {
    let fp = match TheoreticalDistribution::fixed_point(50, 1e-8) {
        Ok(t) => t,
        Err(e) => return outcome(false, format!("fixed point: {e}")),
    };
    let quad = TheoreticalDistribution::quadrature(50, 1e-12).unwrap();
    let worst = (0..=50)
        .map(|d| (fp.get(d).unwrap() - quad.get(d).unwrap()).abs())
        .fold(0.0, f64::max);
    outcome(
        worst < 1e-6,
        format!(
            "K_max 2000, enclosure {:.2e}, max |fp - quad| over d <= 50 = {worst:.3e}",
            fp.tolerance
        ),
    )
}

fn average_clustering_constant() -> Outcome {
    let quad = TheoreticalDistribution::quadrature(1, 1e-12).unwrap();
    let (c0, c1) = (quad.values[0], quad.values[1]);
    let a = 1.0 - c0 - c1;
    let b = 2.0 - 4.0 * c0;
    let gap = (a - AVERAGE_CLUSTERING_LIMIT)
        .abs()
        .max((b - AVERAGE_CLUSTERING_LIMIT).abs());
    outcome(
        gap < 1e-5,
        format!("1 - c0 - c1 = {a:.10}, 2 - 4 c0 = {b:.10}, gap to 0.38538 = {gap:.2e}"),
    )
}

fn normalization() -> Outcome {
    let quad = TheoreticalDistribution::quadrature(200, 1e-12).unwrap();
    let r = normalization_residual(&quad.values, Tail::Asymptotic);
    outcome(r < 1e-6, format!("|1 - sum_(d<=200) c_d - tail| = {r:.3e}"))
}

fn recursion() -> Outcome {
    let quad = TheoreticalDistribution::quadrature(200, 1e-12).unwrap();
    let residuals = recursion_residuals(&quad.values);
    let worst = residuals.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    outcome(
        residuals.len() == 200 && worst < 1e-6,
        format!(
            "{} relations (d = 0..=199), max residual {worst:.3e}",
            residuals.len()
        ),
    )
}

fn asymptotic_trend() -> Outcome {
    let ds = [250usize, 1000, 4000];
    let ratios: Vec<f64> = ds
        .iter()
        .map(|&d| (cd_quadrature_ln(d, 1e-12).unwrap().ln_value - ln_cd_asymptotic(d)).exp())
        .collect();
    let dist: Vec<f64> = ratios.iter().map(|r| (1.0 - r).abs()).collect();
    let monotone = dist.windows(2).all(|w| w[1] < w[0]);
    outcome(
        monotone && dist[2] < 0.1,
        format!(
            "ratios {:.6} (250), {:.6} (1000), {:.6} (4000)",
            ratios[0], ratios[1], ratios[2]
        ),
    )
}

fn run_report(version: u8, steps: u64, dmax: usize) -> RunReport {
    let config = RunConfig {
        version,
        steps,
        seeds: (0..10).collect(),
        checkpoints: Checkpoints::Pow2,
        dmax,
        tol: 0.01,
        couple: false,
    };
    simulate(&config, None).expect("simulation runs")
}

fn max_gap(report: &RunReport) -> f64 {
    report.comparison.iter().fold(0.0, |m, r| m.max(r.gap))
}

fn degree_convergence(v2: &RunReport, v1: &RunReport) -> Outcome {
    let (g2, g1) = (max_gap(v2), max_gap(v1));
    outcome(
        g2 < 0.01 && g1 < 0.01 && v2.comparison.len() == 6 && v1.comparison.len() == 4,
        format!("version 2 (1e6 x 10) max gap d <= 5: {g2:.4e}; version 1 (1e5 x 10) max gap d <= 3: {g1:.4e}"),
    )
}

fn clustering(v1: &RunReport) -> Outcome {
    let c = &v1.clustering;
    let min_global = v1
        .runs
        .iter()
        .map(|r| r.clustering.global)
        .fold(1.0, f64::min);
    let gap = (c.average.mean - AVERAGE_CLUSTERING_LIMIT).abs();
    outcome(
        c.global.mean >= 0.9 && gap < 0.02,
        format!(
            "global mean {:.4} (min seed {min_global:.4}), average mean {:.4}, gap to 0.38538 = {gap:.4}",
            c.global.mean, c.average.mean
        ),
    )
}

fn growth() -> Outcome {
    let steps = 1_000_000;
    let mut lo: f64 = f64::INFINITY;
    let mut hi: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    for seed in 0..10 {
        let run = run_coupled(steps, &mut ChoiceStream::new(seed), &Schedule::PowersOfTwo).unwrap();
        let last = run.growth.last().unwrap();
        assert_eq!(last.step, steps);
        lo = lo.min(last.edges_per_step);
        hi = hi.max(last.edges_per_step);
        for g in run.growth.iter().filter(|g| g.step >= 2) {
            worst_ratio = worst_ratio.max(g.red_vertices as f64 / (200.0 * (g.step as f64).ln()));
        }
    }
    outcome(
        lo >= 0.9 && hi <= 1.1 && worst_ratio <= 1.0,
        format!("S_n/n at n = 1e6 in [{lo:.4}, {hi:.4}]; max Z_n / (200 ln n) = {worst_ratio:.4}"),
    )
}

fn enumeration() -> Outcome {
    let mut streams = 0u64;
    for steps in 1..=6 {
        let oracle = common::enumerate_oracle(steps, false, &common::component_sizes);
        let engine = common::enumerate_engine(
            CliquePartition::new(),
            steps,
            &|p, picks| p.step(picks).unwrap(),
            &|p| p.size_multiset(),
        );
        if oracle != engine {
            return outcome(false, format!("distributions differ at n = {steps}"));
        }
        streams += engine.values().sum::<u64>();
    }
    outcome(
        true,
        format!("n = 1..=6, {streams} choice streams, exact match"),
    )
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2} [{status}] {name}: {} ({:.1}s)",
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed += 1;
        }
    };
    report(1, "clique invariants", &mut clique_invariants);
    report(2, "coupling oracle", &mut coupling_oracle);
    report(
        3,
        "fixed point vs quadrature",
        &mut fixed_point_vs_quadrature,
    );
    report(
        4,
        "average clustering constant",
        &mut average_clustering_constant,
    );
    report(5, "normalization", &mut normalization);
    report(6, "recursion residuals", &mut recursion);
    report(7, "asymptotic trend", &mut asymptotic_trend);
    let start = Instant::now();
    let v2 = run_report(2, 1_000_000, 5);
    let v1 = run_report(1, 100_000, 3);
    println!(
        "   simulations for criteria 8 and 9 took {:.1}s",
        start.elapsed().as_secs_f64()
    );
    report(8, "degree distribution", &mut || {
        degree_convergence(&v2, &v1)
    });
    report(9, "clustering", &mut || clustering(&v1));
    report(10, "growth diagnostics", &mut growth);
    report(11, "enumeration oracle", &mut enumeration);
    if failed == 0 {
        println!("all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
