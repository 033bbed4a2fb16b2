//! Seeded replications fanned out over a bounded worker pool.

use dupdel_core::model::{run, simulate as simulate_model};
use dupdel_core::stats::clustering;
use dupdel_core::theory::TheoreticalDistribution;
use dupdel_core::{ChoiceStream, CoupledState, ModelState, Schedule, Version};
use rayon::prelude::*;

use crate::config::{RunConfig, QUADRATURE_REL_TOL};
use crate::error::{CliError, Result};
use crate::report::{
    CheckpointRecord, CliqueRate, Clustering, ClusteringSummary, ComparisonRow, EquivalenceRecord,
    Estimate, GrowthRecord, RunReport, SeedRun, TheoryValue, Verdict,
};

/// Run `f` once per seed on at most `parallelism` threads (all cores when
/// `None`). Results come back in seed order.
pub fn fan_out<T, F>(seeds: &[u64], parallelism: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
{
    if parallelism == Some(0) {
        return Err(CliError::Usage("--parallelism must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Pool(e.to_string()))?;
    pool.install(|| seeds.par_iter().map(|&s| f(s)).collect())
}

fn to_u64(xs: &[usize]) -> Vec<u64> {
    xs.iter().map(|&x| x as u64).collect()
}

/// One seed of `config`, from the single vertex to the final step.
pub fn run_seed(config: &RunConfig, seed: u64) -> Result<SeedRun> {
    let steps = config.steps as usize;
    let schedule = config.checkpoints.schedule();
    let mut stream = ChoiceStream::new(seed);
    if config.couple {
        return run_coupled_seed(steps, &schedule, seed);
    }
    let outcome = simulate_model(config.model_version(), steps, &mut stream, &schedule)?;
    let checkpoints = outcome
        .trace
        .iter()
        .map(|cp| CheckpointRecord {
            step: cp.step as u64,
            degree_counts: to_u64(cp.value.degrees.counts()),
            clique_counts: cp.value.cliques.as_deref().map(to_u64),
        })
        .collect();
    let clustering = match &outcome.state {
        ModelState::One(graph) => {
            let (global, average) = clustering(graph);
            Clustering { global, average }
        }
        ModelState::Two(part) => Clustering {
            global: part.clustering_global(),
            average: part.clustering_average(),
        },
    };
    Ok(SeedRun {
        seed,
        checkpoints,
        clustering,
        growth: None,
        coupling_equivalent: None,
    })
}

fn run_coupled_seed(steps: usize, schedule: &Schedule, seed: u64) -> Result<SeedRun> {
    let (state, trace) = coupled_trace(steps, schedule, seed)?;
    let (global, average) = clustering(state.graph());
    let mut checkpoints = Vec::with_capacity(trace.len());
    let mut growth = Vec::with_capacity(trace.len());
    let mut equivalent = true;
    for (record, g, eq) in trace {
        checkpoints.push(record);
        growth.push(g);
        equivalent &= eq.equivalent;
    }
    Ok(SeedRun {
        seed,
        checkpoints,
        clustering: Clustering { global, average },
        growth: Some(growth),
        coupling_equivalent: Some(equivalent),
    })
}

type CoupledTrace = Vec<(CheckpointRecord, GrowthRecord, EquivalenceRecord)>;

/// Coupled version-1 run recording degrees, growth and the black-subgraph
/// check at every checkpoint.
pub fn coupled_trace(
    steps: usize,
    schedule: &Schedule,
    seed: u64,
) -> Result<(CoupledState, CoupledTrace)> {
    let mut state = CoupledState::new();
    let mut stream = ChoiceStream::new(seed);
    let trace = run(&mut state, steps, &mut stream, schedule, |step, s| {
        (
            CheckpointRecord {
                step: step as u64,
                degree_counts: to_u64(s.graph().degree_histogram().counts()),
                clique_counts: None,
            },
            GrowthRecord::from(s.growth_sample(step)),
            EquivalenceRecord {
                step: step as u64,
                equivalent: s.black_equivalent(),
            },
        )
    })?;
    Ok((state, trace.into_iter().map(|c| c.value).collect()))
}

fn proportion(counts: &[u64], index: usize, total: f64) -> f64 {
    counts.get(index).copied().unwrap_or(0) as f64 / total
}

/// Run every seed of `config` and aggregate.
pub fn simulate(config: &RunConfig, parallelism: Option<usize>) -> Result<RunReport> {
    config.validate()?;
    let theory = TheoreticalDistribution::quadrature(config.dmax, QUADRATURE_REL_TOL)?;
    let runs = fan_out(&config.seeds, parallelism, |seed| run_seed(config, seed))?;
    Ok(aggregate(config, runs, &theory))
}

/// Assemble a report from finished runs and a reference table covering
/// `0..=config.dmax`.
pub fn aggregate(
    config: &RunConfig,
    runs: Vec<SeedRun>,
    theory: &TheoreticalDistribution,
) -> RunReport {
    let finals: Vec<&CheckpointRecord> = runs.iter().map(SeedRun::final_checkpoint).collect();
    let comparison = (0..=config.dmax)
        .map(|d| {
            let xs: Vec<f64> = finals
                .iter()
                .map(|cp| proportion(&cp.degree_counts, d, (cp.step + 1) as f64))
                .collect();
            let c = theory.get(d).expect("theory covers dmax");
            ComparisonRow::new(d as u64, Estimate::of(&xs), c, config.tol)
        })
        .collect::<Vec<_>>();

    let clique_rates = (config.model_version() == Version::Two).then(|| {
        let k_top = finals
            .iter()
            .filter_map(|cp| cp.clique_counts.as_ref().map(Vec::len))
            .max()
            .unwrap_or(0);
        (1..k_top)
            .map(|k| {
                let per_step: Vec<f64> = finals
                    .iter()
                    .map(|cp| {
                        proportion(
                            cp.clique_counts.as_deref().unwrap_or(&[]),
                            k,
                            cp.step as f64,
                        )
                    })
                    .collect();
                let per_vertex: Vec<f64> = finals
                    .iter()
                    .map(|cp| {
                        proportion(
                            cp.clique_counts.as_deref().unwrap_or(&[]),
                            k,
                            (cp.step + 1) as f64,
                        )
                    })
                    .collect();
                CliqueRate {
                    k: k as u64,
                    per_step: Estimate::of(&per_step),
                    per_vertex: Estimate::of(&per_vertex),
                    theoretical: theory.get(k - 1).map(|c| c / k as f64),
                }
            })
            .collect()
    });

    let global: Vec<f64> = runs.iter().map(|r| r.clustering.global).collect();
    let average: Vec<f64> = runs.iter().map(|r| r.clustering.average).collect();
    let coupling = config
        .couple
        .then(|| Verdict::from_pass(runs.iter().all(|r| r.coupling_equivalent == Some(true))));
    let verdict = Verdict::all(comparison.iter().map(|r| r.verdict).chain(coupling));
    RunReport {
        config: config.clone(),
        clustering: ClusteringSummary {
            global: Estimate::of(&global),
            average: Estimate::of(&average),
        },
        clique_rates,
        theory: (0..=config.dmax)
            .map(|d| TheoryValue {
                d: d as u64,
                value: theory.get(d).expect("theory covers dmax"),
                method: theory.method.name().to_string(),
            })
            .collect(),
        comparison,
        coupling,
        runs,
        verdict,
    }
}
