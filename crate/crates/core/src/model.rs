//! Driving a model through a [`ChoiceStream`] and recording checkpoints.

use alloc::vec::Vec;

use crate::choice::{ChoiceStream, Picks};
use crate::clique::CliquePartition;
use crate::coupling::CoupledState;
use crate::error::{Error, Result};
use crate::graph::AdjacencyGraph;
use crate::stats::DegreeHistogram;

/// A graph process advanced one step at a time by a pair of picks.
pub trait Model {
    fn vertex_count(&self) -> usize;
    fn apply(&mut self, picks: Picks) -> Result<()>;
    fn degree_histogram(&self) -> DegreeHistogram;
}

impl Model for CliquePartition {
    fn vertex_count(&self) -> usize {
        CliquePartition::vertex_count(self)
    }
    fn apply(&mut self, picks: Picks) -> Result<()> {
        self.step(picks)
    }
    fn degree_histogram(&self) -> DegreeHistogram {
        CliquePartition::degree_histogram(self)
    }
}

impl Model for AdjacencyGraph {
    fn vertex_count(&self) -> usize {
        AdjacencyGraph::vertex_count(self)
    }
    fn apply(&mut self, picks: Picks) -> Result<()> {
        self.step(picks)
    }
    fn degree_histogram(&self) -> DegreeHistogram {
        AdjacencyGraph::degree_histogram(self)
    }
}

impl Model for CoupledState {
    fn vertex_count(&self) -> usize {
        self.graph().vertex_count()
    }
    fn apply(&mut self, picks: Picks) -> Result<()> {
        self.step(picks)
    }
    fn degree_histogram(&self) -> DegreeHistogram {
        self.graph().degree_histogram()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Version {
    /// New edges survive the deletion of the same step.
    One,
    /// Deletion spares nothing; the graph is a union of cliques.
    Two,
}

impl Version {
    pub fn number(self) -> u8 {
        match self {
            Version::One => 1,
            Version::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Version::One),
            2 => Some(Version::Two),
            _ => None,
        }
    }
}

/// Steps at which a run records a snapshot. The final step is always
/// recorded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Schedule {
    /// 1, 2, 4, 8, ...
    #[default]
    PowersOfTwo,
    /// Explicit step list; order and duplicates do not matter.
    Explicit(Vec<usize>),
    /// Every step. Used by exhaustive checks on short runs.
    Every,
}

impl Schedule {
    /// Sorted, deduplicated checkpoint steps for a run of `steps` steps.
    pub fn steps(&self, steps: usize) -> Vec<usize> {
        let mut out: Vec<usize> = match self {
            Schedule::PowersOfTwo => core::iter::successors(Some(1usize), |&s| s.checked_mul(2))
                .take_while(|&s| s <= steps)
                .collect(),
            Schedule::Explicit(list) => list
                .iter()
                .copied()
                .filter(|&s| s >= 1 && s <= steps)
                .collect(),
            Schedule::Every => (1..=steps).collect(),
        };
        if steps > 0 {
            out.push(steps);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint<T> {
    pub step: usize,
    pub value: T,
}

/// Advance `model` by `steps` picks from `stream`, calling `observe` at every
/// scheduled step.
pub fn run<M, T>(
    model: &mut M,
    steps: usize,
    stream: &mut ChoiceStream,
    schedule: &Schedule,
    mut observe: impl FnMut(usize, &M) -> T,
) -> Result<Vec<Checkpoint<T>>>
where
    M: Model,
{
    let marks = schedule.steps(steps);
    let mut next = marks.iter().peekable();
    let mut out = Vec::with_capacity(marks.len());
    for step in 1..=steps {
        model.apply(stream.next_picks())?;
        if next.peek() == Some(&&step) {
            next.next();
            out.push(Checkpoint {
                step,
                value: observe(step, model),
            });
        }
    }
    Ok(out)
}

/// Final state of a plain (uncoupled) run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelState {
    One(AdjacencyGraph),
    Two(CliquePartition),
}

impl ModelState {
    pub fn initial(version: Version) -> Self {
        match version {
            Version::One => ModelState::One(AdjacencyGraph::new()),
            Version::Two => ModelState::Two(CliquePartition::new()),
        }
    }

    pub fn version(&self) -> Version {
        match self {
            ModelState::One(_) => Version::One,
            ModelState::Two(_) => Version::Two,
        }
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        match self {
            ModelState::One(g) => g.degree_histogram(),
            ModelState::Two(p) => p.degree_histogram(),
        }
    }
}

/// Histograms recorded at a checkpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub degrees: DegreeHistogram,
    /// `Y[n,k]` indexed by `k`, version 2 only.
    pub cliques: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub state: ModelState,
    pub trace: Vec<Checkpoint<Snapshot>>,
}

/// Run either version from the single vertex for `steps` steps.
pub fn simulate(
    version: Version,
    steps: usize,
    stream: &mut ChoiceStream,
    schedule: &Schedule,
) -> Result<RunOutcome> {
    match ModelState::initial(version) {
        ModelState::One(mut graph) => {
            let trace = run(&mut graph, steps, stream, schedule, |_, g| Snapshot {
                degrees: g.degree_histogram(),
                cliques: None,
            })?;
            Ok(RunOutcome {
                state: ModelState::One(graph),
                trace,
            })
        }
        ModelState::Two(mut part) => {
            let trace = run(&mut part, steps, stream, schedule, |_, p| Snapshot {
                degrees: p.degree_histogram(),
                cliques: Some(p.clique_counts().to_vec()),
            })?;
            Ok(RunOutcome {
                state: ModelState::Two(part),
                trace,
            })
        }
    }
}

/// Replay a stream of explicit picks; used by tests and the enumeration
/// oracle.
pub fn replay<M: Model>(model: &mut M, picks: impl IntoIterator<Item = Picks>) -> Result<()> {
    for p in picks {
        model.apply(p)?;
    }
    Ok(())
}

impl From<Version> for u8 {
    fn from(v: Version) -> u8 {
        v.number()
    }
}

impl TryFrom<u8> for Version {
    type Error = Error;
    fn try_from(n: u8) -> Result<Self> {
        Version::from_number(n).ok_or(Error::InvalidArgument("version must be 1 or 2"))
    }
}
