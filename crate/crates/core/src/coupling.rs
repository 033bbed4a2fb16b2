//! Versions 1 and 2 driven by the same picks, with the red/black colouring.
//!
//! Colouring rules, applied inside a version-1 step:
//!
//! * duplication: an edge copied from a red edge of the duplicated vertex is
//!   red, every other new edge is black, and the new vertex is red exactly
//!   when the duplicated vertex is red;
//! * deletion: if the edge between the new vertex and the deleted vertex
//!   survives, it turns red and both endpoints become red; if instead the
//!   deleted vertex is left with no edge at all, it becomes black.
//!
//! Under these rules the black edges form, step by step, exactly the version-2
//! graph on the same picks, which runs alongside as the `shadow`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::choice::{ChoiceStream, Picks};
use crate::clique::CliquePartition;
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::AdjacencyGraph;
use crate::model::{run, Checkpoint, Schedule};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupledState {
    graph: AdjacencyGraph,
    red_vertex: Vec<bool>,
    red_vertices: usize,
    red_edges: BTreeSet<(u32, u32)>,
    shadow: CliquePartition,
}

/// Growth diagnostics at one checkpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthSample {
    pub step: usize,
    /// `S_n`, black and red edges together.
    pub edges: usize,
    /// `S_n / n`.
    pub edges_per_step: f64,
    /// `Z_n`.
    pub red_vertices: usize,
    /// `R_n`.
    pub red_edges: usize,
    /// `M_n`.
    pub max_degree: usize,
}

impl Default for CoupledState {
    fn default() -> Self {
        Self::new()
    }
}

impl CoupledState {
    pub fn new() -> Self {
        Self {
            graph: AdjacencyGraph::new(),
            red_vertex: alloc::vec![false],
            red_vertices: 0,
            red_edges: BTreeSet::new(),
            shadow: CliquePartition::new(),
        }
    }

    pub fn graph(&self) -> &AdjacencyGraph {
        &self.graph
    }

    /// The version-2 run on the same picks.
    pub fn shadow(&self) -> &CliquePartition {
        &self.shadow
    }

    pub fn is_red(&self, v: usize) -> bool {
        self.red_vertex[v]
    }

    pub fn is_red_edge(&self, a: usize, b: usize) -> bool {
        self.red_edges.contains(&key(a, b))
    }

    pub fn red_vertex_count(&self) -> usize {
        self.red_vertices
    }

    pub fn red_edge_count(&self) -> usize {
        self.red_edges.len()
    }

    pub fn step(&mut self, picks: Picks) -> Result<()> {
        self.graph.check_picks(picks)?;
        let Picks {
            duplicate: u,
            delete: v,
        } = picks;

        let u_red = self.red_vertex[u];
        let w = self.graph.duplicate(u);
        self.red_vertex.push(u_red);
        if u_red {
            self.red_vertices += 1;
            // Only red vertices carry red edges.
            for &x in self.graph.neighbors(w) {
                let x = x as usize;
                if x != u && self.red_edges.contains(&key(u, x)) {
                    self.red_edges.insert(key(w, x));
                }
            }
        }

        if self.red_vertex[v] {
            for &x in self.graph.neighbors(v) {
                if x as usize != w {
                    self.red_edges.remove(&key(v, x as usize));
                }
            }
        }
        if self.graph.strip_except(v, w) {
            self.red_edges.insert(key(v, w));
            self.paint(v, true);
            self.paint(w, true);
        } else {
            self.paint(v, false);
        }

        self.shadow.step(picks)
    }

    fn paint(&mut self, v: usize, red: bool) {
        if self.red_vertex[v] != red {
            self.red_vertex[v] = red;
            if red {
                self.red_vertices += 1;
            } else {
                self.red_vertices -= 1;
            }
        }
    }

    pub fn growth_sample(&self, step: usize) -> GrowthSample {
        let edges = self.graph.edge_count();
        GrowthSample {
            step,
            edges,
            edges_per_step: if step == 0 {
                0.0
            } else {
                edges as f64 / step as f64
            },
            red_vertices: self.red_vertices,
            red_edges: self.red_edges.len(),
            max_degree: self.graph.max_degree(),
        }
    }

    /// Exact labelled comparison of the black subgraph with the shadow: every
    /// black edge lies inside a shadow clique and every vertex has as many
    /// black neighbours as its clique has other members.
    pub fn black_matches_shadow(&self) -> bool {
        let n = self.graph.vertex_count();
        if self.shadow.vertex_count() != n {
            return false;
        }
        (0..n).all(|v| {
            let clique = self.shadow.clique_of(v);
            let mut black = 0;
            for &x in self.graph.neighbors(v) {
                let x = x as usize;
                if self.is_red_edge(v, x) {
                    continue;
                }
                if self.shadow.clique_of(x) != clique {
                    return false;
                }
                black += 1;
            }
            black + 1 == self.shadow.size_of_clique_containing(v)
        })
    }

    /// Both views of the black subgraph agree with the shadow: component
    /// sizes as a multiset, and the labelled check above.
    pub fn black_equivalent(&self) -> bool {
        self.black_component_sizes() == self.shadow.size_multiset() && self.black_matches_shadow()
    }

    /// Component sizes of the black-edge subgraph, sorted ascending.
    pub fn black_component_sizes(&self) -> Vec<usize> {
        let mut sets = DisjointSets::new(self.graph.vertex_count());
        for (a, b) in self.graph.edges() {
            if !self.is_red_edge(a, b) {
                sets.union(a, b);
            }
        }
        sets.component_sizes()
    }

    /// Colour soundness, the red-edge endpoint rule, and the bookkeeping
    /// counters.
    pub fn check_invariants(&self) -> Result<()> {
        self.graph.check_invariants()?;
        self.shadow.check_invariants()?;
        if self.red_vertex.len() != self.graph.vertex_count() {
            return Err(Error::Invariant("vertex colour table out of date"));
        }
        if self.red_vertex.iter().filter(|&&r| r).count() != self.red_vertices {
            return Err(Error::Invariant("red vertex counter out of date"));
        }
        for &(a, b) in &self.red_edges {
            let (a, b) = (a as usize, b as usize);
            if !self.graph.has_edge(a, b) {
                return Err(Error::Invariant("red edge missing from graph"));
            }
            if !self.red_vertex[a] || !self.red_vertex[b] {
                return Err(Error::Invariant("red edge with a black endpoint"));
            }
        }
        Ok(())
    }
}

fn key(a: usize, b: usize) -> (u32, u32) {
    let (a, b) = (a as u32, b as u32);
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Outcome of a coupled run.
#[derive(Debug, Clone)]
pub struct CoupledRun {
    pub state: CoupledState,
    pub growth: Vec<GrowthSample>,
    /// Per checkpoint: black component sizes equal shadow clique sizes, and
    /// the labelled black subgraph equals the shadow.
    pub equivalence: Vec<Checkpoint<bool>>,
}

impl CoupledRun {
    pub fn all_equivalent(&self) -> bool {
        self.equivalence.iter().all(|c| c.value)
    }
}

/// Run the coupled process from the single vertex, recording growth
/// diagnostics and the black-subgraph check at every checkpoint.
pub fn run_coupled(
    steps: usize,
    stream: &mut ChoiceStream,
    schedule: &Schedule,
) -> Result<CoupledRun> {
    let mut state = CoupledState::new();
    let trace = run(&mut state, steps, stream, schedule, |step, s| {
        (s.growth_sample(step), s.black_equivalent())
    })?;
    let (growth, equivalence) = trace
        .into_iter()
        .map(|c| {
            (
                c.value.0,
                Checkpoint {
                    step: c.step,
                    value: c.value.1,
                },
            )
        })
        .unzip();
    Ok(CoupledRun {
        state,
        growth,
        equivalence,
    })
}

/// The `(n, S_n, S_n/n, Z_n, R_n, M_n)` series of a coupled run.
pub fn growth_diagnostics(run: &CoupledRun) -> &[GrowthSample] {
    &run.growth
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_step() {
        let mut s = CoupledState::new();
        s.step(Picks::new(0, 0)).unwrap();
        assert!(s.is_red_edge(0, 1));
        assert!(s.is_red(0) && s.is_red(1));
        let g = s.growth_sample(1);
        assert_eq!((g.edges, g.red_vertices, g.red_edges), (1, 2, 1));
        assert_eq!(s.shadow().size_multiset(), vec![1, 1]);
        assert_eq!(s.black_component_sizes(), vec![1, 1]);
        assert!(s.black_matches_shadow());
        s.check_invariants().unwrap();
    }

    #[test]
    fn protected_edge_keeps_deleted_vertex_red() {
        let mut s = CoupledState::new();
        s.step(Picks::new(0, 0)).unwrap();
        // 0 is a neighbour of the duplicated vertex 1, so {0,2} survives.
        s.step(Picks::new(1, 0)).unwrap();
        assert!(s.is_red_edge(0, 2));
        assert!(!s.is_red_edge(1, 2));
        assert!(!s.graph().has_edge(0, 1));
        assert_eq!(s.red_vertex_count(), 3);
        assert_eq!(s.shadow().size_multiset(), vec![1, 2]);
        assert!(s.black_matches_shadow());
        s.check_invariants().unwrap();
    }

    #[test]
    fn stripped_red_vertex_turns_black() {
        let mut s = CoupledState::new();
        s.step(Picks::new(0, 0)).unwrap();
        s.step(Picks::new(1, 0)).unwrap();
        // Edges {1,2} black and {0,2} red. Duplicate 1, delete 0: the new
        // vertex 3 copies {1,2} only, so 0 loses everything.
        s.step(Picks::new(1, 0)).unwrap();
        assert_eq!(s.graph().degree(0), 0);
        assert!(!s.is_red(0));
        assert_eq!(s.red_edge_count(), 0);
        assert!(s.is_red(3));
        s.check_invariants().unwrap();
        assert!(s.black_matches_shadow());
    }

    #[test]
    fn copies_of_red_edges_are_red() {
        let mut s = CoupledState::new();
        s.step(Picks::new(0, 0)).unwrap();
        // Duplicate 0 (red, red edge to 1), delete 0's... pick an unrelated
        // vertex for deletion: only 0 and 1 exist, so delete 1 which is
        // adjacent to 0 and hence to the new vertex 2.
        s.step(Picks::new(0, 1)).unwrap();
        // {2,1} was copied red and survives as the protected edge.
        assert!(s.is_red_edge(1, 2));
        assert!(s.graph().has_edge(0, 2));
        assert!(!s.is_red_edge(0, 2));
        assert!(!s.graph().has_edge(0, 1));
        assert!(s.black_matches_shadow());
        s.check_invariants().unwrap();
    }

    #[test]
    fn coupled_run_stays_equivalent() {
        for seed in 0..5 {
            let run =
                run_coupled(3000, &mut ChoiceStream::new(seed), &Schedule::PowersOfTwo).unwrap();
            assert!(run.all_equivalent());
            run.state.check_invariants().unwrap();
            assert_eq!(growth_diagnostics(&run).last().unwrap().step, 3000);
        }
    }
}
