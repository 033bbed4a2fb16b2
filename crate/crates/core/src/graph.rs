//! Version-1 state: an explicit simple graph with sorted neighbour lists.

use alloc::vec;
use alloc::vec::Vec;

use crate::choice::Picks;
use crate::error::{Error, Result};
use crate::stats::DegreeHistogram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adj: Vec<Vec<u32>>,
    edges: usize,
}

impl Default for AdjacencyGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl AdjacencyGraph {
    /// The single-vertex starting configuration.
    pub fn new() -> Self {
        Self {
            adj: vec![Vec::new()],
            edges: 0,
        }
    }

    /// Build a graph on `n` vertices. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph needs at least one vertex"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::InvalidVertex {
                        vertex,
                        vertices: n,
                    });
                }
            }
            if a == b {
                return Err(Error::InvalidArgument("loops are not allowed"));
            }
            adj[a].push(id(b));
            adj[b].push(id(a));
        }
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        Ok(Self {
            adj,
            edges: total / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// `S_n`.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `M_n`.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&id(b)).is_ok()
    }

    /// Every edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, list)| {
            let start = list.partition_point(|&b| (b as usize) <= a);
            list[start..].iter().map(move |&b| (a, b as usize))
        })
    }

    /// Apply one version-1 step.
    pub fn step(&mut self, picks: Picks) -> Result<()> {
        self.check_picks(picks)?;
        let w = self.duplicate(picks.duplicate);
        self.strip_except(picks.delete, w);
        Ok(())
    }

    pub(crate) fn check_picks(&self, picks: Picks) -> Result<()> {
        let n = self.vertex_count();
        for vertex in [picks.duplicate, picks.delete] {
            if vertex >= n {
                return Err(Error::InvalidVertex {
                    vertex,
                    vertices: n,
                });
            }
        }
        Ok(())
    }

    /// Add a vertex joined to `u` and to every current neighbour of `u`;
    /// returns its id.
    pub(crate) fn duplicate(&mut self, u: usize) -> usize {
        let w = self.adj.len();
        let w_id = id(w);
        let source = &self.adj[u];
        let split = source.partition_point(|&x| (x as usize) < u);
        let mut list = Vec::with_capacity(source.len() + 1);
        list.extend_from_slice(&source[..split]);
        list.push(id(u));
        list.extend_from_slice(&source[split..]);
        // `w` is the largest id, so appending keeps every list sorted.
        for &x in &list {
            self.adj[x as usize].push(w_id);
        }
        self.edges += list.len();
        self.adj.push(list);
        w
    }

    /// Remove every edge of `v` except `{v, keep}`; returns whether that edge
    /// existed and survived.
    pub(crate) fn strip_except(&mut self, v: usize, keep: usize) -> bool {
        let mut list = core::mem::take(&mut self.adj[v]);
        let v_id = id(v);
        let mut kept = false;
        for &x in &list {
            if x as usize == keep {
                kept = true;
                continue;
            }
            let other = &mut self.adj[x as usize];
            if let Ok(pos) = other.binary_search(&v_id) {
                other.remove(pos);
            }
            self.edges -= 1;
        }
        list.clear();
        if kept {
            list.push(id(keep));
        }
        self.adj[v] = list;
        kept
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_degrees(self.adj.iter().map(Vec::len))
    }

    /// Symmetry, sortedness, no loops, and the edge count.
    pub fn check_invariants(&self) -> Result<()> {
        let mut half = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invariant("neighbour list not strictly sorted"));
            }
            for &x in list {
                let x = x as usize;
                if x == v {
                    return Err(Error::Invariant("loop"));
                }
                if x >= self.adj.len() || !self.has_edge(x, v) {
                    return Err(Error::Invariant("asymmetric adjacency"));
                }
            }
            half += list.len();
        }
        if half != 2 * self.edges {
            return Err(Error::Invariant("edge count out of date"));
        }
        Ok(())
    }
}

fn id(v: usize) -> u32 {
    u32::try_from(v).expect("vertex id exceeds u32 range")
}
