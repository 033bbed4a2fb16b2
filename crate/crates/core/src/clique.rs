//! Version-2 state: a disjoint union of cliques stored as a partition.
//!
//! Because version 2 erases every edge of the deleted vertex, the graph never
//! stops being a union of complete graphs. A step touches at most three
//! cliques: the duplicated vertex's clique grows by one, the deleted vertex
//! leaves its clique, and a new singleton appears for it. Sampling a clique
//! proportionally to its size is the same as sampling a uniform vertex and
//! looking up its clique, which is what [`CliquePartition::step`] does.

use alloc::vec;
use alloc::vec::Vec;

use crate::choice::Picks;
use crate::error::{Error, Result};
use crate::graph::AdjacencyGraph;
use crate::stats::DegreeHistogram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    /// Size of every clique ever created, indexed by clique id. Cliques never
    /// empty out: extracting the last member of a clique is a no-op.
    sizes: Vec<usize>,
    clique_of: Vec<usize>,
    /// `counts[k]` is the number of cliques of size `k` (`Y[n,k]`).
    counts: Vec<usize>,
    edges: u64,
}

impl Default for CliquePartition {
    fn default() -> Self {
        Self::new()
    }
}

impl CliquePartition {
    /// The single-vertex starting configuration.
    pub fn new() -> Self {
        Self {
            sizes: vec![1],
            clique_of: vec![0],
            counts: vec![0, 1],
            edges: 0,
        }
    }

    /// Partition with consecutive vertex ids: the first `sizes[0]` vertices
    /// form clique 0, the next `sizes[1]` clique 1, and so on.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidArgument(
                "partition needs at least one clique",
            ));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument("clique sizes must be positive"));
        }
        let mut part = Self {
            sizes: Vec::with_capacity(sizes.len()),
            clique_of: Vec::new(),
            counts: vec![0],
            edges: 0,
        };
        for (id, &k) in sizes.iter().enumerate() {
            part.sizes.push(0);
            part.resize(id, k);
            part.clique_of.extend(core::iter::repeat_n(id, k));
        }
        Ok(part)
    }

    pub fn vertex_count(&self) -> usize {
        self.clique_of.len()
    }

    pub fn clique_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    pub fn clique_of(&self, v: usize) -> usize {
        self.clique_of[v]
    }

    pub fn clique_size(&self, id: usize) -> usize {
        self.sizes[id]
    }

    /// Size of the clique containing `v`.
    pub fn size_of_clique_containing(&self, v: usize) -> usize {
        self.sizes[self.clique_of[v]]
    }

    /// `Y[n,k]` indexed by `k`; entry 0 is always 0.
    pub fn clique_counts(&self) -> &[usize] {
        &self.counts
    }

    /// Clique sizes sorted ascending.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len());
        for (k, &count) in self.counts.iter().enumerate().skip(1) {
            out.extend(core::iter::repeat_n(k, count));
        }
        out
    }

    pub fn max_clique_size(&self) -> usize {
        self.counts.len() - 1
    }

    /// Apply one step: the new vertex joins the clique of `picks.duplicate`,
    /// then `picks.delete` is split off as a singleton.
    pub fn step(&mut self, picks: Picks) -> Result<()> {
        let n = self.vertex_count();
        for vertex in [picks.duplicate, picks.delete] {
            if vertex >= n {
                return Err(Error::InvalidVertex {
                    vertex,
                    vertices: n,
                });
            }
        }

        let grown = self.clique_of[picks.duplicate];
        self.clique_of.push(grown);
        self.resize(grown, self.sizes[grown] + 1);

        let source = self.clique_of[picks.delete];
        let size = self.sizes[source];
        if size > 1 {
            self.resize(source, size - 1);
            let id = self.sizes.len();
            self.sizes.push(0);
            self.resize(id, 1);
            self.clique_of[picks.delete] = id;
        }
        Ok(())
    }

    fn resize(&mut self, id: usize, new: usize) {
        let old = self.sizes[id];
        if old > 0 {
            self.counts[old] -= 1;
        }
        if new >= self.counts.len() {
            self.counts.resize(new + 1, 0);
        }
        self.counts[new] += 1;
        self.edges = self.edges - pairs(old) + pairs(new);
        self.sizes[id] = new;
        while self.counts.len() > 2 && self.counts.last() == Some(&0) {
            self.counts.pop();
        }
    }

    /// `X[n,d]`: every clique of size `k` holds `k` vertices of degree `k - 1`.
    pub fn degree_histogram(&self) -> DegreeHistogram {
        let counts = self
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &y)| k * y)
            .collect();
        DegreeHistogram::from_counts(counts)
    }

    /// Triangles and connected triplets, from the clique-size counts.
    pub fn triangles_and_triplets(&self) -> (u64, u64) {
        self.counts
            .iter()
            .enumerate()
            .fold((0, 0), |(t, p), (k, &y)| {
                let (k, y) = (k as u64, y as u64);
                (
                    t + y * triples(k),
                    p + y * k * pairs_u64(k.saturating_sub(1)),
                )
            })
    }

    /// Transitivity of the union of cliques: 1 as soon as any clique has three
    /// vertices, 0 when there is no length-2 path.
    pub fn clustering_global(&self) -> f64 {
        let (t, p) = self.triangles_and_triplets();
        if p == 0 {
            0.0
        } else {
            (3 * t) as f64 / p as f64
        }
    }

    /// Mean local clustering: the fraction of vertices of degree at least 2.
    pub fn clustering_average(&self) -> f64 {
        let clustered: usize = self
            .counts
            .iter()
            .enumerate()
            .skip(3)
            .map(|(k, &y)| k * y)
            .sum();
        clustered as f64 / self.vertex_count() as f64
    }

    /// Materialize the cliques as an explicit graph.
    pub fn to_graph(&self) -> AdjacencyGraph {
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); self.sizes.len()];
        for (v, &c) in self.clique_of.iter().enumerate() {
            members[c].push(v);
        }
        let mut edges = Vec::with_capacity(self.edges as usize);
        for clique in &members {
            for (i, &a) in clique.iter().enumerate() {
                for &b in &clique[i + 1..] {
                    edges.push((a, b));
                }
            }
        }
        AdjacencyGraph::from_edges(self.vertex_count(), &edges)
            .expect("clique edges are simple and in range")
    }

    /// Full consistency check of the partition.
    pub fn check_invariants(&self) -> Result<()> {
        let mut recount = vec![0usize; self.sizes.len()];
        for &c in &self.clique_of {
            if c >= self.sizes.len() {
                return Err(Error::Invariant("vertex mapped to unknown clique"));
            }
            recount[c] += 1;
        }
        if recount != self.sizes {
            return Err(Error::Invariant("clique sizes disagree with vertex map"));
        }
        if self.sizes.contains(&0) {
            return Err(Error::Invariant("empty clique"));
        }
        let mut counts = vec![0usize; self.counts.len().max(2)];
        for &k in &self.sizes {
            if k >= counts.len() {
                return Err(Error::Invariant("clique larger than size histogram"));
            }
            counts[k] += 1;
        }
        if counts != self.counts {
            return Err(Error::Invariant("size histogram out of date"));
        }
        let weighted: usize = counts.iter().enumerate().map(|(k, &y)| k * y).sum();
        if weighted != self.vertex_count() {
            return Err(Error::Invariant(
                "sum of k * Y[k] differs from vertex count",
            ));
        }
        let edges: u64 = self.sizes.iter().map(|&k| pairs(k)).sum();
        if edges != self.edges {
            return Err(Error::Invariant("edge count out of date"));
        }
        Ok(())
    }
}

fn pairs(k: usize) -> u64 {
    pairs_u64(k as u64)
}

fn pairs_u64(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

fn triples(k: u64) -> u64 {
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}
