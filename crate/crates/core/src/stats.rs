//! Degree histograms, triangle counts and clustering coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::AdjacencyGraph;

/// `X[n,d]`: number of vertices of each degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    counts: Vec<usize>,
}

impl DegreeHistogram {
    /// Trailing zero counts are dropped.
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = Vec::new();
        for d in degrees {
            if d >= counts.len() {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }

    /// Number of vertices (`n + 1` after `n` steps).
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `X[n,d] / (n + 1)`.
    pub fn proportion(&self, d: usize) -> f64 {
        self.get(d) as f64 / self.total() as f64
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }
}

/// Number of triangles through each vertex.
pub fn vertex_triangles(graph: &AdjacencyGraph) -> Vec<u64> {
    let mut per_vertex = vec![0u64; graph.vertex_count()];
    for (a, b) in graph.edges() {
        // Common neighbours above `b`, so each triangle a < b < c is seen once.
        let na = graph.neighbors(a);
        let nb = graph.neighbors(b);
        let (mut i, mut j) = (
            na.partition_point(|&x| (x as usize) <= b),
            nb.partition_point(|&x| (x as usize) <= b),
        );
        while i < na.len() && j < nb.len() {
            match na[i].cmp(&nb[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    per_vertex[a] += 1;
                    per_vertex[b] += 1;
                    per_vertex[na[i] as usize] += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    per_vertex
}

pub fn triangle_count(graph: &AdjacencyGraph) -> u64 {
    vertex_triangles(graph).iter().sum::<u64>() / 3
}

/// Paths of length two: `sum_v C(deg v, 2)`.
pub fn connected_triplets(graph: &AdjacencyGraph) -> u64 {
    (0..graph.vertex_count())
        .map(|v| choose2(graph.degree(v) as u64))
        .sum()
}

/// Transitivity `3 T / P2`; 0 when the graph has no length-2 path.
pub fn clustering_global(graph: &AdjacencyGraph) -> f64 {
    let triplets = connected_triplets(graph);
    if triplets == 0 {
        return 0.0;
    }
    (3 * triangle_count(graph)) as f64 / triplets as f64
}

/// Mean of the local coefficients, vertices of degree < 2 counting as 0.
pub fn clustering_average(graph: &AdjacencyGraph) -> f64 {
    let triangles = vertex_triangles(graph);
    let sum: f64 = triangles
        .iter()
        .enumerate()
        .map(|(v, &t)| local(t, graph.degree(v)))
        .sum();
    sum / graph.vertex_count() as f64
}

/// Both coefficients from a single triangle pass.
pub fn clustering(graph: &AdjacencyGraph) -> (f64, f64) {
    let triangles = vertex_triangles(graph);
    let mut triplets = 0u64;
    let mut local_sum = 0.0;
    for (v, &t) in triangles.iter().enumerate() {
        let d = graph.degree(v);
        triplets += choose2(d as u64);
        local_sum += local(t, d);
    }
    let total: u64 = triangles.iter().sum();
    let global = if triplets == 0 {
        0.0
    } else {
        total as f64 / triplets as f64
    };
    (global, local_sum / graph.vertex_count() as f64)
}

pub fn local_clustering(graph: &AdjacencyGraph, v: usize) -> f64 {
    let na = graph.neighbors(v);
    let mut links = 0u64;
    for (i, &x) in na.iter().enumerate() {
        for &y in &na[i + 1..] {
            if graph.has_edge(x as usize, y as usize) {
                links += 1;
            }
        }
    }
    local(links, na.len())
}

fn local(links: u64, degree: usize) -> f64 {
    if degree < 2 {
        0.0
    } else {
        links as f64 / choose2(degree as u64) as f64
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}
