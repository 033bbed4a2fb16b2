//! Literal edge-set replay of the model rules, enumerated over every choice
//! stream, and the same enumeration driven through an engine.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dupdel_core::Picks;

pub type Edges = BTreeSet<(usize, usize)>;

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// One step on an explicit edge set. `protect` spares the new vertex's edges.
pub fn oracle_step(edges: &mut Edges, n: usize, u: usize, v: usize, protect: bool) {
    let w = n;
    let mut new_edges = vec![norm(u, w)];
    for &(a, b) in edges.iter() {
        if a == u {
            new_edges.push(norm(b, w));
        } else if b == u {
            new_edges.push(norm(a, w));
        }
    }
    edges.extend(new_edges);
    edges.retain(|&(a, b)| {
        let touches_v = a == v || b == v;
        let touches_w = a == w || b == w;
        !touches_v || (protect && touches_w)
    });
}

pub fn component_sizes(edges: &Edges, n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for &(a, b) in edges {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

pub fn degree_counts(edges: &Edges, n: usize) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut counts = vec![0; n];
    for d in deg {
        counts[d] += 1;
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

pub fn enumerate_oracle(
    steps: usize,
    protect: bool,
    key: &dyn Fn(&Edges, usize) -> Vec<usize>,
) -> BTreeMap<Vec<usize>, u64> {
    fn go(
        edges: Edges,
        n: usize,
        steps: usize,
        protect: bool,
        key: &dyn Fn(&Edges, usize) -> Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        if n == steps + 1 {
            *out.entry(key(&edges, n)).or_default() += 1;
            return;
        }
        for u in 0..n {
            for v in 0..n {
                let mut next = edges.clone();
                oracle_step(&mut next, n, u, v, protect);
                go(next, n + 1, steps, protect, key, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    go(Edges::new(), 1, steps, protect, key, &mut out);
    out
}

pub fn enumerate_engine<S: Clone>(
    start: S,
    steps: usize,
    apply: &dyn Fn(&mut S, Picks),
    key: &dyn Fn(&S) -> Vec<usize>,
) -> BTreeMap<Vec<usize>, u64> {
    fn go<S: Clone>(
        state: &S,
        n: usize,
        steps: usize,
        apply: &dyn Fn(&mut S, Picks),
        key: &dyn Fn(&S) -> Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        if n == steps + 1 {
            *out.entry(key(state)).or_default() += 1;
            return;
        }
        for u in 0..n {
            for v in 0..n {
                let mut next = state.clone();
                apply(&mut next, Picks::new(u, v));
                go(&next, n + 1, steps, apply, key, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    go(&start, 1, steps, apply, key, &mut out);
    out
}
