//! Duplication-deletion random graphs.
//!
//! Two evolution rules share one source of randomness, a [`ChoiceStream`] of
//! uniform (duplicate, delete) vertex picks:
//!
//! * version 1 ([`AdjacencyGraph`]): the new vertex is joined to the
//!   duplicated vertex and its neighbours, then every edge of the deleted vertex
//!   is removed except the edges of the new vertex;
//! * version 2 ([`CliquePartition`]): same, but no edge is spared. The graph
//!   stays a disjoint union of cliques and is stored as a partition.
//!
//! [`coupling`] runs both on the same picks with the red/black colouring that
//! identifies the black subgraph of version 1 with version 2, and [`theory`]
//! computes the limiting degree distribution `c_d` three independent ways.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod choice;
pub mod clique;
pub mod coupling;
mod dsu;
pub mod error;
pub mod graph;
pub mod model;
pub mod stats;
pub mod theory;

pub use choice::{ChoiceStream, Picks};
pub use clique::CliquePartition;
pub use coupling::{CoupledState, GrowthSample};
pub use error::{Error, Result};
pub use graph::AdjacencyGraph;
pub use model::{Checkpoint, Model, ModelState, RunOutcome, Schedule, Snapshot, Version};
pub use stats::DegreeHistogram;
