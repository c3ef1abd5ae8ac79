//! Upward planar straight-line embeddings (UPSEs) of oriented paths,
//! directed caterpillars and directed trees on planar point sets.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: exact rational points, orientation and crossing predicates,
//!   point-set classification and seeded generators.
//! - [`digraph`]: directed graphs, oriented paths with their section
//!   decomposition, and directed caterpillars.
//! - [`verify`]: the ground-truth UPSE checker.
//! - [`enumerate`]: pruned backtracking that enumerates, counts and decides UPSEs.
//! - [`construct`]: constructive embedders (one-sided convex sets, three-section
//!   paths, caterpillars on large point sets).
//! - [`reduction`]: the 3-Partition reduction generator with its certificate.
//! - [`io`], [`svg`], [`cli`]: interchange formats, figures and the command line.

pub mod cli;
pub mod construct;
pub mod digraph;
pub mod enumerate;
pub mod geometry;
pub mod io;
pub mod reduction;
pub mod svg;
pub mod verify;

pub use construct::{
    embed_caterpillar, embed_caterpillar_monotone, embed_path_one_sided, embed_three_section, ConstructError,
};
pub use digraph::{Caterpillar, Digraph, GraphError, OrientedPath, SectionDecomposition};
pub use enumerate::{count_upse, decide_fixed_vertex, enumerate_upse, Enumerator};
pub use geometry::{GeometryError, Orientation, Point, PointSet};
pub use reduction::{ReductionInstance, ThreePartitionInstance};
pub use verify::{is_upse, Embedding};
