//! Geometrically defined hypergraphs and exact chromatic-number verification.
//!
//! The crate provides:
//! - [`geometry`]: points, Lp/L∞ norms, congruence testing for finite point sets
//! - [`hypergraph`]: the combinatorial core (induced subhypergraphs, disjoint translates)
//! - [`chroma`]: an exact branch-and-bound coloring solver
//! - [`lift`]: the uniformity-raising construction that preserves chromatic number
//! - [`geomfam`]: congruence-closed edge families on finite point sets
//! - [`tiling`]: periodic distance-forbidding colorings of the plane and beyond
//! - [`io`]: JSON and DIMACS-style file formats

pub mod chroma;
pub mod error;
pub mod geometry;
pub mod geomfam;
pub mod hypergraph;
pub mod io;
pub mod lift;
pub mod tiling;

pub use error::{Error, Result};
pub use geometry::{NormSpec, Point};
pub use hypergraph::{Coloring, Hypergraph};

/// Default absolute tolerance on distance comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
