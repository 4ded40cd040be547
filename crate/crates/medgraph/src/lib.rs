//! Medians in graphs.
//!
//! `medgraph` computes median and local-median sets of weighted profiles,
//! tests weak peaklessness and weak convexity of vertex functions, decides
//! with an exact rational LP whether every median set of a graph is connected
//! in its `p`-th power, computes the least such `p`, recognizes the classic
//! metric graph classes, and generates the graph families used as test
//! material.
//!
//! ```
//! use medgraph::generators::cycle;
//! use medgraph::lp::compute_p;
//!
//! let c7 = cycle(7).unwrap();
//! assert_eq!(compute_p(&c7, false).p, 3);
//! ```

pub mod classes;
pub mod enumerate;
mod error;
pub mod function;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lp;
pub mod rational;
pub mod suites;

pub use error::{Error, Result};
pub use function::{Profile, VertexFunction};
pub use graph::{Graph, MetricTriangle, VertexSet};
pub use rational::Q;
