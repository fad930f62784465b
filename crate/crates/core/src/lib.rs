//! Proper edge-colorings of graphs measured by interval deficiency.
//!
//! A proper edge-coloring assigns positive integer colors to edges so that
//! edges sharing a vertex differ; the set of colors at a vertex is its
//! spectrum, and the deficiency counts the integers missing between the
//! spectrum's minimum and maximum. Summed over the vertices and minimized
//! over all proper colorings this yields the deficiency of the graph: its
//! distance from having an interval (consecutive) coloring.
//!
//! The crate provides:
//!
//! * [`graph`] — immutable graphs, spectra, deficiency reports, matching,
//!   diameter and shortest-path weight queries;
//! * [`constructions`] — verified colorings of named families (balanced
//!   bipartite, near-complete, composed odd-order complete graphs, ...);
//! * [`transforms`] — palette compression for regular graphs and pendant
//!   attachment to interval-complete a deficient coloring;
//! * [`bounds`] — closed-form lower/upper bounds with applicability flags;
//! * [`solver`] — exact branch-and-bound deficiency with certificates,
//!   palette-range computation, a brute-force oracle and
//!   deficiency-criticality checks.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod matching;
pub mod solver;
pub mod transforms;

pub use coloring::{spectrum, verify, DeficiencyReport, EdgeColoring, Spectrum};
pub use error::{Error, Result};
pub use graph::{Graph, StructuralFlags};
pub use matching::has_perfect_matching;
