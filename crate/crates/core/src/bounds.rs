//! Closed-form lower bounds on the deficiency and on the smallest
//! deficiency-optimal palette, and upper bounds on the largest one,
//! assembled into one report with applicability flags.
//!
//! Every bound is attached to the hypothesis that makes it valid (odd
//! order, regularity, no perfect matching, triangle-freeness, declared
//! planarity, connectivity) and is reported only when that hypothesis
//! holds.

use crate::error::Result;
use crate::graph::{Graph, StructuralFlags};
use crate::matching::has_perfect_matching;

/// Inputs a [`BoundsReport`] was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsInputs {
    pub def_value: u32,
    pub flags: StructuralFlags,
    pub planar_declared: bool,
    pub connected: bool,
}

/// All applicable bounds for one graph and one deficiency value.
///
/// `min_palette_*` bounds constrain the smallest palette size of a
/// deficiency-optimal proper coloring, `max_palette_*` the largest. The
/// path and diameter bounds are reported independently; neither is assumed
/// to dominate the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    /// Density lower bound on the deficiency for odd-order graphs.
    pub def_lower_odd: Option<u32>,
    /// `ceil(r/2)` for odd-order `r`-regular graphs.
    pub def_lower_regular: Option<u32>,
    /// `2*min_degree - def` when the graph has no perfect matching.
    pub min_palette_lower: Option<u32>,
    /// `2|V| - 4 + def` for graphs with at least three vertices.
    pub max_palette_upper_general: Option<u32>,
    /// `|V| + def - 1` for triangle-free (in particular bipartite) graphs.
    pub max_palette_upper_triangle_free: Option<u32>,
    /// `floor(11(|V| + def)/6)` when the caller declares the graph planar.
    pub max_palette_upper_planar: Option<u32>,
    /// `1 + def + max over shortest paths of sum (deg - 1)`, connected only.
    pub max_palette_upper_path: Option<u32>,
    /// `1 + def + (diam + 1)(max_degree - 1)`, connected only.
    pub max_palette_upper_diameter: Option<u32>,
    pub inputs: BoundsInputs,
}

/// Deficiency lower bound for odd-order graphs:
/// `max(0, ceil((2|E| - (|V|-1) * max_degree) / 2))`. Absent for even order.
pub fn def_lower_bound_odd(g: &Graph) -> Option<u32> {
    let n = g.vertex_count();
    if n.is_multiple_of(2) {
        return None;
    }
    let raw = 2 * g.edge_count() as i64 - (n as i64 - 1) * g.max_degree() as i64;
    // The right side can be a half-integer; the deficiency is an integer,
    // so the ceiling is the tightest valid bound.
    Some(raw.div_euclid(2).max(0) as u32 + if raw > 0 && raw % 2 != 0 { 1 } else { 0 })
}

/// Deficiency lower bound `ceil(r/2)` for odd-order `r`-regular graphs.
pub fn def_lower_bound_regular(g: &Graph) -> Option<u32> {
    if g.vertex_count().is_multiple_of(2) {
        return None;
    }
    let r = g.structural_flags().regular_degree?;
    Some(r.div_ceil(2) as u32)
}

/// Largest available deficiency lower bound together with its source.
pub fn best_def_lower_bound(g: &Graph) -> (u32, &'static str) {
    let mut best = (0, "deficiency is nonnegative");
    if let Some(b) = def_lower_bound_odd(g) {
        if b > best.0 {
            best = (b, "odd-order density bound");
        }
    }
    if let Some(b) = def_lower_bound_regular(g) {
        if b > best.0 {
            best = (b, "odd-order regular bound");
        }
    }
    best
}

/// Lower bound `2*min_degree - def` on the smallest deficiency-optimal
/// palette, valid when the graph has no perfect matching; absent otherwise.
/// `def_value` must be the exact deficiency (the caller's responsibility).
pub fn min_palette_lower_bound(g: &Graph, def_value: u32) -> Option<u32> {
    if has_perfect_matching(g) {
        return None;
    }
    let raw = 2 * g.min_degree() as i64 - def_value as i64;
    Some(raw.max(0) as u32)
}

/// Assembles every applicable bound for `g` at deficiency `def_value`.
///
/// Planarity is a caller-supplied declaration; no planarity test is run.
/// The path and diameter bounds are filled only for connected graphs.
pub fn bounds_report(g: &Graph, def_value: u32, planar_declared: bool) -> Result<BoundsReport> {
    let n = g.vertex_count() as u32;
    let flags = g.structural_flags();
    let connected = g.is_connected();
    let def = def_value;

    let max_palette_upper_path = if connected {
        Some(1 + def + g.max_shortest_path_weight()? as u32)
    } else {
        None
    };
    let max_palette_upper_diameter = if connected {
        let delta = g.max_degree() as u32;
        Some(1 + def + (g.diameter()? as u32 + 1) * delta.saturating_sub(1))
    } else {
        None
    };

    Ok(BoundsReport {
        def_lower_odd: def_lower_bound_odd(g),
        def_lower_regular: def_lower_bound_regular(g),
        min_palette_lower: min_palette_lower_bound(g, def),
        max_palette_upper_general: (n >= 3).then(|| 2 * n - 4 + def),
        max_palette_upper_triangle_free: (n >= 1 && (flags.triangle_free || flags.bipartite))
            .then(|| n + def - 1),
        max_palette_upper_planar: planar_declared.then(|| 11 * (n + def) / 6),
        max_palette_upper_path,
        max_palette_upper_diameter,
        inputs: BoundsInputs {
            def_value,
            flags,
            planar_declared,
            connected,
        },
    })
}
