//! Edge colorings, vertex spectra and the deficiency report.
//!
//! A coloring is a positive integer per edge, parallel to the graph's edge
//! list. Colors are 1-based everywhere, matching the file formats. Whether a
//! coloring qualifies as a proper coloring on a full palette is decided by
//! [`verify`], not by the type: transform intermediates legitimately carry
//! palette gaps.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An assignment of positive integer colors to the edges of some graph,
/// stored by edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Wraps a color vector; every entry must be at least 1.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(index) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { index });
        }
        Ok(EdgeColoring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Largest color present, 0 for an empty coloring.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Set of distinct colors present.
    pub fn palette(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    /// Every color increased by `k`. Per-vertex deficiencies are unchanged.
    pub fn shifted(&self, k: u32) -> Self {
        EdgeColoring {
            colors: self.colors.iter().map(|&c| c + k).collect(),
        }
    }

    /// Every color `c` replaced by `max_color + 1 - c`. Per-vertex
    /// deficiencies are unchanged.
    pub fn reflected(&self) -> Self {
        let top = self.max_color();
        EdgeColoring {
            colors: self.colors.iter().map(|&c| top + 1 - c).collect(),
        }
    }

    /// Renumbers the used colors monotonically onto `1..=k`, closing every
    /// globally unused color. This never increases any vertex deficiency.
    pub fn compacted(&self) -> Self {
        let palette = self.palette();
        let rank: std::collections::BTreeMap<u32, u32> = palette
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as u32 + 1))
            .collect();
        EdgeColoring {
            colors: self.colors.iter().map(|c| rank[c]).collect(),
        }
    }
}

/// The sorted set of colors on edges incident to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    colors: Vec<u32>,
}

impl Spectrum {
    pub fn from_colors(colors: impl IntoIterator<Item = u32>) -> Self {
        let set: BTreeSet<u32> = colors.into_iter().collect();
        Spectrum {
            colors: set.into_iter().collect(),
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn min(&self) -> Option<u32> {
        self.colors.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.colors.last().copied()
    }

    /// Number of integers missing between the minimum and maximum
    /// (`max - min - size + 1`); 0 for the empty spectrum.
    pub fn deficiency(&self) -> u32 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 - self.colors.len() as u32,
            _ => 0,
        }
    }

    /// True iff the set is a contiguous interval of integers (or empty).
    pub fn is_interval(&self) -> bool {
        self.deficiency() == 0
    }
}

/// Full verification verdict for a (graph, coloring) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyReport {
    /// No two edges sharing a vertex have the same color.
    pub proper: bool,
    /// The palette is exactly `{1, ..., max_color}`.
    pub surjective_palette: bool,
    pub per_vertex_def: Vec<u32>,
    /// `per_vertex_interval[v]` iff `per_vertex_def[v] == 0`.
    pub per_vertex_interval: Vec<bool>,
    pub total_def: u32,
    pub max_color: u32,
}

/// Colors on edges incident to `v`; for a proper coloring its size equals
/// the degree of `v`.
pub fn spectrum(g: &Graph, c: &EdgeColoring, v: usize) -> Result<Spectrum> {
    if c.len() != g.edge_count() {
        return Err(Error::EdgeCountMismatch {
            colors: c.len(),
            edges: g.edge_count(),
        });
    }
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(Spectrum::from_colors(
        g.neighbors(v).iter().map(|&(_, e)| c.color(e)),
    ))
}

/// Checks properness and palette surjectivity and computes every vertex
/// deficiency. Pure: identical inputs give identical reports.
pub fn verify(g: &Graph, c: &EdgeColoring) -> Result<DeficiencyReport> {
    if c.len() != g.edge_count() {
        return Err(Error::EdgeCountMismatch {
            colors: c.len(),
            edges: g.edge_count(),
        });
    }
    let n = g.vertex_count();
    let mut proper = true;
    let mut per_vertex_def = Vec::with_capacity(n);
    let mut per_vertex_interval = Vec::with_capacity(n);
    let mut total_def = 0u32;
    for v in 0..n {
        let incident: Vec<u32> = g.neighbors(v).iter().map(|&(_, e)| c.color(e)).collect();
        let spec = Spectrum::from_colors(incident.iter().copied());
        if spec.len() != incident.len() {
            proper = false;
        }
        let d = spec.deficiency();
        per_vertex_def.push(d);
        per_vertex_interval.push(d == 0);
        total_def += d;
    }
    let max_color = c.max_color();
    let surjective_palette = c.palette().len() as u32 == max_color;
    Ok(DeficiencyReport {
        proper,
        surjective_palette,
        per_vertex_def,
        per_vertex_interval,
        total_def,
        max_color,
    })
}
