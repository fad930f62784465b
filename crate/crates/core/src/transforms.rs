//! Coloring-to-coloring procedures: palette compression for regular graphs
//! and pendant attachment turning any proper coloring into an interval
//! coloring of an augmented graph.

use std::collections::BTreeSet;

use crate::coloring::{spectrum, verify, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Request to shrink the palette of a proper coloring of a regular graph
/// while preserving every vertex deficiency.
///
/// `focus` is the set of vertices allowed to be deficient; every vertex
/// outside it must have an interval spectrum in `base`. The legal targets
/// are `span(focus spectra) ..= max color of base`.
#[derive(Debug, Clone)]
pub struct CompressionRequest<'a> {
    pub graph: &'a Graph,
    pub base: &'a EdgeColoring,
    pub focus: &'a BTreeSet<usize>,
    pub target: u32,
}

/// A graph extended with pendant leaves so that a formerly deficient
/// coloring becomes an interval coloring.
#[derive(Debug, Clone)]
pub struct AugmentedInstance {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    /// Number of pendant edges added; equals the total deficiency of the
    /// source coloring.
    pub added_edges: usize,
}

/// Shrinks the palette of `req.base` to exactly `req.target` colors while
/// preserving the per-vertex deficiency vector.
///
/// Colors above the focus window drop by the regular degree; if that is
/// not enough, colors below it rise by the regular degree. A final uniform
/// translation brings the minimum used color to 1. Properness, the
/// deficiency vector and palette surjectivity are all re-checked; any
/// failure aborts with an error rather than emitting an uncertified
/// coloring.
pub fn compress_palette(req: &CompressionRequest) -> Result<EdgeColoring> {
    let g = req.graph;
    let base = req.base;
    let invalid = |what: String| Err(Error::InvalidCompression(what));

    let degree = match g.structural_flags().regular_degree {
        Some(r) if r > 0 => r as u32,
        _ => return invalid("graph must be regular with positive degree".into()),
    };
    let base_report = verify(g, base)?;
    if !base_report.proper {
        return invalid("base coloring is not proper".into());
    }
    if req.focus.is_empty() {
        return invalid("focus set is empty".into());
    }
    for &v in req.focus {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.vertex_count(),
            });
        }
    }
    for (v, &d) in base_report.per_vertex_def.iter().enumerate() {
        if d > 0 && !req.focus.contains(&v) {
            return invalid(format!("vertex {v} is deficient but outside the focus set"));
        }
    }

    let t0 = base.max_color();
    let mut focus_lo = u32::MAX;
    let mut focus_hi = 0u32;
    for &v in req.focus {
        let s = spectrum(g, base, v)?;
        match (s.min(), s.max()) {
            (Some(lo), Some(hi)) => {
                focus_lo = focus_lo.min(lo);
                focus_hi = focus_hi.max(hi);
            }
            _ => return invalid(format!("focus vertex {v} has no incident edges")),
        }
    }
    let span = focus_hi - focus_lo + 1;
    if req.target < span || req.target > t0 {
        return invalid(format!(
            "target {} outside the legal range [{span}, {t0}]",
            req.target
        ));
    }

    let slack_above = t0 - focus_hi;
    let surplus = t0 - req.target;
    let mut colors: Vec<i64> = base.colors().iter().map(|&c| c as i64).collect();
    if surplus <= slack_above {
        for c in colors.iter_mut() {
            if (req.target as i64 + 1..=t0 as i64).contains(c) {
                *c -= degree as i64;
            }
        }
    } else {
        let rise_upto = (surplus - slack_above) as i64;
        for c in colors.iter_mut() {
            if (focus_hi as i64 + 1..=t0 as i64).contains(c) {
                *c -= degree as i64;
            } else if (1..=rise_upto).contains(c) {
                *c += degree as i64;
            }
        }
    }
    let min_used = *colors.iter().min().expect("focus is nonempty");
    if min_used < 1 {
        return Err(Error::InvalidCompression(
            "shift produced a nonpositive color".into(),
        ));
    }
    let shifted: Vec<u32> = colors.iter().map(|&c| (c - min_used + 1) as u32).collect();
    let result = EdgeColoring::new(shifted)?;

    let report = verify(g, &result)?;
    if !report.proper {
        return Err(Error::InvalidCompression(
            "shift violated properness".into(),
        ));
    }
    if report.max_color != req.target || !report.surjective_palette {
        return Err(Error::InvalidCompression(format!(
            "result palette is not exactly [1, {}]",
            req.target
        )));
    }
    if report.per_vertex_def != base_report.per_vertex_def {
        return Err(Error::InvalidCompression(
            "per-vertex deficiencies changed".into(),
        ));
    }
    Ok(result)
}

/// Attaches `def(v)` pendant leaves at every deficient vertex, coloring
/// each new edge with a distinct missing color from that vertex's spectrum
/// gap. The result is an interval coloring of the augmented graph with the
/// same maximum color.
///
/// Leaves are appended after the original vertices, in vertex order and
/// then gap-color order, so the output is canonical.
pub fn attach_pendants(g: &Graph, c: &EdgeColoring) -> Result<AugmentedInstance> {
    let report = verify(g, c)?;
    if !report.proper {
        return Err(Error::ImproperColoring(
            "pendant attachment needs a proper coloring".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut colors: Vec<u32> = c.colors().to_vec();
    let mut next = g.vertex_count();
    for v in 0..g.vertex_count() {
        if report.per_vertex_def[v] == 0 {
            continue;
        }
        let s = spectrum(g, c, v)?;
        let (lo, hi) = (s.min().unwrap(), s.max().unwrap());
        let present: BTreeSet<u32> = s.colors().iter().copied().collect();
        for gap in (lo..=hi).filter(|c| !present.contains(c)) {
            edges.push((v, next));
            colors.push(gap);
            next += 1;
        }
    }
    let added_edges = next - g.vertex_count();
    let graph = Graph::new(next, edges)?.with_labels(g.labels().clone())?;
    let coloring = EdgeColoring::new(colors)?;

    let out = verify(&graph, &coloring)?;
    if !out.proper || out.total_def != 0 || out.max_color != report.max_color {
        return Err(Error::SelfCheck(
            "pendant attachment did not produce an interval coloring".into(),
        ));
    }
    if added_edges as u32 != report.total_def {
        return Err(Error::SelfCheck(
            "pendant count does not match the source deficiency".into(),
        ));
    }
    Ok(AugmentedInstance {
        graph,
        coloring,
        added_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{composed_odd, interval_complete_bipartite, near_complete};

    fn focus(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn compress_identity_when_target_is_t0() {
        let inst = composed_odd(3).unwrap();
        let f = focus(&[0]);
        let req = CompressionRequest {
            graph: &inst.graph,
            base: &inst.coloring,
            focus: &f,
            target: 10,
        };
        let out = compress_palette(&req).unwrap();
        assert_eq!(out.colors(), inst.coloring.colors());
    }

    #[test]
    fn compress_composed_k7_to_nine_colors() {
        let inst = composed_odd(3).unwrap();
        let f = focus(&[0]);
        let req = CompressionRequest {
            graph: &inst.graph,
            base: &inst.coloring,
            focus: &f,
            target: 9,
        };
        let out = compress_palette(&req).unwrap();
        let r = verify(&inst.graph, &out).unwrap();
        assert!(r.proper && r.surjective_palette);
        assert_eq!(r.max_color, 9);
        assert_eq!(r.per_vertex_def[0], 3);
        assert_eq!(r.total_def, 3);
    }

    #[test]
    fn compress_k22_to_two_colors() {
        // Interval 3-coloring (1,2,2,3) of K_{2,2}; the vertex u_2 has
        // spectrum [2,3]; compressing to 2 colors lifts color 1 by the
        // degree and translates down.
        let g = Graph::complete_bipartite(2, 2);
        let base = EdgeColoring::new(vec![1, 2, 2, 3]).unwrap();
        let f = focus(&[1]);
        let req = CompressionRequest {
            graph: &g,
            base: &base,
            focus: &f,
            target: 2,
        };
        let out = compress_palette(&req).unwrap();
        let r = verify(&g, &out).unwrap();
        assert!(r.proper && r.surjective_palette);
        assert_eq!(r.max_color, 2);
        assert_eq!(r.total_def, 0);
        assert_eq!(out.colors(), &[2, 1, 1, 2]);
    }

    #[test]
    fn compress_keeps_focus_spectra_up_to_translation() {
        let inst = composed_odd(3).unwrap();
        let f = focus(&[0]);
        let before = spectrum(&inst.graph, &inst.coloring, 0).unwrap();
        for target in 9..=10u32 {
            let req = CompressionRequest {
                graph: &inst.graph,
                base: &inst.coloring,
                focus: &f,
                target,
            };
            let out = compress_palette(&req).unwrap();
            let after = spectrum(&inst.graph, &out, 0).unwrap();
            assert_eq!(after.len(), before.len());
            let offset = before.min().unwrap() - after.min().unwrap();
            let translated: Vec<u32> = after.colors().iter().map(|c| c + offset).collect();
            assert_eq!(translated, before.colors(), "target {target}");
        }
    }

    #[test]
    fn compress_realizes_every_legal_target_on_k4_and_k33() {
        // On an interval-colored regular graph with a singleton focus the
        // procedure reaches every palette size down to the degree.
        let cases: Vec<(Graph, EdgeColoring)> = vec![
            {
                let inst = crate::constructions::complete_even_interval(2).unwrap();
                (inst.graph, inst.coloring)
            },
            {
                let inst = interval_complete_bipartite(3, 3).unwrap();
                (inst.graph, inst.coloring)
            },
        ];
        for (g, base) in cases {
            let delta = g.max_degree() as u32;
            let t0 = base.max_color();
            for d in 0..g.vertex_count() {
                let f = focus(&[d]);
                for target in delta..=t0 {
                    let req = CompressionRequest {
                        graph: &g,
                        base: &base,
                        focus: &f,
                        target,
                    };
                    let out = compress_palette(&req).unwrap();
                    let r = verify(&g, &out).unwrap();
                    assert!(r.proper && r.surjective_palette && r.total_def == 0);
                    assert_eq!(r.max_color, target);
                }
            }
        }
    }

    #[test]
    fn compress_rejects_bad_requests() {
        let g = Graph::path(4);
        let c = EdgeColoring::new(vec![1, 2, 1]).unwrap();
        let f = focus(&[0]);
        let req = CompressionRequest {
            graph: &g,
            base: &c,
            focus: &f,
            target: 2,
        };
        assert!(matches!(
            compress_palette(&req),
            Err(Error::InvalidCompression(_))
        ));

        let inst = composed_odd(2).unwrap();
        let f = focus(&[1]); // deficiency sits at 0, not 1
        let req = CompressionRequest {
            graph: &inst.graph,
            base: &inst.coloring,
            focus: &f,
            target: 6,
        };
        assert!(matches!(
            compress_palette(&req),
            Err(Error::InvalidCompression(_))
        ));

        let f = focus(&[0]);
        let req = CompressionRequest {
            graph: &inst.graph,
            base: &inst.coloring,
            focus: &f,
            target: 5, // below the focus span 3n = 6
        };
        assert!(matches!(
            compress_palette(&req),
            Err(Error::InvalidCompression(_))
        ));
    }

    #[test]
    fn pendants_on_interval_coloring_change_nothing() {
        let inst = interval_complete_bipartite(2, 3).unwrap();
        let out = attach_pendants(&inst.graph, &inst.coloring).unwrap();
        assert_eq!(out.added_edges, 0);
        assert_eq!(out.graph.vertex_count(), inst.graph.vertex_count());
        assert_eq!(out.coloring.colors(), inst.coloring.colors());
    }

    #[test]
    fn pendants_on_triangle() {
        let g = Graph::complete(3);
        let c = EdgeColoring::new(vec![1, 2, 3]).unwrap();
        let out = attach_pendants(&g, &c).unwrap();
        assert_eq!(out.added_edges, 1);
        assert_eq!(out.graph.vertex_count(), 4);
        // The vertex with spectrum {1,3} gets a pendant colored 2.
        assert_eq!(out.coloring.colors(), &[1, 2, 3, 2]);
        assert_eq!(verify(&out.graph, &out.coloring).unwrap().total_def, 0);
    }

    #[test]
    fn pendants_on_the_near_complete_example() {
        let inst = near_complete(3).unwrap();
        let out = attach_pendants(&inst.graph, &inst.coloring).unwrap();
        assert_eq!(out.added_edges, 2);
        assert_eq!(out.graph.vertex_count(), 9);
        let m = inst.graph.edge_count();
        // Both pendants hang at v_0 and carry the gap colors 4 and 5.
        assert_eq!(out.graph.edges()[m], (0, 7));
        assert_eq!(out.graph.edges()[m + 1], (0, 8));
        assert_eq!(&out.coloring.colors()[m..], &[4, 5]);
        let r = verify(&out.graph, &out.coloring).unwrap();
        assert_eq!(r.total_def, 0);
        assert_eq!(r.max_color, 8);
    }

    #[test]
    fn removing_the_pendants_recovers_the_original_report() {
        let inst = near_complete(4).unwrap();
        let before = verify(&inst.graph, &inst.coloring).unwrap();
        let out = attach_pendants(&inst.graph, &inst.coloring).unwrap();

        let m = inst.graph.edge_count();
        let trimmed_edges = out.graph.edges()[..m].to_vec();
        let trimmed = Graph::new(inst.graph.vertex_count(), trimmed_edges).unwrap();
        let trimmed_colors =
            EdgeColoring::new(out.coloring.colors()[..m].to_vec()).unwrap();
        assert_eq!(trimmed.edges(), inst.graph.edges());
        assert_eq!(verify(&trimmed, &trimmed_colors).unwrap(), before);
    }

    #[test]
    fn pendants_reject_improper_input() {
        let g = Graph::complete(3);
        let c = EdgeColoring::new(vec![1, 1, 2]).unwrap();
        assert!(matches!(
            attach_pendants(&g, &c),
            Err(Error::ImproperColoring(_))
        ));
    }
}
