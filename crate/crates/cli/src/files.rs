//! Graph and coloring file formats.
//!
//! Both formats are single-object JSON documents written in a canonical
//! form (compact separators, fields in declaration order, labels sorted by
//! key, trailing newline), so re-serializing a parsed file is
//! byte-identical.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use defcolor::{EdgeColoring, Graph};

/// `{"n": 7, "edges": [[0,1],[0,2],...], "labels": {"0": "v0"}}`
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<BTreeMap<String, String>>,
}

/// `{"colors": [1,7,2,...]}`, parallel to the graph file's edge order.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub colors: Vec<u32>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: if g.labels().is_empty() {
                None
            } else {
                Some(
                    g.labels()
                        .iter()
                        .map(|(&v, name)| (v.to_string(), name.clone()))
                        .collect(),
                )
            },
        }
    }

    /// Validates and converts to a [`Graph`]. Stricter than the library
    /// constructor: endpoint pairs must already satisfy `u < v` so that
    /// round-trips are byte-stable.
    pub fn into_graph(self) -> Result<Graph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (index, [u, v]) in self.edges.iter().enumerate() {
            if u >= v {
                bail!("edges[{index}]: pair [{u},{v}] must be ordered with u < v and no loops");
            }
            edges.push((*u, *v));
        }
        let mut graph = Graph::new(self.n, edges).context("invalid edge list")?;
        if let Some(labels) = self.labels {
            let mut parsed = BTreeMap::new();
            for (key, name) in labels {
                let v: usize = key
                    .parse()
                    .with_context(|| format!("labels: key {key:?} is not a vertex index"))?;
                parsed.insert(v, name);
            }
            graph = graph.with_labels(parsed).context("invalid label map")?;
        }
        Ok(graph)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    let file: GraphFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse graph file {}", path.display()))?;
    file.into_graph()
        .with_context(|| format!("invalid graph file {}", path.display()))
}

pub fn read_coloring(path: &Path) -> Result<EdgeColoring> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read coloring file {}", path.display()))?;
    let file: ColoringFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse coloring file {}", path.display()))?;
    EdgeColoring::new(file.colors)
        .map_err(|e| anyhow::anyhow!("invalid coloring file {}: {e}", path.display()))
}

pub fn graph_bytes(g: &Graph) -> String {
    let mut s = serde_json::to_string(&GraphFile::from_graph(g)).expect("graph serializes");
    s.push('\n');
    s
}

pub fn coloring_bytes(c: &EdgeColoring) -> String {
    let file = ColoringFile {
        colors: c.colors().to_vec(),
    };
    let mut s = serde_json::to_string(&file).expect("coloring serializes");
    s.push('\n');
    s
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, graph_bytes(g))
        .with_context(|| format!("cannot write graph file {}", path.display()))
}

pub fn write_coloring(path: &Path, c: &EdgeColoring) -> Result<()> {
    std::fs::write(path, coloring_bytes(c))
        .with_context(|| format!("cannot write coloring file {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use defcolor::constructions::near_complete;

    #[test]
    fn round_trip_is_byte_identical() {
        let inst = near_complete(3).unwrap();
        let bytes = graph_bytes(&inst.graph);
        let parsed: GraphFile = serde_json::from_str(&bytes).unwrap();
        let graph = parsed.into_graph().unwrap();
        assert_eq!(graph, inst.graph);
        assert_eq!(graph_bytes(&graph), bytes);

        let cbytes = coloring_bytes(&inst.coloring);
        let parsed: ColoringFile = serde_json::from_str(&cbytes).unwrap();
        let coloring = EdgeColoring::new(parsed.colors).unwrap();
        assert_eq!(coloring, inst.coloring);
        assert_eq!(coloring_bytes(&coloring), cbytes);
    }

    #[test]
    fn rejects_unordered_pairs_and_duplicates() {
        let bad: GraphFile = serde_json::from_str(r#"{"n":3,"edges":[[1,0]]}"#).unwrap();
        assert!(bad.into_graph().is_err());
        let bad: GraphFile = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[0,1]]}"#).unwrap();
        assert!(bad.into_graph().is_err());
        let bad: GraphFile = serde_json::from_str(r#"{"n":2,"edges":[[0,2]]}"#).unwrap();
        assert!(bad.into_graph().is_err());
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(serde_json::from_str::<GraphFile>(r#"{"n":1,"edges":[],"extra":1}"#).is_err());
    }
}
