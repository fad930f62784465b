//! Immutable simple graphs with a fixed edge order.
//!
//! Vertices are the integers `0..n`. Edges are unordered pairs stored as
//! `(u, v)` with `u < v`; the position of a pair in the edge list is the
//! edge index that every parallel structure (colorings, reports) refers to.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// The edge list order is fixed at construction and never changes, so an
/// instance can be shared freely between threads and round-trips through
/// files bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<usize, String>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// Exact structural facts used to gate bound applicability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralFlags {
    pub triangle_free: bool,
    pub bipartite: bool,
    /// `Some(r)` iff every vertex has degree exactly `r` (absent for the
    /// empty vertex set).
    pub regular_degree: Option<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Endpoint order within a pair is normalized to `u < v`; loops,
    /// duplicate pairs and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = std::collections::BTreeSet::new();
        for (index, (a, b)) in edges.into_iter().enumerate() {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge { index, vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge { index, u, v });
            }
            normalized.push((u, v));
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        Ok(Graph {
            n,
            edges: normalized,
            labels: BTreeMap::new(),
            adj,
        })
    }

    /// Attaches display labels to vertices. Labels have no structural role.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        for &v in labels.keys() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// Neighbors of `v` as `(neighbor, edge index)`, in edge-list order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// The same graph with one edge removed; vertex set and the order of
    /// the remaining edges are unchanged.
    pub fn without_edge(&self, edge: usize) -> Result<Self> {
        if edge >= self.edges.len() {
            return Err(Error::EdgeIndexOutOfRange {
                index: edge,
                edges: self.edges.len(),
            });
        }
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Graph::new(self.n, edges).and_then(|g| g.with_labels(self.labels.clone()))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let dist = self.bfs_distances(0);
        dist.iter().all(Option::is_some)
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Maximum over all vertex pairs of the shortest-path length.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
        }
        Ok(best)
    }

    /// Maximum over all shortest paths `P` of `sum over v in P of (deg(v) - 1)`.
    ///
    /// For each source the breadth-first tight-edge DAG (edges between
    /// consecutive distance levels) contains exactly the shortest paths from
    /// that source, so a longest vertex-weighted path in it is found by
    /// dynamic programming over the levels.
    pub fn max_shortest_path_weight(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::Disconnected);
        }
        let weight: Vec<i64> = (0..self.n).map(|v| self.degree(v) as i64 - 1).collect();
        let mut best: i64 = 0;
        for s in 0..self.n {
            let dist = self.bfs_distances(s);
            if dist.iter().any(Option::is_none) {
                return Err(Error::Disconnected);
            }
            let dist: Vec<usize> = dist.into_iter().map(Option::unwrap).collect();
            let mut order: Vec<usize> = (0..self.n).collect();
            order.sort_by_key(|&v| dist[v]);
            let mut acc = vec![i64::MIN; self.n];
            acc[s] = weight[s];
            for &v in &order {
                if acc[v] == i64::MIN {
                    continue;
                }
                for &(w, _) in &self.adj[v] {
                    if dist[w] == dist[v] + 1 {
                        acc[w] = acc[w].max(acc[v] + weight[w]);
                    }
                }
                best = best.max(acc[v]);
            }
        }
        Ok(best.max(0) as usize)
    }

    /// Triangle-freeness, bipartiteness and the regular degree, all exact.
    pub fn structural_flags(&self) -> StructuralFlags {
        StructuralFlags {
            triangle_free: self.is_triangle_free(),
            bipartite: self.is_bipartite(),
            regular_degree: self.regular_degree(),
        }
    }

    fn is_triangle_free(&self) -> bool {
        let mut mark = vec![false; self.n];
        for &(u, v) in &self.edges {
            for &(w, _) in &self.adj[u] {
                mark[w] = true;
            }
            let triangle = self.adj[v].iter().any(|&(w, _)| mark[w]);
            for &(w, _) in &self.adj[u] {
                mark[w] = false;
            }
            if triangle {
                return false;
            }
        }
        true
    }

    fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::new();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    /// Complete graph `K_n`, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph is valid")
    }

    /// Cycle `C_n` (`n >= 3`), edges `(0,1), (1,2), ..., (n-1,0)`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, edges).expect("cycle is valid")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, edges).expect("path is valid")
    }

    /// Complete bipartite graph `K_{m,n}`; left part `0..m`, right part
    /// `m..m+n`, edges grouped by left vertex.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut edges = Vec::with_capacity(m * n);
        for u in 0..m {
            for v in 0..n {
                edges.push((u, m + v));
            }
        }
        Graph::new(m + n, edges).expect("complete bipartite graph is valid")
    }
}
