//! Isomorphism-free enumeration of connected graphs by edge count, grown
//! by single-edge augmentation (every connected graph arises by adding
//! either a chord or a pendant edge to a smaller connected graph).

use std::collections::BTreeSet;

pub type EdgeList = Vec<(usize, usize)>;

fn vertex_count(edges: &EdgeList) -> usize {
    edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0)
}

/// Canonical form: the lexicographically smallest edge list over all
/// relabelings that respect degree classes (vertices pre-sorted by
/// degree descending, permutations only within equal-degree blocks).
/// Isomorphic graphs map degree classes onto each other, so the
/// restricted minimum is still a complete invariant.
fn canonical(edges: &EdgeList) -> EdgeList {
    let n = vertex_count(edges);
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));

    // Blocks of equal degree in the sorted order.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degree[by_degree[i]] != degree[by_degree[start]] {
            blocks.push((start, i));
            start = i;
        }
    }

    struct Relabel<'a> {
        blocks: &'a [(usize, usize)],
        by_degree: &'a [usize],
        edges: &'a EdgeList,
        used: Vec<bool>,
        slot_of: Vec<usize>,
        best: Option<EdgeList>,
    }

    impl Relabel<'_> {
        fn block(&mut self, block: usize) {
            if block == self.blocks.len() {
                let mut mapped: EdgeList = self
                    .edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (self.slot_of[u], self.slot_of[v]);
                        if a < b {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                mapped.sort_unstable();
                if self.best.as_ref().is_none_or(|b| mapped < *b) {
                    self.best = Some(mapped);
                }
                return;
            }
            let (lo, hi) = self.blocks[block];
            self.fill(lo, lo, hi, block);
        }

        fn fill(&mut self, i: usize, lo: usize, hi: usize, block: usize) {
            if i == hi {
                self.block(block + 1);
                return;
            }
            for k in lo..hi {
                if self.used[k] {
                    continue;
                }
                self.used[k] = true;
                self.slot_of[self.by_degree[i]] = k;
                self.fill(i + 1, lo, hi, block);
                self.used[k] = false;
            }
        }
    }

    let mut relabel = Relabel {
        blocks: &blocks,
        by_degree: &by_degree,
        edges,
        used: vec![false; n],
        slot_of: vec![0; n],
        best: None,
    };
    relabel.block(0);
    relabel.best.expect("at least one labeling exists")
}

/// All connected graphs with exactly `1..=max_edges` edges, one
/// canonical representative each, grouped by edge count.
pub fn connected_graphs_by_edges(max_edges: usize) -> Vec<Vec<EdgeList>> {
    let mut levels: Vec<Vec<EdgeList>> = Vec::new();
    let mut current: BTreeSet<EdgeList> = BTreeSet::new();
    current.insert(vec![(0, 1)]);
    levels.push(current.iter().cloned().collect());
    for _ in 2..=max_edges {
        let mut next: BTreeSet<EdgeList> = BTreeSet::new();
        for g in &current {
            let n = vertex_count(g);
            let present: BTreeSet<(usize, usize)> = g.iter().copied().collect();
            for u in 0..n {
                for v in u + 1..n {
                    if !present.contains(&(u, v)) {
                        let mut h = g.clone();
                        h.push((u, v));
                        next.insert(canonical(&h));
                    }
                }
                let mut h = g.clone();
                h.push((u, n));
                next.insert(canonical(&h));
            }
        }
        levels.push(next.iter().cloned().collect());
        current = next;
    }
    levels
}
