//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction, plus an exhaustive fallback used to cross-check it on small
//! inputs.

use std::collections::VecDeque;

use crate::graph::Graph;

/// True iff some set of `n/2` pairwise disjoint edges covers every vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    if !n.is_multiple_of(2) {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mate = maximum_matching(g);
    mate.iter().all(Option::is_some)
}

/// Maximum matching as a mate table (`mate[v]` is the vertex matched to `v`).
pub(crate) fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for &(u, v) in g.edges() {
        if mate[u].is_none() && mate[v].is_none() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }
    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        if let Some(end) = find_augmenting_path(g, &mate, root) {
            augment(&mut mate, &end.parent, end.exposed);
        }
    }
    mate
}

struct TreeEnd {
    parent: Vec<Option<usize>>,
    exposed: usize,
}

/// BFS for an augmenting path from `root`, contracting blossoms in place by
/// collapsing their vertices onto a common base.
fn find_augmenting_path(g: &Graph, mate: &[Option<usize>], root: usize) -> Option<TreeEnd> {
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut queue = VecDeque::new();
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for &(to, _) in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            let odd_cycle = to == root || mate[to].is_some_and(|m| parent[m].is_some());
            if odd_cycle {
                let cur_base = lowest_common_base(mate, &parent, &base, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, v, cur_base, to);
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, to, cur_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !in_tree[i] {
                            in_tree[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        return Some(TreeEnd {
                            parent,
                            exposed: to,
                        });
                    }
                    Some(m) => {
                        if !in_tree[m] {
                            in_tree[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    None
}

fn lowest_common_base(
    mate: &[Option<usize>],
    parent: &[Option<usize>],
    base: &[usize],
    a: usize,
    b: usize,
) -> usize {
    let mut seen = vec![false; base.len()];
    let mut x = a;
    loop {
        x = base[x];
        seen[x] = true;
        match mate[x] {
            None => break,
            Some(m) => match parent[m] {
                None => break,
                Some(p) => x = p,
            },
        }
    }
    let mut y = b;
    loop {
        y = base[y];
        if seen[y] {
            return y;
        }
        y = parent[mate[y].expect("interior tree vertex is matched")]
            .expect("interior tree vertex has a parent");
    }
}

fn mark_blossom_path(
    mate: &[Option<usize>],
    parent: &mut [Option<usize>],
    base: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        let m = mate[v].expect("blossom vertex below the base is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("blossom vertex has a tree parent");
    }
}

fn augment(mate: &mut [Option<usize>], parent: &[Option<usize>], mut v: usize) {
    let mut cur = Some(v);
    while let Some(u) = cur {
        v = u;
        let pv = parent[v].expect("augmenting path reaches the root");
        let next = mate[pv];
        mate[v] = Some(pv);
        mate[pv] = Some(v);
        cur = next;
    }
}

/// Exhaustive perfect-matching test for cross-checking; exponential, only
/// meant for at most ~10 vertices.
#[cfg(test)]
pub(crate) fn has_perfect_matching_exhaustive(g: &Graph) -> bool {
    let n = g.vertex_count();
    if !n.is_multiple_of(2) {
        return false;
    }
    let mut used = vec![false; n];
    fn rec(g: &Graph, used: &mut [bool]) -> bool {
        let u = match used.iter().position(|&x| !x) {
            None => return true,
            Some(u) => u,
        };
        used[u] = true;
        for &(v, _) in g.neighbors(u) {
            if !used[v] {
                used[v] = true;
                if rec(g, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        used[u] = false;
        false
    }
    rec(g, &mut used)
}
