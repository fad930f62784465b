//! Deterministic constructors for the named coloring families.
//!
//! Every constructor builds a (graph, coloring) pair together with the
//! properties it claims (palette size, total deficiency, the vertex
//! carrying it) and re-checks the claim with [`verify`] before releasing
//! the instance. A failed self-check is a hard error, never a silent
//! downgrade.

use std::collections::BTreeMap;

use crate::coloring::{spectrum, verify, DeficiencyReport, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The coloring families this crate can construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Balanced complete bipartite graph `K_{p,p}` with the staggered
    /// interval coloring (spectra `[floor(i/2)+1, floor(i/2)+p]`).
    Kpp,
    /// `K_{m,n}` with the classic `i+j-1` interval coloring.
    CompleteBipartite,
    /// `K_{n,n}` with one subdivided edge; deficiency 1 for `n >= 2`.
    KnnSubdivided,
    /// `K_{2n+1}` minus one edge, colored with `3n-1` colors and
    /// deficiency `n-1` concentrated at the apex.
    NearComplete,
    /// `K_{2m}` with an interval `(3m-2)`-coloring whose lower spectrum
    /// endpoints are exactly `floor(i/2)+1`.
    CompleteEven,
    /// `K_{2n+1}` with a `3n`-coloring whose whole deficiency `n` sits at
    /// one apex vertex.
    ConcentratedOdd,
    /// `K_{2n+1}` colored by composing the three ingredient colorings;
    /// uses `3n + (p-1)/2` colors where `p` is the odd part of `n`.
    ComposedOdd,
    /// Complete tripartite `K_{1,m,n}` with the `(m+n+1)`-coloring whose
    /// unit deficiency sits at the apex.
    Tripartite,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kpp => "kpp",
            Family::CompleteBipartite => "complete-bipartite",
            Family::KnnSubdivided => "knn-subdivided",
            Family::NearComplete => "near-complete",
            Family::CompleteEven => "complete-even",
            Family::ConcentratedOdd => "concentrated-odd",
            Family::ComposedOdd => "composed-odd",
            Family::Tripartite => "tripartite",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Some(match name {
            "kpp" => Family::Kpp,
            "complete-bipartite" => Family::CompleteBipartite,
            "knn-subdivided" => Family::KnnSubdivided,
            "near-complete" => Family::NearComplete,
            "complete-even" => Family::CompleteEven,
            "concentrated-odd" => Family::ConcentratedOdd,
            "composed-odd" => Family::ComposedOdd,
            "tripartite" => Family::Tripartite,
            _ => return None,
        })
    }
}

/// Properties a constructor claims for its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub num_colors: u32,
    pub total_def: u32,
    /// When set, the entire deficiency sits at this vertex.
    pub def_vertex: Option<usize>,
}

/// A constructed and verified (graph, coloring) pair.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: BTreeMap<&'static str, u32>,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub claimed: Claim,
    /// Verification report the claim was checked against.
    pub report: DeficiencyReport,
    /// Exact deficiency of the underlying graph, when the construction
    /// certifies it (for most families the coloring meets a matching
    /// lower bound).
    pub graph_deficiency: Option<u32>,
    /// Set on parameter values where the family collapses to a trivial
    /// graph and the generic claim does not apply.
    pub degenerate: bool,
}

fn seal(
    family: Family,
    params: BTreeMap<&'static str, u32>,
    graph: Graph,
    coloring: EdgeColoring,
    claimed: Claim,
    graph_deficiency: Option<u32>,
    degenerate: bool,
) -> Result<FamilyInstance> {
    let report = verify(&graph, &coloring)?;
    let fail = |what: &str| {
        Err(Error::SelfCheck(format!(
            "{} with params {:?}: {}",
            family.name(),
            params,
            what
        )))
    };
    if !report.proper {
        return fail("coloring is not proper");
    }
    if !report.surjective_palette {
        return fail("palette has gaps");
    }
    if report.max_color != claimed.num_colors {
        return fail(&format!(
            "claimed {} colors, found {}",
            claimed.num_colors, report.max_color
        ));
    }
    if report.total_def != claimed.total_def {
        return fail(&format!(
            "claimed deficiency {}, found {}",
            claimed.total_def, report.total_def
        ));
    }
    if let Some(v) = claimed.def_vertex {
        for (u, &d) in report.per_vertex_def.iter().enumerate() {
            let expected = if u == v { report.total_def } else { 0 };
            if d != expected {
                return fail(&format!("deficiency not concentrated at vertex {v}"));
            }
        }
    }
    Ok(FamilyInstance {
        family,
        params,
        graph,
        coloring,
        claimed,
        report,
        graph_deficiency,
        degenerate,
    })
}

fn params1(k: &'static str, v: u32) -> BTreeMap<&'static str, u32> {
    BTreeMap::from([(k, v)])
}

fn positive(name: &'static str, value: u32) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter {
            name,
            value: 0,
            reason: "must be at least 1",
        });
    }
    Ok(())
}

fn label_range(prefix: &str, start_index: usize, first: u32, count: u32) -> Vec<(usize, String)> {
    (0..count)
        .map(|k| (start_index + k as usize, format!("{prefix}{}", first + k)))
        .collect()
}

/// Proper `k`-edge-coloring of a `k`-regular bipartite graph by repeated
/// perfect-matching extraction (the matchings exist by König's theorem).
/// Edges are `(left, right)` pairs with both sides indexed from 0;
/// deterministic vertex order makes the output reproducible.
fn color_regular_bipartite(sides: usize, edges: &[(usize, usize)]) -> Result<Vec<u32>> {
    if sides == 0 || edges.is_empty() {
        return Ok(vec![]);
    }
    if !edges.len().is_multiple_of(sides) {
        return Err(Error::SelfCheck(
            "bipartite leftover subgraph is not regular".into(),
        ));
    }
    let degree = edges.len() / sides;
    let mut deg_l = vec![0usize; sides];
    let mut deg_r = vec![0usize; sides];
    for &(l, r) in edges {
        deg_l[l] += 1;
        deg_r[r] += 1;
    }
    if deg_l.iter().chain(&deg_r).any(|&d| d != degree) {
        return Err(Error::SelfCheck(
            "bipartite leftover subgraph is not regular".into(),
        ));
    }

    let mut colors = vec![0u32; edges.len()];
    let mut alive = vec![true; edges.len()];
    for round in 1..=degree as u32 {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); sides];
        for (idx, &(l, r)) in edges.iter().enumerate() {
            if alive[idx] {
                adj[l].push((r, idx));
            }
        }
        // Kuhn's augmenting paths, left vertices in index order.
        let mut match_right: Vec<Option<(usize, usize)>> = vec![None; sides];
        fn try_augment(
            l: usize,
            adj: &[Vec<(usize, usize)>],
            seen: &mut [bool],
            match_right: &mut [Option<(usize, usize)>],
        ) -> bool {
            for &(r, idx) in &adj[l] {
                if seen[r] {
                    continue;
                }
                seen[r] = true;
                let free = match match_right[r] {
                    None => true,
                    Some((l2, _)) => try_augment(l2, adj, seen, match_right),
                };
                if free {
                    match_right[r] = Some((l, idx));
                    return true;
                }
            }
            false
        }
        for l in 0..sides {
            let mut seen = vec![false; sides];
            if !try_augment(l, &adj, &mut seen, &mut match_right) {
                return Err(Error::SelfCheck(
                    "perfect matching extraction failed in a regular bipartite graph".into(),
                ));
            }
        }
        for m in match_right.iter().flatten() {
            colors[m.1] = round;
            alive[m.1] = false;
        }
    }
    Ok(colors)
}

/// Interval coloring of `K_{p,p}` with spectra
/// `S(x_i) = S(y_i) = [floor(i/2)+1, floor(i/2)+p]` and `p + floor(p/2)`
/// colors.
///
/// Two phases: the staggered diagonals `i+j = 2k` and `i+j = 2k+p` get
/// colors `k` and `k+p`; the leftover `ceil(p/2)`-regular subgraph is
/// edge-colored by matching extraction and shifted by `floor(p/2)`.
pub fn interval_kpp(p: u32) -> Result<FamilyInstance> {
    positive("p", p)?;
    let pu = p as usize;
    let half = p / 2;
    let mut edges = Vec::with_capacity(pu * pu);
    let mut colors = Vec::with_capacity(pu * pu);
    let mut leftover = Vec::new(); // (left, right) pairs, 0-based
    let mut leftover_pos = Vec::new(); // positions in the edge list
    for i in 1..=p {
        for j in 1..=p {
            edges.push((i as usize - 1, pu + j as usize - 1));
            let s = i + j;
            if s.is_multiple_of(2) && s / 2 <= half {
                colors.push(s / 2);
            } else if s > p && (s - p).is_multiple_of(2) && (s - p) / 2 <= half {
                colors.push((s - p) / 2 + p);
            } else {
                colors.push(0);
                leftover.push((i as usize - 1, j as usize - 1));
                leftover_pos.push(edges.len() - 1);
            }
        }
    }
    let h_colors = color_regular_bipartite(pu, &leftover)?;
    for (k, &pos) in leftover_pos.iter().enumerate() {
        colors[pos] = h_colors[k] + half;
    }

    let mut labels = BTreeMap::new();
    labels.extend(label_range("x", 0, 1, p));
    labels.extend(label_range("y", pu, 1, p));
    let graph = Graph::new(2 * pu, edges)?.with_labels(labels)?;
    let coloring = EdgeColoring::new(colors)?;

    // The staggered spectra are part of the contract; enforce them exactly.
    for i in 1..=pu {
        for v in [i - 1, pu + i - 1] {
            let s = spectrum(&graph, &coloring, v)?;
            let lo = (i as u32) / 2 + 1;
            if !(s.is_interval() && s.min() == Some(lo) && s.max() == Some(lo + p - 1)) {
                return Err(Error::SelfCheck(format!(
                    "kpp p={p}: spectrum at vertex {v} is not [{lo},{}]",
                    lo + p - 1
                )));
            }
        }
    }
    seal(
        Family::Kpp,
        params1("p", p),
        graph,
        coloring,
        Claim {
            num_colors: p + half,
            total_def: 0,
            def_vertex: None,
        },
        Some(0),
        false,
    )
}

/// The classic interval `(m+n-1)`-coloring of `K_{m,n}`: edge `u_i v_j`
/// gets color `i+j-1`.
pub fn interval_complete_bipartite(m: u32, n: u32) -> Result<FamilyInstance> {
    positive("m", m)?;
    positive("n", n)?;
    let (mu, nu) = (m as usize, n as usize);
    let mut edges = Vec::with_capacity(mu * nu);
    let mut colors = Vec::with_capacity(mu * nu);
    for i in 1..=m {
        for j in 1..=n {
            edges.push((i as usize - 1, mu + j as usize - 1));
            colors.push(i + j - 1);
        }
    }
    let mut labels = BTreeMap::new();
    labels.extend(label_range("u", 0, 1, m));
    labels.extend(label_range("v", mu, 1, n));
    let graph = Graph::new(mu + nu, edges)?.with_labels(labels)?;
    let mut params = params1("m", m);
    params.insert("n", n);
    seal(
        Family::CompleteBipartite,
        params,
        graph,
        EdgeColoring::new(colors)?,
        Claim {
            num_colors: m + n - 1,
            total_def: 0,
            def_vertex: None,
        },
        Some(0),
        false,
    )
}

/// `K_{n,n}` with the edge `u_n v_n` replaced by the path `u_n - w - v_n`,
/// colored `u_i v_j -> i+j-1`, `u_n w -> 2n-1`, `w v_n -> 2n`.
///
/// For `n >= 2` this is a proper `2n`-coloring with total deficiency 1
/// (the gap sits at `v_n`, whose spectrum skips color `2n-1`). `n = 1`
/// degenerates to a path with deficiency 0.
pub fn knn_subdivided(n: u32) -> Result<FamilyInstance> {
    positive("n", n)?;
    let nu = n as usize;
    let w = 2 * nu;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if (i, j) == (n, n) {
                continue;
            }
            edges.push((i as usize - 1, nu + j as usize - 1));
            colors.push(i + j - 1);
        }
    }
    edges.push((nu - 1, w));
    colors.push(2 * n - 1);
    edges.push((2 * nu - 1, w));
    colors.push(2 * n);

    let mut labels = BTreeMap::new();
    labels.extend(label_range("u", 0, 1, n));
    labels.extend(label_range("v", nu, 1, n));
    labels.insert(w, "w".to_string());
    let graph = Graph::new(w + 1, edges)?.with_labels(labels)?;
    let degenerate = n == 1;
    let claim = if degenerate {
        Claim {
            num_colors: 2,
            total_def: 0,
            def_vertex: None,
        }
    } else {
        Claim {
            num_colors: 2 * n,
            total_def: 1,
            def_vertex: Some(2 * nu - 1),
        }
    };
    seal(
        Family::KnnSubdivided,
        params1("n", n),
        graph,
        EdgeColoring::new(colors)?,
        claim,
        Some(if degenerate { 0 } else { 1 }),
        degenerate,
    )
}

/// Color of the edge `v_i v_j` (`i < j`, `(i,j) != (1,2n)`) of
/// `K_{2n+1} - e` in the 14-case table, `n >= 2`. Cases are evaluated in
/// the listed order, first match wins; `None` means no case fired.
pub(crate) fn near_complete_table_color(n: u32, i: u32, j: u32) -> Option<u32> {
    debug_assert!(n >= 2 && i < j && j <= 2 * n && (i, j) != (1, 2 * n));
    let h = n / 2;
    let h1 = (n - 1) / 2;
    if i == 0 {
        if j == 1 {
            return Some(1);
        }
        if j == 2 {
            return Some(2 * n + 1);
        }
        if (3..=n).contains(&j) {
            return Some(j - 1);
        }
        if (n + 1..=2 * n - 2).contains(&j) {
            return Some(n + 1 + j);
        }
        if j == 2 * n - 1 {
            return Some(n);
        }
        if j == 2 * n {
            return Some(2 * n);
        }
        return None;
    }
    if (1..=h).contains(&i) && (2..=n).contains(&j) && i + j <= n + 1 {
        return Some(i + j - 1);
    }
    if (2..=n - 1).contains(&i) && (h + 2..=n).contains(&j) && i + j >= n + 2 {
        return Some(i + j + n - 2);
    }
    if (3..=n).contains(&i) && (n + 1..=2 * n - 2).contains(&j) && j - i <= n - 2 {
        return Some(n + 1 + j - i);
    }
    if (1..=n).contains(&i) && (n + 1..=2 * n).contains(&j) && j - i >= n {
        return Some(j - i + 1);
    }
    if (2..=1 + h1).contains(&i) && (n + 1..=n + h1).contains(&j) && j - i == n - 1 {
        return Some(2 * i - 1);
    }
    if (h1 + 2..=n).contains(&i) && (n + 1 + h1..=2 * n - 1).contains(&j) && j - i == n - 1 {
        return Some(i + j - 1);
    }
    if (n + 1..=n + h - 1).contains(&i) && (n + 2..=2 * n - 2).contains(&j) && i + j < 3 * n {
        return Some(i + j + 1 - 2 * n);
    }
    if (n + 1..=2 * n - 1).contains(&i) && (n + h + 1..=2 * n).contains(&j) && i + j >= 3 * n {
        return Some(i + j - n);
    }
    None
}

/// `K_{2n+1}` minus the edge `v_1 v_2n`, colored from the case table: a
/// proper `(3n-1)`-coloring with deficiency `n-1`, all of it at `v_0`.
///
/// Combined with the odd-order lower bound (which equals `n-1` on this
/// graph) the instance certifies the graph deficiency without search.
/// `n = 1` degenerates to a path and is special-cased to a 2-coloring.
pub fn near_complete(n: u32) -> Result<FamilyInstance> {
    positive("n", n)?;
    let nn = 2 * n as usize + 1;
    let labels: BTreeMap<usize, String> = (0..nn).map(|v| (v, format!("v{v}"))).collect();
    if n == 1 {
        let graph = Graph::new(3, vec![(0, 1), (0, 2)])?.with_labels(labels)?;
        return seal(
            Family::NearComplete,
            params1("n", 1),
            graph,
            EdgeColoring::new(vec![1, 2])?,
            Claim {
                num_colors: 2,
                total_def: 0,
                def_vertex: None,
            },
            Some(0),
            true,
        );
    }
    let mut edges = Vec::with_capacity(nn * (nn - 1) / 2 - 1);
    let mut colors = Vec::with_capacity(edges.capacity());
    for i in 0..nn {
        for j in i + 1..nn {
            if (i, j) == (1, 2 * n as usize) {
                continue;
            }
            edges.push((i, j));
            let c = near_complete_table_color(n, i as u32, j as u32).ok_or_else(|| {
                Error::SelfCheck(format!("near-complete n={n}: no table case for ({i},{j})"))
            })?;
            colors.push(c);
        }
    }
    let graph = Graph::new(nn, edges)?.with_labels(labels)?;
    seal(
        Family::NearComplete,
        params1("n", n),
        graph,
        EdgeColoring::new(colors)?,
        Claim {
            num_colors: 3 * n - 1,
            total_def: n - 1,
            def_vertex: Some(0),
        },
        Some(n - 1),
        false,
    )
}

/// Interval `(3m-2)`-coloring of `K_{2m}` whose lower spectrum endpoints
/// are exactly `floor(i/2)+1` for vertex `u_i`.
///
/// Derived from the near-complete table with parameter `m` restricted to
/// the vertices `v_1..v_{2m}`: the removed edge `v_1 v_{2m}` is put back
/// with color `2m` (the unique color extending both endpoint spectra to
/// intervals), all colors drop by one, and the vertices are paired off so
/// the endpoint multiset `{1,1,2,2,...,m,m}` lands in index order.
pub fn complete_even_interval(m: u32) -> Result<FamilyInstance> {
    positive("m", m)?;
    let size = 2 * m as usize;
    let labels: BTreeMap<usize, String> = (0..size).map(|v| (v, format!("u{v}"))).collect();
    if m == 1 {
        let graph = Graph::new(2, vec![(0, 1)])?.with_labels(labels)?;
        return seal(
            Family::CompleteEven,
            params1("m", 1),
            graph,
            EdgeColoring::new(vec![1])?,
            Claim {
                num_colors: 1,
                total_def: 0,
                def_vertex: None,
            },
            Some(0),
            false,
        );
    }
    // table_vertex[k] is the table vertex (1-based) playing the role of u_k.
    let mut table_vertex = vec![0u32; size];
    table_vertex[0] = 1;
    table_vertex[1] = 2;
    let mut pos = 2;
    for i in 3..=m {
        table_vertex[pos] = i;
        table_vertex[pos + 1] = m + i - 2;
        pos += 2;
    }
    table_vertex[size - 2] = 2 * m - 1;
    table_vertex[size - 1] = 2 * m;

    let mut edges = Vec::with_capacity(size * (size - 1) / 2);
    let mut colors = Vec::with_capacity(edges.capacity());
    for a in 0..size {
        for b in a + 1..size {
            edges.push((a, b));
            let (ti, tj) = {
                let (x, y) = (table_vertex[a], table_vertex[b]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            };
            let c = if (ti, tj) == (1, 2 * m) {
                2 * m
            } else {
                near_complete_table_color(m, ti, tj).ok_or_else(|| {
                    Error::SelfCheck(format!(
                        "complete-even m={m}: no table case for ({ti},{tj})"
                    ))
                })?
            };
            colors.push(c - 1);
        }
    }
    let graph = Graph::new(size, edges)?.with_labels(labels)?;
    let coloring = EdgeColoring::new(colors)?;
    for k in 0..size {
        let s = spectrum(&graph, &coloring, k)?;
        let lo = k as u32 / 2 + 1;
        if !(s.is_interval() && s.min() == Some(lo)) {
            return Err(Error::SelfCheck(format!(
                "complete-even m={m}: spectrum at u{k} does not start at {lo}"
            )));
        }
    }
    seal(
        Family::CompleteEven,
        params1("m", m),
        graph,
        coloring,
        Claim {
            num_colors: 3 * m - 2,
            total_def: 0,
            def_vertex: None,
        },
        Some(0),
        false,
    )
}

/// Proper `3n`-coloring of `K_{2n+1}` whose whole deficiency `n` sits at
/// the apex `w0`, with `S(w0) = [1,n] union [2n+1,3n]` and every other
/// spectrum an interval.
///
/// Built over [`complete_even_interval`] shifted by one: the apex joins the
/// two vertices of each lower-endpoint pair with the color just below
/// their common minimum and just above their common maximum.
pub fn concentrated_odd(n: u32) -> Result<FamilyInstance> {
    positive("n", n)?;
    let base = complete_even_interval(n)?;
    let base_color = color_matrix(&base);
    let nn = 2 * n as usize + 1;
    let mut edges = Vec::with_capacity(nn * (nn - 1) / 2);
    let mut colors = Vec::with_capacity(edges.capacity());
    for a in 0..nn {
        for b in a + 1..nn {
            edges.push((a, b));
            let c = if a == 0 {
                let k = (b - 1) as u32;
                if k.is_multiple_of(2) {
                    k / 2 + 1
                } else {
                    k / 2 + 2 * n + 1
                }
            } else {
                base_color[a - 1][b - 1] + 1
            };
            colors.push(c);
        }
    }
    let labels: BTreeMap<usize, String> = (0..nn).map(|v| (v, format!("w{v}"))).collect();
    let graph = Graph::new(nn, edges)?.with_labels(labels)?;
    let coloring = EdgeColoring::new(colors)?;
    let apex = spectrum(&graph, &coloring, 0)?;
    let expected: Vec<u32> = (1..=n).chain(2 * n + 1..=3 * n).collect();
    if apex.colors() != expected {
        return Err(Error::SelfCheck(format!(
            "concentrated-odd n={n}: apex spectrum is {:?}",
            apex.colors()
        )));
    }
    seal(
        Family::ConcentratedOdd,
        params1("n", n),
        graph,
        coloring,
        Claim {
            num_colors: 3 * n,
            total_def: n,
            def_vertex: Some(0),
        },
        Some(n),
        false,
    )
}

fn color_matrix(inst: &FamilyInstance) -> Vec<Vec<u32>> {
    let n = inst.graph.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for (idx, &(u, v)) in inst.graph.edges().iter().enumerate() {
        let c = inst.coloring.color(idx);
        m[u][v] = c;
        m[v][u] = c;
    }
    m
}

/// Splits `n` into `(odd_part, exponent)` with `n = odd_part * 2^exponent`.
fn odd_factor(n: u32) -> (u32, u32) {
    let q = n.trailing_zeros();
    (n >> q, q)
}

/// Proper `(3n + (p-1)/2)`-coloring of `K_{2n+1}` with deficiency `n`
/// concentrated at `v_0`, where `p` is the odd part of `n`.
///
/// The vertices split into `2^(q+1)` groups of `p` around the shared apex.
/// Edges inside a group copy the `K_{p+1}` interval coloring, edges across
/// groups copy the `K_{p,p}` coloring, and both are offset by `p` times the
/// color the group pair receives in the concentrated coloring of
/// `K_{2^(q+1)+1}`.
pub fn composed_odd(n: u32) -> Result<FamilyInstance> {
    positive("n", n)?;
    let (p, q) = odd_factor(n);
    debug_assert_eq!(p << (q + 1), 2 * n);
    let alpha = complete_even_interval(p.div_ceil(2))?;
    let beta = interval_kpp(p)?;
    let gamma = concentrated_odd(1 << q)?;
    let a_col = color_matrix(&alpha);
    let g_col = color_matrix(&gamma);
    let b_col = color_matrix(&beta);
    let pu = p as usize;
    // beta vertex layout: x_i at i-1, y_j at p+j-1 (1-based i, j).
    let beta_color = |i: usize, j: usize| b_col[i - 1][pu + j - 1];

    let nn = 2 * n as usize + 1;
    // v_0 is index 0; v_i^j is (j-1)p + i for i in 1..=p, j in 1..=groups.
    let decode = |v: usize| -> (usize, usize) {
        debug_assert!(v > 0);
        ((v - 1) % pu + 1, (v - 1) / pu + 1)
    };
    let mut edges = Vec::with_capacity(nn * (nn - 1) / 2);
    let mut colors = Vec::with_capacity(edges.capacity());
    for a in 0..nn {
        for b in a + 1..nn {
            edges.push((a, b));
            let (i2, j2) = decode(b);
            let c = if a == 0 {
                a_col[0][i2] + p * (g_col[0][j2] - 1)
            } else {
                let (i1, j1) = decode(a);
                if j1 == j2 {
                    a_col[i1][i2] + p * (g_col[0][j1] - 1)
                } else {
                    beta_color(i1, i2) + p * (g_col[j1][j2] - 1)
                }
            };
            colors.push(c);
        }
    }
    let mut labels = BTreeMap::new();
    labels.insert(0usize, "v0".to_string());
    for v in 1..nn {
        let (i, j) = decode(v);
        labels.insert(v, format!("v{i}^{j}"));
    }
    let graph = Graph::new(nn, edges)?.with_labels(labels)?;
    let mut params = params1("n", n);
    params.insert("p", p);
    params.insert("q", q);
    seal(
        Family::ComposedOdd,
        params,
        graph,
        EdgeColoring::new(colors)?,
        Claim {
            num_colors: 3 * n + (p - 1) / 2,
            total_def: n,
            def_vertex: Some(0),
        },
        Some(n),
        false,
    )
}

/// Complete tripartite `K_{1,m,n}` with apex `w`: `u_i v_j -> i+j`,
/// `w u_i -> i`, `w v_j -> m+1+j`. A proper `(m+n+1)`-coloring with unit
/// deficiency at `w` (`S(w)` skips `m+1`).
///
/// The exact graph deficiency is also recorded: 0 when
/// `gcd(m+1, n+1) = 1`, else 1.
pub fn tripartite(m: u32, n: u32) -> Result<FamilyInstance> {
    positive("m", m)?;
    positive("n", n)?;
    let (mu, nu) = (m as usize, n as usize);
    let w = mu + nu;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            edges.push((i as usize - 1, mu + j as usize - 1));
            colors.push(i + j);
        }
    }
    for i in 1..=m {
        edges.push((i as usize - 1, w));
        colors.push(i);
    }
    for j in 1..=n {
        edges.push((mu + j as usize - 1, w));
        colors.push(m + 1 + j);
    }
    let mut labels = BTreeMap::new();
    labels.extend(label_range("u", 0, 1, m));
    labels.extend(label_range("v", mu, 1, n));
    labels.insert(w, "w".to_string());
    let graph = Graph::new(w + 1, edges)?.with_labels(labels)?;
    let mut params = params1("m", m);
    params.insert("n", n);
    seal(
        Family::Tripartite,
        params,
        graph,
        EdgeColoring::new(colors)?,
        Claim {
            num_colors: m + n + 1,
            total_def: 1,
            def_vertex: Some(w),
        },
        Some(if gcd(m + 1, n + 1) == 1 { 0 } else { 1 }),
        false,
    )
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
