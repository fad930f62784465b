//! Exact deficiency computation with certificates.
//!
//! The search iterates candidate palette sizes `t` upward from the maximum
//! degree. For each `t` it runs a canonical depth-first assignment over the
//! edges (largest endpoint degree first, colors ascending), pruning with a
//! per-vertex residual bound, the structural lower bound and the incumbent.
//! The palette cap is adaptive: no optimal coloring needs more than
//! `2|V| - 4 + def` colors, with the incumbent standing in for `def`, so
//! the scan provably terminates with either a bound sandwich or an
//! exhausted range. Only global color translation and reflection are
//! quotiented away; arbitrary color permutations do not preserve
//! deficiency and are searched in full.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};

use crate::bounds::best_def_lower_bound;
use crate::coloring::{verify, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the edge count accepted by [`brute_force_deficiency`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 10;

const COLOR_LIMIT: u32 = 120;

/// Search mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Run the full palette scan; lower bounds are used for pruning only.
    Exact,
    /// Stop as soon as a found coloring meets a proved lower bound
    /// (default).
    BoundSandwichFirst,
}

/// Knobs for the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Optional cap on the palette sizes the scan may try. Capping below
    /// the provable range downgrades the certificate to unproved.
    pub max_colors: Option<u32>,
    /// Optional cap on search-tree nodes across the whole call.
    pub node_budget: Option<u64>,
    pub mode: SolveMode,
    /// Split the top branching level across worker threads. Certified
    /// numeric results are independent of scheduling; the witness is made
    /// deterministic by a lexicographic reconstruction pass.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_colors: None,
            node_budget: None,
            mode: SolveMode::BoundSandwichFirst,
            parallel: false,
        }
    }
}

/// How a result's optimality was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A constructed or found coloring met a proved lower bound.
    Sandwich { lower_bound: u32, source: String },
    /// Every palette size in the provably sufficient range was searched.
    Exhaustive { palette_lo: u32, palette_hi: u32 },
    /// Budget or caps cut the search short; the value is an upper bound
    /// only.
    Unproved { reason: String },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certificate::Unproved { .. })
    }
}

/// Outcome of an exact solve.
#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Exact deficiency when certified, otherwise the best known upper
    /// bound.
    pub deficiency: u32,
    /// A proper coloring on a gap-free palette attaining `deficiency`.
    pub witness: EdgeColoring,
    pub certificate: Certificate,
    /// Smallest palette size of a deficiency-optimal coloring, when
    /// computed by [`palette_range`].
    pub min_palette: Option<u32>,
    /// Largest palette size of a deficiency-optimal coloring, when
    /// computed by [`palette_range`].
    pub max_palette: Option<u32>,
    pub nodes_explored: u64,
}

/// Shared control state for one search: the incumbent used for pruning,
/// the node counter, and the stop flags.
struct Control {
    incumbent: AtomicU32,
    nodes: AtomicU64,
    budget: Option<u64>,
    exhausted: AtomicBool,
    stop: AtomicBool,
}

impl Control {
    fn new(incumbent: u32, budget: Option<u64>) -> Self {
        Control {
            incumbent: AtomicU32::new(incumbent),
            nodes: AtomicU64::new(0),
            budget,
            exhausted: AtomicBool::new(false),
            stop: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.budget {
            if n > b {
                self.exhausted.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn halted(&self) -> bool {
        self.stop.load(Ordering::Relaxed) || self.exhausted.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Minimize total deficiency; improvements update the shared incumbent.
    Minimize { sandwich_at: Option<u32> },
    /// Find any completion with deficiency exactly `def`.
    Decide { def: u32 },
}

/// One depth-first search over proper assignments with colors in `1..=t`.
///
/// The running lower bound is the sum over touched vertices of
/// `max(0, span(colors at v) - deg(v))`: the final spectrum of `v` has
/// exactly `deg(v)` colors and at least the current span, so this never
/// overestimates. At a leaf it equals the total deficiency exactly.
#[derive(Clone)]
struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    t: u32,
    surjective: bool,
    /// Require color `t` to be used (palette-scan dedup beyond the first
    /// level).
    require_top: bool,
    /// Require color 1 to be used (translation quotient).
    require_one: bool,
    /// Restrict the first assigned edge to colors `<= ceil(t/2)`
    /// (reflection quotient).
    symmetry: bool,
    goal: Goal,
    ctl: &'a Control,

    masks: Vec<u128>,
    cmin: Vec<u32>,
    cmax: Vec<u32>,
    count: Vec<u32>,
    deg: Vec<u32>,
    lb: u32,
    edge_color: Vec<u32>,
    color_use: Vec<u32>,
    distinct: u32,
    best: Option<(u32, Vec<u32>)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, order: &'a [usize], t: u32, goal: Goal, ctl: &'a Control) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            order,
            t,
            surjective: false,
            require_top: false,
            require_one: false,
            symmetry: false,
            goal,
            ctl,
            masks: vec![0u128; n],
            cmin: vec![0; n],
            cmax: vec![0; n],
            count: vec![0; n],
            deg: (0..n).map(|v| g.degree(v) as u32).collect(),
            lb: 0,
            edge_color: vec![0; g.edge_count()],
            color_use: vec![0; t as usize + 1],
            distinct: 0,
            best: None,
        }
    }

    fn contribution(&self, v: usize) -> u32 {
        if self.count[v] == 0 {
            0
        } else {
            (self.cmax[v] - self.cmin[v] + 1).saturating_sub(self.deg[v])
        }
    }

    fn assign(&mut self, edge: usize, c: u32) -> (u32, u32, u32, u32) {
        let (u, v) = self.g.endpoints(edge);
        let saved = (self.cmin[u], self.cmax[u], self.cmin[v], self.cmax[v]);
        for w in [u, v] {
            let before = self.contribution(w);
            self.masks[w] |= 1u128 << c;
            if self.count[w] == 0 {
                self.cmin[w] = c;
                self.cmax[w] = c;
            } else {
                self.cmin[w] = self.cmin[w].min(c);
                self.cmax[w] = self.cmax[w].max(c);
            }
            self.count[w] += 1;
            self.lb += self.contribution(w) - before;
        }
        self.edge_color[edge] = c;
        self.color_use[c as usize] += 1;
        if self.color_use[c as usize] == 1 {
            self.distinct += 1;
        }
        saved
    }

    fn unassign(&mut self, edge: usize, c: u32, saved: (u32, u32, u32, u32)) {
        let (u, v) = self.g.endpoints(edge);
        self.color_use[c as usize] -= 1;
        if self.color_use[c as usize] == 0 {
            self.distinct -= 1;
        }
        self.edge_color[edge] = 0;
        let (lo_u, hi_u, lo_v, hi_v) = saved;
        for (w, lo, hi) in [(u, lo_u, hi_u), (v, lo_v, hi_v)] {
            let before = self.contribution(w);
            self.masks[w] &= !(1u128 << c);
            self.count[w] -= 1;
            self.cmin[w] = lo;
            self.cmax[w] = hi;
            self.lb -= before - self.contribution(w);
        }
    }

    fn leaf(&mut self) {
        if self.require_one && self.color_use[1] == 0 {
            return;
        }
        if self.require_top && self.color_use[self.t as usize] == 0 {
            return;
        }
        if self.surjective && self.distinct != self.t {
            return;
        }
        let def = self.lb;
        match self.goal {
            Goal::Minimize { sandwich_at } => {
                let cur = self.ctl.incumbent.load(Ordering::Relaxed);
                if def < cur {
                    self.ctl.incumbent.fetch_min(def, Ordering::Relaxed);
                    self.best = Some((def, self.edge_color.clone()));
                    if sandwich_at.is_some_and(|l| def <= l) {
                        self.ctl.stop.store(true, Ordering::Relaxed);
                    }
                }
            }
            Goal::Decide { def: want } => {
                if def == want {
                    self.best = Some((def, self.edge_color.clone()));
                    self.ctl.stop.store(true, Ordering::Relaxed);
                }
            }
        }
    }

    /// Whether the subtree below `assigned` colored edges is hopeless.
    fn prune(&self, assigned: usize) -> bool {
        let bound_hit = match self.goal {
            Goal::Minimize { .. } => self.lb >= self.ctl.incumbent.load(Ordering::Relaxed),
            Goal::Decide { def } => self.lb > def,
        };
        bound_hit
            || (self.surjective
                && (self.t - self.distinct) as usize > self.order.len() - assigned)
    }

    fn dfs(&mut self, depth: usize) {
        if self.ctl.halted() {
            return;
        }
        if depth == self.order.len() {
            self.leaf();
            return;
        }
        let edge = self.order[depth];
        let (u, v) = self.g.endpoints(edge);
        let limit = if depth == 0 && self.symmetry {
            self.t.div_ceil(2)
        } else {
            self.t
        };
        for c in 1..=limit {
            if (self.masks[u] | self.masks[v]) & (1u128 << c) != 0 {
                continue;
            }
            if !self.ctl.tick() {
                return;
            }
            let saved = self.assign(edge, c);
            if !self.prune(depth + 1) {
                self.dfs(depth + 1);
            }
            self.unassign(edge, c, saved);
            if self.ctl.halted() {
                return;
            }
        }
    }

    /// Runs the search; splits the first edge's color choices across
    /// workers when `parallel` is set (shared state is the atomic
    /// incumbent, used only for pruning).
    fn run(mut self, parallel: bool) -> Option<(u32, Vec<u32>)> {
        if self.order.is_empty() {
            self.leaf();
            return self.best.take();
        }
        if !parallel {
            self.dfs(0);
            return self.best.take();
        }
        use rayon::prelude::*;
        let edge = self.order[0];
        let limit = if self.symmetry {
            self.t.div_ceil(2)
        } else {
            self.t
        };
        let template = self;
        let results: Vec<Option<(u32, Vec<u32>)>> = (1..=limit)
            .into_par_iter()
            .map(|c| {
                let mut branch = template.clone();
                if branch.ctl.halted() || !branch.ctl.tick() {
                    return None;
                }
                let saved = branch.assign(edge, c);
                if !branch.prune(1) {
                    branch.dfs(1);
                }
                branch.unassign(edge, c, saved);
                branch.best.take()
            })
            .collect();
        results
            .into_iter()
            .flatten()
            .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
    }
}

/// Edges ordered by maximum endpoint degree (descending), ties by index:
/// deterministic, and high-degree conflicts fail fast.
fn canonical_edge_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u).max(g.degree(v))), e)
    });
    order
}

/// First-fit proper coloring along the canonical edge order. Its palette
/// is always gap-free: a color is picked only when every smaller color is
/// blocked at an endpoint, hence already used somewhere.
pub(crate) fn greedy_coloring(g: &Graph) -> EdgeColoring {
    let mut used: Vec<std::collections::BTreeSet<u32>> =
        vec![Default::default(); g.vertex_count()];
    let mut colors = vec![0u32; g.edge_count()];
    for &e in &canonical_edge_order(g) {
        let (u, v) = g.endpoints(e);
        let mut c = 1;
        while used[u].contains(&c) || used[v].contains(&c) {
            c += 1;
        }
        used[u].insert(c);
        used[v].insert(c);
        colors[e] = c;
    }
    EdgeColoring::new(colors).expect("greedy colors are positive")
}

/// Palette sizes an optimal coloring may need, with `incumbent` standing
/// in for the deficiency.
fn palette_cap(n: usize, incumbent: u32) -> u32 {
    if n >= 3 {
        2 * n as u32 - 4 + incumbent
    } else {
        1
    }
}

/// Exact graph deficiency with a certificate and a witness coloring.
///
/// On budget exhaustion the best known value is returned with an
/// [`Certificate::Unproved`] marker, never silently.
pub fn exact_deficiency(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (lower, lower_source) = best_def_lower_bound(g);
    let greedy = greedy_coloring(g);
    let greedy_def = verify(g, &greedy)?.total_def;
    let mut best = greedy_def;
    let mut witness = greedy;

    let sandwich = opts.mode == SolveMode::BoundSandwichFirst;
    let ctl = Control::new(best, opts.node_budget);
    let n = g.vertex_count();
    let t_lo = (g.max_degree() as u32).max(1);
    let mut t_hi = None;
    let mut improved_in_parallel = false;

    if !(sandwich && best == lower) {
        let order = canonical_edge_order(g);
        let mut t = t_lo;
        loop {
            let cap = palette_cap(n, ctl.incumbent.load(Ordering::Relaxed))
                .min(opts.max_colors.unwrap_or(u32::MAX))
                .min(COLOR_LIMIT);
            if t > cap {
                break;
            }
            let mut search = Search::new(
                g,
                &order,
                t,
                Goal::Minimize {
                    sandwich_at: sandwich.then_some(lower),
                },
                &ctl,
            );
            search.require_one = true;
            search.require_top = t > t_lo;
            search.symmetry = true;
            if let Some((def, colors)) = search.run(opts.parallel) {
                if def < best {
                    best = def;
                    witness = EdgeColoring::new(colors)?;
                    improved_in_parallel = opts.parallel;
                }
            }
            t_hi = Some(t);
            if ctl.halted() {
                break;
            }
            t += 1;
        }
    }

    let mut nodes = ctl.nodes.load(Ordering::Relaxed);
    let exhausted = ctl.exhausted.load(Ordering::Relaxed);
    let natural_cap = palette_cap(n, best);
    let capped =
        opts.max_colors.is_some_and(|mc| mc < natural_cap) || natural_cap > COLOR_LIMIT;
    let certificate = if !exhausted && !capped {
        if sandwich && best == lower {
            Certificate::Sandwich {
                lower_bound: lower,
                source: lower_source.to_string(),
            }
        } else {
            Certificate::Exhaustive {
                palette_lo: t_lo,
                palette_hi: t_hi.unwrap_or(t_lo),
            }
        }
    } else if best == lower {
        // The bound proves optimality even though the scan was cut short.
        Certificate::Sandwich {
            lower_bound: lower,
            source: lower_source.to_string(),
        }
    } else if exhausted {
        Certificate::Unproved {
            reason: "node budget exhausted".to_string(),
        }
    } else {
        Certificate::Unproved {
            reason: "palette cap below the provable range".to_string(),
        }
    };

    // Parallel branch winners depend on scheduling; replace the witness by
    // the lexicographically smallest optimal coloring.
    if improved_in_parallel && certificate.is_certified() {
        if let Some((colors, extra)) = lexmin_witness(g, best, opts.node_budget) {
            witness = EdgeColoring::new(colors)?;
            nodes += extra;
        }
    }

    let witness = witness.compacted();
    let report = verify(g, &witness)?;
    if !report.proper || !report.surjective_palette {
        return Err(Error::SelfCheck("solver witness failed verification".into()));
    }
    if certificate.is_certified() && report.total_def != best {
        return Err(Error::SelfCheck(
            "solver witness deficiency drifted from the proved optimum".into(),
        ));
    }
    Ok(SolveResult {
        deficiency: report.total_def,
        witness,
        certificate,
        min_palette: None,
        max_palette: None,
        nodes_explored: nodes,
    })
}

/// Lexicographically smallest coloring (edges in index order, colors
/// ascending) attaining `def` within the provable palette cap.
fn lexmin_witness(g: &Graph, def: u32, budget: Option<u64>) -> Option<(Vec<u32>, u64)> {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    let t = palette_cap(g.vertex_count(), def)
        .max(g.max_degree() as u32)
        .min(COLOR_LIMIT);
    let ctl = Control::new(u32::MAX, budget);
    let search = Search::new(g, &order, t, Goal::Decide { def }, &ctl);
    let found = search.run(false);
    let nodes = ctl.nodes.load(Ordering::Relaxed);
    if ctl.exhausted.load(Ordering::Relaxed) {
        return None;
    }
    found.map(|(_, colors)| (colors, nodes))
}

/// Minimum total deficiency over every proper coloring with colors in
/// `1..=max_t`, by plain enumeration. Independent of the branch-and-bound
/// path: no ordering heuristics, no bounds, no symmetry quotient.
///
/// Only graphs with at most [`BRUTE_FORCE_EDGE_LIMIT`] edges are accepted.
pub fn brute_force_deficiency(g: &Graph, max_t: u32) -> Result<u32> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::BruteForceLimit {
            edges: m,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    if max_t == 0 || max_t > 60 {
        return Err(Error::InvalidParameter {
            name: "max_t",
            value: max_t as u64,
            reason: "must be between 1 and 60",
        });
    }
    if m == 0 {
        return Ok(0);
    }

    fn leaf_def(vertex_colors: &[u64]) -> u32 {
        vertex_colors
            .iter()
            .map(|&mask| {
                if mask == 0 {
                    0
                } else {
                    let lo = mask.trailing_zeros();
                    let hi = 63 - mask.leading_zeros();
                    hi - lo + 1 - mask.count_ones()
                }
            })
            .sum()
    }

    fn rec(g: &Graph, edge: usize, max_t: u32, vertex_colors: &mut [u64], best: &mut u32) {
        if edge == g.edge_count() {
            *best = (*best).min(leaf_def(vertex_colors));
            return;
        }
        let (u, v) = g.endpoints(edge);
        for c in 1..=max_t {
            let bit = 1u64 << c;
            if (vertex_colors[u] | vertex_colors[v]) & bit != 0 {
                continue;
            }
            vertex_colors[u] |= bit;
            vertex_colors[v] |= bit;
            rec(g, edge + 1, max_t, vertex_colors, best);
            vertex_colors[u] &= !bit;
            vertex_colors[v] &= !bit;
        }
    }

    let mut vertex_colors = vec![0u64; g.vertex_count()];
    let mut best = u32::MAX;
    rec(g, 0, max_t, &mut vertex_colors, &mut best);
    if best == u32::MAX {
        return Err(Error::InvalidParameter {
            name: "max_t",
            value: max_t as u64,
            reason: "no proper coloring exists with this many colors",
        });
    }
    Ok(best)
}

/// Smallest and largest palette sizes of a deficiency-optimal proper
/// coloring (surjective palettes only).
///
/// Whether minimum deficiency is attainable is not assumed monotone in the
/// palette size, so every candidate size in the provable range is scanned.
pub fn palette_range(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let mut base = exact_deficiency(g, opts)?;
    if !base.certificate.is_certified() {
        return Err(Error::BudgetExhausted);
    }
    let def = base.deficiency;
    // A surjective t-coloring needs t <= |E| on top of the general cap.
    let cap = palette_cap(g.vertex_count(), def)
        .min(g.edge_count() as u32)
        .min(COLOR_LIMIT);
    let order = canonical_edge_order(g);

    let mut lo = None;
    let mut hi = None;
    let mut spent = 0u64;
    for t in (g.max_degree() as u32).max(1)..=cap {
        let budget_left = opts
            .node_budget
            .map(|b| b.saturating_sub(base.nodes_explored + spent));
        if budget_left == Some(0) {
            return Err(Error::BudgetExhausted);
        }
        let ctl = Control::new(u32::MAX, budget_left);
        let mut search = Search::new(g, &order, t, Goal::Decide { def }, &ctl);
        search.surjective = true;
        search.symmetry = true;
        let found = search.run(opts.parallel);
        spent += ctl.nodes.load(Ordering::Relaxed);
        if ctl.exhausted.load(Ordering::Relaxed) {
            return Err(Error::BudgetExhausted);
        }
        if found.is_some() {
            if lo.is_none() {
                lo = Some(t);
            }
            hi = Some(t);
        }
    }
    if lo.is_none() {
        return Err(Error::SelfCheck(
            "no surjective optimal coloring found in the provable range".into(),
        ));
    }
    base.min_palette = lo;
    base.max_palette = hi;
    base.nodes_explored += spent;
    Ok(base)
}

/// True iff deleting any single edge strictly decreases the deficiency.
/// Errors when the deficiency is 0 (criticality is undefined) or a
/// subproblem cannot be certified within budget.
pub fn is_deficiency_critical(g: &Graph, opts: &SolveOptions) -> Result<bool> {
    let base = exact_deficiency(g, opts)?;
    if !base.certificate.is_certified() {
        return Err(Error::BudgetExhausted);
    }
    if base.deficiency == 0 {
        return Err(Error::CriticalityUndefined);
    }
    for e in 0..g.edge_count() {
        let h = g.without_edge(e)?;
        if h.edge_count() == 0 {
            continue; // the empty graph has deficiency 0 < base
        }
        let sub = exact_deficiency(&h, opts)?;
        if !sub.certificate.is_certified() {
            return Err(Error::BudgetExhausted);
        }
        if sub.deficiency >= base.deficiency {
            return Ok(false);
        }
    }
    Ok(true)
}
