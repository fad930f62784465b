//! Command-line front end: construct family colorings, verify coloring
//! files, compute bounds, run the exact solver and export DOT.
//!
//! Exit codes: 0 success or expectation met, 1 verification/expectation
//! failure, 2 input error, 3 budget exhaustion.

mod files;
mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use defcolor::bounds::bounds_report;
use defcolor::constructions::{
    complete_even_interval, composed_odd, concentrated_odd, interval_complete_bipartite,
    interval_kpp, knn_subdivided, near_complete, tripartite, Family, FamilyInstance,
};
use defcolor::solver::{
    exact_deficiency, is_deficiency_critical, palette_range, Certificate, SolveOptions,
};
use defcolor::{verify, Error as CoreError, Graph};

use output::Output;

#[derive(Parser)]
#[command(
    name = "defcolor",
    version,
    about = "Proper edge-colorings of graphs under the interval deficiency measure"
)]
struct Cli {
    /// Emit one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family coloring and write graph/coloring files.
    Construct {
        /// One of: kpp, complete-bipartite, knn-subdivided, near-complete,
        /// complete-even, concentrated-odd, composed-odd, tripartite.
        family: String,
        /// Family parameters as key=value pairs (e.g. `n=3`, `p=5`).
        params: Vec<String>,
        /// Output path for the graph file.
        #[arg(long)]
        graph: PathBuf,
        /// Output path for the coloring file.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Verify a coloring file against a graph file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Expect this exact total deficiency (exit 1 otherwise).
        #[arg(long)]
        expect_def: Option<u32>,
        /// Expect an interval coloring, i.e. total deficiency 0.
        #[arg(long)]
        expect_interval: bool,
    },
    /// Report deficiency and palette bounds for a graph.
    Bounds {
        #[arg(long)]
        graph: PathBuf,
        /// Exact deficiency, if already known; otherwise the solver runs
        /// first.
        #[arg(long)]
        def: Option<u32>,
        /// Declare the graph planar (no planarity test is run).
        #[arg(long)]
        planar: bool,
        /// Node budget for the solver when --def is omitted.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute the exact deficiency (and optionally the optimal palette
    /// range and criticality).
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Also report the smallest optimal palette size.
        #[arg(long)]
        wdef: bool,
        /// Also report the largest optimal palette size.
        #[arg(long = "Wdef")]
        wdef_max: bool,
        /// Also test deficiency-criticality (every edge deletion must
        /// lower the deficiency).
        #[arg(long)]
        critical: bool,
        /// Node budget; exhausted runs exit 3 with a non-certified result.
        #[arg(long)]
        budget: Option<u64>,
        /// Cap on palette sizes to try.
        #[arg(long)]
        max_colors: Option<u32>,
        /// Split the search across worker threads.
        #[arg(long)]
        parallel: bool,
    },
    /// Export a colored graph.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Output format (only `dot`).
        #[arg(long, default_value = "dot")]
        format: String,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let json = cli.json;
    let code = match run(cli.command, json) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(CoreError::BudgetExhausted)))
            {
                3
            } else {
                2
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command, json: bool) -> Result<i32> {
    match command {
        Command::Construct {
            family,
            params,
            graph,
            coloring,
        } => cmd_construct(&family, &params, &graph, &coloring, json),
        Command::Verify {
            graph,
            coloring,
            expect_def,
            expect_interval,
        } => cmd_verify(&graph, &coloring, expect_def, expect_interval, json),
        Command::Bounds {
            graph,
            def,
            planar,
            budget,
        } => cmd_bounds(&graph, def, planar, budget, json),
        Command::Solve {
            graph,
            wdef,
            wdef_max,
            critical,
            budget,
            max_colors,
            parallel,
        } => cmd_solve(
            &graph, wdef, wdef_max, critical, budget, max_colors, parallel, json,
        ),
        Command::Export {
            graph,
            coloring,
            format,
            out,
        } => cmd_export(&graph, &coloring, &format, out.as_deref()),
    }
}

fn parse_params(pairs: &[String]) -> Result<BTreeMap<String, u32>> {
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("parameter {pair:?} is not of the form key=value"))?;
        let value: u32 = value
            .parse()
            .with_context(|| format!("parameter {key} must be a positive integer"))?;
        if map.insert(key.to_string(), value).is_some() {
            bail!("parameter {key} given twice");
        }
    }
    Ok(map)
}

fn take_params(map: &mut BTreeMap<String, u32>, keys: &[&str]) -> Result<Vec<u32>> {
    let values = keys
        .iter()
        .map(|k| {
            map.remove(*k)
                .ok_or_else(|| anyhow!("missing required parameter {k}"))
        })
        .collect::<Result<Vec<u32>>>()?;
    if let Some(extra) = map.keys().next() {
        bail!("unknown parameter {extra}");
    }
    Ok(values)
}

fn build_instance(family: Family, params: &mut BTreeMap<String, u32>) -> Result<FamilyInstance> {
    let instance = match family {
        Family::Kpp => interval_kpp(take_params(params, &["p"])?[0]),
        Family::CompleteBipartite => {
            let v = take_params(params, &["m", "n"])?;
            interval_complete_bipartite(v[0], v[1])
        }
        Family::KnnSubdivided => knn_subdivided(take_params(params, &["n"])?[0]),
        Family::NearComplete => near_complete(take_params(params, &["n"])?[0]),
        Family::CompleteEven => complete_even_interval(take_params(params, &["m"])?[0]),
        Family::ConcentratedOdd => concentrated_odd(take_params(params, &["n"])?[0]),
        Family::ComposedOdd => composed_odd(take_params(params, &["n"])?[0]),
        Family::Tripartite => {
            let v = take_params(params, &["m", "n"])?;
            tripartite(v[0], v[1])
        }
    };
    instance.map_err(|e| anyhow!(e))
}

fn cmd_construct(
    family: &str,
    params: &[String],
    graph_path: &std::path::Path,
    coloring_path: &std::path::Path,
    json: bool,
) -> Result<i32> {
    let family = Family::from_name(family)
        .ok_or_else(|| anyhow!("unknown family {family:?} (see --help for the list)"))?;
    let mut params = parse_params(params)?;
    let instance = match build_instance(family, &mut params) {
        Ok(instance) => instance,
        Err(err) => {
            // Parameter problems are input errors (exit 2); a failed
            // self-check means the construction could not certify its own
            // claim (exit 1).
            if err
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(CoreError::SelfCheck(_))))
            {
                eprintln!("error: {err:#}");
                return Ok(1);
            }
            return Err(err);
        }
    };

    files::write_graph(graph_path, &instance.graph)?;
    files::write_coloring(coloring_path, &instance.coloring)?;

    let mut out = Output::new(json);
    out.str("family", instance.family.name());
    for (key, value) in &instance.params {
        out.uint(key, *value as u64);
    }
    out.uint("vertices", instance.graph.vertex_count() as u64);
    out.uint("edges", instance.graph.edge_count() as u64);
    out.uint("colors", instance.claimed.num_colors as u64);
    out.uint("def", instance.claimed.total_def as u64);
    out.opt_uint("def_vertex", instance.claimed.def_vertex.map(|v| v as u32));
    out.opt_uint("graph_def", instance.graph_deficiency);
    out.boolean("degenerate", instance.degenerate);
    out.str("graph_file", &graph_path.display().to_string());
    out.str("coloring_file", &coloring_path.display().to_string());
    out.finish();
    Ok(0)
}

fn cmd_verify(
    graph_path: &std::path::Path,
    coloring_path: &std::path::Path,
    expect_def: Option<u32>,
    expect_interval: bool,
    json: bool,
) -> Result<i32> {
    let graph = files::read_graph(graph_path)?;
    let coloring = files::read_coloring(coloring_path)?;
    let report = verify(&graph, &coloring).map_err(|e| anyhow!(e))?;

    let mut out = Output::new(json);
    out.boolean("proper", report.proper);
    out.boolean("surjective_palette", report.surjective_palette);
    out.uint("max_color", report.max_color as u64);
    out.uint("total_def", report.total_def as u64);
    out.uint_list("per_vertex_def", report.per_vertex_def.iter().copied());
    out.bool_list(
        "per_vertex_interval",
        report.per_vertex_interval.iter().copied(),
    );
    out.finish();

    let mut ok = report.proper;
    if let Some(expected) = expect_def {
        ok = ok && report.total_def == expected;
    }
    if expect_interval {
        ok = ok && report.total_def == 0;
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_bounds(
    graph_path: &std::path::Path,
    def: Option<u32>,
    planar: bool,
    budget: Option<u64>,
    json: bool,
) -> Result<i32> {
    let graph = files::read_graph(graph_path)?;
    let (def, source) = match def {
        Some(d) => (d, "given"),
        None => {
            let opts = SolveOptions {
                node_budget: budget,
                ..SolveOptions::default()
            };
            let result = exact_deficiency(&graph, &opts).map_err(|e| anyhow!(e))?;
            if !result.certificate.is_certified() {
                return Err(anyhow!(CoreError::BudgetExhausted))
                    .context("deficiency not certified; pass --def or raise --budget");
            }
            (result.deficiency, "solver")
        }
    };
    let report = bounds_report(&graph, def, planar).map_err(|e| anyhow!(e))?;

    let mut out = Output::new(json);
    out.uint("def", def as u64);
    out.str("def_source", source);
    out.opt_uint("def_lower_odd", report.def_lower_odd);
    out.opt_uint("def_lower_regular", report.def_lower_regular);
    out.opt_uint("wdef_lower", report.min_palette_lower);
    out.opt_uint("Wdef_upper_general", report.max_palette_upper_general);
    out.opt_uint(
        "Wdef_upper_trianglefree",
        report.max_palette_upper_triangle_free,
    );
    out.opt_uint("Wdef_upper_planar", report.max_palette_upper_planar);
    out.opt_uint("Wdef_upper_path", report.max_palette_upper_path);
    out.opt_uint("Wdef_upper_diam", report.max_palette_upper_diameter);
    out.finish();
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    graph_path: &std::path::Path,
    wdef: bool,
    wdef_max: bool,
    critical: bool,
    budget: Option<u64>,
    max_colors: Option<u32>,
    parallel: bool,
    json: bool,
) -> Result<i32> {
    let graph = files::read_graph(graph_path)?;
    let opts = SolveOptions {
        max_colors,
        node_budget: budget,
        parallel,
        ..SolveOptions::default()
    };
    let result = if wdef || wdef_max {
        palette_range(&graph, &opts).map_err(|e| anyhow!(e))?
    } else {
        exact_deficiency(&graph, &opts).map_err(|e| anyhow!(e))?
    };

    let mut out = Output::new(json);
    out.uint("def", result.deficiency as u64);
    match &result.certificate {
        Certificate::Sandwich {
            lower_bound,
            source,
        } => {
            out.str("certificate", "sandwich");
            out.uint("lower_bound", *lower_bound as u64);
            out.str("lower_bound_source", source);
        }
        Certificate::Exhaustive {
            palette_lo,
            palette_hi,
        } => {
            out.str("certificate", "exhaustive");
            out.uint("palette_scanned_lo", *palette_lo as u64);
            out.uint("palette_scanned_hi", *palette_hi as u64);
        }
        Certificate::Unproved { reason } => {
            out.str("certificate", "non-certified");
            out.str("reason", reason);
        }
    }
    if wdef {
        out.opt_uint("wdef", result.min_palette);
    }
    if wdef_max {
        out.opt_uint("Wdef", result.max_palette);
    }
    let mut code = if result.certificate.is_certified() { 0 } else { 3 };
    if critical {
        match is_deficiency_critical(&graph, &opts) {
            Ok(answer) => out.boolean("critical", answer),
            Err(CoreError::BudgetExhausted) => {
                out.str("critical", "non-certified");
                code = 3;
            }
            Err(e) => return Err(anyhow!(e)),
        }
    }
    out.uint("nodes", result.nodes_explored);
    out.finish();
    Ok(code)
}

fn cmd_export(
    graph_path: &std::path::Path,
    coloring_path: &std::path::Path,
    format: &str,
    out: Option<&std::path::Path>,
) -> Result<i32> {
    if format != "dot" {
        bail!("unsupported format {format:?} (only dot)");
    }
    let graph = files::read_graph(graph_path)?;
    let coloring = files::read_coloring(coloring_path)?;
    if coloring.len() != graph.edge_count() {
        bail!(
            "coloring has {} entries but the graph has {} edges",
            coloring.len(),
            graph.edge_count()
        );
    }
    let dot = render_dot(&graph, &coloring);
    match out {
        Some(path) => std::fs::write(path, dot)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => output::emit(&dot),
    }
    Ok(0)
}

fn render_dot(graph: &Graph, coloring: &defcolor::EdgeColoring) -> String {
    let mut dot = String::from("graph G {\n");
    for v in 0..graph.vertex_count() {
        if let Some(label) = graph.label(v) {
            dot.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        }
    }
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        dot.push_str(&format!(
            "  {u} -- {v} [label=\"{}\"];\n",
            coloring.color(idx)
        ));
    }
    dot.push_str("}\n");
    dot
}
