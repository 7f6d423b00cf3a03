//! Command-line front end: `solve`, `peel`, `frontier`, `oracle`, `gen` and `bench`.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdense_core::convex::{brute_force_prefix, solve_convex};
use fdense_core::flow::{solve_unweighted_exact_traced, solve_weighted_approx_traced, Probe};
use fdense_core::lp::{dense_frontier, solve_concave_exact_lp};
use fdense_core::oracle::enumerate;
use fdense_core::peel::{best_suffix, peel};
use fdense_core::{generate, Exact, Graph, SizeFunction, Solution, Solver, VertexSet};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bench::{run_bench, BenchArgs};
use crate::edgelist::{format_weight, write_edge_list};
use crate::fspec::{parse_size_function, with_env_tol};
use crate::json::{parse_graph, write_json_graph};

/// Default epsilon of the weighted concave search.
pub const DEFAULT_EPSILON: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A solver precondition, guard or self-check failed; exit code 3.
    #[error("contract error: {0}")]
    Contract(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Contract(_) => 3,
        }
    }
}

fn contract(e: impl ToString) -> CliError {
    CliError::Contract(e.to_string())
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "fdense", version, about = "f-densest subgraph solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve f-DS on one graph.
    Solve(SolveArgs),
    /// Greedy peeling order and its best suffix.
    Peel(PeelArgs),
    /// Dense frontier points with witnesses.
    Frontier(InputArgs),
    /// Exhaustive enumeration (n <= 24).
    Oracle(OracleArgs),
    /// Write a random graph as an edge list.
    Gen(GenArgs),
    /// Run solvers over generated instances and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list (`u v [w]` lines) or JSON graph.
    #[arg(long)]
    pub input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Auto,
    Convex,
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Peel,
    Brute,
    Flow,
    Lp,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Size function, e.g. linear, sqrt, power:1.5, combo:0.3, table:0,1,1.8
    #[arg(long = "f", default_value = "linear")]
    pub f: String,
    #[arg(long, value_enum, default_value_t = Case::Auto)]
    pub case: Case,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    pub algo: Algo,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Brute-force depth of the convex solver.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Recorded in the output; every solver is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
    /// Include the threshold-search trace.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct PeelArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long = "f")]
    pub f: Option<String>,
    /// Print the full elimination order.
    #[arg(long)]
    pub emit_order: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long = "f")]
    pub f: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Gnp,
    Planted,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: Generator,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Planted block size.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[arg(long, default_value_t = 0.9)]
    pub p_in: f64,
    #[arg(long, default_value_t = 0.1)]
    pub p_out: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Draw weights j/100, j in 1..=1000.
    #[arg(long)]
    pub weighted: bool,
    #[arg(long)]
    pub json: bool,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<String>,
}

/// A loaded input graph with its SHA-256 digest.
pub struct Loaded {
    pub graph: Graph,
    pub path: String,
    pub digest: String,
}

pub fn load(path: &str) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|e| input(format!("{path}: {e}")))?;
    let text = String::from_utf8(bytes).map_err(|e| input(format!("{path}: {e}")))?;
    let graph = parse_graph(&text).map_err(|e| input(format!("{path}: {e}")))?;
    let digest = Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });
    Ok(Loaded {
        graph,
        path: path.to_string(),
        digest,
    })
}

fn size_function(spec: &str, g: &Graph) -> Result<SizeFunction, CliError> {
    with_env_tol(parse_size_function(spec, g).map_err(input)?).map_err(input)
}

fn exact_string(x: &Exact) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.members()
        .iter()
        .map(|&v| g.label(v).into_owned())
        .collect()
}

/// Recomputes w(S), f(|S|) and the density of `sol` from the inputs.
pub fn validate(g: &Graph, f: &SizeFunction, sol: &Solution) -> Result<(), CliError> {
    let weight = g.induced_weight(&sol.subset).map_err(contract)?;
    let fx = f.value(sol.size());
    let density = *weight.numer() as f64 / *weight.denom() as f64 / fx;
    let close = (density - sol.density).abs() <= 1e-12 * density.abs().max(1.0);
    let exact_ok = match (&sol.exact_density, f.exact(sol.size())) {
        (Some(d), Some(fe)) => {
            let w = Exact::new(i128::from(*weight.numer()), i128::from(*weight.denom()));
            *d == w / fe
        }
        (Some(_), None) => false,
        (None, _) => true,
    };
    if weight != sol.weight || fx != sol.f_value || !close || !exact_ok {
        return Err(CliError::Contract(format!(
            "solution failed re-validation: weight {} vs {}, density {} vs {}",
            weight, sol.weight, density, sol.density
        )));
    }
    Ok(())
}

pub fn solution_json(g: &Graph, sol: &Solution) -> Value {
    json!({
        "subset": labels(g, &sol.subset),
        "size": sol.size(),
        "weight": format_weight(sol.weight),
        "f_value": sol.f_value,
        "density": sol.density,
        "density_exact": sol.exact_density.as_ref().map(exact_string),
    })
}

fn certificate_json(sol: &Solution) -> Value {
    match &sol.certificate {
        None => Value::Null,
        Some(c) => json!({
            "bound": c.bound,
            "k": c.k,
            "ratio": c.ratio(),
            "corollary": c.corollary.as_ref().map(|k| json!({"formula": k.formula, "ratio": k.ratio})),
        }),
    }
}

fn trace_json(probes: &[Probe]) -> Value {
    Value::Array(
        probes
            .iter()
            .map(|p| {
                json!({
                    "beta": p.beta,
                    "cut_cost": p.cost,
                    "achievable": p.achievable,
                    "witness_size": p.witness_size,
                })
            })
            .collect(),
    )
}

fn input_json(l: &Loaded) -> Value {
    json!({"path": l.path, "sha256": l.digest, "n": l.graph.n(), "m": l.graph.m()})
}

fn shape_json(f: &SizeFunction, n: usize) -> Value {
    let s = f.classify(n);
    json!({
        "convex": s.convex,
        "concave": s.concave,
        "strictly_concave": s.strictly_concave,
        "monotone_violations": s.monotone_violations,
    })
}

/// Runs the concave solvers; flow picks exact or (1+eps) by the weights.
fn concave_flow(g: &Graph, f: &SizeFunction, eps: f64) -> Result<(Solution, Vec<Probe>), CliError> {
    if g.is_unweighted() {
        solve_unweighted_exact_traced(g, f).map_err(contract)
    } else {
        let a = solve_weighted_approx_traced(g, f, eps).map_err(contract)?;
        Ok((a.solution, a.probes))
    }
}

fn brute(g: &Graph, f: &SizeFunction, k: usize) -> Result<Solution, CliError> {
    f.check_admissible(g.n()).map_err(contract)?;
    let mut best: Option<Solution> = None;
    for p in brute_force_prefix(g, k).map_err(contract)? {
        let s = Solution::evaluate(g, f, p.subset, Solver::BruteForce);
        let better = match &best {
            None => true,
            Some(b) => s.value() > b.value() || (s.value() == b.value() && s.subset < b.subset),
        };
        if better {
            best = Some(s);
        }
    }
    best.ok_or_else(|| contract("no candidate"))
}

fn dispatch(
    a: &SolveArgs,
    g: &Graph,
    f: &SizeFunction,
) -> Result<(Solution, Vec<Probe>), CliError> {
    let shape = f.classify(g.n());
    let none = Vec::new();
    match (a.algo, a.case) {
        (Algo::Peel, _) => Ok((best_suffix(&peel(g), f).map_err(contract)?, none)),
        (Algo::Brute, _) => Ok((brute(g, f, a.k)?, none)),
        (Algo::Lp, _) => Ok((solve_concave_exact_lp(g, f).map_err(contract)?, none)),
        (Algo::Flow, _) | (Algo::Auto, Case::Concave) => concave_flow(g, f, a.epsilon),
        (Algo::Auto, Case::Convex) => Ok((solve_convex(g, f, a.k).map_err(contract)?, none)),
        (Algo::Auto, Case::Auto) => {
            if shape.concave {
                concave_flow(g, f, a.epsilon)
            } else if shape.convex {
                Ok((solve_convex(g, f, a.k).map_err(contract)?, none))
            } else {
                Err(contract(
                    "f is neither convex nor concave on [0, n]; pass --algo peel, or --algo lp for concave f",
                ))
            }
        }
    }
}

fn cmd_solve(a: &SolveArgs, echo: &str) -> Result<String, CliError> {
    let l = load(&a.input.input)?;
    let g = &l.graph;
    let f = size_function(&a.f, g)?;
    if a.epsilon.is_nan() || a.epsilon <= 0.0 {
        return Err(input("--epsilon must be positive"));
    }
    let start = Instant::now();
    let (sol, probes) = dispatch(a, g, &f)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    validate(g, &f, &sol)?;
    if a.csv {
        let mut out = String::from("solver,size,weight,density,density_exact,ms\n");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.3}",
            sol.solver.as_str(),
            sol.size(),
            format_weight(sol.weight),
            sol.density,
            sol.exact_density
                .as_ref()
                .map(exact_string)
                .unwrap_or_default(),
            ms
        );
        return Ok(out);
    }
    let mut record = json!({
        "command": echo,
        "input": input_json(&l),
        "f": a.f,
        "shape": shape_json(&f, g.n()),
        "seed": a.seed,
        "solver": sol.solver.as_str(),
        "solution": solution_json(g, &sol),
        "certificate": certificate_json(&sol),
        "wall_ms": ms,
    });
    if let Solver::FlowApprox { epsilon } = sol.solver {
        record["epsilon"] = json!(epsilon);
    }
    if a.trace {
        record["trace"] = trace_json(&probes);
    }
    Ok(pretty(&record))
}

fn cmd_peel(a: &PeelArgs, echo: &str) -> Result<String, CliError> {
    let l = load(&a.input.input)?;
    let g = &l.graph;
    let start = Instant::now();
    let order = peel(g);
    let mut record = json!({"command": echo, "input": input_json(&l), "solver": "peel"});
    if a.emit_order {
        record["order"] = json!(order
            .order()
            .iter()
            .map(|&v| g.label(v).into_owned())
            .collect::<Vec<_>>());
        record["removal_degrees"] = json!((1..=g.n())
            .rev()
            .map(|i| format_weight(order.removal_degree(i)))
            .collect::<Vec<_>>());
    }
    if let Some(spec) = &a.f {
        let f = size_function(spec, g)?;
        let sol = best_suffix(&order, &f).map_err(contract)?;
        validate(g, &f, &sol)?;
        record["f"] = json!(spec);
        record["solution"] = solution_json(g, &sol);
    }
    record["wall_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    Ok(pretty(&record))
}

fn cmd_frontier(a: &InputArgs, echo: &str) -> Result<String, CliError> {
    let l = load(&a.input)?;
    let g = &l.graph;
    let start = Instant::now();
    let points = dense_frontier(g).map_err(contract)?;
    for p in &points {
        if g.induced_weight(&p.witness).map_err(contract)? != p.weight || p.witness.len() != p.size
        {
            return Err(contract("frontier witness failed re-validation"));
        }
    }
    let record = json!({
        "command": echo,
        "input": input_json(&l),
        "solver": "lp-exact",
        "sizes": points.iter().map(|p| p.size).collect::<Vec<_>>(),
        "weights": points.iter().map(|p| format_weight(p.weight)).collect::<Vec<_>>(),
        "points": points.iter().map(|p| json!({
            "size": p.size,
            "weight": format_weight(p.weight),
            "witness": labels(g, &p.witness),
        })).collect::<Vec<_>>(),
        "wall_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    Ok(pretty(&record))
}

fn cmd_oracle(a: &OracleArgs, echo: &str) -> Result<String, CliError> {
    let l = load(&a.input.input)?;
    let g = &l.graph;
    let f = a.f.as_ref().map(|s| size_function(s, g)).transpose()?;
    let start = Instant::now();
    let report = enumerate(g, f.as_ref()).map_err(contract)?;
    let mut record = json!({
        "command": echo,
        "input": input_json(&l),
        "solver": "oracle",
        "best_per_size": report.best_per_size.iter().enumerate().map(|(i, b)| json!({
            "size": i,
            "weight": format_weight(b.weight),
            "witness": labels(g, &b.witness),
        })).collect::<Vec<_>>(),
        "frontier": report.frontier.iter().map(|p| json!({
            "size": p.size,
            "weight": format_weight(p.weight),
            "witness": labels(g, &p.witness),
        })).collect::<Vec<_>>(),
    });
    if let Some(f) = &f {
        let sol = report.solution_for(f).map_err(contract)?;
        validate(g, f, &sol)?;
        record["f"] = json!(a.f);
        record["solution"] = solution_json(g, &sol);
    }
    record["wall_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    Ok(pretty(&record))
}

fn cmd_gen(a: &GenArgs) -> Result<String, CliError> {
    let g = match a.kind {
        Generator::Gnp => generate::gnp(a.n, a.p, a.seed),
        Generator::Planted => generate::planted(a.n, a.k, a.p_in, a.p_out, a.seed),
    }
    .map_err(input)?;
    let g = if a.weighted {
        generate::with_random_weights(&g, a.seed)
    } else {
        g
    };
    let text = if a.json {
        write_json_graph(&g) + "\n"
    } else {
        write_edge_list(&g)
    };
    match &a.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| input(format!("{path}: {e}")))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// Runs a parsed command; `echo` is the command line recorded in outputs.
pub fn run(cli: &Cli, echo: &str) -> Result<String, CliError> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a, echo),
        Command::Peel(a) => cmd_peel(a, echo),
        Command::Frontier(a) => cmd_frontier(a, echo),
        Command::Oracle(a) => cmd_oracle(a, echo),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => run_bench(a),
    }
}
