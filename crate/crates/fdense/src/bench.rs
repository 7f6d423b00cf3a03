//! Benchmark harness: generated instances x size functions x solvers, one CSV row each.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, ValueEnum};
use fdense_core::convex::solve_convex;
use fdense_core::flow::{solve_unweighted_exact, solve_weighted_approx};
use fdense_core::lp::solve_concave_exact_lp;
use fdense_core::oracle::enumerate;
use fdense_core::peel::{best_suffix, peel};
use fdense_core::{generate, Graph, Solution};
use rayon::prelude::*;

use crate::cli::{validate, CliError, Generator, DEFAULT_EPSILON};
use crate::fspec::{parse_size_function, with_env_tol};

pub const CSV_HEADER: &str = "instance,n,m,family,solver,value,oracle,ratio,ms";

/// Largest n for which rows carry the enumerated optimum.
pub const ORACLE_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchSolver {
    Peel,
    /// Exact search on unweighted graphs, (1+eps) search otherwise.
    Flow,
    Lp,
    Convex,
    Oracle,
}

impl BenchSolver {
    fn name(self) -> &'static str {
        match self {
            BenchSolver::Peel => "peel",
            BenchSolver::Flow => "flow",
            BenchSolver::Lp => "lp",
            BenchSolver::Convex => "convex",
            BenchSolver::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long = "gen", value_enum, default_value_t = Generator::Gnp)]
    pub generator: Generator,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.4)]
    pub p: f64,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[arg(long, default_value_t = 0.9)]
    pub p_in: f64,
    #[arg(long, default_value_t = 0.1)]
    pub p_out: f64,
    /// Seeds as a comma list with optional ranges, e.g. `1,2,10..20`; empty for none.
    #[arg(long, default_value = "0")]
    pub seeds: String,
    /// Size functions; repeat the flag for several.
    #[arg(long = "f", default_values_t = vec!["sqrt".to_string()])]
    pub families: Vec<String>,
    /// Solvers; repeat the flag for several.
    #[arg(long = "solver", value_enum, default_values_t = vec![BenchSolver::Peel])]
    pub solvers: Vec<BenchSolver>,
    #[arg(long)]
    pub weighted: bool,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Brute-force depth of the convex solver.
    #[arg(long = "brute-k", default_value_t = 2)]
    pub brute_k: usize,
}

/// Expands `1,2,10..20` (half-open ranges) into a seed list.
pub fn parse_seeds(spec: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || format!("bad seed '{part}'");
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a.parse().map_err(|_| bad())?;
                let b: u64 = b.parse().map_err(|_| bad())?;
                out.extend(a..b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn instance(a: &BenchArgs, seed: u64) -> Result<(String, Graph), CliError> {
    let (name, g) = match a.generator {
        Generator::Gnp => (
            format!("gnp-{}-{}-s{seed}", a.n, a.p),
            generate::gnp(a.n, a.p, seed),
        ),
        Generator::Planted => (
            format!("planted-{}-{}-{}-{}-s{seed}", a.n, a.k, a.p_in, a.p_out),
            generate::planted(a.n, a.k, a.p_in, a.p_out, seed),
        ),
    };
    let g = g.map_err(|e| CliError::Input(e.to_string()))?;
    let g = if a.weighted {
        generate::with_random_weights(&g, seed)
    } else {
        g
    };
    Ok((name, g))
}

fn solve(
    a: &BenchArgs,
    solver: BenchSolver,
    g: &Graph,
    f: &fdense_core::SizeFunction,
) -> Result<Solution, String> {
    let r = match solver {
        BenchSolver::Peel => best_suffix(&peel(g), f),
        BenchSolver::Flow if g.is_unweighted() => solve_unweighted_exact(g, f),
        BenchSolver::Flow => solve_weighted_approx(g, f, a.epsilon),
        BenchSolver::Lp => solve_concave_exact_lp(g, f),
        BenchSolver::Convex => solve_convex(g, f, a.brute_k.min(g.n())),
        BenchSolver::Oracle => enumerate(g, None).and_then(|r| r.solution_for(f)),
    };
    r.map_err(|e| e.to_string())
}

fn rows_for(a: &BenchArgs, seed: u64) -> Result<String, CliError> {
    let (name, g) = instance(a, seed)?;
    let report = if g.n() <= ORACLE_LIMIT {
        enumerate(&g, None).ok()
    } else {
        None
    };
    let mut out = String::new();
    for spec in &a.families {
        let f = parse_size_function(spec, &g)
            .and_then(with_env_tol)
            .map_err(CliError::Input)?;
        let oracle = report
            .as_ref()
            .and_then(|r| r.optimum_for(&f).ok())
            .map(|o| o.value);
        for &solver in &a.solvers {
            let start = Instant::now();
            let result = solve(a, solver, &g, &f);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let (value, ratio) = match &result {
                Ok(sol) => {
                    validate(&g, &f, sol)?;
                    let ratio = oracle.map(|o| o / sol.density);
                    (
                        sol.density.to_string(),
                        ratio.map(|r| r.to_string()).unwrap_or_default(),
                    )
                }
                Err(e) => {
                    eprintln!("{name} {spec} {}: {e}", solver.name());
                    (String::new(), String::new())
                }
            };
            let _ = writeln!(
                out,
                "{name},{},{},{spec},{},{value},{},{ratio},{ms:.3}",
                g.n(),
                g.m(),
                solver.name(),
                oracle.map(|o| o.to_string()).unwrap_or_default(),
            );
        }
    }
    Ok(out)
}

/// CSV with one row per (seed, family, solver), in input order.
pub fn run_bench(a: &BenchArgs) -> Result<String, CliError> {
    let seeds = parse_seeds(&a.seeds).map_err(CliError::Input)?;
    if a.families.iter().any(|f| f.contains(',')) {
        return Err(CliError::Input(
            "family specs with commas cannot go in CSV rows".into(),
        ));
    }
    let chunks: Vec<Result<String, CliError>> = seeds.par_iter().map(|&s| rows_for(a, s)).collect();
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for c in chunks {
        out.push_str(&c?);
    }
    Ok(out)
}
