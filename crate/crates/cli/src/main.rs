//! `densub`: dense subgraph discovery from the command line.
//!
//! Exit codes: 0 success, 1 malformed input, 2 infeasible parameters,
//! 3 enumeration over the size limit, 4 an oracle broke its contract.

mod labels;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use densub::bruteforce::DEFAULT_ENUMERATION_LIMIT;
use densub::corpus::random_sparse_graph;
use densub::{
    brute_force_with, chalk, charikar_densest, dalks_2approx, damks_bruteforce_oracle, damks_peel_heuristic,
    dks_via_damks, exact_densest, parametric_family, peel, w_core, DamksOracleSpec, Error, Guarantee, Method,
    Parallelism, Problem, Rational, SubgraphResult, WeightedGraph,
};
use serde_json::json;

use labels::{parse_labeled, Labels};
use report::{Exact, ExactComparison, ResultBody, RunReport, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "densub", version, about = "Dense subgraphs with size constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Edge list to read; standard input when absent or `-`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Require a weight on every edge line.
    #[arg(long, global = true)]
    weighted: bool,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest graph handed to exhaustive search.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    exact_limit: usize,
    /// Also report the exhaustive optimum for comparison.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Densest subgraph of any size.
    Densest {
        #[arg(long, value_enum, default_value_t = DensestMethod::Greedy)]
        method: DensestMethod,
    },
    /// Densest subgraph with at least k vertices.
    Dalks {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = DalksMethod::Greedy)]
        method: DalksMethod,
    },
    /// Densest subgraph with at most k vertices.
    Damks {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = DamksMethod::Peel)]
        method: DamksMethod,
    },
    /// Densest subgraph with exactly k vertices.
    Dks {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = DamksMethod::Peel)]
        oracle: DamksMethod,
    },
    /// The largest subgraph of minimum weighted degree at least W.
    Cores {
        /// Decimal (`2.5`) or fraction (`5/2`).
        #[arg(long)]
        w: String,
    },
    /// Full peeling trace and its densest suffix.
    Peel,
    /// Breakpoints and nested chain of `max W(H) - alpha |H|`.
    Parametric,
    /// Write a seeded random unit-weight edge list to standard output.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DensestMethod {
    Greedy,
    Flow,
    Exact,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DalksMethod {
    Greedy,
    Flow,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DamksMethod {
    Peel,
    Exact,
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Solver(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Solver(Error::Malformed { .. } | Error::Parse { .. }) => 1,
            Failure::Solver(Error::Domain(_)) => 2,
            Failure::Solver(Error::Capacity { .. }) => 3,
            Failure::Solver(Error::ContractViolation(_)) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) => m.clone(),
            Failure::Solver(e) => e.to_string(),
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
            Ok((text, "-".into()))
        }
    }
}

fn parse_threshold(s: &str) -> Result<Rational, Failure> {
    let bad = || Failure::Solver(Error::Domain(format!("cannot read {s:?} as a threshold")));
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let negative = int.starts_with('-');
    if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let whole: i128 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
    let den = 10i128.pow(frac.len() as u32);
    let part: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = whole * den + if negative { -part } else { part };
    Ok(Rational::new(num, den))
}

fn exact_for(
    g: &WeightedGraph,
    problem: Problem,
    common: &Common,
    labels: &Labels,
) -> Result<Option<ExactComparison>, Failure> {
    if !common.exact {
        return Ok(None);
    }
    let answer = brute_force_with(g, problem, common.exact_limit, Parallelism::default())?;
    Ok(Some(ExactComparison {
        problem: problem.name().into(),
        k: problem.k(),
        optimum: answer.optimum.into(),
        witness: labels.labels(answer.witness.iter()),
    }))
}

fn exact_result(g: &WeightedGraph, problem: Problem, limit: usize) -> Result<SubgraphResult, Failure> {
    let answer = brute_force_with(g, problem, limit, Parallelism::default())?;
    Ok(SubgraphResult::new(g, answer.witness, Method::BruteForce, Guarantee::Exact)?)
}

fn rationals(rs: impl IntoIterator<Item = Rational>) -> Vec<Exact> {
    rs.into_iter().map(Exact::from).collect()
}

struct Outcome {
    result: ResultBody,
    trace: Option<serde_json::Value>,
    exact: Option<ExactComparison>,
}

fn solve(command: &Command, g: &WeightedGraph, labels: &Labels, common: &Common) -> Result<Outcome, Failure> {
    let limit = common.exact_limit;
    let plain = |r: SubgraphResult, exact| Outcome {
        result: ResultBody::from_result(&r, labels),
        trace: None,
        exact,
    };
    Ok(match *command {
        Command::Densest { method } => {
            let r = match method {
                DensestMethod::Greedy => charikar_densest(g)?,
                DensestMethod::Flow => exact_densest(g)?,
                DensestMethod::Exact => exact_result(g, Problem::Densest, limit)?,
            };
            plain(r, exact_for(g, Problem::Densest, common, labels)?)
        }
        Command::Dalks { k, method } => {
            let r = match method {
                DalksMethod::Greedy => chalk(g, k)?,
                DalksMethod::Flow => dalks_2approx(g, k)?,
            };
            plain(r, exact_for(g, Problem::Dalks(k), common, labels)?)
        }
        Command::Damks { k, method } => {
            if k == 0 || k > g.n() {
                return Err(Error::Domain(format!("k = {k} is outside 1..={}", g.n())).into());
            }
            let r = match method {
                DamksMethod::Peel => {
                    SubgraphResult::new(g, damks_peel_heuristic(g, k)?, Method::PeelHeuristic, Guarantee::Heuristic)?
                }
                DamksMethod::Exact => SubgraphResult::new(
                    g,
                    damks_bruteforce_oracle(g, k, limit)?,
                    Method::BruteForce,
                    Guarantee::Exact,
                )?,
            };
            plain(r, exact_for(g, Problem::Damks(k), common, labels)?)
        }
        Command::Dks { k, oracle } => {
            let spec = match oracle {
                DamksMethod::Peel => DamksOracleSpec::peel(),
                DamksMethod::Exact => DamksOracleSpec::exact(limit),
            };
            let (r, trace) = dks_via_damks(g, k, &spec)?;
            let rounds: Vec<_> = trace
                .rounds
                .iter()
                .map(|round| {
                    json!({
                        "vertices": labels.labels(round.subgraph.iter()),
                        "size": round.size,
                        "weight": Exact::from(round.weight),
                        "density": Exact::from(round.density),
                    })
                })
                .collect();
            Outcome {
                result: ResultBody::from_result(&r, labels),
                trace: Some(json!({
                    "oracle": spec.name,
                    "rounds": rounds,
                    "prefix_union_sizes": trace.prefix_unions.iter().map(|u| u.len()).collect::<Vec<_>>(),
                    "chosen": trace.chosen,
                })),
                exact: exact_for(g, Problem::Dks(k), common, labels)?,
            }
        }
        Command::Cores { ref w } => {
            let threshold = parse_threshold(w)?;
            let core = w_core(g, threshold);
            Outcome {
                result: ResultBody::from_set(g, &core.core, labels, Method::WCore.name(), &Guarantee::Exact.to_string()),
                trace: Some(json!({ "threshold": Exact::from(core.threshold), "index": core.index })),
                exact: None,
            }
        }
        Command::Peel => {
            let trace = peel(g);
            let r = charikar_densest(g)?;
            Outcome {
                result: ResultBody::from_result(&r, labels),
                trace: Some(json!({
                    "order": labels.labels(trace.order().iter().copied()),
                    "removal_degrees": rationals(
                        trace.removal_degrees_scaled().iter().map(|&r| Rational::new(r as i128, g.scale() as i128))
                    ),
                })),
                exact: exact_for(g, Problem::Densest, common, labels)?,
            }
        }
        Command::Parametric => {
            let family = parametric_family(g)?;
            let r = exact_densest(g)?;
            Outcome {
                result: ResultBody::from_result(&r, labels),
                trace: Some(json!({
                    "breakpoints": rationals(family.breakpoints.iter().copied()),
                    "chain_sizes": family.chain.iter().map(|c| c.size()).collect::<Vec<_>>(),
                    "chain_weights": rationals(family.chain.iter().map(|c| c.weight)),
                })),
                exact: exact_for(g, Problem::Densest, common, labels)?,
            }
        }
        Command::Generate { .. } => unreachable!("handled before reading input"),
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    let common = &cli.common;
    if let Command::Generate { n, m } = cli.command {
        return Ok(random_sparse_graph(n, m, common.seed)?.to_edge_list());
    }
    let (text, input) = read_input(common.input.as_ref())?;
    let (g, labels) = parse_labeled(&text, common.weighted)?;
    let start = Instant::now();
    let outcome = solve(&cli.command, &g, &labels, common)?;
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let command = match cli.command {
        Command::Densest { .. } => "densest",
        Command::Dalks { .. } => "dalks",
        Command::Damks { .. } => "damks",
        Command::Dks { .. } => "dks",
        Command::Cores { .. } => "cores",
        Command::Peel => "peel",
        Command::Parametric => "parametric",
        Command::Generate { .. } => "generate",
    };
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        command: command.into(),
        input,
        n: g.n(),
        m: g.m(),
        total_weight: g.total_weight().into(),
        result: outcome.result,
        wall_time_ms,
        trace: outcome.trace,
        exact: outcome.exact,
    };
    Ok(if common.json { report.to_json() + "\n" } else { report.to_text() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("densub: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(parse_threshold("2.5").unwrap(), Rational::new(5, 2));
        assert_eq!(parse_threshold("5/2").unwrap(), Rational::new(5, 2));
        assert_eq!(parse_threshold("3").unwrap(), Rational::from(3));
        assert_eq!(parse_threshold(".25").unwrap(), Rational::new(1, 4));
        assert_eq!(parse_threshold("-0.5").unwrap(), Rational::new(-1, 2));
        assert!(parse_threshold("x").is_err());
        assert!(parse_threshold("1/0").is_err());
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
