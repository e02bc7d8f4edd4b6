use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliquerep::artifact::{
    cliques_to_dot, representation_from_json, representation_to_dot, CliqueListArtifact,
};
use cliquerep::format::{parse_edge_list, parse_graph6};
use cliquerep::oracle::{
    exhaustive_bound_check, min_clique_partition, min_distinct_representation,
    strategies_with_seeds, DEFAULT_SEEDS,
};
use cliquerep::representation::{validate_representation, RepresentationViolation};
use cliquerep::{
    augment_to_distinct, distinctness, erdos_partition, greedy_decomposition,
    representation_from_greedy, representation_from_partition, validate_greedy, validate_partition,
    Graph, GreedyStrategy, SetRepresentation,
};

const THREADS_VAR: &str = "CLIQUEREP_THREADS";

#[derive(Parser)]
#[command(
    name = "cliquerep",
    version,
    about = "Clique partitions and set representations of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition the edges of a graph into cliques.
    Partition {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        method: MethodArgs,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Build a set representation from a clique partition.
    Represent {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        method: MethodArgs,
        /// Give every duplicated vertex but one a fresh private element.
        #[arg(long)]
        augment: bool,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Check an artifact against a graph.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[command(flatten)]
        input: GraphInput,
        /// JSON artifact, or `-` for standard input.
        artifact: String,
        /// Also require pairwise distinct vertex sets.
        #[arg(long)]
        require_distinct: bool,
    },
    /// Exact minimum by exhaustive search (small graphs only).
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check the bounds over every labelled graph on n vertices.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Seeds for the random strategies, run after the lexicographic one.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<u64>>,
    },
}

#[derive(clap::Args)]
struct GraphInput {
    /// Graph file, or `-` for standard input.
    graph: String,
    /// Defaults to the file extension (.g6, .el), then to the content.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(clap::Args)]
struct MethodArgs {
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long, value_enum, default_value_t = StrategyKind::Lex)]
    strategy: StrategyKind,
    #[arg(long, required_if_eq("strategy", "random"))]
    seed: Option<u64>,
}

impl MethodArgs {
    fn strategy(&self) -> anyhow::Result<GreedyStrategy> {
        match (self.strategy, self.seed) {
            (StrategyKind::Lex, None) => Ok(GreedyStrategy::Lexicographic),
            (StrategyKind::Lex, Some(_)) => bail!("--seed needs --strategy random"),
            (StrategyKind::Random, Some(seed)) => Ok(GreedyStrategy::SeededRandom { seed }),
            (StrategyKind::Random, None) => bail!("--strategy random needs --seed"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Greedy,
    Erdos,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Lex,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Partition,
    Representation,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Cp,
    Omega,
}

/// Reads each path once; `-` may be used by at most one argument.
struct Inputs {
    stdin_taken: bool,
}

impl Inputs {
    fn read(&mut self, path: &str) -> anyhow::Result<String> {
        if path == "-" {
            if self.stdin_taken {
                bail!("standard input can only be read once");
            }
            self.stdin_taken = true;
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            return Ok(text);
        }
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }

    fn graph(&mut self, input: &GraphInput) -> anyhow::Result<Graph> {
        let text = self.read(&input.graph)?;
        let format = input
            .format
            .unwrap_or_else(|| infer_format(&input.graph, &text));
        let parsed = match format {
            Format::Graph6 => parse_graph6(&text),
            Format::Edgelist => parse_edge_list(&text),
        };
        parsed.with_context(|| format!("parsing {}", input.graph))
    }
}

fn infer_format(path: &str, text: &str) -> Format {
    match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("g6") => return Format::Graph6,
        Some("el") => return Format::Edgelist,
        _ => {}
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("n=") || l.starts_with("n =") => Format::Edgelist,
        _ => Format::Graph6,
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn report(violations: Vec<Value>, extra: Option<(&str, Value)>) -> (String, bool) {
    let valid = violations.is_empty();
    let mut doc = json!({ "valid": valid, "violations": violations });
    if let Some((key, value)) = extra {
        doc[key] = value;
    }
    (to_json(&doc), valid)
}

fn values<T: serde::Serialize>(items: &[T]) -> Vec<Value> {
    items
        .iter()
        .map(|v| serde_json::to_value(v).expect("plain data serializes"))
        .collect()
}

fn duplicate_violations(r: &SetRepresentation) -> Vec<Value> {
    let d = distinctness(r);
    let dups: Vec<_> = d
        .duplicate_classes()
        .map(|c| RepresentationViolation::DuplicateClass {
            vertices: c.clone(),
        })
        .collect();
    values(&dups)
}

/// Returns the text to print and whether the run found nothing wrong.
fn run(cli: Cli) -> anyhow::Result<(String, bool)> {
    let mut inputs = Inputs { stdin_taken: false };
    match cli.command {
        Command::Partition {
            input,
            method,
            output,
        } => {
            let g = inputs.graph(&input)?;
            let artifact = match method.method {
                Method::Greedy => {
                    CliqueListArtifact::from(&greedy_decomposition(&g, method.strategy()?))
                }
                Method::Erdos => CliqueListArtifact::from(&erdos_partition(&g)),
            };
            let text = match output {
                Output::Json => to_json(&artifact),
                Output::Dot => cliques_to_dot(&g, &artifact.cliques),
            };
            Ok((text, true))
        }
        Command::Represent {
            input,
            method,
            augment,
            output,
        } => {
            let g = inputs.graph(&input)?;
            let mut r = match method.method {
                Method::Greedy => {
                    representation_from_greedy(&g, &greedy_decomposition(&g, method.strategy()?))?
                }
                Method::Erdos => representation_from_partition(&g, &erdos_partition(&g))?,
            };
            if augment {
                r = augment_to_distinct(&r);
            }
            let text = match output {
                Output::Json => to_json(&r),
                Output::Dot => representation_to_dot(&g, &r),
            };
            Ok((text, true))
        }
        Command::Verify {
            kind,
            input,
            artifact,
            require_distinct,
        } => {
            let g = inputs.graph(&input)?;
            let text = inputs.read(&artifact)?;
            let out = match kind {
                VerifyKind::Partition | VerifyKind::Greedy => {
                    let a = CliqueListArtifact::from_json(&text)
                        .with_context(|| format!("parsing {artifact}"))?;
                    let mut violations = match kind {
                        VerifyKind::Partition => {
                            values(&validate_partition(&g, &a.clone().into_partition()))
                        }
                        _ => values(&validate_greedy(&g, &a.clone().into_greedy())),
                    };
                    if require_distinct && violations.is_empty() {
                        let r = representation_from_partition(&g, &a.into_partition())?;
                        violations.extend(duplicate_violations(&r));
                    }
                    report(violations, None)
                }
                VerifyKind::Representation => {
                    let r = representation_from_json(&text)
                        .with_context(|| format!("parsing {artifact}"))?;
                    let rep = validate_representation(&g, &r, require_distinct);
                    report(
                        values(&rep.violations),
                        Some(("collapsed", json!(rep.collapsed))),
                    )
                }
            };
            Ok(out)
        }
        Command::Oracle { kind, input } => {
            let g = inputs.graph(&input)?;
            let doc = match kind {
                OracleKind::Cp => {
                    let (value, p) = min_clique_partition(&g)?;
                    json!({ "kind": "cp", "value": value, "witness": CliqueListArtifact::from(&p) })
                }
                OracleKind::Omega => {
                    let (value, r) = min_distinct_representation(&g)?;
                    json!({ "kind": "omega", "value": value, "witness": r })
                }
            };
            Ok((to_json(&doc), true))
        }
        Command::Sweep { n, seeds } => {
            let strategies = strategies_with_seeds(seeds.as_deref().unwrap_or(&DEFAULT_SEEDS));
            let r = exhaustive_bound_check(n, &strategies)?;
            Ok((to_json(&r), r.is_clean()))
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = match raw.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => bail!("{THREADS_VAR} must be a positive integer, got {raw:?}"),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring worker threads")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok((text, clean)) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("cliquerep: {e:#}");
            ExitCode::from(2)
        }
    }
}
