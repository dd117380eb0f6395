//! Command-line surface over the uniharary library.
//!
//! Data output goes to stdout and is byte-identical across runs;
//! diagnostics go to stderr. Exit codes: 0 on success, 1 on runtime errors
//! or failed verification, 2 on usage errors.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::process::ExitCode;
use uniharary::enumerate::enumerate_unicyclic;
use uniharary::family::{make_cp, make_cs, make_cycle};
use uniharary::format::{emit_edge_list, parse_edge_list, parse_graph6};
use uniharary::graph::Graph;
use uniharary::indices::{classical_indices, cp3_closed_form, cs3_closed_form, cycle_closed_form};
use uniharary::report;
use uniharary::transform::{maximize_chain, minimize_chain, TransformTrace};
use uniharary::{additively_weighted_harary, verify_extremal};

#[derive(Parser)]
#[command(
    name = "uniharary",
    version,
    about = "Exact additively weighted Harary index computations on unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Cs,
    Cp,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedForm {
    Cs3,
    Cp3,
    Cycle,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H_A, Harary and Wiener indices of a graph read from a file
    /// (or stdin with `-`)
    Index {
        /// Input path, `-` for stdin
        input: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[arg(long)]
        json: bool,
    },
    /// Print a family graph (cs, cp or cycle) as an edge list
    Family {
        kind: FamilyKind,
        /// Cycle length k
        k: usize,
        /// Number of pendant vertices (0 for cycle)
        pendants: usize,
    },
    /// Evaluate a closed form exactly
    ClosedForm {
        form: ClosedForm,
        n: usize,
    },
    /// List all unicyclic isomorphism classes on n vertices
    Enumerate {
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively verify the extremal bounds on n vertices
    Verify {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Transform a unicyclic graph to CS_{3,n-3} by index-increasing steps
    Maximize {
        /// Input path, `-` for stdin
        input: String,
        /// List every rewrite step
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Transform a unicyclic graph (n >= 5) to CP_{3,n-3} by
    /// index-decreasing steps
    Minimize {
        input: String,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
}

fn read_graph(input: &str, format: GraphFormat) -> Result<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let graph = match format {
        GraphFormat::Edgelist => parse_edge_list(&text)?,
        GraphFormat::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let line = lines.next().context("empty graph6 input")?;
            if lines.next().is_some() {
                bail!("expected a single graph6 line");
            }
            parse_graph6(line)?
        }
    };
    Ok(graph)
}

fn chain_output(trace: &TransformTrace, with_steps: bool, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(&report::trace_json(trace)).expect("valid JSON") + "\n"
    } else {
        report::trace_text(trace, with_steps)
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Index { input, format, json } => {
            let g = read_graph(&input, format)?;
            let indices = classical_indices(&g)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::index_json(&g, &indices))
                        .expect("valid JSON")
                );
            } else {
                print!("{}", report::index_text(&indices));
            }
        }
        Command::Family { kind, k, pendants } => {
            let g = match kind {
                FamilyKind::Cs => make_cs(k, pendants)?,
                FamilyKind::Cp => make_cp(k, pendants)?,
                FamilyKind::Cycle => {
                    if pendants != 0 {
                        bail!("a pure cycle has 0 pendant vertices, got {pendants}");
                    }
                    make_cycle(k)?
                }
            };
            print!("{}", emit_edge_list(&g));
        }
        Command::ClosedForm { form, n } => {
            let value = match form {
                ClosedForm::Cs3 => cs3_closed_form(n)?,
                ClosedForm::Cp3 => cp3_closed_form(n)?,
                ClosedForm::Cycle => cycle_closed_form(n)?,
            };
            println!("{value}");
        }
        Command::Enumerate { n, count_only, json } => {
            let reps = enumerate_unicyclic(n)?;
            if count_only {
                println!("{}", reps.len());
                return Ok(true);
            }
            let rows: Vec<(Graph, uniharary::Rational)> = reps
                .into_iter()
                .map(|g| {
                    let value = additively_weighted_harary(&g)
                        .expect("enumerated classes are connected");
                    (g, value)
                })
                .collect();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::enumeration_json(n, &rows))
                        .expect("valid JSON")
                );
            } else {
                print!("{}", report::enumeration_text(n, &rows));
            }
        }
        Command::Verify { n, json } => {
            let verdict = verify_extremal(n)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::verify_json(&verdict))
                        .expect("valid JSON")
                );
            } else {
                print!("{}", report::verify_text(&verdict));
            }
            return Ok(verdict.all_asserted_passed());
        }
        Command::Maximize { input, trace, json } => {
            let g = read_graph(&input, GraphFormat::Edgelist)?;
            let result = maximize_chain(&g)?;
            print!("{}", chain_output(&result, trace, json));
        }
        Command::Minimize { input, trace, json } => {
            let g = read_graph(&input, GraphFormat::Edgelist)?;
            let result = minimize_chain(&g)?;
            print!("{}", chain_output(&result, trace, json));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
