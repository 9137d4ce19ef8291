mod input;
mod record;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgAction, Args, Parser, Subcommand};
use isdd_lab::bounds::{parse_bound_list, BoundInput};
use isdd_lab::enumerate::{run_sweep, run_sweep_stream, SweepConfig, SweepReport, MAX_TREE_ORDER};
use isdd_lab::{classify, index_vector, BoundId, BoundOutcome};

use input::{Format, Item};
use record::{ClassRecord, ErrorRecord, IndexRecord, OutputRecord};

const EXIT_OPERATIONAL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "isdd-lab", version, about = "Degree-based indices, their bounds, and exhaustive checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the index vector of each input graph.
    Compute(InputArgs),
    /// Evaluate bounds on each input graph.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// `all` or a comma-separated list of bound ids.
        #[arg(long, default_value = "all")]
        bounds: String,
    },
    /// Report family memberships of each input graph.
    Classify(InputArgs),
    /// Check bounds over every small graph, or over a graph6 stream.
    Sweep(SweepArgs),
    /// Shorthand for `sweep --trees --bounds TREE_EDGE`.
    Trees {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = MAX_TREE_ORDER)]
        n_max: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Emit one JSON object per line.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Sweep labeled trees instead of all labeled graphs.
    #[arg(long, conflicts_with = "stdin_graph6")]
    trees: bool,
    /// Skip disconnected graphs.
    #[arg(long, action = ArgAction::Set, default_value_t = true)]
    connected: bool,
    /// `all` or a comma-separated list of bound ids.
    #[arg(long)]
    bounds: Option<String>,
    /// Read graphs as graph6 lines from `--input` instead of enumerating.
    #[arg(long)]
    stdin_graph6: bool,
    /// Source for `--stdin-graph6`; `-` is stdin.
    #[arg(long, default_value = "-", requires = "stdin_graph6")]
    input: PathBuf,
    /// Check one representative per isomorphism class.
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    max_graphs: Option<u64>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, env = "ISDD_LAB_JOBS")]
    jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_OPERATIONAL)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute(input) => per_graph(&input, |g, id| OutputRecord {
            input_id: id,
            index_vector: Some(IndexRecord::from(&index_vector(g))),
            bounds: None,
            classes: None,
        }),
        Command::Check { input, bounds } => {
            let ids = parse_bound_list(&bounds)?;
            per_graph(&input, |g, id| OutputRecord {
                input_id: id,
                index_vector: None,
                bounds: Some(BoundInput::new(g).evaluate_many(&ids)),
                classes: None,
            })
        }
        Command::Classify(input) => per_graph(&input, |g, id| {
            let label = classify(g);
            OutputRecord {
                input_id: id,
                index_vector: None,
                bounds: None,
                classes: Some(ClassRecord { memberships: label.memberships(), label }),
            }
        }),
        Command::Sweep(args) => sweep(args),
        Command::Trees { n_min, n_max, run } => {
            let cfg = SweepConfig::trees(n_min, n_max);
            cfg.validate()?;
            execute_sweep(&cfg, None, &run)
        }
    }
}

fn violated(record: &OutputRecord) -> bool {
    record.bounds.iter().flatten().any(|o| matches!(o, BoundOutcome::Evaluated(r) if !r.holds))
}

/// Streams one record per input graph to stdout and folds the exit code:
/// any violation gives 3, otherwise any unreadable graph gives 2.
fn per_graph(args: &InputArgs, make: impl Fn(&isdd_lab::Graph, String) -> OutputRecord) -> Result<u8> {
    let items = input::read_items(&args.input, args.format)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let (mut parse_failed, mut any_violation) = (false, false);
    for Item { input_id, graph } in items {
        match graph {
            Ok(g) => {
                let record = make(&g, input_id);
                any_violation |= violated(&record);
                if args.json {
                    serde_json::to_writer(&mut out, &record)?;
                    writeln!(out)?;
                } else {
                    writeln!(out, "{}", record.human())?;
                }
            }
            Err(error) => {
                parse_failed = true;
                if args.json {
                    serde_json::to_writer(&mut out, &ErrorRecord { input_id: &input_id, error: &error })?;
                    writeln!(out)?;
                } else {
                    eprintln!("{input_id}: {error}");
                }
            }
        }
    }
    out.flush()?;
    Ok(if any_violation {
        EXIT_VIOLATION
    } else if parse_failed {
        EXIT_PARSE
    } else {
        0
    })
}

fn sweep(args: SweepArgs) -> Result<u8> {
    let mut cfg = if args.stdin_graph6 {
        SweepConfig::stream(args.n_min.unwrap_or(0), args.n_max.unwrap_or(isdd_lab::graph6::MAX_ORDER))
    } else if args.trees {
        SweepConfig::trees(args.n_min.unwrap_or(4), args.n_max.unwrap_or(MAX_TREE_ORDER))
    } else {
        SweepConfig::labeled(args.n_min.unwrap_or(1), args.n_max.unwrap_or(7))
    };
    if let Some(list) = &args.bounds {
        let ids: Vec<BoundId> = parse_bound_list(list)?;
        cfg = cfg.with_bounds(&ids);
    }
    cfg.connected_only = args.connected;
    cfg.dedup = args.dedup;
    cfg.max_graphs = args.max_graphs;
    cfg.validate()?;
    let stream = if args.stdin_graph6 { Some(input::open(&args.input)?) } else { None };
    execute_sweep(&cfg, stream, &args.run)
}

fn execute_sweep(cfg: &SweepConfig, stream: Option<Box<dyn io::BufRead + Send>>, run: &RunArgs) -> Result<u8> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = run.jobs {
        anyhow::ensure!(jobs >= 1, "--jobs must be at least 1");
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().context("cannot start worker threads")?;
    let mut report: SweepReport = pool.install(|| match stream {
        Some(reader) => run_sweep_stream(cfg, reader),
        None => run_sweep(cfg),
    })?;
    if !run.timing {
        report.wall_time_secs = None;
    }

    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    match &run.report {
        Some(path) => std::fs::write(path, &json).with_context(|| format!("cannot write {}", path.display()))?,
        None => io::stdout().write_all(json.as_bytes())?,
    }
    eprintln!(
        "checked {} of {} graphs: {} violations, {} equality discrepancies, {} tight margins, {} parse errors",
        report.graphs_checked,
        report.graphs_seen,
        report.violations.len(),
        report.equality_discrepancies.len(),
        report.tight_margins.len(),
        report.parse_errors.len(),
    );
    Ok(if !report.violations.is_empty() {
        EXIT_VIOLATION
    } else if !report.parse_errors.is_empty() {
        EXIT_PARSE
    } else {
        0
    })
}
