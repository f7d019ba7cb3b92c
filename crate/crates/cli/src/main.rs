use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use eutaxy::exactq::Rat;
use eutaxy::graphs;
use eutaxy::steinercs::ExperimentConfig;
use eutaxy_cli::pipeline::{run_pipeline, PipelineOptions};
use eutaxy_cli::{commands, dsl, tables};

#[derive(Parser)]
#[command(
    name = "eutaxy",
    about = "Exact lattices from graph eigenspaces and tight frames",
    after_help = dsl::GRAMMAR_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a graph expression: spectrum, lattices,
    /// certificates, identification.
    GraphLattice(GraphLatticeArgs),
    /// Regenerate the 14-row survey table of graph lattices and diff it.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the Johnson J(n,2) table up to n_max (4..=10).
    Table2 {
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a frame file (exact rational CSV, or numeric with --numeric).
    Frame(FrameArgs),
    /// Steiner-ETF compressed-sensing recovery experiment.
    Cs(CsArgs),
    /// Identify a lattice from a Gram matrix file (stdin with no file).
    IdentifyGram {
        file: Option<String>,
        /// Also dump the minimal vectors as integer coordinate rows.
        #[arg(long)]
        minvecs: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GraphLatticeArgs {
    /// Constructor expression, e.g. "johnson(7,2)".
    expr: String,
    /// Treat EXPR as a graph6 string instead of a constructor expression.
    #[arg(long)]
    graph6: bool,
    /// Restrict to one rational eigenvalue (e.g. "-2" or "3/2").
    #[arg(long, allow_hyphen_values = true)]
    eigenvalue: Option<String>,
    /// Skip shortest-vector enumeration above this rank.
    #[arg(long)]
    max_enumeration_rank: Option<usize>,
    /// Emit the graph6 encoding of the graph alongside the report.
    #[arg(long)]
    emit_graph6: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FrameArgs {
    /// Frame file; stdin when omitted.
    file: Option<String>,
    /// Input is a numeric (decimal) matrix instead of exact rationals.
    #[arg(long)]
    numeric: bool,
    /// Reconstruction precision for numeric input.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CsArgs {
    /// Steiner triple system order (v = 1 or 3 mod 6).
    #[arg(long, default_value_t = 7)]
    sts: usize,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Norm of the additive noise; 0 for noiseless.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    max_amp: i64,
    /// Comma-separated sparsity levels.
    #[arg(long, default_value = "1,2,3,4,5")]
    sparsities: String,
    /// Write the CSV table to this file instead of stdout.
    #[arg(long)]
    csv: Option<String>,
    #[arg(long)]
    json: bool,
}

fn read_input(file: &Option<String>) -> Result<String, String> {
    match file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::GraphLattice(args) => {
            let graph = if args.graph6 {
                graphs::from_graph6(&args.expr).map_err(|e| e.to_string())?
            } else {
                dsl::parse_graph(&args.expr).map_err(|e| e.to_string())?
            };
            let eigenvalue = args
                .eigenvalue
                .map(|s| Rat::from_str(&s).map_err(|e| format!("bad eigenvalue {s:?}: {e}")))
                .transpose()?;
            let opts = PipelineOptions {
                eigenvalue,
                max_enumeration_rank: args.max_enumeration_rank,
            };
            let report = run_pipeline(&graph, &opts);
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if args.emit_graph6 {
                println!("graph6: {}", graphs::to_graph6(&graph).map_err(|e| e.to_string())?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { json } => {
            let report = tables::run_table1();
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Table2 { n_max, json } => {
            let report = tables::run_table2(n_max).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Frame(args) => {
            let text = read_input(&args.file)?;
            let report = if args.numeric {
                let opts = eutaxy::frames::NumericOptions {
                    tolerance: args.tolerance,
                    ..Default::default()
                };
                commands::frame_report_numeric(&text, &opts)?
            } else {
                commands::frame_report_exact(&text).map_err(|e| e.to_string())?
            };
            if args.json {
                println!("{}", serde_json::to_string(&report).expect("serializes"));
            } else {
                println!("{report:#?}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cs(args) => {
            let sparsities: Result<Vec<usize>, _> =
                args.sparsities.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let config = ExperimentConfig {
                sparsities: sparsities.map_err(|e| format!("bad sparsity list: {e}"))?,
                trials: args.trials,
                noise_norm: args.noise,
                seed: args.seed,
                max_amp: args.max_amp,
            };
            let (etf, table) = commands::run_cs(args.sts, &config)?;
            eprintln!(
                "measurement matrix {}x{}, coherence {:.6} (Welch bound {:.6})",
                etf.rows,
                etf.cols,
                etf.coherence,
                etf.welch_bound()
            );
            let csv = table.to_csv();
            match &args.csv {
                Some(path) => std::fs::write(path, &csv).map_err(|e| format!("{path}: {e}"))?,
                None => print!("{csv}"),
            }
            if args.json {
                let rows: Vec<serde_json::Value> = table
                    .rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "sparsity": r.sparsity,
                            "method": r.method,
                            "success_rate": r.success_rate,
                            "mean_error": r.mean_error,
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(rows));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::IdentifyGram { file, minvecs, json } => {
            let text = read_input(&file)?;
            let report = commands::identify_gram_report(&text)?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializes"));
            } else {
                println!("{report:#?}");
            }
            if minvecs {
                let gram = eutaxy::lattices::parse_gram(&text).map_err(|e| e.to_string())?;
                let l = eutaxy::lattices::Lattice::from_gram(gram, "gram-import")
                    .map_err(|e| e.to_string())?;
                print!("{}", eutaxy::lattices::write_minimal_vectors(&l.minimal_vectors().coords));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
