//! Thin command-line front end; all real work lives in the library.
//!
//! Exit codes: 0 all checks verified, 1 a verified inequality was violated
//! (a counterexample file is written first), 2 input or usage error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lambda_lab::cycles::cycle_space_rank_check;
use lambda_lab::error::Error;
use lambda_lab::graph::{Graph, VertexId};
use lambda_lab::graph6::{parse_graph6_lines, write_graph6};
use lambda_lab::minors::hadwiger_number;
use lambda_lab::report::{
    analyze, sweep_exhaustive, sweep_random, to_csv, to_json, AnalyzeOptions, RunOutcome,
};
use lambda_lab::structure::{cycle_lift, decompose_at_triangle, separating_triangles};
use lambda_lab::theorem::{certify, verify_certificate};

#[derive(Parser)]
#[command(
    name = "lambda-lab",
    about = "Induced nonseparating cycles, the graph characteristic, and Hadwiger numbers of 3-connected graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock metadata (reports stop being byte-stable).
    #[arg(long)]
    timestamps: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graph6 input: n, m, h, |C|, lambda, and the inequality verdict per graph.
    Analyze {
        /// graph6 file, or `-` for stdin.
        #[arg(default_value = "-")]
        file: String,
        /// Attach a verified reduction certificate to each record.
        #[arg(long)]
        certify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the inequality over an exhaustive catalog or a random family.
    Sweep {
        /// Every labeled 3-connected graph on N vertices (4..=7; 8 needs --large).
        #[arg(long, value_name = "N", conflicts_with = "random")]
        exhaustive: Option<usize>,
        /// Random mode: N M COUNT SEED.
        #[arg(long, num_args = 4, value_names = ["N", "M", "COUNT", "SEED"])]
        random: Option<Vec<u64>>,
        /// Attach certificates to every record.
        #[arg(long)]
        certify: bool,
        /// Allow the long-running n = 8 exhaustive sweep.
        #[arg(long)]
        large: bool,
        /// Keep only the summary, dropping per-graph records.
        #[arg(long)]
        summary_only: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build and verify reduction certificates for graph6 input.
    Certify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Lift the nonseparating induced cycles of G/e back into G.
    Psi {
        #[arg(default_value = "-")]
        file: String,
        /// Edge endpoints U V in G.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
    },
    /// List separating triangles and the clique-sum factors at the first one.
    Decompose {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Hadwiger number with a validated branch-set witness per graph.
    Hadwiger {
        #[arg(default_value = "-")]
        file: String,
    },
}

/// Prints to stdout, treating a closed pipe as a normal exit condition.
fn emit(text: &str) -> Result<(), String> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

fn read_input(file: &str) -> std::io::Result<String> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(file)
    }
}

fn load_graphs(file: &str) -> Result<Vec<Graph>, String> {
    let text = read_input(file).map_err(|e| format!("cannot read {file}: {e}"))?;
    let graphs = parse_graph6_lines(&text).map_err(|(line, e)| format!("line {line}: {e}"))?;
    if graphs.is_empty() {
        return Err(format!("{file}: no graphs in input"));
    }
    Ok(graphs)
}

const COUNTEREXAMPLE_FILE: &str = "counterexamples.g6";

fn counterexample_path(out: &Option<PathBuf>) -> PathBuf {
    match out {
        Some(p) => p
            .parent()
            .unwrap_or_else(|| Path::new("."))
            .join(COUNTEREXAMPLE_FILE),
        None => PathBuf::from(COUNTEREXAMPLE_FILE),
    }
}

/// Renders the outcome, writes counterexamples if any, and picks the exit
/// code: 1 when a violation was found, 0 otherwise.
fn emit_outcome(outcome: &RunOutcome, format: Format, output: &OutputArgs) -> Result<u8, String> {
    let rendered = match format {
        Format::Json => to_json(&outcome.report).map_err(|e| e.to_string())?,
        Format::Csv => to_csv(&outcome.report),
    };
    match &output.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => emit(&rendered)?,
    }
    if outcome.counterexamples.is_empty() {
        return Ok(0);
    }
    let path = counterexample_path(&output.out);
    let body = outcome.counterexamples.join("\n") + "\n";
    std::fs::write(&path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    eprintln!(
        "inequality violated on {} graph(s); counterexamples written to {}",
        outcome.counterexamples.len(),
        path.display()
    );
    Ok(1)
}

fn sorted_sets(sets: &[Vec<VertexId>]) -> Vec<Vec<usize>> {
    sets.iter()
        .map(|s| s.iter().map(|v| v.index()).collect())
        .collect()
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            file,
            certify,
            format,
            output,
        } => {
            let graphs = load_graphs(&file)?;
            let opts = AnalyzeOptions {
                certify,
                timestamps: output.timestamps,
                summary_only: false,
            };
            let outcome = analyze(&graphs, &opts).map_err(|e| e.to_string())?;
            emit_outcome(&outcome, format, &output)
        }
        Command::Sweep {
            exhaustive,
            random,
            certify,
            large,
            summary_only,
            output,
        } => {
            let opts = AnalyzeOptions {
                certify,
                timestamps: output.timestamps,
                summary_only,
            };
            let outcome = match (exhaustive, random) {
                (Some(n), None) => {
                    if n == 8 && !large {
                        return Err(
                            "the n = 8 sweep visits 2^28 edge sets; pass --large to run it".into()
                        );
                    }
                    sweep_exhaustive(n, &opts).map_err(|e| e.to_string())?
                }
                (None, Some(params)) => {
                    let [n, m, count, seed]: [u64; 4] = params
                        .try_into()
                        .map_err(|_| "--random needs N M COUNT SEED".to_string())?;
                    sweep_random(n as usize, m as usize, count as usize, seed, &opts)
                        .map_err(|e| e.to_string())?
                }
                _ => return Err("pass exactly one of --exhaustive or --random".into()),
            };
            emit_outcome(&outcome, Format::Json, &output)
        }
        Command::Certify { file } => {
            let graphs = load_graphs(&file)?;
            let mut entries = Vec::new();
            let mut violation = false;
            for g in &graphs {
                let g6 = write_graph6(g);
                match certify(g) {
                    Ok(cert) => {
                        let verification = verify_certificate(g, &cert).map_err(|e| e.to_string())?;
                        entries.push(serde_json::json!({
                            "graph6": g6,
                            "certificate": cert,
                            "verified": verification.valid,
                        }));
                        if !verification.valid {
                            violation = true;
                        }
                    }
                    Err(Error::NotThreeConnected) => {
                        entries.push(serde_json::json!({
                            "graph6": g6,
                            "skipped": "not-3-connected",
                        }));
                    }
                    Err(e @ (Error::TheoremViolation { .. } | Error::NoContractibleEdge | Error::LiftValidation { .. })) => {
                        entries.push(serde_json::json!({
                            "graph6": g6,
                            "violation": e.to_string(),
                        }));
                        violation = true;
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
            emit(&serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())?)?;
            Ok(if violation { 1 } else { 0 })
        }
        Command::Psi { file, edge } => {
            let graphs = load_graphs(&file)?;
            let g = &graphs[0];
            let [u, v]: [usize; 2] = edge
                .try_into()
                .map_err(|_| "--edge needs two endpoints".to_string())?;
            let e = g.edge(u, v).map_err(|e| e.to_string())?;
            match cycle_lift(g, e) {
                Ok(lift) => {
                    let entries: Vec<serde_json::Value> = lift
                        .iter()
                        .map(|(from, to)| {
                            serde_json::json!({
                                "from": from.sorted_indices(),
                                "to": to.sorted_indices(),
                            })
                        })
                        .collect();
                    emit(
                        &serde_json::to_string_pretty(&serde_json::json!({
                            "graph6": write_graph6(g),
                            "edge": [u, v],
                            "merged_vertex": lift.merged().index(),
                            "entries": entries,
                            "count": lift.len(),
                        }))
                        .map_err(|e| e.to_string())?,
                    )?;
                    Ok(0)
                }
                Err(e @ Error::LiftValidation { .. }) => {
                    eprintln!("theorem violation: {e}");
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Decompose { file } => {
            let graphs = load_graphs(&file)?;
            let g = &graphs[0];
            let triangles = separating_triangles(g);
            let decomposition = triangles.first().map(|&t| {
                let d = decompose_at_triangle(g, t).expect("listed triangle separates");
                let factors: Vec<serde_json::Value> = d
                    .factors
                    .iter()
                    .map(|f| {
                        serde_json::json!({
                            "graph6": write_graph6(&f.graph),
                            "vertex_map": f.vertex_map.iter().map(|v| v.index()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                serde_json::json!({
                    "triangle": t.map(|v| v.index()),
                    "factors": factors,
                })
            });
            emit(
                &serde_json::to_string_pretty(&serde_json::json!({
                    "graph6": write_graph6(g),
                    "separating_triangles": triangles
                        .iter()
                        .map(|t| t.map(|v| v.index()))
                        .collect::<Vec<_>>(),
                    "decomposition": decomposition,
                }))
                .map_err(|e| e.to_string())?,
            )?;
            Ok(0)
        }
        Command::Hadwiger { file } => {
            let graphs = load_graphs(&file)?;
            let mut entries = Vec::new();
            for g in &graphs {
                let res = hadwiger_number(g).map_err(|e| e.to_string())?;
                let spans = if g.vertex_count() >= 1 && lambda_lab::is_connected(g) {
                    cycle_space_rank_check(g).ok().map(|r| r.spans)
                } else {
                    None
                };
                entries.push(serde_json::json!({
                    "graph6": write_graph6(g),
                    "h": res.h,
                    "witness": sorted_sets(res.witness.branch_sets()),
                    "cycle_space_spanned": spans,
                }));
            }
            emit(&serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
