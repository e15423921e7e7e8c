use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use brickcheck::analysis::{analyze, AnalysisOptions, SolidRequest};
use brickcheck::constructions::{build_family, build_g0, wheel};
use brickcheck::graph::{read_graph, write_dot, write_graph};
use brickcheck::verifier::{theorem_csv, theorem_markdown, theorem_rows, verify_claims};
use brickcheck::{Error, MultiGraph, VertexId};

#[derive(Parser)]
#[command(
    name = "brickcheck",
    version,
    about = "Perfect matchings, bricks and the extremal-brick family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the family for even orders in [min, max] and check every row.
    VerifyTheorem {
        #[arg(long, default_value_t = 18)]
        min: usize,
        #[arg(long, default_value_t = 40)]
        max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run the per-instance structural checks up to ladder height t-max.
    VerifyClaims {
        #[arg(long, default_value_t = 3)]
        t_max: usize,
    },
    /// Emit the family member on n vertices.
    #[command(group(ArgGroup::new("fmt").args(["dot", "edgelist"])))]
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        edgelist: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the wheel with k rim vertices.
    Wheel {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Emit the 14-vertex base brick.
    G0 {
        #[arg(long)]
        dot: bool,
    },
    /// Analyse a graph file.
    #[command(group(ArgGroup::new("solidity").args(["solid", "solid_witness"])))]
    Analyze {
        path: PathBuf,
        #[arg(long)]
        tight_cuts: bool,
        #[arg(long)]
        solid: bool,
        /// File listing the vertices of one shore (ids or labels).
        #[arg(long)]
        solid_witness: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(g: &MultiGraph, dot: bool) -> String {
    if dot {
        write_dot(g)
    } else {
        write_graph(g)
    }
}

fn parse_witness(g: &MultiGraph, text: &str) -> Result<BTreeSet<VertexId>, Failure> {
    text.split_whitespace()
        .map(|tok| {
            if let Ok(v) = g.vertex_by_label(tok) {
                return Ok(v);
            }
            match tok.trim_start_matches('#').parse::<u32>() {
                Ok(id) if g.contains_vertex(VertexId(id)) => Ok(VertexId(id)),
                _ => Err(Failure::Usage(format!("witness: unknown vertex {tok:?}"))),
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::VerifyTheorem { min, max, format } => {
            let rows = theorem_rows(min, max)?;
            let table = match format {
                TableFormat::Csv => theorem_csv(&rows),
                TableFormat::Md => theorem_markdown(&rows),
            };
            print!("{table}");
            let bad: Vec<String> = rows
                .iter()
                .filter_map(|r| {
                    let p = r.problems();
                    (!p.is_empty()).then(|| format!("n = {}: {}", r.n, p.join("; ")))
                })
                .collect();
            if !bad.is_empty() {
                return Err(Failure::Verification(bad.join("\n")));
            }
        }
        Command::VerifyClaims { t_max } => {
            let report = verify_claims(t_max)?;
            print!("{}", report.render());
            let failed = report.failures().count();
            if failed > 0 {
                return Err(Failure::Verification(format!(
                    "{failed} of {} checks failed",
                    report.checks.len()
                )));
            }
            println!("all {} checks passed", report.checks.len());
        }
        Command::Family {
            n,
            dot,
            edgelist: _,
            out,
        } => {
            let family = build_family(n)?;
            emit(&render(&family.graph, dot), out.as_ref())?;
        }
        Command::Wheel { k, dot } => print!("{}", render(&wheel(k)?, dot)),
        Command::G0 { dot } => print!("{}", render(&build_g0()?, dot)),
        Command::Analyze {
            path,
            tight_cuts,
            solid,
            solid_witness,
            csv,
        } => {
            let g = read_graph(&read_file(&path)?)?;
            let solid = match (solid, solid_witness) {
                (_, Some(w)) => SolidRequest::Witness(parse_witness(&g, &read_file(&w)?)?),
                (true, None) => SolidRequest::Exhaustive,
                (false, None) => SolidRequest::Skip,
            };
            let report = analyze(&g, &AnalysisOptions { tight_cuts, solid })?;
            if csv {
                println!("{}", brickcheck::analysis::REPORT_CSV_HEADER);
                println!("{}", report.to_csv_row());
            } else {
                print!("{}", report.to_key_values());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed:\n{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
