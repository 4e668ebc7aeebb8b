//! Batch front end: every subcommand reads/writes the JSON graph formats
//! and reports machine-readable JSON on stdout. Exit codes: 0 for a passing
//! verdict or successful construction, 1 for a negative verdict, 2 for
//! malformed input or usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pgraph::enumeration;
use pgraph::moves::grow_seeded;
use pgraph::reduction::{catalog, identify_base, reduce};
use pgraph::rigidity::{generic_rank, is_minimally_3_rigid};
use pgraph::sparsity::{freedom_number, is_sparse, SparsityCheck};
use pgraph::surface::{from_face_graph, FaceGraph, PGraph};

#[derive(Parser)]
#[command(name = "pgraph", version, about = "projective-plane graph toolkit")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph file and certify (3,6)-sparsity
    Check {
        /// Graph JSON file, or - for standard input
        file: String,
    },
    /// Report hole count, hole lengths and Maxwell consistency
    Classify { file: String },
    /// Contract a tight graph down to a base graph
    Reduce {
        file: String,
        /// Write the reduction trace JSON here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Grow a graph from a catalog base by random planar vertex splits
    Grow {
        /// Base graph name, e.g. G^0_7
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (default: standard output)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact generic rigidity-matrix rank
    Rigidity {
        file: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Count (3,6)-tight graphs on n vertices up to isomorphism
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Write one edge-list file per isomorphism class
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Allow the long n = 8 scan
        #[arg(long)]
        long: bool,
    },
    /// Print a catalog member (or the list of names)
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// Name the catalog member isomorphic to the input, if any
    Identify { file: String },
}

fn read_input(file: &str) -> Result<String, String> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        Ok(buf)
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))
    }
}

/// Both graph formats are accepted everywhere: a JSON object carrying a
/// "triangles" key is read as a face graph and identified, anything else
/// as an embedded graph.
fn parse_pgraph(file: &str) -> Result<PGraph, String> {
    let text = read_input(file)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if value.get("triangles").is_some() {
        let fg: FaceGraph = serde_json::from_value(value).map_err(|e| e.to_string())?;
        from_face_graph(&fg).map_err(|e| e.to_string())
    } else {
        serde_json::from_value(value).map_err(|e| e.to_string())
    }
}

fn fail(code: &str, detail: impl ToString) -> ExitCode {
    println!(
        "{}",
        json!({ "error": code, "detail": detail.to_string() })
    );
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                return fail("usage", e.to_string());
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            return fail("jobs", e.to_string());
        }
    }
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Classify { file } => classify(&file),
        Command::Reduce { file, trace } => run_reduce(&file, trace),
        Command::Grow {
            base,
            steps,
            seed,
            output,
        } => grow(&base, steps, seed, output),
        Command::Rigidity { file, seed, trials } => rigidity(&file, seed, trials),
        Command::Enumerate { n, emit, long } => enumerate(n, emit, long),
        Command::Catalog { name } => show_catalog(name),
        Command::Identify { file } => identify(&file),
    }
}

fn check(file: &str) -> ExitCode {
    let g = match parse_pgraph(file) {
        Ok(g) => g,
        Err(e) => return fail("parse", e),
    };
    let report = g.validate();
    let skeleton = g.skeleton();
    let verdict = is_sparse(&skeleton);
    let freedom = freedom_number(&skeleton);
    let tight = verdict.is_sparse() && freedom == 6;
    let witness = match &verdict {
        SparsityCheck::Sparse => serde_json::Value::Null,
        SparsityCheck::Violation(w) => json!({
            "vertices": w.vertex_set.iter().collect::<Vec<_>>(),
            "excess": w.excess,
        }),
    };
    println!(
        "{}",
        json!({
            "valid": report.is_valid(),
            "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "freedom": freedom,
            "sparse": verdict.is_sparse(),
            "witness": witness,
            "tight": tight,
        })
    );
    if report.is_valid() && verdict.is_sparse() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn classify(file: &str) -> ExitCode {
    let g = match parse_pgraph(file) {
        Ok(g) => g,
        Err(e) => return fail("parse", e),
    };
    if let Err(e) = g.require_valid() {
        println!("{}", json!({ "error": "invalid", "detail": e.to_string() }));
        return ExitCode::from(1);
    }
    let sig = g.classify();
    println!(
        "{}",
        json!({
            "k": sig.k,
            "lengths": sig.lengths,
            "maxwell_consistent": sig.maxwell_consistent,
        })
    );
    ExitCode::SUCCESS
}

fn run_reduce(file: &str, trace_path: Option<PathBuf>) -> ExitCode {
    let g = match parse_pgraph(file) {
        Ok(g) => g,
        Err(e) => return fail("parse", e),
    };
    let trace = match reduce(&g) {
        Ok(t) => t,
        Err(e) => {
            println!("{}", json!({ "error": "reduce", "detail": e.to_string() }));
            return ExitCode::from(1);
        }
    };
    if let Some(path) = trace_path {
        let text = serde_json::to_string_pretty(&trace).expect("trace serializes");
        if let Err(e) = std::fs::write(&path, text) {
            return fail("io", format!("{}: {e}", path.display()));
        }
    }
    println!(
        "{}",
        json!({
            "terminal": trace.terminal,
            "steps": trace.steps.len(),
            "iso": trace.iso,
        })
    );
    ExitCode::SUCCESS
}

fn grow(base: &str, steps: usize, seed: u64, output: Option<PathBuf>) -> ExitCode {
    let cat = catalog();
    let start = match cat.get(base) {
        Some(g) => g,
        None => {
            return fail(
                "unknown_base",
                format!("{base} is not one of {:?}", cat.names()),
            )
        }
    };
    let grown = match grow_seeded(start, steps, seed) {
        Ok(g) => g,
        Err(e) => return fail("grow", e.to_string()),
    };
    let text = serde_json::to_string_pretty(&grown).expect("graph serializes");
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                return fail("io", format!("{}: {e}", path.display()));
            }
        }
        None => println!("{text}"),
    }
    ExitCode::SUCCESS
}

fn rigidity(file: &str, seed: u64, trials: usize) -> ExitCode {
    let g = match parse_pgraph(file) {
        Ok(g) => g,
        Err(e) => return fail("parse", e),
    };
    let skeleton = g.skeleton();
    let rank = generic_rank(&skeleton, seed, trials);
    let maxwell = skeleton.edge_count() == 3 * skeleton.vertex_count() - 6;
    let rigid = is_minimally_3_rigid(&skeleton, seed, trials);
    println!(
        "{}",
        json!({ "rank": rank, "maxwell": maxwell, "minimally_rigid": rigid })
    );
    if rigid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn enumerate(n: usize, emit: Option<PathBuf>, long: bool) -> ExitCode {
    if n == 8 && !long {
        return fail(
            "long_run",
            "n = 8 scans about 13 million edge subsets; pass --long to confirm",
        );
    }
    let count = match enumeration::count_tight_graphs(n) {
        Ok(c) => c,
        Err(e) => return fail("enumerate", e.to_string()),
    };
    if let Some(dir) = emit {
        if let Err(e) = std::fs::create_dir_all(&dir) {
            return fail("io", format!("{}: {e}", dir.display()));
        }
        let graphs = match enumeration::enumerate_tight_graphs(n) {
            Ok(g) => g,
            Err(e) => return fail("enumerate", e.to_string()),
        };
        for (i, g) in graphs.iter().enumerate() {
            let mut lines: Vec<String> = g
                .edge_labels()
                .map(|(u, v)| format!("{u} {v}"))
                .collect();
            lines.push(String::new());
            let path = dir.join(format!("tight_{n}_{i:04}.txt"));
            if let Err(e) = std::fs::write(&path, lines.join("\n")) {
                return fail("io", format!("{}: {e}", path.display()));
            }
        }
    }
    println!("{}", json!({ "n": n, "count": count }));
    ExitCode::SUCCESS
}

fn show_catalog(name: Option<String>) -> ExitCode {
    let cat = catalog();
    match name {
        Some(name) => match cat.get(&name) {
            Some(g) => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(g).expect("graph serializes")
                );
                ExitCode::SUCCESS
            }
            None => fail(
                "unknown_base",
                format!("{name} is not one of {:?}", cat.names()),
            ),
        },
        None => {
            println!("{}", json!({ "members": cat.names() }));
            ExitCode::SUCCESS
        }
    }
}

fn identify(file: &str) -> ExitCode {
    let g = match parse_pgraph(file) {
        Ok(g) => g,
        Err(e) => return fail("parse", e),
    };
    match identify_base(&g) {
        Some(name) => {
            println!("{}", json!({ "base": name }));
            ExitCode::SUCCESS
        }
        None => {
            println!("{}", json!({ "base": serde_json::Value::Null }));
            ExitCode::from(1)
        }
    }
}
