use clap::{Parser, Subcommand};
use cli::{exit, run, Command, Outcome, RunConfig};
use rayon::prelude::*;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exact reduction of singularities and divisorial models of plane
/// foliation germs.
#[derive(Parser)]
#[command(name = "foliate", version)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Write the JSON report here (an array when several inputs are given).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write the dual graph in DOT syntax here.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    max_depth: u32,
    #[arg(long, global = true, default_value_t = numtower::DEFAULT_DEGREE_CAP as u32, value_parser = clap::value_parser!(u32).range(1..))]
    tower_cap: u32,
    /// Worker threads across input files.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// A `list:` document of branch equations for the logarithmic model.
    #[arg(long, global = true)]
    equations: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce the singularities of a foliation germ.
    Resolve { files: Vec<PathBuf> },
    /// Compute the divisorial model of a generalized curve.
    Model { files: Vec<PathBuf> },
    /// Classify the singular point at the origin.
    Classify { files: Vec<PathBuf> },
    /// Decide whether a divisor is dicritical.
    Dicritical { files: Vec<PathBuf> },
    /// Desingularize a list of functions.
    ReduceList { files: Vec<PathBuf> },
    /// Check a divisor against the foliation it should model.
    Verify { foliation: PathBuf, divisor: PathBuf },
}

/// Temp file in the target directory, then rename.
fn write_atomic(path: &Path, data: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut f = tempfile::NamedTempFile::new_in(dir)?;
    f.write_all(data.as_bytes())?;
    f.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (command, files) = match args.command {
        Cmd::Resolve { files } => (Command::Resolve, files),
        Cmd::Model { files } => (Command::Model, files),
        Cmd::Classify { files } => (Command::Classify, files),
        Cmd::Dicritical { files } => (Command::Dicritical, files),
        Cmd::ReduceList { files } => (Command::ReduceList, files),
        Cmd::Verify { foliation, divisor } => match std::fs::read_to_string(&divisor) {
            Ok(d) => (Command::Verify(d), vec![foliation]),
            Err(e) => {
                eprintln!("{}: {e}", divisor.display());
                return ExitCode::from(exit::PARSE as u8);
            }
        },
    };
    if files.is_empty() {
        eprintln!("no input files");
        return ExitCode::from(exit::PARSE as u8);
    }
    let mut cfg = RunConfig::new(command);
    cfg.max_depth = args.max_depth as usize;
    cfg.tower_cap = args.tower_cap as usize;
    if let Some(p) = &args.equations {
        match std::fs::read_to_string(p).map_err(|e| e.to_string()).and_then(|t| {
            symbolic::parse_list_document(&t).map_err(|e| e.to_string())
        }) {
            Ok(eqs) => cfg.equations = eqs,
            Err(e) => {
                eprintln!("{}: {e}", p.display());
                return ExitCode::from(exit::PARSE as u8);
            }
        }
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.jobs as usize).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(exit::INTERNAL as u8);
        }
    };
    let outcomes: Vec<Outcome> = pool.install(|| {
        files
            .par_iter()
            .map(|f| match std::fs::read_to_string(f) {
                Ok(text) => run(&cfg, &text),
                Err(e) => Outcome {
                    code: exit::PARSE,
                    json: serde_json::json!({ "status": "parse_error", "error": e.to_string() }),
                    dot: None,
                    summary: format!("parse_error: {e}"),
                },
            })
            .collect()
    });
    for (f, o) in files.iter().zip(&outcomes) {
        eprintln!("{}: {} {}", f.display(), cfg.command.name(), o.summary);
    }
    let report = if outcomes.len() == 1 {
        outcomes[0].json.clone()
    } else {
        serde_json::Value::Array(
            files
                .iter()
                .zip(&outcomes)
                .map(|(f, o)| serde_json::json!({ "file": f.display().to_string(), "report": o.json }))
                .collect(),
        )
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    let written = match &args.json {
        Some(p) => write_atomic(p, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cannot write the JSON report: {e}");
        return ExitCode::from(exit::INTERNAL as u8);
    }
    if let Some(p) = &args.dot {
        let dot: String = outcomes.iter().filter_map(|o| o.dot.clone()).collect();
        if let Err(e) = write_atomic(p, &dot) {
            eprintln!("cannot write the DOT file: {e}");
            return ExitCode::from(exit::INTERNAL as u8);
        }
    }
    ExitCode::from(outcomes.iter().map(|o| o.code).max().unwrap_or(exit::OK) as u8)
}
