mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use convex_profile::schema::SchemaError;
use convex_profile::theorems::{CheckConfig, DEFAULT_SEED};
use convex_profile::GeomError;

#[derive(Parser, Debug)]
#[command(name = "convex-profile", version, about = "Exact boundary-pair, kernel and extreme-point analysis of convex and planar sets")]
struct Cli {
    /// RNG seed (decimal or 0x-hex); CONVEX_PROFILE_SEED overrides it.
    #[arg(long, global = true, value_parser = parse_seed)]
    seed: Option<u64>,
    /// Member points sampled per instance.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,
    /// Samples per edge (visibility) or per circle (disks).
    #[arg(long, global = true, default_value_t = 32)]
    probe_density: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify boundary pairs as flat, hyperbolic, elliptic or mixed.
    Classify {
        file: PathBuf,
        /// `vertices`, `all` (vertices and edge midpoints) or a JSON file of pairs.
        #[arg(long, default_value = "vertices")]
        pairs: String,
    },
    /// Decide convexity from boundary pairs and compare with the direct test.
    Convexity { file: PathBuf },
    /// Kernel of a simple polygon as an H-polyhedron.
    Kernel { file: PathBuf },
    /// Extreme points, lineality and whether they reconstruct the set.
    Extremes { file: PathBuf },
    /// Reconstruct from extreme points (bounded) or from the boundary.
    Reconstruct { file: PathBuf },
    /// Run a theorem checker over generated instances.
    Check {
        /// A theorem id such as `cor-5`, or `all`.
        theorem: String,
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
    /// Render a planar instance to SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Pair overlay: `vertices`, `all`, `none` or a JSON file of pairs.
        #[arg(long, default_value = "vertices")]
        pairs: String,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { file: String, message: String },
    Schema { file: String, error: SchemaError },
    Geometry { file: String, error: GeomError },
}

impl CliError {
    fn to_json(&self) -> Value {
        let body = match self {
            CliError::Usage(m) => json!({ "kind": "usage", "message": m }),
            CliError::Io { file, message } => json!({ "kind": "io", "file": file, "message": message }),
            CliError::Schema { file, error } => json!({
                "kind": "schema",
                "file": file,
                "path": error.path,
                "field": error.field,
                "message": error.message,
            }),
            CliError::Geometry { file, error } => json!({ "kind": "geometry", "file": file, "message": error.to_string() }),
        };
        json!({ "error": body })
    }
}

/// Command output: the `results` array and whether any checker reported a
/// satisfied hypothesis with a failed conclusion.
pub struct Outcome {
    pub results: Vec<Value>,
    pub counterexample: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.to_string().trim().to_string())),
    };
    let seed = match std::env::var("CONVEX_PROFILE_SEED") {
        Ok(s) => match parse_seed(&s) {
            Ok(v) => v,
            Err(m) => return fail(&CliError::Usage(format!("CONVEX_PROFILE_SEED: {m}"))),
        },
        Err(_) => cli.seed.unwrap_or(DEFAULT_SEED),
    };
    let cfg = CheckConfig { seed, samples: cli.samples, probe_density: cli.probe_density };
    let (name, inputs, outcome) = match run(&cli.command, &cfg) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let report = json!({
        "command": name,
        "inputs": inputs,
        "results": outcome.results,
        "config": {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "probe_density": cfg.probe_density,
        },
    });
    let text = serde_json::to_string_pretty(&report).expect("JSON values serialize") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return fail(&CliError::Io { file: path.display().to_string(), message: e.to_string() });
            }
        }
        None => print!("{text}"),
    }
    if outcome.counterexample {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", serde_json::to_string(&e.to_json()).expect("JSON values serialize"));
    ExitCode::from(2)
}

fn run(cmd: &Command, cfg: &CheckConfig) -> Result<(&'static str, Vec<String>, Outcome), CliError> {
    let show = |p: &PathBuf| vec![p.display().to_string()];
    Ok(match cmd {
        Command::Classify { file, pairs } => ("classify", show(file), commands::classify(file, pairs, cfg)?),
        Command::Convexity { file } => ("convexity", show(file), commands::convexity(file, cfg)?),
        Command::Kernel { file } => ("kernel", show(file), commands::kernel(file)?),
        Command::Extremes { file } => ("extremes", show(file), commands::extremes(file)?),
        Command::Reconstruct { file } => ("reconstruct", show(file), commands::reconstruct(file, cfg)?),
        Command::Check { theorem, instances } => ("check", vec![theorem.clone()], commands::check(theorem, *instances, cfg)?),
        Command::Render { file, svg, pairs } => ("render", show(file), commands::render(file, svg, pairs, cfg)?),
    })
}
