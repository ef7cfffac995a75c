use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use contact_core::config::{AnalyzeConfig, Mode};
use contact_core::families::{construct, FamilySpec};
use contact_core::lie::{algebra_from_json, algebra_to_json};
use contact_core::report::{analyze_algebra, render_pretty};
use contact_core::verify::{run_suites, Status, VerifyOptions, VerifyResult, SUITES};
use contact_core::Error;

#[derive(Parser)]
#[command(name = "contactlie", version, about = "Index, contact forms and semi-invariants of Lie algebras")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Base seed; every random choice is derived from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random points per generic claim.
    #[arg(long, global = true, default_value_t = 4)]
    trials: usize,
    /// Coordinates are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = 1 << 20)]
    bound: u64,
    /// probabilistic, symbolic or auto.
    #[arg(long, global = true, default_value = "auto")]
    mode: String,
    /// Degree bound for the semi-invariant search.
    #[arg(long, global = true, default_value_t = 4)]
    degree: usize,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the algebra file of a named family, e.g. `construct qbar 2 4`.
    Construct {
        /// Family name followed by its parameters.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        family: Vec<String>,
        /// Output path (standard output when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Which of the family's splittings to record.
        #[arg(long, default_value_t = 0)]
        splitting: usize,
        /// Record no splitting.
        #[arg(long)]
        no_splitting: bool,
    },
    /// Analyse an algebra file and print the report.
    Analyze {
        path: PathBuf,
        /// Also search for semi-invariants up to --degree.
        #[arg(long)]
        semiinv: bool,
    },
    /// Run regression suites (`all` for every suite).
    Verify {
        #[arg(required = true, num_args = 1..)]
        suites: Vec<String>,
        /// Grid bound for the index sweeps.
        #[arg(long, default_value_t = 5)]
        max: usize,
        /// Instances for the equivalence suite: `all` or a comma list.
        #[arg(long, default_value = "all")]
        families: String,
    },
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Jacobi { .. }
            | Error::InvalidAlgebra(_)
            | Error::InvalidParams(_)
            | Error::InvalidDecomposition(_)
            | Error::DimensionMismatch { .. } => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn config(c: &Common) -> Result<AnalyzeConfig, Failure> {
    let mode: Mode = c.mode.parse()?;
    let cfg = AnalyzeConfig {
        seed: c.seed,
        trials: c.trials,
        bound: c.bound,
        mode,
        degree: c.degree,
        ..AnalyzeConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_construct(family: &[String], out: Option<&Path>, which: usize, none: bool) -> Result<(), Failure> {
    let spec = FamilySpec::parse(family)?;
    let f = construct(&spec)?;
    let split = if none { None } else { f.splittings.get(which) };
    if !none && which > 0 && split.is_none() {
        return Err(Failure::Input(format!("{} has {} splittings", f.name, f.splittings.len())));
    }
    let text = algebra_to_json(&f.algebra, split);
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_analyze(path: &Path, semiinv: bool, cfg: &AnalyzeConfig, pretty: bool) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let (q, split) = algebra_from_json(&text)?;
    let name = path.file_stem().map_or_else(|| "q".to_string(), |s| s.to_string_lossy().into_owned());
    let r = analyze_algebra(&q, split.as_ref(), cfg, semiinv, &name)?;
    if pretty {
        print!("{}", render_pretty(&r));
    } else {
        print!("{}", json(&r));
    }
    Ok(())
}

fn render_table(results: &[VerifyResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!(
            "== {} : {}{}\n",
            r.suite,
            if r.passed { "pass" } else { "FAIL" },
            r.max_failure_bound
                .as_ref()
                .map(|b| format!(" (max failure bound {b})"))
                .unwrap_or_default()
        ));
        let w = r.cases.iter().map(|c| c.instance.chars().count()).max().unwrap_or(0);
        for c in &r.cases {
            let mark = if c.status == Status::Pass { "pass" } else { "FAIL" };
            s.push_str(&format!("  {mark}  {:<w$}  expected {}  computed {}\n", c.instance, c.expected, c.computed));
        }
    }
    s
}

fn cmd_verify(suites: &[String], opts: &VerifyOptions, cfg: &AnalyzeConfig, c: &Common) -> Result<bool, Failure> {
    let names: Vec<String> = if suites.iter().any(|s| s == "all") {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suites.to_vec()
    };
    for n in &names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Failure::Input(format!("unknown suite {n:?}; known: {}, all", SUITES.join(", "))));
        }
    }
    let results = run_suites(&names, opts, cfg, c.jobs)?;
    let passed = results.iter().all(|r| r.passed);
    if c.pretty {
        print!("{}", render_table(&results));
    } else {
        print!("{}", json(&serde_json::json!({ "passed": passed, "suites": results })));
    }
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = config(&cli.common)?;
    if let Some(j) = cli.common.jobs {
        // a second initialisation only happens in tests; ignore it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match &cli.command {
        Command::Construct {
            family,
            out,
            splitting,
            no_splitting,
        } => cmd_construct(family, out.as_deref(), *splitting, *no_splitting).map(|_| true),
        Command::Analyze { path, semiinv } => cmd_analyze(path, *semiinv, &cfg, cli.common.pretty).map(|_| true),
        Command::Verify { suites, max, families } => {
            let opts = VerifyOptions {
                max: *max,
                families: families.clone(),
            };
            cmd_verify(suites, &opts, &cfg, &cli.common)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
