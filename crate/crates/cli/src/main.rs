//! `qep` — deterministic numerical experiments on quantum motion in
//! accelerated frames and weak gravity.
//!
//! Every subcommand reads one strict-schema JSON config, writes
//! `<out-dir>/<experiment>.csv` and `<out-dir>/<experiment>.summary.json`,
//! prints one PASS/FAIL line per criterion, and exits with:
//!
//! * 0 — every criterion passed,
//! * 1 — at least one criterion failed (or a numerical contract was violated),
//! * 2 — usage or configuration error (nothing is written in this case).

mod config;
mod experiments;
mod report;

use clap::{Args, Parser, Subcommand};
use experiments::Kind;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "qep",
    version,
    about = "Numerical experiments on quantum motion in accelerated frames and weak gravity",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// JSON experiment configuration (strict schema; "{}" runs the defaults).
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Directory receiving <experiment>.csv and <experiment>.summary.json.
    #[arg(long, value_name = "PATH")]
    out_dir: PathBuf,
    /// Accepted for interface stability; runs are always seed-free and
    /// deterministic, so this flag changes nothing.
    #[arg(long)]
    seedless: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Two-route propagation agreement across accelerated frames, phase
    /// linearity, and the proper-time phase identities.
    Equivalence(RunArgs),
    /// Finite-difference spectrum of the attractive 1/r well against the
    /// closed-form levels and their mass scalings.
    Bohr(RunArgs),
    /// Loop actions: momentum-action quantization and the velocity-action
    /// invariance under (m, n) -> (Km, Kn).
    Scaling(RunArgs),
    /// Level spacing against the classical orbital frequency (the
    /// gravitational ladder stays honestly red at ell = 2, n = 100).
    Spacing(RunArgs),
    /// Bound-state matrix elements against classical orbit Fourier
    /// coefficients, at one scale and along a mass-scaled ladder.
    Correspondence(RunArgs),
    /// Propagator health: norm conservation, the free spreading law, and
    /// mass-blind centers with mass-dependent spreads in uniform gravity.
    Packet(RunArgs),
    /// Order-of-magnitude table from tabulated constants, with hand-checked
    /// fixtures and literature-figure gaps.
    Estimates(RunArgs),
    /// Run every experiment (independent experiments run concurrently).
    All(RunArgs),
}

impl Command {
    fn plan(&self) -> (&RunArgs, Vec<Kind>) {
        match self {
            Command::Equivalence(a) => (a, vec![Kind::Equivalence]),
            Command::Bohr(a) => (a, vec![Kind::Bohr]),
            Command::Scaling(a) => (a, vec![Kind::Scaling]),
            Command::Spacing(a) => (a, vec![Kind::Spacing]),
            Command::Correspondence(a) => (a, vec![Kind::Correspondence]),
            Command::Packet(a) => (a, vec![Kind::Packet]),
            Command::Estimates(a) => (a, vec![Kind::Estimates]),
            Command::All(a) => (a, experiments::ALL.to_vec()),
        }
    }
}

enum Failure {
    /// Usage or configuration problem; exit 2, no outputs written.
    Usage(String),
    /// The experiment itself could not run to completion; exit 1.
    Runtime(String),
}

fn execute(command: &Command) -> Result<bool, Failure> {
    let (args, kinds) = command.plan();

    // Validate everything before touching the filesystem: a rejected config
    // must not leave partial outputs behind.
    let config = config::load(&args.config).map_err(|e| Failure::Usage(e.to_string()))?;
    std::fs::create_dir_all(&args.out_dir).map_err(|e| {
        Failure::Usage(format!("cannot create out-dir {}: {e}", args.out_dir.display()))
    })?;

    type Timed = Result<(report::ExperimentOutcome, f64), Failure>;
    let run_one = |kind: Kind| -> Timed {
        let started = Instant::now();
        let outcome =
            experiments::run(kind, &config).map_err(|e| Failure::Runtime(format!("{e:#}")))?;
        Ok((outcome, started.elapsed().as_secs_f64()))
    };

    // Experiments are independent and own their output files exclusively;
    // `all` fans them out across threads and reports in a fixed order.
    let results: Vec<Timed> = if kinds.len() == 1 {
        vec![run_one(kinds[0])]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                kinds.iter().map(|&kind| scope.spawn(move || run_one(kind))).collect();
            handles.into_iter().map(|h| h.join().expect("experiment thread panicked")).collect()
        })
    };

    let mut all_passed = true;
    for result in results {
        let (outcome, duration) = result?;
        report_outcome(&outcome, &args.out_dir, duration)?;
        all_passed &= outcome.passed();
    }
    Ok(all_passed)
}

fn report_outcome(
    outcome: &report::ExperimentOutcome,
    out_dir: &Path,
    duration: f64,
) -> Result<(), Failure> {
    report::write_outputs(outcome, out_dir, duration)
        .map_err(|e| Failure::Usage(format!("cannot write outputs: {e}")))?;
    for row in &outcome.criteria {
        row.print_line(outcome.experiment);
    }
    let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
    println!(
        "{}: {verdict} ({} criteria, {:.2} s)",
        outcome.experiment,
        outcome.criteria.len(),
        duration
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Runtime(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
