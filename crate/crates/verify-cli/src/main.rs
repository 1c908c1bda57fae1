use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use verify_cli::{
    check_claims, check_lemmas, check_theorem4, check_theorem8_structure, load_corpora,
    parse_config_file, resolve_input, run_decide, Settings, StructureGrid, Task,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Runs spectral factor-theorem verifications over graph corpora and parameter grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// key=value config file (tol, jobs); flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Spectral comparison tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Worker-pool size (0 = one worker per core)
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON report to this file as well as stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive factor-theorem check over graph6 corpora
    CheckTheorem4 {
        /// graph6 corpus files
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        b: u32,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Hamilton-path, edge-count sufficiency and spectral-bound suites
    CheckLemmas {
        /// graph6 corpus files
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Structural sweep of the criticality exception family
    CheckTheorem8 {
        /// Minimum-degree parameters to sweep
        #[arg(long, required = true, num_args = 1..)]
        delta: Vec<usize>,
        /// Independent-attachment sizes to sweep
        #[arg(long, required = true, num_args = 1..)]
        r: Vec<usize>,
        /// Inclusive order range, e.g. 11..40
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        /// Stream per-cell CSV rows to this file
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Numeric claim sweeps plus the sampled join-comparison inequality
    CheckClaims {
        /// Minimum-degree parameters to sweep
        #[arg(long, required = true, num_args = 1..)]
        delta: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Orders checked per (delta, s) cell, from each regime threshold
        #[arg(long, default_value_t = 50)]
        n_cells: usize,
        /// Random join-comparison samples
        #[arg(long, default_value_t = 200)]
        join_samples: usize,
        /// Stream per-cell CSV rows to this file
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide one instance: factor, matching or criticality
    Decide {
        /// Builtin spec, graph file, or graph6 literal
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        task: TaskArg,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        b: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskArg {
    Factor,
    Matching,
    Critical,
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {text:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("range start: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn settings_for(common: &CommonOpts) -> Result<Settings, String> {
    let mut settings = Settings::default();
    if let Some(path) = &common.config {
        settings.apply_file(&parse_config_file(path)?)?;
    }
    settings.apply_flags(common.tol, common.jobs);
    if settings.jobs > 0 {
        // A second invocation in-process would fail; that is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(settings.jobs)
            .build_global();
    }
    Ok(settings)
}

fn emit_report(report: &VerificationReport, common: &CommonOpts) -> Result<i32, String> {
    let json = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    println!("{json}");
    if let Some(path) = &common.out {
        std::fs::write(path, &json).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(report.exit_code())
}

fn write_csv(rows: &[String], path: &Option<PathBuf>) -> Result<(), String> {
    if let Some(path) = path {
        std::fs::write(path, rows.join("\n") + "\n")
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(())
}

fn run() -> Result<i32, String> {
    match Cli::parse().command {
        Command::CheckTheorem4 { corpus, a, b, common } => {
            let settings = settings_for(&common)?;
            let (entries, parse_errors) = load_corpora(&corpus).map_err(|e| e.to_string())?;
            let mut report = check_theorem4(&entries, a, b, settings.tol)?;
            report.failures.extend(parse_errors);
            report.cases = report.passes + report.failures.len() + report.skipped;
            emit_report(&report, &common)
        }
        Command::CheckLemmas { corpus, common } => {
            let settings = settings_for(&common)?;
            let (entries, parse_errors) = load_corpora(&corpus).map_err(|e| e.to_string())?;
            let mut report = check_lemmas(&entries, settings.tol)?;
            report.failures.extend(parse_errors);
            report.cases = report.passes + report.failures.len() + report.skipped;
            emit_report(&report, &common)
        }
        Command::CheckTheorem8 { delta, r, n_range, csv, common } => {
            let _ = settings_for(&common)?;
            let grid = StructureGrid { delta, r, n: n_range.0..=n_range.1 };
            let (report, rows) = check_theorem8_structure(&grid);
            write_csv(&rows, &csv)?;
            emit_report(&report, &common)
        }
        Command::CheckClaims { delta, r, n_cells, join_samples, csv, common } => {
            let _ = settings_for(&common)?;
            let (report, rows) = check_claims(&delta, r, n_cells, join_samples);
            write_csv(&rows, &csv)?;
            emit_report(&report, &common)
        }
        Command::Decide { input, task, a, b } => {
            let graph = resolve_input(&input)?;
            let task = match task {
                TaskArg::Factor => Task::Factor,
                TaskArg::Matching => Task::Matching,
                TaskArg::Critical => Task::Critical,
            };
            let (json, code) = run_decide(&graph, task, a, b)?;
            println!("{}", serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?);
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
