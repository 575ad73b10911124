//! Command-line harness: seeded experiment matrices, report generation,
//! trajectory export and chaotic-weight dumps.

use clap::{Args, Parser, Subcommand};
use cqdds::bench::FunctionId;
use cqdds::chaos;
use cqdds::harness::config::{
    parse_algorithm_list, parse_config_str, parse_function_list, ExperimentConfig, OutputFormat,
    OverriddenFields,
};
use cqdds::harness::io;
use cqdds::harness::matrix::{run_matrix, run_trial};
use cqdds::harness::report::{
    build_report, effects_to_csv, gaps_to_csv, precision_to_csv, ranks_to_csv, summarize_fixture,
    summarize_records, summary_to_csv, ttest_to_csv, wtl_to_csv, TiePrecision,
};
use cqdds::optimizers::{AlgorithmId, SwarmMode};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cqdds", about = "Swarm-optimizer benchmark harness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a seeded trial matrix and write records
    Run(RunArgs),
    /// Build comparison tables from records or a fixture
    Report(ReportArgs),
    /// Re-run one trial deterministically and export its best-cost path
    Trajectory(TrajectoryArgs),
    /// Emit a Chebyshev weight sequence as CSV
    DumpChaos(DumpChaosArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Config file (key = value per line); flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated algorithm ids
    #[arg(long)]
    algo: Option<String>,
    /// Comma-separated function ids, or `all`
    #[arg(long)]
    function: Option<String>,
    /// Dimensionality for variable-dimension functions
    #[arg(long)]
    dim: Option<usize>,
    /// Iterations per run
    #[arg(long)]
    iters: Option<u64>,
    /// Independent trials per (algorithm, function) cell
    #[arg(long)]
    trials: Option<u32>,
    /// Master seed; per-trial sub-seeds derive from it
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads
    #[arg(long)]
    workers: Option<usize>,
    /// one-agent or full-swarm
    #[arg(long)]
    swarm_mode: Option<SwarmMode>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// records file format: csv or json
    #[arg(long)]
    format: Option<OutputFormat>,
}

#[derive(Args)]
struct ReportArgs {
    /// records.csv produced by `run`
    #[arg(long, conflicts_with = "fixture")]
    records: Option<PathBuf>,
    /// Reference-table fixture (function,algorithm,mean,best,std)
    #[arg(long)]
    fixture: Option<PathBuf>,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct TrajectoryArgs {
    #[arg(long)]
    algo: AlgorithmId,
    #[arg(long)]
    function: FunctionId,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    iters: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Trial index within the matrix seeded by --seed
    #[arg(long, default_value_t = 0)]
    trial: u32,
    #[arg(long, default_value = "one-agent")]
    swarm_mode: SwarmMode,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct DumpChaosArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Report(args) => cmd_report(args),
        Command::Trajectory(args) => cmd_trajectory(args),
        Command::DumpChaos(args) => cmd_dump_chaos(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn resolve_run_config(args: &RunArgs) -> Result<ExperimentConfig, cqdds::Error> {
    let mut config = ExperimentConfig::default();
    let mut overridden = OverriddenFields::default();
    if let Some(v) = &args.algo {
        config.algorithms = parse_algorithm_list(v)?;
        overridden.algorithms = true;
    }
    if let Some(v) = &args.function {
        config.functions = parse_function_list(v)?;
        overridden.functions = true;
    }
    macro_rules! set {
        ($cli:expr, $field:ident) => {
            if let Some(v) = $cli {
                config.$field = v.clone();
                overridden.$field = true;
            }
        };
    }
    set!(&args.dim, dim);
    set!(&args.iters, iterations);
    set!(&args.trials, trials);
    set!(&args.seed, master_seed);
    set!(&args.workers, workers);
    set!(&args.swarm_mode, swarm_mode);
    set!(&args.out, output_dir);
    set!(&args.format, format);
    if let Some(path) = &args.config {
        let overlay = parse_config_str(&fs::read_to_string(path)?)?;
        config.apply_overlay(&overlay, &overridden);
    }
    config.validate()?;
    Ok(config)
}

fn cmd_run(args: RunArgs) -> Result<(), cqdds::Error> {
    let config = resolve_run_config(&args)?;
    let records = run_matrix(&config)?;
    fs::create_dir_all(&config.output_dir)?;
    match config.format {
        OutputFormat::Csv => write(
            &config.output_dir.join("records.csv"),
            &io::records_to_csv(&records),
        )?,
        OutputFormat::Json => write(
            &config.output_dir.join("records.json"),
            &io::records_to_json(&records),
        )?,
    }
    write(
        &config.output_dir.join("timings.csv"),
        &io::timings_to_csv(&records),
    )?;
    println!(
        "wrote {} records to {}",
        records.len(),
        config.output_dir.display()
    );
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<(), cqdds::Error> {
    let bundle = match (&args.records, &args.fixture) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)?;
            let records = if path.extension().is_some_and(|e| e == "json") {
                io::records_from_json(&text)?
            } else {
                io::records_from_csv(&text)?
            };
            let (cells, costs, gaps) = summarize_records(&records)?;
            build_report(&cells, Some(&costs), TiePrecision::Exact, gaps)?
        }
        (None, Some(path)) => {
            let rows = io::fixture_from_csv(&fs::read_to_string(path)?)?;
            let cells = summarize_fixture(&rows)?;
            build_report(&cells, None, TiePrecision::SigFigs(4), vec![])?
        }
        _ => {
            return Err(cqdds::Error::InvalidParam(
                "report needs exactly one of --records or --fixture".into(),
            ))
        }
    };
    fs::create_dir_all(&args.out)?;
    write(&args.out.join("summary.csv"), &summary_to_csv(&bundle))?;
    write(&args.out.join("ttest.csv"), &ttest_to_csv(&bundle))?;
    write(&args.out.join("effects.csv"), &effects_to_csv(&bundle))?;
    write(&args.out.join("wtl.csv"), &wtl_to_csv(&bundle))?;
    write(&args.out.join("ranks.csv"), &ranks_to_csv(&bundle))?;
    write(&args.out.join("precision.csv"), &precision_to_csv(&bundle))?;
    if !bundle.gaps.is_empty() {
        write(&args.out.join("gaps.csv"), &gaps_to_csv(&bundle))?;
        eprintln!(
            "warning: {} matrix cells lack enough trials; see gaps.csv",
            bundle.gaps.len()
        );
    }
    println!("wrote report tables to {}", args.out.display());
    Ok(())
}

fn cmd_trajectory(args: TrajectoryArgs) -> Result<(), cqdds::Error> {
    let config = ExperimentConfig {
        algorithms: vec![args.algo],
        functions: vec![args.function],
        dim: args.dim.unwrap_or(30),
        iterations: args.iters,
        trials: args.trial + 1,
        master_seed: args.seed,
        swarm_mode: args.swarm_mode,
        ..ExperimentConfig::default()
    };
    config.validate()?;
    let result = run_trial(args.algo, args.function, &config, args.trial)?;
    fs::create_dir_all(&args.out)?;
    let name = format!(
        "trajectory-{}-{}-trial{}.csv",
        args.algo, args.function, args.trial
    );
    write(
        &args.out.join(&name),
        &io::trajectory_to_csv(&result.trajectory),
    )?;
    println!(
        "wrote {} improvement points to {}",
        result.trajectory.len(),
        name
    );
    Ok(())
}

fn cmd_dump_chaos(args: DumpChaosArgs) -> Result<(), cqdds::Error> {
    let weights = chaos::sample_sequence(args.seed, args.n)?;
    let csv = io::chaos_to_csv(&weights);
    match args.out {
        Some(path) => write(&path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn write(path: &Path, contents: &str) -> Result<(), cqdds::Error> {
    fs::write(path, contents)?;
    Ok(())
}
