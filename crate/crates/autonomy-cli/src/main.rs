//! Command-line interface for analyzing n-D behavioral systems.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 precondition
//! violation (e.g. `restrict` on a multi-column system), 3 Gröbner step
//! limit exceeded (`AUTONOMY_GB_STEP_LIMIT`).

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use autonomy::genericity::{
    expt_controller_strength, expt_generic_degree, expt_regular_sequences, expt_unit_ideal,
};
use autonomy::io::{format_system, parse_system, report_value, write_report, Report, ReportFormat};
use autonomy::{
    analyze, degree_by_restriction_oracle, strength, AutonomyDegree, SampleSpec,
    StepLimitExceeded, SublatticeEmbedding, SystemMatrix,
};

#[derive(Parser)]
#[command(
    name = "autonomy",
    version,
    about = "Exact analysis of the degree of autonomy of n-D systems over Laurent polynomial rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Text => ReportFormat::Text,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Experiment {
    Degree,
    Regseq,
    Unit,
    Strength,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a system: degree of autonomy, autonomy flags and the
    /// characteristic ideal
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Interconnect a plant with a controller and report the controller's
    /// strength and efficiency
    Strength {
        #[arg(long)]
        plant: PathBuf,
        #[arg(long)]
        controller: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Restrict a scalar system to a coordinate sublattice (1-based variable
    /// indices) and report on the restriction
    Restrict {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated 1-based variable indices to keep
        #[arg(long)]
        keep: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree of autonomy of a scalar system computed from the sublattice
    /// restriction definition
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a seeded sampling experiment and report outcome frequencies
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rows: usize,
        /// Degree bound on sampled entries
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Inclusive coefficient range, e.g. -5..5
        #[arg(long = "coeff-range", default_value = "-5..5")]
        coeff_range: String,
        /// Per-monomial inclusion probability in (0, 1]
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long, value_enum, default_value_t = Experiment::Degree)]
        experiment: Experiment,
        /// Controller row count (strength experiment only)
        #[arg(long = "controller-rows")]
        controller_rows: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum CliError {
    /// Unreadable input, unparseable file or invalid parameter: exit 1.
    Validation(String),
    /// A command was applied outside its domain: exit 2.
    Precondition(String),
}

fn validation<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Validation(msg.into()))
}

fn precondition<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Precondition(msg.into()))
}

fn load_system(path: &PathBuf) -> Result<SystemMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn parse_keep(keep: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut indices = Vec::new();
    for field in keep.split(',') {
        let field = field.trim();
        if field.is_empty() {
            return validation("empty index in --keep");
        }
        let idx: usize = field
            .parse()
            .map_err(|_| CliError::Validation(format!("invalid index '{field}' in --keep")))?;
        if idx < 1 || idx > n {
            return validation(format!("index {idx} out of range 1..={n}"));
        }
        indices.push(idx - 1);
    }
    indices.sort_unstable();
    let len = indices.len();
    indices.dedup();
    if indices.len() != len {
        return validation("duplicate index in --keep");
    }
    Ok(indices)
}

fn parse_coeff_range(range: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = range.splitn(2, "..").collect();
    if parts.len() != 2 {
        return validation(format!("invalid --coeff-range '{range}', expected lo..hi"));
    }
    let lo: i64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Validation(format!("invalid lower bound '{}'", parts[0])))?;
    let hi: i64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Validation(format!("invalid upper bound '{}'", parts[1])))?;
    Ok((lo, hi))
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Analyze { input, format } => {
            let system = load_system(&input)?;
            let report = analyze(&system);
            Ok(write_report(Report::Autonomy(&report), format.into()))
        }
        Command::Strength {
            plant,
            controller,
            format,
        } => {
            let plant = load_system(&plant)?;
            let controller = load_system(&controller)?;
            if plant.n() != controller.n() || plant.k() != controller.k() {
                return precondition(format!(
                    "plant ({}, {}) and controller ({}, {}) shapes are incompatible",
                    plant.n(),
                    plant.k(),
                    controller.n(),
                    controller.k()
                ));
            }
            let report = strength(&plant, &controller);
            Ok(write_report(Report::Strength(&report), format.into()))
        }
        Command::Restrict {
            input,
            keep,
            format,
        } => {
            let system = load_system(&input)?;
            if system.k() != 1 {
                return precondition("restrict supports scalar systems (k = 1) only");
            }
            let indices = parse_keep(&keep, system.n())?;
            let emb = SublatticeEmbedding::new(system.n(), indices);
            let restricted = autonomy::restrict(&system, &emb);
            let report = analyze(&restricted);
            let system_text = format_system(&restricted);
            match Format::from(format) {
                Format::Json => {
                    let value = json!({
                        "system": system_text,
                        "report": report_value(Report::Autonomy(&report)),
                    });
                    Ok(serde_json::to_string_pretty(&value).expect("serialization") + "\n")
                }
                Format::Text => Ok(format!(
                    "{system_text}\n{}",
                    write_report(Report::Autonomy(&report), ReportFormat::Text)
                )),
            }
        }
        Command::Oracle { input, format } => {
            let system = load_system(&input)?;
            if system.k() != 1 {
                return precondition("oracle supports scalar systems (k = 1) only");
            }
            let degree = degree_by_restriction_oracle(&system);
            match Format::from(format) {
                Format::Json => {
                    let value = json!({
                        "n": system.n(),
                        "k": system.k(),
                        "rows": system.num_rows(),
                        "degree_of_autonomy": match degree {
                            AutonomyDegree::Finite(d) => json!(d),
                            AutonomyDegree::Infinite => json!("infinity"),
                        },
                    });
                    Ok(serde_json::to_string_pretty(&value).expect("serialization") + "\n")
                }
                Format::Text => Ok(format!("degree_of_autonomy: {degree}\n")),
            }
        }
        Command::Sample {
            n,
            k,
            rows,
            degree,
            trials,
            seed,
            coeff_range,
            density,
            experiment,
            controller_rows,
            format,
        } => {
            let (coeff_low, coeff_high) = parse_coeff_range(&coeff_range)?;
            let spec = SampleSpec {
                n,
                k,
                rows,
                degree_bound: degree,
                coeff_low,
                coeff_high,
                density,
                seed,
            };
            if let Err(msg) = spec.validate() {
                return validation(msg);
            }
            let stats = match experiment {
                Experiment::Degree => expt_generic_degree(&spec, trials),
                Experiment::Regseq => {
                    if !(1..=n).contains(&rows) {
                        return precondition(
                            "regseq experiment requires 1 <= rows <= n".to_string(),
                        );
                    }
                    expt_regular_sequences(&spec, trials)
                }
                Experiment::Unit => {
                    if rows <= n {
                        return precondition("unit experiment requires rows > n".to_string());
                    }
                    expt_unit_ideal(&spec, trials)
                }
                Experiment::Strength => match controller_rows {
                    Some(extra) => expt_controller_strength(&spec, extra, trials),
                    None => {
                        return precondition(
                            "strength experiment requires --controller-rows".to_string(),
                        )
                    }
                },
            };
            Ok(write_report(Report::Experiment(&stats), format.into()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    // Suppress the default panic printout for step-limit aborts; they are
    // reported below and mapped to a dedicated exit code.
    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        if info.payload().downcast_ref::<StepLimitExceeded>().is_none() {
            default_hook(info);
        }
    }));

    match panic::catch_unwind(AssertUnwindSafe(|| run(cli.command))) {
        Ok(Ok(output)) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Ok(Err(CliError::Validation(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CliError::Precondition(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(payload) => match payload.downcast_ref::<StepLimitExceeded>() {
            Some(limit) => {
                eprintln!("error: {limit}");
                ExitCode::from(3)
            }
            None => ExitCode::from(101),
        },
    }
}
