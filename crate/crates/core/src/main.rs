use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mixsurf::cli::{self, AnalyzeOptions, CliError};
use mixsurf::lattice::Audit;

#[derive(Parser)]
#[command(
    name = "mixsurf",
    version,
    about = "Albanese maps and further quotients of mixed surfaces"
)]
struct Args {
    /// Exhaustive check that overgroups of G in G0(2) match the kernels.
    #[arg(long, global = true, value_enum)]
    audit_bijection: Option<Switch>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one configuration.
    Analyze {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Further-quotient table only.
    Lattice {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Reports for the built-in families, checked against their expected values.
    Catalog {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate free generating vectors of G0.
    Search {
        config: PathBuf,
        #[arg(long)]
        base_genus: usize,
        #[arg(long, default_value_t = cli::search::DEFAULT_BUDGET)]
        budget: u128,
    },
}

fn emit(value: &Value, format: Format) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => cli::render_text(value),
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(args: Args) -> Result<(), CliError> {
    let audit = match args.audit_bijection {
        None => Audit::Auto,
        Some(Switch::On) => Audit::On,
        Some(Switch::Off) => Audit::Off,
    };
    let opts = AnalyzeOptions { audit };
    match args.command {
        Command::Analyze { config, format } => {
            let config = cli::load_config(&config)?;
            emit(&cli::analyze(&config, opts)?, format);
        }
        Command::Lattice { config, format } => {
            let config = cli::load_config(&config)?;
            emit(&cli::lattice_json(&config, opts)?, format);
        }
        Command::Catalog { family, format } => {
            let outcomes = cli::catalog(family.as_deref(), opts)?;
            let families: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "family": o.family,
                        "description": o.description,
                        "matches_expected": o.deviations.is_empty(),
                        "deviations": o.deviations,
                        "report": o.report,
                    })
                })
                .collect();
            emit(&json!({ "families": families }), format);
            let bad: Vec<&str> = outcomes
                .iter()
                .filter(|o| !o.deviations.is_empty())
                .map(|o| o.family.as_str())
                .collect();
            if !bad.is_empty() {
                return Err(CliError::CatalogDeviation(bad.join(", ")));
            }
        }
        Command::Search {
            config,
            base_genus,
            budget,
        } => {
            let (group, g0) = cli::config::load_search_config(&config)?;
            let (g0_group, members) = g0.as_group(&group.group);
            let summary = cli::search_free(&g0_group, base_genus, budget)?;
            let reps: Vec<Vec<&str>> = summary
                .representatives
                .iter()
                .map(|t| t.iter().map(|&x| group.name(members[x])).collect())
                .collect();
            emit(
                &json!({
                    "g0_order": g0.order(),
                    "base_genus": base_genus,
                    "total": summary.total,
                    "orbits": summary.orbits(),
                    "representatives": reps,
                }),
                Format::Json,
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
