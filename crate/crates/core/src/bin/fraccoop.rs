use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fraccoop::cli::{self, CliError, Report, DEFAULT_STEP, DEFAULT_T_FINAL};

#[derive(Parser)]
#[command(name = "fraccoop", version, about = "Multi-order fractional cooperative systems")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a reference system (1, 2 or 3) with all applicable checks.
    Reproduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        example: u8,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_T_FINAL)]
        tfinal: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Check cooperativity, homogeneity and a decay direction of a field file.
    Analyze {
        field: PathBuf,
        /// Exit with status 1 when a hypothesis fails.
        #[arg(long)]
        strict: bool,
    },
    /// Fit the Mittag-Leffler envelope for one initial value and overlay it.
    Envelope {
        field: PathBuf,
        #[arg(long)]
        orders: String,
        #[arg(long)]
        omega: String,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_T_FINAL)]
        tfinal: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Integrate a field file and write the trajectory.
    Simulate {
        field: PathBuf,
        #[arg(long)]
        orders: String,
        #[arg(long)]
        omega: String,
        #[arg(long)]
        tfinal: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Reproduce { example, out, tfinal, step } => cli::reproduce(example, &out, tfinal, step),
        Command::Analyze { field, strict } => cli::analyze_file(&field, strict),
        Command::Envelope { field, orders, omega, v, out, tfinal, step } => {
            let v = v.as_deref().map(cli::parse_list).transpose()?;
            cli::envelope_file(
                &field,
                &cli::parse_list(&orders)?,
                &cli::parse_list(&omega)?,
                v.as_deref(),
                &out,
                tfinal,
                step,
            )
        }
        Command::Simulate { field, orders, omega, tfinal, step, out } => cli::simulate_file(
            &field,
            &cli::parse_list(&orders)?,
            &cli::parse_list(&omega)?,
            &out,
            tfinal,
            step,
        ),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(args.command) {
        Ok(report) => {
            print!("{}", report.text());
            ExitCode::from(report.status().code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code())
        }
    }
}
