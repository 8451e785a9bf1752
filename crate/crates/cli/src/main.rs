use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use harmlike_cli::commands::{self, COEFFS_COLUMNS, COMPARE_COLUMNS, TABLE_COLUMNS};
use harmlike_cli::verify::CHECK_COLUMNS;
use harmlike_cli::{
    parse_complex, run_verify, write_records, Format, HarmonicCoefficients, Record, Suite,
};
use harmlike_core::coefficients::FunctionId;
use harmlike_core::series::SeriesOptions;
use harmlike_core::ComplexScalar;

/// Harmonic-like numbers H_n(a), sine-integral series and their identities.
#[derive(Parser, Debug)]
#[command(name = "harmlike", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate H_n(a) for n = 1..n_max.
    Table {
        /// Complex parameter: RE, RE+IMi or RE-IMi.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: ComplexScalar,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run identity suites; exit 1 if any check deviates from its expectation.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, default_value_t = 1e-14, value_parser = parse_tol)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate a series against its reference product on a real grid.
    Compare {
        #[arg(long, default_value = "si2", value_parser = parse_series_id)]
        function: FunctionId,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        z_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        z_max: f64,
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, default_value_t = 1e-14, value_parser = parse_tol)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print exact series coefficients as p/q with their floating values.
    Coeffs {
        #[arg(long, default_value = "si2", value_parser = parse_function_id)]
        function: FunctionId,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Significant decimal digits for floating values.
    #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    All,
    Staver,
    Recurrence,
    Eq2,
    #[value(name = "series_coeffs")]
    SeriesCoeffs,
    #[value(name = "series_values")]
    SeriesValues,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Staver => Suite::Staver,
            SuiteArg::Recurrence => Suite::Recurrence,
            SuiteArg::Eq2 => Suite::Eq2,
            SuiteArg::SeriesCoeffs => Suite::SeriesCoeffs,
            SuiteArg::SeriesValues => Suite::SeriesValues,
        }
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(format!("tol must lie in (0, 1), got {s}"))
    }
}

fn parse_function_id(s: &str) -> Result<FunctionId, String> {
    s.parse().map_err(|e: harmlike_core::Error| e.to_string())
}

fn parse_series_id(s: &str) -> Result<FunctionId, String> {
    let id = parse_function_id(s)?;
    if FunctionId::HARMONIC_WEIGHTED.contains(&id) {
        Ok(id)
    } else {
        Err(format!("{id} is not one of si2, cossi, shi2, coshshi"))
    }
}

fn emit(header: &[&'static str], records: &[Record], out: &OutputArgs) -> io::Result<()> {
    let format = match out.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let stdout = io::stdout().lock();
    write_records(stdout, header, records, format, out.precision as usize)
}

fn run(cli: Cli) -> Result<u8, String> {
    let io_err = |e: io::Error| e.to_string();
    let core_err = |e: harmlike_core::Error| e.to_string();
    match cli.command {
        Command::Table { a, n_max, out } => {
            let records = commands::table(a, n_max).map_err(core_err)?;
            emit(&TABLE_COLUMNS, &records, &out).map_err(io_err)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            n_max,
            tol,
            out,
        } => {
            let report = run_verify(suite.into(), n_max, tol, &HarmonicCoefficients);
            let records: Vec<Record> = report.checks.iter().map(|c| c.record()).collect();
            emit(&CHECK_COLUMNS, &records, &out).map_err(io_err)?;
            eprintln!("{}", report.summary());
            Ok(report.exit_code())
        }
        Command::Compare {
            function,
            z_min,
            z_max,
            steps,
            tol,
            out,
        } => {
            if !(z_min.is_finite() && z_max.is_finite()) || z_min > z_max {
                Cli::command()
                    .error(
                        ErrorKind::ValueValidation,
                        format!("z grid needs finite z_min <= z_max, got [{z_min}, {z_max}]"),
                    )
                    .exit();
            }
            let options = SeriesOptions::with_tol(tol);
            let records = commands::compare(function, z_min, z_max, steps as usize, &options)
                .map_err(core_err)?;
            emit(&COMPARE_COLUMNS, &records, &out).map_err(io_err)?;
            Ok(0)
        }
        Command::Coeffs {
            function,
            n_max,
            out,
        } => {
            let records = commands::coeffs(function, n_max).map_err(core_err)?;
            emit(&COEFFS_COLUMNS, &records, &out).map_err(io_err)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("harmlike: {msg}");
            let _ = io::stderr().flush();
            ExitCode::from(2)
        }
    }
}
