use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use glob::Pattern;

use contact_dirac::fixture::{load_fixture, Fixture, FixtureError};
use contact_dirac::report::{
    build_report, compare_spectra, operator_by_name, render_json, render_spectrum_text,
    render_text, spectrum_table, ReportOptions, SpectrumTable, OPERATOR_NAMES,
};
use contact_dirac::spinor::SpinorModule;

#[derive(Parser)]
#[command(
    name = "contact-dirac",
    version,
    about = "Exact checks for Dirac operators on contact metric Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fixture's frame and contact axioms.
    Validate {
        #[arg(long)]
        fixture: PathBuf,
    },
    /// Run the identity battery.
    Report {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Only run identities whose name matches this glob.
        #[arg(long)]
        only: Option<String>,
        /// Spectrum table for H to compare against.
        #[arg(long)]
        baseline: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        timing: bool,
        /// Exit 1 if any identity fails.
        #[arg(long)]
        strict: bool,
    },
    /// Eigenvalues of an invariant operator.
    Spectrum {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long, default_value = "H")]
        operator: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        baseline: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn load(path: &Path) -> Result<(Fixture, Vec<u8>), ExitCode> {
    let bytes =
        std::fs::read(path).map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    match load_fixture(path) {
        Ok(fx) => Ok((fx, bytes)),
        Err(e) if e.is_axiom_violation() => Err(fail(1, e)),
        Err(e) => Err(fail(2, e)),
    }
}

fn load_baseline(path: &Path) -> Result<SpectrumTable, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| fail(2, format!("malformed baseline: {e}")))
}

fn contact_error(e: FixtureError) -> ExitCode {
    match e {
        FixtureError::Contact(_) | FixtureError::NoContact => fail(1, e),
        e => fail(2, e),
    }
}

fn validate(path: &Path) -> ExitCode {
    let fx = match load(path) {
        Ok((fx, _)) => fx,
        Err(code) => return code,
    };
    match fx.violations() {
        Ok(v) if v.is_empty() => {
            emit(&format!("{}: valid contact metric frame\n", fx.name));
            ExitCode::SUCCESS
        }
        Ok(v) => {
            let mut out = format!("{}: invalid\n", fx.name);
            for x in v {
                out.push_str(&format!("  violated: {x}\n"));
            }
            emit(&out);
            ExitCode::from(1)
        }
        Err(FixtureError::NoContact) => {
            emit(&format!(
                "{}: valid frame without contact structure\n",
                fx.name
            ));
            ExitCode::SUCCESS
        }
        Err(e) => contact_error(e),
    }
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { fixture } => validate(&fixture),
        Command::Report {
            fixture,
            format,
            only,
            baseline,
            tol,
            timing,
            strict,
        } => {
            let (fx, bytes) = match load(&fixture) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let only = match only.map(|p| Pattern::new(&p)) {
                None => None,
                Some(Ok(p)) => Some(p),
                Some(Err(e)) => return fail(2, format!("bad --only pattern: {e}")),
            };
            let baseline = match baseline.map(|b| load_baseline(&b)).transpose() {
                Ok(b) => b,
                Err(code) => return code,
            };
            let opts = ReportOptions {
                only,
                baseline,
                tol,
                timing,
                ..ReportOptions::default()
            };
            let report = match build_report(&fx, &bytes, &opts) {
                Ok(r) => r,
                Err(e) => return contact_error(e),
            };
            match format {
                Format::Text => emit(&render_text(&report)),
                Format::Json => emit(&format!("{}\n", render_json(&report))),
            }
            if strict && report.failures() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Spectrum {
            fixture,
            operator,
            format,
            baseline,
            tol,
        } => {
            if !OPERATOR_NAMES.contains(&operator.as_str()) {
                return fail(
                    2,
                    format!(
                        "unknown operator {operator:?}; valid: {}",
                        OPERATOR_NAMES.join(", ")
                    ),
                );
            }
            let (fx, _) = match load(&fixture) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let cd = match fx.contact() {
                Ok(cd) => cd,
                Err(e) => return contact_error(e),
            };
            let sm = SpinorModule::new(&cd);
            let Some(m) = operator_by_name(&sm, &operator) else {
                return fail(1, format!("{operator} is not defined on {}", fx.name));
            };
            let table = spectrum_table(&fx.name, &operator, &m);
            match format {
                Format::Text => emit(&render_spectrum_text(&table)),
                Format::Json => emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&table).expect("serializes")
                )),
            }
            if let Some(b) = baseline {
                let want = match load_baseline(&b) {
                    Ok(w) => w,
                    Err(code) => return code,
                };
                if let Some(msg) = compare_spectra(&table, &want, tol) {
                    return fail(1, format!("spectrum differs from baseline: {msg}"));
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    run()
}
