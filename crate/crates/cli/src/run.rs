//! Command execution and exit codes.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use hadamard_core::bloch::{circle_intersections, trajectory};
use hadamard_core::qcore::unitarity_residual;
use hadamard_core::verify::{check_pair, Derivation, DerivedFamily};
use hadamard_core::UNITARY_TOL;
use rayon::prelude::*;

use crate::command::{CommandSpec, Format};
use crate::emit::Document;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for domain and IO failures.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for malformed arguments and unknown names.
pub const EXIT_USAGE: i32 = 2;

/// A failure after the arguments parsed.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Parameters outside a constructor's domain.
    #[error(transparent)]
    Domain(#[from] hadamard_core::Error),
    /// The output file could not be written.
    #[error("cannot write {}: {source}", path.display())]
    Io {
        /// Destination.
        path: PathBuf,
        /// Underlying error.
        source: io::Error,
    },
    /// The worker pool could not start.
    #[error("cannot start worker threads: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

fn positive(name: &'static str, value: f64) -> Result<f64, CliError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(hadamard_core::Error::Domain {
            name,
            value,
            domain: "(0, inf)",
        }
        .into())
    }
}

/// Runs a derivation on `threads` workers (`None` or `0`: pool default,
/// `1`: current thread). Output does not depend on the thread count.
pub fn derive(job: &Derivation, threads: Option<usize>) -> Result<DerivedFamily, CliError> {
    if threads == Some(1) {
        return Ok(job.run());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()?;
    let accepted = pool.install(|| {
        (0..job.len())
            .into_par_iter()
            .filter_map(|i| job.evaluate(i))
            .collect()
    });
    Ok(job.finish(accepted))
}

/// Computes the document a command asks for, with its format.
pub fn execute(spec: &CommandSpec) -> Result<(Document, Format), CliError> {
    Ok(match spec {
        CommandSpec::GatesShow { name, format, .. } => (Document::Gate(name.build()?), *format),
        CommandSpec::CheckUnitarity { name, .. } => (
            Document::Unitarity {
                gate: name.to_string(),
                residual: unitarity_residual(&name.build()?),
                tol: UNITARY_TOL,
            },
            Format::Json,
        ),
        CommandSpec::Verify {
            gate,
            template,
            family,
            tol,
            ..
        } => {
            let tol = positive("tol", *tol)?;
            let report = check_pair(&gate.build()?, &family.build()?, &template.build()?, tol)?;
            (Document::Residuals(report), Format::Json)
        }
        CommandSpec::Derive {
            gate,
            template,
            convention,
            grid,
            tol,
            threads,
            format,
            ..
        } => {
            let job = Derivation::new(gate.build()?, template.build()?, *convention, *grid, *tol)?;
            let family = derive(&job, *threads)?;
            (
                Document::Derived {
                    gate: gate.to_string(),
                    template: template.to_string(),
                    family,
                },
                *format,
            )
        }
        CommandSpec::Trajectory {
            family,
            samples,
            format,
            ..
        } => (Document::Trajectory(trajectory(family, *samples)?), *format),
        CommandSpec::Intersect {
            family,
            circle,
            tol,
            format,
            ..
        } => (
            Document::Intersections(circle_intersections(family, (*circle).into(), *tol)?),
            *format,
        ),
    })
}

fn emit(spec: &CommandSpec, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (doc, format) = execute(spec)?;
    let text = doc.render(format);
    match spec.out() {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Parses `args` (without the program name), runs the command and returns
/// the exit status. Diagnostics go to `stderr` as a single line.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let spec = match CommandSpec::parse_from(args) {
        Ok(spec) => spec,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };
    match emit(&spec, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}
