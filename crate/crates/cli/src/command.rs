//! Argument grammar and its canonical spelling.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hadamard_core::bloch::GreatCircle;
use hadamard_core::ensembles::{FamilyCurve, PairSpec};
use hadamard_core::gates::GateSpec;
use hadamard_core::verify::{GridSpec, TemplateSpec};
use hadamard_core::ComplementConvention;

/// Output document format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Compact JSON, one document per run.
    Json,
    /// Comma-separated values with a header row.
    Csv,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Self::Json => "json",
            Self::Csv => "csv",
        }
    }
}

/// Great circle selector for `intersect`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Circle {
    /// `y = 0`
    Polar,
    /// `z = 0`
    Equatorial,
}

impl Circle {
    fn as_str(self) -> &'static str {
        match self {
            Self::Polar => "polar",
            Self::Equatorial => "equatorial",
        }
    }
}

impl From<Circle> for GreatCircle {
    fn from(c: Circle) -> Self {
        match c {
            Circle::Polar => GreatCircle::Polar,
            Circle::Equatorial => GreatCircle::Equatorial,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hadamard",
    version,
    about = "Build Hadamard-type gates, check them on their state ensembles, and export Bloch-sphere data"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandSpec,
}

/// One parsed invocation.
#[derive(Subcommand, Clone, Debug, PartialEq)]
pub enum CommandSpec {
    /// Print a gate matrix.
    GatesShow {
        /// Gate, e.g. `hadamard` or `polar:0.5`.
        name: GateSpec,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report ‖G†G − I‖∞ for a gate.
    CheckUnitarity {
        /// Gate name.
        name: GateSpec,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a gate against a template on one ensemble pair.
    Verify {
        /// Gate name.
        #[arg(long)]
        gate: GateSpec,
        /// Template name.
        #[arg(long)]
        template: TemplateSpec,
        /// Pair, e.g. `theorem1:0.5,+,A`.
        #[arg(long)]
        family: PairSpec,
        /// Pass threshold on both residuals.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force the states on which a gate satisfies a template.
    Derive {
        /// Gate name.
        #[arg(long)]
        gate: GateSpec,
        /// Template name.
        #[arg(long)]
        template: TemplateSpec,
        /// Complement convention, A or B.
        #[arg(long, default_value = "A")]
        convention: ComplementConvention,
        /// Grid sizes `NT,NP,NG`.
        #[arg(long, default_value = "64,128,128")]
        grid: GridSpec,
        /// Acceptance threshold.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Worker threads; 1 runs sequentially, 0 lets the pool decide.
        #[arg(long)]
        threads: Option<usize>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a family curve on the Bloch sphere.
    Trajectory {
        /// Family curve, e.g. `theorem1:+,A`.
        #[arg(long)]
        family: FamilyCurve,
        /// Number of samples (at least 2).
        #[arg(long)]
        samples: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find where a family curve crosses a great circle.
    Intersect {
        /// Family curve.
        #[arg(long)]
        family: FamilyCurve,
        /// Great circle.
        #[arg(long, value_enum)]
        circle: Circle,
        /// Bisection target for the vanishing coordinate.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl CommandSpec {
    /// Parses arguments, not including the program name.
    pub fn parse_from<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let argv =
            std::iter::once(OsString::from("hadamard")).chain(args.into_iter().map(Into::into));
        Cli::try_parse_from(argv).map(|cli| cli.command)
    }

    /// Destination file, if any.
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Self::GatesShow { out, .. }
            | Self::CheckUnitarity { out, .. }
            | Self::Verify { out, .. }
            | Self::Derive { out, .. }
            | Self::Trajectory { out, .. }
            | Self::Intersect { out, .. } => out.as_ref(),
        }
    }

    /// Canonical argument list: every option spelled out, in a fixed order.
    /// Parsing it gives back `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        let opt = |v: &mut Vec<String>, flag: &str, value: String| {
            v.push(format!("--{flag}"));
            v.push(value);
        };
        let out = self.out().cloned();
        match self {
            Self::GatesShow { name, format, .. } => {
                v.extend(["gates-show".into(), name.to_string()]);
                opt(&mut v, "format", format.as_str().into());
            }
            Self::CheckUnitarity { name, .. } => {
                v.extend(["check-unitarity".into(), name.to_string()]);
            }
            Self::Verify {
                gate,
                template,
                family,
                tol,
                ..
            } => {
                v.push("verify".into());
                opt(&mut v, "gate", gate.to_string());
                opt(&mut v, "template", template.to_string());
                opt(&mut v, "family", family.to_string());
                opt(&mut v, "tol", format!("{tol:e}"));
            }
            Self::Derive {
                gate,
                template,
                convention,
                grid,
                tol,
                threads,
                format,
                ..
            } => {
                v.push("derive".into());
                opt(&mut v, "gate", gate.to_string());
                opt(&mut v, "template", template.to_string());
                opt(&mut v, "convention", convention.to_string());
                opt(&mut v, "grid", grid.to_string());
                opt(&mut v, "tol", format!("{tol:e}"));
                if let Some(n) = threads {
                    opt(&mut v, "threads", n.to_string());
                }
                opt(&mut v, "format", format.as_str().into());
            }
            Self::Trajectory {
                family,
                samples,
                format,
                ..
            } => {
                v.push("trajectory".into());
                opt(&mut v, "family", family.to_string());
                opt(&mut v, "samples", samples.to_string());
                opt(&mut v, "format", format.as_str().into());
            }
            Self::Intersect {
                family,
                circle,
                tol,
                format,
                ..
            } => {
                v.push("intersect".into());
                opt(&mut v, "family", family.to_string());
                opt(&mut v, "circle", circle.as_str().into());
                opt(&mut v, "tol", format!("{tol:e}"));
                opt(&mut v, "format", format.as_str().into());
            }
        }
        if let Some(path) = out {
            opt(&mut v, "out", path.display().to_string());
        }
        v
    }
}
