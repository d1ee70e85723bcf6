use alloc::string::String;

/// Errors raised by constructors and checks in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A NaN or infinite value reached a constructor.
    #[error("non-finite value passed to {0}")]
    NonFinite(&'static str),
    /// `| |a|² + |b|² − 1 |` exceeded the construction tolerance.
    #[error("state is not normalized: ||a|^2 + |b|^2 - 1| = {residual:e}")]
    NotNormalized {
        /// Absolute normalization defect.
        residual: f64,
    },
    /// A matrix handed to an operation that requires unitarity is not unitary.
    #[error("matrix is not unitary: ||G^dagger G - I||_inf = {residual:e}")]
    NotUnitary {
        /// `‖G†G − I‖∞`.
        residual: f64,
    },
    /// `| |p|² + |q|² − 1 |` exceeded the construction tolerance.
    #[error("superposition weights are not normalized: ||p|^2 + |q|^2 - 1| = {residual:e}")]
    WeightsNotNormalized {
        /// Absolute normalization defect.
        residual: f64,
    },
    /// The unequal polar gate takes real weights only.
    #[error("unequal polar gate requires real p and q, got Im(p) = {p_im:e}, Im(q) = {q_im:e}")]
    ComplexWeights {
        /// Imaginary part of `p`.
        p_im: f64,
        /// Imaginary part of `q`.
        q_im: f64,
    },
    /// A family or curve parameter fell outside its domain.
    #[error("{name} = {value} is outside the domain {domain}")]
    Domain {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Human-readable domain.
        domain: &'static str,
    },
    /// `q = 0` in an unequal family; the real part of `a` is fixed by `b/q`.
    #[error("q = 0: the ratio b/q is undefined")]
    DegenerateRatio,
    /// `Im(q·b*) ≠ 0`.
    #[error(
        "Im(q b*) = {im:e} is not zero; admissible cases are q and b both real, \
         both imaginary, or complex with Re(q)/Im(q) = Re(b)/Im(b)"
    )]
    CaseCondition {
        /// `Im(q·b*)`.
        im: f64,
    },
    /// `1 − a₁² − |b|²` is negative, so no real `a₂` normalizes the state.
    #[error("no normalized state exists: 1 - a1^2 - |b|^2 = {radicand:e}")]
    InfeasibleNormalization {
        /// The negative radicand.
        radicand: f64,
    },
    /// `ψ` and `ψ⊥` handed to a pair check are not orthogonal.
    #[error("pair is not orthogonal: |<psi|psi_perp>| = {overlap:e}")]
    NonOrthogonalPair {
        /// `|⟨ψ|ψ⊥⟩|`.
        overlap: f64,
    },
    /// Template coefficient matrix is not unitary.
    #[error("template coefficients are not unitary: residual {residual:e}")]
    TemplateNotUnitary {
        /// `‖C†C − I‖∞`.
        residual: f64,
    },
    /// Grid or tolerance arguments violate their preconditions.
    #[error("invalid derivation setup: {0}")]
    InvalidDerivation(&'static str),
    /// A sample count is too small.
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples {
        /// Minimum accepted.
        min: usize,
        /// Requested.
        got: usize,
    },
}

/// Failure to parse a gate, template, family or curve name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct SpecParseError {
    pub(crate) message: String,
}

impl SpecParseError {
    pub(crate) fn new(message: String) -> Self {
        Self { message }
    }

    /// The diagnostic text.
    pub fn message(&self) -> &str {
        &self.message
    }
}
