//! Gate constructors.
//!
//! Every constructor is a pure function of its parameters and returns a matrix
//! with unitarity residual below [`UNITARY_TOL`](crate::UNITARY_TOL). Weights
//! are validated here, not at application time.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::math::{cis, wrap_tau, FRAC_1_SQRT_2};
use crate::parse;
use crate::qcore::{re, Complex, GateMatrix, I, ONE, ZERO};
use crate::{Error, SpecParseError, NORM_TOL};

/// Threshold on `|Im p|`, `|Im q|` for the real-weight gate.
pub const REAL_TOL: f64 = 1e-12;

/// Unequal superposition weights `(p, q)` with `|p|² + |q|² = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuperpositionWeights {
    p: Complex,
    q: Complex,
}

impl SuperpositionWeights {
    /// Validates `|p|² + |q|² = 1` within [`NORM_TOL`].
    pub fn new(p: Complex, q: Complex) -> Result<Self, Error> {
        if !(p.re.is_finite() && p.im.is_finite() && q.re.is_finite() && q.im.is_finite()) {
            return Err(Error::NonFinite("SuperpositionWeights::new"));
        }
        let residual = (p.norm_sqr() + q.norm_sqr() - 1.0).abs();
        if residual > NORM_TOL {
            return Err(Error::WeightsNotNormalized { residual });
        }
        Ok(Self { p, q })
    }

    /// `p = q = 1/√2`.
    pub fn equal() -> Self {
        Self {
            p: re(FRAC_1_SQRT_2),
            q: re(FRAC_1_SQRT_2),
        }
    }

    /// Weight on `ψ`.
    pub fn p(&self) -> Complex {
        self.p
    }

    /// Weight on `ψ⊥`.
    pub fn q(&self) -> Complex {
        self.q
    }
}

/// Azimuthal phase in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PhaseAngle(f64);

impl PhaseAngle {
    /// Reduces `phi` modulo 2π.
    pub fn new(phi: f64) -> Result<Self, Error> {
        if !phi.is_finite() {
            return Err(Error::NonFinite("PhaseAngle::new"));
        }
        Ok(Self(wrap_tau(phi)))
    }

    /// `φ = 0`.
    pub const fn zero() -> Self {
        Self(0.0)
    }

    /// Radians in `[0, 2π)`.
    pub fn radians(&self) -> f64 {
        self.0
    }
}

/// `σ_x`.
pub fn pauli_x() -> GateMatrix {
    GateMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

/// `H = (1/√2)[[1, 1], [1, −1]]`.
pub fn hadamard() -> GateMatrix {
    let s = re(FRAC_1_SQRT_2);
    GateMatrix::from_rows([[s, s], [s, re(-FRAC_1_SQRT_2)]])
}

/// `H_G^φ = (1/√2)[[1, −e^{−iφ}], [e^{iφ}, 1]]`; `φ = 0` gives `H_P = σ_x H`.
pub fn polar_gate(phi: PhaseAngle) -> GateMatrix {
    let e = cis(phi.radians());
    let s = FRAC_1_SQRT_2;
    GateMatrix::from_rows([[re(s), -e.conj() * s], [e * s, re(s)]])
}

/// `H_E = (1/√2)[[1 − i, 0], [0, 1 + i]]`.
pub fn equatorial_gate() -> GateMatrix {
    let s = FRAC_1_SQRT_2;
    GateMatrix::from_rows([[Complex::new(s, -s), ZERO], [ZERO, Complex::new(s, s)]])
}

/// `U = (1/√2)[[1, i], [i, 1]]`, the fixed equatorial-type gate.
pub fn symmetric_u() -> GateMatrix {
    let s = FRAC_1_SQRT_2;
    GateMatrix::from_rows([[re(s), I * s], [I * s, re(s)]])
}

/// `[[p, q*], [q, −p*]]`.
pub fn unequal_general(w: SuperpositionWeights) -> GateMatrix {
    let (p, q) = (w.p, w.q);
    GateMatrix::from_rows([[p, q.conj()], [q, -p.conj()]])
}

/// `U_G^φ = [[p, −q e^{−iφ}], [q e^{iφ}, p]]` for real `p`, `q`; `φ = 0`
/// gives `U_P`.
pub fn unequal_polar_gate(w: SuperpositionWeights, phi: PhaseAngle) -> Result<GateMatrix, Error> {
    let (p, q) = (w.p, w.q);
    if p.im.abs() >= REAL_TOL || q.im.abs() >= REAL_TOL {
        return Err(Error::ComplexWeights {
            p_im: p.im,
            q_im: q.im,
        });
    }
    let (p, q) = (p.re, q.re);
    let e = cis(phi.radians());
    Ok(GateMatrix::from_rows([
        [re(p), -e.conj() * q],
        [e * q, re(p)],
    ]))
}

/// `[[p, iq*], [iq, p*]]`.
pub fn unequal_equatorial(w: SuperpositionWeights) -> GateMatrix {
    let (p, q) = (w.p, w.q);
    GateMatrix::from_rows([[p, I * q.conj()], [I * q, p.conj()]])
}

/// A gate named in the `name:param,...` mini-language.
///
/// Parsing only checks names and number syntax; [`GateSpec::build`] validates
/// the parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateSpec {
    /// `hadamard`
    Hadamard,
    /// `polar:PHI`
    Polar {
        /// φ in radians.
        phi: f64,
    },
    /// `equatorial`
    Equatorial,
    /// `symmetric-u`
    SymmetricU,
    /// `unequal:P_RE,P_IM,Q_RE,Q_IM`
    Unequal {
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
    },
    /// `unequal-polar:P,Q,PHI`
    UnequalPolar {
        /// real `p`
        p: f64,
        /// real `q`
        q: f64,
        /// φ in radians.
        phi: f64,
    },
    /// `unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM`
    UnequalEquatorial {
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
    },
}

impl GateSpec {
    /// Every accepted spelling, with parameter placeholders.
    pub const USAGE: &'static [&'static str] = &[
        "hadamard",
        "polar:PHI",
        "equatorial",
        "symmetric-u",
        "unequal:P_RE,P_IM,Q_RE,Q_IM",
        "unequal-polar:P,Q,PHI",
        "unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM",
    ];

    /// Constructs the matrix, validating parameters.
    pub fn build(&self) -> Result<GateMatrix, Error> {
        Ok(match *self {
            Self::Hadamard => hadamard(),
            Self::Polar { phi } => polar_gate(PhaseAngle::new(phi)?),
            Self::Equatorial => equatorial_gate(),
            Self::SymmetricU => symmetric_u(),
            Self::Unequal { p, q } => unequal_general(SuperpositionWeights::new(p, q)?),
            Self::UnequalPolar { p, q, phi } => unequal_polar_gate(
                SuperpositionWeights::new(re(p), re(q))?,
                PhaseAngle::new(phi)?,
            )?,
            Self::UnequalEquatorial { p, q } => {
                unequal_equatorial(SuperpositionWeights::new(p, q)?)
            }
        })
    }
}

fn complex_pair(
    name: &str,
    args: Option<&str>,
    usage: &str,
) -> Result<(Complex, Complex), SpecParseError> {
    let v = parse::params(name, args, 4, usage)?;
    let xs: Vec<f64> = ["P_RE", "P_IM", "Q_RE", "Q_IM"]
        .iter()
        .zip(&v)
        .map(|(field, s)| parse::float(field, s))
        .collect::<Result<_, _>>()?;
    Ok((Complex::new(xs[0], xs[1]), Complex::new(xs[2], xs[3])))
}

impl FromStr for GateSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = parse::split(s.trim());
        match name {
            "hadamard" => parse::params(name, args, 0, "hadamard").map(|_| Self::Hadamard),
            "equatorial" => parse::params(name, args, 0, "equatorial").map(|_| Self::Equatorial),
            "symmetric-u" => parse::params(name, args, 0, "symmetric-u").map(|_| Self::SymmetricU),
            "polar" => {
                let v = parse::params(name, args, 1, "polar:PHI")?;
                Ok(Self::Polar {
                    phi: parse::float("PHI", v[0])?,
                })
            }
            "unequal" => {
                let (p, q) = complex_pair(name, args, "unequal:P_RE,P_IM,Q_RE,Q_IM")?;
                Ok(Self::Unequal { p, q })
            }
            "unequal-equatorial" => {
                let (p, q) = complex_pair(name, args, "unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM")?;
                Ok(Self::UnequalEquatorial { p, q })
            }
            "unequal-polar" => {
                let v = parse::params(name, args, 3, "unequal-polar:P,Q,PHI")?;
                Ok(Self::UnequalPolar {
                    p: parse::float("P", v[0])?,
                    q: parse::float("Q", v[1])?,
                    phi: parse::float("PHI", v[2])?,
                })
            }
            _ => Err(parse::unknown("gate", name, Self::USAGE)),
        }
    }
}

impl fmt::Display for GateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Hadamard => f.write_str("hadamard"),
            Self::Polar { phi } => write!(f, "polar:{phi}"),
            Self::Equatorial => f.write_str("equatorial"),
            Self::SymmetricU => f.write_str("symmetric-u"),
            Self::Unequal { p, q } => write!(f, "unequal:{},{},{},{}", p.re, p.im, q.re, q.im),
            Self::UnequalPolar { p, q, phi } => write!(f, "unequal-polar:{p},{q},{phi}"),
            Self::UnequalEquatorial { p, q } => {
                write!(f, "unequal-equatorial:{},{},{},{}", p.re, p.im, q.re, q.im)
            }
        }
    }
}
