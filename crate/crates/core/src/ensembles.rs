//! State families on which each gate implements its template universally.
//!
//! Every constructor returns a `(ψ, ψ⊥)` pair. Square-root branches for the
//! dependent parameter are explicit [`Branch`] arguments, never inferred.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::gates::{PhaseAngle, SuperpositionWeights, REAL_TOL};
use crate::math::{cis, cos, linspace, modulus, sin, sqrt, FRAC_1_SQRT_2, PI, TAU};
use crate::parse;
use crate::qcore::{inner_product, ComplementConvention, Complex, QubitState};
use crate::{Error, SpecParseError, NORM_TOL};

/// Sign of a square-root branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `+√`
    Plus,
    /// `−√`
    Minus,
}

impl Branch {
    /// `±1.0`.
    pub fn sign(&self) -> f64 {
        match self {
            Self::Plus => 1.0,
            Self::Minus => -1.0,
        }
    }

    /// The opposite branch.
    pub fn flip(&self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plus => "+",
            Self::Minus => "-",
        })
    }
}

impl FromStr for Branch {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" => Ok(Self::Plus),
            "-" => Ok(Self::Minus),
            _ => Err(SpecParseError::new(format!(
                "unknown branch '{s}' (expected + or -)"
            ))),
        }
    }
}

/// An orthonormal pair `(ψ, ψ⊥)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatePair {
    /// `ψ`
    pub psi: QubitState,
    /// `ψ⊥`
    pub perp: QubitState,
}

impl StatePair {
    /// `|⟨ψ|ψ⊥⟩|`.
    pub fn overlap(&self) -> f64 {
        modulus(inner_product(&self.psi, &self.perp))
    }
}

fn state(a: Complex, b: Complex) -> Result<QubitState, Error> {
    QubitState::new(a, b)
}

/// `branch · √(radicand)`, tolerating a radicand down to `−NORM_TOL`.
fn dependent(
    radicand: f64,
    branch: Branch,
    name: &'static str,
    value: f64,
    domain: &'static str,
) -> Result<f64, Error> {
    if radicand < -NORM_TOL || !value.is_finite() {
        return Err(Error::Domain {
            name,
            value,
            domain,
        });
    }
    Ok(branch.sign() * sqrt(radicand.max(0.0)))
}

/// The ensemble on which `H` acts as the Hadamard template.
///
/// Convention A reads `param` as `α`, with `β = branch·√(1 − 2α²)`:
/// `ψ = (α + iβ)|0⟩ + α|1⟩`, `ψ⊥ = α|0⟩ − (α − iβ)|1⟩`.
///
/// Convention B reads `param` as the shared imaginary part `β`, with
/// `α = branch·√(1 − 2β²)`: `ψ = (α + iβ)|0⟩ + iβ|1⟩`,
/// `ψ⊥ = iβ|0⟩ + (α − iβ)|1⟩`. A at `t` and B at `−t` (same branch) land on the
/// same Bloch point.
pub fn theorem1_state(
    param: f64,
    branch: Branch,
    convention: ComplementConvention,
) -> Result<StatePair, Error> {
    const DOMAIN: &str = "[-1/sqrt(2), 1/sqrt(2)]";
    match convention {
        ComplementConvention::A => {
            let alpha = param;
            let beta = dependent(1.0 - 2.0 * alpha * alpha, branch, "alpha", alpha, DOMAIN)?;
            Ok(StatePair {
                psi: state(Complex::new(alpha, beta), Complex::new(alpha, 0.0))?,
                perp: state(Complex::new(alpha, 0.0), -Complex::new(alpha, -beta))?,
            })
        }
        ComplementConvention::B => {
            let beta = param;
            let alpha = dependent(1.0 - 2.0 * beta * beta, branch, "beta", beta, DOMAIN)?;
            Ok(StatePair {
                psi: state(Complex::new(alpha, beta), Complex::new(0.0, beta))?,
                perp: state(Complex::new(0.0, beta), Complex::new(alpha, -beta))?,
            })
        }
    }
}

/// `ψ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`,
/// `ψ⊥ = −sin(θ/2)|0⟩ + e^{iφ} cos(θ/2)|1⟩`, for `θ ∈ [0, π]`.
pub fn polar_circle_state(theta: f64, phi: PhaseAngle) -> Result<StatePair, Error> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
            domain: "[0, pi]",
        });
    }
    let (c, s) = (cos(theta / 2.0), sin(theta / 2.0));
    let e = cis(phi.radians());
    Ok(StatePair {
        psi: state(Complex::new(c, 0.0), e * s)?,
        perp: state(Complex::new(-s, 0.0), e * c)?,
    })
}

/// `ψ = (1/√2) e^{−iφ/2}(|0⟩ + e^{iφ}|1⟩)`,
/// `ψ⊥ = (1/√2) e^{iφ/2}(|1⟩ − e^{−iφ}|0⟩)`.
pub fn equatorial_state(phi: PhaseAngle) -> StatePair {
    let half = phi.radians() / 2.0;
    let lo = cis(-half) * FRAC_1_SQRT_2;
    let hi = cis(half) * FRAC_1_SQRT_2;
    StatePair {
        psi: QubitState::new_unchecked(lo, hi),
        perp: QubitState::new_unchecked(-lo, hi),
    }
}

/// The ensemble on which the symmetric `U` acts as the equatorial template.
///
/// `β = branch·√(1 − α²)`. Convention A: `ψ = iα|0⟩ + β|1⟩`,
/// `ψ⊥ = β|0⟩ + iα|1⟩`. Convention B: `ψ = α|0⟩ + iβ|1⟩`, `ψ⊥ = iβ|0⟩ + α|1⟩`.
pub fn theorem3_state(
    alpha: f64,
    branch: Branch,
    convention: ComplementConvention,
) -> Result<StatePair, Error> {
    let beta = dependent(1.0 - alpha * alpha, branch, "alpha", alpha, "[-1, 1]")?;
    Ok(match convention {
        ComplementConvention::A => StatePair {
            psi: state(Complex::new(0.0, alpha), Complex::new(beta, 0.0))?,
            perp: state(Complex::new(beta, 0.0), Complex::new(0.0, alpha))?,
        },
        ComplementConvention::B => StatePair {
            psi: state(Complex::new(alpha, 0.0), Complex::new(0.0, beta))?,
            perp: state(Complex::new(0.0, beta), Complex::new(alpha, 0.0))?,
        },
    })
}

/// Which unequal transformation the family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnequalKind {
    /// `Uψ = pψ + qψ⊥`; `Re(a) = (b/q)·Re(p)`.
    General,
    /// `Uψ = pψ + iqψ⊥`; `Re(a) = (b/q)·Im(p)`.
    Equatorial,
}

/// How `q·b*` comes out real.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QbCase {
    /// `q` and `b` both real.
    BothReal,
    /// `q` and `b` both purely imaginary.
    BothImaginary,
    /// Both complex with `Re(q)/Im(q) = Re(b)/Im(b)`.
    RatioMatched,
}

impl QbCase {
    /// Classifies `(q, b)`; only meaningful once `Im(q·b*) = 0` holds.
    pub fn classify(q: Complex, b: Complex) -> Self {
        if q.im.abs() < REAL_TOL && b.im.abs() < REAL_TOL {
            Self::BothReal
        } else if q.re.abs() < REAL_TOL && b.re.abs() < REAL_TOL {
            Self::BothImaginary
        } else {
            Self::RatioMatched
        }
    }
}

/// Parameters of an unequal-superposition family member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnequalParams {
    /// `(p, q)`.
    pub weights: SuperpositionWeights,
    /// Coefficient of `|1⟩`.
    pub b: Complex,
    /// Branch of `a₂ = Im(a)`.
    pub a2_sign: Branch,
    /// Transformation kind.
    pub kind: UnequalKind,
}

impl UnequalParams {
    /// The real ratio `b/q`, after checking `q ≠ 0` and `Im(q·b*) = 0`.
    pub fn ratio(&self) -> Result<f64, Error> {
        let q = self.weights.q();
        let qn = q.norm_sqr();
        if modulus(q) < NORM_TOL {
            return Err(Error::DegenerateRatio);
        }
        let im = (q * self.b.conj()).im;
        if im.abs() > REAL_TOL {
            return Err(Error::CaseCondition { im });
        }
        Ok((self.b * q.conj()).re / qn)
    }

    /// `a₁ = Re(a)`.
    pub fn a1(&self) -> Result<f64, Error> {
        let r = self.ratio()?;
        let p = self.weights.p();
        Ok(match self.kind {
            UnequalKind::General => r * p.re,
            UnequalKind::Equatorial => r * p.im,
        })
    }

    /// Which of the three admissible `q·b*`-real cases applies.
    pub fn case(&self) -> QbCase {
        QbCase::classify(self.weights.q(), self.b)
    }
}

/// `ψ = (a₁ + ia₂)|0⟩ + b|1⟩`, `ψ⊥ = b*|0⟩ − (a₁ − ia₂)|1⟩` with `a₁` fixed by
/// the kind and `a₂ = ±√(1 − a₁² − |b|²)`.
pub fn unequal_family_state(u: &UnequalParams) -> Result<StatePair, Error> {
    let a1 = u.a1()?;
    let radicand = 1.0 - a1 * a1 - u.b.norm_sqr();
    if radicand < -NORM_TOL {
        return Err(Error::InfeasibleNormalization { radicand });
    }
    let a2 = u.a2_sign.sign() * sqrt(radicand.max(0.0));
    Ok(StatePair {
        psi: state(Complex::new(a1, a2), u.b)?,
        perp: state(u.b.conj(), -Complex::new(a1, -a2))?,
    })
}

fn parse_complex(fields: [&str; 2], v: &[&str]) -> Result<Complex, SpecParseError> {
    Ok(Complex::new(
        parse::float(fields[0], v[0])?,
        parse::float(fields[1], v[1])?,
    ))
}

fn unequal_kind_name(kind: UnequalKind) -> &'static str {
    match kind {
        UnequalKind::General => "unequal-general",
        UnequalKind::Equatorial => "unequal-equatorial",
    }
}

/// One family member named in the mini-language (the `--family` argument of
/// `verify`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PairSpec {
    /// `theorem1:ALPHA,BRANCH,CONV`
    Theorem1 {
        /// Family parameter.
        alpha: f64,
        /// Dependent-parameter branch.
        branch: Branch,
        /// Complement convention.
        convention: ComplementConvention,
    },
    /// `polar:THETA,PHI`
    Polar {
        /// Polar angle.
        theta: f64,
        /// Azimuth.
        phi: f64,
    },
    /// `equatorial:PHI`
    Equatorial {
        /// Azimuth.
        phi: f64,
    },
    /// `theorem3:ALPHA,BRANCH,CONV`
    Theorem3 {
        /// Family parameter.
        alpha: f64,
        /// Dependent-parameter branch.
        branch: Branch,
        /// Complement convention.
        convention: ComplementConvention,
    },
    /// `unequal-general:P_RE,P_IM,Q_RE,Q_IM,B_RE,B_IM,SIGN` and
    /// `unequal-equatorial:...` with the same parameters.
    Unequal {
        /// Transformation kind.
        kind: UnequalKind,
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
        /// `b`
        b: Complex,
        /// Branch of `a₂`.
        a2_sign: Branch,
    },
}

impl PairSpec {
    /// Every accepted spelling.
    pub const USAGE: &'static [&'static str] = &[
        "theorem1:ALPHA,BRANCH,CONV",
        "polar:THETA,PHI",
        "equatorial:PHI",
        "theorem3:ALPHA,BRANCH,CONV",
        "unequal-general:P_RE,P_IM,Q_RE,Q_IM,B_RE,B_IM,SIGN",
        "unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM,B_RE,B_IM,SIGN",
    ];

    /// Constructs the pair, validating parameters.
    pub fn build(&self) -> Result<StatePair, Error> {
        match *self {
            Self::Theorem1 {
                alpha,
                branch,
                convention,
            } => theorem1_state(alpha, branch, convention),
            Self::Polar { theta, phi } => polar_circle_state(theta, PhaseAngle::new(phi)?),
            Self::Equatorial { phi } => Ok(equatorial_state(PhaseAngle::new(phi)?)),
            Self::Theorem3 {
                alpha,
                branch,
                convention,
            } => theorem3_state(alpha, branch, convention),
            Self::Unequal {
                kind,
                p,
                q,
                b,
                a2_sign,
            } => unequal_family_state(&UnequalParams {
                weights: SuperpositionWeights::new(p, q)?,
                b,
                a2_sign,
                kind,
            }),
        }
    }
}

impl FromStr for PairSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = parse::split(s.trim());
        match name {
            "theorem1" | "theorem3" => {
                let usage = if name == "theorem1" {
                    Self::USAGE[0]
                } else {
                    Self::USAGE[3]
                };
                let v = parse::params(name, args, 3, usage)?;
                let alpha = parse::float("ALPHA", v[0])?;
                let branch = v[1].parse()?;
                let convention = v[2].parse()?;
                Ok(if name == "theorem1" {
                    Self::Theorem1 {
                        alpha,
                        branch,
                        convention,
                    }
                } else {
                    Self::Theorem3 {
                        alpha,
                        branch,
                        convention,
                    }
                })
            }
            "polar" => {
                let v = parse::params(name, args, 2, Self::USAGE[1])?;
                Ok(Self::Polar {
                    theta: parse::float("THETA", v[0])?,
                    phi: parse::float("PHI", v[1])?,
                })
            }
            "equatorial" => {
                let v = parse::params(name, args, 1, Self::USAGE[2])?;
                Ok(Self::Equatorial {
                    phi: parse::float("PHI", v[0])?,
                })
            }
            "unequal-general" | "unequal-equatorial" => {
                let kind = if name == "unequal-general" {
                    UnequalKind::General
                } else {
                    UnequalKind::Equatorial
                };
                let usage = Self::USAGE[if name == "unequal-general" { 4 } else { 5 }];
                let v = parse::params(name, args, 7, usage)?;
                Ok(Self::Unequal {
                    kind,
                    p: parse_complex(["P_RE", "P_IM"], &v[0..2])?,
                    q: parse_complex(["Q_RE", "Q_IM"], &v[2..4])?,
                    b: parse_complex(["B_RE", "B_IM"], &v[4..6])?,
                    a2_sign: v[6].parse()?,
                })
            }
            _ => Err(parse::unknown("family", name, Self::USAGE)),
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Theorem1 {
                alpha,
                branch,
                convention,
            } => write!(f, "theorem1:{alpha},{branch},{convention}"),
            Self::Polar { theta, phi } => write!(f, "polar:{theta},{phi}"),
            Self::Equatorial { phi } => write!(f, "equatorial:{phi}"),
            Self::Theorem3 {
                alpha,
                branch,
                convention,
            } => write!(f, "theorem3:{alpha},{branch},{convention}"),
            Self::Unequal {
                kind,
                p,
                q,
                b,
                a2_sign,
            } => write!(
                f,
                "{}:{},{},{},{},{},{},{a2_sign}",
                unequal_kind_name(*kind),
                p.re,
                p.im,
                q.re,
                q.im,
                b.re,
                b.im
            ),
        }
    }
}

/// Parameter interval of a [`FamilyCurve`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamDomain {
    /// Lower end.
    pub lo: f64,
    /// Upper end.
    pub hi: f64,
    /// `hi` is identified with `lo` (the upper end is excluded from samples).
    pub periodic: bool,
}

impl ParamDomain {
    /// `n` uniform samples: `linspace(lo, hi, n)` for closed domains,
    /// `lo + k(hi − lo)/n` for periodic ones.
    pub fn samples(&self, n: usize) -> Result<Vec<f64>, Error> {
        if n < 2 {
            return Err(Error::TooFewSamples { min: 2, got: n });
        }
        Ok(if self.periodic {
            let step = (self.hi - self.lo) / n as f64;
            (0..n).map(|k| self.lo + step * k as f64).collect()
        } else {
            linspace(self.lo, self.hi, n)
        })
    }
}

/// A one-parameter family (a curve of pairs) with its remaining choices fixed.
/// This is the `--family` argument of `trajectory` and `intersect`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilyCurve {
    /// `theorem1:BRANCH,CONV`, parameter as in [`theorem1_state`].
    Theorem1 {
        /// Dependent-parameter branch.
        branch: Branch,
        /// Complement convention.
        convention: ComplementConvention,
    },
    /// `polar:PHI`, parameter `θ ∈ [0, π]`.
    Polar {
        /// Azimuth of the polar circle.
        phi: f64,
    },
    /// `equatorial`, parameter `φ ∈ [0, 2π)`.
    Equatorial,
    /// `theorem3:BRANCH,CONV`, parameter `α ∈ [−1, 1]`.
    Theorem3 {
        /// Dependent-parameter branch.
        branch: Branch,
        /// Complement convention.
        convention: ComplementConvention,
    },
    /// `unequal-general:P_RE,P_IM,Q_RE,Q_IM,SIGN` and `unequal-equatorial:...`.
    ///
    /// The parameter `t` sets `b = t·q/|q|`, so `q·b*` is real; `t` spans the
    /// interval on which `1 − a₁² − |b|² ≥ 0`.
    Unequal {
        /// Transformation kind.
        kind: UnequalKind,
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
        /// Branch of `a₂`.
        a2_sign: Branch,
    },
}

impl FamilyCurve {
    /// Every accepted spelling.
    pub const USAGE: &'static [&'static str] = &[
        "theorem1:BRANCH,CONV",
        "polar:PHI",
        "equatorial",
        "theorem3:BRANCH,CONV",
        "unequal-general:P_RE,P_IM,Q_RE,Q_IM,SIGN",
        "unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM,SIGN",
    ];

    fn unequal_parts(
        kind: UnequalKind,
        p: Complex,
        q: Complex,
    ) -> Result<(SuperpositionWeights, f64, f64), Error> {
        let w = SuperpositionWeights::new(p, q)?;
        let qm = modulus(q);
        if qm < NORM_TOL {
            return Err(Error::DegenerateRatio);
        }
        let c = match kind {
            UnequalKind::General => p.re,
            UnequalKind::Equatorial => p.im,
        };
        let t_max = 1.0 / sqrt(1.0 + c * c / (qm * qm));
        Ok((w, qm, t_max))
    }

    /// The parameter interval.
    pub fn domain(&self) -> Result<ParamDomain, Error> {
        let closed = |lo, hi| ParamDomain {
            lo,
            hi,
            periodic: false,
        };
        Ok(match *self {
            Self::Theorem1 { .. } => closed(-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
            Self::Polar { .. } => closed(0.0, PI),
            Self::Equatorial => ParamDomain {
                lo: 0.0,
                hi: TAU,
                periodic: true,
            },
            Self::Theorem3 { .. } => closed(-1.0, 1.0),
            Self::Unequal { kind, p, q, .. } => {
                let (_, _, t_max) = Self::unequal_parts(kind, p, q)?;
                closed(-t_max, t_max)
            }
        })
    }

    /// The pair at parameter `t`.
    pub fn pair_at(&self, t: f64) -> Result<StatePair, Error> {
        match *self {
            Self::Theorem1 { branch, convention } => theorem1_state(t, branch, convention),
            Self::Polar { phi } => polar_circle_state(t, PhaseAngle::new(phi)?),
            Self::Equatorial => Ok(equatorial_state(PhaseAngle::new(t)?)),
            Self::Theorem3 { branch, convention } => theorem3_state(t, branch, convention),
            Self::Unequal {
                kind,
                p,
                q,
                a2_sign,
            } => {
                let (weights, qm, _) = Self::unequal_parts(kind, p, q)?;
                unequal_family_state(&UnequalParams {
                    weights,
                    b: q * (t / qm),
                    a2_sign,
                    kind,
                })
            }
        }
    }
}

impl FromStr for FamilyCurve {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = parse::split(s.trim());
        match name {
            "theorem1" | "theorem3" => {
                let usage = Self::USAGE[if name == "theorem1" { 0 } else { 3 }];
                let v = parse::params(name, args, 2, usage)?;
                let branch = v[0].parse()?;
                let convention = v[1].parse()?;
                Ok(if name == "theorem1" {
                    Self::Theorem1 { branch, convention }
                } else {
                    Self::Theorem3 { branch, convention }
                })
            }
            "polar" => {
                let v = parse::params(name, args, 1, Self::USAGE[1])?;
                Ok(Self::Polar {
                    phi: parse::float("PHI", v[0])?,
                })
            }
            "equatorial" => parse::params(name, args, 0, Self::USAGE[2]).map(|_| Self::Equatorial),
            "unequal-general" | "unequal-equatorial" => {
                let kind = if name == "unequal-general" {
                    UnequalKind::General
                } else {
                    UnequalKind::Equatorial
                };
                let usage = Self::USAGE[if name == "unequal-general" { 4 } else { 5 }];
                let v = parse::params(name, args, 5, usage)?;
                Ok(Self::Unequal {
                    kind,
                    p: parse_complex(["P_RE", "P_IM"], &v[0..2])?,
                    q: parse_complex(["Q_RE", "Q_IM"], &v[2..4])?,
                    a2_sign: v[4].parse()?,
                })
            }
            _ => Err(parse::unknown("family", name, Self::USAGE)),
        }
    }
}

impl fmt::Display for FamilyCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Theorem1 { branch, convention } => write!(f, "theorem1:{branch},{convention}"),
            Self::Polar { phi } => write!(f, "polar:{phi}"),
            Self::Equatorial => f.write_str("equatorial"),
            Self::Theorem3 { branch, convention } => write!(f, "theorem3:{branch},{convention}"),
            Self::Unequal {
                kind,
                p,
                q,
                a2_sign,
            } => write!(
                f,
                "{}:{},{},{},{},{a2_sign}",
                unequal_kind_name(*kind),
                p.re,
                p.im,
                q.re,
                q.im
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{equatorial_gate, hadamard, polar_gate, symmetric_u, unequal_general};
    use crate::qcore::{apply, complement, re, state_distance, vec_distance, GateMatrix, I};
    use alloc::string::ToString;

    const S: f64 = FRAC_1_SQRT_2;

    fn combo(g: &GateMatrix, pair: &StatePair, c1: Complex, c2: Complex) -> f64 {
        let got = apply(g, &pair.psi).unwrap();
        let want = [
            c1 * pair.psi.a() + c2 * pair.perp.a(),
            c1 * pair.psi.b() + c2 * pair.perp.b(),
        ];
        vec_distance(got.amplitudes(), want)
    }

    #[test]
    fn theorem1_examples() {
        let pair = theorem1_state(0.0, Branch::Plus, ComplementConvention::A).unwrap();
        assert_eq!(pair.psi.amplitudes(), [I, re(0.0)]);

        let pair = theorem1_state(S, Branch::Plus, ComplementConvention::A).unwrap();
        assert_eq!(pair.psi.amplitudes(), [re(S), re(S)]);
        assert_eq!(pair.perp.amplitudes(), [re(S), re(-S)]);

        let pair = theorem1_state(0.5, Branch::Plus, ComplementConvention::A).unwrap();
        assert!((pair.psi.a().im - S).abs() < 1e-15);
        assert!(combo(&hadamard(), &pair, re(S), re(S)) < 1e-12);

        // conv A complement matches the generic rule
        assert_eq!(pair.perp, complement(&pair.psi, ComplementConvention::A));
        let b = theorem1_state(0.3, Branch::Minus, ComplementConvention::B).unwrap();
        assert!(state_distance(&b.perp, &complement(&b.psi, ComplementConvention::B)) < 1e-16);
    }

    #[test]
    fn theorem1_domain() {
        assert!(matches!(
            theorem1_state(0.8, Branch::Plus, ComplementConvention::A),
            Err(Error::Domain { name: "alpha", .. })
        ));
        assert!(theorem1_state(-S, Branch::Minus, ComplementConvention::B).is_ok());
        let msg = theorem1_state(0.71, Branch::Plus, ComplementConvention::A)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("1/sqrt(2)"));
    }

    #[test]
    fn polar_circle_examples() {
        let phi = PhaseAngle::new(1.1).unwrap();
        let pair = polar_circle_state(0.0, phi).unwrap();
        assert_eq!(pair.psi, QubitState::zero());
        assert!(vec_distance(pair.perp.amplitudes(), [re(0.0), cis(1.1)]) < 1e-16);

        let phi = PhaseAngle::new(PI / 3.0).unwrap();
        let pair = polar_circle_state(PI / 2.0, phi).unwrap();
        assert!(combo(&polar_gate(phi), &pair, re(S), re(S)) < 1e-12);

        assert!(polar_circle_state(-0.1, phi).is_err());
        assert!(polar_circle_state(PI + 1e-9, phi).is_err());
    }

    #[test]
    fn equatorial_examples() {
        let pair = equatorial_state(PhaseAngle::zero());
        assert_eq!(pair.psi.amplitudes(), [re(S), re(S)]);
        let pair = equatorial_state(PhaseAngle::new(PI).unwrap());
        let want = [Complex::new(0.0, -S), Complex::new(0.0, S)];
        assert!(vec_distance(pair.psi.amplitudes(), want) < 1e-16);
        for k in 0..50 {
            let pair = equatorial_state(PhaseAngle::new(0.13 * k as f64).unwrap());
            assert!(pair.overlap() < 1e-16);
            assert!(combo(&equatorial_gate(), &pair, re(S), I * S) < 1e-12);
        }
    }

    #[test]
    fn theorem3_examples() {
        let pair = theorem3_state(S, Branch::Plus, ComplementConvention::A).unwrap();
        assert!(vec_distance(pair.psi.amplitudes(), [I * S, re(S)]) < 1e-15);
        let pair = theorem3_state(0.0, Branch::Plus, ComplementConvention::A).unwrap();
        assert_eq!(pair.psi, QubitState::one());
        assert_eq!(pair.perp, QubitState::zero());
        let pair = theorem3_state(0.6, Branch::Plus, ComplementConvention::A).unwrap();
        assert!(combo(&symmetric_u(), &pair, re(S), I * S) < 1e-12);
        assert!(theorem3_state(1.01, Branch::Plus, ComplementConvention::B).is_err());
    }

    #[test]
    fn unequal_general_worked_example() {
        let weights = SuperpositionWeights::new(re(0.6), re(0.8)).unwrap();
        for sign in [Branch::Plus, Branch::Minus] {
            let u = UnequalParams {
                weights,
                b: re(0.5),
                a2_sign: sign,
                kind: UnequalKind::General,
            };
            assert!((u.a1().unwrap() - 0.375).abs() < 1e-15);
            let pair = unequal_family_state(&u).unwrap();
            assert!((pair.psi.a().im - sign.sign() * 0.609375f64.sqrt()).abs() < 1e-15);
            let g = unequal_general(weights);
            let (p, q) = (weights.p(), weights.q());
            assert!(combo(&g, &pair, p, q) < 1e-12);
            let swapped = StatePair {
                psi: pair.perp,
                perp: pair.psi,
            };
            assert!(combo(&g, &swapped, -p.conj(), q.conj()) < 1e-12);
        }
    }

    #[test]
    fn unequal_reductions_to_equal_families() {
        let u = UnequalParams {
            weights: SuperpositionWeights::equal(),
            b: re(0.4),
            a2_sign: Branch::Plus,
            kind: UnequalKind::General,
        };
        let got = unequal_family_state(&u).unwrap();
        let want = theorem1_state(0.4, Branch::Plus, ComplementConvention::A).unwrap();
        assert!(state_distance(&got.psi, &want.psi) < 1e-15);
        assert!(state_distance(&got.perp, &want.perp) < 1e-15);

        let u = UnequalParams {
            b: re(S),
            kind: UnequalKind::Equatorial,
            ..u
        };
        let got = unequal_family_state(&u).unwrap();
        assert_eq!(got.psi.a().re, 0.0);
        assert!((got.psi.a().im - S).abs() < 1e-15);
        let want = theorem3_state(S, Branch::Plus, ComplementConvention::A).unwrap();
        assert!(state_distance(&got.psi, &want.psi) < 1e-15);
    }

    #[test]
    fn unequal_errors() {
        let w = SuperpositionWeights::new(re(1.0), re(0.0)).unwrap();
        let mut u = UnequalParams {
            weights: w,
            b: re(0.1),
            a2_sign: Branch::Plus,
            kind: UnequalKind::General,
        };
        assert_eq!(unequal_family_state(&u), Err(Error::DegenerateRatio));

        u.weights = SuperpositionWeights::new(re(0.6), re(0.8)).unwrap();
        u.b = Complex::new(0.0, 0.3);
        let err = unequal_family_state(&u).unwrap_err();
        assert!(matches!(err, Error::CaseCondition { .. }));
        assert!(err.to_string().contains("both imaginary"));

        u.b = re(0.9);
        assert!(matches!(
            unequal_family_state(&u),
            Err(Error::InfeasibleNormalization { .. })
        ));
    }

    #[test]
    fn qb_cases() {
        assert_eq!(QbCase::classify(re(0.8), re(0.2)), QbCase::BothReal);
        assert_eq!(QbCase::classify(I * 0.8, I * -0.2), QbCase::BothImaginary);
        assert_eq!(
            QbCase::classify(Complex::new(0.3, 0.4), Complex::new(0.15, 0.2)),
            QbCase::RatioMatched
        );
    }

    #[test]
    fn spec_round_trips() {
        for s in [
            "theorem1:0.5,+,A",
            "polar:1.2,0.5",
            "equatorial:3",
            "theorem3:-0.25,-,B",
            "unequal-general:0.6,0,0.8,0,0.5,0,+",
            "unequal-equatorial:0,0.6,0.8,0,0.5,0,-",
        ] {
            let spec: PairSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        for s in [
            "theorem1:+,A",
            "polar:0",
            "equatorial",
            "theorem3:-,B",
            "unequal-general:0.6,0,0.8,0,+",
        ] {
            let spec: FamilyCurve = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("theorem2:0.1,+,A".parse::<PairSpec>().is_err());
        assert!("theorem1:0.1,*,A".parse::<PairSpec>().is_err());
        assert!("theorem1:0.1,+,C".parse::<PairSpec>().is_err());
        let err = "circle".parse::<FamilyCurve>().unwrap_err();
        assert!(err.message().contains("theorem1:BRANCH,CONV"));
    }

    #[test]
    fn unequal_curve_spans_feasible_interval() {
        let curve: FamilyCurve = "unequal-general:0.6,0,0.8,0,+".parse().unwrap();
        let dom = curve.domain().unwrap();
        for t in dom.samples(101).unwrap() {
            let pair = curve.pair_at(t).unwrap();
            assert!(pair.overlap() < 1e-15);
        }
        // endpoints sit on a₂ = 0
        let end = curve.pair_at(dom.hi).unwrap();
        assert!(end.psi.a().im.abs() < 1e-7);
    }
}
