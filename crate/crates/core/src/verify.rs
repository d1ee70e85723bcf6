//! Transformation templates, residual checks and the brute-force family oracle.
//!
//! A template fixes the images a gate must produce on a pair:
//! `Gψ = c11ψ + c12ψ⊥` and `Gψ⊥ = c21ψ + c22ψ⊥`. [`derive_family`] scans the
//! whole state space, global phase included, and keeps every grid point on
//! which a gate satisfies a template. Comparing that set against the closed
//! forms in [`ensembles`](crate::ensembles) is done by [`family_match`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bloch::{to_bloch, BlochPoint};
use crate::ensembles::StatePair;
use crate::gates::{SuperpositionWeights, REAL_TOL};
use crate::math::{cis, cos, modulus, sin, FRAC_1_SQRT_2, PI, TAU};
use crate::parse;
use crate::qcore::{
    complement, inner_product, re, state_distance, unitarity_residual, vec_distance,
    ComplementConvention, Complex, GateMatrix, QubitState, I, ONE, ZERO,
};
use crate::{Error, SpecParseError, UNITARY_TOL};

/// Orthogonality precondition on pairs handed to [`check_pair`].
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Right-hand side of a Hadamard-type transformation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformTemplate {
    name: &'static str,
    coeffs: [[Complex; 2]; 2],
}

impl TransformTemplate {
    /// A template from raw coefficients `[[c11, c12], [c21, c22]]`, which must
    /// form a unitary matrix.
    pub fn new(name: &'static str, coeffs: [[Complex; 2]; 2]) -> Result<Self, Error> {
        let [[c11, c12], [c21, c22]] = coeffs;
        let residual = unitarity_residual(&GateMatrix::new(c11, c12, c21, c22)?);
        if residual >= UNITARY_TOL {
            return Err(Error::TemplateNotUnitary { residual });
        }
        Ok(Self { name, coeffs })
    }

    /// `Gψ = ψ`, `Gψ⊥ = ψ⊥`.
    pub fn identity() -> Self {
        Self {
            name: "identity",
            coeffs: [[ONE, ZERO], [ZERO, ONE]],
        }
    }

    /// `(ψ + ψ⊥)/√2`, `(ψ − ψ⊥)/√2`.
    pub fn hadamard() -> Self {
        let s = re(FRAC_1_SQRT_2);
        Self {
            name: "hadamard",
            coeffs: [[s, s], [s, re(-FRAC_1_SQRT_2)]],
        }
    }

    /// `(ψ + ψ⊥)/√2`, `(ψ⊥ − ψ)/√2`.
    pub fn polar() -> Self {
        let s = re(FRAC_1_SQRT_2);
        Self {
            name: "polar",
            coeffs: [[s, s], [re(-FRAC_1_SQRT_2), s]],
        }
    }

    /// `(ψ + iψ⊥)/√2`, `(iψ + ψ⊥)/√2`.
    pub fn equatorial() -> Self {
        let s = re(FRAC_1_SQRT_2);
        Self {
            name: "equatorial",
            coeffs: [[s, I * s], [I * s, s]],
        }
    }

    /// `pψ + qψ⊥`, `q*ψ − p*ψ⊥`.
    pub fn unequal(w: SuperpositionWeights) -> Self {
        let (p, q) = (w.p(), w.q());
        Self {
            name: "unequal",
            coeffs: [[p, q], [q.conj(), -p.conj()]],
        }
    }

    /// `pψ + qψ⊥`, `−qψ + pψ⊥` for real `p`, `q`.
    pub fn unequal_polar(w: SuperpositionWeights) -> Result<Self, Error> {
        let (p, q) = (w.p(), w.q());
        if p.im.abs() >= REAL_TOL || q.im.abs() >= REAL_TOL {
            return Err(Error::ComplexWeights {
                p_im: p.im,
                q_im: q.im,
            });
        }
        let (p, q) = (re(p.re), re(q.re));
        Ok(Self {
            name: "unequal-polar",
            coeffs: [[p, q], [-q, p]],
        })
    }

    /// `pψ + iqψ⊥`, `iq*ψ + p*ψ⊥`.
    pub fn unequal_equatorial(w: SuperpositionWeights) -> Self {
        let (p, q) = (w.p(), w.q());
        Self {
            name: "unequal-equatorial",
            coeffs: [[p, I * q], [I * q.conj(), p.conj()]],
        }
    }

    /// Template family name.
    pub fn name(&self) -> &'static str {
        self.name
    }

    /// `[[c11, c12], [c21, c22]]`.
    pub fn coefficients(&self) -> [[Complex; 2]; 2] {
        self.coeffs
    }

    /// The coefficient matrix as a [`GateMatrix`].
    pub fn coefficient_matrix(&self) -> GateMatrix {
        GateMatrix::from_rows(self.coeffs)
    }
}

/// Residuals of a gate against a template on one pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualReport {
    /// `‖Gψ − (c11ψ + c12ψ⊥)‖∞`
    pub row1: f64,
    /// `‖Gψ⊥ − (c21ψ + c22ψ⊥)‖∞`
    pub row2: f64,
    /// Tolerance the verdict was taken at.
    pub tol: f64,
    /// `max(row1, row2) < tol`.
    pub pass: bool,
}

impl ResidualReport {
    fn new(row1: f64, row2: f64, tol: f64) -> Self {
        Self {
            row1,
            row2,
            tol,
            pass: row1.max(row2) < tol,
        }
    }

    /// `max(row1, row2)`.
    pub fn max(&self) -> f64 {
        self.row1.max(self.row2)
    }
}

#[inline]
fn combine(c1: Complex, u: [Complex; 2], c2: Complex, v: [Complex; 2]) -> [Complex; 2] {
    [c1 * u[0] + c2 * v[0], c1 * u[1] + c2 * v[1]]
}

#[inline]
fn row_residuals(
    gate: &GateMatrix,
    psi: [Complex; 2],
    perp: [Complex; 2],
    c: &[[Complex; 2]; 2],
) -> (f64, f64) {
    let row1 = vec_distance(gate.mul_vec(psi), combine(c[0][0], psi, c[0][1], perp));
    let row2 = vec_distance(gate.mul_vec(perp), combine(c[1][0], psi, c[1][1], perp));
    (row1, row2)
}

/// Checks both template rows on `(ψ, ψ⊥)`.
pub fn check_pair(
    gate: &GateMatrix,
    pair: &StatePair,
    template: &TransformTemplate,
    tol: f64,
) -> Result<ResidualReport, Error> {
    let overlap = pair.overlap();
    if overlap > ORTHOGONALITY_TOL {
        return Err(Error::NonOrthogonalPair { overlap });
    }
    let (row1, row2) = row_residuals(
        gate,
        pair.psi.amplitudes(),
        pair.perp.amplitudes(),
        &template.coeffs,
    );
    Ok(ResidualReport::new(row1, row2, tol))
}

/// Largest violation of the inner-product identities a universal Hadamard
/// gate needs between two ensemble pairs `k` and `l`.
///
/// With `S = ⟨ψk|ψl⟩`, `X = ⟨ψk|ψ⊥l⟩`, `Y = ⟨ψ⊥k|ψl⟩`, `P = ⟨ψ⊥k|ψ⊥l⟩`, the
/// conjugation rules are `X = −Y* = Y` and `S = P*`. Substituting them into
/// the two preservation identities `S = (S + X + Y + P)/2` and
/// `P = (S − X − Y + P)/2` gives `S = Re S + X` and `S* = Re S − X`. All of
/// these are checked.
pub fn check_inner_products(k: &StatePair, l: &StatePair) -> f64 {
    let s = inner_product(&k.psi, &l.psi);
    let x = inner_product(&k.psi, &l.perp);
    let y = inner_product(&k.perp, &l.psi);
    let p = inner_product(&k.perp, &l.perp);
    let re_s = re(s.re);
    [
        modulus(s - (re_s + x)),
        modulus(s.conj() - (re_s - x)),
        modulus(x - y),
        modulus(x + y.conj()),
        modulus(s - p.conj()),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Sizes of the `(θ, φ, γ)` derivation grid.
///
/// Parsing `NT,NP,NG` only checks syntax; [`GridSpec::new`] and [`Derivation::new`]
/// enforce the minimum sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridSpec {
    /// Samples of `θ` over `[0, π]`, endpoints included.
    pub n_theta: usize,
    /// Samples of `φ` over `[0, 2π)`.
    pub n_phi: usize,
    /// Samples of `γ` over `[0, 2π)`.
    pub n_gamma: usize,
}

impl GridSpec {
    /// The default `64 × 128 × 128` grid.
    pub const DEFAULT: GridSpec = GridSpec {
        n_theta: 64,
        n_phi: 128,
        n_gamma: 128,
    };

    /// Validates `n_theta ≥ 2`, `n_phi ≥ 1`, `n_gamma ≥ 1`.
    pub fn new(n_theta: usize, n_phi: usize, n_gamma: usize) -> Result<Self, Error> {
        if n_theta < 2 {
            return Err(Error::InvalidDerivation("grid needs n_theta >= 2"));
        }
        if n_phi < 1 || n_gamma < 1 {
            return Err(Error::InvalidDerivation(
                "grid needs n_phi >= 1 and n_gamma >= 1",
            ));
        }
        Ok(Self {
            n_theta,
            n_phi,
            n_gamma,
        })
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.n_theta * self.n_phi * self.n_gamma
    }

    /// Always false for a validated grid.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(θ_j, φ_k, γ_m)` for the flat index `(j·n_phi + k)·n_gamma + m`.
    pub fn coordinates(&self, index: usize) -> (f64, f64, f64) {
        let m = index % self.n_gamma;
        let k = (index / self.n_gamma) % self.n_phi;
        let j = index / (self.n_gamma * self.n_phi);
        (
            PI * j as f64 / (self.n_theta - 1) as f64,
            TAU * k as f64 / self.n_phi as f64,
            TAU * m as f64 / self.n_gamma as f64,
        )
    }
}

impl FromStr for GridSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse::params("grid", Some(s), 3, "NT,NP,NG")?;
        let mut n = [0usize; 3];
        for (slot, text) in n.iter_mut().zip(&v) {
            *slot = text.parse().map_err(|_| {
                SpecParseError::new(alloc::format!(
                    "grid: '{text}' is not a non-negative integer"
                ))
            })?;
        }
        Ok(GridSpec {
            n_theta: n[0],
            n_phi: n[1],
            n_gamma: n[2],
        })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n_theta, self.n_phi, self.n_gamma)
    }
}

/// `e^{iγ}(cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩)`.
pub fn grid_state(theta: f64, phi: f64, gamma: f64) -> QubitState {
    let a = cis(gamma) * cos(theta / 2.0);
    let b = cis(gamma + phi) * sin(theta / 2.0);
    QubitState::new_unchecked(a, b)
}

/// A grid point accepted by [`derive_family`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AcceptedPoint {
    /// Polar angle.
    pub theta: f64,
    /// Azimuth.
    pub phi: f64,
    /// Global phase.
    pub gamma: f64,
    /// `max(row1, row2)` at this point.
    pub residual: f64,
}

impl AcceptedPoint {
    /// The state at this grid point.
    pub fn state(&self) -> QubitState {
        grid_state(self.theta, self.phi, self.gamma)
    }

    /// Its Bloch coordinates.
    pub fn bloch(&self) -> BlochPoint {
        to_bloch(&self.state())
    }
}

/// A gate/template/convention triple scanned over a grid.
///
/// Each grid point is evaluated independently through [`Derivation::evaluate`],
/// so callers may split the index range across threads and concatenate the
/// results in index order; the flat index order is the `(θ, φ, γ)` order.
#[derive(Clone, Copy, Debug)]
pub struct Derivation {
    gate: GateMatrix,
    template: TransformTemplate,
    convention: ComplementConvention,
    grid: GridSpec,
    tol: f64,
}

impl Derivation {
    /// Validates the grid (via [`GridSpec`]) and `tol > 0`.
    pub fn new(
        gate: GateMatrix,
        template: TransformTemplate,
        convention: ComplementConvention,
        grid: GridSpec,
        tol: f64,
    ) -> Result<Self, Error> {
        let grid = GridSpec::new(grid.n_theta, grid.n_phi, grid.n_gamma)?;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidDerivation(
                "tolerance must be positive and finite",
            ));
        }
        Ok(Self {
            gate,
            template,
            convention,
            grid,
            tol,
        })
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Evaluates one grid point; `Some` iff both rows pass.
    pub fn evaluate(&self, index: usize) -> Option<AcceptedPoint> {
        let (theta, phi, gamma) = self.grid.coordinates(index);
        let psi = grid_state(theta, phi, gamma);
        let perp = complement(&psi, self.convention);
        let (row1, row2) = row_residuals(
            &self.gate,
            psi.amplitudes(),
            perp.amplitudes(),
            &self.template.coeffs,
        );
        let residual = row1.max(row2);
        (residual < self.tol).then_some(AcceptedPoint {
            theta,
            phi,
            gamma,
            residual,
        })
    }

    /// Wraps accepted points, which must be in index order.
    pub fn finish(&self, accepted: Vec<AcceptedPoint>) -> DerivedFamily {
        DerivedFamily {
            accepted,
            grid: self.grid,
            convention: self.convention,
            tolerance: self.tol,
        }
    }

    /// Evaluates every grid point on the current thread.
    pub fn run(&self) -> DerivedFamily {
        self.finish((0..self.len()).filter_map(|i| self.evaluate(i)).collect())
    }
}

/// Grid points on which a gate satisfies a template, sorted by `(θ, φ, γ)`.
///
/// `θ = 0` and `θ = π` rows are φ-degenerate and show up once per `φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedFamily {
    /// Accepted points, ascending.
    pub accepted: Vec<AcceptedPoint>,
    /// Grid used.
    pub grid: GridSpec,
    /// Complement convention used.
    pub convention: ComplementConvention,
    /// Acceptance tolerance.
    pub tolerance: f64,
}

impl DerivedFamily {
    /// No grid point passed.
    pub fn is_empty(&self) -> bool {
        self.accepted.is_empty()
    }

    /// Accepted states.
    pub fn states(&self) -> Vec<QubitState> {
        self.accepted.iter().map(AcceptedPoint::state).collect()
    }
}

/// Scans the full `(θ, φ, γ)` grid for points where `gate` satisfies
/// `template` with `ψ⊥` built by `convention`. Sequential; see [`Derivation`]
/// for splitting the work.
pub fn derive_family(
    gate: &GateMatrix,
    template: &TransformTemplate,
    convention: ComplementConvention,
    grid: GridSpec,
    tol: f64,
) -> Result<DerivedFamily, Error> {
    Ok(Derivation::new(*gate, *template, convention, grid, tol)?.run())
}

/// Set coverage between an oracle result and closed-form samples.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyMatch {
    /// Worst distance from an accepted point to the nearest sample.
    pub max_outlier: f64,
    /// Worst distance from a sample to the nearest accepted point; `+∞` when
    /// nothing was accepted.
    pub max_gap: f64,
    /// The derived family was empty.
    pub empty: bool,
}

impl FamilyMatch {
    /// Both directions are below `delta`, and the derived set is nonempty.
    pub fn within(&self, delta: f64) -> bool {
        !self.empty && self.max_outlier < delta && self.max_gap < delta
    }
}

fn directed(from: &[QubitState], to: &[QubitState]) -> f64 {
    from.iter()
        .map(|s| {
            to.iter()
                .map(|t| state_distance(s, t))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Compares an oracle result with closed-form samples in phase-sensitive
/// [`state_distance`].
pub fn family_match(derived: &DerivedFamily, samples: &[QubitState]) -> FamilyMatch {
    let accepted = derived.states();
    if accepted.is_empty() {
        return FamilyMatch {
            max_outlier: 0.0,
            max_gap: f64::INFINITY,
            empty: true,
        };
    }
    FamilyMatch {
        max_outlier: directed(&accepted, samples),
        max_gap: directed(samples, &accepted),
        empty: false,
    }
}

/// A template named in the mini-language (`--template`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TemplateSpec {
    /// `identity`
    Identity,
    /// `hadamard`
    Hadamard,
    /// `polar`
    Polar,
    /// `equatorial`
    Equatorial,
    /// `unequal:P_RE,P_IM,Q_RE,Q_IM`
    Unequal {
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
    },
    /// `unequal-polar:P,Q`
    UnequalPolar {
        /// real `p`
        p: f64,
        /// real `q`
        q: f64,
    },
    /// `unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM`
    UnequalEquatorial {
        /// `p`
        p: Complex,
        /// `q`
        q: Complex,
    },
}

impl TemplateSpec {
    /// Every accepted spelling.
    pub const USAGE: &'static [&'static str] = &[
        "identity",
        "hadamard",
        "polar",
        "equatorial",
        "unequal:P_RE,P_IM,Q_RE,Q_IM",
        "unequal-polar:P,Q",
        "unequal-equatorial:P_RE,P_IM,Q_RE,Q_IM",
    ];

    /// Constructs the template, validating weights.
    pub fn build(&self) -> Result<TransformTemplate, Error> {
        Ok(match *self {
            Self::Identity => TransformTemplate::identity(),
            Self::Hadamard => TransformTemplate::hadamard(),
            Self::Polar => TransformTemplate::polar(),
            Self::Equatorial => TransformTemplate::equatorial(),
            Self::Unequal { p, q } => TransformTemplate::unequal(SuperpositionWeights::new(p, q)?),
            Self::UnequalPolar { p, q } => {
                TransformTemplate::unequal_polar(SuperpositionWeights::new(re(p), re(q))?)?
            }
            Self::UnequalEquatorial { p, q } => {
                TransformTemplate::unequal_equatorial(SuperpositionWeights::new(p, q)?)
            }
        })
    }
}

impl FromStr for TemplateSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = parse::split(s.trim());
        let complex4 = |usage| -> Result<(Complex, Complex), SpecParseError> {
            let v = parse::params(name, args, 4, usage)?;
            Ok((
                Complex::new(parse::float("P_RE", v[0])?, parse::float("P_IM", v[1])?),
                Complex::new(parse::float("Q_RE", v[2])?, parse::float("Q_IM", v[3])?),
            ))
        };
        match name {
            "identity" => parse::params(name, args, 0, name).map(|_| Self::Identity),
            "hadamard" => parse::params(name, args, 0, name).map(|_| Self::Hadamard),
            "polar" => parse::params(name, args, 0, name).map(|_| Self::Polar),
            "equatorial" => parse::params(name, args, 0, name).map(|_| Self::Equatorial),
            "unequal" => complex4(Self::USAGE[4]).map(|(p, q)| Self::Unequal { p, q }),
            "unequal-equatorial" => {
                complex4(Self::USAGE[6]).map(|(p, q)| Self::UnequalEquatorial { p, q })
            }
            "unequal-polar" => {
                let v = parse::params(name, args, 2, Self::USAGE[5])?;
                Ok(Self::UnequalPolar {
                    p: parse::float("P", v[0])?,
                    q: parse::float("Q", v[1])?,
                })
            }
            _ => Err(parse::unknown("template", name, Self::USAGE)),
        }
    }
}

impl fmt::Display for TemplateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => f.write_str("identity"),
            Self::Hadamard => f.write_str("hadamard"),
            Self::Polar => f.write_str("polar"),
            Self::Equatorial => f.write_str("equatorial"),
            Self::Unequal { p, q } => write!(f, "unequal:{},{},{},{}", p.re, p.im, q.re, q.im),
            Self::UnequalPolar { p, q } => write!(f, "unequal-polar:{p},{q}"),
            Self::UnequalEquatorial { p, q } => {
                write!(f, "unequal-equatorial:{},{},{},{}", p.re, p.im, q.re, q.im)
            }
        }
    }
}
