//! Complex 2-vectors and 2×2 matrices.
//!
//! States compare phase-sensitively by default: the ensembles in this crate
//! carry explicit global phases and membership depends on them.
//! [`equal_up_to_global_phase`] is the separate, phase-insensitive predicate.

use core::fmt;
use core::ops::Mul;

use crate::math::modulus;
use crate::{Error, APPLY_REJECT_TOL, NORM_TOL};

/// Complex amplitude.
pub type Complex = num_complex::Complex64;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

#[inline]
pub(crate) fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A normalized single-qubit pure state `a|0⟩ + b|1⟩`.
#[derive(Clone, Copy, PartialEq)]
pub struct QubitState {
    a: Complex,
    b: Complex,
}

impl QubitState {
    /// Builds `a|0⟩ + b|1⟩`, rejecting non-finite amplitudes and states whose
    /// norm deviates from 1 by more than [`NORM_TOL`]. No renormalization.
    pub fn new(a: Complex, b: Complex) -> Result<Self, Error> {
        if !is_finite(a) || !is_finite(b) {
            return Err(Error::NonFinite("QubitState::new"));
        }
        let residual = (a.norm_sqr() + b.norm_sqr() - 1.0).abs();
        if residual > NORM_TOL {
            return Err(Error::NotNormalized { residual });
        }
        Ok(Self { a, b })
    }

    /// Skips the normalization check. Callers guarantee the invariant
    /// analytically.
    #[inline]
    pub(crate) const fn new_unchecked(a: Complex, b: Complex) -> Self {
        Self { a, b }
    }

    /// `|0⟩`.
    pub const fn zero() -> Self {
        Self::new_unchecked(ONE, ZERO)
    }

    /// `|1⟩`.
    pub const fn one() -> Self {
        Self::new_unchecked(ZERO, ONE)
    }

    /// Coefficient of `|0⟩`.
    #[inline]
    pub fn a(&self) -> Complex {
        self.a
    }

    /// Coefficient of `|1⟩`.
    #[inline]
    pub fn b(&self) -> Complex {
        self.b
    }

    /// `[a, b]`.
    #[inline]
    pub fn amplitudes(&self) -> [Complex; 2] {
        [self.a, self.b]
    }

    /// `|a|² + |b|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// Multiplies both amplitudes by a unit-modulus factor.
    pub fn with_phase(&self, phase: Complex) -> Self {
        Self::new_unchecked(phase * self.a, phase * self.b)
    }

    /// `−ψ`.
    pub fn neg(&self) -> Self {
        Self::new_unchecked(-self.a, -self.b)
    }
}

impl fmt::Debug for QubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})|0> + ({})|1>", self.a, self.b)
    }
}

/// Sign convention for the orthogonal complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplementConvention {
    /// `ψ⊥ = b*|0⟩ − a*|1⟩`.
    A,
    /// `ψ⊥ = −b*|0⟩ + a*|1⟩`.
    B,
}

impl ComplementConvention {
    /// The convention's single-letter name.
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::A => "A",
            Self::B => "B",
        }
    }
}

impl fmt::Display for ComplementConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for ComplementConvention {
    type Err = crate::SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            _ => Err(crate::SpecParseError::new(alloc::format!(
                "unknown complement convention '{s}' (expected A or B)"
            ))),
        }
    }
}

/// `⟨ψ|χ⟩ = a_ψ* a_χ + b_ψ* b_χ`.
#[inline]
pub fn inner_product(psi: &QubitState, chi: &QubitState) -> Complex {
    psi.a.conj() * chi.a + psi.b.conj() * chi.b
}

/// Orthogonal complement of `ψ` under the given sign convention.
pub fn complement(psi: &QubitState, convention: ComplementConvention) -> QubitState {
    let perp = QubitState::new_unchecked(psi.b.conj(), -psi.a.conj());
    match convention {
        ComplementConvention::A => perp,
        ComplementConvention::B => perp.neg(),
    }
}

/// Phase-sensitive distance: `max(|a_ψ − a_χ|, |b_ψ − b_χ|)`.
pub fn state_distance(psi: &QubitState, chi: &QubitState) -> f64 {
    vec_distance(psi.amplitudes(), chi.amplitudes())
}

#[inline]
pub(crate) fn vec_distance(u: [Complex; 2], v: [Complex; 2]) -> f64 {
    modulus(u[0] - v[0]).max(modulus(u[1] - v[1]))
}

/// Whether `ψ = e^{iγ}χ` for some `γ`, to within `tol` in [`state_distance`].
///
/// The optimal phase is `⟨χ|ψ⟩/|⟨χ|ψ⟩|`; orthogonal states are never equal.
pub fn equal_up_to_global_phase(psi: &QubitState, chi: &QubitState, tol: f64) -> bool {
    let overlap = inner_product(chi, psi);
    let m = modulus(overlap);
    if m == 0.0 {
        return false;
    }
    let phase = overlap / m;
    state_distance(psi, &chi.with_phase(phase)) < tol
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct GateMatrix {
    m: [[Complex; 2]; 2],
}

impl GateMatrix {
    /// Builds `[[m00, m01], [m10, m11]]`; entries must be finite. Unitarity is
    /// not required here (see [`unitarity_residual`]).
    pub fn new(m00: Complex, m01: Complex, m10: Complex, m11: Complex) -> Result<Self, Error> {
        if ![m00, m01, m10, m11].into_iter().all(is_finite) {
            return Err(Error::NonFinite("GateMatrix::new"));
        }
        Ok(Self::from_rows([[m00, m01], [m10, m11]]))
    }

    #[inline]
    pub(crate) const fn from_rows(m: [[Complex; 2]; 2]) -> Self {
        Self { m }
    }

    /// The identity.
    pub const fn identity() -> Self {
        Self::from_rows([[ONE, ZERO], [ZERO, ONE]])
    }

    /// Rows `[[m00, m01], [m10, m11]]`.
    #[inline]
    pub fn rows(&self) -> [[Complex; 2]; 2] {
        self.m
    }

    /// Entry `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.m[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self::from_rows([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    /// Scales every entry.
    pub fn scale(&self, s: Complex) -> Self {
        let m = &self.m;
        Self::from_rows([[s * m[0][0], s * m[0][1]], [s * m[1][0], s * m[1][1]]])
    }

    /// Raw matrix-vector product, no unitarity check.
    #[inline]
    pub(crate) fn mul_vec(&self, v: [Complex; 2]) -> [Complex; 2] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest componentwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &GateMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max(modulus(self.m[r][c] - other.m[r][c]));
            }
        }
        worst
    }
}

impl Mul for GateMatrix {
    type Output = GateMatrix;

    fn mul(self, rhs: GateMatrix) -> GateMatrix {
        let (a, b) = (&self.m, &rhs.m);
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        GateMatrix::from_rows(out)
    }
}

impl fmt::Debug for GateMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.m.iter()).finish()
    }
}

/// `‖G†G − I‖∞`, the largest componentwise modulus.
pub fn unitarity_residual(gate: &GateMatrix) -> f64 {
    (gate.adjoint() * *gate).max_abs_diff(&GateMatrix::identity())
}

/// `Gψ`. Rejects `G` whose unitarity residual is at least
/// [`APPLY_REJECT_TOL`]; the output is not renormalized.
pub fn apply(gate: &GateMatrix, psi: &QubitState) -> Result<QubitState, Error> {
    let residual = unitarity_residual(gate);
    if residual >= APPLY_REJECT_TOL {
        return Err(Error::NotUnitary { residual });
    }
    let [a, b] = gate.mul_vec(psi.amplitudes());
    Ok(QubitState::new_unchecked(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{cis, FRAC_1_SQRT_2, PI};

    fn plus() -> QubitState {
        QubitState::new(re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)).unwrap()
    }

    fn h() -> GateMatrix {
        let s = re(FRAC_1_SQRT_2);
        GateMatrix::new(s, s, s, -s).unwrap()
    }

    #[test]
    fn constructor_rejects_unnormalized_and_non_finite() {
        assert!(matches!(
            QubitState::new(re(1.0), re(0.1)),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            QubitState::new(re(f64::NAN), ZERO),
            Err(Error::NonFinite(_))
        ));
        assert!(GateMatrix::new(ONE, ZERO, ZERO, Complex::new(f64::INFINITY, 0.0)).is_err());
        // within 1e-12 is accepted as-is
        let s = QubitState::new(re(1.0 + 4e-13), ZERO).unwrap();
        assert_eq!(s.a().re, 1.0 + 4e-13);
    }

    #[test]
    fn inner_product_examples() {
        let psi = plus();
        assert!((inner_product(&psi, &psi) - ONE).norm_sqr() < 1e-30);
        let perp = complement(&psi, ComplementConvention::A);
        assert_eq!(inner_product(&psi, &perp), ZERO);
        let ip = inner_product(&psi, &QubitState::zero());
        assert!((ip - re(FRAC_1_SQRT_2)).norm_sqr() < 1e-30);
    }

    #[test]
    fn complement_examples() {
        // ψ = (α+iβ)|0⟩ + α|1⟩, conv A → α|0⟩ − (α−iβ)|1⟩
        let (alpha, beta) = (0.5, FRAC_1_SQRT_2);
        let psi = QubitState::new(Complex::new(alpha, beta), re(alpha)).unwrap();
        let perp = complement(&psi, ComplementConvention::A);
        assert_eq!(perp.a(), re(alpha));
        assert_eq!(perp.b(), -Complex::new(alpha, -beta));

        // ψ = (α+iβ)|0⟩ + iβ|1⟩, conv B → iβ|0⟩ + (α−iβ)|1⟩
        let (alpha, beta) = (FRAC_1_SQRT_2, 0.5);
        let psi = QubitState::new(Complex::new(alpha, beta), Complex::new(0.0, beta)).unwrap();
        let perp = complement(&psi, ComplementConvention::B);
        assert_eq!(perp.a(), Complex::new(0.0, beta));
        assert_eq!(perp.b(), Complex::new(alpha, -beta));

        let perp0 = complement(&QubitState::zero(), ComplementConvention::A);
        assert_eq!(perp0.amplitudes(), [ZERO, -ONE]);
    }

    #[test]
    fn apply_examples() {
        let out = apply(&h(), &QubitState::zero()).unwrap();
        assert!(state_distance(&out, &plus()) < 1e-15);

        let psi =
            QubitState::new(Complex::new(0.3, 0.4), Complex::new(0.0, -(0.75f64).sqrt())).unwrap();
        assert_eq!(apply(&GateMatrix::identity(), &psi).unwrap(), psi);

        let (alpha, beta) = (0.5, FRAC_1_SQRT_2);
        let psi = QubitState::new(Complex::new(alpha, beta), re(alpha)).unwrap();
        let perp = complement(&psi, ComplementConvention::A);
        let out = apply(&h(), &psi).unwrap();
        let want = [
            (psi.a() + perp.a()) * FRAC_1_SQRT_2,
            (psi.b() + perp.b()) * FRAC_1_SQRT_2,
        ];
        assert!(vec_distance(out.amplitudes(), want) < 1e-15);
    }

    #[test]
    fn apply_rejects_non_unitary_with_residual() {
        let g = GateMatrix::new(ONE, ZERO, ZERO, re(2.0)).unwrap();
        match apply(&g, &QubitState::zero()) {
            Err(Error::NotUnitary { residual }) => assert_eq!(residual, 3.0),
            other => panic!("unexpected {other:?}"),
        }
        // 1e-9 is the rejection threshold, just below it is accepted
        let g = GateMatrix::new(re(1.0 + 4e-10), ZERO, ZERO, ONE).unwrap();
        assert!(apply(&g, &QubitState::zero()).is_ok());
        let g = GateMatrix::new(re(1.0 + 6e-10), ZERO, ZERO, ONE).unwrap();
        assert!(apply(&g, &QubitState::zero()).is_err());
    }

    #[test]
    fn unitarity_residual_examples() {
        assert!(unitarity_residual(&h()) < 1e-15);
        let g = GateMatrix::new(ONE, ZERO, ZERO, re(2.0)).unwrap();
        assert_eq!(unitarity_residual(&g), 3.0);
        assert_eq!(unitarity_residual(&GateMatrix::identity()), 0.0);
    }

    #[test]
    fn phase_comparisons() {
        let psi = QubitState::new(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)).unwrap();
        assert_eq!(state_distance(&psi, &psi), 0.0);
        let rotated = psi.with_phase(cis(PI / 3.0));
        assert!(equal_up_to_global_phase(&psi, &rotated, 1e-12));
        assert!(state_distance(&psi, &rotated) > 0.1);
        assert!(!equal_up_to_global_phase(
            &QubitState::zero(),
            &QubitState::one(),
            1e-12
        ));
    }

    #[test]
    fn matrix_product_and_adjoint() {
        let hh = h() * h();
        assert!(hh.max_abs_diff(&GateMatrix::identity()) < 1e-15);
        let g = GateMatrix::new(ONE, I, ZERO, re(2.0)).unwrap();
        assert_eq!(g.adjoint().get(1, 0), -I);
    }
}
