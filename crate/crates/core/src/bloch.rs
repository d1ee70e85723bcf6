//! Bloch-sphere coordinates, the closed-form ensemble curves, trajectories and
//! great-circle intersections.

use alloc::vec::Vec;

use crate::ensembles::{Branch, FamilyCurve};
use crate::math::{atan2, hypot, sqrt, wrap_tau, FRAC_1_SQRT_2};
use crate::qcore::{Complex, QubitState};
use crate::{Error, NORM_TOL};

/// Below this `sin θ` the azimuth is undefined and reported as 0.
pub const POLE_TOL: f64 = 1e-12;

/// Initial scan density of [`circle_intersections`].
pub const INTERSECTION_SCAN: usize = 4096;

/// Intersections closer than this in parameter are merged.
pub const INTERSECTION_MERGE: f64 = 1e-9;

/// A point on the unit sphere together with the state's global phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochPoint {
    /// `sin θ cos φ`
    pub x: f64,
    /// `sin θ sin φ`
    pub y: f64,
    /// `cos θ`
    pub z: f64,
    /// Polar angle in `[0, π]`.
    pub theta: f64,
    /// Azimuth in `[0, 2π)`; 0 at the poles.
    pub phi: f64,
    /// Global phase in `[0, 2π)`.
    pub gamma: f64,
}

impl BlochPoint {
    /// Builds the point from Cartesian coordinates; angles are derived, `γ` is
    /// supplied by the caller.
    pub fn from_cartesian(x: f64, y: f64, z: f64, gamma: f64) -> Self {
        let rho = hypot(x, y);
        let theta = atan2(rho, z);
        let phi = if rho < POLE_TOL {
            0.0
        } else {
            wrap_tau(atan2(y, x))
        };
        Self {
            x,
            y,
            z,
            theta,
            phi,
            gamma: wrap_tau(gamma),
        }
    }

    /// `(x, y, z)`.
    pub fn xyz(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Euclidean distance between the Cartesian parts.
    pub fn distance(&self, other: &BlochPoint) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        sqrt(dx * dx + dy * dy + dz * dz)
    }
}

fn arg(z: Complex) -> f64 {
    atan2(z.im, z.re)
}

/// Maps `ψ` to the sphere from the bilinears `2 Re(a*b)`, `2 Im(a*b)`,
/// `|a|² − |b|²`.
///
/// `γ` is `arg a`, or `arg b` when `|a| < 1e-12` (south pole).
pub fn to_bloch(psi: &QubitState) -> BlochPoint {
    let (a, b) = (psi.a(), psi.b());
    let ab = a.conj() * b;
    let gamma = if a.norm_sqr() < NORM_TOL * NORM_TOL {
        arg(b)
    } else {
        arg(a)
    };
    BlochPoint::from_cartesian(2.0 * ab.re, 2.0 * ab.im, a.norm_sqr() - b.norm_sqr(), gamma)
}

/// The two closed-form ensemble curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedCurve {
    /// `(2α², −branch·2α√(1 − 2α²), 1 − 2α²)`, `|α| ≤ 1/√2`.
    Curve1,
    /// `(0, branch·2α√(1 − α²), 2α² − 1)`, `|α| ≤ 1`.
    Curve2,
}

/// A point of a closed-form curve. These carry no state, so `γ = 0`.
pub fn closed_form_point(
    curve: ClosedCurve,
    alpha: f64,
    branch: Branch,
) -> Result<BlochPoint, Error> {
    let s = branch.sign();
    let (radicand, domain) = match curve {
        ClosedCurve::Curve1 => (1.0 - 2.0 * alpha * alpha, "[-1/sqrt(2), 1/sqrt(2)]"),
        ClosedCurve::Curve2 => (1.0 - alpha * alpha, "[-1, 1]"),
    };
    if radicand < -NORM_TOL || !alpha.is_finite() {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha,
            domain,
        });
    }
    let root = sqrt(radicand.max(0.0));
    let a2 = alpha * alpha;
    Ok(match curve {
        ClosedCurve::Curve1 => {
            BlochPoint::from_cartesian(2.0 * a2, -s * 2.0 * alpha * root, 1.0 - 2.0 * a2, 0.0)
        }
        ClosedCurve::Curve2 => {
            BlochPoint::from_cartesian(0.0, s * 2.0 * alpha * root, 2.0 * a2 - 1.0, 0.0)
        }
    })
}

/// Domain of `α` for a closed-form curve.
pub fn closed_form_domain(curve: ClosedCurve) -> (f64, f64) {
    match curve {
        ClosedCurve::Curve1 => (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        ClosedCurve::Curve2 => (-1.0, 1.0),
    }
}

/// One sample of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryPoint {
    /// Family parameter.
    pub param: f64,
    /// Image of `ψ` on the sphere.
    pub point: BlochPoint,
}

/// `n ≥ 2` uniform samples of the family's `ψ`, in parameter order.
pub fn trajectory(family: &FamilyCurve, n: usize) -> Result<Vec<TrajectoryPoint>, Error> {
    family
        .domain()?
        .samples(n)?
        .into_iter()
        .map(|param| {
            let pair = family.pair_at(param)?;
            Ok(TrajectoryPoint {
                param,
                point: to_bloch(&pair.psi),
            })
        })
        .collect()
}

/// Great circles used for intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreatCircle {
    /// The `φ ∈ {0, π}` meridian, `y = 0`.
    Polar,
    /// The equator, `z = 0`.
    Equatorial,
}

impl GreatCircle {
    /// The coordinate that vanishes on the circle.
    pub fn coordinate(&self, p: &BlochPoint) -> f64 {
        match self {
            Self::Polar => p.y,
            Self::Equatorial => p.z,
        }
    }
}

/// A family member lying on a great circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Intersection {
    /// Family parameter.
    pub param: f64,
    /// Bloch point of `ψ`.
    pub point: BlochPoint,
    /// The state realizing it.
    pub state: QubitState,
}

/// Finds where the family's `ψ` meets `circle`.
///
/// Scans [`INTERSECTION_SCAN`] samples; samples with `|coordinate| < tol` are
/// taken as-is, and every sign change between neighbours is bisected until
/// `|coordinate| < tol` or the bracket cannot shrink further. Roots closer
/// than [`INTERSECTION_MERGE`] in parameter are merged. Tangential contacts
/// that fall between samples are not detected.
pub fn circle_intersections(
    family: &FamilyCurve,
    circle: GreatCircle,
    tol: f64,
) -> Result<Vec<Intersection>, Error> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain {
            name: "tol",
            value: tol,
            domain: "(0, inf)",
        });
    }
    let domain = family.domain()?;
    let mut params = domain.samples(INTERSECTION_SCAN)?;
    if domain.periodic {
        params.push(domain.hi);
    }
    let eval = |t: f64| -> Result<(f64, Intersection), Error> {
        let state = family.pair_at(t)?.psi;
        let point = to_bloch(&state);
        Ok((
            circle.coordinate(&point),
            Intersection {
                param: t,
                point,
                state,
            },
        ))
    };
    let values: Vec<(f64, Intersection)> =
        params.iter().map(|&t| eval(t)).collect::<Result<_, _>>()?;

    let mut roots: Vec<(f64, Intersection)> = Vec::new();
    for (f, hit) in &values {
        if f.abs() < tol {
            roots.push((f.abs(), *hit));
        }
    }
    for w in values.windows(2) {
        let ((f_lo, lo), (f_hi, hi)) = (&w[0], &w[1]);
        if f_lo.abs() < tol || f_hi.abs() < tol || f_lo.signum() == f_hi.signum() {
            continue;
        }
        let (mut a, mut b, mut fa) = (lo.param, hi.param, *f_lo);
        let mut best = if f_lo.abs() < f_hi.abs() {
            (*f_lo, *lo)
        } else {
            (*f_hi, *hi)
        };
        loop {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            let (fm, hit) = eval(mid)?;
            if fm.abs() < best.0.abs() {
                best = (fm, hit);
            }
            if fm.abs() < tol {
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push((best.0.abs(), best.1));
    }

    roots.sort_by(|x, y| x.1.param.total_cmp(&y.1.param));
    let mut merged: Vec<(f64, Intersection)> = Vec::new();
    for r in roots {
        match merged.last_mut() {
            Some(last) if (r.1.param - last.1.param).abs() < INTERSECTION_MERGE => {
                if r.0 < last.0 {
                    *last = r;
                }
            }
            _ => merged.push(r),
        }
    }
    Ok(merged.into_iter().map(|(_, hit)| hit).collect())
}

/// Directed Hausdorff distance `max_{p∈from} min_{q∈to} |p − q|`.
pub fn directed_hausdorff(from: &[BlochPoint], to: &[BlochPoint]) -> f64 {
    from.iter()
        .map(|p| {
            to.iter()
                .map(|q| p.distance(q))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Symmetric Hausdorff distance between two point sets.
pub fn hausdorff_distance(a: &[BlochPoint], b: &[BlochPoint]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}
