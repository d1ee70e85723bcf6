//! Scalar helpers routed through `libm`.

use crate::qcore::Complex;

pub(crate) use core::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// `|z|`, computed without intermediate overflow.
#[inline]
pub(crate) fn modulus(z: Complex) -> f64 {
    hypot(z.re, z.im)
}

/// `e^{iθ}`.
#[inline]
pub(crate) fn cis(theta: f64) -> Complex {
    let (s, c) = libm::sincos(theta);
    Complex::new(c, s)
}

/// Reduces an angle into `[0, 2π)`.
pub(crate) fn wrap_tau(angle: f64) -> f64 {
    let r = angle % TAU;
    let r = if r < 0.0 { r + TAU } else { r };
    // `r + TAU` can round up to exactly TAU for tiny negative inputs.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// `n` evenly spaced samples over `[lo, hi]`, endpoints included.
///
/// The upper half is computed from `hi` downwards so that a symmetric interval
/// yields an exactly antisymmetric sample set.
pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> alloc::vec::Vec<f64> {
    debug_assert!(n >= 2);
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let j = n - 1 - i;
            if i <= j {
                lo + step * i as f64
            } else {
                hi - step * j as f64
            }
        })
        .collect()
}
