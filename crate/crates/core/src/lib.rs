//! Hadamard-type single-qubit gates and the state ensembles on which they act
//! universally.
//!
//! The crate is `no_std` (it needs `alloc` for derived families and trajectory
//! buffers). All transcendental functions go through `libm` so results are
//! bit-identical across platforms.
//!
//! Module map:
//!
//! - [`qcore`]: complex 2-vectors, 2×2 matrices, orthogonal complements and
//!   comparison predicates.
//! - [`gates`]: constructors for every Hadamard-type gate.
//! - [`ensembles`]: constructors for the `(ψ, ψ⊥)` families each gate accepts.
//! - [`verify`]: transformation templates, residual checks, and the brute-force
//!   grid oracle that re-derives a gate's admissible family.
//! - [`bloch`]: Bloch-sphere mapping, closed-form curves, trajectories and
//!   great-circle intersections.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bloch;
pub mod ensembles;
mod error;
pub mod gates;
mod math;
mod parse;
pub mod qcore;
pub mod verify;

pub use error::{Error, SpecParseError};
pub use qcore::{ComplementConvention, Complex, GateMatrix, QubitState};

/// Construction tolerance on `|a|² + |b|² = 1` and `|p|² + |q|² = 1`.
pub const NORM_TOL: f64 = 1e-12;

/// Unitarity residual every gate constructor guarantees.
pub const UNITARY_TOL: f64 = 1e-12;

/// Unitarity residual at or above which [`qcore::apply`] refuses a matrix.
pub const APPLY_REJECT_TOL: f64 = 1e-9;
