//! Exact holomorphic Lefschetz analysis of purely non-symplectic
//! automorphisms of K3 surfaces.
//!
//! The holomorphic Lefschetz number of an automorphism `g` of order `N` with
//! `g*ω = ζ^r ω` is computed twice: globally as `1 + ζ^{-r}` and locally as a
//! sum over isolated fixed points and pointwise-fixed curves. Equating the two
//! in the power basis of `Q(ζ_N)` gives a rational linear system in the
//! fixed-point multiplicities, which [`intsolve`] then decides over the
//! integers with a checkable certificate.

pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod intsolve;
pub mod lefschetz;
pub mod linear;

pub use error::{Error, Result};
pub use exactmath::{CycElt, CyclotomicField, Poly, Rational};
pub use lefschetz::{FixedConfig, FixedPointType, LefschetzData, LefschetzSystem};
pub use linear::LinearSystem;
