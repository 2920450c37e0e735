//! Numerical toolkit for configurations of four points on the boundary of
//! the complex hyperbolic plane and for the Sasakian geometry of the
//! affine-rotational group `ℂ* × ℝ` and its Kähler cone.
//!
//! Module map:
//!
//! - [`hyperbolic`]: lifts, the signature-(2,1) Hermitian form, the Cartan
//!   angular invariant and Korányi–Reimann cross-ratios.
//! - [`moebius`]: isometries acting on boundary points and the normal form of
//!   a quadruple.
//! - [`groups`]: the Heisenberg group, the affine-rotational group and the maps
//!   identifying the latter with `Aff(ℝ) × U(1)`, with the truncated boundary
//!   and with the unit tangent bundle of the hyperbolic plane.
//! - [`frames`]: frames, coframes, metrics, connections and curvature, with an
//!   exact structure-constant path and a finite-difference oracle.
//! - [`config`]: the maps between normalized quadruples, the punctured cone,
//!   the cross-ratio variety and `ℂ* × (ℂ ∖ ℝ)`, plus their CR geometry.
//! - [`sampling`] and [`parallel`]: seeded random inputs and the sweep driver.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod frames;
pub mod groups;
pub mod hyperbolic;
pub mod moebius;
pub mod parallel;
pub mod sampling;

pub use error::{GeomError, Result};
pub use num_complex::Complex64;

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let mut w = theta.rem_euclid(TAU);
    if w > PI {
        w -= TAU;
    }
    w
}

/// Distance between two angles measured on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    wrap_angle(a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn wrap_angle_principal_branch() {
        assert!((wrap_angle(PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert!(angle_distance(0.1, 0.1 + 2.0 * PI) < 1e-12);
    }
}
