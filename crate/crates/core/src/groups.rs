//! The Heisenberg group, the affine-rotational group `𝔥* = ℂ* × ℝ` with
//! `(z,t)⋆(w,s) = (zw, t + s|z|²)`, and three identifications of `𝔥*`:
//! with `Aff(ℝ) × U(1)`, with the truncated boundary `𝐇* ⊂ ∂𝐇²_ℂ`, and with
//! the unit tangent bundle of the hyperbolic plane (Korányi map).

use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::error::{GeomError, Result};
use crate::wrap_angle;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HStarElement {
    z: Complex64,
    t: f64,
}

impl HStarElement {
    pub fn new(z: Complex64, t: f64) -> Result<Self> {
        if !(z.norm() >= 1e-300) || !z.is_finite() || !t.is_finite() {
            return Err(GeomError::ZeroModulus);
        }
        Ok(HStarElement { z, t })
    }

    pub fn identity() -> Self {
        HStarElement {
            z: Complex64::new(1.0, 0.0),
            t: 0.0,
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn distance(&self, other: &HStarElement) -> f64 {
        (self.z - other.z).norm().max((self.t - other.t).abs())
    }
}

pub fn hstar_mul(a: &HStarElement, b: &HStarElement) -> HStarElement {
    HStarElement {
        z: a.z * b.z,
        t: a.t + b.t * a.z.norm_sqr(),
    }
}

pub fn hstar_inv(a: &HStarElement) -> HStarElement {
    HStarElement {
        z: a.z.inv(),
        t: -a.t / a.z.norm_sqr(),
    }
}

/// Heisenberg group law `(z,t)·(w,s) = (z + w, t + s + 2Im(zw̄))`.
pub fn heis_mul(a: (Complex64, f64), b: (Complex64, f64)) -> (Complex64, f64) {
    (a.0 + b.0, a.1 + b.1 + 2.0 * (a.0 * b.0.conj()).im)
}

/// `([[alpha, beta], [0, 1]], e^{i theta})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffRotElement {
    alpha: f64,
    beta: f64,
    theta: f64,
}

impl AffRotElement {
    pub fn new(alpha: f64, beta: f64, theta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !beta.is_finite() || !theta.is_finite() {
            return Err(GeomError::InvalidArgument("affine part needs alpha > 0"));
        }
        Ok(AffRotElement {
            alpha,
            beta,
            theta: wrap_angle(theta),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Product in `Aff(ℝ) × U(1)`: affine matrices multiply, angles add.
    pub fn mul(&self, other: &AffRotElement) -> AffRotElement {
        AffRotElement {
            alpha: self.alpha * other.alpha,
            beta: self.alpha * other.beta + self.beta,
            theta: wrap_angle(self.theta + other.theta),
        }
    }

    /// Max of the affine entry differences and the angular distance.
    pub fn distance(&self, other: &AffRotElement) -> f64 {
        (self.alpha - other.alpha)
            .abs()
            .max((self.beta - other.beta).abs())
            .max(crate::angle_distance(self.theta, other.theta))
    }
}

/// `ψ(z,t) = ([[|z|², t], [0, 1]], e^{i arg z})`.
pub fn psi_iso(a: &HStarElement) -> AffRotElement {
    AffRotElement {
        alpha: a.z.norm_sqr(),
        beta: a.t,
        theta: a.z.arg(),
    }
}

pub fn psi_inv(e: &AffRotElement) -> HStarElement {
    HStarElement {
        z: Complex64::from_polar(e.alpha.sqrt(), e.theta),
        t: e.beta,
    }
}

/// `Ψ(z,t) = (-|z|² + it, √2 z)`.
pub fn psi_embed(a: &HStarElement) -> (Complex64, Complex64) {
    (Complex64::new(-a.z.norm_sqr(), a.t), a.z * SQRT_2)
}

/// Defining function `ρ*(z₁,z₂) = 2Re(z₁)/|z₂|² + 1` of `𝐇*`.
pub fn rho_star(z1: Complex64, z2: Complex64) -> f64 {
    2.0 * z1.re / z2.norm_sqr() + 1.0
}

/// A point of `T₁(𝐇¹_ℂ)` in the left half-plane model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentBundlePoint {
    zeta: Complex64,
    phi: f64,
}

impl TangentBundlePoint {
    pub fn new(zeta: Complex64, phi: f64) -> Result<Self> {
        if !(zeta.re < 0.0) || !phi.is_finite() {
            return Err(GeomError::InvalidArgument("zeta must lie in the left half-plane"));
        }
        Ok(TangentBundlePoint {
            zeta,
            phi: wrap_angle(phi),
        })
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// `K(z,t) = (-|z|² + it, arg z)`.
pub fn koranyi(a: &HStarElement) -> TangentBundlePoint {
    TangentBundlePoint {
        zeta: Complex64::new(-a.z.norm_sqr(), a.t),
        phi: a.z.arg(),
    }
}

/// `K⁻¹(ζ, φ) = (√(-Re ζ) e^{iφ}, Im ζ)`.
pub fn koranyi_inv(p: &TangentBundlePoint) -> HStarElement {
    HStarElement {
        z: Complex64::from_polar((-p.zeta.re).sqrt(), p.phi),
        t: p.zeta.im,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn h(x: f64, y: f64, t: f64) -> HStarElement {
        HStarElement::new(c(x, y), t).unwrap()
    }

    #[test]
    fn star_product_examples() {
        let w = h(0.3, -2.0, 1.5);
        assert_eq!(hstar_mul(&HStarElement::identity(), &w), w);
        let p = hstar_mul(&h(0.0, 1.0, 1.0), &h(0.0, 2.0, 1.0));
        assert!(p.distance(&h(-2.0, 0.0, 2.0)) < 1e-15);
        let p = hstar_mul(&h(2.0, 0.0, 3.0), &h(0.5, 0.0, -0.75));
        assert!(p.distance(&HStarElement::identity()) < 1e-15);
    }

    #[test]
    fn star_is_not_abelian() {
        let (a, b) = (h(2.0, 0.0, 1.0), h(1.0, 0.0, 1.0));
        assert!(hstar_mul(&a, &b).distance(&hstar_mul(&b, &a)) > 0.5);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(hstar_inv(&HStarElement::identity()), HStarElement::identity());
        assert!(hstar_inv(&h(2.0, 0.0, 3.0)).distance(&h(0.5, 0.0, -0.75)) < 1e-15);
    }

    #[test]
    fn zero_modulus_rejected() {
        assert_eq!(HStarElement::new(c(0.0, 0.0), 1.0), Err(GeomError::ZeroModulus));
    }

    #[test]
    fn heisenberg_examples() {
        let b = (c(0.7, -0.1), 2.0);
        assert_eq!(heis_mul((c(0.0, 0.0), 0.0), b), b);
        let (z, t) = heis_mul((c(1.0, 0.0), 0.0), (c(0.0, 1.0), 0.0));
        assert_eq!(z, c(1.0, 1.0));
        assert!((t + 2.0).abs() < 1e-15);
    }

    #[test]
    fn psi_examples() {
        let e = psi_iso(&HStarElement::identity());
        assert_eq!((e.alpha(), e.beta(), e.theta()), (1.0, 0.0, 0.0));
        let e = psi_iso(&h(0.0, 1.0, 5.0));
        assert!(e.distance(&AffRotElement::new(1.0, 5.0, FRAC_PI_2).unwrap()) < 1e-15);
        assert!(AffRotElement::new(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn embedding_examples() {
        let (z1, z2) = psi_embed(&h(1.0, 0.0, 1.0));
        assert!((z1 - c(-1.0, 1.0)).norm() < 1e-15 && (z2 - c(SQRT_2, 0.0)).norm() < 1e-15);
        assert!(rho_star(z1, z2).abs() < 1e-12);
        let (z1, z2) = psi_embed(&h(0.0, 1.0, 0.0));
        assert!((z1 - c(-1.0, 0.0)).norm() < 1e-15 && (z2 - c(0.0, SQRT_2)).norm() < 1e-15);
    }

    #[test]
    fn koranyi_examples() {
        let k = koranyi(&h(0.0, 1.0, 1.0));
        assert!((k.zeta() - c(-1.0, 1.0)).norm() < 1e-15);
        assert!((k.phi() - FRAC_PI_2).abs() < 1e-15);
        let back = koranyi_inv(&TangentBundlePoint::new(c(-1.0, 0.0), 0.0).unwrap());
        assert!(back.distance(&HStarElement::identity()) < 1e-15);
        assert!(TangentBundlePoint::new(c(0.0, 1.0), 0.0).is_err());
        // angle representatives are folded into (-π, π]
        let p = TangentBundlePoint::new(c(-2.0, 0.5), 3.0 * PI).unwrap();
        assert!((p.phi() - PI).abs() < 1e-12);
    }
}
