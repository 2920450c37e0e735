//! Coordinates on the space of quadruples modulo isometries: the punctured
//! cone over the affine-rotational group, the cross-ratio variety and
//! `ℂ* × (ℂ ∖ ℝ)`, with the maps between them.
//!
//! Every map takes a [`NormalizedQuadruple`] `(a, z, t)` or one of the target
//! coordinate types and validates its output domain.

mod cr;

pub use cr::{
    cone_w_field, cone_z_field, cr_equivalence_residual, f_map_pushforward, g_map_pushforward,
    levi_values, pushforward, tau_eval, variety_tangent, ComplexTangent, CoordKind, LeviPoint,
    LeviValues,
};

use num_complex::Complex64;

use crate::error::{GeomError, Result};
use crate::hyperbolic::{cartan, cross_ratio_triple, Quadruple};
use crate::moebius::{normalize_quadruple, NormalizedQuadruple};
use crate::angle_distance;

/// Margin for the strict inequalities defining the domains.
pub const DOMAIN_MARGIN: f64 = 1e-12;
/// Tolerance for the variety equation.
pub const VARIETY_TOL: f64 = 1e-9;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A point `(z, t, r)` of the cone with `log r ≠ t/|z|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConePointPrime {
    pub z: Complex64,
    pub t: f64,
    pub r: f64,
}

impl ConePointPrime {
    pub fn new(z: Complex64, t: f64, r: f64) -> Result<Self> {
        if !(z.norm() > 0.0) || !z.is_finite() || !t.is_finite() {
            return Err(GeomError::InvalidConePoint("z must be nonzero"));
        }
        if !(r > 0.0) || !r.is_finite() {
            return Err(GeomError::InvalidConePoint("r must be positive"));
        }
        if !((r.ln() - t / z.norm_sqr()).abs() > DOMAIN_MARGIN) {
            return Err(GeomError::InvalidConePoint("log r equals t/|z|^2"));
        }
        Ok(ConePointPrime { z, t, r })
    }

    /// Real coordinates `(x, y, t, r)`.
    pub fn coords(&self) -> [f64; 4] {
        [self.z.re, self.z.im, self.t, self.r]
    }

    pub fn distance(&self, other: &ConePointPrime) -> f64 {
        (self.z - other.z)
            .norm()
            .max((self.t - other.t).abs())
            .max((self.r - other.r).abs())
    }
}

/// `|w₁ + w₂ - 1|² - 2Re(w₁w̄₂(1 + e^{-2ia}))`.
pub fn variety_equation(w1: Complex64, w2: Complex64, a: f64) -> f64 {
    (w1 + w2 - 1.0).norm_sqr() - 2.0 * (w1 * w2.conj() * (ONE + (-2.0 * I * a).exp())).re
}

/// A point `(w₁, w₂, a)` of the cross-ratio variety.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarietyPoint {
    pub w1: Complex64,
    pub w2: Complex64,
    pub a: f64,
}

impl VarietyPoint {
    pub fn new(w1: Complex64, w2: Complex64, a: f64) -> Result<Self> {
        if !(a.abs() < std::f64::consts::FRAC_PI_2) {
            return Err(GeomError::VarietySideCondition("a must lie in (-pi/2, pi/2)"));
        }
        if !w1.is_finite() || !w2.is_finite() {
            return Err(GeomError::InvalidArgument("nonfinite variety coordinates"));
        }
        let residual = variety_equation(w1, w2, a).abs();
        if !(residual < VARIETY_TOL) {
            return Err(GeomError::NotOnVariety { residual });
        }
        if !((w1 + w2 - 1.0).norm() > DOMAIN_MARGIN) {
            return Err(GeomError::VarietySideCondition("w1 + w2 = 1"));
        }
        if !((w1 * w2.conj() * (-I * a).exp()).re > DOMAIN_MARGIN) {
            return Err(GeomError::VarietySideCondition("Re(w1 conj(w2) e^{-ia}) <= 0"));
        }
        if !(angle_distance((w1 / w2).arg(), 2.0 * a) > DOMAIN_MARGIN) {
            return Err(GeomError::VarietySideCondition("arg(w1/w2) = 2a"));
        }
        Ok(VarietyPoint { w1, w2, a })
    }

    pub fn residual(&self) -> f64 {
        variety_equation(self.w1, self.w2, self.a).abs()
    }

    /// Real coordinates `(u₁, v₁, u₂, v₂, a)`.
    pub fn coords(&self) -> [f64; 5] {
        [self.w1.re, self.w1.im, self.w2.re, self.w2.im, self.a]
    }

    pub fn distance(&self, other: &VarietyPoint) -> f64 {
        (self.w1 - other.w1)
            .norm()
            .max((self.w2 - other.w2).norm())
            .max((self.a - other.a).abs())
    }
}

/// `(a, z, t) ↦ (z, t, e^{tan a})`.
pub fn b0(n: &NormalizedQuadruple) -> ConePointPrime {
    ConePointPrime {
        z: n.z,
        t: n.t,
        r: n.a.tan().exp(),
    }
}

/// `(z, t, r) ↦ (arctan log r, z, t)`.
pub fn b0_inv(c: &ConePointPrime) -> Result<NormalizedQuadruple> {
    NormalizedQuadruple::new(c.r.ln().atan(), c.z, c.t)
}

/// `||X₁ + X₂ - 1|² - 2Re(X₁X̄₂(1 + e^{-2ia}))|`.
pub fn crv_residual(x1: Complex64, x2: Complex64, a: f64) -> f64 {
    variety_equation(x1, x2, a).abs()
}

/// `2Re(X₁X̄₂) + 2|X₁||X₂| - |X₁ + X₂ - 1|²`, nonnegative on the variety and
/// zero exactly when `arg(X₁/X₂) = 2a`.
pub fn crv_inequality_slack(x1: Complex64, x2: Complex64) -> f64 {
    2.0 * (x1 * x2.conj()).re + 2.0 * x1.norm() * x2.norm() - (x1 + x2 - 1.0).norm_sqr()
}

/// Closed forms of `(X₁, X₂)` in terms of the normal form:
/// `X₁ = (-1 - i tan a)/D`, `X₂ = u/D`, `D = u - 1 - i tan a + 2z`, `u = -|z|² + it`.
pub fn cross_ratios_from_normal_form(n: &NormalizedQuadruple) -> (Complex64, Complex64) {
    let u = Complex64::new(-n.z.norm_sqr(), n.t);
    let p = Complex64::new(-1.0, -n.a.tan());
    let d = u + p + 2.0 * n.z;
    (p / d, u / d)
}

/// `(X₁, X₂, a)` of a quadruple, with `a` its Cartan invariant.
pub fn variety_from_quadruple(q: &Quadruple) -> Result<VarietyPoint> {
    normalize_quadruple(q)?;
    let x = cross_ratio_triple(q)?;
    VarietyPoint::new(x.x1, x.x2, cartan(&q.triple(0, 1, 2)))
}

fn normal_form_of_variety(w1: Complex64, w2: Complex64, a: f64) -> Result<(Complex64, f64)> {
    let den = (ONE + (-2.0 * I * a).exp()) * w1;
    if den.norm() < DOMAIN_MARGIN {
        return Err(GeomError::DenominatorVanishes("variety inverse"));
    }
    Ok(((w1 + w2 - 1.0) / den, -2.0 * (w2 / den).im))
}

/// `z = (w₁ + w₂ - 1)/((1 + e^{-2ia})w₁)`, `t = -2Im(w₂/((1 + e^{-2ia})w₁))`.
pub fn variety_inverse(v: &VarietyPoint) -> Result<NormalizedQuadruple> {
    let (z, t) = normal_form_of_variety(v.w1, v.w2, v.a)?;
    NormalizedQuadruple::new(v.a, z, t)
}

/// `(a, z, t) ↦ (z, (|z|² - it)/(1 - i tan a))`.
pub fn b1(n: &NormalizedQuadruple) -> (Complex64, Complex64) {
    let w = Complex64::new(n.z.norm_sqr(), -n.t) / Complex64::new(1.0, -n.a.tan());
    (n.z, w)
}

/// `tan a = (|ζ|² - Re w)/Im w`, `t = (Re(w)|ζ|² - |w|²)/Im w`.
fn split_product(zeta: Complex64, w: Complex64) -> Result<(f64, f64)> {
    if zeta.norm() < DOMAIN_MARGIN {
        return Err(GeomError::ZeroModulus);
    }
    if w.im.abs() < DOMAIN_MARGIN {
        return Err(GeomError::DenominatorVanishes("Im(w) = 0"));
    }
    let m = zeta.norm_sqr();
    Ok(((m - w.re) / w.im, (w.re * m - w.norm_sqr()) / w.im))
}

pub fn b1_inv(zeta: Complex64, w: Complex64) -> Result<NormalizedQuadruple> {
    let (tan_a, t) = split_product(zeta, w)?;
    NormalizedQuadruple::new(tan_a.atan(), zeta, t)
}

fn g_raw(z: Complex64, t: f64, r: f64) -> Result<(Complex64, Complex64, f64)> {
    let u = Complex64::new(-z.norm_sqr(), t);
    let q = Complex64::new(-1.0, -r.ln());
    let d = u + 2.0 * z + q;
    if d.norm() < DOMAIN_MARGIN {
        return Err(GeomError::DenominatorVanishes("u + 2z + q"));
    }
    Ok((q / d, u / d, (-q.im).atan()))
}

/// `G(z, t, r) = (q/(u + 2z + q), u/(u + 2z + q), arctan(-Im q))` with
/// `u = -|z|² + it`, `q = -1 - i log r`.
pub fn g_map(c: &ConePointPrime) -> Result<VarietyPoint> {
    let (w1, w2, a) = g_raw(c.z, c.t, c.r)?;
    VarietyPoint::new(w1, w2, a)
}

pub fn g_inv(v: &VarietyPoint) -> Result<ConePointPrime> {
    let (z, t) = normal_form_of_variety(v.w1, v.w2, v.a)?;
    ConePointPrime::new(z, t, v.a.tan().exp())
}

fn f_raw(z: Complex64, t: f64, r: f64) -> (Complex64, Complex64) {
    (z, Complex64::new(z.norm_sqr(), -t) / Complex64::new(1.0, -r.ln()))
}

/// `F(z, t, r) = (z, (|z|² - it)/(1 - i log r))`.
pub fn f_map(c: &ConePointPrime) -> (Complex64, Complex64) {
    f_raw(c.z, c.t, c.r)
}

pub fn f_inv(zeta: Complex64, w: Complex64) -> Result<ConePointPrime> {
    let (log_r, t) = split_product(zeta, w)?;
    ConePointPrime::new(zeta, t, log_r.exp())
}
