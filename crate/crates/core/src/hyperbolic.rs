//! Boundary points of the Siegel domain, their standard lifts to `ℂ^{2,1}`,
//! the Cartan angular invariant and the Korányi–Reimann cross-ratio.
//!
//! The Hermitian form is `⟨z, w⟩ = z₁w̄₃ + z₂w̄₂ + z₃w̄₁`. A finite boundary
//! point `(z, t)` of the Heisenberg group lifts to `[-|z|² + it, √2 z, 1]`
//! and the point at infinity to `[1, 0, 0]`.

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use num_complex::Complex64;

use crate::error::{GeomError, Result};

/// Coordinate tolerance under which two boundary points are considered equal.
pub const DISTINCT_TOL: f64 = 1e-12;

/// Relative tolerance on `|⟨v, v⟩| / ‖v‖²` accepted by [`Lift::project`].
pub const NULL_TOL: f64 = 1e-9;

/// Relative size of the third lift component below which a lift is read as ∞.
const INFINITY_TOL: f64 = 1e-14;

/// A point of `∂𝐇²_ℂ`: either Heisenberg coordinates or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite { z: Complex64, t: f64 },
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(z: Complex64, t: f64) -> Self {
        BoundaryPoint::Finite { z, t }
    }

    pub fn origin() -> Self {
        BoundaryPoint::Finite {
            z: Complex64::new(0.0, 0.0),
            t: 0.0,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// Heisenberg coordinates, or `None` for ∞.
    pub fn coords(&self) -> Option<(Complex64, f64)> {
        match *self {
            BoundaryPoint::Finite { z, t } => Some((z, t)),
            BoundaryPoint::Infinity => None,
        }
    }

    /// The standard lift.
    pub fn lift(&self) -> Lift {
        match *self {
            BoundaryPoint::Finite { z, t } => Lift([
                Complex64::new(-z.norm_sqr(), t),
                z * SQRT_2,
                Complex64::new(1.0, 0.0),
            ]),
            BoundaryPoint::Infinity => Lift([
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ]),
        }
    }

    /// Equality with exact comparison on the ∞ tag and `tol` on coordinates.
    pub fn approx_eq(&self, other: &BoundaryPoint, tol: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite { z, t }, BoundaryPoint::Finite { z: w, t: s }) => {
                (z - w).norm() <= tol && (t - s).abs() <= tol
            }
            _ => false,
        }
    }

    /// Largest coordinate difference; infinite when exactly one point is ∞.
    pub fn distance(&self, other: &BoundaryPoint) -> f64 {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
            (BoundaryPoint::Finite { z, t }, BoundaryPoint::Finite { z: w, t: s }) => {
                (z - w).norm().max((t - s).abs())
            }
            _ => f64::INFINITY,
        }
    }
}

/// A vector of `ℂ³`, not all zero, standing for a point of the projective plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lift(pub [Complex64; 3]);

impl Lift {
    pub fn new(v: [Complex64; 3]) -> Result<Self> {
        if v.iter().all(|c| c.norm_sqr() == 0.0) {
            return Err(GeomError::ZeroLift);
        }
        Ok(Lift(v))
    }

    pub fn scale(&self, c: Complex64) -> Lift {
        Lift([self.0[0] * c, self.0[1] * c, self.0[2] * c])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|⟨v, v⟩| / ‖v‖²`.
    pub fn null_residual(&self) -> f64 {
        herm(self, self).norm() / self.norm().powi(2)
    }

    /// Projectivizes a null vector back to a boundary point.
    pub fn project(&self) -> Result<BoundaryPoint> {
        let residual = self.null_residual();
        if !(residual <= NULL_TOL) {
            return Err(GeomError::NonNullVector { residual });
        }
        let [v1, v2, v3] = self.0;
        if v3.norm() <= INFINITY_TOL * self.norm() {
            return Ok(BoundaryPoint::Infinity);
        }
        let z = v2 / v3 / SQRT_2;
        let t = (v1 / v3).im;
        Ok(BoundaryPoint::Finite { z, t })
    }
}

/// The Hermitian form of signature (2,1): `z₁w̄₃ + z₂w̄₂ + z₃w̄₁`.
pub fn herm(v: &Lift, w: &Lift) -> Complex64 {
    let (z, w) = (&v.0, &w.0);
    z[0] * w[2].conj() + z[1] * w[1].conj() + z[2] * w[0].conj()
}

fn check_distinct(points: &[BoundaryPoint]) -> Option<(usize, usize)> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].approx_eq(&points[j], DISTINCT_TOL) {
                return Some((i, j));
            }
        }
    }
    None
}

/// An ordered triple of pairwise distinct boundary points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple(pub [BoundaryPoint; 3]);

impl Triple {
    pub fn new(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint) -> Result<Self> {
        let pts = [p1, p2, p3];
        match check_distinct(&pts) {
            Some(_) => Err(GeomError::DegenerateTriple),
            None => Ok(Triple(pts)),
        }
    }
}

/// An ordered quadruple of pairwise distinct boundary points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadruple(pub [BoundaryPoint; 4]);

impl Quadruple {
    pub fn new(points: [BoundaryPoint; 4]) -> Result<Self> {
        match check_distinct(&points) {
            Some((i, j)) => Err(GeomError::CoincidentPoints { i, j }),
            None => Ok(Quadruple(points)),
        }
    }

    pub fn lifts(&self) -> [Lift; 4] {
        self.0.map(|p| p.lift())
    }

    /// The triple `(pᵢ, pⱼ, pₖ)` with 0-based indices.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> Triple {
        Triple([self.0[i], self.0[j], self.0[k]])
    }

    pub fn permuted(&self, order: [usize; 4]) -> Quadruple {
        Quadruple(order.map(|i| self.0[i]))
    }
}

/// Cartan's angular invariant from three lifts.
///
/// The product `-⟨p₁,p₂⟩⟨p₂,p₃⟩⟨p₃,p₁⟩` has nonnegative real part, so the
/// principal argument lies in `[-π/2, π/2]`; rounding is clamped back into
/// that interval.
pub fn cartan_lifts(lifts: &[Lift; 3]) -> Result<f64> {
    let [p1, p2, p3] = lifts;
    let prod = -(herm(p1, p2) * herm(p2, p3) * herm(p3, p1));
    let scale = p1.norm().powi(2) * p2.norm().powi(2) * p3.norm().powi(2);
    if prod.norm() <= 1e-14 * scale {
        return Err(GeomError::DegenerateTriple);
    }
    Ok(prod.arg().clamp(-FRAC_PI_2, FRAC_PI_2))
}

pub fn cartan(tr: &Triple) -> f64 {
    // distinct points never produce a vanishing product
    cartan_lifts(&tr.0.map(|p| p.lift())).expect("distinct boundary points")
}

/// Cartan invariant of three points, checking distinctness first.
pub fn cartan_of(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint) -> Result<f64> {
    Triple::new(p1, p2, p3).map(|tr| cartan(&tr))
}

/// `𝕏(p₁,p₂,p₃,p₄) = ⟨p₄,p₂⟩⟨p₃,p₁⟩ / ⟨p₄,p₁⟩⟨p₃,p₂⟩` from lifts.
pub fn cross_ratio_lifts(lifts: &[Lift; 4]) -> Result<Complex64> {
    let [p1, p2, p3, p4] = lifts;
    let num = herm(p4, p2) * herm(p3, p1);
    let den = herm(p4, p1) * herm(p3, p2);
    let scale = p1.norm() * p2.norm() * p3.norm() * p4.norm();
    if den.norm() < 1e-14 * scale {
        return Err(GeomError::UndefinedCrossRatio);
    }
    Ok(num / den)
}

pub fn cross_ratio(q: &Quadruple) -> Result<Complex64> {
    cross_ratio_lifts(&q.lifts())
}

/// The three basic cross-ratios of a quadruple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossRatioTriple {
    pub x1: Complex64,
    pub x2: Complex64,
    pub x3: Complex64,
}

impl CrossRatioTriple {
    /// Absolute residuals of `|X₂| = |X₁||X₃|` and
    /// `|X₁+X₂-1|² = 2Re(X₁(X̄₂ + X̄₁X₃))`.
    pub fn identity_residuals(&self) -> (f64, f64) {
        let CrossRatioTriple { x1, x2, x3 } = *self;
        let r1 = (x2.norm() - x1.norm() * x3.norm()).abs();
        let lhs = (x1 + x2 - 1.0).norm_sqr();
        let rhs = 2.0 * (x1 * (x2.conj() + x1.conj() * x3)).re;
        (r1, (lhs - rhs).abs())
    }
}

/// `X₁ = 𝕏(p₁,p₂,p₃,p₄)`, `X₂ = 𝕏(p₁,p₃,p₂,p₄)`, `X₃ = 𝕏(p₂,p₃,p₁,p₄)`.
pub fn cross_ratio_triple(q: &Quadruple) -> Result<CrossRatioTriple> {
    let l = q.lifts();
    Ok(CrossRatioTriple {
        x1: cross_ratio_lifts(&[l[0], l[1], l[2], l[3]])?,
        x2: cross_ratio_lifts(&[l[0], l[2], l[1], l[3]])?,
        x3: cross_ratio_lifts(&[l[1], l[2], l[0], l[3]])?,
    })
}

pub fn xratio_identity_residuals(c: &CrossRatioTriple) -> (f64, f64) {
    c.identity_residuals()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fin(x: f64, y: f64, t: f64) -> BoundaryPoint {
        BoundaryPoint::finite(c(x, y), t)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn standard_lifts() {
        let o = fin(0.0, 0.0, 0.0).lift();
        assert_eq!(o.0, [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(BoundaryPoint::Infinity.lift().0[0], c(1.0, 0.0));
        let p = fin(1.0, 0.0, 1.0).lift();
        assert!(close(p.0[0], c(-1.0, 1.0), 1e-15));
        assert!(close(p.0[1], c(SQRT_2, 0.0), 1e-15));
        assert!(p.null_residual() < 1e-12);
    }

    #[test]
    fn project_inverts_lift() {
        assert_eq!(
            Lift([c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).project().unwrap(),
            BoundaryPoint::Infinity
        );
        let p = Lift([c(-1.0, 1.0), c(SQRT_2, 0.0), c(1.0, 0.0)]).project().unwrap();
        assert!(p.approx_eq(&fin(1.0, 0.0, 1.0), 1e-14));
        let p = Lift([c(-2.0, 2.0), c(2.0 * SQRT_2, 0.0), c(2.0, 0.0)])
            .project()
            .unwrap();
        assert!(p.approx_eq(&fin(1.0, 0.0, 1.0), 1e-14));
    }

    #[test]
    fn project_rejects_non_null() {
        let err = Lift([c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).project();
        assert!(matches!(err, Err(GeomError::NonNullVector { .. })));
        assert_eq!(Lift::new([c(0.0, 0.0); 3]), Err(GeomError::ZeroLift));
    }

    #[test]
    fn form_values() {
        let inf = BoundaryPoint::Infinity.lift();
        let o = BoundaryPoint::origin().lift();
        assert!(close(herm(&fin(1.0, 0.0, 0.0).lift(), &inf), c(1.0, 0.0), 1e-15));
        assert!(close(herm(&o, &o), c(0.0, 0.0), 1e-15));
        assert!(close(herm(&inf, &o), c(1.0, 0.0), 1e-15));
        let v = fin(0.3, -1.2, 0.7).lift();
        let w = fin(-2.0, 0.5, 1.1).lift();
        assert!(close(herm(&v, &w), herm(&w, &v).conj(), 1e-14));
    }

    #[test]
    fn cartan_examples() {
        let inf = BoundaryPoint::Infinity;
        let o = BoundaryPoint::origin();
        let a = cartan_of(fin(1.0, 0.0, 0.0), inf, o).unwrap();
        assert!(a.abs() < 1e-15);
        let a = cartan_of(fin(0.0, 0.0, 1.0), inf, o).unwrap();
        assert!((a - FRAC_PI_2).abs() < 1e-12);
        let a = cartan_of(fin(1.0, 0.0, 1.0), inf, o).unwrap();
        assert!((a - FRAC_PI_4).abs() < 1e-14);
        // arctan(t/|z|²) for ((z,t), ∞, 0)
        let a = cartan_of(fin(0.6, -0.8, -3.0), inf, o).unwrap();
        assert!((a - (-3.0f64).atan()).abs() < 1e-14);
    }

    #[test]
    fn cartan_on_chains() {
        let inf = BoundaryPoint::Infinity;
        let o = BoundaryPoint::origin();
        for t in [-5.0, -0.1, 0.3, 2.0] {
            let a = cartan_of(fin(0.0, 0.0, t), inf, o).unwrap();
            assert!((a.abs() - FRAC_PI_2).abs() < 1e-12);
        }
        for x in [-3.0, -0.2, 0.5, 7.0] {
            let a = cartan_of(fin(x, 0.0, 0.0), inf, o).unwrap();
            assert!(a.abs() < 1e-12);
        }
    }

    #[test]
    fn cartan_rejects_coincident() {
        let p = fin(1.0, 1.0, 1.0);
        assert_eq!(
            cartan_of(p, p, BoundaryPoint::Infinity),
            Err(GeomError::DegenerateTriple)
        );
    }

    #[test]
    fn cross_ratio_normal_form() {
        let q = Quadruple::new([
            fin(1.0, 0.0, 0.0),
            BoundaryPoint::Infinity,
            BoundaryPoint::origin(),
            fin(1.0, 0.0, 1.0),
        ])
        .unwrap();
        assert!(close(cross_ratio(&q).unwrap(), c(0.0, 1.0), 1e-14));
        let tr = cross_ratio_triple(&q).unwrap();
        assert!(close(tr.x1, c(0.0, 1.0), 1e-14));
        assert!(close(tr.x2, c(1.0, 1.0), 1e-14));
        assert!(close(tr.x3, c(1.0, -1.0), 1e-14));
        let (r1, r2) = tr.identity_residuals();
        assert!(r1 < 1e-12 && r2 < 1e-12);
    }

    #[test]
    fn identity_residual_arithmetic() {
        let one = c(1.0, 0.0);
        let (r1, r2) = xratio_identity_residuals(&CrossRatioTriple {
            x1: one,
            x2: one,
            x3: one,
        });
        assert_eq!(r1, 0.0);
        assert!((r2 - 3.0).abs() < 1e-15);
    }

    #[test]
    fn coincident_quadruple_rejected() {
        let o = BoundaryPoint::origin();
        let err = Quadruple::new([fin(1.0, 0.0, 0.0), BoundaryPoint::Infinity, o, o]);
        assert_eq!(err, Err(GeomError::CoincidentPoints { i: 2, j: 3 }));
    }

    #[test]
    fn cross_ratio_undefined_when_p4_meets_p1() {
        let p1 = fin(1.0, 0.0, 0.0).lift();
        let lifts = [p1, BoundaryPoint::Infinity.lift(), BoundaryPoint::origin().lift(), p1];
        assert_eq!(cross_ratio_lifts(&lifts), Err(GeomError::UndefinedCrossRatio));
    }

    #[test]
    fn lift_scaling_is_invisible() {
        let pts = [fin(0.4, 1.0, -0.3), fin(-1.0, 0.2, 0.9), BoundaryPoint::Infinity, fin(2.0, -0.5, 1.5)];
        let lifts = pts.map(|p| p.lift());
        let scaled = [
            lifts[0].scale(c(2.0, -1.0)),
            lifts[1].scale(c(-0.3, 0.0)),
            lifts[2].scale(c(0.0, 5.0)),
            lifts[3].scale(Complex64::from_polar(0.7, PI / 3.0)),
        ];
        let a = cartan_lifts(&[lifts[0], lifts[1], lifts[2]]).unwrap();
        let b = cartan_lifts(&[scaled[0], scaled[1], scaled[2]]).unwrap();
        assert!((a - b).abs() < 1e-10);
        let x = cross_ratio_lifts(&lifts).unwrap();
        let y = cross_ratio_lifts(&scaled).unwrap();
        assert!((x - y).norm() < 1e-10);
        assert!(scaled[3].project().unwrap().approx_eq(&pts[3], 1e-12));
    }
}
