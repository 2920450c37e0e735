//! Isometries of the complex hyperbolic plane acting on boundary points, and
//! the normal form `(1, tan a), ∞, 0, (z, t)` of a quadruple.
//!
//! Elements are 3×3 complex matrices preserving the Hermitian form, taken
//! modulo scalars. No determinant normalization is applied since every
//! quantity computed here is projective.

use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::ops::Mul;

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::error::{GeomError, Result};
use crate::hyperbolic::{cartan, BoundaryPoint, Lift, Quadruple};

/// Margin for the strict side conditions of the normal form.
pub const NORMAL_FORM_MARGIN: f64 = 1e-12;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// The matrix of the Hermitian form.
pub fn form_matrix() -> Matrix3<Complex64> {
    Matrix3::new(ZERO, ZERO, ONE, ZERO, ONE, ZERO, ONE, ZERO, ZERO)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement(pub Matrix3<Complex64>);

impl GroupElement {
    /// Wraps a matrix, rejecting it if the form residual exceeds `1e-9`.
    pub fn new(m: Matrix3<Complex64>) -> Result<Self> {
        let g = GroupElement(m);
        if !(g.form_residual() < 1e-9) {
            return Err(GeomError::InvalidGroupElement("matrix does not preserve the form"));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        GroupElement(Matrix3::identity())
    }

    /// `max |(m* H m - H)_{ij}|`.
    pub fn form_residual(&self) -> f64 {
        let h = form_matrix();
        let d = self.0.adjoint() * h * self.0 - h;
        d.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// The inverse `H m* H`, valid for form-preserving matrices.
    pub fn inverse(&self) -> Self {
        let h = form_matrix();
        GroupElement(h * self.0.adjoint() * h)
    }

    pub fn apply_lift(&self, v: &Lift) -> Lift {
        let w = self.0 * nalgebra::Vector3::from(v.0);
        Lift([w[0], w[1], w[2]])
    }

    pub fn apply(&self, p: &BoundaryPoint) -> BoundaryPoint {
        // form-preserving maps send null vectors to null vectors
        self.apply_lift(&p.lift())
            .project()
            .expect("group element maps null vectors to null vectors")
    }

    pub fn apply_quadruple(&self, q: &Quadruple) -> Quadruple {
        Quadruple(q.0.map(|p| self.apply(&p)))
    }

    /// Distance to `other` modulo a nonzero scalar factor.
    pub fn projective_distance(&self, other: &GroupElement) -> f64 {
        let (idx, _) = self
            .0
            .iter()
            .enumerate()
            .fold((0, 0.0), |acc, (i, c)| if c.norm() > acc.1 { (i, c.norm()) } else { acc });
        let c = other.0[idx] / self.0[idx];
        (self.0 * c - other.0).iter().map(|x| x.norm()).fold(0.0, f64::max)
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        GroupElement(self.0 * rhs.0)
    }
}

pub fn apply(g: &GroupElement, p: &BoundaryPoint) -> BoundaryPoint {
    g.apply(p)
}

pub fn verify_form(g: &GroupElement) -> f64 {
    g.form_residual()
}

/// Left Heisenberg translation by `(w, s)`; fixes ∞.
pub fn heis_translation(w: Complex64, s: f64) -> GroupElement {
    GroupElement(Matrix3::new(
        ONE,
        -w.conj() * SQRT_2,
        Complex64::new(-w.norm_sqr(), s),
        ZERO,
        ONE,
        w * SQRT_2,
        ZERO,
        ZERO,
        ONE,
    ))
}

/// `(z, t) ↦ (λz, |λ|²t)`; fixes 0 and ∞.
pub fn dilation_rotation(lambda: Complex64) -> Result<GroupElement> {
    let m = lambda.norm();
    if m == 0.0 || !m.is_finite() {
        return Err(GeomError::ZeroScale);
    }
    Ok(GroupElement(Matrix3::from_diagonal(&nalgebra::Vector3::new(
        Complex64::new(m, 0.0),
        lambda / m,
        Complex64::new(1.0 / m, 0.0),
    ))))
}

/// The involution given by the form matrix itself; swaps 0 and ∞.
pub fn inversion() -> GroupElement {
    GroupElement(form_matrix())
}

/// A quadruple in normal form `p₁ = (1, tan a), p₂ = ∞, p₃ = 0, p₄ = (z, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedQuadruple {
    pub a: f64,
    pub z: Complex64,
    pub t: f64,
}

impl NormalizedQuadruple {
    pub fn new(a: f64, z: Complex64, t: f64) -> Result<Self> {
        if !(a.abs() < FRAC_PI_2) || !a.is_finite() {
            return Err(GeomError::InvalidNormalForm("a must lie in (-pi/2, pi/2)"));
        }
        if !(z.norm() > NORMAL_FORM_MARGIN) || !t.is_finite() {
            return Err(GeomError::InvalidNormalForm("z must be nonzero"));
        }
        if !((t / z.norm_sqr() - a.tan()).abs() > NORMAL_FORM_MARGIN) {
            return Err(GeomError::InvalidNormalForm("t/|z|^2 must differ from tan a"));
        }
        Ok(NormalizedQuadruple { a, z, t })
    }

    pub fn quadruple(&self) -> Quadruple {
        Quadruple([
            BoundaryPoint::finite(ONE, self.a.tan()),
            BoundaryPoint::Infinity,
            BoundaryPoint::origin(),
            BoundaryPoint::finite(self.z, self.t),
        ])
    }

    /// Largest parameter difference, with `a` compared directly.
    pub fn distance(&self, other: &NormalizedQuadruple) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.z - other.z).norm())
            .max((self.t - other.t).abs())
    }
}

fn finite_coords(p: BoundaryPoint) -> Result<(Complex64, f64)> {
    p.coords()
        .ok_or(GeomError::InvalidArgument("point unexpectedly sent to infinity"))
}

/// Brings `q` to normal form and returns the parameters with the element
/// `g` realizing it.
///
/// The pipeline sends `p₂` to ∞ (translation then inversion, when needed),
/// translates `p₃` to the origin, then dilates and rotates by `1/z₁`.
pub fn normalize_quadruple(q: &Quadruple) -> Result<(NormalizedQuadruple, GroupElement)> {
    let [p1, p2, p3, p4] = q.0;
    let mut g = GroupElement::identity();
    if let Some((z2, t2)) = p2.coords() {
        g = inversion() * heis_translation(-z2, -t2);
    }
    let (z3, t3) = finite_coords(g.apply(&p3))?;
    g = heis_translation(-z3, -t3) * g;

    let (z1, _) = finite_coords(g.apply(&p1))?;
    if z1.norm() < NORMAL_FORM_MARGIN {
        return Err(GeomError::CCircle123);
    }
    g = dilation_rotation(z1.inv())? * g;

    let (_, tan_a) = finite_coords(g.apply(&p1))?;
    let a = tan_a.atan();
    let (z, t) = finite_coords(g.apply(&p4))?;
    if z.norm() < NORMAL_FORM_MARGIN {
        return Err(GeomError::CCircle234);
    }
    if (t / z.norm_sqr() - tan_a).abs() < NORMAL_FORM_MARGIN {
        return Err(GeomError::SameOrbit);
    }
    Ok((NormalizedQuadruple { a, z, t }, g))
}

/// Cartan invariant of `(p₁, p₂, p₃)` together with the normal form; the two
/// values of `a` agree for every quadruple in the domain.
pub fn normal_form_consistency(q: &Quadruple) -> Result<f64> {
    let (n, _) = normalize_quadruple(q)?;
    Ok((cartan(&q.triple(0, 1, 2)) - n.a).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fin(x: f64, y: f64, t: f64) -> BoundaryPoint {
        BoundaryPoint::finite(c(x, y), t)
    }

    #[test]
    fn identity_acts_trivially() {
        let p = fin(0.3, -0.2, 1.7);
        assert!(GroupElement::identity().apply(&p).approx_eq(&p, 1e-15));
        assert_eq!(verify_form(&GroupElement::identity()), 0.0);
    }

    #[test]
    fn inversion_swaps_zero_and_infinity() {
        let inv = inversion();
        assert_eq!(inv.apply(&BoundaryPoint::origin()), BoundaryPoint::Infinity);
        assert!(inv.apply(&BoundaryPoint::Infinity).approx_eq(&BoundaryPoint::origin(), 0.0));
        assert_eq!(verify_form(&inv), 0.0);
        let sq = inv * inv;
        assert!(sq.projective_distance(&GroupElement::identity()) < 1e-12);
    }

    #[test]
    fn inversion_coordinate_action() {
        // projectivizing H·lift(z,t): z' = z/u, u' = 1/u with u = -|z|²+it
        let (z, t) = (c(0.7, -1.1), 0.4);
        let u = c(-z.norm_sqr(), t);
        let img = inversion().apply(&BoundaryPoint::finite(z, t));
        let (zz, tt) = img.coords().unwrap();
        assert!((zz - z / u).norm() < 1e-14);
        assert!((tt - u.inv().im).abs() < 1e-14);
    }

    #[test]
    fn translation_is_left_heisenberg_multiplication() {
        assert_eq!(heis_translation(c(0.0, 0.0), 0.0), GroupElement::identity());
        let img = heis_translation(c(1.0, 0.0), 0.0).apply(&BoundaryPoint::origin());
        assert!(img.approx_eq(&fin(1.0, 0.0, 0.0), 1e-15));
        let (w, s) = (c(0.5, 1.5), -0.7);
        let (z, t) = (c(-1.2, 0.3), 2.1);
        let img = heis_translation(w, s).apply(&BoundaryPoint::finite(z, t));
        let expected = BoundaryPoint::finite(w + z, s + t + 2.0 * (w * z.conj()).im);
        assert!(img.approx_eq(&expected, 1e-13));
        assert_eq!(heis_translation(w, s).apply(&BoundaryPoint::Infinity), BoundaryPoint::Infinity);
        assert!(verify_form(&heis_translation(c(2.0, 1.0), 3.0)) < 1e-12);
    }

    #[test]
    fn dilation_examples() {
        let p = fin(0.2, 0.9, -1.0);
        assert!(dilation_rotation(c(1.0, 0.0)).unwrap().apply(&p).approx_eq(&p, 1e-15));
        let img = dilation_rotation(c(0.0, 2.0)).unwrap().apply(&fin(1.0, 0.0, 1.0));
        assert!(img.approx_eq(&fin(0.0, 2.0, 4.0), 1e-14));
        let lambda = c(-0.6, 1.3);
        let tan_a = 0.35;
        let img = dilation_rotation(lambda).unwrap().apply(&fin(1.0, 0.0, tan_a));
        assert!(img.approx_eq(&BoundaryPoint::finite(lambda, lambda.norm_sqr() * tan_a), 1e-14));
        assert_eq!(dilation_rotation(c(0.0, 0.0)), Err(GeomError::ZeroScale));
    }

    #[test]
    fn composition_matches_sequential_action() {
        let g = heis_translation(c(0.3, -0.4), 1.2);
        let h = dilation_rotation(c(1.5, 0.5)).unwrap() * inversion();
        let p = fin(-0.8, 0.6, 0.25);
        let lhs = (g * h).apply(&p);
        let rhs = g.apply(&h.apply(&p));
        assert!(lhs.approx_eq(&rhs, 1e-12));
        let gi = (g * h).inverse();
        assert!(gi.apply(&lhs).approx_eq(&p, 1e-12));
    }

    #[test]
    fn normal_form_examples() {
        let n = NormalizedQuadruple::new(0.3, c(0.5, -1.0), 0.8).unwrap();
        let (m, g) = normalize_quadruple(&n.quadruple()).unwrap();
        assert!(m.distance(&n) < 1e-12);
        assert!(g.projective_distance(&GroupElement::identity()) < 1e-12);

        let q = Quadruple::new([fin(1.0, 0.0, 0.0), BoundaryPoint::Infinity, BoundaryPoint::origin(), fin(2.0, 0.0, 1.0)]).unwrap();
        let (m, _) = normalize_quadruple(&q).unwrap();
        assert!(m.a.abs() < 1e-15);
        assert!((m.z - c(2.0, 0.0)).norm() < 1e-15 && (m.t - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalization_of_generic_quadruple() {
        let q = Quadruple::new([fin(0.5, 0.5, -1.0), fin(-1.0, 0.2, 0.3), fin(0.1, -0.9, 1.4), fin(1.3, 0.4, 0.0)]).unwrap();
        let (n, g) = normalize_quadruple(&q).unwrap();
        let target = n.quadruple();
        for i in 0..4 {
            assert!(g.apply(&q.0[i]).distance(&target.0[i]) < 1e-9, "point {i}");
        }
        assert!(normal_form_consistency(&q).unwrap() < 1e-9);
    }

    #[test]
    fn normalization_errors() {
        let t_axis = |t: f64| fin(0.0, 0.0, t);
        let q = Quadruple::new([t_axis(1.0), t_axis(2.0), t_axis(0.0), t_axis(3.0)]).unwrap();
        assert_eq!(normalize_quadruple(&q).unwrap_err(), GeomError::CCircle123);

        let q = Quadruple::new([fin(1.0, 0.0, 0.0), BoundaryPoint::Infinity, BoundaryPoint::origin(), t_axis(2.0)]).unwrap();
        assert_eq!(normalize_quadruple(&q).unwrap_err(), GeomError::CCircle234);

        // (λ, |λ|² tan a) lies in the stabiliser orbit of (1, tan a)
        let lambda = c(0.4, 1.2);
        let q = Quadruple::new([
            fin(1.0, 0.0, 0.5),
            BoundaryPoint::Infinity,
            BoundaryPoint::origin(),
            BoundaryPoint::finite(lambda, lambda.norm_sqr() * 0.5),
        ])
        .unwrap();
        assert_eq!(normalize_quadruple(&q).unwrap_err(), GeomError::SameOrbit);
    }

    #[test]
    fn normal_form_validation() {
        assert!(NormalizedQuadruple::new(FRAC_PI_2, c(1.0, 0.0), 0.0).is_err());
        assert!(NormalizedQuadruple::new(0.0, c(0.0, 0.0), 1.0).is_err());
        assert!(NormalizedQuadruple::new(0.0, c(2.0, 0.0), 0.0).is_err());
    }
}
