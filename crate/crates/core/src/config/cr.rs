//! Complexified tangent vectors, pushforwards and the CR structures of the
//! cone and of the cross-ratio variety.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{f_raw, g_inv, g_raw, ConePointPrime, VarietyPoint};
use crate::error::{GeomError, Result};
use crate::frames::jacobian;
use crate::groups::rho_star;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Relative step for pushforward Jacobians.
pub const PUSHFORWARD_STEP: f64 = 1e-6;
/// Relative step for finite-difference Hessians.
const HESSIAN_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordKind {
    /// A complex coordinate `w = u + iv`, occupying two real coordinates.
    Complex,
    Real,
}

fn real_dim(layout: &[CoordKind]) -> usize {
    layout
        .iter()
        .map(|k| match k {
            CoordKind::Complex => 2,
            CoordKind::Real => 1,
        })
        .sum()
}

/// A complexified tangent vector `Σ Aⱼ∂/∂wⱼ + Bⱼ∂/∂w̄ⱼ + Σ Cₖ∂/∂xₖ`.
///
/// For a complex coordinate `holo` holds `A` and `anti` holds `B`; for a real
/// coordinate `holo` holds `C` and `anti` is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTangent {
    pub layout: Vec<CoordKind>,
    pub base: Vec<f64>,
    pub holo: Vec<Complex64>,
    pub anti: Vec<Complex64>,
}

impl ComplexTangent {
    pub fn new(layout: Vec<CoordKind>, base: Vec<f64>, holo: Vec<Complex64>, anti: Vec<Complex64>) -> Self {
        assert_eq!(real_dim(&layout), base.len());
        assert!(holo.len() == layout.len() && anti.len() == layout.len());
        ComplexTangent {
            layout,
            base,
            holo,
            anti,
        }
    }

    /// Components along the real coordinate directions.
    pub fn to_real_directions(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.base.len());
        for (k, kind) in self.layout.iter().enumerate() {
            match kind {
                CoordKind::Complex => {
                    let (a, b) = (self.holo[k], self.anti[k]);
                    out.push((a + b) / 2.0);
                    out.push(I * (b - a) / 2.0);
                }
                CoordKind::Real => out.push(self.holo[k]),
            }
        }
        out
    }

    pub fn from_real_directions(layout: Vec<CoordKind>, base: Vec<f64>, dirs: &[Complex64]) -> Self {
        let mut holo = Vec::with_capacity(layout.len());
        let mut anti = Vec::with_capacity(layout.len());
        let mut idx = 0;
        for kind in &layout {
            match kind {
                CoordKind::Complex => {
                    let (du, dv) = (dirs[idx], dirs[idx + 1]);
                    holo.push(du + I * dv);
                    anti.push(du - I * dv);
                    idx += 2;
                }
                CoordKind::Real => {
                    holo.push(dirs[idx]);
                    anti.push(ZERO);
                    idx += 1;
                }
            }
        }
        ComplexTangent::new(layout, base, holo, anti)
    }

    /// Norm of the `∂/∂w̄` components.
    pub fn antiholomorphic_norm(&self) -> f64 {
        self.anti.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        ComplexTangent {
            holo: self.holo.iter().map(|c| c * k).collect(),
            anti: self.anti.iter().map(|c| c * k).collect(),
            ..self.clone()
        }
    }

    /// Euclidean norm of the coefficient difference.
    pub fn distance(&self, other: &ComplexTangent) -> f64 {
        self.holo
            .iter()
            .zip(&other.holo)
            .chain(self.anti.iter().zip(&other.anti))
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Pushes `v` forward by a map given in real coordinates, using a central
/// finite-difference Jacobian.
pub fn pushforward(
    map: impl Fn(&[f64]) -> Vec<f64>,
    out_layout: Vec<CoordKind>,
    v: &ComplexTangent,
) -> ComplexTangent {
    let f = |p: &[f64]| DVector::from_vec(map(p));
    let jac: DMatrix<f64> = jacobian(f, &v.base, PUSHFORWARD_STEP);
    let dirs = v.to_real_directions();
    let re = DVector::from_iterator(dirs.len(), dirs.iter().map(|c| c.re));
    let im = DVector::from_iterator(dirs.len(), dirs.iter().map(|c| c.im));
    let (out_re, out_im) = (&jac * re, &jac * im);
    let out: Vec<Complex64> = out_re.iter().zip(out_im.iter()).map(|(&a, &b)| Complex64::new(a, b)).collect();
    ComplexTangent::from_real_directions(out_layout, map(&v.base), &out)
}

fn cone_layout() -> Vec<CoordKind> {
    vec![CoordKind::Complex, CoordKind::Real, CoordKind::Real]
}

fn variety_layout() -> Vec<CoordKind> {
    vec![CoordKind::Complex, CoordKind::Complex, CoordKind::Real]
}

/// `𝐙 = z∂z + i|z|²∂t` at a cone point.
pub fn cone_z_field(c: &ConePointPrime) -> ComplexTangent {
    ComplexTangent::new(
        cone_layout(),
        c.coords().to_vec(),
        vec![c.z, Complex64::new(0.0, c.z.norm_sqr()), ZERO],
        vec![ZERO; 3],
    )
}

/// `𝐖 = ½(𝐓 + i r∂r)` with `𝐓 = i(z∂z - z̄∂z̄)`.
pub fn cone_w_field(c: &ConePointPrime) -> ComplexTangent {
    ComplexTangent::new(
        cone_layout(),
        c.coords().to_vec(),
        vec![I * c.z / 2.0, ZERO, I * c.r / 2.0],
        vec![-I * c.z.conj() / 2.0, ZERO, ZERO],
    )
}

fn alpha_beta(v: &VarietyPoint) -> (Complex64, Complex64) {
    let e = (2.0 * I * v.a).exp();
    let alpha = v.w2.conj() - e * v.w1.conj() - 1.0;
    let beta = -(v.w1.conj() - e.conj() * v.w2.conj() - 1.0);
    (alpha, beta)
}

/// `Z = α∂w₁ + β∂w₂`, spanning the kernel of `∂F` on the variety.
pub fn variety_tangent(v: &VarietyPoint) -> ComplexTangent {
    let (alpha, beta) = alpha_beta(v);
    ComplexTangent::new(
        variety_layout(),
        v.coords().to_vec(),
        vec![alpha, beta, ZERO],
        vec![ZERO; 3],
    )
}

/// `τ = -β₂du₁ - β₁dv₁ + α₂du₂ + α₁dv₂` on a real tangent vector
/// `(du₁, dv₁, du₂, dv₂)`.
pub fn tau_eval(v: &VarietyPoint, tangent: &[f64; 4]) -> f64 {
    let (alpha, beta) = alpha_beta(v);
    -beta.im * tangent[0] - beta.re * tangent[1] + alpha.im * tangent[2] + alpha.re * tangent[3]
}

fn g_real(p: &[f64]) -> Vec<f64> {
    let (w1, w2, a) = g_raw(Complex64::new(p[0], p[1]), p[2], p[3]).expect("point inside the domain of G");
    vec![w1.re, w1.im, w2.re, w2.im, a]
}

fn f_real(p: &[f64]) -> Vec<f64> {
    let (zeta, w) = f_raw(Complex64::new(p[0], p[1]), p[2], p[3]);
    vec![zeta.re, zeta.im, w.re, w.im]
}

pub fn g_map_pushforward(v: &ComplexTangent) -> ComplexTangent {
    pushforward(g_real, variety_layout(), v)
}

pub fn f_map_pushforward(v: &ComplexTangent) -> ComplexTangent {
    pushforward(f_real, vec![CoordKind::Complex, CoordKind::Complex], v)
}

/// The factor `k = -w₁(w₁ + w₂ - 1)/((1 + e^{2ia})w̄₁)`.
pub fn cr_factor(v: &VarietyPoint) -> Complex64 {
    -v.w1 * (v.w1 + v.w2 - 1.0) / ((1.0 + (2.0 * I * v.a).exp()) * v.w1.conj())
}

/// `‖G_*(𝐙) - kZ‖` at `v`, with `𝐙` taken at `G⁻¹(v)`.
pub fn cr_equivalence_residual(v: &VarietyPoint) -> Result<f64> {
    let c = g_inv(v)?;
    let k = cr_factor(v);
    if k.norm() == 0.0 {
        return Err(GeomError::DenominatorVanishes("CR factor vanishes"));
    }
    let pushed = g_map_pushforward(&cone_z_field(&c));
    Ok(pushed.distance(&variety_tangent(v).scale(k)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeviPoint {
    /// A point `(z₁, z₂)` of `ρ* = 0`.
    RhoStar { z1: Complex64, z2: Complex64 },
    Variety(VarietyPoint),
}

/// Levi-form values `∂∂̄f(Z, Z̄)` of a defining function on its CR vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeviValues {
    /// The value predicted on the hypersurface: `1` or `4cos²a`.
    pub closed_form: f64,
    /// The analytic Hessian contracted with `(Z, Z̄)`.
    pub hessian: f64,
    /// A finite-difference Hessian contracted with `(Z, Z̄)`.
    pub finite_difference: f64,
}

/// `Σ ∂²f/∂zᵢ∂z̄ⱼ Zᵢ Z̄ⱼ` with the Hessian of `f: ℂ² → ℝ` by central differences.
fn fd_levi(f: impl Fn(Complex64, Complex64) -> f64, z: [Complex64; 2], dir: [Complex64; 2]) -> f64 {
    let p = [z[0].re, z[0].im, z[1].re, z[1].im];
    let scale = p.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let h = HESSIAN_STEP * scale;
    let eval = |q: &[f64; 4]| f(Complex64::new(q[0], q[1]), Complex64::new(q[2], q[3]));
    let second = |i: usize, j: usize| {
        let shifted = |si: f64, sj: f64| {
            let mut q = p;
            q[i] += si * h;
            q[j] += sj * h;
            eval(&q)
        };
        (shifted(1.0, 1.0) - shifted(1.0, -1.0) - shifted(-1.0, 1.0) + shifted(-1.0, -1.0)) / (4.0 * h * h)
    };
    let mut total = ZERO;
    for i in 0..2 {
        for j in 0..2 {
            let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
            let hij = Complex64::new(
                second(xi, xj) + second(yi, yj),
                second(xi, yj) - second(yi, xj),
            ) / 4.0;
            total += hij * dir[i] * dir[j].conj();
        }
    }
    total.re
}

pub fn levi_values(point: &LeviPoint) -> Result<LeviValues> {
    match *point {
        LeviPoint::RhoStar { z1, z2 } => {
            let m = z2.norm_sqr();
            if m == 0.0 {
                return Err(GeomError::ZeroModulus);
            }
            let dir = [Complex64::new(-m, 0.0), z2];
            let hessian = 2.0 + 2.0 * z1.re / m;
            let finite_difference = fd_levi(rho_star, [z1, z2], dir);
            Ok(LeviValues {
                closed_form: 1.0,
                hessian,
                finite_difference,
            })
        }
        LeviPoint::Variety(v) => {
            let (alpha, beta) = alpha_beta(&v);
            let e = (-2.0 * I * v.a).exp();
            let hessian = alpha.norm_sqr() - 2.0 * (alpha * beta.conj() * e).re + beta.norm_sqr();
            let a = v.a;
            let finite_difference =
                fd_levi(|w1, w2| super::variety_equation(w1, w2, a), [v.w1, v.w2], [alpha, beta]);
            Ok(LeviValues {
                closed_form: 4.0 * v.a.cos().powi(2),
                hessian,
                finite_difference,
            })
        }
    }
}
