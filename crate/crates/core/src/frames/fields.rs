//! Vector fields and differential forms given by closed-form coefficient
//! functions on a coordinate chart, and the finite-difference calculus on
//! them (directional derivatives, Lie brackets, exterior derivatives).

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

type VecFn = dyn Fn(&[f64]) -> DVector<f64> + Send + Sync;
type MatFn = dyn Fn(&[f64]) -> DMatrix<f64> + Send + Sync;

/// Absolute step used at `p`: `h · max(1, ‖p‖)`.
pub fn step_at(p: &[f64], h: f64) -> f64 {
    let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
    h * norm.max(1.0)
}

fn shifted(p: &[f64], dir: &DVector<f64>, delta: f64) -> Vec<f64> {
    p.iter().zip(dir.iter()).map(|(x, d)| x + delta * d).collect()
}

/// Central-difference derivative of a vector-valued map along `dir` at `p`.
pub fn directional_derivative(
    f: impl Fn(&[f64]) -> DVector<f64>,
    p: &[f64],
    dir: &DVector<f64>,
    h: f64,
) -> DVector<f64> {
    let len = dir.norm();
    if len == 0.0 {
        return f(p) * 0.0;
    }
    let unit = dir / len;
    let delta = step_at(p, h);
    (f(&shifted(p, &unit, delta)) - f(&shifted(p, &unit, -delta))) * (len / (2.0 * delta))
}

/// Scalar version of [`directional_derivative`].
pub fn directional_derivative_scalar(
    f: impl Fn(&[f64]) -> f64,
    p: &[f64],
    dir: &DVector<f64>,
    h: f64,
) -> f64 {
    let len = dir.norm();
    if len == 0.0 {
        return 0.0;
    }
    let unit = dir / len;
    let delta = step_at(p, h);
    (f(&shifted(p, &unit, delta)) - f(&shifted(p, &unit, -delta))) * (len / (2.0 * delta))
}

/// Central-difference Jacobian (columns are partial derivatives).
pub fn jacobian(f: impl Fn(&[f64]) -> DVector<f64>, p: &[f64], h: f64) -> DMatrix<f64> {
    let n = p.len();
    let delta = step_at(p, h);
    let cols: Vec<DVector<f64>> = (0..n)
        .map(|i| {
            let mut plus = p.to_vec();
            let mut minus = p.to_vec();
            plus[i] += delta;
            minus[i] -= delta;
            (f(&plus) - f(&minus)) / (2.0 * delta)
        })
        .collect();
    DMatrix::from_columns(&cols)
}

#[derive(Clone)]
pub struct VectorField {
    name: String,
    dim: usize,
    f: Arc<VecFn>,
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({}, dim={})", self.name, self.dim)
    }
}

impl VectorField {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        f: impl Fn(&[f64]) -> DVector<f64> + Send + Sync + 'static,
    ) -> Self {
        VectorField {
            name: name.into(),
            dim,
            f: Arc::new(f),
        }
    }

    /// The coordinate field `∂/∂xᵢ`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        VectorField::new(format!("d{i}"), dim, move |_| {
            let mut v = DVector::zeros(dim);
            v[i] = 1.0;
            v
        })
    }

    /// `Σ cᵢ Fᵢ` with constant coefficients.
    pub fn combination(coeffs: &[f64], fields: &[VectorField]) -> Self {
        assert_eq!(coeffs.len(), fields.len());
        let dim = fields[0].dim;
        let coeffs = coeffs.to_vec();
        let fields = fields.to_vec();
        VectorField::new("combination", dim, move |p| {
            coeffs
                .iter()
                .zip(&fields)
                .fold(DVector::zeros(dim), |acc, (c, f)| acc + f.eval(p) * *c)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, p: &[f64]) -> DVector<f64> {
        (self.f)(p)
    }

    /// The field `[self, other]`, evaluated pointwise by finite differences.
    pub fn bracket(&self, other: &VectorField, h: f64) -> VectorField {
        let (u, v) = (self.clone(), other.clone());
        VectorField::new(
            format!("[{},{}]", self.name, other.name),
            self.dim,
            move |p| lie_bracket(&u, &v, p, h),
        )
    }

    /// `U(f)` at `p`.
    pub fn derivative_of(&self, f: impl Fn(&[f64]) -> f64, p: &[f64], h: f64) -> f64 {
        directional_derivative_scalar(f, p, &self.eval(p), h)
    }
}

/// `[U, V]^i = U(V^i) - V(U^i)` by central differences.
pub fn lie_bracket(u: &VectorField, v: &VectorField, p: &[f64], h: f64) -> DVector<f64> {
    let up = u.eval(p);
    let vp = v.eval(p);
    directional_derivative(|q| v.eval(q), p, &up, h) - directional_derivative(|q| u.eval(q), p, &vp, h)
}

#[derive(Clone)]
pub struct OneForm {
    name: String,
    dim: usize,
    f: Arc<VecFn>,
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneForm({}, dim={})", self.name, self.dim)
    }
}

impl OneForm {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        f: impl Fn(&[f64]) -> DVector<f64> + Send + Sync + 'static,
    ) -> Self {
        OneForm {
            name: name.into(),
            dim,
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, p: &[f64]) -> DVector<f64> {
        (self.f)(p)
    }

    pub fn apply(&self, p: &[f64], v: &DVector<f64>) -> f64 {
        self.eval(p).dot(v)
    }

    /// `(self ∧ other)(U, V) = self(U) other(V) - self(V) other(U)`.
    pub fn wedge(&self, other: &OneForm) -> TwoForm {
        let (a, b) = (self.clone(), other.clone());
        TwoForm::new(format!("{}^{}", self.name, other.name), self.dim, move |p| {
            let (x, y) = (a.eval(p), b.eval(p));
            &x * y.transpose() - &y * x.transpose()
        })
    }

    /// Multiplies the coefficients by a scalar function.
    pub fn times(&self, g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> OneForm {
        let a = self.clone();
        OneForm::new(format!("f*{}", self.name), self.dim, move |p| a.eval(p) * g(p))
    }

    /// `dη` as a two-form, from the invariant formula on coordinate fields.
    pub fn exterior_d(&self, h: f64) -> TwoForm {
        let eta = self.clone();
        let dim = self.dim;
        TwoForm::new(format!("d{}", self.name), dim, move |p| {
            let coords: Vec<VectorField> = (0..dim).map(|i| VectorField::coordinate(dim, i)).collect();
            DMatrix::from_fn(dim, dim, |i, j| {
                if i == j {
                    0.0
                } else {
                    exterior_d_one(&eta, &coords[i], &coords[j], p, h)
                }
            })
        })
    }
}

#[derive(Clone)]
pub struct TwoForm {
    name: String,
    dim: usize,
    f: Arc<MatFn>,
}

impl fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoForm({}, dim={})", self.name, self.dim)
    }
}

impl TwoForm {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        f: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static,
    ) -> Self {
        TwoForm {
            name: name.into(),
            dim,
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, p: &[f64]) -> DMatrix<f64> {
        (self.f)(p)
    }

    pub fn apply(&self, p: &[f64], u: &DVector<f64>, v: &DVector<f64>) -> f64 {
        (u.transpose() * self.eval(p) * v)[(0, 0)]
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        let (a, b) = (self.clone(), other.clone());
        TwoForm::new(format!("{}+{}", self.name, other.name), self.dim, move |p| {
            a.eval(p) + b.eval(p)
        })
    }

    pub fn times(&self, g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> TwoForm {
        let a = self.clone();
        TwoForm::new(format!("f*{}", self.name), self.dim, move |p| a.eval(p) * g(p))
    }

    /// Largest violation of antisymmetry at `p`.
    pub fn antisymmetry_defect(&self, p: &[f64]) -> f64 {
        let m = self.eval(p);
        (&m + m.transpose()).amax()
    }
}

/// `dη(U,V) = U(η(V)) - V(η(U)) - η([U,V])`.
pub fn exterior_d_one(eta: &OneForm, u: &VectorField, v: &VectorField, p: &[f64], h: f64) -> f64 {
    let uv = u.derivative_of(|q| eta.apply(q, &v.eval(q)), p, h);
    let vu = v.derivative_of(|q| eta.apply(q, &u.eval(q)), p, h);
    uv - vu - eta.apply(p, &lie_bracket(u, v, p, h))
}

/// `dΩ(U,V,W)` by the invariant formula.
pub fn exterior_d_two(
    omega: &TwoForm,
    u: &VectorField,
    v: &VectorField,
    w: &VectorField,
    p: &[f64],
    h: f64,
) -> f64 {
    let pair = |a: &VectorField, b: &VectorField| {
        let (a, b) = (a.clone(), b.clone());
        move |q: &[f64]| omega.apply(q, &a.eval(q), &b.eval(q))
    };
    let t1 = u.derivative_of(pair(v, w), p, h);
    let t2 = v.derivative_of(pair(u, w), p, h);
    let t3 = w.derivative_of(pair(u, v), p, h);
    let (wp, vp, up) = (w.eval(p), v.eval(p), u.eval(p));
    let t4 = omega.apply(p, &lie_bracket(u, v, p, h), &wp);
    let t5 = omega.apply(p, &lie_bracket(u, w, p, h), &vp);
    let t6 = omega.apply(p, &lie_bracket(v, w, p, h), &up);
    t1 - t2 + t3 - t4 + t5 - t6
}

/// `(α ∧ β)(U,V,W) = α(U)β(V,W) - α(V)β(U,W) + α(W)β(U,V)`.
pub fn wedge_one_two(
    alpha: &OneForm,
    beta: &TwoForm,
    p: &[f64],
    u: &DVector<f64>,
    v: &DVector<f64>,
    w: &DVector<f64>,
) -> f64 {
    alpha.apply(p, u) * beta.apply(p, v, w) - alpha.apply(p, v) * beta.apply(p, u, w)
        + alpha.apply(p, w) * beta.apply(p, u, v)
}
