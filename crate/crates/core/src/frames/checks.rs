//! Residuals of the Sasakian and Kähler structure identities.

use nalgebra::{DMatrix, DVector};

use super::connection::{curvature_table, FrameTables};
use super::fields::{exterior_d_one, exterior_d_two, jacobian, wedge_one_two, OneForm, TwoForm, VectorField};
use super::{contact_form, metric_at, named_coframe, ChartPoint, Model};
use crate::error::{GeomError, Result};
use crate::wrap_angle;

fn reeb_vector(tables: &FrameTables, reeb: usize) -> DVector<f64> {
    let mut t = DVector::zeros(tables.dim);
    t[reeb] = 1.0;
    t
}

/// `|g(∇_V ξ, U) + g(V, ∇_U ξ)|` for frame combinations `U, V` with constant
/// coefficients, where `ξ` is frame vector `reeb`.
pub fn killing_residual_in(tables: &FrameTables, reeb: usize, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    let t = reeb_vector(tables, reeb);
    (tables.nabla_vec(v, &t).dot(u) + v.dot(&tables.nabla_vec(u, &t))).abs()
}

/// Killing residual of the Reeb field of `model` at `p` from the exact tables.
pub fn killing_residual(model: Model, u: &DVector<f64>, v: &DVector<f64>, p: &ChartPoint) -> Result<f64> {
    let tables = curvature_table(model, p)?;
    Ok(killing_residual_in(&tables, model.reeb_index(), u, v))
}

/// `‖R(U,ξ)V - (g(U,V)ξ - g(ξ,V)U)‖` in an orthonormal frame.
pub fn sasaki_identity_residual_in(tables: &FrameTables, reeb: usize, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    let t = reeb_vector(tables, reeb);
    let lhs = tables.curvature_vec(u, &t, v);
    let rhs = &t * u.dot(v) - u * t.dot(v);
    (lhs - rhs).norm()
}

/// Sasakian identity residual of `model` at `p` from the exact tables.
pub fn sasaki_identity_residual(model: Model, u: &DVector<f64>, v: &DVector<f64>, p: &ChartPoint) -> Result<f64> {
    let tables = curvature_table(model, p)?;
    Ok(sasaki_identity_residual_in(&tables, model.reeb_index(), u, v))
}

fn cone_coords(p: &ChartPoint) -> Result<(Vec<f64>, f64)> {
    match p.r {
        Some(r) => Ok((p.coords(), r)),
        None => Err(GeomError::InvalidConePoint("complex structure needs a cone point")),
    }
}

/// Basis `{X, Y, T, r∂r}` of the cone tangent space at `p`, as columns.
fn homogeneous_basis(p: &[f64]) -> DMatrix<f64> {
    let (x, y, r) = (p[0], p[1], p[3]);
    let m = x * x + y * y;
    DMatrix::from_column_slice(
        4,
        4,
        &[
            x, y, 0.0, 0.0, //
            -y, x, -2.0 * m, 0.0, //
            -y, x, 0.0, 0.0, //
            0.0, 0.0, 0.0, r,
        ],
    )
}

/// The complex structure of the cone on a coordinate tangent vector at `p`:
/// `X ↦ Y`, `Y ↦ -X`, `T ↦ -r∂r`, `r∂r ↦ T`.
pub fn complex_structure_apply(p: &ChartPoint, v: &DVector<f64>) -> Result<DVector<f64>> {
    let (q, _) = cone_coords(p)?;
    let basis = homogeneous_basis(&q);
    let c = basis
        .clone()
        .lu()
        .solve(v)
        .ok_or(GeomError::InvalidConePoint("degenerate tangent basis"))?;
    let rotated = DVector::from_column_slice(&[-c[1], c[0], c[3], -c[2]]);
    Ok(basis * rotated)
}

fn lift_to_cone(form: OneForm, name: &str) -> OneForm {
    OneForm::new(name, 4, move |p: &[f64]| {
        let v = form.eval(&p[..3]);
        DVector::from_column_slice(&[v[0], v[1], v[2], 0.0])
    })
}

fn dr() -> OneForm {
    OneForm::new("dr", 4, |_| DVector::from_column_slice(&[0.0, 0.0, 0.0, 1.0]))
}

/// `Ω = r dr∧ω* + r² φ*∧ψ*` on the cone chart `(x, y, t, r)`.
pub fn fundamental_form() -> TwoForm {
    let cof = named_coframe(Model::HStar);
    let phi = lift_to_cone(cof[0].clone(), "phi*");
    let psi = lift_to_cone(cof[1].clone(), "psi*");
    let omega = lift_to_cone(cof[2].clone(), "omega*");
    let radial = dr().wedge(&omega).times(|p| p[3]);
    let transverse = phi.wedge(&psi).times(|p| p[3] * p[3]);
    radial.add(&transverse)
}

/// The one-form `r²ω*/2` whose exterior derivative is [`fundamental_form`].
pub fn kahler_potential_form() -> OneForm {
    lift_to_cone(contact_form(), "omega*").times(|p| 0.5 * p[3] * p[3])
}

/// `|Ω(u,v) - g(Ju, v)|` at a cone point.
pub fn fundamental_form_compatibility(p: &ChartPoint, u: &DVector<f64>, v: &DVector<f64>) -> Result<f64> {
    let (q, _) = cone_coords(p)?;
    let ju = complex_structure_apply(p, u)?;
    let g = metric_at(Model::Cone, &q);
    Ok((fundamental_form().apply(&q, u, v) - (ju.transpose() * g * v)[(0, 0)]).abs())
}

/// `|dΩ(U,V,W)|` at a cone point.
pub fn closedness_residual(p: &ChartPoint, u: &VectorField, v: &VectorField, w: &VectorField, h: f64) -> Result<f64> {
    let (q, _) = cone_coords(p)?;
    Ok(exterior_d_two(&fundamental_form(), u, v, w, &q, h).abs())
}

/// `|d(r²ω*/2)(U,V) - Ω(U,V)|` at a cone point.
pub fn exactness_residual(p: &ChartPoint, u: &VectorField, v: &VectorField, h: f64) -> Result<f64> {
    let (q, _) = cone_coords(p)?;
    let d = exterior_d_one(&kahler_potential_form(), u, v, &q, h);
    Ok((d - fundamental_form().apply(&q, &u.eval(&q), &v.eval(&q))).abs())
}

/// `|(ω*∧dω*)(∂t, ∂x, ∂y) - 1/|z|⁴|` at a point of the affine-rotational group.
pub fn volume_identity_residual(p: &ChartPoint, h: f64) -> Result<f64> {
    Model::HStar.check_point(p)?;
    let q = p.coords();
    let omega = contact_form();
    let d_omega = omega.exterior_d(h);
    let e = |i: usize| {
        let mut v = DVector::zeros(3);
        v[i] = 1.0;
        v
    };
    let value = wedge_one_two(&omega, &d_omega, &q, &e(2), &e(0), &e(1));
    let m = p.x * p.x + p.y * p.y;
    Ok((value - 1.0 / (m * m)).abs())
}

/// The metric `(dξ² + dη²)/(4ξ²) + (dφ - dη/(2ξ))²` on the unit tangent
/// bundle of the hyperbolic plane, in coordinates `(ξ, η, φ)`.
pub fn koranyi_metric(xi: f64, _eta: f64, _phi: f64) -> DMatrix<f64> {
    let a = 1.0 / (4.0 * xi * xi);
    let c = -1.0 / (2.0 * xi);
    DMatrix::from_row_slice(3, 3, &[a, 0.0, 0.0, 0.0, a + c * c, c, 0.0, c, 1.0])
}

/// Largest entry of `K^*g - g*` at `p`, with the Jacobian of the Korányi map
/// taken by finite differences.
pub fn koranyi_isometry_residual(p: &ChartPoint, h: f64) -> Result<f64> {
    Model::HStar.check_point(p)?;
    let q = p.coords();
    let phi0 = p.y.atan2(p.x);
    let chart = |c: &[f64]| {
        let phi = phi0 + wrap_angle(c[1].atan2(c[0]) - phi0);
        DVector::from_column_slice(&[-(c[0] * c[0] + c[1] * c[1]), c[2], phi])
    };
    let jac = jacobian(chart, &q, h);
    let xi = -(p.x * p.x + p.y * p.y);
    let pulled = jac.transpose() * koranyi_metric(xi, p.t, phi0) * jac;
    Ok((pulled - metric_at(Model::HStar, &q)).amax())
}
