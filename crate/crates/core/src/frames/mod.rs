//! Frames, coframes and metrics of three model spaces, and the differential
//! geometry built on them.
//!
//! - [`Model::HStar`]: the affine-rotational group on the chart `(x, y, t)`,
//!   `z = x + iy ≠ 0`, with the left-invariant orthonormal frame
//!   `X = x∂x + y∂y`, `Y = x∂y - y∂x - 2|z|²∂t`, `T = x∂y - y∂x`.
//! - [`Model::Cone`]: its Riemannian cone on `(x, y, t, r)` with metric
//!   `dr² + r²g*` and frame `X/r, Y/r, T/r, ∂r`.
//! - [`Model::Heisenberg`]: the Heisenberg group with `X = ∂x + 2y∂t`,
//!   `Y = ∂y - 2x∂t`, `T = ∂t` and metric `dx² + dy² + (dt + 2x dy - 2y dx)²`.
//!
//! Curvature follows the convention `R(X,Y)Z = ∇_Y∇_X Z - ∇_X∇_Y Z + ∇_{[X,Y]}Z`
//! throughout, so that `K(U,V) = g(R(U,V)U, V)` for orthonormal `U, V`.

mod checks;
mod connection;
mod fields;
mod oracle;

use nalgebra::{DMatrix, DVector};

pub use checks::{
    closedness_residual, complex_structure_apply, exactness_residual, fundamental_form,
    fundamental_form_compatibility, kahler_potential_form, killing_residual, killing_residual_in,
    koranyi_isometry_residual, koranyi_metric, sasaki_identity_residual, sasaki_identity_residual_in,
    volume_identity_residual,
};
pub use connection::{
    curvature_table, exact_tables, koszul_connection, measure_structure, ExactTables, FrameTables,
    StructureConstants,
};
pub use fields::{
    directional_derivative, exterior_d_one, exterior_d_two, jacobian, lie_bracket, step_at,
    wedge_one_two, OneForm, TwoForm, VectorField,
};
pub use oracle::fd_curvature_oracle;

use crate::error::{GeomError, Result};

/// Default relative finite-difference step.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    HStar,
    Cone,
    Heisenberg,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::HStar, Model::Cone, Model::Heisenberg];

    pub fn name(&self) -> &'static str {
        match self {
            Model::HStar => "hstar",
            Model::Cone => "cone",
            Model::Heisenberg => "heisenberg",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Model::Cone => 4,
            _ => 3,
        }
    }

    pub fn frame_names(&self) -> &'static [&'static str] {
        match self {
            Model::Cone => &["Xr", "Yr", "Tr", "Sr"],
            _ => &["X", "Y", "T"],
        }
    }

    /// Index of the Reeb field `T` (or `T_r`) in the frame.
    pub fn reeb_index(&self) -> usize {
        2
    }

    /// Point at which structure coefficients are measured.
    pub fn base_point(&self) -> ChartPoint {
        match self {
            Model::Cone => ChartPoint::cone(1.0, 0.0, 0.0, 1.0).expect("valid base point"),
            _ => ChartPoint::planar(1.0, 0.0, 0.0).expect("valid base point"),
        }
    }

    /// The scale `s(p)` such that the frame's structure functions are
    /// constant multiples of `s`: `1` on the groups, `1/r` on the cone.
    pub fn structure_scale(&self, p: &[f64]) -> f64 {
        match self {
            Model::Cone => 1.0 / p[3],
            _ => 1.0,
        }
    }

    pub fn check_point(&self, p: &ChartPoint) -> Result<()> {
        match (self, p.r) {
            (Model::Cone, None) => Err(GeomError::InvalidChartPoint("cone points need r")),
            (Model::HStar | Model::Heisenberg, Some(_)) => {
                Err(GeomError::InvalidChartPoint("r is only defined on the cone"))
            }
            _ => Ok(()),
        }
    }
}

/// Coordinates `(x, y, t)` with `x² + y² > 0`, plus `r > 0` on the cone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub x: f64,
    pub y: f64,
    pub t: f64,
    pub r: Option<f64>,
}

impl ChartPoint {
    pub fn planar(x: f64, y: f64, t: f64) -> Result<Self> {
        if !(x * x + y * y > 0.0) || !t.is_finite() {
            return Err(GeomError::InvalidChartPoint("need x^2 + y^2 > 0"));
        }
        Ok(ChartPoint { x, y, t, r: None })
    }

    pub fn cone(x: f64, y: f64, t: f64, r: f64) -> Result<Self> {
        let mut p = ChartPoint::planar(x, y, t)?;
        if !(r > 0.0) || !r.is_finite() {
            return Err(GeomError::InvalidChartPoint("need r > 0"));
        }
        p.r = Some(r);
        Ok(p)
    }

    pub fn from_coords(c: &[f64]) -> Result<Self> {
        match c.len() {
            3 => ChartPoint::planar(c[0], c[1], c[2]),
            4 => ChartPoint::cone(c[0], c[1], c[2], c[3]),
            _ => Err(GeomError::InvalidChartPoint("expected 3 or 4 coordinates")),
        }
    }

    pub fn coords(&self) -> Vec<f64> {
        let mut v = vec![self.x, self.y, self.t];
        if let Some(r) = self.r {
            v.push(r);
        }
        v
    }
}

fn v3(a: f64, b: f64, c: f64) -> DVector<f64> {
    DVector::from_vec(vec![a, b, c])
}

fn v4(a: f64, b: f64, c: f64, d: f64) -> DVector<f64> {
    DVector::from_vec(vec![a, b, c, d])
}

fn hstar_frame() -> Vec<VectorField> {
    vec![
        VectorField::new("X", 3, |p| v3(p[0], p[1], 0.0)),
        VectorField::new("Y", 3, |p| {
            v3(-p[1], p[0], -2.0 * (p[0] * p[0] + p[1] * p[1]))
        }),
        VectorField::new("T", 3, |p| v3(-p[1], p[0], 0.0)),
    ]
}

fn cone_frame() -> Vec<VectorField> {
    let base = hstar_frame();
    let mut frame: Vec<VectorField> = base
        .into_iter()
        .zip(["Xr", "Yr", "Tr"])
        .map(|(f, name)| {
            VectorField::new(name, 4, move |p: &[f64]| {
                let v = f.eval(&p[..3]) / p[3];
                v4(v[0], v[1], v[2], 0.0)
            })
        })
        .collect();
    frame.push(VectorField::new("Sr", 4, |_| v4(0.0, 0.0, 0.0, 1.0)));
    frame
}

fn heisenberg_frame() -> Vec<VectorField> {
    vec![
        VectorField::new("X", 3, |p| v3(1.0, 0.0, 2.0 * p[1])),
        VectorField::new("Y", 3, |p| v3(0.0, 1.0, -2.0 * p[0])),
        VectorField::new("T", 3, |_| v3(0.0, 0.0, 1.0)),
    ]
}

/// The orthonormal frame of `model` with closed-form coefficients.
pub fn named_frame(model: Model) -> Vec<VectorField> {
    match model {
        Model::HStar => hstar_frame(),
        Model::Cone => cone_frame(),
        Model::Heisenberg => heisenberg_frame(),
    }
}

fn hstar_coframe() -> Vec<OneForm> {
    vec![
        // d(|z|²)/(2|z|²)
        OneForm::new("phi*", 3, |p| {
            let m = p[0] * p[0] + p[1] * p[1];
            v3(p[0] / m, p[1] / m, 0.0)
        }),
        // -dt/(2|z|²)
        OneForm::new("psi*", 3, |p| {
            let m = p[0] * p[0] + p[1] * p[1];
            v3(0.0, 0.0, -0.5 / m)
        }),
        // (dt + 2x dy - 2y dx)/(2|z|²)
        OneForm::new("omega*", 3, |p| {
            let m = p[0] * p[0] + p[1] * p[1];
            v3(-p[1] / m, p[0] / m, 0.5 / m)
        }),
    ]
}

fn cone_coframe() -> Vec<OneForm> {
    let mut forms: Vec<OneForm> = hstar_coframe()
        .into_iter()
        .zip(["phi^r", "psi^r", "omega^r"])
        .map(|(f, name)| {
            OneForm::new(name, 4, move |p: &[f64]| {
                let v = f.eval(&p[..3]) * p[3];
                v4(v[0], v[1], v[2], 0.0)
            })
        })
        .collect();
    forms.push(OneForm::new("dr", 4, |_| v4(0.0, 0.0, 0.0, 1.0)));
    forms
}

fn heisenberg_coframe() -> Vec<OneForm> {
    vec![
        OneForm::new("dx", 3, |_| v3(1.0, 0.0, 0.0)),
        OneForm::new("dy", 3, |_| v3(0.0, 1.0, 0.0)),
        OneForm::new("omega", 3, |p| v3(-2.0 * p[1], 2.0 * p[0], 1.0)),
    ]
}

/// The coframe dual to [`named_frame`].
pub fn named_coframe(model: Model) -> Vec<OneForm> {
    match model {
        Model::HStar => hstar_coframe(),
        Model::Cone => cone_coframe(),
        Model::Heisenberg => heisenberg_coframe(),
    }
}

/// The contact form `ω*` of the affine-rotational group.
pub fn contact_form() -> OneForm {
    hstar_coframe().remove(2)
}

fn outer(a: &DVector<f64>) -> DMatrix<f64> {
    a * a.transpose()
}

/// `g* = [(d|z|²)² + dt² + (dt + 2x dy - 2y dx)²] / (4|z|⁴)` in coordinates.
fn hstar_metric(p: &[f64]) -> DMatrix<f64> {
    let (x, y) = (p[0], p[1]);
    let m = x * x + y * y;
    let d_norm = v3(2.0 * x, 2.0 * y, 0.0);
    let dt = v3(0.0, 0.0, 1.0);
    let contact = v3(-2.0 * y, 2.0 * x, 1.0);
    (outer(&d_norm) + outer(&dt) + outer(&contact)) / (4.0 * m * m)
}

/// Coordinate matrix of the metric of `model` at `p`.
pub fn metric_eval(model: Model, p: &ChartPoint) -> Result<DMatrix<f64>> {
    model.check_point(p)?;
    Ok(metric_at(model, &p.coords()))
}

pub(crate) fn metric_at(model: Model, p: &[f64]) -> DMatrix<f64> {
    match model {
        Model::HStar => hstar_metric(p),
        Model::Cone => {
            let r = p[3];
            let mut g = DMatrix::zeros(4, 4);
            g.view_mut((0, 0), (3, 3)).copy_from(&(hstar_metric(&p[..3]) * (r * r)));
            g[(3, 3)] = 1.0;
            g
        }
        Model::Heisenberg => {
            let contact = v3(-2.0 * p[1], 2.0 * p[0], 1.0);
            let mut g = outer(&contact);
            g[(0, 0)] += 1.0;
            g[(1, 1)] += 1.0;
            g
        }
    }
}

/// Frame vectors at `p` as the columns of a matrix.
pub(crate) fn frame_matrix(model: Model, p: &[f64]) -> DMatrix<f64> {
    let cols: Vec<DVector<f64>> = named_frame(model).iter().map(|f| f.eval(p)).collect();
    DMatrix::from_columns(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &DVector<f64>, b: &[f64], tol: f64) -> bool {
        (a - DVector::from_column_slice(b)).amax() < tol
    }

    #[test]
    fn frame_values() {
        let f = named_frame(Model::HStar);
        let p = [1.0, 0.0, 0.0];
        assert!(close(&f[0].eval(&p), &[1.0, 0.0, 0.0], 1e-15));
        assert!(close(&f[1].eval(&p), &[0.0, 1.0, -2.0], 1e-15));
        assert!(close(&f[2].eval(&p), &[0.0, 1.0, 0.0], 1e-15));

        let cone = named_frame(Model::Cone);
        let q = [0.3, -0.7, 1.1, 2.0];
        let x = f[0].eval(&q[..3]) / 2.0;
        assert!(close(&cone[0].eval(&q), &[x[0], x[1], x[2], 0.0], 1e-15));

        let heis = named_frame(Model::Heisenberg);
        assert!(close(&heis[0].eval(&[0.0, 1.0, 0.0]), &[1.0, 0.0, 2.0], 1e-15));
    }

    #[test]
    fn coframe_values() {
        let cof = named_coframe(Model::HStar);
        let f = named_frame(Model::HStar);
        let p = [1.0, 0.0, 0.0];
        assert!((cof[2].apply(&p, &f[2].eval(&p)) - 1.0).abs() < 1e-15);
        let q = [0.4, 1.3, -0.2];
        assert!(cof[1].apply(&q, &f[0].eval(&q)).abs() < 1e-15);
        let cone = named_coframe(Model::Cone);
        let cf = named_frame(Model::Cone);
        let r = [0.4, 1.3, -0.2, 0.8];
        assert!((cone[3].apply(&r, &cf[3].eval(&r)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn chart_point_validation() {
        assert!(ChartPoint::planar(0.0, 0.0, 1.0).is_err());
        assert!(ChartPoint::cone(1.0, 0.0, 1.0, 0.0).is_err());
        assert!(metric_eval(Model::Cone, &ChartPoint::planar(1.0, 0.0, 0.0).unwrap()).is_err());
        let p = ChartPoint::cone(1.0, 2.0, 3.0, 4.0).unwrap();
        assert_eq!(ChartPoint::from_coords(&p.coords()).unwrap(), p);
    }

    #[test]
    fn frames_are_orthonormal() {
        for model in Model::ALL {
            let p = match model {
                Model::Cone => vec![0.6, -1.1, 0.4, 1.7],
                _ => vec![0.6, -1.1, 0.4],
            };
            let f = frame_matrix(model, &p);
            let g = metric_at(model, &p);
            let gram = f.transpose() * &g * &f;
            let id = DMatrix::<f64>::identity(model.dim(), model.dim());
            assert!((gram - id).amax() < 1e-10, "{model:?}");
            assert!((&g - g.transpose()).amax() == 0.0);
            assert!(g.clone().cholesky().is_some());
        }
    }
}
