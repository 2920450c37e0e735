//! Levi-Civita connection and curvature of an orthonormal frame, computed
//! exactly in rational arithmetic from measured structure constants.
//!
//! The frames handled here satisfy `[Eᵢ, Eⱼ] = s Σₖ cᵢⱼₖ Eₖ` with rational
//! constants `cᵢⱼₖ` and a scale function `s` whose derivatives along the frame
//! are `Eₘ(s) = dₘ s²`. On the two groups `s = 1`; on the cone `s = 1/r`.
//! Then `∇_{Eᵢ}Eⱼ = s Σₖ Γᵢⱼₖ Eₖ` and `R(Eᵢ,Eⱼ)Eₖ = s² Σₗ Rᵢⱼₖₗ Eₗ` with
//! rational tables `Γ` and `R`.

use std::sync::OnceLock;

use nalgebra::DVector;
use num_rational::Rational64;

use super::{frame_matrix, named_frame, ChartPoint, Model};
use crate::error::{GeomError, Result};
use crate::frames::fields::{directional_derivative_scalar, lie_bracket};

const MAX_DENOMINATOR: i64 = 64;
const SNAP_TOL: f64 = 1e-6;
const CONSTANCY_TOL: f64 = 1e-8;
const CONSTANCY_POINTS: usize = 20;

fn snap(v: f64) -> Option<Rational64> {
    (1..=MAX_DENOMINATOR).find_map(|q| {
        let n = (v * q as f64).round();
        ((n / q as f64 - v).abs() < SNAP_TOL).then(|| Rational64::new(n as i64, q))
    })
}

fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Rational structure data of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    pub model: Model,
    pub dim: usize,
    /// `c[i][j][k]`: `[Eᵢ, Eⱼ] = s Σₖ c[i][j][k] Eₖ`.
    pub c: Vec<Vec<Vec<Rational64>>>,
    /// `d[m]`: `Eₘ(s) = d[m] s²`.
    pub d: Vec<Rational64>,
    /// Largest deviation of the measured, rescaled coefficients from the
    /// snapped rationals over all sample points.
    pub variation: f64,
}

fn measure_at(model: Model, p: &[f64], h: f64) -> (Vec<f64>, Vec<f64>) {
    let frame = named_frame(model);
    let n = model.dim();
    let inv = frame_matrix(model, p)
        .try_inverse()
        .expect("frame is a basis on the chart");
    let s = model.structure_scale(p);
    let mut c = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let coeffs = &inv * lie_bracket(&frame[i], &frame[j], p, h) / s;
            c.extend(coeffs.iter().copied());
        }
    }
    let d = frame
        .iter()
        .map(|e| directional_derivative_scalar(|q| model.structure_scale(q), p, &e.eval(p), h) / (s * s))
        .collect();
    (c, d)
}

/// Measures the rescaled structure constants at the base point, snaps them to
/// rationals and checks that they are the same at sample points.
pub fn measure_structure(model: Model, h: f64) -> Result<StructureConstants> {
    let n = model.dim();
    let (c0, d0) = measure_at(model, &model.base_point().coords(), h);
    let snap_all = |v: &[f64]| -> Result<Vec<Rational64>> {
        v.iter()
            .map(|&x| snap(x).ok_or(GeomError::NonConstantStructure { variation: x }))
            .collect()
    };
    let c_rat = snap_all(&c0)?;
    let d_rat = snap_all(&d0)?;
    let c_f: Vec<f64> = c_rat.iter().map(|&r| to_f64(r)).collect();
    let d_f: Vec<f64> = d_rat.iter().map(|&r| to_f64(r)).collect();

    let deviation = |c: &[f64], d: &[f64]| {
        c.iter()
            .zip(&c_f)
            .chain(d.iter().zip(&d_f))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let mut variation = deviation(&c0, &d0);
    for p in crate::sampling::chart_points(model, 0x5eed, CONSTANCY_POINTS) {
        let (c, d) = measure_at(model, &p.coords(), h);
        variation = variation.max(deviation(&c, &d));
    }
    if variation > CONSTANCY_TOL {
        return Err(GeomError::NonConstantStructure { variation });
    }

    let c = (0..n)
        .map(|i| (0..n).map(|j| c_rat[(i * n + j) * n..(i * n + j + 1) * n].to_vec()).collect())
        .collect();
    Ok(StructureConstants {
        model,
        dim: n,
        c,
        d: d_rat,
        variation,
    })
}

/// Rational connection and curvature tables.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactTables {
    pub structure: StructureConstants,
    /// `gamma[i][j][k]`: `∇_{Eᵢ}Eⱼ = s Σₖ gamma[i][j][k] Eₖ`.
    pub gamma: Vec<Vec<Vec<Rational64>>>,
    /// `riemann[i][j][k][l]`: `R(Eᵢ,Eⱼ)Eₖ = s² Σₗ riemann[i][j][k][l] Eₗ`.
    pub riemann: Vec<Vec<Vec<Vec<Rational64>>>>,
}

/// Connection and curvature tables from structure constants via the Koszul
/// formula for an orthonormal frame.
pub fn koszul_connection(model: Model, h: f64) -> Result<ExactTables> {
    Ok(ExactTables::from_structure(measure_structure(model, h)?))
}

impl ExactTables {
    pub fn from_structure(structure: StructureConstants) -> Self {
        let n = structure.dim;
        let c = &structure.c;
        let d = &structure.d;
        let half = Rational64::new(1, 2);
        let gamma: Vec<Vec<Vec<Rational64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| half * (c[i][j][k] - c[j][k][i] + c[k][i][j])).collect())
                    .collect()
            })
            .collect();
        let riemann = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                (0..n)
                                    .map(|l| {
                                        let mut v = d[j] * gamma[i][k][l] - d[i] * gamma[j][k][l];
                                        for m in 0..n {
                                            v += gamma[i][k][m] * gamma[j][m][l]
                                                - gamma[j][k][m] * gamma[i][m][l]
                                                + c[i][j][m] * gamma[m][k][l];
                                        }
                                        v
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ExactTables {
            structure,
            gamma,
            riemann,
        }
    }

    pub fn dim(&self) -> usize {
        self.structure.dim
    }

    fn indices3(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    /// `g(∇_{Eᵢ}Eⱼ, Eₖ) + g(Eⱼ, ∇_{Eᵢ}Eₖ) = 0` for all indices.
    pub fn is_metric_compatible(&self) -> bool {
        let g = &self.gamma;
        self.indices3().all(|(i, j, k)| g[i][j][k] + g[i][k][j] == 0.into())
    }

    /// `∇_{Eᵢ}Eⱼ - ∇_{Eⱼ}Eᵢ = [Eᵢ, Eⱼ]` for all indices.
    pub fn is_torsion_free(&self) -> bool {
        let (g, c) = (&self.gamma, &self.structure.c);
        self.indices3().all(|(i, j, k)| g[i][j][k] - g[j][i][k] == c[i][j][k])
    }

    /// `R(Eᵢ,Eⱼ)Eₖ + R(Eⱼ,Eₖ)Eᵢ + R(Eₖ,Eᵢ)Eⱼ = 0` for all indices.
    pub fn satisfies_first_bianchi(&self) -> bool {
        let r = &self.riemann;
        let n = self.dim();
        self.indices3().all(|(i, j, k)| {
            (0..n).all(|l| r[i][j][k][l] + r[j][k][i][l] + r[k][i][j][l] == 0.into())
        })
    }

    /// `R(Eᵢ,Eⱼ) = -R(Eⱼ,Eᵢ)` and `g(R(Eᵢ,Eⱼ)Eₖ, Eₗ) = -g(R(Eᵢ,Eⱼ)Eₗ, Eₖ)`.
    pub fn has_curvature_symmetries(&self) -> bool {
        let r = &self.riemann;
        let n = self.dim();
        self.indices3().all(|(i, j, k)| {
            (0..n).all(|l| r[i][j][k][l] == -r[j][i][k][l] && r[i][j][k][l] == -r[i][j][l][k])
        })
    }

    /// Numeric tables at a point, scaled by `s(p)`.
    pub fn at(&self, p: &ChartPoint) -> Result<FrameTables> {
        self.structure.model.check_point(p)?;
        Ok(self.at_scale(self.structure.model.structure_scale(&p.coords())))
    }

    pub fn at_scale(&self, s: f64) -> FrameTables {
        let n = self.dim();
        let model = self.structure.model;
        let connection = self
            .gamma
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|&x| s * to_f64(x)).collect()).collect())
            .collect();
        let curvature = self
            .riemann
            .iter()
            .map(|a| {
                a.iter()
                    .map(|b| b.iter().map(|v| v.iter().map(|&x| s * s * to_f64(x)).collect()).collect())
                    .collect()
            })
            .collect();
        FrameTables {
            dim: n,
            names: model.frame_names().iter().map(|s| s.to_string()).collect(),
            connection,
            curvature,
        }
    }
}

/// Connection and curvature of an orthonormal frame at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameTables {
    pub dim: usize,
    pub names: Vec<String>,
    /// `connection[i][j][k]`: `∇_{Eᵢ}Eⱼ = Σₖ connection[i][j][k] Eₖ`.
    pub connection: Vec<Vec<Vec<f64>>>,
    /// `curvature[i][j][k][l]`: `R(Eᵢ,Eⱼ)Eₖ = Σₗ curvature[i][j][k][l] Eₗ`.
    pub curvature: Vec<Vec<Vec<Vec<f64>>>>,
}

impl FrameTables {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn nabla(&self, i: usize, j: usize) -> DVector<f64> {
        DVector::from_column_slice(&self.connection[i][j])
    }

    pub fn curvature(&self, i: usize, j: usize, k: usize) -> DVector<f64> {
        DVector::from_column_slice(&self.curvature[i][j][k])
    }

    /// `∇_U V` for frame combinations with constant coefficients.
    pub fn nabla_vec(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        let n = self.dim;
        let mut out = DVector::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out += self.nabla(i, j) * (u[i] * v[j]);
            }
        }
        out
    }

    /// `R(U,V)W` for frame combinations.
    pub fn curvature_vec(&self, u: &DVector<f64>, v: &DVector<f64>, w: &DVector<f64>) -> DVector<f64> {
        let n = self.dim;
        let mut out = DVector::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let uv = u[i] * v[j];
                if uv == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out += self.curvature(i, j, k) * (uv * w[k]);
                }
            }
        }
        out
    }

    /// `K(Eᵢ,Eⱼ) = g(R(Eᵢ,Eⱼ)Eᵢ, Eⱼ)`.
    pub fn sectional(&self, i: usize, j: usize) -> f64 {
        self.curvature[i][j][i][j]
    }

    /// `Ric(Eᵢ) = (1/(n-1)) Σ_{j≠i} K(Eᵢ,Eⱼ)`.
    pub fn ricci(&self) -> Vec<f64> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i).map(|j| self.sectional(i, j)).sum::<f64>() / (n - 1) as f64)
            .collect()
    }

    /// `(1/n) Σᵢ Ric(Eᵢ)`.
    pub fn scalar(&self) -> f64 {
        self.ricci().iter().sum::<f64>() / self.dim as f64
    }

    /// Largest entry difference in the connection and curvature tables.
    pub fn max_difference(&self, other: &FrameTables) -> f64 {
        let conn = self
            .connection
            .iter()
            .flatten()
            .flatten()
            .zip(other.connection.iter().flatten().flatten());
        let curv = self
            .curvature
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .zip(other.curvature.iter().flatten().flatten().flatten());
        conn.chain(curv).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Largest curvature entry difference.
    pub fn max_curvature_difference(&self, other: &FrameTables) -> f64 {
        self.curvature
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .zip(other.curvature.iter().flatten().flatten().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn cache(model: Model) -> &'static OnceLock<Result<ExactTables>> {
    static HSTAR: OnceLock<Result<ExactTables>> = OnceLock::new();
    static CONE: OnceLock<Result<ExactTables>> = OnceLock::new();
    static HEIS: OnceLock<Result<ExactTables>> = OnceLock::new();
    match model {
        Model::HStar => &HSTAR,
        Model::Cone => &CONE,
        Model::Heisenberg => &HEIS,
    }
}

/// Exact tables of `model`, computed once with the default step.
pub fn exact_tables(model: Model) -> Result<&'static ExactTables> {
    cache(model)
        .get_or_init(|| koszul_connection(model, super::DEFAULT_FD_STEP))
        .as_ref()
        .map_err(Clone::clone)
}

/// Connection and curvature of `model`'s frame at `p` from the exact path.
pub fn curvature_table(model: Model, p: &ChartPoint) -> Result<FrameTables> {
    exact_tables(model)?.at(p)
}
