//! Connection and curvature from the coordinate metric by finite differences,
//! independent of the structure-constant path.

use nalgebra::{DMatrix, DVector};

use super::connection::FrameTables;
use super::fields::{directional_derivative, step_at};
use super::{frame_matrix, metric_at, named_frame, ChartPoint, Model};
use crate::error::Result;

/// Step multiplier for second derivatives, which lose `eps/h²` to roundoff.
const SECOND_DERIVATIVE_FACTOR: f64 = 10.0;

fn offset(p: &[f64], moves: &[(usize, f64)]) -> Vec<f64> {
    let mut q = p.to_vec();
    for &(i, d) in moves {
        q[i] += d;
    }
    q
}

/// `∂ᵢg` for each coordinate `i`.
fn metric_first_derivatives(model: Model, p: &[f64], h: f64) -> Vec<DMatrix<f64>> {
    let delta = step_at(p, h);
    (0..p.len())
        .map(|i| {
            (metric_at(model, &offset(p, &[(i, delta)])) - metric_at(model, &offset(p, &[(i, -delta)])))
                / (2.0 * delta)
        })
        .collect()
}

/// `∂ᵢ∂ⱼg` for each pair of coordinates, Richardson-extrapolated from the
/// mixed central stencil at steps `δ` and `2δ`.
fn metric_second_derivatives(model: Model, p: &[f64], h: f64) -> Vec<Vec<DMatrix<f64>>> {
    let delta = step_at(p, SECOND_DERIVATIVE_FACTOR * h);
    let n = p.len();
    let g = |moves: &[(usize, f64)]| metric_at(model, &offset(p, moves));
    let mixed = |i: usize, j: usize, d: f64| {
        (g(&[(i, d), (j, d)]) - g(&[(i, d), (j, -d)]) - g(&[(i, -d), (j, d)]) + g(&[(i, -d), (j, -d)]))
            / (4.0 * d * d)
    };
    (0..n)
        .map(|i| (0..n).map(|j| (mixed(i, j, delta) * 4.0 - mixed(i, j, 2.0 * delta)) / 3.0).collect())
        .collect()
}

/// Frame connection and curvature of `model` at `p` from coordinate metric
/// derivatives, using the same curvature sign convention as the exact path.
#[allow(clippy::needless_range_loop)]
pub fn fd_curvature_oracle(model: Model, p: &ChartPoint, h: f64) -> Result<FrameTables> {
    model.check_point(p)?;
    let p = p.coords();
    let n = p.len();
    let g = metric_at(model, &p);
    let ginv = g.clone().try_inverse().expect("metric is positive definite");
    let dg = metric_first_derivatives(model, &p, h);
    let ddg = metric_second_derivatives(model, &p, h);
    let dginv: Vec<DMatrix<f64>> = dg.iter().map(|d| -&ginv * d * &ginv).collect();

    // lowered[d][b][c] = ½(∂_b g_dc + ∂_c g_db - ∂_d g_bc)
    let lowered = |d: usize, b: usize, c: usize| 0.5 * (dg[b][(d, c)] + dg[c][(d, b)] - dg[d][(b, c)]);
    let lowered_deriv = |e: usize, d: usize, b: usize, c: usize| {
        0.5 * (ddg[e][b][(d, c)] + ddg[e][c][(d, b)] - ddg[e][d][(b, c)])
    };

    // christoffel[a][b][c] = Γ^a_{bc}
    let mut christoffel = vec![vec![vec![0.0; n]; n]; n];
    // christoffel_deriv[e][a][b][c] = ∂_e Γ^a_{bc}
    let mut christoffel_deriv = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                christoffel[a][b][c] = (0..n).map(|d| ginv[(a, d)] * lowered(d, b, c)).sum();
                for e in 0..n {
                    christoffel_deriv[e][a][b][c] = (0..n)
                        .map(|d| dginv[e][(a, d)] * lowered(d, b, c) + ginv[(a, d)] * lowered_deriv(e, d, b, c))
                        .sum();
                }
            }
        }
    }

    // riemann[a][b][c][d] = R^a_{bcd}, with ∇_c∇_d∂_b - ∇_d∇_c∂_b = R^a_{bcd}∂_a
    let mut riemann = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut v = christoffel_deriv[c][a][d][b] - christoffel_deriv[d][a][c][b];
                    for e in 0..n {
                        v += christoffel[a][c][e] * christoffel[e][d][b] - christoffel[a][d][e] * christoffel[e][c][b];
                    }
                    riemann[a][b][c][d] = v;
                }
            }
        }
    }

    let frame = named_frame(model);
    let f = frame_matrix(model, &p);
    let finv = f.clone().try_inverse().expect("frame is a basis on the chart");
    let gamma_apply = |u: &DVector<f64>, v: &DVector<f64>| {
        DVector::from_fn(n, |a, _| {
            let mut s = 0.0;
            for b in 0..n {
                for c in 0..n {
                    s += christoffel[a][b][c] * u[b] * v[c];
                }
            }
            s
        })
    };

    let mut connection = vec![vec![vec![0.0; n]; n]; n];
    for i in 0..n {
        let ei = f.column(i).into_owned();
        for j in 0..n {
            let ej = f.column(j).into_owned();
            let derivative = directional_derivative(|q| frame[j].eval(q), &p, &ei, h);
            let coeffs = &finv * (derivative + gamma_apply(&ei, &ej));
            connection[i][j] = coeffs.iter().copied().collect();
        }
    }

    let mut curvature = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = DVector::from_fn(n, |a, _| {
                    let mut s = 0.0;
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                s -= riemann[a][b][c][d] * f[(c, i)] * f[(d, j)] * f[(b, k)];
                            }
                        }
                    }
                    s
                });
                curvature[i][j][k] = (&finv * v).iter().copied().collect();
            }
        }
    }

    Ok(FrameTables {
        dim: n,
        names: model.frame_names().iter().map(|s| s.to_string()).collect(),
        connection,
        curvature,
    })
}
