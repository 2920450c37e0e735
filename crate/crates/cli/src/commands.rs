//! The three subcommands, each returning a report.

use nalgebra::DVector;

use hstar_core::config::{
    b0, b0_inv, b1, b1_inv, cone_w_field, cone_z_field, cr_equivalence_residual, crv_residual, f_inv, f_map,
    f_map_pushforward, g_inv, g_map, levi_values, variety_from_quadruple, variety_inverse, ConePointPrime,
    LeviPoint,
};
use hstar_core::frames::{
    closedness_residual, curvature_table, exactness_residual, fd_curvature_oracle, killing_residual_in,
    koranyi_isometry_residual, named_frame, sasaki_identity_residual_in, ChartPoint, FrameTables, Model,
    VectorField,
};
use hstar_core::groups::{hstar_mul, koranyi, koranyi_inv, psi_embed, psi_inv, psi_iso, HStarElement};
use hstar_core::hyperbolic::{cartan, cross_ratio_triple, Quadruple};
use hstar_core::moebius::{dilation_rotation, heis_translation, inversion, normalize_quadruple};
use hstar_core::parallel::map_indexed;
use hstar_core::sampling::{chart_point, cone_point, frame_coefficients, group_element, normalized_quadruple, quadruple, rng_for, variety_point};
use hstar_core::{angle_distance, Complex64, GeomError};

use crate::document::QuadrupleDocument;
use crate::report::*;
use crate::CliError;

/// Gates for rows computed by finite differences; `--tol` can only loosen them.
const FD_CURVATURE_GATE: f64 = 1e-4;
const FD_IDENTITY_GATE: f64 = 1e-5;
const FD_FORM_GATE: f64 = 1e-6;
const WITNESS_FLOOR: f64 = 0.01;
/// Steps beyond this lose the headroom of the FD gates.
const FD_STEP_WARNING: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
    pub fd_step: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            tol: 1e-8,
            seed: 0,
            samples: 100,
            fd_step: 1e-5,
        }
    }
}

impl Options {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Config(format!("--tol must be positive and finite, got {}", self.tol)));
        }
        if !(self.fd_step.is_finite() && self.fd_step > 0.0 && self.fd_step < 1.0) {
            return Err(CliError::Config(format!("--fd-step must lie in (0, 1), got {}", self.fd_step)));
        }
        Ok(())
    }
}

fn describe_points(doc: &QuadrupleDocument) -> String {
    doc.points
        .iter()
        .enumerate()
        .map(|(i, p)| format!("p{}={}", i + 1, serde_json::to_string(p).unwrap_or_default()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn domain(doc: &QuadrupleDocument) -> impl Fn(GeomError) -> CliError + '_ {
    move |e| CliError::Domain {
        name: e.name(),
        message: e.to_string(),
        points: describe_points(doc),
    }
}

/// A fixed isometry used to spot-check invariance of the normal form.
fn probe_isometry() -> hstar_core::moebius::GroupElement {
    heis_translation(Complex64::new(0.3, -0.2), 0.7)
        * dilation_rotation(Complex64::from_polar(1.3, 0.4)).expect("nonzero scale")
        * inversion()
}

pub fn invariants(doc: &QuadrupleDocument, tol: f64) -> Result<InvariantReport, CliError> {
    let q = doc.quadruple()?;
    let err = domain(doc);
    let a = cartan(&q.triple(0, 1, 2));
    let cartan_values = CartanValues {
        p123: sig12(a),
        p124: sig12(cartan(&q.triple(0, 1, 3))),
        p134: sig12(cartan(&q.triple(0, 2, 3))),
        p234: sig12(cartan(&q.triple(1, 2, 3))),
    };
    let x = cross_ratio_triple(&q).map_err(&err)?;
    let (r1, r2) = x.identity_residuals();
    let (n, _) = normalize_quadruple(&q).map_err(&err)?;
    let moved: Quadruple = probe_isometry().apply_quadruple(&q);
    let (n_moved, _) = normalize_quadruple(&moved).map_err(&err)?;
    let cone = b0(&n);
    let variety = variety_from_quadruple(&q).map_err(&err)?;
    let (zeta, w) = b1(&n);
    let residuals = Residuals {
        modulus_identity: Check::below(r1, tol),
        real_part_identity: Check::below(r2, tol),
        variety_equation: Check::below(crv_residual(x.x1, x.x2, a), tol),
        normal_form_angle: Check::below((a - n.a).abs(), tol),
        normal_form_invariance: Check::below(n_moved.distance(&n), tol),
    };
    let checks = [
        residuals.modulus_identity,
        residuals.real_part_identity,
        residuals.variety_equation,
        residuals.normal_form_angle,
        residuals.normal_form_invariance,
    ];
    Ok(InvariantReport {
        label: doc.label.clone(),
        tolerance: tol,
        pass: checks.iter().all(|c| c.pass),
        cartan: cartan_values,
        cross_ratios: CrossRatios {
            x1: complex(x.x1),
            x2: complex(x.x2),
            x3: complex(x.x3),
        },
        residuals,
        normal_form: NormalForm {
            a: sig12(n.a),
            z: complex(n.z),
            t: sig12(n.t),
        },
        cone_point: ConeCoords {
            z: complex(cone.z),
            t: sig12(cone.t),
            r: sig12(cone.r),
        },
        variety_point: VarietyCoords {
            w1: complex(variety.w1),
            w2: complex(variety.w2),
            a: sig12(variety.a),
        },
        b1_point: ComplexPair {
            zeta: complex(zeta),
            w: complex(w),
        },
    })
}

/// `(i, j, k, R(Eᵢ,Eⱼ)Eₖ, label)` as printed for the affine-rotational group.
const PRINTED_HSTAR: [(usize, usize, usize, [f64; 3], &str); 9] = [
    (0, 1, 0, [0.0, -7.0, 0.0], "R(X,Y)X = -7Y"),
    (0, 2, 0, [0.0, 0.0, 1.0], "R(X,T)X = T"),
    (1, 2, 0, [0.0, 0.0, 0.0], "R(Y,T)X = 0"),
    (0, 1, 1, [1.0, 0.0, 0.0], "R(X,Y)Y = X"),
    (0, 2, 1, [0.0, 0.0, 0.0], "R(X,T)Y = 0"),
    (1, 2, 1, [0.0, 0.0, 1.0], "R(Y,T)Y = T"),
    (0, 1, 2, [4.0, 0.0, 0.0], "R(X,Y)T = 4X"),
    (0, 2, 2, [-1.0, 0.0, 0.0], "R(X,T)T = -X"),
    (1, 2, 2, [0.0, -1.0, 0.0], "R(Y,T)T = -Y"),
];

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn worst<T>(items: &[T], residual: impl Fn(&T) -> f64) -> Option<(&T, f64)> {
    items
        .iter()
        .map(|t| (t, residual(t)))
        .fold(None, |best, (t, r)| match best {
            Some((_, b)) if r <= b => best,
            _ => Some((t, r)),
        })
}

/// One exact row at `exact` and one fd row at the worst sample.
fn value_rows(
    rows: &mut Vec<Row>,
    group: &str,
    name: &str,
    expected: &[f64],
    exact: Vec<f64>,
    fd: &[Vec<f64>],
    opts: &Options,
) {
    rows.push(Row::new(group, &format!("{name} (exact)"), expected.to_vec(), exact.clone(), max_abs_diff(&exact, expected), opts.tol));
    let (computed, residual) = worst(fd, |v| max_abs_diff(v, expected))
        .map(|(v, r)| (v.clone(), r))
        .unwrap_or((Vec::new(), 0.0));
    rows.push(Row::new(
        group,
        &format!("{name} (fd, worst of {})", fd.len()),
        expected.to_vec(),
        computed,
        residual,
        opts.tol.max(FD_CURVATURE_GATE),
    ));
}

fn oracle_tables(model: Model, points: &[ChartPoint], h: f64) -> Vec<FrameTables> {
    map_indexed(points.len(), |i| fd_curvature_oracle(model, &points[i], h).expect("sample points lie on the chart"))
}

fn sample_points(model: Model, opts: &Options, salt: u64) -> Vec<ChartPoint> {
    (0..opts.samples)
        .map(|i| chart_point(model, &mut rng_for(opts.seed ^ salt, i as u64)))
        .collect()
}

/// Printed sectional, Ricci and scalar curvatures of one model.
struct Summary<'a> {
    planes: &'a [(usize, usize, f64)],
    ricci: &'a [f64],
    scalar: f64,
}

fn summary_rows(rows: &mut Vec<Row>, group: &str, exact: &FrameTables, fd: &[FrameTables], expected: Summary, opts: &Options) {
    let Summary { planes, ricci, scalar } = expected;
    for &(i, j, k) in planes {
        let name = format!("K({},{})", exact.names[i], exact.names[j]);
        let values: Vec<Vec<f64>> = fd.iter().map(|t| vec![t.sectional(i, j)]).collect();
        value_rows(rows, group, &name, &[k], vec![exact.sectional(i, j)], &values, opts);
    }
    for (i, r) in ricci.iter().enumerate() {
        let name = format!("Ric({})", exact.names[i]);
        let values: Vec<Vec<f64>> = fd.iter().map(|t| vec![t.ricci()[i]]).collect();
        value_rows(rows, group, &name, &[*r], vec![exact.ricci()[i]], &values, opts);
    }
    let values: Vec<Vec<f64>> = fd.iter().map(|t| vec![t.scalar()]).collect();
    value_rows(rows, group, "scalar", &[scalar], vec![exact.scalar()], &values, opts);
}

fn hstar_rows(rows: &mut Vec<Row>, opts: &Options) {
    let group = "affine-rotational group";
    let model = Model::HStar;
    let exact = curvature_table(model, &model.base_point()).expect("base point");
    let fd = oracle_tables(model, &sample_points(model, opts, 0x11), opts.fd_step);
    for (i, j, k, expected, label) in PRINTED_HSTAR {
        let values: Vec<Vec<f64>> = fd.iter().map(|t| t.curvature[i][j][k].clone()).collect();
        value_rows(rows, group, label, &expected, exact.curvature[i][j][k].clone(), &values, opts);
    }
    summary_rows(
        rows,
        group,
        &exact,
        &fd,
        Summary {
            planes: &[(0, 1, -7.0), (0, 2, 1.0), (1, 2, 1.0)],
            ricci: &[-3.0, -3.0, 1.0],
            scalar: -5.0 / 3.0,
        },
        opts,
    );
}

fn cone_rows(rows: &mut Vec<Row>, opts: &Options) {
    for r in [0.5, 1.0, 2.0] {
        let group = format!("cone r={r}");
        let s = 1.0 / (r * r);
        let points: Vec<ChartPoint> = sample_points(Model::HStar, opts, 0x22)
            .into_iter()
            .map(|p| ChartPoint::cone(p.x, p.y, p.t, r).expect("cone sample"))
            .collect();
        let base = Model::Cone.base_point();
        let exact = curvature_table(Model::Cone, &ChartPoint::cone(base.x, base.y, base.t, r).expect("cone point")).expect("cone point");
        let fd = oracle_tables(Model::Cone, &points, opts.fd_step);
        summary_rows(
            rows,
            &group,
            &exact,
            &fd,
            Summary {
                planes: &[(0, 1, -8.0 * s), (2, 3, -s), (0, 2, 0.0), (0, 3, 0.0), (1, 2, 0.0), (1, 3, 0.0)],
                ricci: &[-8.0 * s / 3.0, -8.0 * s / 3.0, -s / 3.0, -s / 3.0],
                scalar: -1.5 * s,
            },
            opts,
        );
    }
}

fn coefficient_pairs(dim: usize, n: usize, seed: u64) -> Vec<(DVector<f64>, DVector<f64>)> {
    (0..n)
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            (
                DVector::from_vec(frame_coefficients(&mut rng, dim)),
                DVector::from_vec(frame_coefficients(&mut rng, dim)),
            )
        })
        .collect()
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |m, v| if v.is_nan() { f64::NAN } else { m.max(v) })
}

fn sasakian_rows(rows: &mut Vec<Row>, opts: &Options) {
    let model = Model::HStar;
    let reeb = model.reeb_index();
    let points = sample_points(model, opts, 0x33);
    let pairs = coefficient_pairs(3, opts.samples, opts.seed ^ 0x34);
    let exact: Vec<FrameTables> = points.iter().map(|p| curvature_table(model, p).expect("chart point")).collect();
    let fd = oracle_tables(model, &points, opts.fd_step);
    let over = |tables: &[FrameTables], f: fn(&FrameTables, usize, &DVector<f64>, &DVector<f64>) -> f64| {
        max_of(tables.iter().zip(&pairs).map(|(t, (u, v))| f(t, reeb, u, v)))
    };
    let group = "contact structure";
    let fd_tol = opts.tol.max(FD_IDENTITY_GATE);
    rows.push(Row::residual(group, "Killing residual of T (exact)", over(&exact, killing_residual_in), opts.tol));
    rows.push(Row::residual(group, "Killing residual of T (fd)", over(&fd, killing_residual_in), fd_tol));
    rows.push(Row::residual(group, "Sasakian identity residual (exact)", over(&exact, sasaki_identity_residual_in), opts.tol));
    rows.push(Row::residual(group, "Sasakian identity residual (fd)", over(&fd, sasaki_identity_residual_in), fd_tol));
}

fn heisenberg_rows(rows: &mut Vec<Row>, opts: &Options) {
    let model = Model::Heisenberg;
    let reeb = model.reeb_index();
    let t = curvature_table(model, &model.base_point()).expect("base point");
    let basis = |i: usize| DVector::from_fn(3, |k, _| if k == i { 1.0 } else { 0.0 });
    let on_frame = max_of((0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| {
        sasaki_identity_residual_in(&t, reeb, &basis(i), &basis(j))
    }));
    let pairs = coefficient_pairs(3, opts.samples, opts.seed ^ 0x44);
    let random = max_of(pairs.iter().map(|(u, v)| sasaki_identity_residual_in(&t, reeb, u, v)));
    let group = "Heisenberg fixture";
    rows.push(Row::residual(group, "Sasakian identity residual on frame vectors (exact)", on_frame, opts.tol));
    rows.push(Row::residual(group, "Sasakian identity residual on random combinations (exact)", random, opts.tol));
}

fn form_rows(rows: &mut Vec<Row>, opts: &Options) {
    let frame = named_frame(Model::Cone);
    let n = opts.samples;
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| VectorField::combination(&frame_coefficients(rng, 4), &frame);
    let closed = max_of(map_indexed(n, |i| {
        let mut rng = rng_for(opts.seed ^ 0x55, i as u64);
        let p = chart_point(Model::Cone, &mut rng);
        let (u, v, w) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        closedness_residual(&p, &u, &v, &w, opts.fd_step).expect("cone point")
    }));
    let exact = max_of(map_indexed(n, |i| {
        let mut rng = rng_for(opts.seed ^ 0x56, i as u64);
        let p = chart_point(Model::Cone, &mut rng);
        let (u, v) = (draw(&mut rng), draw(&mut rng));
        exactness_residual(&p, &u, &v, opts.fd_step).expect("cone point")
    }));
    let kor = max_of(map_indexed(n, |i| {
        let p = chart_point(Model::HStar, &mut rng_for(opts.seed ^ 0x57, i as u64));
        koranyi_isometry_residual(&p, opts.fd_step).expect("chart point")
    }));
    let tol = opts.tol.max(FD_FORM_GATE);
    rows.push(Row::residual("cone forms", "closedness of the fundamental form (fd)", closed, tol));
    rows.push(Row::residual("cone forms", "fundamental form = d(r^2 w/2) (fd)", exact, tol));
    rows.push(Row::residual("Koranyi map", "pullback metric residual (fd)", kor, tol));
}

fn levi_rows(rows: &mut Vec<Row>, opts: &Options) {
    let n = opts.samples;
    let rho = map_indexed(n, |i| {
        let p = chart_point(Model::HStar, &mut rng_for(opts.seed ^ 0x66, i as u64));
        let (z1, z2) = psi_embed(&HStarElement::new(Complex64::new(p.x, p.y), p.t).expect("nonzero z"));
        levi_values(&LeviPoint::RhoStar { z1, z2 }).expect("embedded point")
    });
    let var = map_indexed(n, |i| {
        let v = variety_point(&mut rng_for(opts.seed ^ 0x67, i as u64));
        (v.a, levi_values(&LeviPoint::Variety(v)).expect("variety point"))
    });
    let fd_tol = opts.tol.max(FD_IDENTITY_GATE);
    let rho_exact = worst(&rho, |l| (l.hessian - 1.0).abs().max((l.closed_form - 1.0).abs()));
    let rho_fd = worst(&rho, |l| (l.finite_difference - 1.0).abs());
    let levi = |w: Option<(&hstar_core::config::LeviValues, f64)>, pick: fn(&hstar_core::config::LeviValues) -> f64| {
        w.map(|(l, r)| (vec![pick(l)], r)).unwrap_or((Vec::new(), 0.0))
    };
    let (c, r) = levi(rho_exact, |l| l.hessian);
    rows.push(Row::new("Levi form", "rho* Levi value (analytic Hessian)", vec![1.0], c, r, opts.tol));
    let (c, r) = levi(rho_fd, |l| l.finite_difference);
    rows.push(Row::new("Levi form", "rho* Levi value (fd Hessian)", vec![1.0], c, r, fd_tol));
    let expected = |a: f64| 4.0 * a.cos().powi(2);
    let var_exact = worst(&var, |(a, l)| (l.hessian - expected(*a)).abs().max((l.closed_form - expected(*a)).abs()));
    let var_fd = worst(&var, |(a, l)| (l.finite_difference - expected(*a)).abs());
    for (label, w, fd, tol) in [("analytic Hessian", var_exact, false, opts.tol), ("fd Hessian", var_fd, true, fd_tol)] {
        let (e, c, r) = w
            .map(|((a, l), r)| (vec![expected(*a)], vec![if fd { l.finite_difference } else { l.hessian }], r))
            .unwrap_or((Vec::new(), Vec::new(), 0.0));
        rows.push(Row::new("Levi form", &format!("variety Levi value 4cos^2(a) ({label})"), e, c, r, tol));
    }
}

fn pushforward_rows(rows: &mut Vec<Row>, opts: &Options) {
    let vals = map_indexed(opts.samples, |i| {
        let v = variety_point(&mut rng_for(opts.seed ^ 0x77, i as u64));
        let c = g_inv(&v).expect("variety point");
        [
            cr_equivalence_residual(&v).expect("variety point"),
            f_map_pushforward(&cone_z_field(&c)).antiholomorphic_norm(),
        ]
    });
    let tol = opts.tol.max(FD_IDENTITY_GATE);
    rows.push(Row::residual("CR maps", "|G_*(Z) - kZ|", max_of(vals.iter().map(|v| v[0])), tol));
    rows.push(Row::residual("CR maps", "(0,1) part of F_*(Z)", max_of(vals.iter().map(|v| v[1])), tol));
    let fixed = [
        ConePointPrime::new(Complex64::new(1.0, 0.0), 1.0, 1.0),
        ConePointPrime::new(Complex64::new(0.5, -1.0), 0.3, 2.0),
        ConePointPrime::new(Complex64::new(-1.5, 0.2), -1.0, 0.7),
        ConePointPrime::new(Complex64::new(0.0, 2.0), 1.5, 1.3),
    ];
    let least = fixed
        .iter()
        .map(|c| f_map_pushforward(&cone_w_field(c.as_ref().expect("fixed cone point"))).antiholomorphic_norm())
        .fold(f64::INFINITY, f64::min);
    rows.push(Row::with_relation(
        "CR maps",
        "(0,1) part of F_*(W), least over fixed points",
        Vec::new(),
        vec![least],
        least,
        Relation::Above,
        WITNESS_FLOOR,
    ));
}

pub fn verify_geometry(opts: &Options) -> Result<SweepReport, CliError> {
    opts.validate()?;
    let mut warnings = Vec::new();
    if opts.fd_step > FD_STEP_WARNING {
        warnings.push(format!(
            "fd step {} exceeds {FD_STEP_WARNING}: finite-difference error grows as O(h^2) and fd rows may fail",
            opts.fd_step
        ));
    }
    if opts.samples == 0 {
        warnings.push("no samples requested: sampled rows are vacuous".to_string());
    }
    let mut rows = Vec::new();
    hstar_rows(&mut rows, opts);
    cone_rows(&mut rows, opts);
    sasakian_rows(&mut rows, opts);
    heisenberg_rows(&mut rows, opts);
    form_rows(&mut rows, opts);
    levi_rows(&mut rows, opts);
    pushforward_rows(&mut rows, opts);
    Ok(SweepReport::new("verify-geometry", opts.seed, opts.samples, Some(opts.fd_step), opts.tol, warnings, rows))
}

pub fn roundtrips(opts: &Options) -> Result<SweepReport, CliError> {
    opts.validate()?;
    let mut warnings = Vec::new();
    if opts.samples == 0 {
        warnings.push("no samples requested: every row passes vacuously".to_string());
    }
    let res = map_indexed(opts.samples, |i| {
        let mut rng = rng_for(opts.seed ^ 0x88, i as u64);
        let n = normalized_quadruple(&mut rng);
        let c = cone_point(&mut rng);
        let b0_rt = b0_inv(&b0(&n)).expect("cone image").distance(&n).max(b0(&b0_inv(&c).expect("cone point")).distance(&c));
        let (zeta, w) = b1(&n);
        let b1_rt = b1_inv(zeta, w).expect("b1 image").distance(&n);
        let v = g_map(&c).expect("cone point");
        let back = g_inv(&v).expect("variety point");
        let g_rt = back.distance(&c).max(g_map(&back).expect("cone point").distance(&v));
        let var_rt = variety_inverse(&v).expect("variety point").distance(&b0_inv(&c).expect("cone point"));
        let (fz, fw) = f_map(&c);
        let f_back = f_inv(fz, fw).expect("f image");
        let (fz2, fw2) = f_map(&f_back);
        let f_rt = f_back.distance(&c).max((fz2 - fz).norm()).max((fw2 - fw).norm());
        let p = chart_point(Model::HStar, &mut rng);
        let h = HStarElement::new(Complex64::new(p.x, p.y), p.t).expect("nonzero z");
        let other = HStarElement::new(Complex64::new(p.t, 1.0), p.x).expect("nonzero z");
        let psi_rt = psi_inv(&psi_iso(&h)).distance(&h);
        let psi_hom = psi_iso(&hstar_mul(&h, &other)).distance(&psi_iso(&h).mul(&psi_iso(&other)));
        let k = koranyi(&h);
        let k_back = koranyi(&koranyi_inv(&k));
        let kor_rt = koranyi_inv(&k)
            .distance(&h)
            .max((k_back.zeta() - k.zeta()).norm())
            .max(angle_distance(k_back.phi(), k.phi()));
        let commute_g = g_map(&b0(&n)).expect("cone image").distance(&variety_from_quadruple(&n.quadruple()).expect("normal form"));
        let (z1, w1) = f_map(&c);
        let (z2, w2) = b1(&b0_inv(&c).expect("cone point"));
        let commute_f = (z1 - z2).norm().max((w1 - w2).norm());
        let q = quadruple(&mut rng);
        let g = group_element(&mut rng);
        let (nq, _) = normalize_quadruple(&q).expect("sampled quadruple");
        let (ngq, _) = normalize_quadruple(&g.apply_quadruple(&q)).expect("image quadruple");
        let normal = ngq.distance(&nq);
        [b0_rt, b1_rt, g_rt, var_rt, f_rt, psi_rt, psi_hom, kor_rt, commute_g, commute_f, normal]
    });
    let names = [
        ("configuration maps", "b0 round trips"),
        ("configuration maps", "b1 round trips"),
        ("configuration maps", "G round trips"),
        ("configuration maps", "variety inverse recovers the normal form"),
        ("configuration maps", "F round trips"),
        ("group models", "psi round trips"),
        ("group models", "psi is a homomorphism"),
        ("group models", "Koranyi round trips"),
        ("diagrams", "G o b0 = variety map"),
        ("diagrams", "F = b1 o b0^-1"),
        ("normal form", "normal form is isometry invariant"),
    ];
    let rows = names
        .iter()
        .enumerate()
        .map(|(k, (group, name))| Row::residual(group, name, max_of(res.iter().map(|r| r[k])), opts.tol))
        .collect();
    Ok(SweepReport::new("roundtrips", opts.seed, opts.samples, None, opts.tol, warnings, rows))
}
