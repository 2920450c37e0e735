use nalgebra::DVector;
use proptest::prelude::*;

use hstar_core::config::{
    b0, b1, b1_inv, f_inv, f_map, g_inv, g_map, variety_from_quadruple, variety_inverse,
};
use hstar_core::frames::{
    complex_structure_apply, curvature_table, exterior_d_one, fd_curvature_oracle, lie_bracket, metric_eval,
    named_coframe, named_frame, ChartPoint, Model, VectorField, DEFAULT_FD_STEP,
};
use hstar_core::groups::{hstar_inv, hstar_mul, koranyi, koranyi_inv, psi_embed, psi_iso, rho_star, HStarElement};
use hstar_core::hyperbolic::{cartan, cartan_lifts, cross_ratio_lifts, cross_ratio_triple, BoundaryPoint, Triple};
use hstar_core::moebius::{normalize_quadruple, verify_form, GroupElement};
use hstar_core::sampling::{group_element, normalized_quadruple, quadruple, rng_for, variety_point};
use hstar_core::{angle_distance, Complex64};

fn modulus() -> impl Strategy<Value = f64> {
    0.5..2.0f64
}

fn planar_point() -> impl Strategy<Value = ChartPoint> {
    (modulus(), -3.2..3.2f64, -2.0..2.0f64)
        .prop_map(|(m, arg, t)| ChartPoint::planar(m * arg.cos(), m * arg.sin(), t).unwrap())
}

fn cone_point() -> impl Strategy<Value = ChartPoint> {
    (planar_point(), 0.5..2.0f64).prop_map(|(p, r)| ChartPoint::cone(p.x, p.y, p.t, r).unwrap())
}

fn element() -> impl Strategy<Value = HStarElement> {
    (modulus(), -3.2..3.2f64, -2.0..2.0f64)
        .prop_map(|(m, arg, t)| HStarElement::new(Complex64::from_polar(m, arg), t).unwrap())
}

fn unit_scalar() -> impl Strategy<Value = Complex64> {
    (0.1..10.0f64, -3.2..3.2f64).prop_map(|(m, a)| Complex64::from_polar(m, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_ignore_lift_scaling(seed in any::<u64>(), c in proptest::array::uniform4(unit_scalar())) {
        let q = quadruple(&mut rng_for(seed, 0));
        let lifts = q.lifts();
        let scaled = [0, 1, 2, 3].map(|i| lifts[i].scale(c[i]));
        let a = cartan_lifts(&[lifts[0], lifts[1], lifts[2]]).unwrap();
        let a2 = cartan_lifts(&[scaled[0], scaled[1], scaled[2]]).unwrap();
        prop_assert!((a - a2).abs() < 1e-10);
        let x = cross_ratio_lifts(&lifts).unwrap();
        let x2 = cross_ratio_lifts(&scaled).unwrap();
        prop_assert!((x - x2).norm() < 1e-10 * x.norm().max(1.0));
    }

    #[test]
    fn invariants_are_isometry_invariant(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let q = quadruple(&mut rng);
        let g = group_element(&mut rng);
        let gq = g.apply_quadruple(&q);
        prop_assert!(angle_distance(cartan(&q.triple(0, 1, 2)), cartan(&gq.triple(0, 1, 2))) < 1e-9);
        let (x, gx) = (cross_ratio_triple(&q).unwrap(), cross_ratio_triple(&gq).unwrap());
        prop_assert!((x.x1 - gx.x1).norm() < 1e-9);
        prop_assert!((x.x2 - gx.x2).norm() < 1e-9);
        prop_assert!((x.x3 - gx.x3).norm() < 1e-9);
        let (r1, r2) = x.identity_residuals();
        prop_assert!(r1 < 1e-9 && r2 < 1e-9);
    }

    #[test]
    fn generated_elements_preserve_the_form(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 2);
        let g = group_element(&mut rng);
        let h = group_element(&mut rng);
        prop_assert!(verify_form(&(g * h)) < 1e-9);
        prop_assert!(verify_form(&g.inverse()) < 1e-9);
        let p = BoundaryPoint::finite(Complex64::new(0.3, -0.8), 0.4);
        let composed = (g * h).apply(&p);
        let stepwise = g.apply(&h.apply(&p));
        prop_assert!(composed.approx_eq(&stepwise, 1e-8));
    }

    #[test]
    fn normal_form_is_well_defined(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 3);
        let q = quadruple(&mut rng);
        let (n, g) = normalize_quadruple(&q).unwrap();
        prop_assert!((cartan(&q.triple(0, 1, 2)) - n.a).abs() < 1e-9);
        let image = g.apply_quadruple(&q);
        let expected = n.quadruple();
        for i in 0..4 {
            prop_assert!(image.0[i].approx_eq(&expected.0[i], 1e-9));
        }
        let (again, h) = normalize_quadruple(&expected).unwrap();
        prop_assert!(again.distance(&n) < 1e-9);
        prop_assert!(h.projective_distance(&GroupElement::identity()) < 1e-9);
        let moved = group_element(&mut rng).apply_quadruple(&q);
        let (n2, _) = normalize_quadruple(&moved).unwrap();
        prop_assert!(n2.distance(&n) < 1e-8);
    }

    #[test]
    fn c_and_r_circles(x in 0.1..3.0f64, t1 in 0.1..3.0f64, sign in prop::bool::ANY) {
        let s = if sign { 1.0 } else { -1.0 };
        let c_circle = Triple::new(
            BoundaryPoint::finite(Complex64::new(0.0, 0.0), s * t1),
            BoundaryPoint::Infinity,
            BoundaryPoint::origin(),
        );
        // (0, t) coincides with the origin in z, so the C-circle is the t-axis
        let c_circle = c_circle.unwrap();
        prop_assert!((cartan(&c_circle).abs() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        let r_circle = Triple::new(
            BoundaryPoint::finite(Complex64::new(s * x, 0.0), 0.0),
            BoundaryPoint::Infinity,
            BoundaryPoint::origin(),
        )
        .unwrap();
        prop_assert!(cartan(&r_circle).abs() < 1e-12);
    }

    #[test]
    fn star_group_axioms(a in element(), b in element(), c in element()) {
        let left = hstar_mul(&hstar_mul(&a, &b), &c);
        let right = hstar_mul(&a, &hstar_mul(&b, &c));
        prop_assert!(left.distance(&right) < 1e-12 * (1.0 + left.t().abs()));
        prop_assert!(hstar_mul(&a, &hstar_inv(&a)).distance(&HStarElement::identity()) < 1e-12);
        prop_assert!(hstar_mul(&hstar_inv(&a), &a).distance(&HStarElement::identity()) < 1e-12);
        let hom = psi_iso(&hstar_mul(&a, &b)).distance(&psi_iso(&a).mul(&psi_iso(&b)));
        prop_assert!(hom < 1e-12);
    }

    #[test]
    fn embedding_and_koranyi(a in element()) {
        let (z1, z2) = psi_embed(&a);
        prop_assert!(rho_star(z1, z2).abs() < 1e-12);
        prop_assert!(koranyi_inv(&koranyi(&a)).distance(&a) < 1e-12);
    }

    #[test]
    fn configuration_maps_round_trip(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 4);
        let n = normalized_quadruple(&mut rng);
        let c = b0(&n);
        let v = g_map(&c).unwrap();
        prop_assert!(g_inv(&v).unwrap().distance(&c) < 1e-9);
        prop_assert!(variety_inverse(&v).unwrap().distance(&n) < 1e-9);
        prop_assert!(variety_from_quadruple(&n.quadruple()).unwrap().distance(&v) < 1e-9);
        let (zeta, w) = b1(&n);
        prop_assert!(w.im.abs() > 0.0);
        prop_assert!(b1_inv(zeta, w).unwrap().distance(&n) < 1e-9);
        let (fz, fw) = f_map(&c);
        prop_assert!(f_inv(fz, fw).unwrap().distance(&c) < 1e-9);
        let vp = variety_point(&mut rng);
        prop_assert!(vp.residual() < 1e-9);
    }

    #[test]
    fn coframe_is_dual_and_frame_orthonormal(p in planar_point(), q in cone_point()) {
        for (model, pt) in [(Model::HStar, p), (Model::Heisenberg, p), (Model::Cone, q)] {
            let c = pt.coords();
            let frame = named_frame(model);
            let coframe = named_coframe(model);
            let g = metric_eval(model, &pt).unwrap();
            for i in 0..model.dim() {
                for j in 0..model.dim() {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    let (ei, ej) = (frame[i].eval(&c), frame[j].eval(&c));
                    prop_assert!((coframe[i].apply(&c, &ej) - delta).abs() < 1e-12);
                    prop_assert!(((ei.transpose() * &g * ej)[(0, 0)] - delta).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn brackets_and_contact_form(p in planar_point(), q in cone_point()) {
        let c = p.coords();
        let f = named_frame(Model::HStar);
        let h = DEFAULT_FD_STEP;
        let expected = (f[1].eval(&c) - f[2].eval(&c)) * 2.0;
        prop_assert!((lie_bracket(&f[0], &f[1], &c, h) - expected).amax() < 1e-8);
        prop_assert!(lie_bracket(&f[1], &f[1], &c, h).amax() < 1e-12);

        let cof = named_coframe(Model::HStar);
        prop_assert!((exterior_d_one(&cof[2], &f[0], &f[1], &c, h) - 2.0).abs() < 1e-8);
        prop_assert!(exterior_d_one(&cof[0], &f[0], &f[1], &c, h).abs() < 1e-8);
        prop_assert!((exterior_d_one(&cof[1], &f[0], &f[1], &c, h) + 2.0).abs() < 1e-8);
        prop_assert!((cof[2].apply(&c, &f[2].eval(&c)) - 1.0).abs() < 1e-12);
        for u in &f {
            prop_assert!(exterior_d_one(&cof[2], &f[2], u, &c, h).abs() < 1e-8);
        }

        let cq = q.coords();
        let fr = named_frame(Model::Cone);
        let r = q.r.unwrap();
        prop_assert!((lie_bracket(&fr[2], &fr[3], &cq, h) - fr[2].eval(&cq) / r).amax() < 1e-8);
    }

    #[test]
    fn complex_structure_is_orthogonal(q in cone_point(), u in proptest::array::uniform4(-1.0..1.0f64), v in proptest::array::uniform4(-1.0..1.0f64)) {
        let (u, v) = (DVector::from_column_slice(&u), DVector::from_column_slice(&v));
        let ju = complex_structure_apply(&q, &u).unwrap();
        let jv = complex_structure_apply(&q, &v).unwrap();
        let jju = complex_structure_apply(&q, &ju).unwrap();
        prop_assert!((jju + &u).amax() < 1e-10);
        let g = metric_eval(Model::Cone, &q).unwrap();
        let lhs = (ju.transpose() * &g * &jv)[(0, 0)];
        let rhs = (u.transpose() * &g * &v)[(0, 0)];
        prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn exact_and_oracle_curvature_agree(p in planar_point(), q in cone_point()) {
        for (model, pt) in [(Model::HStar, p), (Model::Heisenberg, p), (Model::Cone, q)] {
            let exact = curvature_table(model, &pt).unwrap();
            let fd = fd_curvature_oracle(model, &pt, DEFAULT_FD_STEP).unwrap();
            prop_assert!(exact.max_difference(&fd) < 1e-5, "{:?}", model);
        }
    }

    #[test]
    fn coordinate_fields_commute(p in planar_point()) {
        let c = p.coords();
        let dx = VectorField::coordinate(3, 0);
        let dt = VectorField::coordinate(3, 2);
        prop_assert!(lie_bracket(&dx, &dt, &c, DEFAULT_FD_STEP).amax() < 1e-12);
    }
}
