//! Seeded random inputs for sweeps and tests.
//!
//! Each sample draws from its own ChaCha8 stream keyed by `(seed, index)`, so
//! results do not depend on evaluation order or thread count.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{b0, g_map, ConePointPrime, VarietyPoint};
use crate::frames::{ChartPoint, Model};
use crate::hyperbolic::{BoundaryPoint, Quadruple};
use crate::moebius::{dilation_rotation, heis_translation, inversion, normalize_quadruple, GroupElement, NormalizedQuadruple};

/// Sampling region: `|z| ∈ [0.5, 2]`, `|t| ≤ 2`, `r ∈ [0.5, 2]`.
pub const MODULUS_RANGE: (f64, f64) = (0.5, 2.0);
pub const T_BOUND: f64 = 2.0;
pub const RADIUS_RANGE: (f64, f64) = (0.5, 2.0);

/// Minimum distance from the excluded loci accepted by the generators.
const CONDITIONING: f64 = 0.05;

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn complex_in_annulus(rng: &mut impl Rng) -> Complex64 {
    let m = rng.random_range(MODULUS_RANGE.0..=MODULUS_RANGE.1);
    Complex64::from_polar(m, rng.random_range(0.0..TAU))
}

pub fn chart_point(model: Model, rng: &mut impl Rng) -> ChartPoint {
    let z = complex_in_annulus(rng);
    let t = rng.random_range(-T_BOUND..=T_BOUND);
    let p = match model {
        Model::Cone => ChartPoint::cone(z.re, z.im, t, rng.random_range(RADIUS_RANGE.0..=RADIUS_RANGE.1)),
        _ => ChartPoint::planar(z.re, z.im, t),
    };
    p.expect("sampling region avoids z = 0")
}

pub fn chart_points(model: Model, seed: u64, n: usize) -> Vec<ChartPoint> {
    (0..n).map(|i| chart_point(model, &mut rng_for(seed, i as u64))).collect()
}

/// Coefficients in `[-1, 1]` of a frame combination.
pub fn frame_coefficients(rng: &mut impl Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect()
}

pub fn boundary_point(rng: &mut impl Rng) -> BoundaryPoint {
    BoundaryPoint::finite(complex_in_annulus(rng), rng.random_range(-T_BOUND..=T_BOUND))
}

fn well_conditioned(n: &NormalizedQuadruple) -> bool {
    let m = n.z.norm_sqr();
    n.a.abs() < 1.3
        && (0.05..=20.0).contains(&n.z.norm())
        && n.t.abs() < 50.0
        && (n.t / m - n.a.tan()).abs() > CONDITIONING
}

/// A quadruple of the configuration domain, away from its excluded loci.
/// Roughly one in four samples has a point at infinity.
pub fn quadruple(rng: &mut impl Rng) -> Quadruple {
    loop {
        let mut points = [(); 4].map(|_| boundary_point(rng));
        if rng.random_bool(0.25) {
            points[rng.random_range(0..4)] = BoundaryPoint::Infinity;
        }
        let Ok(q) = Quadruple::new(points) else { continue };
        if min_separation(&q) < CONDITIONING {
            continue;
        }
        if let Ok((n, _)) = normalize_quadruple(&q) {
            if well_conditioned(&n) {
                return q;
            }
        }
    }
}

fn min_separation(q: &Quadruple) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..4 {
        for j in i + 1..4 {
            m = m.min(q.0[i].distance(&q.0[j]));
        }
    }
    m
}

pub fn quadruples(seed: u64, n: usize) -> Vec<Quadruple> {
    (0..n).map(|i| quadruple(&mut rng_for(seed, i as u64))).collect()
}

/// A product of 3 to 5 random translations, dilation-rotations and inversions.
pub fn group_element(rng: &mut impl Rng) -> GroupElement {
    let count = rng.random_range(3..=5);
    let mut g = GroupElement::identity();
    for _ in 0..count {
        let factor = match rng.random_range(0..3) {
            0 => {
                let w = Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
                heis_translation(w, rng.random_range(-1.0..=1.0))
            }
            1 => dilation_rotation(complex_in_annulus(rng)).expect("nonzero scale"),
            _ => inversion(),
        };
        g = factor * g;
    }
    g
}

pub fn normalized_quadruple(rng: &mut impl Rng) -> NormalizedQuadruple {
    loop {
        let a = rng.random_range(-1.2..=1.2);
        let z = complex_in_annulus(rng);
        let t = rng.random_range(-T_BOUND..=T_BOUND);
        if let Ok(n) = NormalizedQuadruple::new(a, z, t) {
            if well_conditioned(&n) {
                return n;
            }
        }
    }
}

pub fn cone_point(rng: &mut impl Rng) -> ConePointPrime {
    b0(&normalized_quadruple(rng))
}

/// A variety point with `|w₁|, |w₂|` bounded and the side conditions held
/// with margin.
pub fn variety_point(rng: &mut impl Rng) -> VarietyPoint {
    loop {
        let Ok(v) = g_map(&cone_point(rng)) else { continue };
        let bounded = v.w1.norm() < 20.0 && v.w2.norm() < 20.0 && v.w1.norm() > 0.05;
        if bounded && (v.w1 + v.w2 - 1.0).norm() > CONDITIONING && v.a.abs() < FRAC_PI_2 - 0.2 {
            return v;
        }
    }
}
