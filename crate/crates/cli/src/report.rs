//! Serializable reports, emitted as TOML or JSON with 12 significant digits.

use hstar_core::Complex64;
use serde::{Deserialize, Serialize};

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn complex(z: Complex64) -> [f64; 2] {
    [sig12(z.re), sig12(z.im)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Passes when `residual < tolerance`.
    Below,
    /// Passes when `residual > tolerance`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub group: String,
    pub name: String,
    pub expected: Vec<f64>,
    pub computed: Vec<f64>,
    pub residual: f64,
    pub relation: Relation,
    pub tolerance: f64,
    pub pass: bool,
}

impl Row {
    pub fn new(group: &str, name: &str, expected: Vec<f64>, computed: Vec<f64>, residual: f64, tolerance: f64) -> Self {
        Row::with_relation(group, name, expected, computed, residual, Relation::Below, tolerance)
    }

    pub fn with_relation(
        group: &str,
        name: &str,
        expected: Vec<f64>,
        computed: Vec<f64>,
        residual: f64,
        relation: Relation,
        tolerance: f64,
    ) -> Self {
        let pass = match relation {
            Relation::Below => residual < tolerance,
            Relation::Above => residual > tolerance,
        };
        Row {
            group: group.to_string(),
            name: name.to_string(),
            expected: expected.into_iter().map(sig12).collect(),
            computed: computed.into_iter().map(sig12).collect(),
            residual: sig12(residual),
            relation,
            tolerance,
            pass,
        }
    }

    /// A residual row: expected value 0.
    pub fn residual(group: &str, name: &str, residual: f64, tolerance: f64) -> Self {
        Row::new(group, name, vec![0.0], vec![residual], residual, tolerance)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fd_step: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub failed: usize,
    pub warnings: Vec<String>,
    pub rows: Vec<Row>,
}

impl SweepReport {
    pub fn new(command: &str, seed: u64, samples: usize, fd_step: Option<f64>, tolerance: f64, warnings: Vec<String>, rows: Vec<Row>) -> Self {
        let failed = rows.iter().filter(|r| !r.pass).count();
        SweepReport {
            command: command.to_string(),
            seed,
            samples,
            fd_step,
            tolerance,
            pass: failed == 0,
            failed,
            warnings,
            rows,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub value: f64,
    pub pass: bool,
}

impl Check {
    pub fn below(value: f64, tol: f64) -> Self {
        Check {
            value: sig12(value),
            pass: value < tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartanValues {
    pub p123: f64,
    pub p124: f64,
    pub p134: f64,
    pub p234: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossRatios {
    pub x1: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    /// `|X₂| - |X₁||X₃|`
    pub modulus_identity: Check,
    /// Second real identity among the cross-ratios.
    pub real_part_identity: Check,
    /// Defining equation of the cross-ratio variety in `(X₁, X₂, A)`.
    pub variety_equation: Check,
    /// Cartan invariant of `(p₁,p₂,p₃)` against the normal-form angle.
    pub normal_form_angle: Check,
    /// Normal form of the images under a fixed isometry.
    pub normal_form_invariance: Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalForm {
    pub a: f64,
    pub z: [f64; 2],
    pub t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConeCoords {
    pub z: [f64; 2],
    pub t: f64,
    pub r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarietyCoords {
    pub w1: [f64; 2],
    pub w2: [f64; 2],
    pub a: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPair {
    pub zeta: [f64; 2],
    pub w: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub tolerance: f64,
    pub pass: bool,
    pub cartan: CartanValues,
    pub cross_ratios: CrossRatios,
    pub residuals: Residuals,
    pub normal_form: NormalForm,
    pub cone_point: ConeCoords,
    pub variety_point: VarietyCoords,
    pub b1_point: ComplexPair,
}

pub fn to_toml<T: Serialize>(value: &T) -> String {
    toml::to_string(value).expect("reports serialize to TOML")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize to JSON")
}
