//! The JSON quadruple document read by `hstar invariants`.

use hstar_core::hyperbolic::{BoundaryPoint, Quadruple};
use hstar_core::{Complex64, GeomError};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointEntry {
    Finite { z: [f64; 2], t: f64 },
    Infinity(InfinityTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InfinityTag {
    #[serde(rename = "inf")]
    Inf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleDocument {
    pub points: Vec<PointEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl PointEntry {
    pub fn from_point(p: &BoundaryPoint) -> Self {
        match p.coords() {
            Some((z, t)) => PointEntry::Finite { z: [z.re, z.im], t },
            None => PointEntry::Infinity(InfinityTag::Inf),
        }
    }

    pub fn to_point(&self) -> Result<BoundaryPoint, CliError> {
        match *self {
            PointEntry::Finite { z, t } => {
                if !(z[0].is_finite() && z[1].is_finite() && t.is_finite()) {
                    return Err(CliError::Parse("point coordinates must be finite".into()));
                }
                Ok(BoundaryPoint::finite(Complex64::new(z[0], z[1]), t))
            }
            PointEntry::Infinity(_) => Ok(BoundaryPoint::Infinity),
        }
    }
}

impl QuadrupleDocument {
    pub fn from_quadruple(q: &Quadruple, label: Option<String>) -> Self {
        QuadrupleDocument {
            points: q.0.iter().map(PointEntry::from_point).collect(),
            label,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn quadruple(&self) -> Result<Quadruple, CliError> {
        if self.points.len() != 4 {
            return Err(CliError::Parse(format!("expected exactly 4 points, found {}", self.points.len())));
        }
        let mut points = [BoundaryPoint::Infinity; 4];
        for (slot, entry) in points.iter_mut().zip(&self.points) {
            *slot = entry.to_point()?;
        }
        Quadruple::new(points).map_err(|e| match e {
            GeomError::CoincidentPoints { i, j } => {
                CliError::Parse(format!("points p{} and p{} coincide", i + 1, j + 1))
            }
            other => CliError::Parse(other.to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_finite_and_infinite_entries() {
        let doc = QuadrupleDocument::parse(
            r#"{"label":"x","points":[{"z":[1,0],"t":0},"inf",{"z":[0,0],"t":0},{"z":[0.5,-1],"t":2}]}"#,
        )
        .unwrap();
        assert_eq!(doc.label.as_deref(), Some("x"));
        let q = doc.quadruple().unwrap();
        assert!(q.0[1].is_infinity());
        assert_eq!(q.0[3].coords().unwrap().0, Complex64::new(0.5, -1.0));
        let again = QuadrupleDocument::from_quadruple(&q, doc.label.clone());
        assert_eq!(again, doc);
    }

    #[test]
    fn rejects_bad_documents() {
        for text in [
            r#"{"points":[]}"#,
            r#"{"points":["inf","inf",{"z":[0,0],"t":0},{"z":[1,0],"t":0}]}"#,
            r#"{"points":["infinity",{"z":[1,0],"t":0},{"z":[0,0],"t":0},{"z":[2,0],"t":0}]}"#,
            r#"{"points":[{"z":[1],"t":0},"inf",{"z":[0,0],"t":0},{"z":[2,0],"t":0}]}"#,
            r#"{"pts":[]}"#,
            "not json",
        ] {
            let parsed = QuadrupleDocument::parse(text).and_then(|d| d.quadruple());
            assert!(matches!(parsed, Err(CliError::Parse(_))), "{text}");
        }
    }
}
