use thiserror::Error;

pub type Result<T> = std::result::Result<T, GeomError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("vector is not null for the Hermitian form (relative residual {residual:.3e})")]
    NonNullVector { residual: f64 },
    #[error("lift has all components zero")]
    ZeroLift,
    #[error("points {i} and {j} coincide")]
    CoincidentPoints { i: usize, j: usize },
    #[error("degenerate triple: two of the points coincide")]
    DegenerateTriple,
    #[error("cross-ratio undefined: denominator vanishes")]
    UndefinedCrossRatio,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("p1, p2, p3 lie on a common C-circle")]
    CCircle123,
    #[error("p2, p3, p4 lie on a common C-circle")]
    CCircle234,
    #[error("p4 lies in the stabiliser orbit of p1")]
    SameOrbit,
    #[error("invalid normalized quadruple: {0}")]
    InvalidNormalForm(&'static str),
    #[error("complex coordinate must be nonzero")]
    ZeroModulus,
    #[error("invalid group element: {0}")]
    InvalidGroupElement(&'static str),
    #[error("invalid chart point: {0}")]
    InvalidChartPoint(&'static str),
    #[error("structure coefficients are not constant (variation {variation:.3e})")]
    NonConstantStructure { variation: f64 },
    #[error("invalid cone point: {0}")]
    InvalidConePoint(&'static str),
    #[error("point is off the variety (residual {residual:.3e})")]
    NotOnVariety { residual: f64 },
    #[error("variety side condition violated: {0}")]
    VarietySideCondition(&'static str),
    #[error("denominator vanishes in {0}")]
    DenominatorVanishes(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl GeomError {
    /// Short stable name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            GeomError::NonNullVector { .. } => "NonNullVector",
            GeomError::ZeroLift => "ZeroLift",
            GeomError::CoincidentPoints { .. } => "CoincidentPoints",
            GeomError::DegenerateTriple => "DegenerateTriple",
            GeomError::UndefinedCrossRatio => "UndefinedCrossRatio",
            GeomError::ZeroScale => "ZeroScale",
            GeomError::CCircle123 => "CCircle123",
            GeomError::CCircle234 => "CCircle234",
            GeomError::SameOrbit => "SameOrbit",
            GeomError::InvalidNormalForm(_) => "InvalidNormalForm",
            GeomError::ZeroModulus => "ZeroModulus",
            GeomError::InvalidGroupElement(_) => "InvalidGroupElement",
            GeomError::InvalidChartPoint(_) => "InvalidChartPoint",
            GeomError::NonConstantStructure { .. } => "NonConstantStructure",
            GeomError::InvalidConePoint(_) => "InvalidConePoint",
            GeomError::NotOnVariety { .. } => "NotOnVariety",
            GeomError::VarietySideCondition(_) => "VarietySideCondition",
            GeomError::DenominatorVanishes(_) => "DenominatorVanishes",
            GeomError::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
