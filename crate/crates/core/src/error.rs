use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("columns do not span a strictly convex cone")]
    NonConvexCone,
    #[error("degenerate cone: {0}")]
    DegenerateCone(String),
    #[error("smooth point: r = 1")]
    SmoothPoint,
    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(String),
    #[error("origin is not in the interior (edge at vertex {0})")]
    OriginNotInterior(String),
    #[error("vertex {0} is not primitive")]
    NonPrimitiveVertex(String),
    #[error("no family with k = {k}, d = {d}")]
    NoFamily { k: i64, d: String },
    #[error("stability condition lies on a wall")]
    OnWall,
    #[error("stability condition is outside the effective cone")]
    EmptyQuotient,
    #[error("weight matrix is not well-formed")]
    NotWellFormed,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("degree {0} is not congruent to k/3 modulo Z")]
    BadCongruence(String),
    #[error("schema error in {record}: field {field}: {msg}")]
    SchemaError { record: String, field: String, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
