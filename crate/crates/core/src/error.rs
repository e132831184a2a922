use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("structure constants violate the Jacobi identity: defect {defect:.3e} exceeds {tolerance:.3e}")]
    JacobiViolation { defect: f64, tolerance: f64 },

    #[error("metric is not symmetric (max asymmetry {asymmetry:.3e})")]
    MetricNotSymmetric { asymmetry: f64 },

    #[error("metric is not positive definite (smallest eigenvalue {min_eigenvalue})")]
    MetricNotPositiveDefinite { min_eigenvalue: f64 },

    #[error("vectors are linearly dependent (rank {rank} < {count})")]
    LinearlyDependent { rank: usize, count: usize },

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("vector is not tangent to the submanifold (normal residual {residual:.3e})")]
    NotTangent { residual: f64 },

    #[error("vector is not normal to the submanifold (tangent residual {residual:.3e})")]
    NotNormal { residual: f64 },

    #[error("vectors do not span a 2-plane (Gram determinant {gram_det:.3e})")]
    DegeneratePlane { gram_det: f64 },

    #[error("vector is not central (bracket residual {residual:.3e})")]
    NotCentral { residual: f64 },

    #[error("algebra is not 2-step nilpotent")]
    NotTwoStep,

    #[error("invalid almost complex structure: {reason} (residual {residual:.3e})")]
    InvalidComplexStructure { reason: &'static str, residual: f64 },

    #[error("maps {first} and {second} violate the Clifford relations (residual {residual:.3e})")]
    CliffordRelation {
        first: usize,
        second: usize,
        residual: f64,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
