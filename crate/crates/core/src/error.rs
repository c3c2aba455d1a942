use thiserror::Error;

/// Errors raised by the algebra layer. These carry no space-time context; the
/// Darboux layer wraps them with the point and level where they occurred.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("square root of a jet with odd leading exponent {0} (branch point)")]
    BranchPoint(i32),
    #[error("operation on a degenerate (identically zero) jet")]
    DegenerateJet,
    #[error("exp of a jet with a pole of order {0} (essential singularity)")]
    EssentialSingularity(i32),
    #[error("division by a zero scalar")]
    DivisionByZero,
    #[error("singular 2x2 matrix")]
    SingularMatrix,
    #[error("jet pole of order {found} exceeds budget {budget}")]
    PoleBudget { found: i32, budget: i32 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("degenerate spectral point (4λ²+4aλ+1+a² = 0), use the jet path")]
    DegenerateSpectralPoint,

    #[error("spectral parameter λ = 0 makes V singular")]
    SingularV,

    #[error("degenerate eigenfunction (|ψ|²+|φ|² = 0)")]
    ZeroEigenfunction,

    #[error("degenerate eigenfunction (|ψ|²+|φ|² = 0) at x={x}, t={t}, level {level}")]
    DegenerateEigenfunction { x: f64, t: f64, level: usize },

    #[error("singular H at DT level {level} (x={x}, t={t})")]
    SingularH { x: f64, t: f64, level: usize },

    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("grid: {0}")]
    Grid(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: impl std::fmt::Display) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
