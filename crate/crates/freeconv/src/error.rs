use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid algebra descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    #[error("element has a non-finite entry at index {0}")]
    NonFinite(usize),

    #[error("singular element: entry {index} has modulus {modulus:.3e}")]
    SingularElement { index: usize, modulus: f64 },

    #[error("element is not nonnegative: entry {index} = {value:.6e}")]
    NotPositive { index: usize, value: f64 },

    #[error("element is not selfadjoint: entry {index} has imaginary part {value:.3e}")]
    NotSelfadjoint { index: usize, value: f64 },

    #[error("point is not in the open upper half-plane: Im(entry {index}) = {im:.3e}")]
    NotInHalfPlane { index: usize, im: f64 },

    #[error("no convergence after {iterations} iterations (last residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("degenerate sample {index}: Im f(z) has a nonpositive entry")]
    DegenerateSample { index: usize },

    #[error("monotonicity of {quantity} violated at rung {rung}, entry {entry} (delta {delta:.3e})")]
    MonotonicityViolation {
        quantity: &'static str,
        rung: usize,
        entry: usize,
        delta: f64,
    },

    #[error("ladder failed at rung {rung} (y = {y:.3e}): {source}")]
    LadderFailure {
        rung: usize,
        y: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("ladder has no usable rungs for {0}")]
    EmptyLadder(&'static str),

    #[error("inconsistent boundary profile: {0}")]
    InconsistentProfile(String),

    #[error("invalid ensemble spec: {0}")]
    InvalidSpec(String),

    #[error("linear solve failed: {0}")]
    LinearSolveFailure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
