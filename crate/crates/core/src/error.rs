use thiserror::Error;

/// Errors produced by flow construction, coordinate transforms and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("density must be positive everywhere (min {min})")]
    NonPositiveDensity { min: f64 },

    #[error("laminar solve did not converge: final residual {residual}")]
    SolveDiverged { residual: f64 },

    #[error("no bifurcation wavenumber in ({lo}, {hi})")]
    NoBifurcation { lo: f64, hi: f64 },

    #[error("bracketing failed for root solve: f({lo}) and f({hi}) have the same sign")]
    NoBracket { lo: f64, hi: f64 },

    #[error("surface derivative psi_y too small in magnitude ({value}) at x = {x}")]
    SingularSigma { value: f64, x: f64 },

    #[error("psi_y >= 0 on the surface row at x = {x} (value {value})")]
    NonMonotoneSurface { value: f64, x: f64 },

    #[error("hodograph unavailable: psi not strictly decreasing in y at column x = {x}")]
    HodographUnavailable { x: f64 },

    #[error("mass matrix not positive definite (pivot {pivot} at dof {index})")]
    NotPositiveDefinite { pivot: f64, index: usize },

    #[error("grid incommensurate: x extent must be (2M+1) whole periods ({detail})")]
    IncommensurateGrid { detail: String },

    #[error("domain degenerate: xi + d <= 0 at x = {x}")]
    DegenerateDomain { x: f64 },

    #[error("mesh cells must satisfy {0}")]
    BadMesh(String),

    #[error("linear solve refused: spectrum too close to zero (min |mu| = {min_abs_mu}, condition estimate {cond})")]
    NearSingular { min_abs_mu: f64, cond: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
