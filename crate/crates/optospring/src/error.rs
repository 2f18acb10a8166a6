use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation was called on the wrong interferometer variant.
    #[error("geometry variant mismatch: operation requires {expected}")]
    VariantMismatch { expected: &'static str },

    /// A physical or dimensionless input is outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// Both coupling coefficients vanish; no reduced model exists.
    #[error("degenerate model: dispersive and dissipative couplings are both zero")]
    DegenerateModel,

    /// The mechanical susceptibility has a pole on the requested frequency.
    #[error("susceptibility pole at omega = {omega:e} rad/s")]
    Singularity { omega: f64 },

    /// No crossing of twice the minimum noise level was found near the
    /// spring resonance.
    #[error("detection bandwidth undefined: {0}")]
    BandwidthUndefined(String),

    /// Requested quantity is only defined for genuinely combined coupling.
    #[error("pure-coupling limit: {0}")]
    PureCoupling(String),

    /// A simulated trajectory diverged or a run was refused as unstable.
    #[error("unstable trajectory: {0}")]
    Instability(String),

    /// Too few ensemble members for a meaningful spectral estimate.
    #[error("estimator variance: {0}")]
    EstimatorVariance(String),

    /// The deterministic drive did not reach steady state within the
    /// configured duration.
    #[error("steady state not reached: {0}")]
    Transient(String),

    /// Configuration file or override could not be parsed/validated.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 config, 3 numeric/domain.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            _ => 3,
        }
    }
}
