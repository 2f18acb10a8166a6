//! Linearized quantum-noise model of a Fabry-Perot cavity whose input mirror
//! couples to a test mass both dispersively (frequency pull) and
//! dissipatively (bandwidth pull).
//!
//! The combination creates an optical spring at resonant pump. The crate
//! derives the coupling coefficients from interferometer geometry, reduces
//! them to a dimensionless model, and evaluates force-sensing sensitivity
//! against the standard quantum limit as well as ponderomotive squeezing of
//! the output light. A time-domain stochastic integrator cross-checks the
//! frequency-domain results.

pub mod cli;
pub mod consts;
pub mod error;
pub mod numerics;
pub mod oracle;
pub mod params;
pub mod rigidity;
pub mod sensing;
pub mod spectrum;
pub mod squeezing;
pub mod validate;

pub use error::{Error, Result};
pub use params::{
    derive_bs_coupling, derive_mirror_coupling, intracavity_power, reduce,
    resonance_and_bandwidth, CouplingRates, DimensionlessModel, MsiGeometry, MsiVariant,
    PhysicalParams,
};
pub use spectrum::SpectrumResult;
