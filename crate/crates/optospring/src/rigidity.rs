//! Optical rigidity from the combined coupling, its spring/viscosity
//! decomposition, stability classification, and the regularized mechanical
//! susceptibility.
//!
//! With a resonant pump the product of the two couplings creates a
//! frequency-dependent stiffness
//!
//! ```text
//! K(Omega) = -4 hbar omega_0 xi eta A^2 / (gamma_0/2 - i Omega)
//!          ~ kappa - i Omega delta
//! ```
//!
//! with `kappa = -8 hbar omega_0 xi eta A^2 / gamma_0` and
//! `delta = -2 kappa / gamma_0`. The two Taylor coefficients always carry
//! opposite signs: a restoring spring (`kappa > 0`, requires `xi eta < 0`)
//! comes with negative viscosity, so the bare spring is never stable on its
//! own.

use num_complex::Complex64;

use crate::consts::HBAR;
use crate::error::{Error, Result};
use crate::params::PhysicalParams;

/// First-order decomposition of the rigidity.
#[derive(Debug, Clone, Copy)]
pub struct SpringConstants {
    /// Static stiffness kappa, N/m.
    pub kappa: f64,
    /// Signed viscosity delta, N*s/m; opposite sign to kappa.
    pub delta: f64,
    /// Spring resonance Omega_0 = sqrt(kappa/m), rad/s; `None` when kappa < 0.
    pub omega0_mech: Option<f64>,
}

/// Stability of the bare optical spring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityClass {
    /// kappa > 0: restoring spring with anti-damping.
    UnstableSpring,
    /// kappa < 0: anti-spring with positive damping.
    UnstableAntiSpring,
    /// xi*eta = 0: no rigidity at resonant pump.
    NoSpring,
}

/// Exact complex rigidity K(Omega), N/m. No Taylor truncation.
pub fn optical_rigidity(omega: f64, params: &PhysicalParams) -> Complex64 {
    let a2 = params.photon_flux();
    let numerator = -4.0
        * HBAR
        * params.pump_angular_frequency
        * params.dispersive_coeff
        * params.dissipative_coeff
        * a2;
    numerator / Complex64::new(params.half_bandwidth / 2.0, -omega)
}

/// Two-term Taylor coefficients of the rigidity.
pub fn spring_constants(params: &PhysicalParams) -> SpringConstants {
    let a2 = params.photon_flux();
    let prod = params.dispersive_coeff * params.dissipative_coeff;
    let kappa = -8.0 * HBAR * params.pump_angular_frequency * prod * a2 / params.half_bandwidth;
    let delta = -2.0 * kappa / params.half_bandwidth;
    let omega0_mech = if kappa >= 0.0 {
        Some((kappa / params.mass).sqrt())
    } else {
        None
    };
    SpringConstants {
        kappa,
        delta,
        omega0_mech,
    }
}

/// Classifies the bare spring by the sign of kappa.
pub fn stability_class(params: &PhysicalParams) -> StabilityClass {
    let prod = params.dispersive_coeff * params.dissipative_coeff;
    if prod == 0.0 {
        StabilityClass::NoSpring
    } else if prod < 0.0 {
        StabilityClass::UnstableSpring
    } else {
        StabilityClass::UnstableAntiSpring
    }
}

/// Effective mechanical susceptibility chi(Omega) = 1/(K(Omega) - m Omega^2
/// - i Omega m gamma_m), m/N.
///
/// `gamma_m` is an intrinsic viscous-damping knob; at `gamma_m = 0` the
/// bare susceptibility is recovered.
pub fn effective_susceptibility(
    omega: f64,
    params: &PhysicalParams,
    gamma_m: f64,
) -> Result<Complex64> {
    if !(gamma_m >= 0.0) {
        return Err(Error::Domain(format!("gamma_m must be >= 0, got {gamma_m}")));
    }
    let k = optical_rigidity(omega, params);
    let den = k - Complex64::new(
        params.mass * omega * omega,
        params.mass * omega * gamma_m,
    );
    if den.norm() < 1e-300 {
        return Err(Error::Singularity { omega });
    }
    Ok(den.inv())
}
