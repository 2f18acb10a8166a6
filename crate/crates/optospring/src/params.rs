//! Interferometer geometry, coupling-coefficient derivation, and reduction to
//! the dimensionless parameter set on which all spectra are pure functions.
//!
//! The generalized input mirror is a Michelson-Sagnac assembly whose amplitude
//! reflectivity/transmittance depend on element positions. Two realizations are
//! supported: a movable 50/50 beam splitter (fixed folding mirror) and a
//! movable partially transmitting mirror (fixed beam splitter). Either one
//! yields a dispersive coefficient `xi` (cavity frequency pull per meter) and
//! a dissipative coefficient `eta` (relative bandwidth pull per meter).

use crate::consts::{C_LIGHT, HBAR};
use crate::error::{Error, Result};

/// Largest mean amplitude transmittance accepted by the small-transmittance
/// expansions used throughout.
pub const MAX_MEAN_TRANSMITTANCE: f64 = 0.3;

/// Dimensionless spring frequency above which the narrowband (non-resolved
/// sideband) formulas start to degrade; evaluations past it get a warning.
pub const REGIME_X0_LIMIT: f64 = 0.3;

/// Which element of the generalized mirror is the test mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MsiVariant {
    /// The 50/50 beam splitter moves; the folding mirror is fixed.
    MovableBeamSplitter,
    /// The partially transmitting mirror moves; the beam splitter is fixed.
    MovableMirror {
        /// Amplitude reflectivity r_M of the movable mirror.
        reflectivity: f64,
        /// Amplitude transmittance t_M of the movable mirror.
        transmittance: f64,
    },
}

/// Physical layout of the generalized-mirror interferometer.
#[derive(Debug, Clone, Copy)]
pub struct MsiGeometry {
    pub variant: MsiVariant,
    /// Distance L from the generalized mirror to the end mirror, meters.
    pub cavity_length: f64,
    /// Pump angular frequency omega_0, rad/s.
    pub pump_angular_frequency: f64,
    /// Mean amplitude transmittance of the generalized mirror
    /// (T0 for the beam-splitter variant, T1 for the mirror variant).
    pub mean_transmittance: f64,
    /// Round-trip time tau, seconds. Defaults to 2L/c when absent.
    pub round_trip_time: Option<f64>,
}

impl MsiGeometry {
    /// Beam-splitter-variant geometry with validated invariants.
    pub fn beam_splitter(
        cavity_length: f64,
        pump_angular_frequency: f64,
        mean_transmittance: f64,
    ) -> Result<Self> {
        let g = MsiGeometry {
            variant: MsiVariant::MovableBeamSplitter,
            cavity_length,
            pump_angular_frequency,
            mean_transmittance,
            round_trip_time: None,
        };
        g.validate()?;
        Ok(g)
    }

    /// Movable-mirror-variant geometry with validated invariants.
    pub fn movable_mirror(
        cavity_length: f64,
        pump_angular_frequency: f64,
        mean_transmittance: f64,
        reflectivity: f64,
        transmittance: f64,
    ) -> Result<Self> {
        let g = MsiGeometry {
            variant: MsiVariant::MovableMirror {
                reflectivity,
                transmittance,
            },
            cavity_length,
            pump_angular_frequency,
            mean_transmittance,
            round_trip_time: None,
        };
        g.validate()?;
        Ok(g)
    }

    /// Overrides the derived round-trip time.
    pub fn with_round_trip_time(mut self, tau: f64) -> Result<Self> {
        if !(tau > 0.0) {
            return Err(Error::Domain(format!("round_trip_time must be > 0, got {tau}")));
        }
        self.round_trip_time = Some(tau);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cavity_length > 0.0) {
            return Err(Error::Domain(format!(
                "cavity_length must be > 0, got {}",
                self.cavity_length
            )));
        }
        if !(self.pump_angular_frequency > 0.0) {
            return Err(Error::Domain(format!(
                "pump_angular_frequency must be > 0, got {}",
                self.pump_angular_frequency
            )));
        }
        let t = self.mean_transmittance;
        if !(t > 0.0) || t >= MAX_MEAN_TRANSMITTANCE {
            return Err(Error::Domain(format!(
                "mean_transmittance must lie in (0, {MAX_MEAN_TRANSMITTANCE}), got {t}"
            )));
        }
        if let MsiVariant::MovableMirror {
            reflectivity,
            transmittance,
        } = self.variant
        {
            if !(reflectivity > 0.0) || !(transmittance >= 0.0) {
                return Err(Error::Domain(
                    "mirror reflectivity must be > 0 and transmittance >= 0".into(),
                ));
            }
            let norm = reflectivity * reflectivity + transmittance * transmittance;
            if (norm - 1.0).abs() > 1e-12 {
                return Err(Error::Domain(format!(
                    "mirror amplitude coefficients must satisfy r^2 + t^2 = 1 \
                     within 1e-12, got {norm}"
                )));
            }
        }
        Ok(())
    }

    /// Round-trip time: the stored value, else 2L/c.
    pub fn round_trip(&self) -> f64 {
        self.round_trip_time
            .unwrap_or(2.0 * self.cavity_length / C_LIGHT)
    }

    /// Pump wavenumber k0 = omega_0 / c, 1/m.
    pub fn wavenumber(&self) -> f64 {
        self.pump_angular_frequency / C_LIGHT
    }
}

/// Coupling rates derived from a geometry: cavity half bandwidth plus the two
/// optomechanical coefficients.
#[derive(Debug, Clone, Copy)]
pub struct CouplingRates {
    /// Cavity half bandwidth gamma_0, 1/s.
    pub gamma0: f64,
    /// Dispersive coefficient xi, 1/m.
    pub xi: f64,
    /// Dissipative coefficient eta, 1/m.
    pub eta: f64,
}

/// Couplings for the movable-beam-splitter realization:
/// gamma_0 = T0^2/tau, xi = -1/(sqrt(2) L), eta = 2 sqrt(2) k0 / T0.
pub fn derive_bs_coupling(geometry: &MsiGeometry) -> Result<CouplingRates> {
    geometry.validate()?;
    if geometry.variant != MsiVariant::MovableBeamSplitter {
        return Err(Error::VariantMismatch {
            expected: "MovableBeamSplitter",
        });
    }
    let t0 = geometry.mean_transmittance;
    let gamma0 = t0 * t0 / geometry.round_trip();
    let xi = -1.0 / (std::f64::consts::SQRT_2 * geometry.cavity_length);
    let eta = 2.0 * std::f64::consts::SQRT_2 * geometry.wavenumber() / t0;
    Ok(CouplingRates { gamma0, xi, eta })
}

/// Couplings for the movable-partially-transmitting-mirror realization:
/// gamma_1 = r_M^2 T1^2/tau, xi_1 = -T1 t_M r_M / L, eta_1 = 4 k0 / T1.
pub fn derive_mirror_coupling(geometry: &MsiGeometry) -> Result<CouplingRates> {
    geometry.validate()?;
    let (r_m, t_m) = match geometry.variant {
        MsiVariant::MovableMirror {
            reflectivity,
            transmittance,
        } => (reflectivity, transmittance),
        _ => {
            return Err(Error::VariantMismatch {
                expected: "MovableMirror",
            })
        }
    };
    let t1 = geometry.mean_transmittance;
    let gamma0 = r_m * r_m * t1 * t1 / geometry.round_trip();
    let xi = -t1 * t_m * r_m / geometry.cavity_length;
    let eta = 4.0 * geometry.wavenumber() / t1;
    Ok(CouplingRates { gamma0, xi, eta })
}

/// Intracavity power for pump wavenumber `k` and test-mass displacement `y`:
///
/// ```text
/// I0 = T^2 I / (1 + R^2 + 2 R cos psi),   psi = pi + 2(k - k0) L + sqrt(2) k y
/// ```
///
/// The generalized-mirror coefficients follow the displaced element,
/// `T = sin(asin(T0) + sqrt(2) k y)`, `R = cos(...)`, and `omega_0` is taken
/// to sit on a cavity resonance so that `k = k0`, `y = 0` maximizes the
/// build-up at `T0^2 I / (1 - R0)^2`.
pub fn intracavity_power(
    k: f64,
    displacement: f64,
    geometry: &MsiGeometry,
    input_power: f64,
) -> Result<f64> {
    geometry.validate()?;
    if !(input_power >= 0.0) {
        return Err(Error::Domain(format!("input power must be >= 0, got {input_power}")));
    }
    let k0 = geometry.wavenumber();
    let phase_gm = geometry.mean_transmittance.asin() + std::f64::consts::SQRT_2 * k * displacement;
    let t = phase_gm.sin();
    let r = phase_gm.cos();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "generalized-mirror reflectivity left (0,1): R = {r}"
        )));
    }
    let psi = std::f64::consts::PI
        + 2.0 * (k - k0) * geometry.cavity_length
        + std::f64::consts::SQRT_2 * k * displacement;
    Ok(t * t * input_power / (1.0 + r * r + 2.0 * r * psi.cos()))
}

/// Linearized resonant frequency and half bandwidth at displacement `y`:
/// `omega_r = omega_0 (1 - y / (sqrt(2) L))`, `gamma = gamma_0 (1 + eta y)`.
///
/// The bandwidth slope uses the same small-transmittance reduction as the
/// coupling coefficients, so `d(gamma)/dy = gamma_0 * eta` exactly.
pub fn resonance_and_bandwidth(geometry: &MsiGeometry, displacement: f64) -> Result<(f64, f64)> {
    let rates = derive_bs_coupling(geometry)?;
    let omega_r = geometry.pump_angular_frequency
        * (1.0 - displacement / (std::f64::consts::SQRT_2 * geometry.cavity_length));
    let gamma = rates.gamma0 * (1.0 + rates.eta * displacement);
    Ok((omega_r, gamma))
}

/// Dimensional description of the pumped optomechanical system.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalParams {
    /// Test mass m, kg.
    pub mass: f64,
    /// Pump angular frequency omega_0, rad/s.
    pub pump_angular_frequency: f64,
    /// Cavity half bandwidth gamma_0, 1/s.
    pub half_bandwidth: f64,
    /// Dispersive coupling coefficient xi, 1/m.
    pub dispersive_coeff: f64,
    /// Dissipative coupling coefficient eta, 1/m.
    pub dissipative_coeff: f64,
    /// Input (pump) power, W.
    pub input_power: f64,
}

impl PhysicalParams {
    pub fn new(
        mass: f64,
        pump_angular_frequency: f64,
        half_bandwidth: f64,
        dispersive_coeff: f64,
        dissipative_coeff: f64,
        input_power: f64,
    ) -> Result<Self> {
        let p = PhysicalParams {
            mass,
            pump_angular_frequency,
            half_bandwidth,
            dispersive_coeff,
            dissipative_coeff,
            input_power,
        };
        p.validate()?;
        Ok(p)
    }

    /// Assembles the full parameter set from a geometry, dispatching on the
    /// variant for the coupling derivation.
    pub fn from_geometry(geometry: &MsiGeometry, mass: f64, input_power: f64) -> Result<Self> {
        let rates = match geometry.variant {
            MsiVariant::MovableBeamSplitter => derive_bs_coupling(geometry)?,
            MsiVariant::MovableMirror { .. } => derive_mirror_coupling(geometry)?,
        };
        PhysicalParams::new(
            mass,
            geometry.pump_angular_frequency,
            rates.gamma0,
            rates.xi,
            rates.eta,
            input_power,
        )
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("mass", self.mass),
            ("pump_angular_frequency", self.pump_angular_frequency),
            ("half_bandwidth", self.half_bandwidth),
            ("input_power", self.input_power),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !self.dispersive_coeff.is_finite() || !self.dissipative_coeff.is_finite() {
            return Err(Error::Domain("coupling coefficients must be finite".into()));
        }
        Ok(())
    }

    /// Mean input photon flux A^2 = I0 / (hbar omega_0), 1/s.
    pub fn photon_flux(&self) -> f64 {
        self.input_power / (HBAR * self.pump_angular_frequency)
    }
}

/// The reduced parameter set. All spectra are pure functions of these numbers.
///
/// `p_m` and `q_m` are the back-action strengths of the dissipative and
/// dispersive channels, `quality` is the cavity quality factor D, and
/// `coupling_ratio` g measures dissipative against dispersive coupling
/// (g = +inf flags a purely dissipative model). `x0` is the optical-spring
/// resonance and `delta_m` the spring viscosity magnitude, both in units of
/// the half bandwidth; they obey `delta_m = D sqrt(p_m q_m) = 2 x0^2`.
#[derive(Debug, Clone, Copy)]
pub struct DimensionlessModel {
    pub p_m: f64,
    pub q_m: f64,
    /// Cavity quality factor D = omega_0 / gamma_0.
    pub quality: f64,
    /// Coupling ratio g = sqrt(p_m / (q_m D^2)); +inf when q_m = 0.
    pub coupling_ratio: f64,
    /// Spring resonance x0 = Omega_0 / gamma_0 (magnitude).
    pub x0: f64,
    /// Spring viscosity magnitude delta_m = D sqrt(p_m q_m).
    pub delta_m: f64,
    /// Mean input photon flux A^2, 1/s (zero for synthetic models).
    pub photon_flux: f64,
    /// Half bandwidth gamma_0, 1/s, kept for re-dimensionalizing axes.
    pub gamma0: f64,
    /// True when xi*eta > 0: the rigidity is an anti-spring and `x0` stores
    /// the magnitude of the imaginary resonance.
    pub antispring: bool,
}

/// Reduces dimensional parameters to the dimensionless model:
/// `p_m = 8 hbar eta^2 A^2 / (m gamma_0^2)`,
/// `q_m = 32 hbar xi^2 A^2 / (m gamma_0^2)`, with A^2 the input photon flux.
pub fn reduce(params: &PhysicalParams) -> Result<DimensionlessModel> {
    params.validate()?;
    let xi = params.dispersive_coeff;
    let eta = params.dissipative_coeff;
    if xi == 0.0 && eta == 0.0 {
        return Err(Error::DegenerateModel);
    }
    let flux = params.photon_flux();
    let scale = HBAR * flux / (params.mass * params.half_bandwidth * params.half_bandwidth);
    let p_m = 8.0 * eta * eta * scale;
    let q_m = 32.0 * xi * xi * scale;
    let quality = params.pump_angular_frequency / params.half_bandwidth;
    let mut model =
        DimensionlessModel::from_parts(p_m, q_m, quality, params.half_bandwidth, flux)?;
    model.antispring = xi * eta > 0.0;
    Ok(model)
}

impl DimensionlessModel {
    /// Builds the model from the two back-action strengths.
    pub fn from_parts(
        p_m: f64,
        q_m: f64,
        quality: f64,
        gamma0: f64,
        photon_flux: f64,
    ) -> Result<Self> {
        if !(p_m >= 0.0) || !(q_m >= 0.0) {
            return Err(Error::Domain(format!("p_m and q_m must be >= 0, got {p_m}, {q_m}")));
        }
        if !(quality > 0.0) || !(gamma0 > 0.0) {
            return Err(Error::Domain(
                "quality factor and gamma0 must be > 0".into(),
            ));
        }
        if p_m == 0.0 && q_m == 0.0 {
            return Err(Error::DegenerateModel);
        }
        let coupling_ratio = if q_m == 0.0 {
            f64::INFINITY
        } else {
            (p_m / (q_m * quality * quality)).sqrt()
        };
        let delta_m = quality * (p_m * q_m).sqrt();
        let x0 = (delta_m / 2.0).sqrt();
        Ok(DimensionlessModel {
            p_m,
            q_m,
            quality,
            coupling_ratio,
            x0,
            delta_m,
            photon_flux,
            gamma0,
            antispring: false,
        })
    }

    /// Builds a combined-coupling model directly from (g, x0), the natural
    /// knobs for spectra: `p_m = 2 x0^2 g`, `q_m D^2 = 2 x0^2 / g`.
    pub fn from_g_x0(g: f64, x0: f64, quality: f64, gamma0: f64) -> Result<Self> {
        if !(g > 0.0) || !g.is_finite() {
            return Err(Error::Domain(format!("coupling ratio must be finite and > 0, got {g}")));
        }
        if !(x0 > 0.0) {
            return Err(Error::Domain(format!("x0 must be > 0, got {x0}")));
        }
        let p_m = 2.0 * x0 * x0 * g;
        let q_m = 2.0 * x0 * x0 / (g * quality * quality);
        DimensionlessModel::from_parts(p_m, q_m, quality, gamma0, 0.0)
    }

    /// q_m D^2, the combination entering every phase-quadrature expression.
    pub fn qm_d2(&self) -> f64 {
        self.q_m * self.quality * self.quality
    }

    /// Dimensional frequency for a dimensionless abscissa.
    pub fn omega(&self, x: f64) -> f64 {
        x * self.gamma0
    }

    /// Warnings about leaving the narrowband regime.
    pub fn regime_warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.x0 >= REGIME_X0_LIMIT {
            w.push(format!(
                "x0 = {:.3} exceeds the narrowband regime bound {REGIME_X0_LIMIT}; \
                 spectra are extrapolations",
                self.x0
            ));
        }
        if self.antispring {
            w.push("xi*eta > 0: rigidity is an anti-spring; x0 is the magnitude of an \
                    imaginary resonance"
                .into());
        }
        w
    }
}
