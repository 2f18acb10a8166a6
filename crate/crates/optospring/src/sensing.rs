//! Homodyne force sensing against the standard quantum limit: noise PSD
//! referred to the normalized signal force, extremal homodyne angles,
//! resonance minima, the narrowband detection width, and sub-SQL intervals.
//!
//! All PSDs are single-sided with vacuum = 1; a force-referred PSD of 1 is
//! the SQL. Homodyne angles are interpreted modulo pi and the tan-theta
//! quotients are rewritten in sin/cos so theta = pi/2 is an ordinary value.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{bisect_root, geometric_scan, ternary_min, BISECT_REL_TOL};
use crate::params::DimensionlessModel;

/// Force-referred noise PSD split into its quadrature contributions.
#[derive(Debug, Clone, Copy)]
pub struct ForcePsd {
    /// Total S_f = S_a1 + S_phi1.
    pub s_f: f64,
    /// Amplitude-quadrature contribution.
    pub s_a1: f64,
    /// Phase-quadrature contribution.
    pub s_phi1: f64,
}

/// Narrowband width of the sensitivity minimum.
#[derive(Debug, Clone, Copy)]
pub struct Bandwidth {
    /// Full width Gamma between the two crossings of twice the minimum, rad/s.
    pub gamma_rad_s: f64,
    /// Gamma / Omega_0.
    pub ratio_to_omega0: f64,
    /// Location of the minimum, dimensionless.
    pub x_min: f64,
    /// Value of the minimum.
    pub s_min: f64,
}

/// Maps angle into [0, pi).
pub fn normalize_angle(theta: f64) -> f64 {
    let mut a = theta % std::f64::consts::PI;
    if a < 0.0 {
        a += std::f64::consts::PI;
    }
    if a >= std::f64::consts::PI {
        a = 0.0;
    }
    a
}

/// Complex noise and signal gains of the detected quadrature
/// `a_1theta = a_1a cos(theta) + a_1phi sin(theta)`.
///
/// Returns `(gain from a_a, gain from a_phi, gain from f_s)` at dimensionless
/// frequency `x`. The common denominator is `(x0^2 - x^2) - i x delta_m`.
pub fn quadrature_transfer(
    x: f64,
    theta: f64,
    model: &DimensionlessModel,
) -> Result<(Complex64, Complex64, Complex64)> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "free-mass signal gain diverges at x = 0 (got x = {x})"
        )));
    }
    let (c, s) = (theta.cos(), theta.sin());
    let dd = model.x0 * model.x0 - x * x;
    let den = Complex64::new(dd, -x * model.delta_m);
    let g_a = Complex64::new(dd * c + model.qm_d2() * s, 0.0) / den;
    let g_phi = Complex64::new(-model.p_m * x * x * c + dd * s, 0.0) / den;
    let g_f = Complex64::new(
        -x * model.quality * (2.0 * model.q_m).sqrt() * s,
        -x * x * (2.0 * model.p_m).sqrt() * c,
    ) / den;
    Ok((g_a, g_phi, g_f))
}

/// Force-referred noise PSD at homodyne angle `theta`:
///
/// ```text
/// S_a1   = ((x0^2-x^2) cos t + Qm D^2 sin t)^2 / (2x^2 (x^2 Pm cos^2 t + Qm D^2 sin^2 t))
/// S_phi1 = ((x0^2-x^2) sin t - Pm x^2 cos t)^2 / (same denominator)
/// ```
///
/// Readouts that carry no signal (for example theta = 0 with Pm = 0) return
/// infinite force-referred noise.
pub fn force_noise_psd(x: f64, theta: f64, model: &DimensionlessModel) -> Result<ForcePsd> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "force-referred PSD diverges at x = 0 (got x = {x})"
        )));
    }
    let (c, s) = (theta.cos(), theta.sin());
    let dd = model.x0 * model.x0 - x * x;
    let qm_d2 = model.qm_d2();
    let den = 2.0 * x * x * (x * x * model.p_m * c * c + qm_d2 * s * s);
    let num_a = dd * c + qm_d2 * s;
    let num_phi = dd * s - model.p_m * x * x * c;
    let s_a1 = num_a * num_a / den;
    let s_phi1 = num_phi * num_phi / den;
    Ok(ForcePsd {
        s_f: s_a1 + s_phi1,
        s_a1,
        s_phi1,
    })
}

/// Homodyne angles extremizing S_f at the fixed frequency `x_c`:
/// `tan theta_1 = -(x0^2 - x_c^2)/(Qm D^2)` cancels the amplitude-quadrature
/// noise, `tan theta_2 = Pm x_c^2/(x0^2 - x_c^2)` cancels the phase-quadrature
/// noise. Both returned in [0, pi); `x_c = x0` yields exactly (0, pi/2).
pub fn extremal_angles(x_c: f64, model: &DimensionlessModel) -> Result<(f64, f64)> {
    if !(x_c > 0.0) {
        return Err(Error::Domain(format!("x_c must be > 0, got {x_c}")));
    }
    let dd = model.x0 * model.x0 - x_c * x_c;
    let theta1 = normalize_angle((-dd).atan2(model.qm_d2()));
    let theta2 = normalize_angle((model.p_m * x_c * x_c).atan2(dd));
    Ok((theta1, theta2))
}

/// Closed-form minima at the spring resonance:
/// `S_f(x0, 0) = Pm/2` and `S_f(x0, pi/2) = Qm D^2 / (2 x0^2) = 1/g`.
/// Their product is always `x0^2`.
pub fn resonance_minima(model: &DimensionlessModel) -> Result<(f64, f64)> {
    if !(model.x0 > 0.0) {
        return Err(Error::Domain(
            "resonance minima need an optical spring (x0 > 0)".into(),
        ));
    }
    let s_theta0 = model.p_m / 2.0;
    let s_theta_pi2 = model.qm_d2() / (2.0 * model.x0 * model.x0);
    Ok((s_theta0, s_theta_pi2))
}

/// Width Gamma of the sensitivity minimum, defined by
/// `S_f(Omega_0 +/- Gamma/2) = 2 S_f_min`. The minimum is located on a
/// geometric scan of `[x0/10, 10 x0]` and the two crossings are refined by
/// bisection.
pub fn detection_bandwidth(model: &DimensionlessModel, theta: f64) -> Result<Bandwidth> {
    if !(model.x0 > 0.0) {
        return Err(Error::BandwidthUndefined(
            "no optical spring (x0 = 0)".into(),
        ));
    }
    let sf = |x: f64| {
        force_noise_psd(x, theta, model)
            .map(|p| p.s_f)
            .unwrap_or(f64::INFINITY)
    };
    let lo = model.x0 / 10.0;
    let hi = model.x0 * 10.0;
    let grid = geometric_scan(lo, hi);
    let (i_min, _) = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| (i, sf(x)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty scan");
    if i_min == 0 || i_min == grid.len() - 1 {
        return Err(Error::BandwidthUndefined(format!(
            "no interior minimum of S_f in [{lo:e}, {hi:e}] at theta = {theta}"
        )));
    }
    let (x_min, s_min) = ternary_min(sf, grid[i_min - 1], grid[i_min + 1]);
    let target = 2.0 * s_min;
    let excess = |x: f64| sf(x) - target;

    let right = grid[i_min..]
        .windows(2)
        .find(|w| w[0] >= x_min && excess(w[0]) < 0.0 && excess(w[1]) >= 0.0)
        .and_then(|w| bisect_root(excess, w[0], w[1], BISECT_REL_TOL));
    let left = grid[..=i_min]
        .windows(2)
        .rev()
        .find(|w| w[1] <= x_min && excess(w[1]) < 0.0 && excess(w[0]) >= 0.0)
        .and_then(|w| bisect_root(excess, w[0], w[1], BISECT_REL_TOL));
    match (left, right) {
        (Some(xl), Some(xr)) => Ok(Bandwidth {
            gamma_rad_s: (xr - xl) * model.gamma0,
            ratio_to_omega0: (xr - xl) / model.x0,
            x_min,
            s_min,
        }),
        _ => Err(Error::BandwidthUndefined(format!(
            "no crossing of 2*S_min = {target:e} on both sides of x = {x_min:e}"
        ))),
    }
}

/// Maximal sub-SQL intervals of `S_f(x, theta) < 1` on `grid`, endpoints
/// refined by bisection to 1e-6 relative. Intervals are clipped to the grid.
pub fn sql_crossings(model: &DimensionlessModel, theta: f64, grid: &[f64]) -> Vec<(f64, f64)> {
    let excess = |x: f64| {
        force_noise_psd(x, theta, model)
            .map(|p| p.s_f - 1.0)
            .unwrap_or(f64::INFINITY)
    };
    let mut intervals = Vec::new();
    let mut start: Option<f64> = None;
    for w in grid.windows(2) {
        let (e0, e1) = (excess(w[0]), excess(w[1]));
        if e0 >= 0.0 && e1 < 0.0 {
            let x = bisect_root(excess, w[0], w[1], 1e-6).unwrap_or(w[1]);
            start = Some(x);
        } else if e0 < 0.0 && e1 >= 0.0 {
            let x = bisect_root(excess, w[0], w[1], 1e-6).unwrap_or(w[0]);
            intervals.push((start.take().unwrap_or(grid[0]), x));
        }
    }
    if let Some(s) = start {
        intervals.push((s, *grid.last().unwrap()));
    } else if !grid.is_empty() && excess(grid[0]) < 0.0 && intervals.is_empty() {
        intervals.push((grid[0], *grid.last().unwrap()));
    }
    intervals
}
