//! Ponderomotive squeezing of the output light.
//!
//! For combined coupling with a resonant pump the output quadrature PSD at
//! homodyne angle theta takes the form
//!
//! ```text
//! S_theta(x) = (W + U cos 2theta + V sin 2theta) / denom
//! denom      = (x0^2 - x^2)^2 + 4 x^2 x0^4
//! ```
//!
//! with `W`, `U`, `V` functions of (x, x0, g) only. The lossless model is
//! minimum-uncertainty: `W^2 - U^2 - V^2 = denom^2` identically, so the
//! extremal PSDs over theta multiply to one.

use crate::error::{Error, Result};
use crate::params::DimensionlessModel;
use crate::sensing::normalize_angle;
use crate::spectrum::{Channel, SpectrumResult};

/// The three angle-decomposition coefficients and the shared denominator.
#[derive(Debug, Clone, Copy)]
pub struct WuvTriple {
    pub w: f64,
    pub u: f64,
    pub v: f64,
    pub denom: f64,
}

/// Extremal output PSDs over the homodyne angle at one frequency.
#[derive(Debug, Clone, Copy)]
pub struct MinMax {
    pub s_min: f64,
    pub s_max: f64,
    /// `s_min * s_max`; equals 1 for the lossless model.
    pub product: f64,
}

/// Optimal homodyne angle at a fixed frequency, or the flag that every angle
/// gives the same PSD (the coherent point).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimalAngle {
    Angle(f64),
    Indifferent,
}

fn check_combined(model: &DimensionlessModel) -> Result<(f64, f64)> {
    let g = model.coupling_ratio;
    if !(g > 0.0) || !g.is_finite() {
        return Err(Error::PureCoupling(format!(
            "output squeezing formulas need finite g > 0 (got g = {g}); \
             use the pure-coupling limits instead"
        )));
    }
    if !(model.x0 > 0.0) {
        return Err(Error::PureCoupling(
            "output squeezing formulas need an optical spring (x0 > 0)".into(),
        ));
    }
    Ok((g, model.x0))
}

/// W, U, V and the denominator at dimensionless frequency `x >= 0`.
pub fn wuv(x: f64, model: &DimensionlessModel) -> Result<WuvTriple> {
    let (g, x0) = check_combined(model)?;
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("x must be >= 0, got {x}")));
    }
    let x0sq = x0 * x0;
    let x0q = x0sq * x0sq;
    let xsq = x * x;
    let xq = xsq * xsq;
    let dd = x0sq - xsq;
    let w = dd * dd + 2.0 * x0q / (g * g) + 2.0 * xq * x0q * g * g;
    let u = 2.0 * x0q * (xq * g * g - 1.0 / (g * g));
    let v = 2.0 * x0sq * dd * (1.0 / g - xsq * g);
    let denom = dd * dd + 4.0 * xsq * x0q;
    Ok(WuvTriple { w, u, v, denom })
}

/// Output-quadrature PSD at homodyne angle `theta`; vacuum = 1, values below
/// one are squeezed.
pub fn output_quadrature_psd(x: f64, theta: f64, model: &DimensionlessModel) -> Result<f64> {
    let t = wuv(x, model)?;
    Ok((t.w + t.u * (2.0 * theta).cos() + t.v * (2.0 * theta).sin()) / t.denom)
}

/// Angle minimizing S_theta at `x_c`:
/// `cos 2theta = -U_c/sqrt(U_c^2+V_c^2)`, `sin 2theta = -V_c/sqrt(...)`.
pub fn optimal_angle_at(x_c: f64, model: &DimensionlessModel) -> Result<OptimalAngle> {
    let t = wuv(x_c, model)?;
    let r = t.u.hypot(t.v);
    if r == 0.0 {
        return Ok(OptimalAngle::Indifferent);
    }
    let theta = 0.5 * (-t.v).atan2(-t.u);
    Ok(OptimalAngle::Angle(normalize_angle(theta)))
}

/// Fixed-homodyne squeezing curve: the angle is optimized at `x_c` once and
/// held across the whole grid,
/// `S(x) = (W - (U U_c + V V_c)/sqrt(U_c^2+V_c^2)) / denom`.
///
/// Channels: `s_theta`, `s_min`, `s_max`, `theta_used`.
pub fn optimal_psd_curve(
    x_c: f64,
    grid: &[f64],
    model: &DimensionlessModel,
) -> Result<SpectrumResult> {
    let tc = wuv(x_c, model)?;
    let rc = tc.u.hypot(tc.v);
    let mut warnings = model.regime_warnings();
    let theta = match optimal_angle_at(x_c, model)? {
        OptimalAngle::Angle(t) => t,
        OptimalAngle::Indifferent => {
            warnings.push(format!(
                "angle-indifferent at x_c = {x_c}: output is coherent there; using theta = 0"
            ));
            0.0
        }
    };
    let n = grid.len();
    let mut s_theta = Vec::with_capacity(n);
    let mut s_min = Vec::with_capacity(n);
    let mut s_max = Vec::with_capacity(n);
    for &x in grid {
        let t = wuv(x, model)?;
        let s = if rc == 0.0 {
            (t.w + t.u) / t.denom
        } else {
            (t.w - (t.u * tc.u + t.v * tc.v) / rc) / t.denom
        };
        s_theta.push(s);
        let r = t.u.hypot(t.v);
        s_min.push((t.w - r) / t.denom);
        s_max.push((t.w + r) / t.denom);
        if x >= crate::params::REGIME_X0_LIMIT && warnings.len() < 2 {
            warnings.push(format!(
                "grid reaches x = {x:.3}, past the narrowband regime bound"
            ));
        }
    }
    Ok(SpectrumResult {
        omega_rad_s: grid.iter().map(|&x| model.omega(x)).collect(),
        x: grid.to_vec(),
        channels: vec![
            Channel {
                name: "s_theta".into(),
                values: s_theta,
            },
            Channel {
                name: "s_min".into(),
                values: s_min,
            },
            Channel {
                name: "s_max".into(),
                values: s_max,
            },
            Channel {
                name: "theta_used".into(),
                values: vec![theta; n],
            },
        ],
        normalization: "single-sided, vacuum = 1",
        warnings,
    })
}

/// Frequency-independent squeezing floor far below the spring resonance:
/// `(sqrt(1+g^2) - 1)/(sqrt(1+g^2) + 1) = g^2/4 - g^4/8 + ...`.
pub fn low_freq_limit(g: f64) -> f64 {
    let s = (1.0 + g * g).sqrt();
    (s - 1.0) / (s + 1.0)
}

/// Low-frequency squeezing of dispersive coupling with a detuned pump,
/// `S ~ (Delta/gamma_0)^2`; equals the combined-coupling floor to leading
/// order when `Delta/gamma_0 = g/2`.
pub fn dispersive_reference(detuning_ratio: f64) -> f64 {
    detuning_ratio * detuning_ratio
}

/// Extremal PSDs over theta at one frequency:
/// `S_min/max = (W -/+ sqrt(U^2+V^2)) / denom` (note `S_min <= 1 <= S_max`).
pub fn squeeze_minmax(x: f64, model: &DimensionlessModel) -> Result<MinMax> {
    let t = wuv(x, model)?;
    let r = t.u.hypot(t.v);
    let s_min = (t.w - r) / t.denom;
    let s_max = (t.w + r) / t.denom;
    Ok(MinMax {
        s_min,
        s_max,
        product: s_min * s_max,
    })
}

/// Squeezing in decibels; negative values are squeezed.
pub fn to_db(s: f64) -> f64 {
    10.0 * s.log10()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::log_grid;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const PI: f64 = std::f64::consts::PI;

    fn combined(g: f64, x0: f64) -> DimensionlessModel {
        DimensionlessModel::from_g_x0(g, x0, 1.2575e11, 1.499e4).unwrap()
    }

    fn random_gx0(rng: &mut StdRng) -> (f64, f64) {
        (
            10f64.powf(rng.random_range(-1.0..1.3)),
            10f64.powf(rng.random_range(-2.0..-1.0)),
        )
    }

    #[test]
    fn v_vanishes_on_resonance() {
        let model = combined(0.2, 0.05);
        let t = wuv(model.x0, &model).unwrap();
        assert_eq!(t.v, 0.0);
    }

    #[test]
    fn u_is_negative_for_weak_ratio_on_resonance() {
        // U(x0) = 2 x0^4 (x0^4 g^2 - 1/g^2) < 0 whenever g << 1/x0.
        let model = combined(0.2, 0.05);
        let t = wuv(model.x0, &model).unwrap();
        assert!(t.u < 0.0);
    }

    #[test]
    fn minimum_uncertainty_identity() {
        // W^2 - U^2 - V^2 = denom^2, checked over a wide random sample.
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..100_000 {
            let (g, x0) = random_gx0(&mut rng);
            let model = combined(g, x0);
            let x = x0 * 10f64.powf(rng.random_range(-1.5..1.5));
            let t = wuv(x, &model).unwrap();
            let lhs = t.w * t.w - t.u * t.u - t.v * t.v;
            let rhs = t.denom * t.denom;
            assert!(
                (lhs / rhs - 1.0).abs() <= 1e-9,
                "identity broken at g={g}, x0={x0}, x={x}: {lhs:e} vs {rhs:e}"
            );
        }
    }

    #[test]
    fn resonance_extremes_match_closed_forms() {
        let model = combined(0.2, 0.05);
        let x0 = model.x0;
        let g = model.coupling_ratio;
        let s_amp = output_quadrature_psd(x0, 0.0, &model).unwrap();
        assert!((s_amp / (x0 * x0 * g * g) - 1.0).abs() <= 1e-12, "S_a = {s_amp:e}");
        let s_ph = output_quadrature_psd(x0, PI / 2.0, &model).unwrap();
        assert!((s_ph * (g * g * x0 * x0) - 1.0).abs() <= 1e-12, "S_phi = {s_ph:e}");
    }

    #[test]
    fn coherent_point_is_angle_indifferent() {
        let model = combined(20.0, 0.05);
        for theta in [0.0, 0.3, PI / 2.0, 2.0] {
            let s = output_quadrature_psd(model.x0, theta, &model).unwrap();
            assert!((s - 1.0).abs() <= 1e-12, "S({theta}) = {s}");
        }
        assert_eq!(
            optimal_angle_at(model.x0, &model).unwrap(),
            OptimalAngle::Indifferent
        );
        let mm = squeeze_minmax(model.x0, &model).unwrap();
        assert!((mm.s_min - 1.0).abs() <= 1e-12 && (mm.s_max - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn optimal_angle_orientation_follows_the_ratio() {
        let weak = combined(0.2, 0.05);
        match optimal_angle_at(weak.x0, &weak).unwrap() {
            OptimalAngle::Angle(t) => assert!(t.min(PI - t) < 1e-12, "theta = {t}"),
            OptimalAngle::Indifferent => panic!("unexpected indifference"),
        }
        let strong = combined(2000.0, 0.05);
        match optimal_angle_at(strong.x0, &strong).unwrap() {
            OptimalAngle::Angle(t) => assert!((t - PI / 2.0).abs() < 1e-12, "theta = {t}"),
            OptimalAngle::Indifferent => panic!("unexpected indifference"),
        }
    }

    #[test]
    fn optimal_angle_beats_a_dense_scan() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..20 {
            let (g, x0) = random_gx0(&mut rng);
            let model = combined(g, x0);
            let x_c = x0 * 10f64.powf(rng.random_range(-0.5..0.5));
            let best = match optimal_angle_at(x_c, &model).unwrap() {
                OptimalAngle::Angle(t) => output_quadrature_psd(x_c, t, &model).unwrap(),
                OptimalAngle::Indifferent => continue,
            };
            for i in 0..10_000 {
                let theta = PI * i as f64 / 10_000.0;
                let s = output_quadrature_psd(x_c, theta, &model).unwrap();
                assert!(s >= best - 1e-10, "theta = {theta}: {s:e} < {best:e}");
            }
        }
    }

    #[test]
    fn fixed_angle_curve_matches_pointwise_evaluation() {
        let model = combined(0.2, 0.05);
        for x_c in [0.5 * model.x0, 1.5 * model.x0] {
            let grid = log_grid(model.x0 / 30.0, model.x0 * 30.0, 400).unwrap();
            let curve = optimal_psd_curve(x_c, &grid, &model).unwrap();
            let theta = curve.channel("theta_used").unwrap()[0];
            let s = curve.channel("s_theta").unwrap();
            for (i, &x) in grid.iter().enumerate() {
                let direct = output_quadrature_psd(x, theta, &model).unwrap();
                assert!(
                    (s[i] / direct - 1.0).abs() <= 1e-12,
                    "x = {x}: curve {} vs direct {direct}",
                    s[i]
                );
            }
            // Squeezing dip near the chosen frequency.
            let i_c = grid.iter().position(|&x| x >= x_c).unwrap();
            assert!(s[i_c] < 1.0, "no dip at x_c = {x_c}: S = {}", s[i_c]);
        }
    }

    #[test]
    fn per_frequency_envelope_bounds_fixed_angle_curves() {
        let model = combined(0.2, 0.05);
        let x_c = 0.7 * model.x0;
        let mut grid = log_grid(model.x0 / 10.0, model.x0 * 10.0, 300).unwrap();
        grid.push(x_c);
        grid.sort_by(f64::total_cmp);
        let curve = optimal_psd_curve(x_c, &grid, &model).unwrap();
        let s = curve.channel("s_theta").unwrap();
        let s_min = curve.channel("s_min").unwrap();
        for (i, &x) in grid.iter().enumerate() {
            assert!(s[i] >= s_min[i] - 1e-10 * s_min[i].abs().max(1.0));
            if x == x_c {
                assert!(
                    (s[i] / s_min[i] - 1.0).abs() <= 1e-9,
                    "fixed-angle curve should touch the envelope at x_c"
                );
            }
        }
    }

    #[test]
    fn low_frequency_floor_value() {
        let s = low_freq_limit(0.2);
        assert!((s / 9.8045e-3 - 1.0).abs() <= 1e-3, "S = {s:e}");
        // Leading order g^2/4 with O(g^2) relative Taylor error.
        for g in [1e-3, 1e-2, 0.05, 0.1] {
            let rel = (low_freq_limit(g) / (g * g / 4.0) - 1.0).abs();
            assert!(rel <= 0.51 * g * g + 1e-12, "g = {g}: rel = {rel:e}");
        }
    }

    #[test]
    fn low_frequency_floor_matches_full_psd() {
        let model = combined(0.2, 0.05);
        let x = 1e-3 * model.x0;
        let s = match optimal_angle_at(x, &model).unwrap() {
            OptimalAngle::Angle(t) => output_quadrature_psd(x, t, &model).unwrap(),
            OptimalAngle::Indifferent => panic!(),
        };
        assert!(
            (s / low_freq_limit(model.coupling_ratio) - 1.0).abs() <= 1e-4,
            "S = {s:e}"
        );
    }

    #[test]
    fn dispersive_reference_equality_point() {
        assert_eq!(dispersive_reference(0.1), 0.01);
        assert_eq!(dispersive_reference(0.0), 0.0);
        let g = 0.2f64;
        // Delta/gamma_0 = g/2 reproduces the leading-order combined floor.
        let disp = dispersive_reference(g / 2.0);
        assert_eq!(disp, g * g / 4.0);
        assert!((low_freq_limit(g) / disp - 1.0).abs() < g * g);
    }

    #[test]
    fn minmax_product_is_unity() {
        let mut rng = StdRng::seed_from_u64(43);
        for _ in 0..2000 {
            let (g, x0) = random_gx0(&mut rng);
            let model = combined(g, x0);
            let x = x0 * 10f64.powf(rng.random_range(-1.5..1.5));
            let mm = squeeze_minmax(x, &model).unwrap();
            assert!((mm.product - 1.0).abs() <= 1e-9, "product = {:e}", mm.product);
            assert!(mm.s_min <= 1.0 + 1e-12 && mm.s_max >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn resonance_minmax_product() {
        let model = combined(0.2, 0.05);
        let mm = squeeze_minmax(model.x0, &model).unwrap();
        let x0g = model.x0 * model.coupling_ratio;
        assert!((mm.s_min / (x0g * x0g) - 1.0).abs() <= 1e-9);
        assert!((mm.s_max * (x0g * x0g) - 1.0).abs() <= 1e-9);
        assert!((mm.product - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn pure_coupling_models_are_rejected() {
        let dissipative =
            DimensionlessModel::from_parts(1e-3, 0.0, 1.2575e11, 1.499e4, 1e17).unwrap();
        assert!(matches!(
            wuv(0.05, &dissipative),
            Err(Error::PureCoupling(_))
        ));
        let dispersive =
            DimensionlessModel::from_parts(0.0, 3.2e-23, 1.2575e11, 1.499e4, 1e17).unwrap();
        assert!(matches!(wuv(0.05, &dispersive), Err(Error::PureCoupling(_))));
    }

    #[test]
    fn regime_warning_appears_for_wide_grids() {
        let model = combined(0.2, 0.05);
        let grid = log_grid(0.01, 0.6, 50).unwrap();
        let curve = optimal_psd_curve(0.05, &grid, &model).unwrap();
        assert!(curve.warnings.iter().any(|w| w.contains("narrowband")));
    }

    #[test]
    fn db_convention() {
        assert!((to_db(0.01) + 20.0).abs() < 1e-12);
        assert_eq!(to_db(1.0), 0.0);
    }
}
