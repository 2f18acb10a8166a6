//! Frequency grids and the common spectrum container.

use crate::error::{Error, Result};

/// One named PSD channel on a shared grid.
#[derive(Debug, Clone)]
pub struct Channel {
    pub name: String,
    pub values: Vec<f64>,
}

/// Frequency grid plus named PSD channels and normalization metadata.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// Dimensionless abscissa x = Omega / gamma_0.
    pub x: Vec<f64>,
    /// Dimensional abscissa, rad/s.
    pub omega_rad_s: Vec<f64>,
    pub channels: Vec<Channel>,
    /// Normalization convention of every PSD channel.
    pub normalization: &'static str,
    /// Regime or conditioning warnings attached to this evaluation.
    pub warnings: Vec<String>,
}

impl SpectrumResult {
    pub fn channel(&self, name: &str) -> Option<&[f64]> {
        self.channels
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.values.as_slice())
    }
}

/// Logarithmic grid with `n` points from `min` to `max` inclusive.
pub fn log_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if !(min > 0.0) || !(max > min) || n < 2 {
        return Err(Error::Domain(format!(
            "log grid needs 0 < min < max and n >= 2, got [{min}, {max}] x {n}"
        )));
    }
    let (l0, l1) = (min.ln(), max.ln());
    let step = (l1 - l0) / (n - 1) as f64;
    Ok((0..n).map(|i| (l0 + step * i as f64).exp()).collect())
}

/// Linear grid with `n` points from `min` to `max` inclusive.
pub fn lin_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if !(max > min) || n < 2 {
        return Err(Error::Domain(format!(
            "linear grid needs min < max and n >= 2, got [{min}, {max}] x {n}"
        )));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n).map(|i| min + step * i as f64).collect())
}
