//! Fixed physical constants (CODATA 2018).

/// Speed of light in vacuum, m/s.
pub const C_LIGHT: f64 = 2.997_924_58e8;

/// Reduced Planck constant, J*s.
pub const HBAR: f64 = 1.054_571_817e-34;
