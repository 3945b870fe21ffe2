//! Physical constants and unit conventions.
//!
//! All energies are in meV and all times in ps. A term with energy `E`
//! oscillates as `exp(i (E / ħ) t)`, so `E / HBAR_MEV_PS` is an angular
//! frequency in rad/ps.

/// Reduced Planck constant in meV·ps.
pub const HBAR_MEV_PS: f64 = 0.6582119569;
