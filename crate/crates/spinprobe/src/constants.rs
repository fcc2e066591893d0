//! Physical constants (CODATA 2018) and default NV-center parameters.
//!
//! All values are SI. Angular frequencies are rad/s throughout the crate;
//! user-facing unit conversions happen only at the scenario boundary.

use std::f64::consts::TAU;

/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Vacuum permittivity (F/m).
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Elementary charge (C). Used to convert the optical gap from eV.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Relative permittivity of diamond at the NV site.
///
/// The effective-field formulas take the permittivity of the host medium;
/// 5.7 is the usual compromise between the static and optical values
/// (n = 2.39 at 800 nm). Scenario files can override it.
pub const EPSILON_R_DIAMOND: f64 = 5.7;

/// NV excited-state spin-orbit coupling lambda_z (rad/s).
pub const NV_LAMBDA_Z: f64 = TAU * 5.5e9;

/// NV excited-state spin-spin zero-field splitting Delta_es (rad/s).
pub const NV_DELTA_ES: f64 = TAU * 1.42e9 / 3.0;

/// NV ground-state zero-field splitting Delta_GS (rad/s).
///
/// The standard textbook value; enters only through the m = 0 detunings.
pub const NV_DELTA_GS: f64 = TAU * 2.87e9;

/// NV optical gap (rad/s), from the zero-phonon line at 1.945 eV (~637 nm).
pub const NV_OMEGA_GE: f64 = 1.945 * ELEMENTARY_CHARGE / HBAR;

/// NV gyromagnetic ratio (rad s^-1 T^-1), from gamma = 2.8 MHz/G.
pub const NV_GAMMA: f64 = TAU * 2.8e10;

/// NV triplet excited-state lifetime (s).
pub const NV_TAU: f64 = 15e-9;

/// Default axial bias field (T) splitting the |+-1> levels.
pub const NV_B_BIAS: f64 = 1.1e-3;

/// Default alignment angle between the NV axis and the beam axis (rad),
/// the value for a (100)-cut diamond.
pub const NV_PHI: f64 = 54.7 * std::f64::consts::PI / 180.0;

/// Near-resonance guard: detunings below this multiple of the decay rate
/// invalidate the virtual-transition model.
pub const DETUNING_GUARD_FACTOR: f64 = 10.0;
