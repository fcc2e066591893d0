//! Symmetric slab waveguide: TE/TM dispersion and mode profiles.
//!
//! Geometry: core |z| <= a, cladding |z| > a, propagation along +x. A pure
//! TE mode is linearly polarized along y everywhere, so its electric-only
//! spin density vanishes identically; transverse spin requires TM (or
//! hybrid) content. The scenario layer therefore superposes a TE0 profile
//! with a phase-shifted TM profile to generate nonzero spin density near
//! the slab.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, TAU};

use crate::constants::{EPSILON_0, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Symmetric slab parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabParams {
    pub n_core: f64,
    pub n_clad: f64,
    /// Core half-thickness (m).
    pub half_thickness: f64,
    /// Vacuum wavelength (m).
    pub wavelength: f64,
    /// Mode order (0 for the fundamental even mode).
    pub mode_order: usize,
    /// Field amplitude scale (V/m).
    pub amplitude: f64,
}

/// Mode polarization of a slab solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlabPolarization {
    Te,
    Tm,
}

/// A solved slab mode: effective index plus the transverse parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabMode {
    pub n_eff: f64,
    /// Normalized transverse phase parameter u = k_x a.
    pub u: f64,
    /// Normalized decay parameter w = kappa a.
    pub w: f64,
    pub order: usize,
    pub polarization: SlabPolarization,
}

impl SlabParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.n_clad >= 1.0) {
            return Err(Error::validation("slab.n_clad", "must be >= 1"));
        }
        if !(self.n_core > self.n_clad) {
            return Err(Error::validation("slab.n_core", "must exceed n_clad"));
        }
        if !(self.half_thickness > 0.0) {
            return Err(Error::validation("slab.half_thickness", "must be > 0"));
        }
        if !(self.wavelength > 0.0) {
            return Err(Error::validation("slab.wavelength", "must be > 0"));
        }
        Ok(())
    }

    pub fn k0(&self) -> f64 {
        TAU / self.wavelength
    }

    pub fn omega(&self) -> f64 {
        TAU * SPEED_OF_LIGHT / self.wavelength
    }

    /// Normalized frequency V = k0 a sqrt(n_core^2 - n_clad^2).
    pub fn v_number(&self) -> f64 {
        self.k0() * self.half_thickness * (self.n_core.powi(2) - self.n_clad.powi(2)).sqrt()
    }
}

/// Transcendental residual for mode order `m` at transverse phase `u`.
///
/// Even orders: u tan(u) - eta w; odd orders: -u cot(u) - eta w, with
/// eta = 1 for TE and (n_core/n_clad)^2 for TM and w = sqrt(V^2 - u^2).
fn characteristic(u: f64, v: f64, order: usize, eta: f64) -> f64 {
    let w = (v * v - u * u).max(0.0).sqrt();
    if order.is_multiple_of(2) {
        u * u.tan() - eta * w
    } else {
        -u / u.tan() - eta * w
    }
}

fn solve_slab_dispersion(slab: &SlabParams, pol: SlabPolarization) -> Result<SlabMode> {
    slab.validate()?;
    let v = slab.v_number();
    let m = slab.mode_order;
    let cutoff = m as f64 * FRAC_PI_2;
    if v <= cutoff {
        return Err(Error::NoGuidedMode { order: m, v_number: v });
    }
    let eta = match pol {
        SlabPolarization::Te => 1.0,
        SlabPolarization::Tm => (slab.n_core / slab.n_clad).powi(2),
    };

    // One branch of tan per mode: the root is bracketed inside
    // (m pi/2, min((m+1) pi/2, V)).
    let mut lo = cutoff + 1e-9 * (1.0 + cutoff);
    let mut hi = ((m as f64 + 1.0) * FRAC_PI_2) * (1.0 - 1e-14);
    if v < hi {
        hi = v;
    }
    let f_lo = characteristic(lo, v, m, eta);
    let f_hi = characteristic(hi, v, m, eta);
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::NoRootInBracket { v_number: v });
    }

    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        let f_mid = characteristic(mid, v, m, eta);
        if f_mid == 0.0 {
            break;
        }
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        let next = 0.5 * (lo + hi);
        if next == mid || next == lo || next == hi {
            mid = next;
            break;
        }
        mid = next;
    }

    let u = mid;
    let w = (v * v - u * u).max(0.0).sqrt();
    let kx = u / slab.half_thickness;
    let n_eff = (slab.n_core.powi(2) - (kx / slab.k0()).powi(2)).sqrt();
    Ok(SlabMode { n_eff, u, w, order: m, polarization: pol })
}

/// Solve the TE dispersion relation for the configured mode order.
pub fn solve_slab_te_dispersion(slab: &SlabParams) -> Result<SlabMode> {
    solve_slab_dispersion(slab, SlabPolarization::Te)
}

/// Solve the TM dispersion relation for the configured mode order.
pub fn solve_slab_tm_dispersion(slab: &SlabParams) -> Result<SlabMode> {
    solve_slab_dispersion(slab, SlabPolarization::Tm)
}

/// Transverse profile value and derivative factor for the scalar function
/// f(z): cos/sin inside the core, matched exponential tails outside.
/// Returns (f, f') at z.
fn profile(mode: &SlabMode, a: f64, z: f64) -> (f64, f64) {
    let kx = mode.u / a;
    let kappa = mode.w / a;
    let even = mode.order.is_multiple_of(2);
    if z.abs() <= a {
        if even {
            ((kx * z).cos(), -kx * (kx * z).sin())
        } else {
            ((kx * z).sin(), kx * (kx * z).cos())
        }
    } else {
        let sign = if z > 0.0 || even { 1.0 } else { -1.0 };
        let edge = if even { mode.u.cos() } else { mode.u.sin() };
        let tail = (-kappa * (z.abs() - a)).exp();
        let f = sign * edge * tail;
        let df = -kappa * z.signum() * f;
        (f, df)
    }
}

/// TE mode electric field at `r`: E = y_hat E0 f(z) exp(i beta x).
pub fn slab_te_mode_field(slab: &SlabParams, mode: &SlabMode, r: Vec3) -> ComplexVec3 {
    let beta = mode.n_eff * slab.k0();
    let (f, _) = profile(mode, slab.half_thickness, r.z);
    let phase = Complex64::from_polar(1.0, beta * r.x);
    ComplexVec3::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(slab.amplitude * f, 0.0) * phase,
        Complex64::new(0.0, 0.0),
    )
}

/// TM mode electric field at `r`, derived from H_y = f(z) exp(i beta x):
///
/// ```text
/// E_x = -i f'(z) / (omega eps0 n^2) exp(i beta x)
/// E_z = -beta f(z) / (omega eps0 n^2) exp(i beta x)
/// ```
///
/// normalized so |E| = E0 on the core axis for even modes (at the core
/// edge for odd modes), making TE/TM mixing ratios meaningful.
pub fn slab_tm_mode_field(slab: &SlabParams, mode: &SlabMode, r: Vec3) -> ComplexVec3 {
    let a = slab.half_thickness;
    let beta = mode.n_eff * slab.k0();
    let omega = slab.omega();
    let n_sq = if r.z.abs() <= a { slab.n_core.powi(2) } else { slab.n_clad.powi(2) };

    let (f, df) = profile(mode, a, r.z);
    let scale = 1.0 / (omega * EPSILON_0 * n_sq);
    // reference magnitude: |E| of the unnormalized profile at its core peak
    let norm = beta / (omega * EPSILON_0 * slab.n_core.powi(2));
    let phase = Complex64::from_polar(slab.amplitude / norm, beta * r.x);

    let ex = Complex64::new(0.0, -df * scale) * phase;
    let ez = Complex64::new(-beta * f * scale, 0.0) * phase;
    ComplexVec3::new(ex, Complex64::new(0.0, 0.0), ez)
}

/// TE0 plus a phase-shifted TM admixture, the two-mode knob used by the
/// ridge-waveguide scenario. `ratio` scales the TM amplitude relative to
/// the TE amplitude and `phase` (rad) sets their relative phase.
pub fn slab_two_mode_field(
    slab: &SlabParams,
    te: &SlabMode,
    tm: &SlabMode,
    ratio: f64,
    phase: f64,
    r: Vec3,
) -> ComplexVec3 {
    let e_te = slab_te_mode_field(slab, te, r);
    let e_tm = slab_tm_mode_field(slab, tm, r).scaled(Complex64::from_polar(ratio, phase));
    e_te + e_tm
}
