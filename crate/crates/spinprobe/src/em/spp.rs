//! Analytic single-interface surface plasmon polariton field in the
//! dielectric half space.
//!
//! Metal fills z < 0, dielectric z > 0; the mode propagates along +-x.
//! The transverse spin of the evanescent tail is locked to the propagation
//! direction, which is the signature probed by the effective-field maps.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Single-interface SPP parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SppParams {
    /// Relative permittivity of the metal (complex; Re < -eps_dielectric
    /// for a bound mode).
    pub eps_metal: Complex64,
    /// Relative permittivity of the dielectric half space (real, >= 1).
    pub eps_dielectric: f64,
    /// Vacuum wavelength (m).
    pub wavelength: f64,
    /// Propagation direction along x: +1 or -1.
    pub direction: f64,
    /// Electric-field amplitude scale at the surface (V/m).
    pub amplitude: f64,
}

impl SppParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.wavelength > 0.0) {
            return Err(Error::validation("spp.wavelength", "must be > 0"));
        }
        if !(self.eps_dielectric >= 1.0) {
            return Err(Error::validation("spp.eps_dielectric", "must be >= 1"));
        }
        if self.direction != 1.0 && self.direction != -1.0 {
            return Err(Error::validation("spp.direction", "must be +1 or -1"));
        }
        if self.eps_metal.re >= -self.eps_dielectric {
            return Err(Error::NoBoundMode {
                eps_metal_re: self.eps_metal.re,
                minus_eps_d: self.eps_dielectric,
            });
        }
        Ok(())
    }

    /// Free-space wavenumber omega/c (1/m).
    pub fn k0(&self) -> f64 {
        TAU / self.wavelength
    }

    /// Angular frequency (rad/s).
    pub fn omega(&self) -> f64 {
        TAU * SPEED_OF_LIGHT / self.wavelength
    }

    /// Complex SPP dispersion k_spp = k0 sqrt(em ed / (em + ed)), branch
    /// with Re > 0. The imaginary part is the propagation loss, which the
    /// field model neglects.
    pub fn k_spp_complex(&self) -> Result<Complex64> {
        self.validate()?;
        let ed = Complex64::new(self.eps_dielectric, 0.0);
        let k = Complex64::new(self.k0(), 0.0) * (self.eps_metal * ed / (self.eps_metal + ed)).sqrt();
        Ok(if k.re < 0.0 { -k } else { k })
    }

    /// Propagation constant used by the field: Re(k_spp). Attenuation
    /// along x is out of scope, which keeps the mode divergence-free and
    /// the forward/backward fields exact mirrors.
    pub fn k_spp(&self) -> Result<f64> {
        Ok(self.k_spp_complex()?.re)
    }

    /// Transverse decay constant in the dielectric,
    /// kappa_d = sqrt(k_spp^2 - eps_d k0^2) > 0.
    pub fn kappa_dielectric(&self) -> Result<f64> {
        let k_spp = self.k_spp()?;
        let k0 = self.k0();
        let arg = k_spp * k_spp - self.eps_dielectric * k0 * k0;
        if arg <= 0.0 {
            return Err(Error::NoBoundMode {
                eps_metal_re: self.eps_metal.re,
                minus_eps_d: self.eps_dielectric,
            });
        }
        Ok(arg.sqrt())
    }
}

/// SPP electric field at `r` in the dielectric (z >= 0):
///
/// ```text
/// E = E0 (x + i s (k_spp / kappa_d) z) exp(i s k_spp x) exp(-kappa_d z)
/// ```
///
/// with s the propagation sign. The relative z amplitude is fixed by
/// div E = 0, which also sets the sign of the transverse spin: reversing
/// s flips S_y everywhere (spin-momentum locking).
pub fn spp_mode_field(spp: &SppParams, r: Vec3) -> Result<ComplexVec3> {
    let k_spp = spp.k_spp()?;
    let kappa = spp.kappa_dielectric()?;
    let s = spp.direction;

    let envelope = spp.amplitude * (-kappa * r.z).exp();
    let ex = Complex64::from_polar(envelope, s * k_spp * r.x);
    let ez = Complex64::new(0.0, s * k_spp / kappa) * ex;
    Ok(ComplexVec3::new(ex, Complex64::new(0.0, 0.0), ez))
}
