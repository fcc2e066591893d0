//! Focused free-space target beam: scalar paraxial Gaussian envelope times
//! the LP + QWP polarization state.
//!
//! The envelope carries the full transmitted power P*T through every
//! transverse plane; tip scattering and vector-diffraction corrections are
//! deliberately not modeled.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::constants::{EPSILON_0, SPEED_OF_LIGHT};
use crate::em::jones::qwp_jones_with_ellipticity;
use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Parameters of the focused target beam (propagating along +z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParams {
    /// Vacuum wavelength (m).
    pub wavelength: f64,
    /// Beam power before the objective (W).
    pub power: f64,
    /// Optics transmission (dimensionless, 0 < T <= 1).
    pub transmission: f64,
    /// Numerical aperture of the focusing objective.
    pub numerical_aperture: f64,
    /// Focus position along z (m).
    pub focus_offset: f64,
    /// Quarter-wave plate rotation angle (rad).
    pub qwp_angle: f64,
    /// Residual polarization ellipticity after the dichroic mirror
    /// (1.0 = ideal, neglected by default).
    pub ellipticity: f64,
}

impl BeamParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.wavelength > 0.0) {
            return Err(Error::validation("beam.wavelength", "must be > 0"));
        }
        if !(self.numerical_aperture > 0.0 && self.numerical_aperture < 1.0) {
            return Err(Error::validation("beam.numerical_aperture", "must satisfy 0 < NA < 1"));
        }
        if !(self.power >= 0.0) {
            return Err(Error::validation("beam.power", "must be >= 0"));
        }
        if !(self.transmission > 0.0 && self.transmission <= 1.0) {
            return Err(Error::validation("beam.transmission", "must satisfy 0 < T <= 1"));
        }
        if !(self.ellipticity > 0.0) {
            return Err(Error::validation("beam.ellipticity", "must be > 0"));
        }
        Ok(())
    }

    /// Gaussian waist radius w0 = lambda / (pi NA) (m).
    pub fn waist(&self) -> f64 {
        self.wavelength / (PI * self.numerical_aperture)
    }

    /// Rayleigh range z_R = pi w0^2 / lambda (m).
    pub fn rayleigh_range(&self) -> f64 {
        PI * self.waist().powi(2) / self.wavelength
    }

    /// Peak on-axis focal amplitude (V/m), normalized so that the
    /// time-averaged power through any transverse plane equals P*T:
    /// |E0|^2 = 4 P T / (eps0 c pi w0^2).
    pub fn peak_amplitude(&self) -> f64 {
        let w0 = self.waist();
        (4.0 * self.power * self.transmission / (EPSILON_0 * SPEED_OF_LIGHT * PI * w0 * w0)).sqrt()
    }
}

/// Complex electric field of the focused beam at position `r` (m).
pub fn paraxial_gaussian_field(beam: &BeamParams, r: Vec3) -> Result<ComplexVec3> {
    beam.validate()?;
    let w0 = beam.waist();
    let zr = beam.rayleigh_range();
    let k = 2.0 * PI / beam.wavelength;
    let zeta = r.z - beam.focus_offset;
    let rho_sq = r.x * r.x + r.y * r.y;

    let w = w0 * (1.0 + (zeta / zr).powi(2)).sqrt();
    // 1/R(z) written in pole-free form; exact 0 at the focus.
    let inv_radius = zeta / (zeta * zeta + zr * zr);
    let gouy = (zeta / zr).atan();
    let phase = k * zeta + 0.5 * k * rho_sq * inv_radius - gouy;
    let envelope = (w0 / w) * (-rho_sq / (w * w)).exp();

    let u = Complex64::from_polar(envelope * beam.peak_amplitude(), phase);
    let pol = qwp_jones_with_ellipticity(beam.qwp_angle, beam.ellipticity);
    Ok(pol.scaled(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_beam() -> BeamParams {
        BeamParams {
            wavelength: 800e-9,
            power: 4e-3,
            transmission: 0.78,
            numerical_aperture: 0.65,
            focus_offset: 1.8e-6,
            qwp_angle: std::f64::consts::FRAC_PI_4,
            ellipticity: 1.0,
        }
    }

    #[test]
    fn focal_intensity_matches_power_normalization() {
        let beam = reference_beam();
        let focus = Vec3::new(0.0, 0.0, beam.focus_offset);
        let e = paraxial_gaussian_field(&beam, focus).unwrap();
        let w0 = beam.waist();
        let expected =
            4.0 * beam.power * beam.transmission / (EPSILON_0 * SPEED_OF_LIGHT * PI * w0 * w0);
        assert!((e.norm_sq() / expected - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadrature_of_focal_plane_recovers_transmitted_power() {
        // Independent oracle: midpoint quadrature of (eps0 c / 2) |E|^2 over
        // the focal plane must integrate back to P*T.
        let beam = reference_beam();
        let w0 = beam.waist();
        let half = 6.0 * w0;
        let n = 400;
        let dx = 2.0 * half / n as f64;
        let mut power = 0.0;
        for i in 0..n {
            for j in 0..n {
                let x = -half + (i as f64 + 0.5) * dx;
                let y = -half + (j as f64 + 0.5) * dx;
                let e = paraxial_gaussian_field(&beam, Vec3::new(x, y, beam.focus_offset)).unwrap();
                power += 0.5 * EPSILON_0 * SPEED_OF_LIGHT * e.norm_sq() * dx * dx;
            }
        }
        let target = beam.power * beam.transmission;
        assert!(
            (power / target - 1.0).abs() < 1e-6,
            "quadrature {power:e} vs P*T {target:e}"
        );
    }

    #[test]
    fn zero_power_gives_zero_field() {
        let mut beam = reference_beam();
        beam.power = 0.0;
        let e = paraxial_gaussian_field(&beam, Vec3::new(1e-7, -2e-7, 1e-6)).unwrap();
        assert_eq!(e.norm_sq(), 0.0);
    }

    #[test]
    fn doubling_power_doubles_intensity_everywhere() {
        let beam = reference_beam();
        let mut twice = beam;
        twice.power *= 2.0;
        for r in [
            Vec3::new(0.0, 0.0, beam.focus_offset),
            Vec3::new(2e-7, -1e-7, 1.2e-6),
            Vec3::new(-4e-7, 3e-7, 2.5e-6),
        ] {
            let a = paraxial_gaussian_field(&beam, r).unwrap().norm_sq();
            let b = paraxial_gaussian_field(&twice, r).unwrap().norm_sq();
            assert!((b / a - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_na_of_one_or_more() {
        let mut beam = reference_beam();
        beam.numerical_aperture = 1.0;
        assert!(paraxial_gaussian_field(&beam, Vec3::ZERO).is_err());
    }
}
