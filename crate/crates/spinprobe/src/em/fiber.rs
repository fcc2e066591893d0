//! Step-index fiber: exact HE11 dispersion (Bessel J/K form) and the
//! x-polarized fundamental-mode field.
//!
//! The fiber axis is +z. Core radius a, indices n_core/n_clad. Transverse
//! parameters u (core) and w (cladding) satisfy u^2 + w^2 = V^2.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::em::bessel::{j0, j1, j2, k0, k1, k2};
use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Step-index fiber parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberParams {
    pub n_core: f64,
    pub n_clad: f64,
    /// Core radius (m).
    pub core_radius: f64,
    /// Vacuum wavelength (m).
    pub wavelength: f64,
    /// Field amplitude scale (V/m).
    pub amplitude: f64,
}

/// A solved HE11 mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberMode {
    pub n_eff: f64,
    /// Core transverse parameter u = a sqrt(n_core^2 k0^2 - beta^2).
    pub u: f64,
    /// Cladding decay parameter w = a sqrt(beta^2 - n_clad^2 k0^2).
    pub w: f64,
    /// Hybrid-mode parameter s = (1/u^2 + 1/w^2) / (jr + kr).
    pub s: f64,
}

impl FiberParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.n_clad >= 1.0) {
            return Err(Error::validation("fiber.n_clad", "must be >= 1"));
        }
        if !(self.n_core > self.n_clad) {
            return Err(Error::validation("fiber.n_core", "must exceed n_clad"));
        }
        if !(self.core_radius > 0.0) {
            return Err(Error::validation("fiber.core_radius", "must be > 0"));
        }
        if !(self.wavelength > 0.0) {
            return Err(Error::validation("fiber.wavelength", "must be > 0"));
        }
        Ok(())
    }

    pub fn k0(&self) -> f64 {
        TAU / self.wavelength
    }

    pub fn omega(&self) -> f64 {
        TAU * crate::constants::SPEED_OF_LIGHT / self.wavelength
    }

    /// Normalized frequency V = k0 a sqrt(n_core^2 - n_clad^2).
    pub fn v_number(&self) -> f64 {
        self.k0() * self.core_radius * (self.n_core.powi(2) - self.n_clad.powi(2)).sqrt()
    }
}

/// J1'(u) / (u J1(u)).
fn j_ratio(u: f64) -> f64 {
    let j1u = j1(u);
    (j0(u) - j1u / u) / (u * j1u)
}

/// K1'(w) / (w K1(w)).
fn k_ratio(w: f64) -> f64 {
    let k1w = k1(w);
    (-k0(w) - k1w / w) / (w * k1w)
}

/// Exact l = 1 characteristic function whose roots are the HE1m/EH1m modes:
///
/// ```text
/// (jr + kr) (jr + (n2/n1)^2 kr) - (1/u^2 + 1/w^2)(1/u^2 + (n2/n1)^2/w^2)
/// ```
pub fn he11_characteristic(fiber: &FiberParams, u: f64) -> f64 {
    let v = fiber.v_number();
    let w = (v * v - u * u).max(0.0).sqrt();
    let ratio_sq = (fiber.n_clad / fiber.n_core).powi(2);
    let jr = j_ratio(u);
    let kr = k_ratio(w);
    let inv = 1.0 / (u * u) + 1.0 / (w * w);
    let inv_weighted = 1.0 / (u * u) + ratio_sq / (w * w);
    (jr + kr) * (jr + ratio_sq * kr) - inv * inv_weighted
}

/// All sign-change brackets of the characteristic function on (0, V).
fn scan_brackets(fiber: &FiberParams, n: usize) -> Vec<(f64, f64)> {
    let v = fiber.v_number();
    let lo = v * 1e-6;
    let hi = v * (1.0 - 1e-9);
    let mut brackets = Vec::new();
    let mut prev_u = lo;
    let mut prev_f = he11_characteristic(fiber, prev_u);
    for i in 1..=n {
        let u = lo + (hi - lo) * i as f64 / n as f64;
        let f = he11_characteristic(fiber, u);
        if prev_f.is_finite() && f.is_finite() && prev_f * f < 0.0 {
            brackets.push((prev_u, u));
        }
        prev_u = u;
        prev_f = f;
    }
    brackets
}

/// Count the guided l = 1 solutions (used by the single-mode check).
pub fn count_he1_roots(fiber: &FiberParams) -> Result<usize> {
    fiber.validate()?;
    Ok(scan_brackets(fiber, 4000).len())
}

/// Solve the exact HE11 dispersion by bracketed bisection. Returns the
/// fundamental root (smallest u, largest effective index).
pub fn solve_fiber_he11_dispersion(fiber: &FiberParams) -> Result<FiberMode> {
    fiber.validate()?;
    let v = fiber.v_number();
    let brackets = scan_brackets(fiber, 4000);
    let (mut lo, mut hi) = *brackets.first().ok_or(Error::NoRootInBracket { v_number: v })?;

    let f_lo = he11_characteristic(fiber, lo);
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        let f_mid = he11_characteristic(fiber, mid);
        if f_mid == 0.0 {
            break;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
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
    let k0v = fiber.k0();
    let p = u / fiber.core_radius;
    let n_eff = (fiber.n_core.powi(2) - (p / k0v).powi(2)).sqrt();
    let s = (1.0 / (u * u) + 1.0 / (w * w)) / (j_ratio(u) + k_ratio(w));
    Ok(FiberMode { n_eff, u, w, s })
}

/// Electric field of the x-polarized HE11 mode at `r` (fiber axis +z).
///
/// Cylindrical components, with xi = p rho in the core and eta = q rho in
/// the cladding (p = u/a, q = w/a, beta = n_eff k0):
///
/// ```text
/// core:  E_rho = i (beta/2p) [(1-s) J0(xi) - (1+s) J2(xi)] cos(phi)
///        E_phi = -i (beta/2p) [(1-s) J0(xi) + (1+s) J2(xi)] sin(phi)
///        E_z   = J1(xi) cos(phi)
/// clad:  E_rho = i (beta/2q) (J1(u)/K1(w)) [(1-s) K0(eta) + (1+s) K2(eta)] cos(phi)
///        E_phi = -i (beta/2q) (J1(u)/K1(w)) [(1-s) K0(eta) - (1+s) K2(eta)] sin(phi)
///        E_z   = (J1(u)/K1(w)) K1(eta) cos(phi)
/// ```
///
/// all times exp(i beta z). Tangential components are continuous at
/// rho = a once (u, w, s) solve the dispersion relation.
pub fn fiber_he11_field(fiber: &FiberParams, mode: &FiberMode, r: Vec3) -> ComplexVec3 {
    let a = fiber.core_radius;
    let beta = mode.n_eff * fiber.k0();
    let p = mode.u / a;
    let q = mode.w / a;
    let s = mode.s;

    let rho = (r.x * r.x + r.y * r.y).sqrt();
    let phi = r.y.atan2(r.x);
    let (sin_phi, cos_phi) = phi.sin_cos();

    // (radial, azimuthal, longitudinal) profile amplitudes; the transverse
    // ones are purely imaginary relative to E_z.
    let (tr_r, tr_phi, long) = if rho <= a {
        let xi = p * rho;
        let f0 = j0(xi);
        let f2 = j2(xi);
        (
            0.5 * beta / p * ((1.0 - s) * f0 - (1.0 + s) * f2),
            -0.5 * beta / p * ((1.0 - s) * f0 + (1.0 + s) * f2),
            j1(xi),
        )
    } else {
        let eta = q * rho;
        let c = j1(mode.u) / k1(mode.w);
        let g0 = k0(eta);
        let g2 = k2(eta);
        (
            0.5 * beta / q * c * ((1.0 - s) * g0 + (1.0 + s) * g2),
            -0.5 * beta / q * c * ((1.0 - s) * g0 - (1.0 + s) * g2),
            c * k1(eta),
        )
    };

    let prop = Complex64::from_polar(fiber.amplitude, beta * r.z);
    let i = Complex64::new(0.0, 1.0);
    let e_rho = i * tr_r * cos_phi * prop;
    let e_phi = i * tr_phi * sin_phi * prop;
    let e_z = Complex64::new(long * cos_phi, 0.0) * prop;

    // cylindrical -> cartesian
    ComplexVec3::new(
        e_rho * cos_phi - e_phi * sin_phi,
        e_rho * sin_phi + e_phi * cos_phi,
        e_z,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::EPSILON_0;
    use crate::spin::spin_density;

    fn telecom_like() -> FiberParams {
        FiberParams {
            n_core: 1.46,
            n_clad: 1.44,
            core_radius: 2.5e-6,
            wavelength: 800e-9,
            amplitude: 1e6,
        }
    }

    fn single_mode() -> FiberParams {
        FiberParams { core_radius: 1.2e-6, ..telecom_like() }
    }

    #[test]
    fn u_w_identity_holds() {
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        let v = fiber.v_number();
        let rel = (mode.u * mode.u + mode.w * mode.w - v * v).abs() / (v * v);
        assert!(rel < 1e-9);
    }

    #[test]
    fn effective_index_matches_dense_scan_oracle() {
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        assert!(mode.n_eff > fiber.n_clad && mode.n_eff < fiber.n_core);

        // independent oracle: dense grid scan of the characteristic function
        let v = fiber.v_number();
        let n = 1_000_000;
        let mut root = None;
        let mut prev_u = v * 1e-6;
        let mut prev_f = he11_characteristic(&fiber, prev_u);
        for i in 1..=n {
            let u = v * 1e-6 + (v * (1.0 - 1e-9) - v * 1e-6) * i as f64 / n as f64;
            let f = he11_characteristic(&fiber, u);
            if prev_f * f < 0.0 {
                root = Some(0.5 * (prev_u + u));
                break;
            }
            prev_u = u;
            prev_f = f;
        }
        let u_oracle = root.expect("oracle found no root");
        assert!((mode.u - u_oracle).abs() < 1e-5, "u {} vs oracle {}", mode.u, u_oracle);
        // frozen from the oracle
        assert!((mode.n_eff - 1.45651924094321).abs() < 1e-12);
    }

    #[test]
    fn below_cutoff_fiber_is_single_mode() {
        let fiber = single_mode();
        assert!(fiber.v_number() < 2.405, "V = {}", fiber.v_number());
        assert_eq!(count_he1_roots(&fiber).unwrap(), 1);
    }

    #[test]
    fn residual_is_tiny_at_solution() {
        for fiber in [telecom_like(), single_mode()] {
            let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
            let res = he11_characteristic(&fiber, mode.u);
            assert!(res.abs() < 1e-12, "residual {res:e}");
        }
    }

    #[test]
    fn tangential_field_continuous_at_core_boundary() {
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        let a = fiber.core_radius;
        for phi in [0.3f64, 1.2, 2.5, 4.0, 5.7] {
            let dir = Vec3::new(phi.cos(), phi.sin(), 0.0);
            let e_in = fiber_he11_field(&fiber, &mode, dir * (a * (1.0 - 1e-12)));
            let e_out = fiber_he11_field(&fiber, &mode, dir * (a * (1.0 + 1e-12)));
            // tangential components: E_phi and E_z
            let tang_in = (
                -e_in.x * phi.sin() + e_in.y * phi.cos(),
                e_in.z,
            );
            let tang_out = (
                -e_out.x * phi.sin() + e_out.y * phi.cos(),
                e_out.z,
            );
            let scale = e_in.norm();
            assert!(
                (tang_in.0 - tang_out.0).norm() / scale < 1e-8,
                "E_phi jump at phi = {phi}"
            );
            assert!(
                (tang_in.1 - tang_out.1).norm() / scale < 1e-8,
                "E_z jump at phi = {phi}"
            );
        }
    }

    #[test]
    fn field_decays_far_from_the_core() {
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        let a = fiber.core_radius;
        let mut last = f64::INFINITY;
        for i in 1..20 {
            let rho = a * (1.0 + 0.5 * i as f64);
            let e = fiber_he11_field(&fiber, &mode, Vec3::new(rho, 0.0, 0.0));
            assert!(e.norm() < last);
            last = e.norm();
        }
        assert!(last < 1e-10 * fiber.amplitude);
    }

    #[test]
    fn spin_density_outside_core_alternates_by_quadrant() {
        // radial spin component on a ring at 1.2 a follows sign(sin 2 phi)
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        let omega = fiber.omega();
        let rho = 1.2 * fiber.core_radius;
        let mut q_signs = Vec::new();
        for phi_deg in [45.0f64, 135.0, 225.0, 315.0] {
            let phi = phi_deg.to_radians();
            let r = Vec3::new(rho * phi.cos(), rho * phi.sin(), 0.0);
            let e = fiber_he11_field(&fiber, &mode, r);
            let s = spin_density(e, omega, EPSILON_0).unwrap();
            let radial = s.s.dot(Vec3::new(phi.cos(), phi.sin(), 0.0));
            assert!(radial != 0.0);
            q_signs.push(radial.signum());
        }
        assert_eq!(q_signs[0], q_signs[2]);
        assert_eq!(q_signs[1], q_signs[3]);
        assert_eq!(q_signs[0], -q_signs[1]);
        // transverse: no longitudinal spin for the lossless mode
        let r = Vec3::new(rho, rho, 0.0);
        let e = fiber_he11_field(&fiber, &mode, r);
        let s = spin_density(e, omega, EPSILON_0).unwrap();
        assert!(s.s.z.abs() < 1e-12 * s.s.norm());
    }

    #[test]
    fn field_is_divergence_free() {
        let fiber = telecom_like();
        let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
        let k = mode.n_eff * fiber.k0();
        let h = 2e-4 / k;
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for i in 0..10 {
            // half the points inside the core, half in the near cladding;
            // stay clear of the boundary where derivatives jump
            let rho = if i % 2 == 0 {
                fiber.core_radius * (0.15 + 0.7 * next())
            } else {
                fiber.core_radius * (1.05 + 0.3 * next())
            };
            let phi = next() * std::f64::consts::TAU;
            let r = Vec3::new(rho * phi.cos(), rho * phi.sin(), (next() - 0.5) * 1e-6);
            let mut div = Complex64::new(0.0, 0.0);
            for (axis, pick) in [
                (Vec3::X, 0usize),
                (Vec3::Y, 1),
                (Vec3::Z, 2),
            ] {
                let plus = fiber_he11_field(&fiber, &mode, r + axis * h);
                let minus = fiber_he11_field(&fiber, &mode, r - axis * h);
                let d = match pick {
                    0 => plus.x - minus.x,
                    1 => plus.y - minus.y,
                    _ => plus.z - minus.z,
                };
                div += d / Complex64::new(2.0 * h, 0.0);
            }
            let e = fiber_he11_field(&fiber, &mode, r);
            assert!(div.norm() / (k * e.norm()) < 1e-6);
        }
    }
}
