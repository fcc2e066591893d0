//! NV-center parameter set.

use crate::constants;
use crate::error::{Error, Result};
use crate::vec3::Vec3;

/// All NV constants needed by the Stark-shift chain.
///
/// Frequencies are angular (rad/s). The defaults reproduce the published
/// constants: spin-orbit coupling 2pi x 5.5 GHz, spin-spin splitting
/// 2pi x 1.42/3 GHz, ground-state splitting 2pi x 2.87 GHz, optical gap
/// 1.945 eV, gamma = 2.8 MHz/G, lifetime 15 ns, bias 1.1 mT, alignment
/// angle 54.7 deg, diamond permittivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvParams {
    /// Excited-state spin-orbit coupling lambda_z (rad/s).
    pub lambda_z: f64,
    /// Excited-state spin-spin splitting Delta_es (rad/s).
    pub delta_es: f64,
    /// Ground-state zero-field splitting Delta_GS (rad/s).
    pub delta_gs: f64,
    /// Optical gap omega_ge (rad/s).
    pub omega_ge: f64,
    /// Gyromagnetic ratio (rad s^-1 T^-1).
    pub gamma: f64,
    /// Excited-state lifetime tau_NV (s).
    pub tau: f64,
    /// Axial bias field (T).
    pub b_bias: f64,
    /// NV axis direction (unit vector, beam frame).
    pub axis: Vec3,
    /// Permittivity of the host medium at the NV site (F/m).
    pub epsilon_medium: f64,
}

impl Default for NvParams {
    fn default() -> Self {
        NvParams::with_alignment_angle(constants::NV_PHI)
    }
}

impl NvParams {
    /// Default constants with the NV axis tilted by `phi` from the beam
    /// axis, in the x-z plane: n = (-sin phi, 0, cos phi). This is the
    /// frame in which the polarization-transform expansion is written.
    pub fn with_alignment_angle(phi: f64) -> Self {
        NvParams {
            lambda_z: constants::NV_LAMBDA_Z,
            delta_es: constants::NV_DELTA_ES,
            delta_gs: constants::NV_DELTA_GS,
            omega_ge: constants::NV_OMEGA_GE,
            gamma: constants::NV_GAMMA,
            tau: constants::NV_TAU,
            b_bias: constants::NV_B_BIAS,
            axis: Vec3::new(-phi.sin(), 0.0, phi.cos()),
            epsilon_medium: constants::EPSILON_R_DIAMOND * constants::EPSILON_0,
        }
    }

    /// Spontaneous decay rate Gamma = 1/tau (rad/s).
    pub fn decay_rate(&self) -> f64 {
        1.0 / self.tau
    }

    /// Alignment angle phi between the NV axis and the beam axis +z (rad).
    pub fn alignment_angle(&self) -> f64 {
        self.axis.z.clamp(-1.0, 1.0).acos()
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("nv.lambda_z", self.lambda_z),
            ("nv.delta_es", self.delta_es),
            ("nv.delta_gs", self.delta_gs),
            ("nv.omega_ge", self.omega_ge),
            ("nv.gamma", self.gamma),
            ("nv.tau", self.tau),
            ("nv.epsilon_medium", self.epsilon_medium),
        ] {
            if !(v > 0.0) {
                return Err(Error::validation(name, "must be > 0"));
            }
        }
        if !self.b_bias.is_finite() {
            return Err(Error::validation("nv.b_bias", "must be finite"));
        }
        let norm = self.axis.norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_axis_matches_alignment_angle() {
        let nv = NvParams::default();
        nv.validate().unwrap();
        assert!((nv.alignment_angle() - constants::NV_PHI).abs() < 1e-12);
        assert!((nv.axis.z - constants::NV_PHI.cos()).abs() < 1e-15);
    }

    #[test]
    fn non_unit_axis_is_rejected() {
        let nv = NvParams { axis: Vec3::new(0.0, 0.0, 2.0), ..NvParams::default() };
        assert!(matches!(nv.validate(), Err(Error::NonUnitAxis { .. })));
    }
}
