//! Scenario documents: the JSON schema, its defaults, and the conversion
//! to SI parameter sets.
//!
//! The document stores human-facing units (nm, mW, degrees, GHz, ...) and
//! is the canonical representation: saving a loaded scenario reproduces
//! it exactly, defaults included. SI values are derived on demand.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::path::Path;

use crate::constants::{ELEMENTARY_CHARGE, EPSILON_0, HBAR};
use crate::em::{BeamParams, FiberParams, SlabParams, SppParams};
use crate::error::{Error, Result};
use crate::nv::NvParams;
use crate::pulse::{MeasurementSlot, SequenceSpec};
use crate::vec3::Vec3;

/// A complete scenario: one source, NV parameters, the measurement
/// sequence, and one sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub source: SourceConfig,
    #[serde(default)]
    pub nv: NvConfig,
    #[serde(default)]
    pub sequence: SequenceConfig,
    #[serde(default)]
    pub sweep: SweepConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SourceConfig {
    Beam(BeamConfig),
    Spp(SppConfig),
    Slab(SlabConfig),
    Fiber(FiberConfig),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamConfig {
    #[serde(default = "d_wavelength_nm")]
    pub wavelength_nm: f64,
    #[serde(default = "d_power_mw")]
    pub power_mw: f64,
    #[serde(default = "d_transmission")]
    pub transmission: f64,
    #[serde(default = "d_numerical_aperture")]
    pub numerical_aperture: f64,
    #[serde(default = "d_focus_offset_um")]
    pub focus_offset_um: f64,
    #[serde(default = "d_qwp_angle_deg")]
    pub qwp_angle_deg: f64,
    #[serde(default = "d_one")]
    pub ellipticity: f64,
    /// NV position (um); defaults to the focus on the beam axis.
    #[serde(default)]
    pub nv_position_um: Option<[f64; 3]>,
    /// Transverse-spin knob: adds a theta-independent spin component of
    /// this fraction of the local bound eps|E|^2/(4 omega) along
    /// `transverse_spin_axis`, emulating the tip-scattering offset.
    #[serde(default)]
    pub transverse_spin_fraction: f64,
    #[serde(default = "d_x_axis")]
    pub transverse_spin_axis: [f64; 3],
}

impl Default for BeamConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty beam config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SppConfig {
    /// Relative metal permittivity as [re, im].
    #[serde(default = "d_eps_metal")]
    pub eps_metal: [f64; 2],
    #[serde(default = "d_one")]
    pub eps_dielectric: f64,
    #[serde(default = "d_wavelength_nm")]
    pub wavelength_nm: f64,
    /// Propagation direction along x: +1 or -1.
    #[serde(default = "d_one")]
    pub direction: f64,
    #[serde(default = "d_amplitude")]
    pub amplitude_v_per_m: f64,
}

impl Default for SppConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty spp config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlabConfig {
    #[serde(default = "d_slab_n_core")]
    pub n_core: f64,
    #[serde(default = "d_one")]
    pub n_clad: f64,
    #[serde(default = "d_half_thickness_nm")]
    pub half_thickness_nm: f64,
    #[serde(default = "d_wavelength_nm")]
    pub wavelength_nm: f64,
    #[serde(default)]
    pub mode_order: usize,
    #[serde(default = "d_amplitude")]
    pub amplitude_v_per_m: f64,
    /// Optional TM admixture generating nonzero spin density (a pure TE
    /// profile carries none).
    #[serde(default)]
    pub tm_mix: Option<TmMixConfig>,
}

impl Default for SlabConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty slab config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TmMixConfig {
    pub amplitude_ratio: f64,
    #[serde(default = "d_ninety")]
    pub phase_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberConfig {
    #[serde(default = "d_fiber_n_core")]
    pub n_core: f64,
    #[serde(default = "d_fiber_n_clad")]
    pub n_clad: f64,
    #[serde(default = "d_core_radius_um")]
    pub core_radius_um: f64,
    #[serde(default = "d_wavelength_nm")]
    pub wavelength_nm: f64,
    #[serde(default = "d_amplitude")]
    pub amplitude_v_per_m: f64,
}

impl Default for FiberConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty fiber config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NvConfig {
    #[serde(default = "d_lambda_z_ghz")]
    pub lambda_z_ghz: f64,
    #[serde(default = "d_delta_es_ghz")]
    pub delta_es_ghz: f64,
    #[serde(default = "d_delta_gs_ghz")]
    pub delta_gs_ghz: f64,
    #[serde(default = "d_optical_gap_ev")]
    pub optical_gap_ev: f64,
    #[serde(default = "d_gamma_mhz_per_gauss")]
    pub gamma_mhz_per_gauss: f64,
    #[serde(default = "d_lifetime_ns")]
    pub lifetime_ns: f64,
    #[serde(default = "d_bias_mt")]
    pub bias_mt: f64,
    #[serde(default = "d_epsilon_r")]
    pub epsilon_r: f64,
    /// Alignment angle between the NV axis and the beam axis (deg); used
    /// when `axis` is not given.
    #[serde(default = "d_alignment_angle_deg")]
    pub alignment_angle_deg: f64,
    /// Explicit NV axis (any nonzero vector; normalized on resolve).
    /// Takes precedence over `alignment_angle_deg`.
    #[serde(default)]
    pub axis: Option<[f64; 3]>,
}

impl Default for NvConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty nv config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceConfig {
    #[serde(default = "d_n_blocks")]
    pub n_blocks: u32,
    #[serde(default = "d_tau_us")]
    pub tau_us: f64,
    #[serde(default = "d_one")]
    pub tau_prime_us: f64,
    #[serde(default)]
    pub mw_detuning_khz: f64,
    #[serde(default = "d_c_max")]
    pub c_max: f64,
}

impl Default for SequenceConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty sequence config")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SweepConfig {
    QwpAnglesDeg(Vec<f64>),
    PowersMw(Vec<f64>),
    Grid(GridConfig),
    #[default]
    Single,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub axis1: AxisConfig,
    pub axis2: AxisConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisConfig {
    pub axis: AxisName,
    pub from_nm: f64,
    pub to_nm: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisName {
    X,
    Y,
    Z,
}

impl AxisName {
    pub fn label(self) -> &'static str {
        match self {
            AxisName::X => "x",
            AxisName::Y => "y",
            AxisName::Z => "z",
        }
    }

    pub fn embed(self, value: f64, point: &mut Vec3) {
        match self {
            AxisName::X => point.x = value,
            AxisName::Y => point.y = value,
            AxisName::Z => point.z = value,
        }
    }
}

// serde default values (published experimental values where available)
fn d_wavelength_nm() -> f64 { 800.0 }
fn d_power_mw() -> f64 { 4.0 }
fn d_transmission() -> f64 { 0.78 }
fn d_numerical_aperture() -> f64 { 0.65 }
fn d_focus_offset_um() -> f64 { 1.8 }
fn d_qwp_angle_deg() -> f64 { 45.0 }
fn d_one() -> f64 { 1.0 }
fn d_ninety() -> f64 { 90.0 }
fn d_x_axis() -> [f64; 3] { [1.0, 0.0, 0.0] }
fn d_eps_metal() -> [f64; 2] { [-26.2, 1.85] }
fn d_amplitude() -> f64 { 1e6 }
fn d_slab_n_core() -> f64 { 2.4 }
fn d_half_thickness_nm() -> f64 { 100.0 }
fn d_fiber_n_core() -> f64 { 1.46 }
fn d_fiber_n_clad() -> f64 { 1.44 }
fn d_core_radius_um() -> f64 { 2.5 }
fn d_lambda_z_ghz() -> f64 { 5.5 }
fn d_delta_es_ghz() -> f64 { 1.42 / 3.0 }
fn d_delta_gs_ghz() -> f64 { 2.87 }
fn d_optical_gap_ev() -> f64 { 1.945 }
fn d_gamma_mhz_per_gauss() -> f64 { 2.8 }
fn d_lifetime_ns() -> f64 { 15.0 }
fn d_bias_mt() -> f64 { 1.1 }
fn d_epsilon_r() -> f64 { 5.7 }
fn d_alignment_angle_deg() -> f64 { 54.7 }
fn d_n_blocks() -> u32 { 4 }
fn d_tau_us() -> f64 { 2.0 }
fn d_c_max() -> f64 { 0.203 }

// unit conversions; divisions by exact powers of ten so that the values
// round-trip back to their decimal form
pub(crate) fn nm_to_m(v: f64) -> f64 { v / 1e9 }
pub(crate) fn um_to_m(v: f64) -> f64 { v / 1e6 }
pub(crate) fn mw_to_w(v: f64) -> f64 { v / 1e3 }
pub(crate) fn ns_to_s(v: f64) -> f64 { v / 1e9 }
pub(crate) fn us_to_s(v: f64) -> f64 { v / 1e6 }
pub(crate) fn tesla_to_nt(v: f64) -> f64 { v * 1e9 }
pub(crate) fn ghz_to_rad_s(v: f64) -> f64 { TAU * (v * 1e9) }
pub(crate) fn khz_to_rad_s(v: f64) -> f64 { TAU * (v * 1e3) }

impl Scenario {
    /// Parse a scenario from a JSON string; unknown keys are rejected.
    pub fn from_json(json: &str) -> Result<Scenario> {
        let scenario: Scenario =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    pub fn validate(&self) -> Result<()> {
        match &self.source {
            SourceConfig::Beam(b) => self.beam_params_with(b)?.validate()?,
            SourceConfig::Spp(s) => spp_params(s)?.validate()?,
            SourceConfig::Slab(s) => slab_params(s)?.validate()?,
            SourceConfig::Fiber(f) => fiber_params(f)?.validate()?,
        }
        self.nv_params()?.validate()?;
        self.sequence_spec()?.validate()?;
        if !(self.sequence.c_max > 0.0 && self.sequence.c_max <= 1.0) {
            return Err(Error::validation("sequence.c_max", "must be in (0, 1]"));
        }
        if let SweepConfig::Grid(grid) = &self.sweep {
            for (name, ax) in [("sweep.grid.axis1", &grid.axis1), ("sweep.grid.axis2", &grid.axis2)] {
                if ax.points < 2 {
                    return Err(Error::validation(format!("{name}.points"), "need at least 2"));
                }
                if !(ax.to_nm > ax.from_nm) {
                    return Err(Error::validation(format!("{name}.to_nm"), "must exceed from_nm"));
                }
            }
            if grid.axis1.axis == grid.axis2.axis {
                return Err(Error::validation("sweep.grid", "axes must differ"));
            }
        }
        if let SourceConfig::Beam(b) = &self.source {
            let axis = Vec3::new(
                b.transverse_spin_axis[0],
                b.transverse_spin_axis[1],
                b.transverse_spin_axis[2],
            );
            if b.transverse_spin_fraction != 0.0 && axis.norm() == 0.0 {
                return Err(Error::validation("source.beam.transverse_spin_axis", "must be nonzero"));
            }
        }
        Ok(())
    }

    fn beam_params_with(&self, b: &BeamConfig) -> Result<BeamParams> {
        if b.wavelength_nm <= 0.0 {
            return Err(Error::validation("source.beam.wavelength_nm", "must be > 0"));
        }
        Ok(BeamParams {
            wavelength: nm_to_m(b.wavelength_nm),
            power: mw_to_w(b.power_mw),
            transmission: b.transmission,
            numerical_aperture: b.numerical_aperture,
            focus_offset: um_to_m(b.focus_offset_um),
            qwp_angle: b.qwp_angle_deg.to_radians(),
            ellipticity: b.ellipticity,
        })
    }

    pub fn beam_params(&self) -> Result<BeamParams> {
        match &self.source {
            SourceConfig::Beam(b) => self.beam_params_with(b),
            _ => Err(Error::validation("source", "operation requires a beam source")),
        }
    }

    /// The NV position for beam scenarios (m); defaults to the focus.
    pub fn nv_position(&self) -> Result<Vec3> {
        match &self.source {
            SourceConfig::Beam(b) => Ok(match b.nv_position_um {
                Some([x, y, z]) => Vec3::new(um_to_m(x), um_to_m(y), um_to_m(z)),
                None => Vec3::new(0.0, 0.0, um_to_m(b.focus_offset_um)),
            }),
            _ => Err(Error::validation("source", "nv position applies to beam sources")),
        }
    }

    pub fn nv_params(&self) -> Result<NvParams> {
        let nv = &self.nv;
        let axis = match nv.axis {
            Some([x, y, z]) => {
                let v = Vec3::new(x, y, z);
                if v.norm() == 0.0 {
                    return Err(Error::validation("nv.axis", "must be a nonzero vector"));
                }
                v.normalized()
            }
            None => {
                let phi = nv.alignment_angle_deg.to_radians();
                Vec3::new(-phi.sin(), 0.0, phi.cos())
            }
        };
        Ok(NvParams {
            lambda_z: ghz_to_rad_s(nv.lambda_z_ghz),
            delta_es: ghz_to_rad_s(nv.delta_es_ghz),
            delta_gs: ghz_to_rad_s(nv.delta_gs_ghz),
            omega_ge: nv.optical_gap_ev * ELEMENTARY_CHARGE / HBAR,
            gamma: TAU * (nv.gamma_mhz_per_gauss * 1e10),
            tau: ns_to_s(nv.lifetime_ns),
            b_bias: nv.bias_mt / 1e3,
            axis,
            epsilon_medium: nv.epsilon_r * EPSILON_0,
        })
    }

    pub fn sequence_spec(&self) -> Result<SequenceSpec> {
        let nv = self.nv_params()?;
        Ok(SequenceSpec {
            n_blocks: self.sequence.n_blocks,
            tau: us_to_s(self.sequence.tau_us),
            tau_prime: us_to_s(self.sequence.tau_prime_us),
            gamma: nv.gamma,
            slot: MeasurementSlot::Measurement1,
            mw_detuning: khz_to_rad_s(self.sequence.mw_detuning_khz),
        })
    }

    pub fn c_max(&self) -> f64 {
        self.sequence.c_max
    }
}

pub(crate) fn spp_params(s: &SppConfig) -> Result<SppParams> {
    Ok(SppParams {
        eps_metal: num_complex::Complex64::new(s.eps_metal[0], s.eps_metal[1]),
        eps_dielectric: s.eps_dielectric,
        wavelength: nm_to_m(s.wavelength_nm),
        direction: s.direction,
        amplitude: s.amplitude_v_per_m,
    })
}

pub(crate) fn slab_params(s: &SlabConfig) -> Result<SlabParams> {
    Ok(SlabParams {
        n_core: s.n_core,
        n_clad: s.n_clad,
        half_thickness: nm_to_m(s.half_thickness_nm),
        wavelength: nm_to_m(s.wavelength_nm),
        mode_order: s.mode_order,
        amplitude: s.amplitude_v_per_m,
    })
}

pub(crate) fn fiber_params(f: &FiberConfig) -> Result<FiberParams> {
    Ok(FiberParams {
        n_core: f.n_core,
        n_clad: f.n_clad,
        core_radius: um_to_m(f.core_radius_um),
        wavelength: nm_to_m(f.wavelength_nm),
        amplitude: f.amplitude_v_per_m,
    })
}

/// Load a scenario document from disk.
pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Scenario::from_json(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Save a scenario document (defaults materialized) to disk.
pub fn save_scenario(scenario: &Scenario, path: &Path) -> Result<()> {
    std::fs::write(path, scenario.to_json())
        .map_err(|source| Error::Io { path: path.display().to_string(), source })
}
