//! Virtual-transition AC Stark shifts and the spin-density-induced
//! effective magnetic field, both as the exact sum over dipole-allowed
//! transitions and in closed form.
//!
//! Level scheme: six triplet excited states {A_up, A_down, E_R, E_L,
//! E_up, E_down} above the {|-1>, |0>, |+1>} ground manifold. Each ground
//! sublevel couples to exactly one excited state per circular polarization:
//!
//! ```text
//!          LCP      RCP
//! |-1>    A_down   E_down
//! | 0>    E_L      E_R
//! |+1>    E_up     A_up
//! ```

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::constants::{DETUNING_GUARD_FACTOR, EPSILON_0, HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::nv::params::NvParams;
use crate::vec3::{ComplexVec3, Vec3};

/// The six triplet excited states, in a spin- and orbit-resolved basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcitedState {
    AUp,
    ADown,
    ER,
    EL,
    EUp,
    EDown,
}

impl ExcitedState {
    pub const ALL: [ExcitedState; 6] = [
        ExcitedState::AUp,
        ExcitedState::ADown,
        ExcitedState::ER,
        ExcitedState::EL,
        ExcitedState::EUp,
        ExcitedState::EDown,
    ];
}

/// Excited-state energies relative to the optical gap (rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitedLevels {
    pub a_up: f64,
    pub a_down: f64,
    pub e_r: f64,
    pub e_l: f64,
    pub e_up: f64,
    pub e_down: f64,
}

impl ExcitedLevels {
    pub fn energy(&self, state: ExcitedState) -> f64 {
        match state {
            ExcitedState::AUp => self.a_up,
            ExcitedState::ADown => self.a_down,
            ExcitedState::ER => self.e_r,
            ExcitedState::EL => self.e_l,
            ExcitedState::EUp => self.e_up,
            ExcitedState::EDown => self.e_down,
        }
    }
}

/// Diagonal excited-state energies under an axial bias field:
///
/// ```text
/// E(A_up/down) = +-gamma B + Delta_es + lambda_z
/// E(E_R) = E(E_L) = -2 Delta_es
/// E(E_up/down) = +-gamma B + Delta_es - lambda_z
/// ```
pub fn excited_levels(nv: &NvParams) -> ExcitedLevels {
    let zeeman = nv.gamma * nv.b_bias;
    ExcitedLevels {
        a_up: zeeman + nv.delta_es + nv.lambda_z,
        a_down: -zeeman + nv.delta_es + nv.lambda_z,
        e_r: -2.0 * nv.delta_es,
        e_l: -2.0 * nv.delta_es,
        e_up: zeeman + nv.delta_es - nv.lambda_z,
        e_down: -zeeman + nv.delta_es - nv.lambda_z,
    }
}

/// Transition dipole moment from the excited-state lifetime (C m):
/// d0 = sqrt(3 pi hbar eps0 c^3 / (omega_ge^3 tau)).
pub fn dipole_from_lifetime(tau: f64, omega_ge: f64) -> f64 {
    (3.0 * std::f64::consts::PI * HBAR * EPSILON_0 * SPEED_OF_LIGHT.powi(3)
        / (omega_ge.powi(3) * tau))
        .sqrt()
}

/// Full detuning table Delta[m][j] between the drive at `omega0` and every
/// ground-to-excited transition:
///
/// ```text
/// Delta_{-1,j} = omega0 - (omega_ge + E_j + gamma B)
/// Delta_{ 0,j} = omega0 - (omega_ge + E_j + Delta_GS)
/// Delta_{+1,j} = omega0 - (omega_ge + E_j - gamma B)
/// ```
///
/// Errors out if any entry violates the virtual-transition validity guard
/// |Delta| >= 10 Gamma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetuningTable {
    /// Rows: m = -1, 0, +1. Columns follow `ExcitedState::ALL`.
    pub values: [[f64; 6]; 3],
}

impl DetuningTable {
    pub fn get(&self, m: i8, state: ExcitedState) -> f64 {
        let row = (m + 1) as usize;
        let col = ExcitedState::ALL.iter().position(|s| *s == state).unwrap();
        self.values[row][col]
    }
}

pub fn detunings(nv: &NvParams, omega0: f64, levels: &ExcitedLevels) -> Result<DetuningTable> {
    let base = omega0 - nv.omega_ge;
    let zeeman = nv.gamma * nv.b_bias;
    let limit = DETUNING_GUARD_FACTOR * nv.decay_rate();
    let mut values = [[0.0; 6]; 3];
    for (col, state) in ExcitedState::ALL.iter().enumerate() {
        let e_j = levels.energy(*state);
        values[0][col] = base - e_j - zeeman;
        values[1][col] = base - e_j - nv.delta_gs;
        values[2][col] = base - e_j + zeeman;
        for row in &values {
            let d = row[col];
            if d.abs() < limit {
                return Err(Error::NearResonant { detuning: d, limit });
            }
        }
    }
    Ok(DetuningTable { values })
}

/// The six ground-state Stark shifts delta_{m,pol} (rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarkShifts {
    pub m_minus1_left: f64,
    pub m_minus1_right: f64,
    pub m0_left: f64,
    pub m0_right: f64,
    pub m_plus1_left: f64,
    pub m_plus1_right: f64,
}

/// Detunings of the six dipole-allowed transitions. The bias-field terms
/// cancel algebraically between the level energies and the detuning
/// definitions, so these are written in the cancelled form; the exact
/// cross symmetry delta_{-1,L} = delta_{+1,R}, delta_{-1,R} = delta_{+1,L}
/// then holds bit for bit at any bias.
fn pair_detunings(nv: &NvParams, omega0: f64) -> (f64, f64, f64) {
    let base = omega0 - nv.omega_ge;
    let to_a = base - nv.delta_es - nv.lambda_z; // (-1,L) via A_down; (+1,R) via A_up
    let to_e = base - nv.delta_es + nv.lambda_z; // (-1,R) via E_down; (+1,L) via E_up
    let to_el_er = base + 2.0 * nv.delta_es - nv.delta_gs; // (0,L) via E_L; (0,R) via E_R
    (to_a, to_e, to_el_er)
}

/// AC Stark shifts for a drive at `omega0` with local intensity |E|^2
/// (V/m)^2:
///
/// ```text
/// delta = (d0^2 / 2 hbar^2) Delta / (Delta^2 + Gamma^2/4) |E|^2
/// ```
///
/// With `include_linewidth` off (the far-detuned default) the Gamma^2/4
/// term is dropped.
pub fn stark_shifts(
    nv: &NvParams,
    omega0: f64,
    e_sq: f64,
    include_linewidth: bool,
) -> Result<StarkShifts> {
    if !(e_sq >= 0.0) {
        return Err(Error::validation("e_sq", "must be >= 0"));
    }
    let gamma_decay = nv.decay_rate();
    let limit = DETUNING_GUARD_FACTOR * gamma_decay;
    let (to_a, to_e, to_exy) = pair_detunings(nv, omega0);
    for d in [to_a, to_e, to_exy] {
        if d.abs() < limit {
            return Err(Error::NearResonant { detuning: d, limit });
        }
    }

    let d0 = dipole_from_lifetime(nv.tau, nv.omega_ge);
    let prefactor = d0 * d0 / (2.0 * HBAR * HBAR) * e_sq;
    let shift = |delta: f64| {
        if include_linewidth {
            prefactor * delta / (delta * delta + 0.25 * gamma_decay * gamma_decay)
        } else {
            prefactor / delta
        }
    };

    Ok(StarkShifts {
        m_minus1_left: shift(to_a),
        m_minus1_right: shift(to_e),
        m0_left: shift(to_exy),
        m0_right: shift(to_exy),
        m_plus1_left: shift(to_e),
        m_plus1_right: shift(to_a),
    })
}

/// Per-polarization effective fields (T) for the three probe qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerPolarizationFields {
    pub b01_left: f64,
    pub b01_right: f64,
    pub bm10_left: f64,
    pub bm10_right: f64,
    pub bm11_left: f64,
    pub bm11_right: f64,
}

/// B_{01} = (delta_{+1} - delta_0)/gamma, B_{-10} = (delta_0 - delta_{-1})/gamma,
/// B_{-11} = (delta_{+1} - delta_{-1})/(2 gamma), per polarization.
pub fn qubit_effective_fields_per_pol(shifts: &StarkShifts, gamma: f64) -> PerPolarizationFields {
    PerPolarizationFields {
        b01_left: (shifts.m_plus1_left - shifts.m0_left) / gamma,
        b01_right: (shifts.m_plus1_right - shifts.m0_right) / gamma,
        bm10_left: (shifts.m0_left - shifts.m_minus1_left) / gamma,
        bm10_right: (shifts.m0_right - shifts.m_minus1_right) / gamma,
        bm11_left: (shifts.m_plus1_left - shifts.m_minus1_left) / (2.0 * gamma),
        bm11_right: (shifts.m_plus1_right - shifts.m_minus1_right) / (2.0 * gamma),
    }
}

/// Weights of a unit polarization vector on the NV-frame circular basis.
///
/// The LCP/RCP unit vectors of an NV frame tilted by `phi` about y read,
/// in beam coordinates,
///
/// ```text
/// e'_L = 1/2 e_L (cos phi + 1) + 1/2 e_R (cos phi - 1) + z sin(phi)/sqrt(2)
/// e'_R = 1/2 e_R (cos phi + 1) + 1/2 e_L (cos phi - 1) + z sin(phi)/sqrt(2)
/// ```
///
/// and the axis z' = (-sin phi, 0, cos phi) completes the triad. Returns
/// (w_L, w_R, w_z) = (|e.e'_L*|^2, |e.e'_R*|^2, |e.z'|^2); the three sum
/// to one for any unit input.
pub fn nv_frame_polarization_weights(e: ComplexVec3, phi: f64) -> Result<(f64, f64, f64)> {
    let norm = e.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitAxis { norm });
    }
    let (sin_phi, cos_phi) = phi.sin_cos();
    let el = ComplexVec3::e_left();
    let er = ComplexVec3::e_right();
    let half_plus = 0.5 * (cos_phi + 1.0);
    let half_minus = 0.5 * (cos_phi - 1.0);
    let z_part = Complex64::new(FRAC_1_SQRT_2 * sin_phi, 0.0);

    let ep_l = ComplexVec3::new(
        el.x * half_plus + er.x * half_minus,
        el.y * half_plus + er.y * half_minus,
        z_part,
    );
    let ep_r = ComplexVec3::new(
        er.x * half_plus + el.x * half_minus,
        er.y * half_plus + el.y * half_minus,
        z_part,
    );
    let axis = Vec3::new(-sin_phi, 0.0, cos_phi);

    let w_l = e.dot(ep_l.conj()).norm_sqr();
    let w_r = e.dot(ep_r.conj()).norm_sqr();
    let w_z = e.dot_real(axis).norm_sqr();
    Ok((w_l, w_r, w_z))
}

/// Effective magnetic fields (T) for the three probe qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveFields {
    pub b01: f64,
    pub bm10: f64,
    pub bm11: f64,
}

/// Exact effective fields for the complex field `e_at_nv` at the NV site:
/// Stark shifts from |E|^2, per-polarization fields, and the NV-frame
/// polarization weights composed as B_q = B_{q,L} w_L + B_{q,R} w_R.
/// The w_z fraction drives no dipole-allowed transition and contributes
/// nothing.
pub fn effective_field(nv: &NvParams, e_at_nv: ComplexVec3, omega0: f64) -> Result<EffectiveFields> {
    nv.validate()?;
    if !e_at_nv.is_finite() {
        return Err(Error::NonFiniteField);
    }
    let e_sq = e_at_nv.norm_sq();
    if e_sq == 0.0 {
        return Ok(EffectiveFields { b01: 0.0, bm10: 0.0, bm11: 0.0 });
    }
    let shifts = stark_shifts(nv, omega0, e_sq, false)?;
    let fields = qubit_effective_fields_per_pol(&shifts, nv.gamma);
    let unit = e_at_nv.scaled_re(1.0 / e_sq.sqrt());
    let (w_l, w_r, _w_z) = nv_frame_polarization_weights(unit, nv.alignment_angle())?;
    Ok(EffectiveFields {
        b01: fields.b01_left * w_l + fields.b01_right * w_r,
        bm10: fields.bm10_left * w_l + fields.bm10_right * w_r,
        bm11: fields.bm11_left * w_l + fields.bm11_right * w_r,
    })
}

/// The common detuning entering the closed form: the arithmetic mean of
/// the two m = +1 pair detunings, Delta = omega0 - omega_ge - Delta_es.
pub fn closed_form_detuning(nv: &NvParams, omega0: f64) -> f64 {
    omega0 - nv.omega_ge - nv.delta_es
}

/// Closed-form effective field (T) from the projected spin density
/// s_proj = S_E . n (J s / m^3):
///
/// ```text
/// B_eff = -2 omega0 d0^2 lambda_z / (hbar^2 eps gamma Delta^2) s_proj
/// ```
pub fn closed_form_beff(s_proj: f64, nv: &NvParams, omega0: f64, delta: f64) -> Result<f64> {
    if delta == 0.0 {
        return Err(Error::validation("delta", "closed form undefined at zero detuning"));
    }
    let d0 = dipole_from_lifetime(nv.tau, nv.omega_ge);
    Ok(-2.0 * omega0 * d0 * d0 * nv.lambda_z
        / (HBAR * HBAR * nv.epsilon_medium * nv.gamma * delta * delta)
        * s_proj)
}

/// Diagnostic constant C of the wavelength-scaled closed form
/// B_eff = C / (lambda0 Delta^2) (S_E . n). Since omega0 lambda0 = 2 pi c
/// it does not depend on the drive wavelength.
pub fn stark_constant(nv: &NvParams) -> f64 {
    let d0 = dipole_from_lifetime(nv.tau, nv.omega_ge);
    -4.0 * std::f64::consts::PI * SPEED_OF_LIGHT * d0 * d0 * nv.lambda_z
        / (HBAR * HBAR * nv.epsilon_medium * nv.gamma)
}
