//! NV-center level structure, AC Stark shifts, and effective fields.

pub mod params;
pub mod stark;

pub use params::NvParams;
pub use stark::{
    closed_form_beff, closed_form_detuning, detunings, dipole_from_lifetime, effective_field,
    excited_levels, nv_frame_polarization_weights, qubit_effective_fields_per_pol, stark_constant,
    stark_shifts, DetuningTable, EffectiveFields, ExcitedLevels, ExcitedState,
    PerPolarizationFields, StarkShifts,
};
