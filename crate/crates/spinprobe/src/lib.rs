//! Desk-scale simulation of photonic-spin-density sensing with a single
//! NV-center spin qubit.
//!
//! The pipeline mirrors the measurement chain: an analytic electromagnetic
//! field model ([`em`]) produces a complex monochromatic field; [`spin`]
//! turns it into the photonic spin density; [`nv`] converts the local
//! intensity and polarization into virtual-transition Stark shifts and an
//! effective magnetic field for the spin qubit; [`pulse`] simulates the
//! XY8 dynamically decoupled measurement that reads that field back out;
//! and [`scenario`] wires the stages into configuration-driven sweeps
//! with CSV output.

// validation deliberately writes !(x > 0.0) so that NaN fails too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod em;
pub mod error;
pub mod nv;
pub mod pulse;
pub mod scenario;
pub mod spin;
pub mod vec3;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use vec3::{ComplexVec3, Vec3};
