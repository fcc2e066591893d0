//! Photonic spin density of a monochromatic field and its projection on
//! the sensing axis.

use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Electric contribution to the photonic spin density (J s / m^3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinDensity {
    pub s: Vec3,
}

/// S = -(i eps / 4 omega) E* x E for a monochromatic complex field.
///
/// The quantity is exactly real; the numerically-zero imaginary residue of
/// the cross product is discarded after a sanity check. `epsilon` is the
/// absolute permittivity of the host medium (F/m), `omega` in rad/s.
pub fn spin_density(e: ComplexVec3, omega: f64, epsilon: f64) -> Result<SpinDensity> {
    if !e.is_finite() {
        return Err(Error::NonFiniteField);
    }
    if !(omega > 0.0) {
        return Err(Error::validation("omega", "must be > 0"));
    }
    if !(epsilon > 0.0) {
        return Err(Error::validation("epsilon", "must be > 0"));
    }
    let c = e.conj().cross(e);
    // -(i eps / 4 omega) (a + i b) = (eps / 4 omega) (b - i a):
    // the real spin comes from the imaginary part of E* x E.
    let scale = epsilon / (4.0 * omega);
    let s = Vec3::new(c.x.im * scale, c.y.im * scale, c.z.im * scale);
    debug_assert!(
        Vec3::new(c.x.re * scale, c.y.re * scale, c.z.re * scale).norm()
            <= 1e-12 * s.norm().max(scale * e.norm_sq()) + f64::MIN_POSITIVE,
        "spin density picked up a real E* x E component"
    );
    Ok(SpinDensity { s })
}

/// Projection of the spin density on a unit axis (J s / m^3).
pub fn project_on_axis(s: SpinDensity, axis: Vec3) -> Result<f64> {
    let norm = axis.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitAxis { norm });
    }
    Ok(s.s.dot(axis))
}

/// Degree of circularity in [-1, 1]: |S| normalized by its upper bound
/// eps |E|^2 / (4 omega), signed by the dominant spin component. Equals
/// sin(2 theta) for the LP + QWP polarization states.
pub fn degree_of_circularity(e: ComplexVec3, omega: f64, epsilon: f64) -> Result<f64> {
    let norm_sq = e.norm_sq();
    if norm_sq == 0.0 {
        return Err(Error::ZeroField);
    }
    let s = spin_density(e, omega, epsilon)?.s;
    let bound = epsilon * norm_sq / (4.0 * omega);
    let magnitude = s.norm() / bound;
    let dominant = if s.x.abs() >= s.y.abs() && s.x.abs() >= s.z.abs() {
        s.x
    } else if s.y.abs() >= s.z.abs() {
        s.y
    } else {
        s.z
    };
    let signed = magnitude * if dominant < 0.0 { -1.0 } else { 1.0 };
    Ok(signed.clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::EPSILON_0;
    use crate::em::qwp_jones;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_4, PI, TAU};

    const OMEGA: f64 = 2.354e15;

    #[test]
    fn left_circular_gives_positive_z_spin() {
        // fixes the sign convention for everything downstream
        let e0 = 3.1e6;
        let e = ComplexVec3::e_left().scaled_re(e0);
        let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
        let expected = EPSILON_0 * e0 * e0 / (4.0 * OMEGA);
        assert!((s.z - expected).abs() < 1e-12 * expected);
        assert!(s.x.abs() < 1e-15 * expected && s.y.abs() < 1e-15 * expected);
    }

    #[test]
    fn linear_polarization_carries_no_spin() {
        let e = ComplexVec3::from_real(2.5e5, 0.0, 0.0);
        let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
        assert_eq!(s.norm(), 0.0);
    }

    #[test]
    fn qwp_field_spin_follows_sin_two_theta() {
        let e0 = 1e6;
        for theta in [0.0, PI / 8.0, FRAC_PI_4, 1.1, 2.9] {
            let e = qwp_jones(theta).scaled_re(e0);
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            let expected = EPSILON_0 * e0 * e0 / (4.0 * OMEGA) * (2.0 * theta).sin();
            assert!((s.z - expected).abs() < 1e-12 * (EPSILON_0 * e0 * e0 / (4.0 * OMEGA)));
        }
    }

    #[test]
    fn projection_on_tilted_axis() {
        let s = SpinDensity { s: Vec3::new(0.0, 0.0, 2.0) };
        let n = Vec3::new(1.0, 1.0, -1.0).normalized();
        let p = project_on_axis(s, n).unwrap();
        assert!((p + 2.0 / 3.0f64.sqrt()).abs() < 1e-14);
        // parallel and perpendicular axes
        assert_eq!(project_on_axis(s, Vec3::Z).unwrap(), s.s.norm());
        assert_eq!(project_on_axis(s, Vec3::X).unwrap(), 0.0);
    }

    #[test]
    fn projection_rejects_non_unit_axis() {
        let s = SpinDensity { s: Vec3::Z };
        assert!(matches!(
            project_on_axis(s, Vec3::new(0.0, 0.0, 1.1)),
            Err(Error::NonUnitAxis { .. })
        ));
    }

    #[test]
    fn degree_of_circularity_special_values() {
        let circ = degree_of_circularity(ComplexVec3::e_left(), OMEGA, EPSILON_0).unwrap();
        assert!((circ - 1.0).abs() < 1e-12);
        let lin = degree_of_circularity(ComplexVec3::from_real(1.0, 0.0, 0.0), OMEGA, EPSILON_0)
            .unwrap();
        assert_eq!(lin, 0.0);
        let eighth = degree_of_circularity(qwp_jones(PI / 8.0), OMEGA, EPSILON_0).unwrap();
        assert!((eighth - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        let right = degree_of_circularity(qwp_jones(3.0 * PI / 4.0), OMEGA, EPSILON_0).unwrap();
        assert!((right + 1.0).abs() < 1e-12);
        assert!(matches!(
            degree_of_circularity(ComplexVec3::ZERO, OMEGA, EPSILON_0),
            Err(Error::ZeroField)
        ));
    }

    #[test]
    fn nonfinite_field_is_rejected() {
        let mut e = ComplexVec3::e_left();
        e.x = Complex64::new(f64::NAN, 0.0);
        assert!(matches!(spin_density(e, OMEGA, EPSILON_0), Err(Error::NonFiniteField)));
    }

    fn arb_field() -> impl Strategy<Value = ComplexVec3> {
        let c = || (-1e6..1e6f64).prop_flat_map(|re| (-1e6..1e6f64).prop_map(move |im| Complex64::new(re, im)));
        (c(), c(), c()).prop_map(|(x, y, z)| ComplexVec3::new(x, y, z))
    }

    proptest! {
        #[test]
        fn conjugation_negates_spin(e in arb_field()) {
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            let sc = spin_density(e.conj(), OMEGA, EPSILON_0).unwrap().s;
            prop_assert!((s + sc).norm() <= 1e-12 * s.norm().max(1e-300));
        }

        #[test]
        fn global_phase_leaves_spin_invariant(e in arb_field(), alpha in 0.0..TAU) {
            let rotated = e.scaled(Complex64::from_polar(1.0, alpha));
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            let sr = spin_density(rotated, OMEGA, EPSILON_0).unwrap().s;
            prop_assert!((s - sr).norm() <= 1e-10 * s.norm().max(EPSILON_0 * e.norm_sq() / (4.0 * OMEGA)));
        }

        #[test]
        fn spin_scales_with_intensity(e in arb_field(), scale in 0.01..100.0f64) {
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            let ss = spin_density(e.scaled_re(scale), OMEGA, EPSILON_0).unwrap().s;
            prop_assert!((ss - s * (scale * scale)).norm() <= 1e-9 * ss.norm().max(1e-300));
        }

        #[test]
        fn real_fields_have_zero_spin(x in -1e6..1e6f64, y in -1e6..1e6f64, z in -1e6..1e6f64, alpha in 0.0..TAU) {
            let e = ComplexVec3::from_real(x, y, z).scaled(Complex64::from_polar(1.0, alpha));
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            prop_assert!(s.norm() <= 1e-12 * (EPSILON_0 * e.norm_sq() / (4.0 * OMEGA)).max(1e-300));
        }

        #[test]
        fn spin_never_exceeds_its_bound(e in arb_field()) {
            prop_assume!(e.norm_sq() > 0.0);
            let s = spin_density(e, OMEGA, EPSILON_0).unwrap().s;
            let bound = EPSILON_0 * e.norm_sq() / (4.0 * OMEGA);
            prop_assert!(s.norm() <= bound * (1.0 + 1e-12));
        }
    }
}
