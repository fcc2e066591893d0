//! Polarization state behind a linear polarizer and quarter-wave plate.

use num_complex::Complex64;

use crate::vec3::ComplexVec3;

/// Unit polarization vector after the LP + QWP pair at rotation angle
/// `theta` (rad):
///
/// ```text
/// e = e_L cos(theta - pi/4) + e_R sin(theta - pi/4)
/// ```
///
/// with e_L = (x + iy)/sqrt(2), e_R = (x - iy)/sqrt(2). The output is
/// transverse (z component exactly zero) and has unit norm. It satisfies
/// e* x e = i sin(2 theta) z for every angle, so the degree of circular
/// polarization sweeps as sin(2 theta) with period pi.
pub fn qwp_jones(theta: f64) -> ComplexVec3 {
    let alpha = theta - std::f64::consts::FRAC_PI_4;
    let (s, c) = alpha.sin_cos();
    let el = ComplexVec3::e_left();
    let er = ComplexVec3::e_right();
    ComplexVec3::new(
        el.x * c + er.x * s,
        el.y * c + er.y * s,
        Complex64::new(0.0, 0.0),
    )
}

/// `qwp_jones` with the dichroic-mirror distortion applied after the plate:
/// the y component is stretched by the ellipticity factor and the vector is
/// renormalized. `ellipticity = 1` reproduces the ideal plate.
pub fn qwp_jones_with_ellipticity(theta: f64, ellipticity: f64) -> ComplexVec3 {
    let e = qwp_jones(theta);
    if ellipticity == 1.0 {
        return e;
    }
    let distorted = ComplexVec3::new(e.x, e.y * Complex64::new(ellipticity, 0.0), e.z);
    distorted.normalized()
}
