//! Real and complex 3-vectors for fields, polarization states, and axes.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// Real 3-vector (positions, axes, spin densities).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const X: Vec3 = Vec3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: Vec3 = Vec3 { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scaled(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        Vec3::new(self.x / n, self.y / n, self.z / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        self.scaled(s)
    }
}

/// Complex 3-vector: the positive-frequency amplitude of a monochromatic
/// electric field (V/m), or a dimensionless unit polarization vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3 {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl ComplexVec3 {
    pub const ZERO: ComplexVec3 = ComplexVec3 {
        x: Complex64::new(0.0, 0.0),
        y: Complex64::new(0.0, 0.0),
        z: Complex64::new(0.0, 0.0),
    };

    pub const fn new(x: Complex64, y: Complex64, z: Complex64) -> Self {
        ComplexVec3 { x, y, z }
    }

    /// Vector with real components.
    pub fn from_real(x: f64, y: f64, z: f64) -> Self {
        ComplexVec3::new(Complex64::new(x, 0.0), Complex64::new(y, 0.0), Complex64::new(z, 0.0))
    }

    /// Left-circular unit vector e_L = (x + i y)/sqrt(2).
    pub fn e_left() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        ComplexVec3::new(Complex64::new(s, 0.0), Complex64::new(0.0, s), Complex64::new(0.0, 0.0))
    }

    /// Right-circular unit vector e_R = (x - i y)/sqrt(2).
    pub fn e_right() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        ComplexVec3::new(Complex64::new(s, 0.0), Complex64::new(0.0, -s), Complex64::new(0.0, 0.0))
    }

    pub fn conj(self) -> ComplexVec3 {
        ComplexVec3::new(self.x.conj(), self.y.conj(), self.z.conj())
    }

    /// Bilinear (non-conjugating) dot product a . b.
    pub fn dot(self, other: ComplexVec3) -> Complex64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Bilinear cross product a x b.
    pub fn cross(self, other: ComplexVec3) -> ComplexVec3 {
        ComplexVec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    /// |x|^2 + |y|^2 + |z|^2.
    pub fn norm_sq(self) -> f64 {
        self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(self, s: Complex64) -> ComplexVec3 {
        ComplexVec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn scaled_re(self, s: f64) -> ComplexVec3 {
        self.scaled(Complex64::new(s, 0.0))
    }

    /// Unit vector along self. Caller must ensure the norm is nonzero.
    pub fn normalized(self) -> ComplexVec3 {
        self.scaled_re(1.0 / self.norm())
    }

    pub fn is_finite(self) -> bool {
        [self.x, self.y, self.z].iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Dot with a real vector.
    pub fn dot_real(self, v: Vec3) -> Complex64 {
        self.x * v.x + self.y * v.y + self.z * v.z
    }
}

impl Add for ComplexVec3 {
    type Output = ComplexVec3;
    fn add(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for ComplexVec3 {
    type Output = ComplexVec3;
    fn sub(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}
