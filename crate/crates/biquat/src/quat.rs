//! Quaternions with complex components: the Hamilton product, integer
//! powers, the vector square and the norm form.
//!
//! The complex unit `i` commutes with the quaternion units, so a vector can
//! square to zero without vanishing; such null vectors drive the singular
//! cases of the root solver.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complex::ComplexScalar;

/// A 3-vector of complex scalars.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CVector3 {
    pub c1: ComplexScalar,
    pub c2: ComplexScalar,
    pub c3: ComplexScalar,
}

impl CVector3 {
    pub const fn new(c1: ComplexScalar, c2: ComplexScalar, c3: ComplexScalar) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn zero() -> Self {
        let z = ComplexScalar::new(0.0, 0.0);
        Self::new(z, z, z)
    }

    /// The vector square `c1^2 + c2^2 + c3^2` (complex bilinear, not the
    /// Hermitian norm). Zero for null vectors such as `(1, i, 0)`.
    pub fn square(self) -> ComplexScalar {
        self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3
    }

    pub fn dot(self, o: Self) -> ComplexScalar {
        self.c1 * o.c1 + self.c2 * o.c2 + self.c3 * o.c3
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.c2 * o.c3 - self.c3 * o.c2,
            self.c3 * o.c1 - self.c1 * o.c3,
            self.c1 * o.c2 - self.c2 * o.c1,
        )
    }

    pub fn scale(self, k: ComplexScalar) -> Self {
        Self::new(k * self.c1, k * self.c2, k * self.c3)
    }

    /// Max absolute value over the 6 real components.
    pub fn norm_inf(self) -> f64 {
        [self.c1, self.c2, self.c3]
            .iter()
            .flat_map(|z| [z.re.abs(), z.im.abs()])
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(self, o: Self, tol: f64) -> bool {
        let scale = self.norm_inf().max(o.norm_inf());
        (self - o).norm_inf() <= tol * (1.0 + scale)
    }
}

impl Add for CVector3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c1 + o.c1, self.c2 + o.c2, self.c3 + o.c3)
    }
}

impl Sub for CVector3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c1 - o.c1, self.c2 - o.c2, self.c3 - o.c3)
    }
}

impl Neg for CVector3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(ComplexScalar::new(-1.0, 0.0))
    }
}

/// A quaternion with complex components: scalar part `s` and vector part `v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Biquaternion {
    pub s: ComplexScalar,
    pub v: CVector3,
}

impl Biquaternion {
    pub const fn new(s: ComplexScalar, v: CVector3) -> Self {
        Self { s, v }
    }

    pub fn from_components(
        a0: ComplexScalar,
        a1: ComplexScalar,
        a2: ComplexScalar,
        a3: ComplexScalar,
    ) -> Self {
        Self::new(a0, CVector3::new(a1, a2, a3))
    }

    pub fn zero() -> Self {
        Self::new(ComplexScalar::new(0.0, 0.0), CVector3::zero())
    }

    /// The multiplicative identity `(1, 0, 0, 0)`.
    pub fn one() -> Self {
        Self::from_scalar(ComplexScalar::new(1.0, 0.0))
    }

    pub fn from_scalar(a0: ComplexScalar) -> Self {
        Self::new(a0, CVector3::zero())
    }

    pub fn components(self) -> [ComplexScalar; 4] {
        [self.s, self.v.c1, self.v.c2, self.v.c3]
    }

    pub fn scale(self, k: ComplexScalar) -> Self {
        Self::new(k * self.s, self.v.scale(k))
    }

    /// `self` multiplied with itself `n` times; `pow(1)` is `self`.
    pub fn pow(self, n: u32) -> Self {
        assert!(n >= 1, "quaternion power needs n >= 1");
        let mut acc = self;
        for _ in 1..n {
            acc = acc * self;
        }
        acc
    }

    /// The norm form `a0^2 + a^2`. The quaternion is invertible exactly when
    /// this is nonzero; it is multiplicative over the product.
    pub fn norm_form(self) -> ComplexScalar {
        self.s * self.s + self.v.square()
    }

    /// Max absolute value over the 8 real components.
    pub fn norm_inf(self) -> f64 {
        self.s.re.abs().max(self.s.im.abs()).max(self.v.norm_inf())
    }

    pub fn approx_eq(self, o: Self, tol: f64) -> bool {
        let scale = self.norm_inf().max(o.norm_inf());
        (self - o).norm_inf() <= tol * (1.0 + scale)
    }

    pub fn is_finite(self) -> bool {
        self.components()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for Biquaternion {
    type Output = Self;

    // (a0*b0 - a.b, a0*b + b0*a + a x b)
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.s * o.s - self.v.dot(o.v),
            o.v.scale(self.s) + self.v.scale(o.s) + self.v.cross(o.v),
        )
    }
}

impl Add for Biquaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.s + o.s, self.v + o.v)
    }
}

impl Sub for Biquaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.s - o.s, self.v - o.v)
    }
}

impl Neg for Biquaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(ComplexScalar::new(-1.0, 0.0))
    }
}

fn fmt_complex(z: ComplexScalar, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if z.im == 0.0 {
        write!(f, "{}", z.re)
    } else if z.re == 0.0 {
        write!(f, "{}i", z.im)
    } else if z.im < 0.0 {
        write!(f, "{}{}i", z.re, z.im)
    } else {
        write!(f, "{}+{}i", z.re, z.im)
    }
}

impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, z) in self.components().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            fmt_complex(*z, f)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn q(a0: (f64, f64), a1: (f64, f64), a2: (f64, f64), a3: (f64, f64)) -> Biquaternion {
        Biquaternion::from_components(c(a0.0, a0.1), c(a1.0, a1.1), c(a2.0, a2.1), c(a3.0, a3.1))
    }

    #[test]
    fn identity_multiplies_trivially() {
        let b = q((2.0, 1.0), (0.5, -3.0), (0.0, 4.0), (-1.0, 0.0));
        assert_eq!(Biquaternion::one() * b, b);
        assert_eq!(b * Biquaternion::one(), b);
    }

    #[test]
    fn unit_vector_squares_to_minus_one() {
        let i_unit = q((0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0));
        assert_eq!(
            i_unit * i_unit,
            q((-1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0))
        );
    }

    #[test]
    fn null_vector_squares_to_zero() {
        let n = q((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0));
        assert!((n * n).approx_eq(Biquaternion::zero(), 1e-15));
        assert!(n.pow(2).approx_eq(Biquaternion::zero(), 1e-15));
    }

    #[test]
    fn pow_of_identity() {
        for k in 1..8 {
            assert_eq!(Biquaternion::one().pow(k), Biquaternion::one());
        }
    }

    #[test]
    fn cube_of_known_root() {
        let x = q(
            (4.0, 0.0),
            (0.0, 24.0 / 49.0),
            (0.0, 12.0 / 49.0),
            (0.0, -41.0 / 49.0),
        );
        let a = q((76.0, 0.0), (0.0, 24.0), (0.0, 12.0), (0.0, -41.0));
        assert!(x.pow(3).approx_eq(a, 1e-13));
    }

    #[test]
    fn vector_square_values() {
        let v = CVector3::new(c(0.0, 24.0), c(0.0, 12.0), c(0.0, -41.0));
        assert!((v.square() - c(-2401.0, 0.0)).norm() < 1e-12);

        let null = CVector3::new(c(0.0, 3.0), c(0.0, 4.0), c(5.0, 0.0));
        assert_eq!(null.square(), c(0.0, 0.0));

        assert_eq!(CVector3::zero().square(), c(0.0, 0.0));
    }

    #[test]
    fn norm_form_values() {
        let singular = q((-8.0, 8.0), (-16.0, 8.0), (-8.0, 24.0), (24.0, 16.0));
        assert!(singular.norm_form().norm() < 1e-12);

        let a = q((76.0, 0.0), (0.0, 24.0), (0.0, 12.0), (0.0, -41.0));
        assert!((a.norm_form() - c(3375.0, 0.0)).norm() < 1e-10);

        assert_eq!(Biquaternion::one().norm_form(), c(1.0, 0.0));
    }

    #[test]
    fn display_is_compact() {
        let a = q((76.0, 0.0), (0.0, 24.0), (1.0, 2.0), (2.0, -3.0));
        assert_eq!(a.to_string(), "(76, 24i, 1+2i, 2-3i)");
    }
}
