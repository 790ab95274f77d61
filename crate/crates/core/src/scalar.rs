//! A minimal complex scalar stored as an explicit re/im pair.

use crate::math;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    /// `exp(i·theta)`; unit modulus by construction.
    pub fn unit_phase(theta: f64) -> Self {
        Self {
            re: math::cos(theta),
            im: math::sin(theta),
        }
    }

    pub fn modulus(self) -> f64 {
        math::hypot(self.re, self.im)
    }

    pub fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }

    pub fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }

    pub fn scale(self, factor: f64) -> Self {
        Self::new(self.re * factor, self.im * factor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_phase_has_unit_modulus() {
        for k in -20..=20 {
            let z = ComplexScalar::unit_phase(0.37 * k as f64);
            assert!((z.modulus() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn one_minus_unit_phase_bounded_by_angle() {
        // |1 - e^{iα}| ≤ |α| over a coarse sweep; the dense sweep lives in
        // the acceptance suite.
        for k in -100..=100 {
            let alpha = 0.1 * k as f64;
            let d = ComplexScalar::ONE.sub(ComplexScalar::unit_phase(alpha));
            assert!(d.modulus() <= alpha.abs() + 1e-12);
        }
    }
}
