//! Dense complex polynomials stored in ascending coefficient order.
//!
//! `coeffs()[j]` is the coefficient of `z^j`, so `a_0` comes first. The
//! leading coefficient is never zero: trailing zeros are rejected instead of
//! trimmed, because every counting bound reads `a_n` and the degree directly.

use alloc::vec::Vec;

use num_complex::Complex64;
use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type Complex = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("coefficient a_{0} is not finite")]
    NonFinite(usize),
    #[error("leading coefficient a_{0} is zero; trailing zeros are not trimmed")]
    ZeroLeading(usize),
    #[error("derivative of a constant polynomial")]
    DerivativeOfConstant,
    #[error("scale factor must be nonzero")]
    ZeroScale,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        if let Some(j) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(PolyError::NonFinite(j));
        }
        let n = coeffs.len() - 1;
        if coeffs[n] == Complex::new(0.0, 0.0) {
            return Err(PolyError::ZeroLeading(n));
        }
        Ok(Self { coeffs })
    }

    /// Builds a polynomial with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    /// Builds a polynomial from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, PolyError> {
        Self::new(pairs.iter().map(|&(re, im)| Complex::new(re, im)).collect())
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn leading(&self) -> Complex {
        self.coeffs[self.degree()]
    }

    #[inline]
    pub fn constant_term(&self) -> Complex {
        self.coeffs[0]
    }

    /// Real parts `α_j` of the coefficients.
    pub fn real_parts(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.coeffs.iter().map(|c| c.re)
    }

    /// `Σ |β_j|`, the sum of absolute imaginary parts.
    pub fn imag_abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).sum()
    }

    /// Horner evaluation, highest coefficient first.
    pub fn eval(&self, z: Complex) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }

    /// Evaluates `p(z)` and `p'(z)` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex) -> (Complex, Complex) {
        let mut p = Complex::new(0.0, 0.0);
        let mut dp = Complex::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// `Σ |a_j| |z|^j`, the natural scale of the rounding error in `eval(z)`.
    pub fn abs_eval(&self, z_abs: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * z_abs + a.norm())
    }

    pub fn derivative(&self) -> Result<Self, PolyError> {
        if self.degree() == 0 {
            return Err(PolyError::DerivativeOfConstant);
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(j, &a)| a * j as f64).collect();
        Ok(Self { coeffs })
    }

    /// `g(z) = (1 - z) p(z)`, with coefficients
    /// `[a_0, a_1 - a_0, ..., a_n - a_{n-1}, -a_n]`.
    pub fn g_transform(&self) -> Self {
        let n = self.degree();
        let mut coeffs = Vec::with_capacity(n + 2);
        coeffs.push(self.coeffs[0]);
        coeffs.extend(self.coeffs.windows(2).map(|w| w[1] - w[0]));
        coeffs.push(-self.coeffs[n]);
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex) -> Result<Self, PolyError> {
        if c == Complex::new(0.0, 0.0) {
            return Err(PolyError::ZeroScale);
        }
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(PolyError::NonFinite(0));
        }
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }
}
