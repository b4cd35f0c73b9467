use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A 2×2 complex matrix, stored row-major.
///
/// Norms written `‖·‖∞` throughout the crate are the largest entry modulus,
/// see [`ComplexMatrix2::max_abs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub entries: [[Complex64; 2]; 2],
}

impl ComplexMatrix2 {
    pub const IDENTITY: Self = Self::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: Self = Self::new(ZERO, ZERO, ZERO, ZERO);
    pub const SIGMA1: Self = Self::new(ZERO, ONE, ONE, ZERO);
    pub const SIGMA2: Self = Self::new(ZERO, Complex64::new(0.0, -1.0), I, ZERO);
    pub const SIGMA3: Self = Self::new(ONE, ZERO, ZERO, Complex64::new(-1.0, 0.0));

    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self {
            entries: [[a, b], [c, d]],
        }
    }

    /// Matrix with real entries `[[a, b], [c, d]]`.
    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self::new(a, ZERO, ZERO, d)
    }

    /// `σ_μ` for `μ = 0..=3`, with `σ_0 = I`.
    ///
    /// # Panics
    ///
    /// If `mu > 3`.
    pub fn pauli(mu: usize) -> Self {
        match mu {
            0 => Self::IDENTITY,
            1 => Self::SIGMA1,
            2 => Self::SIGMA2,
            3 => Self::SIGMA3,
            _ => panic!("Pauli index {mu} out of range 0..=3"),
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn dagger(&self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn det(&self) -> Complex64 {
        let [[a, b], [c, d]] = self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    /// `[[d, -b], [-c, a]]`; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(d, -b, -c, a)
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.norm() < f64::MIN_POSITIVE {
            return Err(Error::Singular { det: det.norm() });
        }
        Ok(self.adjugate().scale(det.inv()))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(a * k, b * k, c * k, d * k)
    }

    pub fn scale_real(&self, k: f64) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(a * k, b * k, c * k, d * k)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .fold(0.0, |m, z| m.max(z.norm()))
    }

    /// `‖self − other‖∞`.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().flatten().all(|z| z.is_finite())
    }

    /// Largest entry of the anti-Hermitian part `(H − H†)/2`.
    pub fn hermitian_residual(&self) -> f64 {
        (*self - self.dagger()).scale_real(0.5).max_abs()
    }

    /// `‖M†M − I‖∞`.
    pub fn unitarity_residual(&self) -> f64 {
        (self.dagger() * *self).distance(&Self::IDENTITY)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `{self, other}`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }
}

impl Default for ComplexMatrix2 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Add for ComplexMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(a + e, b + f, c + g, d + h)
    }
}

impl Sub for ComplexMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(a - e, b - f, c - g, d - h)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = Self;
    fn neg(self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(-a, -b, -c, -d)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl Mul<[Complex64; 2]> for ComplexMatrix2 {
    type Output = [Complex64; 2];
    fn mul(self, v: [Complex64; 2]) -> [Complex64; 2] {
        let [[a, b], [c, d]] = self.entries;
        [a * v[0] + b * v[1], c * v[0] + d * v[1]]
    }
}
