use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::ComplexMatrix2;
use crate::trig::sin_cos;
use crate::{tol, Error, Result};

/// Minkowski metric `diag(−1, 1, 1, 1)`.
pub const METRIC: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// A real four-vector `(p0, p1, p2, p3)` in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl FourVector {
    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        Self { p0, p1, p2, p3 }
    }

    pub const fn from_array(p: [f64; 4]) -> Self {
        Self::new(p[0], p[1], p[2], p[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.p1, self.p2, self.p3]
    }

    /// `(p0, −p⃗)`.
    pub fn tilde(&self) -> Self {
        Self::new(self.p0, -self.p1, -self.p2, -self.p3)
    }

    /// `p^μ p_μ = −p0² + |p⃗|²`.
    pub fn minkowski_square(&self) -> f64 {
        -self.p0 * self.p0 + self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|x| x.is_finite())
    }

    /// Largest component modulus.
    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.p0 + o.p0,
            self.p1 + o.p1,
            self.p2 + o.p2,
            self.p3 + o.p3,
        )
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.p0 - o.p0,
            self.p1 - o.p1,
            self.p2 - o.p2,
            self.p3 - o.p3,
        )
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p0, -self.p1, -self.p2, -self.p3)
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.p0 * k, self.p1 * k, self.p2 * k, self.p3 * k)
    }
}

/// A unit vector in three-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3([f64; 3]);

impl UnitVector3 {
    pub const X: Self = Self([1.0, 0.0, 0.0]);
    pub const Y: Self = Self([0.0, 1.0, 0.0]);
    pub const Z: Self = Self([0.0, 0.0, 1.0]);

    /// Accepts `n` only if `|‖n‖ − 1| ≤ 1e−12`.
    pub fn new(n: [f64; 3]) -> Result<Self> {
        if !n.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let residual = (norm3(n) - 1.0).abs();
        if residual > tol::CONSTRUCT {
            return Err(Error::InvariantViolation {
                what: "unit vector length",
                residual,
            });
        }
        Ok(Self(n))
    }

    /// Rescales a nonzero finite vector to unit length.
    pub fn normalize(v: [f64; 3]) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = norm3(v);
        if n == 0.0 {
            return Err(Error::InvariantViolation {
                what: "cannot normalize the zero vector",
                residual: 0.0,
            });
        }
        Ok(Self([v[0] / n, v[1] / n, v[2] / n]))
    }

    /// `n(θ, φ) = (sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = sin_cos(theta);
        let (sp, cp) = sin_cos(phi);
        Self([st * cp, st * sp, ct])
    }

    pub(crate) const fn from_raw(n: [f64; 3]) -> Self {
        Self(n)
    }

    pub const fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, other: &[f64; 3]) -> f64 {
        self.0[0] * other[0] + self.0[1] * other[1] + self.0[2] * other[2]
    }

    /// Angle in `[0, π]` between the two directions.
    pub fn angle_to(&self, other: &Self) -> f64 {
        let c = cross(self.0, other.0);
        norm3(c).atan2(self.dot(&other.0))
    }

    /// `n·σ⃗`.
    pub fn sigma_dot(&self) -> ComplexMatrix2 {
        let [x, y, z] = self.0;
        ComplexMatrix2::new(
            z.into(),
            Complex64::new(x, -y),
            Complex64::new(x, y),
            (-z).into(),
        )
    }
}

impl Neg for UnitVector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self([-self.0[0], -self.0[1], -self.0[2]])
    }
}

pub(crate) fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// A proper orthochronous Lorentz transformation, `entries[ν][μ] = Λ^ν_μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix {
    entries: [[f64; 4]; 4],
}

impl LorentzMatrix {
    pub const IDENTITY: Self = Self {
        entries: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    /// Validates `ΛᵀgΛ = g`, `Λ⁰₀ ≥ 1` and `det Λ = 1`, all within 1e−10.
    pub fn new(entries: [[f64; 4]; 4]) -> Result<Self> {
        if !entries.iter().flatten().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let m = Self { entries };
        let metric = m.metric_residual();
        if metric > tol::DERIVED {
            return Err(Error::InvariantViolation {
                what: "Lorentz metric preservation",
                residual: metric,
            });
        }
        if entries[0][0] < 1.0 - tol::DERIVED {
            return Err(Error::InvariantViolation {
                what: "orthochronous (Λ⁰₀ ≥ 1)",
                residual: 1.0 - entries[0][0],
            });
        }
        let det = (m.det() - 1.0).abs();
        if det > tol::DERIVED {
            return Err(Error::InvariantViolation {
                what: "proper (det Λ = 1)",
                residual: det,
            });
        }
        Ok(m)
    }

    pub(crate) const fn from_entries_unchecked(entries: [[f64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub const fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    /// `Λ^row_col`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row][col]
    }

    pub fn apply(&self, p: &FourVector) -> FourVector {
        let v = p.to_array();
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(&self.entries) {
            *o = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        FourVector::from_array(out)
    }

    /// `‖ΛᵀgΛ − g‖∞`.
    pub fn metric_residual(&self) -> f64 {
        let l = &self.entries;
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let s: f64 = (0..4).map(|k| l[k][mu] * METRIC[k] * l[k][nu]).sum();
                let g = if mu == nu { METRIC[mu] } else { 0.0 };
                worst = worst.max((s - g).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        det4(&self.entries)
    }

    /// Largest entrywise difference.
    pub fn distance(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .fold(0.0, |m, a| m.max(a.abs()))
    }
}

impl Mul for LorentzMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, o) in row.iter_mut().enumerate() {
                *o = (0..4).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        Self { entries: out }
    }
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut total = 0.0;
    for col in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for (r, mrow) in minor.iter_mut().enumerate() {
            let rest = m[r + 1].iter().enumerate().filter(|&(c, _)| c != col);
            for (dst, (_, &v)) in mrow.iter_mut().zip(rest) {
                *dst = v;
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * m[0][col] * det3(&minor);
    }
    total
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}
