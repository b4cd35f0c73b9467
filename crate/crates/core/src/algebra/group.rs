use core::ops::{Mul, Neg};

use num_complex::Complex64;

use super::{ComplexMatrix2, FourVector, LorentzMatrix, UnitVector3};
use crate::trig::sin_cos;
use crate::{tol, Error, Result};

/// `p·σ = p0·I + p1σ1 + p2σ2 + p3σ3`.
///
/// Hermitian with trace `2p0` and determinant `−p^μp_μ`.
pub fn pauli_form(p: &FourVector) -> ComplexMatrix2 {
    ComplexMatrix2::new(
        (p.p0 + p.p3).into(),
        Complex64::new(p.p1, -p.p2),
        Complex64::new(p.p1, p.p2),
        (p.p0 - p.p3).into(),
    )
}

/// Inverse of [`pauli_form`]: `p_μ = ½ tr(σ_μ H)`.
///
/// Fails with [`Error::NonHermitian`] when the anti-Hermitian part of `h`
/// exceeds 1e−10.
pub fn four_vector_of(h: &ComplexMatrix2) -> Result<FourVector> {
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let residual = h.hermitian_residual();
    if residual > tol::DERIVED {
        return Err(Error::NonHermitian { residual });
    }
    Ok(half_traces(h))
}

fn half_traces(h: &ComplexMatrix2) -> FourVector {
    let [[a, b], [c, d]] = h.entries;
    FourVector::new(
        0.5 * (a.re + d.re),
        0.5 * (b.re + c.re),
        0.5 * (c.im - b.im),
        0.5 * (a.re - d.re),
    )
}

/// An element of SL(2,C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2CElement(ComplexMatrix2);

impl SL2CElement {
    pub const IDENTITY: Self = Self(ComplexMatrix2::IDENTITY);

    /// Accepts `m` only if its entries are finite and `|det m − 1| ≤ 1e−12`.
    pub fn new(m: ComplexMatrix2) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = (m.det() - 1.0).norm();
        if residual > tol::CONSTRUCT {
            return Err(Error::InvariantViolation {
                what: "SL(2,C) unit determinant",
                residual,
            });
        }
        Ok(Self(m))
    }

    /// Divides `m` by the principal square root of its determinant.
    ///
    /// Matrices with `|det| < 1e−8` are refused as singular.
    pub fn normalized(m: ComplexMatrix2) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let det = m.det();
        if det.norm() < tol::SINGULAR_DET {
            return Err(Error::Singular { det: det.norm() });
        }
        Ok(Self(m.scale(det.sqrt().inv())))
    }

    /// `exp(X)` for a traceless `X`, via `X² = −det(X)·I`.
    pub fn exp_traceless(x: &ComplexMatrix2) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite);
        }
        let tr = x.trace().norm();
        if tr > tol::CONSTRUCT * x.max_abs().max(1.0) {
            return Err(Error::InvariantViolation {
                what: "generator must be traceless",
                residual: tr,
            });
        }
        let delta = -x.det();
        let (cosh, sinhc) = if delta.norm() < 1e-6 {
            let d2 = delta * delta;
            (
                1.0 + delta / 2.0 + d2 / 24.0 + d2 * delta / 720.0,
                1.0 + delta / 6.0 + d2 / 120.0 + d2 * delta / 5040.0,
            )
        } else {
            let s = delta.sqrt();
            (s.cosh(), s.sinh() / s)
        };
        Self::normalized(ComplexMatrix2::IDENTITY.scale(cosh) + x.scale(sinhc))
    }

    pub(crate) const fn from_matrix_unchecked(m: ComplexMatrix2) -> Self {
        Self(m)
    }

    pub const fn matrix(&self) -> &ComplexMatrix2 {
        &self.0
    }

    /// The inverse, which for unit determinant is the adjugate.
    pub fn inverse(&self) -> Self {
        Self(self.0.adjugate())
    }

    pub fn dagger(&self) -> Self {
        Self(self.0.dagger())
    }

    /// `(A†)⁻¹`, the image of `A` under conjugation by parity.
    pub fn dagger_inverse(&self) -> Self {
        Self(self.0.dagger().adjugate())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0.distance(&other.0)
    }
}

impl Mul for SL2CElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Neg for SL2CElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl From<SU2Element> for SL2CElement {
    fn from(a: SU2Element) -> Self {
        Self(a.0)
    }
}

/// An element of SU(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU2Element(ComplexMatrix2);

impl SU2Element {
    pub const IDENTITY: Self = Self(ComplexMatrix2::IDENTITY);

    /// Accepts `m` if it is unitary with unit determinant within 1e−12.
    pub fn new(m: ComplexMatrix2) -> Result<Self> {
        Self::with_tolerance(m, tol::CONSTRUCT)
    }

    pub fn with_tolerance(m: ComplexMatrix2, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let unitarity = m.unitarity_residual();
        if unitarity > tol {
            return Err(Error::InvariantViolation {
                what: "SU(2) unitarity",
                residual: unitarity,
            });
        }
        let det = (m.det() - 1.0).norm();
        if det > tol {
            return Err(Error::InvariantViolation {
                what: "SU(2) unit determinant",
                residual: det,
            });
        }
        Ok(Self(m))
    }

    pub const fn matrix(&self) -> &ComplexMatrix2 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.dagger())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0.distance(&other.0)
    }

    /// Writes the element as `exp(i·angle·(n·σ)/2)` with `angle ∈ [0, 2π]`.
    ///
    /// This covers SU(2) once: `angle = 2π` is `−I`, for which the axis is
    /// reported as `+z`. The identity likewise reports `+z`.
    pub fn axis_angle(&self) -> (UnitVector3, f64) {
        let [[a, b], [c, d]] = self.0.entries;
        let q0 = 0.5 * (a.re + d.re);
        let q = [
            0.5 * (b.im + c.im),
            0.5 * (b.re - c.re),
            0.5 * (a.im - d.im),
        ];
        let qn = super::vector::norm3(q);
        let angle = 2.0 * qn.atan2(q0);
        if qn == 0.0 {
            (UnitVector3::Z, angle)
        } else {
            (
                UnitVector3::from_raw([q[0] / qn, q[1] / qn, q[2] / qn]),
                angle,
            )
        }
    }
}

impl Mul for SU2Element {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// The two-to-one map SL(2,C) → SO(3,1), fixed by
/// `A (p·σ) A† = (Λ(A)p)·σ`.
///
/// Column `μ` of the result is the four-vector of `A σ_μ A†`.
pub fn spinor_map(a: &SL2CElement) -> LorentzMatrix {
    let m = a.0;
    let md = m.dagger();
    let cols: [[f64; 4]; 4] =
        core::array::from_fn(|mu| half_traces(&(m * ComplexMatrix2::pauli(mu) * md)).to_array());
    LorentzMatrix::from_entries_unchecked(core::array::from_fn(|nu| {
        core::array::from_fn(|mu| cols[mu][nu])
    }))
}

/// `exp(i·angle·(axis·σ)/2)`.
///
/// Under [`spinor_map`] this is a rotation by `−angle` about `axis` in the
/// right-handed sense: `rotation_su2(z, π/2)` sends `x̂` to `−ŷ`.
pub fn rotation_su2(axis: &UnitVector3, angle: f64) -> SU2Element {
    let (s, c) = sin_cos(0.5 * angle);
    let n = axis.sigma_dot();
    SU2Element(ComplexMatrix2::IDENTITY.scale_real(c) + n.scale(Complex64::new(0.0, s)))
}

/// `exp(−(v/2)σ3) = diag(e^{−v/2}, e^{v/2})`.
pub fn boost_su2_axis3(rapidity: f64) -> SL2CElement {
    let h = 0.5 * rapidity;
    SL2CElement(ComplexMatrix2::real((-h).exp(), 0.0, 0.0, h.exp()))
}

/// `exp(−(v/2) n·σ)`, a pure boost of rapidity `v` along `−n`.
pub fn boost_su2(axis: &UnitVector3, rapidity: f64) -> SL2CElement {
    let h = 0.5 * rapidity;
    SL2CElement(
        ComplexMatrix2::IDENTITY.scale_real(h.cosh()) - axis.sigma_dot().scale_real(h.sinh()),
    )
}

/// `a(θ, φ) = exp[(iθ/2)(σ1 sin φ − σ2 cos φ)]`.
///
/// Conjugation by `a(θ, φ)` rotates `n(θ′, φ)·σ` into `n(θ′ + θ, φ)·σ`, and
/// `a(θ, φ) = a(−θ, π + φ)`.
pub fn su2_a(theta: f64, phi: f64) -> SU2Element {
    let (s, c) = sin_cos(0.5 * theta);
    let (sp, cp) = sin_cos(phi);
    // σ1 sin φ − σ2 cos φ = [[0, sin φ + i cos φ], [sin φ − i cos φ, 0]]
    let off_up = Complex64::new(sp, cp);
    let off_dn = Complex64::new(sp, -cp);
    let is = Complex64::new(0.0, s);
    SU2Element(ComplexMatrix2::new(
        c.into(),
        is * off_up,
        is * off_dn,
        c.into(),
    ))
}
