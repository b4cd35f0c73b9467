use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Euclid;

use super::{ComplexMatrix2, SL2CElement};
use crate::trig::cis;
use crate::{Error, Result};

const FOUR_PI: f64 = 4.0 * PI;

/// An element `h(φ, α) = [[e^{iφ/2}, α], [0, e^{−iφ/2}]]` of the little group
/// of `(1,0,0,1)`.
///
/// `φ` lives in `[0, 4π)`: the angle is only defined modulo 4π on SL(2,C),
/// and `h(2π, 0) = −I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct E2Element {
    phi: f64,
    alpha: Complex64,
}

impl E2Element {
    pub const IDENTITY: Self = Self {
        phi: 0.0,
        alpha: Complex64::new(0.0, 0.0),
    };

    /// Folds `phi` into `[0, 4π)`.
    pub fn new(phi: f64, alpha: Complex64) -> Result<Self> {
        if !phi.is_finite() || !alpha.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            phi: fold_4pi(phi),
            alpha,
        })
    }

    pub const fn phi(&self) -> f64 {
        self.phi
    }

    pub const fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// `e^{iφ/2}`, the upper diagonal entry.
    pub fn half_phase(&self) -> Complex64 {
        cis(0.5 * self.phi)
    }

    /// Group product, computed in closed form.
    pub fn compose(&self, rhs: &Self) -> Self {
        let alpha = self.half_phase() * rhs.alpha + self.alpha * rhs.half_phase().conj();
        Self {
            phi: fold_4pi(self.phi + rhs.phi),
            alpha,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            phi: fold_4pi(-self.phi),
            alpha: -self.alpha,
        }
    }

    /// Distance between rotation angles on the 4π circle.
    pub fn angle_distance(&self, other: &Self) -> f64 {
        let d = fold_4pi(self.phi - other.phi);
        d.min(FOUR_PI - d)
    }
}

pub(crate) fn fold_4pi(phi: f64) -> f64 {
    let r = Euclid::rem_euclid(&phi, &FOUR_PI);
    // rem_euclid may round up to the modulus itself
    if r >= FOUR_PI {
        0.0
    } else {
        r
    }
}

/// Materializes `h(φ, α)` as an SL(2,C) matrix.
pub fn e2_matrix(h: &E2Element) -> SL2CElement {
    let d = h.half_phase();
    SL2CElement::from_matrix_unchecked(ComplexMatrix2::new(
        d,
        h.alpha,
        Complex64::new(0.0, 0.0),
        d.conj(),
    ))
}

/// Recognizes `a` as an E(2) element.
///
/// Requires `|a₂₁| ≤ tol·‖a‖∞`, unit-modulus diagonal entries and
/// `a₂₂ = conj(a₁₁)`, each within `tol`. The half angle is the principal
/// argument of `a₁₁`, so `φ = 2·arg(a₁₁)` folded into `[0, 4π)`; `−I` comes
/// back as `φ = 2π`.
pub fn e2_recognize(a: &SL2CElement, tol: f64) -> Result<E2Element> {
    let m = a.matrix();
    let residual = e2_residual(m);
    if residual.is_nan() || residual > tol {
        return Err(Error::NotInE2 { residual });
    }
    let [[d1, alpha], _] = m.entries;
    Ok(E2Element {
        phi: fold_4pi(2.0 * d1.im.atan2(d1.re)),
        alpha,
    })
}

/// Largest violation of the E(2) membership conditions.
pub(crate) fn e2_residual(m: &ComplexMatrix2) -> f64 {
    let [[d1, _], [lower, d2]] = m.entries;
    let scale = m.max_abs().max(1.0);
    let ll = lower.norm() / scale;
    let mod1 = (d1.norm() - 1.0).abs();
    let mod2 = (d2.norm() - 1.0).abs();
    let conj = (d2 - d1.conj()).norm();
    ll.max(mod1).max(mod2).max(conj)
}
