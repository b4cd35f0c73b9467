//! The timelike sector: mass `m > 0`, spin `s`.
//!
//! Basis states `|p, s3⟩` are reached from the rest frame by the Hermitian
//! standard boost [`boost_massive`]; a Lorentz transformation acts on them
//! through the Wigner rotation `ℓ(Λp)⁻¹ A ℓ(p) ∈ SU(2)` and its spin-`s`
//! matrix. States carry one sharp momentum and unit-norm amplitudes.
//!
//! The phase convention of `|p, s3⟩` is the one fixed by the Hermitian boost;
//! any other boost differing by a rest-frame rotation on the right would
//! change the amplitudes by that rotation's D-matrix.

mod spin_matrix;
mod wigner_d;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::{spinor_map, ComplexMatrix2, FourVector, SL2CElement, SU2Element};
use crate::{tol, Error, Result};

pub use spin_matrix::SpinMatrix;
pub use wigner_d::{angular_momentum, wigner_d, Spin, MAX_TWICE_SPIN};

/// A positive-energy timelike momentum, `p0 = √(m² + |p⃗|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassiveMomentum {
    mass: f64,
    spatial: [f64; 3],
}

impl MassiveMomentum {
    pub fn new(mass: f64, spatial: [f64; 3]) -> Result<Self> {
        if !mass.is_finite() || !spatial.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        if mass < tol::MIN_MASS {
            return Err(Error::InvariantViolation {
                what: "mass must be at least 1e-10",
                residual: tol::MIN_MASS - mass,
            });
        }
        Ok(Self { mass, spatial })
    }

    /// `(m, 0, 0, 0)`.
    pub fn at_rest(mass: f64) -> Result<Self> {
        Self::new(mass, [0.0; 3])
    }

    pub const fn mass(&self) -> f64 {
        self.mass
    }

    pub const fn spatial(&self) -> [f64; 3] {
        self.spatial
    }

    pub fn energy(&self) -> f64 {
        let [x, y, z] = self.spatial;
        (self.mass * self.mass + x * x + y * y + z * z).sqrt()
    }

    pub fn four_vector(&self) -> FourVector {
        let [x, y, z] = self.spatial;
        FourVector::new(self.energy(), x, y, z)
    }

    /// `(p0, −p⃗)`; the negation is exact.
    pub fn tilde(&self) -> Self {
        let [x, y, z] = self.spatial;
        Self {
            mass: self.mass,
            spatial: [-x, -y, -z],
        }
    }

    /// `Λ(A)p`, keeping the mass and recomputing the energy from it.
    pub fn transform(&self, a: &SL2CElement) -> Self {
        let q = spinor_map(a).apply(&self.four_vector());
        Self {
            mass: self.mass,
            spatial: q.spatial(),
        }
    }
}

/// `ℓ(p) = (m + p·σ) / [2m(m + p0)]^{1/2}`.
///
/// Hermitian and positive, with `ℓ(p) (m·I) ℓ(p)† = p·σ` and `ℓ` of the rest
/// momentum equal to the identity.
pub fn boost_massive(p: &MassiveMomentum) -> SL2CElement {
    let m = p.mass;
    let p0 = p.energy();
    let [x, y, z] = p.spatial;
    let k = 1.0 / (2.0 * m * (m + p0)).sqrt();
    SL2CElement::from_matrix_unchecked(ComplexMatrix2::new(
        ((m + p0 + z) * k).into(),
        Complex64::new(x * k, -y * k),
        Complex64::new(x * k, y * k),
        ((m + p0 - z) * k).into(),
    ))
}

/// The Wigner rotation `a(p, A) = ℓ(Λ(A)p)⁻¹ A ℓ(p)`.
///
/// The result is checked to lie in SU(2) within 1e−10.
pub fn wigner_rotation_massive(p: &MassiveMomentum, a: &SL2CElement) -> Result<SU2Element> {
    wigner_rotation_with_image(p, a).map(|(r, _)| r)
}

fn wigner_rotation_with_image(
    p: &MassiveMomentum,
    a: &SL2CElement,
) -> Result<(SU2Element, MassiveMomentum)> {
    let q = p.transform(a);
    let rot = boost_massive(&q).inverse() * *a * boost_massive(p);
    let su2 = SU2Element::with_tolerance(*rot.matrix(), tol::DERIVED)?;
    Ok((su2, q))
}

/// `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntrinsicParity {
    Even,
    Odd,
}

impl IntrinsicParity {
    pub fn from_sign(eta: i64) -> Result<Self> {
        match eta {
            1 => Ok(Self::Even),
            -1 => Ok(Self::Odd),
            _ => Err(Error::InvariantViolation {
                what: "intrinsic parity must be +1 or -1",
                residual: (eta.unsigned_abs() as f64 - 1.0).abs(),
            }),
        }
    }

    pub const fn sign(self) -> i64 {
        match self {
            Self::Even => 1,
            Self::Odd => -1,
        }
    }
}

/// A sharp-momentum spin-`s` state: amplitudes over `s3 = s, …, −s` at one
/// momentum, normalized to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinState {
    spin: Spin,
    momentum: MassiveMomentum,
    amplitudes: Vec<Complex64>,
    eta: IntrinsicParity,
}

impl SpinState {
    /// Requires `2s + 1` amplitudes with `Σ|c|² = 1` within 1e−12.
    pub fn new(
        spin: Spin,
        momentum: MassiveMomentum,
        amplitudes: Vec<Complex64>,
        eta: IntrinsicParity,
    ) -> Result<Self> {
        if amplitudes.len() != spin.dim() {
            return Err(Error::InvariantViolation {
                what: "amplitude count must be 2s+1",
                residual: (amplitudes.len() as f64 - spin.dim() as f64).abs(),
            });
        }
        if !amplitudes.iter().all(|z| z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let residual = (norm_sqr(&amplitudes) - 1.0).abs();
        if residual > tol::CONSTRUCT {
            return Err(Error::InvariantViolation {
                what: "spin state amplitudes must have unit norm",
                residual,
            });
        }
        Ok(Self {
            spin,
            momentum,
            amplitudes,
            eta,
        })
    }

    pub const fn spin(&self) -> Spin {
        self.spin
    }

    pub const fn momentum(&self) -> &MassiveMomentum {
        &self.momentum
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub const fn eta(&self) -> IntrinsicParity {
        self.eta
    }

    /// `Σ|c|²`.
    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amplitudes)
    }
}

fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// `Ū(A)` on a spin state: momentum `Λ(A)p`, amplitudes `D^{(s)}(a(p, A))·c`.
pub fn transport_massive(state: &SpinState, a: &SL2CElement) -> Result<SpinState> {
    let (rot, q) = wigner_rotation_with_image(&state.momentum, a)?;
    let d = wigner_d(&rot, state.spin);
    Ok(SpinState {
        spin: state.spin,
        momentum: q,
        amplitudes: d.apply(&state.amplitudes),
        eta: state.eta,
    })
}

/// `P|p, s3⟩ = η|p̃, s3⟩`. Exactly involutive.
pub fn parity_massive(state: &SpinState) -> SpinState {
    let amplitudes = match state.eta {
        IntrinsicParity::Even => state.amplitudes.clone(),
        IntrinsicParity::Odd => state.amplitudes.iter().map(|z| -z).collect(),
    };
    SpinState {
        spin: state.spin,
        momentum: state.momentum.tilde(),
        amplitudes,
        eta: state.eta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boost_su2, rotation_su2, UnitVector3};
    use alloc::vec;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sl2c(a: f64, b: f64, cc: f64, d: f64, e: f64, f: f64) -> SL2CElement {
        let x = ComplexMatrix2::new(c(a, b), c(cc, d), c(e, f), c(-a, -b));
        SL2CElement::exp_traceless(&x).unwrap()
    }

    #[test]
    fn boost_at_rest_is_identity() {
        let p = MassiveMomentum::at_rest(2.5).unwrap();
        assert_eq!(boost_massive(&p), SL2CElement::IDENTITY);
    }

    #[test]
    fn boost_along_z() {
        let s3 = 3f64.sqrt();
        let p = MassiveMomentum::new(1.0, [0.0, 0.0, s3]).unwrap();
        let l = boost_massive(&p);
        let s6 = 6f64.sqrt();
        let expected = ComplexMatrix2::real((3.0 + s3) / s6, 0.0, 0.0, (3.0 - s3) / s6);
        assert!(l.matrix().distance(&expected) < 1e-15);
        let image = spinor_map(&l).apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!(image.distance(&FourVector::new(2.0, 0.0, 0.0, s3)) < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(MassiveMomentum::new(0.0, [1.0, 0.0, 0.0]).is_err());
        assert!(MassiveMomentum::new(1.0, [f64::NAN, 0.0, 0.0]).is_err());
        let p = MassiveMomentum::at_rest(1.0).unwrap();
        assert!(SpinState::new(Spin::HALF, p, vec![c(1.0, 0.0)], IntrinsicParity::Even).is_err());
        assert!(SpinState::new(
            Spin::HALF,
            p,
            vec![c(1.0, 0.0), c(0.1, 0.0)],
            IntrinsicParity::Even
        )
        .is_err());
        assert!(IntrinsicParity::from_sign(0).is_err());
    }

    #[test]
    fn wigner_rotation_reduces_at_rest() {
        let p = MassiveMomentum::at_rest(1.3).unwrap();
        let a = rotation_su2(&UnitVector3::normalize([1.0, 2.0, -0.5]).unwrap(), 1.1);
        let w = wigner_rotation_massive(&p, &a.into()).unwrap();
        assert!(w.distance(&a) < 1e-12);

        let q = MassiveMomentum::new(1.3, [0.4, -2.0, 1.0]).unwrap();
        let w = wigner_rotation_massive(&p, &boost_massive(&q)).unwrap();
        assert!(w.distance(&SU2Element::IDENTITY) < 1e-12);
    }

    #[test]
    fn transport_examples() {
        let p = MassiveMomentum::new(0.7, [0.3, 0.1, -0.9]).unwrap();
        let amps = vec![c(0.6, 0.0), c(0.0, 0.0), c(0.0, 0.8)];
        let st = SpinState::new(Spin::ONE, p, amps.clone(), IntrinsicParity::Even).unwrap();
        let same = transport_massive(&st, &SL2CElement::IDENTITY).unwrap();
        assert!(same.momentum.four_vector().distance(&p.four_vector()) < 1e-15);
        for (x, y) in same.amplitudes.iter().zip(&amps) {
            assert!((x - y).norm() < 1e-14);
        }

        let rest = MassiveMomentum::at_rest(1.0).unwrap();
        let st = SpinState::new(Spin::ONE, rest, amps.clone(), IntrinsicParity::Even).unwrap();
        let a = rotation_su2(&UnitVector3::X, 0.8);
        let out = transport_massive(&st, &a.into()).unwrap();
        assert!(out.momentum.four_vector().distance(&rest.four_vector()) < 1e-15);
        let expected = wigner_d(&a, Spin::ONE).apply(&amps);
        for (x, y) in out.amplitudes.iter().zip(&expected) {
            assert!((x - y).norm() < 1e-13);
        }
    }

    #[test]
    fn parity_examples() {
        let rest = MassiveMomentum::at_rest(1.0).unwrap();
        let amps = vec![c(0.6, 0.0), c(0.0, 0.8)];
        let st = SpinState::new(Spin::HALF, rest, amps.clone(), IntrinsicParity::Even).unwrap();
        assert_eq!(parity_massive(&st).amplitudes, amps);

        let p = MassiveMomentum::new(1.0, [0.0, 0.0, 1.0]).unwrap();
        let st = SpinState::new(Spin::HALF, p, amps.clone(), IntrinsicParity::Odd).unwrap();
        let q = parity_massive(&st);
        assert_eq!(q.momentum.spatial(), [-0.0, -0.0, -1.0]);
        assert_eq!(q.amplitudes, vec![-amps[0], -amps[1]]);
        assert_eq!(parity_massive(&q), st);
    }

    #[test]
    fn parity_conjugates_boosts() {
        // Λ(A†⁻¹) p̃ = (Λ(A) p)~
        let a = sl2c(0.3, -0.2, 0.5, 0.1, -0.7, 0.4);
        let p = MassiveMomentum::new(0.8, [1.0, -0.5, 0.2]).unwrap();
        let lhs = p.tilde().transform(&a.dagger_inverse());
        let rhs = p.transform(&a).tilde();
        assert!(lhs.four_vector().distance(&rhs.four_vector()) < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn wigner_cocycle(
            g in proptest::array::uniform6(-1.0..1.0f64),
            h in proptest::array::uniform6(-1.0..1.0f64),
            px in -3.0..3.0f64, py in -3.0..3.0f64, pz in -3.0..3.0f64, m in 0.1..3.0f64,
        ) {
            let a = sl2c(g[0], g[1], g[2], g[3], g[4], g[5]);
            let b = sl2c(h[0], h[1], h[2], h[3], h[4], h[5]);
            let p = MassiveMomentum::new(m, [px, py, pz]).unwrap();
            let direct = wigner_rotation_massive(&p, &(b * a)).unwrap();
            let split = wigner_rotation_massive(&p.transform(&a), &b).unwrap()
                * wigner_rotation_massive(&p, &a).unwrap();
            prop_assert!(direct.distance(&split) < 1e-10);
        }

        #[test]
        fn transport_composes(
            g in proptest::array::uniform6(-1.0..1.0f64),
            rap in -2.0..2.0f64,
            twice in 0u32..=4,
        ) {
            let a = sl2c(g[0], g[1], g[2], g[3], g[4], g[5]);
            let b = boost_su2(&UnitVector3::normalize([g[1], 0.3, g[4]]).unwrap(), rap);
            let s = Spin::from_twice(twice).unwrap();
            let n = s.dim();
            let mut amps: Vec<Complex64> = (0..n).map(|k| c(1.0 + k as f64, g[k % 6])).collect();
            let norm = norm_sqr(&amps).sqrt();
            amps.iter_mut().for_each(|z| *z /= norm);
            let p = MassiveMomentum::new(1.0, [g[0], g[2], g[3]]).unwrap();
            let st = SpinState::new(s, p, amps, IntrinsicParity::Odd).unwrap();
            let two_step = transport_massive(&transport_massive(&st, &a).unwrap(), &b).unwrap();
            let one_step = transport_massive(&st, &(b * a)).unwrap();
            prop_assert!((two_step.norm_sqr() - 1.0).abs() < 1e-12);
            for (x, y) in two_step.amplitudes.iter().zip(&one_step.amplitudes) {
                prop_assert!((x - y).norm() < 1e-10);
            }
        }
    }
}
