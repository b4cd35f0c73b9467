use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use super::spin_matrix::{hermitian_eigen, SpinMatrix};
use crate::algebra::SU2Element;
use crate::trig::cis;
use crate::{Error, Result};

/// Largest supported `2s`.
pub const MAX_TWICE_SPIN: u32 = 20;

/// A spin `s ∈ {0, 1/2, 1, …, 10}`, stored as `2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Self = Self(0);
    pub const HALF: Self = Self(1);
    pub const ONE: Self = Self(2);

    pub fn from_twice(twice_s: u32) -> Result<Self> {
        if twice_s > MAX_TWICE_SPIN {
            return Err(Error::UnsupportedSpin { twice_s });
        }
        Ok(Self(twice_s))
    }

    /// Accepts `s` when `2s` is a non-negative integer not above 20.
    pub fn new(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        if !twice.is_finite() || twice < 0.0 || twice != twice.round() {
            return Err(Error::InvariantViolation {
                what: "spin must be a non-negative half-integer",
                residual: (twice - twice.round()).abs(),
            });
        }
        if twice > MAX_TWICE_SPIN as f64 {
            return Err(Error::UnsupportedSpin {
                twice_s: twice.min(u32::MAX as f64) as u32,
            });
        }
        Self::from_twice(twice as u32)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Multiplet dimension `2s + 1`.
    pub const fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// `s3` for basis index `k`, i.e. `s − k`.
    pub fn projection(self, k: usize) -> f64 {
        self.value() - k as f64
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Angular momentum matrices `(J1, J2, J3)` for spin `s` in the `s3`-descending
/// basis, built from `J± |s,m⟩ = √(s(s+1) − m(m±1)) |s,m±1⟩`.
pub fn angular_momentum(s: Spin) -> [SpinMatrix; 3] {
    let n = s.dim();
    let sv = s.value();
    let mut j1 = SpinMatrix::zeros(n);
    let mut j2 = SpinMatrix::zeros(n);
    let mut j3 = SpinMatrix::zeros(n);
    for k in 0..n {
        let m = s.projection(k);
        j3[(k, k)] = Complex64::new(m, 0.0);
        if k > 0 {
            // ⟨m+1| J+ |m⟩
            let up = (sv * (sv + 1.0) - m * (m + 1.0)).sqrt();
            // J1 = (J+ + J−)/2, J2 = (J+ − J−)/(2i)
            j1[(k - 1, k)] += Complex64::new(0.5 * up, 0.0);
            j1[(k, k - 1)] += Complex64::new(0.5 * up, 0.0);
            j2[(k - 1, k)] += Complex64::new(0.0, -0.5 * up);
            j2[(k, k - 1)] += Complex64::new(0.0, 0.5 * up);
        }
    }
    [j1, j2, j3]
}

/// The spin-`s` representation matrix `D^{(s)}(a) = exp(i·ω·n·J)` for
/// `a = exp(i·ω·n·σ/2)`.
///
/// `n·J` is diagonalized by Jacobi rotations; its spectrum is known to be
/// `{s, s−1, …, −s}`, so computed eigenvalues are snapped to it before
/// exponentiating. `ω ∈ [0, 2π]` covers SU(2) once, which keeps the sign of
/// `D(−I) = (−1)^{2s}` for half-integer spin.
pub fn wigner_d(a: &SU2Element, s: Spin) -> SpinMatrix {
    let n = s.dim();
    let (axis, omega) = a.axis_angle();
    if s == Spin::ZERO || omega == 0.0 {
        return SpinMatrix::identity(n);
    }
    let [j1, j2, j3] = angular_momentum(s);
    let [nx, ny, nz] = axis.components();
    let mut g = SpinMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            g[(r, c)] = j1[(r, c)] * nx + j2[(r, c)] * ny + j3[(r, c)] * nz;
        }
    }
    let (vals, v) = hermitian_eigen(&g);
    let phases: Vec<Complex64> = vals
        .iter()
        .map(|&l| cis(omega * (2.0 * l).round() / 2.0))
        .collect();
    let mut out = SpinMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            out[(r, c)] = (0..n)
                .map(|k| v[(r, k)] * phases[k] * v[(c, k)].conj())
                .sum();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rotation_su2, ComplexMatrix2, UnitVector3};
    use alloc::vec;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    /// Brute-force oracle: restrict `a^{⊗2s}` to the symmetric subspace,
    /// `|s, m⟩ ∝ Σ` over bit strings with `s + m` up-spins.
    fn tensor_power_d(a: &ComplexMatrix2, s: Spin) -> SpinMatrix {
        let n = s.twice() as usize;
        let dim = s.dim();
        let states = 1usize << n;
        let ups = |b: usize| n - b.count_ones() as usize; // bit 1 = down
        let binom =
            |k: usize| -> f64 { (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64) };
        let mut out = SpinMatrix::zeros(dim);
        for row in 0..dim {
            let u_row = n - row; // s + m' with m' = s − row
            for col in 0..dim {
                let u_col = n - col;
                let mut acc = Complex64::new(0.0, 0.0);
                for bp in (0..states).filter(|&b| ups(b) == u_row) {
                    for b in (0..states).filter(|&b| ups(b) == u_col) {
                        let mut prod = Complex64::new(1.0, 0.0);
                        for i in 0..n {
                            prod *= a.get((bp >> i) & 1, (b >> i) & 1);
                        }
                        acc += prod;
                    }
                }
                out[(row, col)] = acc / (binom(u_row) * binom(u_col)).sqrt();
            }
        }
        out
    }

    fn su2_from(axis: [f64; 3], angle: f64) -> SU2Element {
        rotation_su2(&UnitVector3::normalize(axis).unwrap(), angle)
    }

    #[test]
    fn spin_validation() {
        assert_eq!(Spin::new(1.5).unwrap().twice(), 3);
        assert!(Spin::new(0.3).is_err());
        assert!(Spin::new(-1.0).is_err());
        assert!(matches!(
            Spin::new(10.5),
            Err(Error::UnsupportedSpin { twice_s: 21 })
        ));
        assert!(Spin::from_twice(20).is_ok());
        assert_eq!(alloc::format!("{}", Spin::new(1.5).unwrap()), "3/2");
    }

    #[test]
    fn spin_zero_and_half() {
        let a = su2_from([0.3, -0.4, 0.8], 2.2);
        let d0 = wigner_d(&a, Spin::ZERO);
        assert_eq!(d0, SpinMatrix::identity(1));
        let d = wigner_d(&a, Spin::HALF);
        for r in 0..2 {
            for c in 0..2 {
                assert!((d[(r, c)] - a.matrix().get(r, c)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn spin_one_pi_about_y_is_antidiagonal() {
        // Frozen from the tensor-square oracle: rows/cols s3 = 1, 0, −1.
        let a = rotation_su2(&UnitVector3::Y, PI);
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let expected =
            SpinMatrix::from_rows(3, vec![zero, zero, one, zero, -one, zero, one, zero, zero])
                .unwrap();
        assert!(tensor_power_d(a.matrix(), Spin::ONE).distance(&expected) < 1e-15);
        assert!(wigner_d(&a, Spin::ONE).distance(&expected) < 1e-14);
    }

    #[test]
    fn double_cover_sign() {
        let minus = rotation_su2(&UnitVector3::Z, 2.0 * PI);
        for twice in 0..=6 {
            let s = Spin::from_twice(twice).unwrap();
            let sign = if twice % 2 == 0 { 1.0 } else { -1.0 };
            let expected = SpinMatrix::identity(s.dim());
            let d = wigner_d(&minus, s);
            for k in 0..s.dim() {
                assert!((d[(k, k)] - expected[(k, k)] * sign).norm() < 1e-14);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matches_tensor_power_oracle(
            x in -1.0..1.0f64, y in -1.0..1.0f64, z in 0.1..1.0f64,
            angle in 0.0..(4.0 * PI), twice in 0u32..=6,
        ) {
            let a = su2_from([x, y, z], angle);
            let s = Spin::from_twice(twice).unwrap();
            let d = wigner_d(&a, s);
            prop_assert!(d.distance(&tensor_power_d(a.matrix(), s)) < 1e-12);
        }

        #[test]
        fn homomorphism_and_unitarity(
            x in -1.0..1.0f64, y in -1.0..1.0f64, z in 0.1..1.0f64, w1 in 0.0..(4.0 * PI),
            u in -1.0..1.0f64, v in 0.1..1.0f64, w2 in 0.0..(4.0 * PI),
            twice in 0u32..=20,
        ) {
            let a = su2_from([x, y, z], w1);
            let b = su2_from([u, v, x], w2);
            let s = Spin::from_twice(twice).unwrap();
            let dab = wigner_d(&(a * b), s);
            let prod = &wigner_d(&a, s) * &wigner_d(&b, s);
            prop_assert!(dab.distance(&prod) < 1e-9);
            prop_assert!(dab.unitarity_residual() < 1e-10);
        }
    }
}
