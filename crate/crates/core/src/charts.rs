//! The forward light cone `Σ = {p : p^μp_μ = 0, p0 > 0}` as the union of two
//! charts, coset representatives over each, and little-group extraction.
//!
//! `Σ_N` omits the ray along `−z` and contains the fiducial momentum
//! `(1,0,0,1)`; `Σ_S` omits the ray along `+z`. A chart is refused when its
//! light-cone combination `1 ± cos θ` is below [`tol::CHART_MARGIN`].
//!
//! The Wigner phase of a transformation `A` at `p` is read off the E(2) factor
//! `ℓ_out(Λ(A)p)⁻¹ · A · ℓ_in(p)`; see [`little_group`].

use core::f64::consts::{PI, TAU};
use core::fmt;

use num_complex::Complex64;
use num_traits::Euclid;

use crate::algebra::{
    e2_recognize, ComplexMatrix2, E2Element, FourVector, SL2CElement, UnitVector3,
};
use crate::trig::sin_cos;
use crate::{tol, Error, Result};

/// One of the two charts of the light cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    /// Contains the north pole `+z`.
    N,
    /// Contains the south pole `−z`.
    S,
}

impl Chart {
    pub const fn other(self) -> Self {
        match self {
            Chart::N => Chart::S,
            Chart::S => Chart::N,
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::N => "N",
            Chart::S => "S",
        })
    }
}

/// The charts admissible for a given momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChartSet {
    north: bool,
    south: bool,
}

impl ChartSet {
    pub const fn contains(&self, chart: Chart) -> bool {
        match chart {
            Chart::N => self.north,
            Chart::S => self.south,
        }
    }

    pub const fn len(&self) -> usize {
        self.north as usize + self.south as usize
    }

    pub const fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Both charts, i.e. `p_⊥ ≠ 0`.
    pub const fn is_overlap(&self) -> bool {
        self.north && self.south
    }

    pub fn iter(&self) -> impl Iterator<Item = Chart> {
        let (n, s) = (self.north, self.south);
        [(n, Chart::N), (s, Chart::S)]
            .into_iter()
            .filter_map(|(ok, c)| ok.then_some(c))
    }
}

/// Cosine and sine of `θ/2` and of `φ`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct DirectionTrig {
    pub cos_half: f64,
    pub sin_half: f64,
    pub cos_phi: f64,
    pub sin_phi: f64,
}

/// A positive-energy lightlike momentum `p = p0·(1, n(θ, φ))`.
///
/// The direction is stored as spherical angles of a reference direction plus
/// an antipode flag, so spatial inversion is an exact involution. Accessors
/// report the angles of the actual direction, with `θ ∈ [0, π]`,
/// `φ ∈ [0, 2π)`, and `φ = 0` at the poles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightlikeMomentum {
    energy: f64,
    theta: f64,
    phi: f64,
    antipodal: bool,
}

impl LightlikeMomentum {
    pub fn new(energy: f64, theta: f64, phi: f64) -> Result<Self> {
        if !energy.is_finite() || !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite);
        }
        if energy < tol::MIN_ENERGY {
            return Err(Error::InvariantViolation {
                what: "lightlike energy must be at least 1e-12",
                residual: tol::MIN_ENERGY - energy,
            });
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvariantViolation {
                what: "polar angle must lie in [0, pi]",
                residual: if theta < 0.0 { -theta } else { theta - PI },
            });
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::InvariantViolation {
                what: "azimuth must lie in [0, 2pi)",
                residual: if phi < 0.0 { -phi } else { phi - TAU },
            });
        }
        let phi = if theta == 0.0 || theta == PI {
            0.0
        } else {
            phi
        };
        Ok(Self {
            energy,
            theta,
            phi,
            antipodal: false,
        })
    }

    /// `(1, 0, 0, 1)`.
    pub fn fiducial() -> Self {
        Self {
            energy: 1.0,
            theta: 0.0,
            phi: 0.0,
            antipodal: false,
        }
    }

    /// The lightlike momentum with spatial part `v`.
    pub fn from_spatial(v: [f64; 3]) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let perp = v[0].hypot(v[1]);
        let energy = perp.hypot(v[2]);
        let theta = perp.atan2(v[2]);
        Self::new(energy, theta, wrap_2pi(v[1].atan2(v[0])))
    }

    /// Reads a lightlike four-vector, accepting `|p^μp_μ| ≤ 1e−8·p0²`.
    pub fn from_four_vector(p: &FourVector) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::NonFinite);
        }
        let q = Self::from_spatial(p.spatial())?;
        let residual = (p.p0 - q.energy).abs() / q.energy;
        if residual > 1e-8 || p.p0 <= 0.0 {
            return Err(Error::InvariantViolation {
                what: "four-vector is not positive lightlike",
                residual,
            });
        }
        Ok(q)
    }

    pub const fn energy(&self) -> f64 {
        self.energy
    }

    pub fn theta(&self) -> f64 {
        if self.antipodal {
            PI - self.theta
        } else {
            self.theta
        }
    }

    pub fn phi(&self) -> f64 {
        if !self.antipodal || self.at_pole() {
            self.phi
        } else if self.phi >= PI {
            self.phi - PI
        } else {
            wrap_2pi(self.phi + PI)
        }
    }

    fn at_pole(&self) -> bool {
        self.theta == 0.0 || self.theta == PI
    }

    pub(crate) fn trig(&self) -> DirectionTrig {
        let (s, c) = sin_cos(0.5 * self.theta);
        let (sp, cp) = if self.at_pole() {
            (0.0, 1.0)
        } else {
            sin_cos(self.phi)
        };
        if self.antipodal {
            let (sp, cp) = if self.at_pole() { (sp, cp) } else { (-sp, -cp) };
            DirectionTrig {
                cos_half: s,
                sin_half: c,
                cos_phi: cp,
                sin_phi: sp,
            }
        } else {
            DirectionTrig {
                cos_half: c,
                sin_half: s,
                cos_phi: cp,
                sin_phi: sp,
            }
        }
    }

    /// `n(θ, φ)`.
    pub fn direction(&self) -> UnitVector3 {
        let n = UnitVector3::from_angles(self.theta, self.phi);
        if self.antipodal {
            -n
        } else {
            n
        }
    }

    pub fn four_vector(&self) -> FourVector {
        let [x, y, z] = self.direction().components();
        FourVector::new(
            self.energy,
            self.energy * x,
            self.energy * y,
            self.energy * z,
        )
    }

    /// `1 + cos θ`, the normalized `p₊`.
    pub fn north_margin(&self) -> f64 {
        let t = self.trig();
        2.0 * t.cos_half * t.cos_half
    }

    /// `1 − cos θ`, the normalized `p₋`.
    pub fn south_margin(&self) -> f64 {
        let t = self.trig();
        2.0 * t.sin_half * t.sin_half
    }

    /// `cos θ`.
    pub fn cos_theta(&self) -> f64 {
        let t = self.trig();
        (t.cos_half - t.sin_half) * (t.cos_half + t.sin_half)
    }

    /// `(p0, −p⃗)`. Exactly involutive.
    pub fn tilde(&self) -> Self {
        Self {
            antipodal: !self.antipodal,
            ..*self
        }
    }

    /// The spinor `ψ` with `ψψ† = p·σ`.
    pub fn spinor(&self) -> [Complex64; 2] {
        let t = self.trig();
        let r = (2.0 * self.energy).sqrt();
        [
            Complex64::new(r * t.cos_half, 0.0),
            Complex64::new(r * t.sin_half * t.cos_phi, r * t.sin_half * t.sin_phi),
        ]
    }

    /// Inverse of [`spinor`](Self::spinor), up to the spinor's phase.
    pub fn from_spinor(psi: [Complex64; 2]) -> Result<Self> {
        let (a, b) = (psi[0].norm(), psi[1].norm());
        let energy = 0.5 * (a * a + b * b);
        let theta = 2.0 * b.atan2(a);
        let w = psi[1] * psi[0].conj();
        Self::new(energy, theta.min(PI), wrap_2pi(w.im.atan2(w.re)))
    }

    /// `Λ(A)p`. Transforms the spinor, `ψ ↦ Aψ`, so the image stays exactly
    /// on the cone.
    pub fn transform(&self, a: &SL2CElement) -> Result<Self> {
        let m = *a.matrix();
        if m == ComplexMatrix2::IDENTITY || m == -ComplexMatrix2::IDENTITY {
            return Ok(*self);
        }
        Self::from_spinor(m * self.spinor())
    }
}

fn wrap_2pi(x: f64) -> f64 {
    let r = Euclid::rem_euclid(&x, &TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// The charts containing `p`.
pub fn charts_of(p: &LightlikeMomentum) -> ChartSet {
    ChartSet {
        north: p.north_margin() >= tol::CHART_MARGIN,
        south: p.south_margin() >= tol::CHART_MARGIN,
    }
}

/// `N` when `cos θ ≥ 0`, else `S`.
pub fn default_chart(p: &LightlikeMomentum) -> Chart {
    if p.cos_theta() >= 0.0 {
        Chart::N
    } else {
        Chart::S
    }
}

/// A lightlike momentum together with a chart that contains it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartedMomentum {
    p: LightlikeMomentum,
    chart: Chart,
}

impl ChartedMomentum {
    pub fn new(p: LightlikeMomentum, chart: Chart) -> Result<Self> {
        let margin = match chart {
            Chart::N => p.north_margin(),
            Chart::S => p.south_margin(),
        };
        if margin < tol::CHART_MARGIN {
            return Err(Error::ChartViolation { chart, margin });
        }
        Ok(Self { p, chart })
    }

    /// Pairs `p` with [`default_chart`].
    pub fn with_default_chart(p: LightlikeMomentum) -> Self {
        Self {
            p,
            chart: default_chart(&p),
        }
    }

    pub(crate) const fn new_unchecked(p: LightlikeMomentum, chart: Chart) -> Self {
        Self { p, chart }
    }

    pub const fn momentum(&self) -> &LightlikeMomentum {
        &self.p
    }

    pub const fn chart(&self) -> Chart {
        self.chart
    }

    /// Same momentum in the other chart.
    pub fn switch_chart(&self) -> Result<Self> {
        Self::new(self.p, self.chart.other())
    }
}

/// The step-by-step coset representative carrying `(1,0,0,1)` to `p`.
///
/// * chart N: `ℓ(p) = a(θ, φ) · exp(½ ln p0 · σ3)`
/// * chart S: `ℓ′(p) = a(θ − π, φ) · exp(−½ ln p0 · σ3) · iσ2`
pub fn coset_rep(cp: &ChartedMomentum) -> SL2CElement {
    let t = cp.p.trig();
    let r = cp.p.energy.sqrt();
    // a(θ, φ) = cos(θ/2) + i sin(θ/2)(σ1 sin φ − σ2 cos φ)
    let a = |c: f64, s: f64| {
        let up = Complex64::new(-s * t.cos_phi, s * t.sin_phi);
        let dn = Complex64::new(s * t.cos_phi, s * t.sin_phi);
        ComplexMatrix2::new(c.into(), up, dn, c.into())
    };
    let m = match cp.chart {
        Chart::N => a(t.cos_half, t.sin_half) * ComplexMatrix2::real(r, 0.0, 0.0, 1.0 / r),
        Chart::S => {
            // a(θ − π, φ) has half-angle trig (sin θ/2, −cos θ/2);
            // diag(1/r, r)·iσ2 = [[0, 1/r], [−r, 0]]
            a(t.sin_half, -t.cos_half) * ComplexMatrix2::real(0.0, 1.0 / r, -r, 0.0)
        }
    };
    SL2CElement::from_matrix_unchecked(m)
}

/// The alternative coset representatives, closer in form to the massive
/// Hermitian boost:
///
/// * chart N: `(p̃⁽⁰⁾ + p)·σ / √(2p₊)`
/// * chart S: `(p⁽⁰⁾ − p)·σ σ1 / √(2p₋)`
pub fn coset_rep_alt(cp: &ChartedMomentum) -> SL2CElement {
    let t = cp.p.trig();
    let p0 = cp.p.energy;
    let p_plus = 2.0 * p0 * t.cos_half * t.cos_half;
    let p_minus = 2.0 * p0 * t.sin_half * t.sin_half;
    let w_mag = 2.0 * p0 * t.sin_half * t.cos_half;
    let w = Complex64::new(w_mag * t.cos_phi, w_mag * t.sin_phi); // p1 + i p2
    let m = match cp.chart {
        Chart::N => {
            let k = 1.0 / (2.0 * p_plus).sqrt();
            ComplexMatrix2::new(p_plus.into(), w.conj(), w, (2.0 + p_minus).into()).scale_real(k)
        }
        Chart::S => {
            let k = 1.0 / (2.0 * p_minus).sqrt();
            ComplexMatrix2::new(-w.conj(), (2.0 - p_plus).into(), (-p_minus).into(), -w)
                .scale_real(k)
        }
    };
    SL2CElement::from_matrix_unchecked(m)
}

/// `h(2(π − φ), 0)`, the E(2) element with `ℓ′(p) = ℓ(p) · h`.
pub fn overlap_element(p: &LightlikeMomentum) -> Result<E2Element> {
    if !charts_of(p).is_overlap() {
        return Err(Error::NotInOverlap);
    }
    E2Element::new(2.0 * (PI - p.phi()), Complex64::new(0.0, 0.0))
}

/// Result of factoring a transformation through the coset representatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LittleGroupFactor {
    pub element: E2Element,
    pub image: ChartedMomentum,
}

/// The little-group element `ℓ_out(Λ(A)p)⁻¹ · A · ℓ_in(p)` as `h(φ, α)`.
///
/// Fails with [`Error::ChartViolation`] when `chart_out` does not contain the
/// image momentum, and with [`Error::NotInE2`] if the product fails E(2)
/// recognition at 1e−9, which signals a numerical fault.
pub fn little_group(cp: &ChartedMomentum, a: &SL2CElement, chart_out: Chart) -> Result<E2Element> {
    factor_little_group(cp, a, Some(chart_out), tol::E2_MEMBERSHIP).map(|f| f.element)
}

/// [`little_group`] with an explicit E(2) tolerance, also returning the image
/// momentum. `chart_out = None` selects [`default_chart`] of the image.
pub fn factor_little_group(
    cp: &ChartedMomentum,
    a: &SL2CElement,
    chart_out: Option<Chart>,
    tol: f64,
) -> Result<LittleGroupFactor> {
    let q = cp.p.transform(a)?;
    let image = ChartedMomentum::new(q, chart_out.unwrap_or_else(|| default_chart(&q)))?;
    if image.chart == cp.chart {
        // ±I is central, so the factor is ±I itself
        let m = *a.matrix();
        if m == ComplexMatrix2::IDENTITY || m == -ComplexMatrix2::IDENTITY {
            let phi = if m == ComplexMatrix2::IDENTITY {
                0.0
            } else {
                TAU
            };
            return Ok(LittleGroupFactor {
                element: E2Element::new(phi, Complex64::new(0.0, 0.0))?,
                image,
            });
        }
    }
    let m = coset_rep(&image).inverse() * *a * coset_rep(cp);
    Ok(LittleGroupFactor {
        element: e2_recognize(&m, tol)?,
        image,
    })
}

/// `e^{iλφ}`, computed as `(e^{iφ/2})^{2λ}` so it is single-valued for the
/// 4π-periodic `φ`.
pub fn wigner_phase(h: &E2Element, lambda: i32) -> Complex64 {
    h.half_phase().powi(2 * lambda)
}
