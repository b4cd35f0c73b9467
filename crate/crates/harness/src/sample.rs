//! Random inputs for the verification battery.
//!
//! Each sample draws from its own ChaCha8 stream, keyed by the run seed, the
//! check, and the sample index, so results do not depend on thread scheduling.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use poincare_core::{
    charts_of, rotation_su2, Chart, ChartedMomentum, ComplexMatrix2, LightlikeMomentum,
    MassiveMomentum, PolarizationState, SL2CElement, SU2Element, UnitVector3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Words reserved per sample within a stream.
const WORDS_PER_SAMPLE: u128 = 1 << 16;

pub fn rng_for(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(index) * WORDS_PER_SAMPLE);
    rng
}

fn cx(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

/// `exp(X)` for traceless `X` with entries uniform in `[−1, 1] + i[−1, 1]`.
pub fn sl2c(rng: &mut impl Rng) -> SL2CElement {
    let (a, b, c) = (cx(rng), cx(rng), cx(rng));
    SL2CElement::exp_traceless(&ComplexMatrix2::new(a, b, c, -a))
        .expect("exponential of a bounded traceless matrix")
}

pub fn unit_vector(rng: &mut impl Rng) -> UnitVector3 {
    let cos_theta: f64 = rng.random_range(-1.0..=1.0);
    UnitVector3::from_angles(cos_theta.acos(), rng.random_range(0.0..TAU))
}

/// Uniform axis, angle uniform on the 4π double cover.
pub fn su2(rng: &mut impl Rng) -> SU2Element {
    let axis = unit_vector(rng);
    rotation_su2(&axis, rng.random_range(0.0..2.0 * TAU))
}

/// `10^u` for `u` uniform in `[lo, hi]`.
pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.random_range(lo..=hi))
}

/// `p0` log-uniform in `[1e−3, 1e3]`, direction uniform on the sphere.
pub fn lightlike(rng: &mut impl Rng) -> LightlikeMomentum {
    let p0 = log_uniform(rng, -3.0, 3.0);
    let cos_theta: f64 = rng.random_range(-1.0..=1.0);
    LightlikeMomentum::new(p0, cos_theta.acos().min(PI), rng.random_range(0.0..TAU))
        .expect("sampled angles are in range")
}

/// A lightlike momentum in a uniformly chosen admissible chart.
pub fn charted(rng: &mut impl Rng) -> ChartedMomentum {
    let p = lightlike(rng);
    let charts = charts_of(&p);
    let north = rng.random_bool(0.5);
    let chart = match (charts.contains(Chart::N), charts.contains(Chart::S)) {
        (true, true) if north => Chart::N,
        (true, true) => Chart::S,
        (true, false) => Chart::N,
        _ => Chart::S,
    };
    ChartedMomentum::new(p, chart).expect("chart is admissible")
}

/// A charted momentum in the given chart, away from the chart's edge.
pub fn charted_in(rng: &mut impl Rng, chart: Chart) -> ChartedMomentum {
    loop {
        let p = lightlike(rng);
        if let Ok(cp) = ChartedMomentum::new(p, chart) {
            return cp;
        }
    }
}

pub fn polarization(rng: &mut impl Rng, lambda: u32) -> PolarizationState {
    let cp = charted(rng);
    let mix: f64 = rng.random_range(0.0..=PI / 2.0);
    let a = Complex64::from_polar(mix.cos(), rng.random_range(0.0..TAU));
    let b = Complex64::from_polar(mix.sin(), rng.random_range(0.0..TAU));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    PolarizationState::new(cp, lambda, a / norm, b / norm).expect("normalized amplitudes")
}

/// Mass log-uniform in `[1e−1, 1e1]`, `|p⃗|` log-uniform in `[1e−3, 1e3]`.
pub fn massive(rng: &mut impl Rng) -> MassiveMomentum {
    let m = log_uniform(rng, -1.0, 1.0);
    let k = log_uniform(rng, -3.0, 3.0);
    let n = unit_vector(rng).components();
    MassiveMomentum::new(m, n.map(|x| k * x)).expect("positive mass")
}

pub fn amplitudes(rng: &mut impl Rng, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| cx(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}
