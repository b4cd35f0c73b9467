//! The randomized invariant battery behind `poincare verify`.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use poincare_core::{
    boost_massive, charts_of, convert_chart, coset_rep, coset_rep_alt, default_chart, e2_matrix,
    e2_recognize, four_vector_of, little_group, overlap_element, parity_massive, parity_op,
    parity_rotation_action, pauli_form, rotation_su2, sigma_ops, spinor_map, su2_a, tangent_field,
    transport_massive, transport_massless, wigner_d, wigner_phase, wigner_rotation_massive, Chart,
    ChartedMomentum, ComplexMatrix2, E2Element, FourVector, IntrinsicParity, LightlikeMomentum,
    MassiveMomentum, SL2CElement, Spin, SpinState, UnitVector3,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::sample;

pub const MAX_SAMPLES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u64,
    /// Threshold overrides keyed by check name.
    #[serde(default)]
    pub tol: BTreeMap<String, f64>,
    /// Restricts the run to these checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 1000,
            tol: BTreeMap::new(),
            checks: None,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> CliResult<()> {
        if self.samples == 0 || self.samples > MAX_SAMPLES {
            return Err(CliError::Input(format!(
                "samples must lie in 1..={MAX_SAMPLES}, got {}",
                self.samples
            )));
        }
        let names: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
        for (name, &t) in &self.tol {
            if !names.contains(&name.as_str()) {
                return Err(CliError::Input(format!("unknown check `{name}`")));
            }
            if !(t.is_finite() && t >= 0.0) {
                return Err(CliError::Input(format!(
                    "tolerance for `{name}` must be >= 0"
                )));
            }
        }
        for name in self.checks.iter().flatten() {
            if !names.contains(&name.as_str()) {
                return Err(CliError::Input(format!("unknown check `{name}`")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub module: String,
    pub evaluated: u64,
    pub max_residual: f64,
    pub threshold: f64,
    /// Evaluations that returned an error instead of a residual.
    pub errors: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: u64,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}

type Outcome = poincare_core::Result<f64>;

#[derive(Clone, Copy)]
enum Count {
    Samples,
    Fixed(u64),
}

struct Check {
    name: &'static str,
    module: &'static str,
    threshold: f64,
    count: Count,
    eval: fn(u64, &mut ChaCha8Rng) -> Outcome,
}

#[derive(Clone, Copy, Default)]
struct Acc {
    max: f64,
    errors: u64,
}

impl Acc {
    fn of(o: Outcome) -> Self {
        match o {
            Ok(r) if !r.is_nan() => Acc { max: r, errors: 0 },
            _ => Acc {
                max: 0.0,
                errors: 1,
            },
        }
    }

    fn merge(self, other: Self) -> Self {
        Acc {
            max: self.max.max(other.max),
            errors: self.errors + other.errors,
        }
    }
}

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.name)
}

/// Runs the battery. Deterministic in `config`: each sample has its own
/// random stream and the reduction is a maximum.
pub fn run(config: &VerifyConfig) -> CliResult<VerifyReport> {
    config.validate()?;
    let checks = CHECKS
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            config
                .checks
                .as_ref()
                .is_none_or(|only| only.iter().any(|n| n == c.name))
        })
        .map(|(stream, c)| {
            let n = match c.count {
                Count::Samples => config.samples,
                Count::Fixed(n) => n,
            };
            let acc = (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut rng = sample::rng_for(config.seed, stream as u64, i);
                    Acc::of((c.eval)(i, &mut rng))
                })
                .reduce(Acc::default, Acc::merge);
            let threshold = config.tol.get(c.name).copied().unwrap_or(c.threshold);
            CheckReport {
                name: c.name.to_string(),
                module: c.module.to_string(),
                evaluated: n,
                max_residual: acc.max,
                threshold,
                errors: acc.errors,
                pass: acc.errors == 0 && acc.max <= threshold,
            }
        })
        .collect::<Vec<_>>();
    Ok(VerifyReport {
        seed: config.seed,
        samples: config.samples,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

const ALGEBRA: &str = "core_algebra";
const MASSIVE: &str = "massive_sector";
const CHARTS: &str = "massless_charts";
const POLARIZATION: &str = "polarization_space";

const OVERLAP_GRID: (u64, u64, u64) = (30, 30, 7);
const POLE_MARGIN: f64 = 1e-6;

static CHECKS: &[Check] = &[
    Check {
        name: "homomorphism",
        module: ALGEBRA,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let (a, b) = (sample::sl2c(rng), sample::sl2c(rng));
            Ok(spinor_map(&(b * a)).distance(&(spinor_map(&b) * spinor_map(&a))))
        },
    },
    Check {
        name: "metric_preservation",
        module: ALGEBRA,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| Ok(spinor_map(&sample::sl2c(rng)).metric_residual()),
    },
    Check {
        name: "kernel",
        module: ALGEBRA,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let a = sample::sl2c(rng);
            Ok(spinor_map(&-a).distance(&spinor_map(&a)))
        },
    },
    Check {
        name: "pauli_determinant",
        module: ALGEBRA,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let p = FourVector::from_array([(); 4].map(|_| rng.random_range(-10.0..=10.0)));
            let [p0, p1, p2, p3] = p.to_array();
            let scale = (p0 * p0).max(p1 * p1 + p2 * p2 + p3 * p3).max(1e-300);
            Ok((pauli_form(&p).det() + p.minkowski_square()).norm() / scale)
        },
    },
    Check {
        name: "rotation_conjugation",
        module: ALGEBRA,
        threshold: 1e-12,
        count: Count::Fixed(20 * 20 * 20),
        eval: |i, _| {
            let t = PI * (i % 20) as f64 / 19.0;
            let t2 = PI * ((i / 20) % 20) as f64 / 19.0;
            let phi = TAU * (i / 400) as f64 / 20.0;
            let a = *su2_a(t, phi).matrix();
            let lhs = a * UnitVector3::from_angles(t2, phi).sigma_dot() * a.dagger();
            Ok(lhs.distance(&UnitVector3::from_angles(t + t2, phi).sigma_dot()))
        },
    },
    Check {
        name: "e2_round_trip",
        module: ALGEBRA,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let h = sample_e2(rng);
            let back = e2_recognize(&e2_matrix(&h), 1e-9)?;
            Ok(back
                .angle_distance(&h)
                .max((back.alpha() - h.alpha()).norm() / h.alpha().norm().max(1.0)))
        },
    },
    Check {
        name: "wigner_rotation_in_su2",
        module: MASSIVE,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let p = sample::massive(rng);
            let a = sample::sl2c(rng);
            let q = p.transform(&a);
            let m = *(boost_massive(&q).inverse() * a * boost_massive(&p)).matrix();
            Ok(m.unitarity_residual().max((m.det() - 1.0).norm()))
        },
    },
    Check {
        name: "rest_frame_reduction",
        module: MASSIVE,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let p = MassiveMomentum::at_rest(sample::log_uniform(rng, -2.0, 2.0))?;
            let r = sample::su2(rng);
            Ok(wigner_rotation_massive(&p, &r.into())?.distance(&r))
        },
    },
    Check {
        name: "wigner_d_homomorphism",
        module: MASSIVE,
        threshold: 1e-9,
        count: Count::Samples,
        eval: |_, rng| {
            let s = Spin::from_twice(rng.random_range(0..=20))?;
            let (a, b) = (sample::su2(rng), sample::su2(rng));
            Ok(wigner_d(&(a * b), s).distance(&(&wigner_d(&a, s) * &wigner_d(&b, s))))
        },
    },
    Check {
        name: "wigner_d_unitarity",
        module: MASSIVE,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let s = Spin::from_twice(rng.random_range(0..=20))?;
            Ok(wigner_d(&sample::su2(rng), s).unitarity_residual())
        },
    },
    Check {
        name: "massive_transport_norm",
        module: MASSIVE,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let st = spin_state(rng)?;
            Ok((transport_massive(&st, &sample::sl2c(rng))?.norm_sqr() - 1.0).abs())
        },
    },
    Check {
        name: "massive_parity_boost",
        module: MASSIVE,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let p = sample::massive(rng).four_vector();
            let a = sample::sl2c(rng);
            let lhs = spinor_map(&a.dagger_inverse()).apply(&p.tilde());
            let rhs = spinor_map(&a).apply(&p).tilde();
            Ok(lhs.distance(&rhs) / rhs.p0)
        },
    },
    Check {
        name: "massive_parity_involution",
        module: MASSIVE,
        threshold: 0.0,
        count: Count::Samples,
        eval: |_, rng| {
            let st = spin_state(rng)?;
            Ok(exact(parity_massive(&parity_massive(&st)) == st))
        },
    },
    Check {
        name: "coset_image",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let p = sample::lightlike(rng);
            let target = p.four_vector();
            let mut worst: f64 = 0.0;
            for chart in charts_of(&p).iter() {
                let cp = ChartedMomentum::new(p, chart)?;
                for l in [coset_rep(&cp), coset_rep_alt(&cp)] {
                    worst = worst.max(fiducial_image(&l)?.distance(&target) / p.energy());
                }
            }
            Ok(worst)
        },
    },
    Check {
        name: "overlap_step",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Fixed(OVERLAP_GRID.0 * OVERLAP_GRID.1 * OVERLAP_GRID.2),
        eval: |i, _| {
            let (n, s) = overlap_pair(i)?;
            let h = overlap_element(n.momentum())?;
            Ok(relative(&coset_rep(&s), &(coset_rep(&n) * e2_matrix(&h))))
        },
    },
    Check {
        name: "overlap_alt",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Fixed(OVERLAP_GRID.0 * OVERLAP_GRID.1 * OVERLAP_GRID.2),
        eval: |i, _| {
            let (n, s) = overlap_pair(i)?;
            let p = n.momentum();
            let v = p.four_vector();
            let perp = v.p1.hypot(v.p2);
            let h = E2Element::new(
                2.0 * (PI - p.phi()),
                Complex64::new(2.0 * (1.0 - v.p3) / perp, 0.0),
            )?;
            Ok(relative(
                &coset_rep_alt(&s),
                &(coset_rep_alt(&n) * e2_matrix(&h)),
            ))
        },
    },
    Check {
        name: "relating_elements",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Fixed(OVERLAP_GRID.0 * OVERLAP_GRID.1 * OVERLAP_GRID.2),
        eval: |i, _| {
            let (n, s) = overlap_pair(i)?;
            let mut worst: f64 = 0.0;
            for cp in [n, s] {
                let h = relating_element(&cp)?;
                worst = worst.max(relative(
                    &coset_rep_alt(&cp),
                    &(coset_rep(&cp) * e2_matrix(&h)),
                ));
            }
            Ok(worst)
        },
    },
    Check {
        name: "relating_angle",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Fixed(OVERLAP_GRID.0 * OVERLAP_GRID.1 * OVERLAP_GRID.2),
        eval: |i, _| {
            let (n, s) = overlap_pair(i)?;
            let mut worst: f64 = 0.0;
            for cp in [n, s] {
                let h = e2_recognize(&(coset_rep(&cp).inverse() * coset_rep_alt(&cp)), 1e-9)?;
                worst = worst.max(h.angle_distance(&E2Element::IDENTITY));
                for lambda in 1..=3 {
                    worst = worst.max((wigner_phase(&h, lambda) - 1.0).norm());
                }
            }
            Ok(worst)
        },
    },
    Check {
        name: "little_group_closure",
        module: CHARTS,
        threshold: 1e-9,
        count: Count::Samples,
        eval: |_, rng| {
            let cp = sample::charted(rng);
            let a = sample::sl2c(rng);
            let q = cp.momentum().transform(&a)?;
            let out = ChartedMomentum::new(q, default_chart(&q))?;
            let m = coset_rep(&out).inverse() * a * coset_rep(&cp);
            Ok(m.matrix().get(1, 0).norm() / m.matrix().max_abs().max(1.0))
        },
    },
    Check {
        name: "little_group_cocycle",
        module: CHARTS,
        threshold: 1e-9,
        count: Count::Samples,
        eval: |_, rng| {
            let cp = sample::charted(rng);
            let (a, b) = (sample::sl2c(rng), sample::sl2c(rng));
            let q = cp.momentum().transform(&a)?;
            let mid = ChartedMomentum::new(q, default_chart(&q))?;
            let r = q.transform(&b)?;
            let end = default_chart(&r);
            let whole = little_group(&cp, &(b * a), end)?;
            let parts = little_group(&mid, &b, end)?.compose(&little_group(&cp, &a, mid.chart())?);
            Ok(relative(&e2_matrix(&whole), &e2_matrix(&parts)))
        },
    },
    Check {
        name: "little_group_fiducial",
        module: CHARTS,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let h = sample_e2(rng);
            let origin = ChartedMomentum::new(LightlikeMomentum::fiducial(), Chart::N)?;
            let got = little_group(&origin, &e2_matrix(&h), Chart::N)?;
            Ok(got
                .angle_distance(&h)
                .max((got.alpha() - h.alpha()).norm() / h.alpha().norm().max(1.0)))
        },
    },
    Check {
        name: "helicity_invariance",
        module: CHARTS,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let dir = sample::lightlike(rng);
            let r = sample::su2(rng).into();
            let mut first: Option<E2Element> = None;
            let mut spread: f64 = 0.0;
            for k in -3..=3 {
                let p = LightlikeMomentum::new(10f64.powi(k), dir.theta(), dir.phi())?;
                let cp = ChartedMomentum::with_default_chart(p);
                let q = p.transform(&r)?;
                let h = little_group(&cp, &r, default_chart(&q))?;
                let f = *first.get_or_insert(h);
                spread = spread.max(h.angle_distance(&f));
            }
            Ok(spread)
        },
    },
    Check {
        name: "tangent_field",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let t = tangent_field(&sample::charted(rng));
            let e = t.e.components();
            let unit = (e[0] * e[0] + e[1] * e[1] + e[2] * e[2] - 1.0).abs();
            Ok(unit.max(t.orthogonality_residual()))
        },
    },
    Check {
        name: "conjugation_identity",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Fixed(50 * 50),
        eval: |i, _| {
            let theta = (PI - 1e-3) * (i % 50) as f64 / 49.0;
            let phi = TAU * (i / 50) as f64 / 50.0;
            let minus_i_sigma3 =
                ComplexMatrix2::diag(Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0));
            Ok(poincare_core::conjugation_identity(theta, phi).distance(&minus_i_sigma3))
        },
    },
    Check {
        name: "parity_rotation_action",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |i, rng| {
            let chart = if i % 2 == 0 { Chart::N } else { Chart::S };
            let lambda = 1 + (i / 2 % 3) as u32;
            let cp = sample::charted_in(rng, chart);
            let sign = if lambda.is_multiple_of(2) { 1.0 } else { -1.0 };
            let swap = ComplexMatrix2::real(0.0, sign, sign, 0.0);
            Ok(parity_rotation_action(&cp, lambda)?.distance(&swap))
        },
    },
    Check {
        name: "pauli_algebra",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |i, rng| {
            let chart = if i % 2 == 0 { Chart::N } else { Chart::S };
            let ops = sigma_ops(&sample::charted_in(rng, chart), 1)?;
            Ok(pauli_residual(&[ops.s1, ops.s2, ops.s3]))
        },
    },
    Check {
        name: "pauli_identification",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |i, rng| {
            let chart = if i % 2 == 0 { Chart::N } else { Chart::S };
            let ops = sigma_ops(&sample::charted_in(rng, chart), 1)?;
            Ok(ops
                .s1
                .distance(&ComplexMatrix2::SIGMA1)
                .max(ops.s2.distance(&ComplexMatrix2::SIGMA2))
                .max(ops.s3.distance(&ComplexMatrix2::SIGMA3)))
        },
    },
    Check {
        name: "sigma2_structure",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |i, rng| {
            let chart = if i % 2 == 0 { Chart::N } else { Chart::S };
            let ops = sigma_ops(&sample::charted_in(rng, chart), 1)?;
            // S2 = i·S3·(e^{iπe·J}P) = −i·S3·S1
            let i_unit = Complex64::new(0.0, 1.0);
            Ok(ops
                .s2
                .distance(&(ops.s3 * ops.m).scale(i_unit))
                .max(ops.s2.distance(&(ops.s3 * ops.s1).scale(-i_unit))))
        },
    },
    Check {
        name: "polarization_transport_norm",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            Ok(transport_massless(&st, &sample::sl2c(rng), None)?.norm_residual())
        },
    },
    Check {
        name: "helicity_magnitude",
        module: POLARIZATION,
        threshold: 1e-12,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            let out = transport_massless(&st, &sample::sl2c(rng), None)?;
            Ok((out.c_plus().norm() - st.c_plus().norm())
                .abs()
                .max((out.c_minus().norm() - st.c_minus().norm()).abs()))
        },
    },
    Check {
        name: "chart_path_independence",
        module: POLARIZATION,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            let a = sample::sl2c(rng);
            let q = st.charted_momentum().momentum().transform(&a)?;
            if !charts_of(&q).is_overlap() {
                return Ok(0.0);
            }
            let via_n = convert_chart(&transport_massless(&st, &a, Some(Chart::N))?)?;
            let direct = transport_massless(&st, &a, Some(Chart::S))?;
            Ok(amp_distance(via_n.amplitudes(), direct.amplitudes()))
        },
    },
    Check {
        name: "parity_transport",
        module: POLARIZATION,
        threshold: 1e-10,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            let a = sample::sl2c(rng);
            let out = transport_massless(&st, &a, None)?;
            let lhs = transport_massless(
                &parity_op(&st),
                &a.dagger_inverse(),
                Some(out.chart().other()),
            )?;
            let rhs = parity_op(&out);
            let [l, r] = [lhs.amplitudes(), rhs.amplitudes()];
            // overall phase read off the larger component
            let k = if r[0].norm() >= r[1].norm() { 0 } else { 1 };
            let q = l[k] / r[k];
            let residual = (q.norm() - 1.0).abs();
            Ok(residual.max(amp_distance(l, r.map(|z| q * z))))
        },
    },
    Check {
        name: "polarization_parity_involution",
        module: POLARIZATION,
        threshold: 0.0,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            Ok(exact(parity_op(&parity_op(&st)) == st))
        },
    },
    Check {
        name: "convert_chart_round_trip",
        module: POLARIZATION,
        threshold: 1e-14,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            if !charts_of(st.charted_momentum().momentum()).is_overlap() {
                return Ok(0.0);
            }
            let back = convert_chart(&convert_chart(&st)?)?;
            if back.charted_momentum() != st.charted_momentum() {
                return Ok(f64::INFINITY);
            }
            Ok(amp_distance(back.amplitudes(), st.amplitudes()))
        },
    },
    Check {
        name: "double_cover",
        module: POLARIZATION,
        threshold: 0.0,
        count: Count::Samples,
        eval: |_, rng| {
            let st = random_polarization(rng);
            let a = SL2CElement::from(rotation_su2(&sample::unit_vector(rng), TAU));
            let minus_identity = *a.matrix() == -ComplexMatrix2::IDENTITY;
            let out = transport_massless(&st, &a, Some(st.chart()))?;
            Ok(exact(minus_identity && out == st))
        },
    },
];

fn exact(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn sample_e2(rng: &mut ChaCha8Rng) -> E2Element {
    let alpha = Complex64::new(
        rng.random_range(-10.0..=10.0),
        rng.random_range(-10.0..=10.0),
    );
    E2Element::new(rng.random_range(0.0..2.0 * TAU), alpha).expect("finite sample")
}

fn random_polarization(rng: &mut ChaCha8Rng) -> poincare_core::PolarizationState {
    let lambda = rng.random_range(1..=3);
    sample::polarization(rng, lambda)
}

fn spin_state(rng: &mut ChaCha8Rng) -> poincare_core::Result<SpinState> {
    let spin = Spin::from_twice(rng.random_range(0..=6))?;
    let p = sample::massive(rng);
    let eta = if rng.random_bool(0.5) {
        IntrinsicParity::Even
    } else {
        IntrinsicParity::Odd
    };
    SpinState::new(spin, p, sample::amplitudes(rng, spin.dim()), eta)
}

/// `A (p⁽⁰⁾·σ) A†` read back as a four-vector.
pub fn fiducial_image(a: &SL2CElement) -> poincare_core::Result<FourVector> {
    let m = *a.matrix();
    four_vector_of(&(m * ComplexMatrix2::real(2.0, 0.0, 0.0, 0.0) * m.dagger()))
}

fn relative(a: &SL2CElement, b: &SL2CElement) -> f64 {
    a.distance(b) / a.matrix().max_abs().max(1.0)
}

fn amp_distance(a: [Complex64; 2], b: [Complex64; 2]) -> f64 {
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
}

/// Grid point `i` of the overlap grid, in both charts.
fn overlap_pair(i: u64) -> poincare_core::Result<(ChartedMomentum, ChartedMomentum)> {
    let (nt, nf, _) = OVERLAP_GRID;
    let t = i % nt;
    let f = (i / nt) % nf;
    let e = i / (nt * nf);
    // 1 ± cos θ ≥ POLE_MARGIN at the ends
    let lo = (1.0 - POLE_MARGIN).acos();
    let theta = lo + (PI - 2.0 * lo) * t as f64 / (nt - 1) as f64;
    let phi = TAU * f as f64 / nf as f64;
    let p = LightlikeMomentum::new(10f64.powi(e as i32 - 3), theta, phi)?;
    Ok((
        ChartedMomentum::new(p, Chart::N)?,
        ChartedMomentum::new(p, Chart::S)?,
    ))
}

/// `h(0, α)` with `ℓ̃(p) = ℓ(p)·h(0, α)`.
pub fn relating_element(cp: &ChartedMomentum) -> poincare_core::Result<E2Element> {
    let p = cp.momentum();
    let (p0, half) = (p.energy(), 0.5 * p.theta());
    let alpha = match cp.chart() {
        Chart::N => Complex64::from_polar((1.0 + 1.0 / p0) * half.tan(), -p.phi()),
        Chart::S => Complex64::from_polar((1.0 - 1.0 / p0) / half.tan(), p.phi()),
    };
    E2Element::new(0.0, alpha)
}

/// Largest violation of `S_i† = S_i`, `S_i² = I`, `{S_i, S_j} = 0` and
/// `[S_i, S_j] = 2iε_ijk S_k`.
pub fn pauli_residual(s: &[ComplexMatrix2; 3]) -> f64 {
    let two_i = Complex64::new(0.0, 2.0);
    let mut worst: f64 = 0.0;
    for (i, si) in s.iter().enumerate() {
        worst = worst.max(si.hermitian_residual());
        worst = worst.max((*si * *si).distance(&ComplexMatrix2::IDENTITY));
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        worst = worst.max(si.anticommutator(&s[j]).max_abs());
        worst = worst.max(si.commutator(&s[j]).distance(&s[k].scale(two_i)));
    }
    worst
}
