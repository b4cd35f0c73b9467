//! Scripted transformation sequences applied to a polarization or spin state.

use num_complex::Complex64;
use poincare_core::{
    boost_su2, chart_transition_phase, charts_of, convert_chart, default_chart,
    factor_little_group, parity_massive, parity_op, rotation_su2, transport_massive, wigner_phase,
    Chart, Error, PolarizationState, SL2CElement, SpinState, UnitVector3,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::json::{
    cx, matrix, sl2c, ChartJson, CxJson, MatrixJson, PolarizationJson, SpinStateJson,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InitialState {
    Polarization(PolarizationJson),
    Spin(SpinStateJson),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisAngle {
    pub axis: [f64; 3],
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisRapidity {
    pub axis: [f64; 3],
    pub rapidity: f64,
}

/// One step. `rotation` uses `rotation_su2`, so an angle of `ω` rotates
/// vectors by `−ω` about the axis; `boost` uses `boost_su2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    Rotation(AxisAngle),
    Boost(AxisRapidity),
    Sl2c(MatrixJson),
    Parity,
    ConvertChart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ChartPolicy {
    #[default]
    #[serde(rename = "auto")]
    Auto,
    N,
    S,
}

impl ChartPolicy {
    pub fn forced(self) -> Option<Chart> {
        match self {
            ChartPolicy::Auto => None,
            ChartPolicy::N => Some(Chart::N),
            ChartPolicy::S => Some(Chart::S),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceTolerances {
    /// E(2) membership tolerance for little-group extraction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e2_membership: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartPolicy>,
    #[serde(default)]
    pub tol: TraceTolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceScript {
    pub initial: InitialState,
    pub steps: Vec<Step>,
    #[serde(default)]
    pub options: TraceOptions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartEvent {
    pub step: usize,
    /// `forced` when the policy overrode the default chart, `pole` when
    /// only one chart contains the momentum.
    pub kind: String,
    pub chart: ChartJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: usize,
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2c: Option<MatrixJson>,
    pub state: InitialState,
    /// Accumulated factors on the `(+λ, −λ)` amplitudes; polarization only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phases: Option<[CxJson; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceOutput {
    pub initial: InitialState,
    pub steps: Vec<StepRecord>,
    pub net_sl2c: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phases: Option<[CxJson; 2]>,
    pub events: Vec<ChartEvent>,
    pub norm_residual: f64,
}

/// Options given on the command line, applied where the script is silent.
#[derive(Debug, Clone, Copy, Default)]
pub struct TraceOverrides {
    pub chart: Option<ChartPolicy>,
    pub e2_membership: Option<f64>,
}

fn step_matrix(step: &Step) -> CliResult<Option<SL2CElement>> {
    Ok(match step {
        Step::Rotation(r) => Some(rotation_su2(&UnitVector3::normalize(r.axis)?, r.angle).into()),
        Step::Boost(b) => Some(boost_su2(&UnitVector3::normalize(b.axis)?, b.rapidity)),
        Step::Sl2c(m) => Some(sl2c(m)?),
        Step::Parity | Step::ConvertChart => None,
    })
}

fn op_name(step: &Step) -> &'static str {
    match step {
        Step::Rotation(_) => "rotation",
        Step::Boost(_) => "boost",
        Step::Sl2c(_) => "sl2c",
        Step::Parity => "parity",
        Step::ConvertChart => "convert_chart",
    }
}

pub fn run(script: &TraceScript, overrides: TraceOverrides) -> CliResult<TraceOutput> {
    if script.steps.is_empty() {
        return Err(CliError::Input("trace needs at least one step".into()));
    }
    let matrices = script
        .steps
        .iter()
        .map(step_matrix)
        .collect::<CliResult<Vec<_>>>()?;
    let net = matrices
        .iter()
        .flatten()
        .fold(SL2CElement::IDENTITY, |acc, a| *a * acc);
    let policy = script.options.chart.or(overrides.chart).unwrap_or_default();
    let tol = script
        .options
        .tol
        .e2_membership
        .or(overrides.e2_membership)
        .unwrap_or(poincare_core::tol::E2_MEMBERSHIP);
    let ctx = Ctx {
        steps: &script.steps,
        matrices: &matrices,
        policy,
        tol,
    };
    let mut out = match &script.initial {
        InitialState::Polarization(p) => ctx.polarization(p.decode()?)?,
        InitialState::Spin(s) => ctx.spin(s.decode()?)?,
    };
    out.net_sl2c = matrix(net.matrix());
    Ok(out)
}

struct Ctx<'a> {
    steps: &'a [Step],
    matrices: &'a [Option<SL2CElement>],
    policy: ChartPolicy,
    tol: f64,
}

impl Ctx<'_> {
    fn polarization(&self, initial: PolarizationState) -> CliResult<TraceOutput> {
        let one = Complex64::new(1.0, 0.0);
        let mut st = initial;
        let mut phases = [one, one];
        let mut events = Vec::new();
        let mut records = Vec::new();
        for (i, (step, a)) in self.steps.iter().zip(self.matrices).enumerate() {
            match (step, a) {
                (Step::Parity, _) => {
                    st = parity_op(&st);
                    phases.swap(0, 1);
                }
                (Step::ConvertChart, _) => {
                    let u = chart_transition_phase(&st)?;
                    phases[0] *= u;
                    phases[1] *= u.conj();
                    st = convert_chart(&st)?;
                }
                (_, Some(a)) => {
                    let q = st.charted_momentum().momentum().transform(a)?;
                    let default = default_chart(&q);
                    let chart = self.policy.forced().unwrap_or(default);
                    if chart != default {
                        events.push(ChartEvent {
                            step: i,
                            kind: "forced".into(),
                            chart: chart.into(),
                        });
                    }
                    if !charts_of(&q).is_overlap() {
                        events.push(ChartEvent {
                            step: i,
                            kind: "pole".into(),
                            chart: chart.into(),
                        });
                    }
                    let f = factor_little_group(st.charted_momentum(), a, Some(chart), self.tol)?;
                    let l = st.lambda() as i32;
                    let (up, dn) = (wigner_phase(&f.element, l), wigner_phase(&f.element, -l));
                    phases[0] *= up;
                    phases[1] *= dn;
                    st = PolarizationState::new(
                        f.image,
                        st.lambda(),
                        st.c_plus() * up,
                        st.c_minus() * dn,
                    )?;
                }
                (_, None) => unreachable!("transform steps carry a matrix"),
            }
            records.push(StepRecord {
                step: i,
                op: op_name(step).into(),
                sl2c: a.map(|a| matrix(a.matrix())),
                state: InitialState::Polarization(PolarizationJson::new(&st)),
                phases: Some(phases.map(cx)),
            });
        }
        Ok(TraceOutput {
            initial: InitialState::Polarization(PolarizationJson::new(&initial)),
            steps: records,
            net_sl2c: matrix(&poincare_core::ComplexMatrix2::IDENTITY),
            phases: Some(phases.map(cx)),
            events,
            norm_residual: st.norm_residual(),
        })
    }

    fn spin(&self, initial: SpinState) -> CliResult<TraceOutput> {
        let mut st = initial.clone();
        let mut records = Vec::new();
        for (i, (step, a)) in self.steps.iter().zip(self.matrices).enumerate() {
            st = match (step, a) {
                (Step::Parity, _) => parity_massive(&st),
                (Step::ConvertChart, _) => {
                    return Err(Error::InvariantViolation {
                        what: "convert_chart applies to polarization states only",
                        residual: 0.0,
                    }
                    .into())
                }
                (_, Some(a)) => transport_massive(&st, a)?,
                (_, None) => unreachable!("transform steps carry a matrix"),
            };
            records.push(StepRecord {
                step: i,
                op: op_name(step).into(),
                sl2c: a.map(|a| matrix(a.matrix())),
                state: InitialState::Spin(SpinStateJson::new(&st)),
                phases: None,
            });
        }
        Ok(TraceOutput {
            initial: InitialState::Spin(SpinStateJson::new(&initial)),
            steps: records,
            net_sl2c: matrix(&poincare_core::ComplexMatrix2::IDENTITY),
            phases: None,
            events: Vec::new(),
            norm_residual: (st.norm_sqr() - 1.0).abs(),
        })
    }
}
