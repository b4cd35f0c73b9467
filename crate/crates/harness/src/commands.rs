//! One function per subcommand, each mapping JSON input to JSON output.

use poincare_core::{
    boost_massive, boost_su2, default_chart, factor_little_group, spinor_map, tangent_field, tol,
    wigner_phase, ChartedMomentum, LightlikeMomentum, UnitVector3,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::json::{
    cx, four_vector, matrix, sl2c, ChartJson, ChartedJson, E2Json, LorentzJson,
    MassiveMomentumJson, MatrixJson,
};
use crate::trace::{self, ChartPolicy, TraceOverrides, TraceScript};
use crate::verify::{self, VerifyConfig, VerifyReport};

pub fn parse<T: for<'de> Deserialize<'de>>(input: &str) -> CliResult<T> {
    Ok(serde_json::from_str(input)?)
}

/// `A ↦ Λ(A)`.
pub fn map(input: &str) -> CliResult<Value> {
    let a = sl2c(&parse::<MatrixJson>(input)?)?;
    Ok(serde_json::to_value(LorentzJson::new(&spinor_map(&a)))?)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LittleGroupInput {
    p: ChartedJson,
    #[serde(alias = "A")]
    a: MatrixJson,
}

#[derive(Debug, Serialize)]
struct PhaseJson {
    lambda: i32,
    phase: [f64; 2],
}

/// The E(2) factor of `A` at `p` and its Wigner phases.
pub fn little_group(
    input: &str,
    chart: ChartPolicy,
    lambdas: &[i32],
    e2_tol: Option<f64>,
) -> CliResult<Value> {
    let req: LittleGroupInput = parse(input)?;
    let cp = req.p.decode()?;
    let a = sl2c(&req.a)?;
    let f = factor_little_group(
        &cp,
        &a,
        chart.forced(),
        e2_tol.unwrap_or(tol::E2_MEMBERSHIP),
    )?;
    let phases: Vec<PhaseJson> = lambdas
        .iter()
        .map(|&lambda| PhaseJson {
            lambda,
            phase: cx(wigner_phase(&f.element, lambda)),
        })
        .collect();
    Ok(json!({
        "h": E2Json::new(&f.element),
        "phases": phases,
        "p_out": ChartedJson::new(&f.image),
    }))
}

pub fn trace(input: &str, overrides: TraceOverrides) -> CliResult<Value> {
    let script: TraceScript = parse(input)?;
    Ok(serde_json::to_value(trace::run(&script, overrides)?)?)
}

/// Runs the battery; the report is returned even when checks fail.
pub fn verify(config: &VerifyConfig) -> CliResult<VerifyReport> {
    verify::run(config)
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum BoostInput {
    Axis { axis: [f64; 3], rapidity: f64 },
    Massive(MassiveMomentumJson),
}

/// A pure boost, either along an axis or the standard boost to a massive
/// momentum.
pub fn boost(input: &str) -> CliResult<Value> {
    match parse::<BoostInput>(input)? {
        BoostInput::Axis { axis, rapidity } => {
            let a = boost_su2(&UnitVector3::normalize(axis)?, rapidity);
            Ok(json!({
                "sl2c": matrix(a.matrix()),
                "lorentz": LorentzJson::new(&spinor_map(&a)),
            }))
        }
        BoostInput::Massive(m) => {
            let p = m.decode()?;
            let a = boost_massive(&p);
            let l = spinor_map(&a);
            let rest = poincare_core::FourVector::new(p.mass(), 0.0, 0.0, 0.0);
            Ok(json!({
                "sl2c": matrix(a.matrix()),
                "lorentz": LorentzJson::new(&l),
                "image": four_vector(&l.apply(&rest)),
            }))
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TangentInput {
    p0: f64,
    theta: f64,
    phi: f64,
    #[serde(default)]
    chart: Option<ChartJson>,
}

/// The tangent field at a lightlike momentum. `--chart` wins over the
/// input's chart; with neither, the default chart is used.
pub fn tangent(input: &str, chart: ChartPolicy) -> CliResult<Value> {
    let req: TangentInput = parse(input)?;
    let p = LightlikeMomentum::new(req.p0, req.theta, req.phi)?;
    let chart = chart
        .forced()
        .or(req.chart.map(Into::into))
        .unwrap_or_else(|| default_chart(&p));
    let t = tangent_field(&ChartedMomentum::new(p, chart)?);
    let e = t.e.components();
    Ok(json!({
        "p": ChartedJson::new(&t.cp),
        "e": e,
        "norm_residual": (e.iter().map(|x| x * x).sum::<f64>() - 1.0).abs(),
        "orthogonality_residual": t.orthogonality_residual(),
    }))
}

pub fn parse_tol_override(s: &str) -> CliResult<(String, f64)> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| CliError::Input(format!("expected NAME=VALUE, got `{s}`")))?;
    let value: f64 = value
        .parse()
        .map_err(|_| CliError::Input(format!("bad tolerance `{value}`")))?;
    Ok((name.to_string(), value))
}
