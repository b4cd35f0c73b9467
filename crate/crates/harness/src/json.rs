//! Wire formats. Complex numbers are `[re, im]` and matrices are row-major.

use num_complex::Complex64;
use poincare_core::{
    Chart, ChartedMomentum, ComplexMatrix2, E2Element, FourVector, IntrinsicParity,
    LightlikeMomentum, LorentzMatrix, MassiveMomentum, PolarizationState, SL2CElement, Spin,
    SpinState,
};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

pub type CxJson = [f64; 2];
pub type MatrixJson = [[CxJson; 2]; 2];
pub type FourVectorJson = [f64; 4];

pub fn cx(z: Complex64) -> CxJson {
    [z.re, z.im]
}

pub fn from_cx(z: CxJson) -> Complex64 {
    Complex64::new(z[0], z[1])
}

pub fn matrix(m: &ComplexMatrix2) -> MatrixJson {
    m.entries.map(|row| row.map(cx))
}

pub fn from_matrix(m: &MatrixJson) -> ComplexMatrix2 {
    ComplexMatrix2 {
        entries: m.map(|row| row.map(from_cx)),
    }
}

/// Strict: the determinant must be one within 1e−12.
pub fn sl2c(m: &MatrixJson) -> CliResult<SL2CElement> {
    Ok(SL2CElement::new(from_matrix(m))?)
}

pub fn four_vector(p: &FourVector) -> FourVectorJson {
    p.to_array()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChartJson {
    N,
    S,
}

impl From<Chart> for ChartJson {
    fn from(c: Chart) -> Self {
        match c {
            Chart::N => ChartJson::N,
            Chart::S => ChartJson::S,
        }
    }
}

impl From<ChartJson> for Chart {
    fn from(c: ChartJson) -> Self {
        match c {
            ChartJson::N => Chart::N,
            ChartJson::S => Chart::S,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LorentzJson {
    pub matrix: [[f64; 4]; 4],
    pub metric_residual: f64,
}

impl LorentzJson {
    pub fn new(l: &LorentzMatrix) -> Self {
        Self {
            matrix: *l.entries(),
            metric_residual: l.metric_residual(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct E2Json {
    pub phi: f64,
    pub alpha: CxJson,
}

impl E2Json {
    pub fn new(h: &E2Element) -> Self {
        Self {
            phi: h.phi(),
            alpha: cx(h.alpha()),
        }
    }

    pub fn decode(&self) -> CliResult<E2Element> {
        Ok(E2Element::new(self.phi, from_cx(self.alpha))?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartedJson {
    pub p0: f64,
    pub theta: f64,
    pub phi: f64,
    pub chart: ChartJson,
}

impl ChartedJson {
    pub fn new(cp: &ChartedMomentum) -> Self {
        let p = cp.momentum();
        Self {
            p0: p.energy(),
            theta: p.theta(),
            phi: p.phi(),
            chart: cp.chart().into(),
        }
    }

    pub fn decode(&self) -> CliResult<ChartedMomentum> {
        let p = LightlikeMomentum::new(self.p0, self.theta, self.phi)?;
        Ok(ChartedMomentum::new(p, self.chart.into())?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizationJson {
    pub p0: f64,
    pub theta: f64,
    pub phi: f64,
    pub chart: ChartJson,
    pub lambda: u32,
    pub amps: [CxJson; 2],
}

impl PolarizationJson {
    pub fn new(st: &PolarizationState) -> Self {
        let cp = ChartedJson::new(st.charted_momentum());
        Self {
            p0: cp.p0,
            theta: cp.theta,
            phi: cp.phi,
            chart: cp.chart,
            lambda: st.lambda(),
            amps: st.amplitudes().map(cx),
        }
    }

    pub fn decode(&self) -> CliResult<PolarizationState> {
        let cp = ChartedJson {
            p0: self.p0,
            theta: self.theta,
            phi: self.phi,
            chart: self.chart,
        }
        .decode()?;
        let [a, b] = self.amps.map(from_cx);
        Ok(PolarizationState::new(cp, self.lambda, a, b)?)
    }
}

/// `amps` run over `s3 = s, s − 1, …, −s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinStateJson {
    pub s: f64,
    pub m: f64,
    pub p: [f64; 3],
    pub eta: i64,
    pub amps: Vec<CxJson>,
}

impl SpinStateJson {
    pub fn new(st: &SpinState) -> Self {
        Self {
            s: st.spin().value(),
            m: st.momentum().mass(),
            p: st.momentum().spatial(),
            eta: st.eta().sign(),
            amps: st.amplitudes().iter().copied().map(cx).collect(),
        }
    }

    pub fn decode(&self) -> CliResult<SpinState> {
        Ok(SpinState::new(
            Spin::new(self.s)?,
            MassiveMomentum::new(self.m, self.p)?,
            self.amps.iter().copied().map(from_cx).collect(),
            IntrinsicParity::from_sign(self.eta)?,
        )?)
    }
}

/// `{"m": mass, "p": [p1, p2, p3]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassiveMomentumJson {
    pub m: f64,
    pub p: [f64; 3],
}

impl MassiveMomentumJson {
    pub fn decode(&self) -> CliResult<MassiveMomentum> {
        Ok(MassiveMomentum::new(self.m, self.p)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use poincare_core::parity_op;

    #[test]
    fn polarization_round_trip_after_parity() {
        let cp = ChartedMomentum::new(
            LightlikeMomentum::new(2.5, PI / 3.0, PI / 4.0).unwrap(),
            Chart::N,
        )
        .unwrap();
        let st = PolarizationState::new(cp, 1, Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8))
            .unwrap();
        let first = serde_json::to_string(&PolarizationJson::new(&parity_op(&st))).unwrap();
        let decoded: PolarizationJson = serde_json::from_str(&first).unwrap();
        let again =
            serde_json::to_string(&PolarizationJson::new(&decoded.decode().unwrap())).unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn rejects_unknown_fields() {
        let bad = r#"{"phi": 1.0, "alpha": [0, 0], "beta": 2}"#;
        assert!(serde_json::from_str::<E2Json>(bad).is_err());
    }
}
