//! Re-evaluates a fixture while rotating or translating the prediction.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::evaluate::{evaluate_image, EvalOptions, ImageReport, MetricSelection, Parameters};
use super::fixture::{generate_fixture, FixtureSpec};
use super::report::{parameters_json, round_sig6};
use crate::error::{Error, Result};
use crate::measure::Measure;
use crate::metric::Metric;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// Steps are angles in degrees added to the base rotation.
    Rotation,
    /// Steps are whole-pixel horizontal shifts of the prediction.
    Translation,
}

impl FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rotation" => Ok(SweepKind::Rotation),
            "translation" => Ok(SweepKind::Translation),
            other => Err(format!("unknown sweep kind {other:?}")),
        }
    }
}

/// Direction of a metric across a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    MonotoneUp,
    MonotoneDown,
    NonMonotone,
    Flat,
}

impl Trend {
    pub fn as_str(self) -> &'static str {
        match self {
            Trend::MonotoneUp => "monotone-up",
            Trend::MonotoneDown => "monotone-down",
            Trend::NonMonotone => "non-monotone",
            Trend::Flat => "flat",
        }
    }

    /// Classifies the defined values of a series, ignoring undefined ones.
    pub fn of(series: &[Measure]) -> Trend {
        let vals: Vec<f64> = series.iter().filter_map(|m| m.value()).collect();
        let (mut up, mut down) = (false, false);
        for w in vals.windows(2) {
            let d = w[1] - w[0];
            let tol = 1e-12 * w[0].abs().max(w[1].abs()).max(1.0);
            if d > tol {
                up = true;
            } else if d < -tol {
                down = true;
            }
        }
        match (up, down) {
            (true, true) => Trend::NonMonotone,
            (true, false) => Trend::MonotoneUp,
            (false, true) => Trend::MonotoneDown,
            (false, false) => Trend::Flat,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepStep {
    pub step: f64,
    pub auto_area: usize,
    pub area_drift: f64,
    pub report: ImageReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub kind: SweepKind,
    pub parameters: Parameters,
    pub steps: Vec<SweepStep>,
    pub trends: BTreeMap<Metric, Trend>,
}

impl SweepResult {
    pub fn series(&self, m: Metric) -> Vec<Measure> {
        self.steps.iter().map(|s| s.report.value(m).unwrap_or(Measure::Undefined("not computed"))).collect()
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                let metrics: Map<String, Value> = s
                    .report
                    .metrics
                    .iter()
                    .map(|(m, e)| {
                        let v = e.value.value().map_or(Value::Null, |v| json!(round_sig6(v)));
                        (m.id().to_owned(), v)
                    })
                    .collect();
                json!({
                    "step": s.step,
                    "auto_area": s.auto_area,
                    "area_drift": round_sig6(s.area_drift),
                    "metrics": metrics,
                })
            })
            .collect();
        let trends: Map<String, Value> =
            self.trends.iter().map(|(m, t)| (m.id().to_owned(), t.as_str().into())).collect();
        json!({
            "schema_version": super::report::SCHEMA_VERSION,
            "kind": match self.kind { SweepKind::Rotation => "rotation", SweepKind::Translation => "translation" },
            "parameters": parameters_json(&self.parameters),
            "steps": steps,
            "trends": trends,
        })
    }

    /// `step,metric,value` rows in step order, then `trend` rows.
    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut write = |rec: [&str; 4]| w.write_record(rec).expect("writing to memory");
        write(["step", "metric", "value", "trend"]);
        for s in &self.steps {
            let step = s.step.to_string();
            for (m, e) in &s.report.metrics {
                let v = e.value.value().map_or("null".to_owned(), |v| round_sig6(v).to_string());
                write([&step, m.id(), &v, ""]);
            }
        }
        for (m, t) in &self.trends {
            write(["", m.id(), "", t.as_str()]);
        }
        w.into_inner().expect("in-memory writer")
    }
}

fn perturb(base: &FixtureSpec, kind: SweepKind, step: f64) -> Result<FixtureSpec> {
    match kind {
        SweepKind::Rotation => Ok(base.rotated(base.angle_deg + step)),
        SweepKind::Translation => {
            if step.fract() != 0.0 {
                return Err(Error::InvalidFixture(format!("translation step {step} is not a whole pixel count")));
            }
            Ok(FixtureSpec { auto: base.auto.translated(step as i64, 0), ..*base })
        }
    }
}

/// Evaluates the fixture at every step. An empty step list evaluates the
/// unperturbed fixture once.
pub fn perturbation_sweep(
    base: &FixtureSpec,
    kind: SweepKind,
    steps: &[f64],
    sel: &MetricSelection,
    opts: &EvalOptions,
) -> Result<SweepResult> {
    let steps = if steps.is_empty() { &[0.0][..] } else { steps };
    let increasing = steps.windows(2).all(|w| w[0] <= w[1]);
    let decreasing = steps.windows(2).all(|w| w[0] >= w[1]);
    if !(increasing || decreasing) || steps.iter().any(|s| !s.is_finite()) {
        return Err(Error::NonMonotoneSteps);
    }

    let mut out = Vec::with_capacity(steps.len());
    for &step in steps {
        let fixture = generate_fixture(&perturb(base, kind, step)?)?;
        let report =
            evaluate_image(&format!("step-{step}"), &fixture.auto, std::slice::from_ref(&fixture.gt), sel, opts)?;
        out.push(SweepStep { step, auto_area: fixture.auto_area, area_drift: fixture.area_drift(), report });
    }
    let mut result = SweepResult { kind, parameters: Parameters::new(opts), steps: out, trends: BTreeMap::new() };
    result.trends = sel.iter().map(|m| (m, Trend::of(&result.series(m)))).collect();
    Ok(result)
}
