//! JSON and CSV rendering of metric reports.
//!
//! Numbers are rounded to six significant digits; undefined values are
//! written as `null` with a `reason` string.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::evaluate::{MetricEntry, MetricReport, Parameters};
use crate::error::{Error, Result};
use crate::measure::Measure;
use crate::metric::Metric;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

/// Rounds to six significant digits.
pub fn round_sig6(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.5e}").parse().expect("formatted float parses")
}

fn number(v: f64) -> Value {
    serde_json::Number::from_f64(round_sig6(v)).map_or(Value::Null, Value::Number)
}

fn measure_json(m: Measure) -> Value {
    match m {
        Measure::Value(v) => number(v),
        Measure::Undefined(_) => Value::Null,
    }
}

fn entry_json(metric: Metric, e: &MetricEntry) -> Value {
    let mut obj = Map::new();
    obj.insert("value".into(), measure_json(e.value));
    obj.insert("polarity".into(), metric.polarity().as_str().into());
    if let Some(r) = e.value.reason() {
        obj.insert("reason".into(), r.into());
    }
    if !e.per_gt.is_empty() {
        obj.insert("per_gt".into(), e.per_gt.iter().map(|&m| measure_json(m)).collect());
    }
    Value::Object(obj)
}

fn metrics_json(metrics: &BTreeMap<Metric, MetricEntry>) -> Value {
    Value::Object(metrics.iter().map(|(m, e)| (m.id().to_owned(), entry_json(*m, e))).collect())
}

pub(crate) fn parameters_json(p: &Parameters) -> Value {
    json!({
        "entropy_base": p.entropy_base,
        "boundary_connectivity": p.boundary_connectivity,
        "f_convention": p.f_convention,
        "foreground": p.foreground,
        "split_components": p.split_components,
    })
}

pub fn report_to_json(r: &MetricReport) -> Value {
    let images: Vec<Value> =
        r.images.iter().map(|i| json!({ "id": i.id, "metrics": metrics_json(&i.metrics) })).collect();
    let mut root = json!({
        "schema_version": SCHEMA_VERSION,
        "parameters": parameters_json(&r.parameters),
        "images": images,
        "aggregates": metrics_json(&r.aggregates),
    });
    if let Some(b) = r.npr_baseline {
        root["npr_baseline"] = json!({ "ev": number(b.ev), "max_pri": number(b.max_pri) });
    }
    root
}

fn csv_value(m: Measure) -> String {
    match m {
        Measure::Value(v) => round_sig6(v).to_string(),
        Measure::Undefined(_) => "null".into(),
    }
}

/// One row per (image, metric), sorted by image id then metric id, followed
/// by aggregate rows.
pub fn report_to_csv(r: &MetricReport) -> Result<Vec<u8>> {
    let mut rows: Vec<(&str, &str, &str, Metric, &MetricEntry)> = Vec::new();
    for img in &r.images {
        for (m, e) in &img.metrics {
            rows.push(("image", &img.id, m.id(), *m, e));
        }
    }
    rows.sort_by(|a, b| (a.1, a.2).cmp(&(b.1, b.2)));
    let mut agg: Vec<_> = r.aggregates.iter().map(|(m, e)| ("aggregate", "", m.id(), *m, e)).collect();
    agg.sort_by(|a, b| a.2.cmp(b.2));
    rows.extend(agg);

    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Decode { path: "<csv>".into(), detail: e.to_string() };
    w.write_record(["section", "image_id", "metric", "value", "polarity", "reason"]).map_err(csv_err)?;
    for (section, id, name, metric, e) in rows {
        w.write_record([
            section,
            id,
            name,
            &csv_value(e.value),
            metric.polarity().as_str(),
            e.value.reason().unwrap_or(""),
        ])
        .map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| Error::Decode { path: "<csv>".into(), detail: e.to_string() })
}

pub fn render_report(r: &MetricReport, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(&report_to_json(r)).expect("JSON values serialise");
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => report_to_csv(r),
    }
}

/// Writes the report to `destination`, or to stdout when it is `None`.
pub fn emit_report(r: &MetricReport, format: ReportFormat, destination: Option<&Path>) -> Result<()> {
    write_bytes(&render_report(r, format)?, destination)
}

pub(crate) fn write_bytes(bytes: &[u8], destination: Option<&Path>) -> Result<()> {
    match destination {
        Some(path) => fs::write(path, bytes).map_err(|e| Error::io(path, e)),
        None => std::io::stdout().lock().write_all(bytes).map_err(|e| Error::io("<stdout>", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::evaluate::{evaluate_pair, EvalOptions, MetricSelection};
    use crate::mask::LabelMap;

    fn report(sel: &str) -> MetricReport {
        let a = LabelMap::from_rows(&[[1, 1, 0], [0, 0, 0]]).unwrap();
        let g = LabelMap::from_rows(&[[1, 0, 0], [1, 0, 0]]).unwrap();
        evaluate_pair(&a, &[g], &sel.parse::<MetricSelection>().unwrap(), &EvalOptions::default()).unwrap()
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(round_sig6(0.535_066_006_6), 0.535066);
        assert_eq!(round_sig6(1.258_259_405_669), 1.25826);
        assert_eq!(round_sig6(0.25), 0.25);
        assert_eq!(round_sig6(36.75), 36.75);
        assert_eq!(round_sig6(123_456_789.0), 123_457_000.0);
        assert_eq!(round_sig6(0.0), 0.0);
    }

    #[test]
    fn json_roundtrip_one_metric() {
        let r = report("ri");
        let text = String::from_utf8(render_report(&r, ReportFormat::Json).unwrap()).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["parameters"]["entropy_base"], 2);
        let got = v["images"][0]["metrics"]["ri"]["value"].as_f64().unwrap();
        let want = r.images[0].metrics[&Metric::RandIndex].value.unwrap();
        assert_eq!(got, round_sig6(want));
        assert_eq!(v["images"][0]["metrics"]["ri"]["polarity"], "higher-better");
    }

    #[test]
    fn undefined_is_null_with_reason() {
        // prediction has a foreground pixel everywhere the reference is background? no: fp = 1
        let a = LabelMap::from_rows(&[[1, 0]]).unwrap();
        let r = evaluate_pair(&a, std::slice::from_ref(&a), &"plr".parse().unwrap(), &EvalOptions::default()).unwrap();
        let v = report_to_json(&r);
        let plr = &v["images"][0]["metrics"]["plr"];
        assert!(plr["value"].is_null());
        assert_eq!(plr["reason"], "specificity is 1");
    }

    #[test]
    fn csv_sorted_and_deterministic() {
        let r = report("voi,ji,dice,ac");
        let a = render_report(&r, ReportFormat::Csv).unwrap();
        let b = render_report(&report("voi,ji,dice,ac"), ReportFormat::Csv).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        let names: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
        assert_eq!(names, ["ac", "dice", "ji", "voi"]);
    }
}
