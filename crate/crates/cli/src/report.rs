//! The run report and its two renderings.

use std::fmt::Write as _;

use densub::{Rational, SubgraphResult, VertexSet, WeightedGraph};
use serde::Serialize;
use serde_json::Value;

use crate::labels::{Label, Labels};

pub const SCHEMA_VERSION: u32 = 1;

/// An exact rational with a float for convenience.
#[derive(Debug, Clone, Serialize)]
pub struct Exact {
    pub num: i128,
    pub den: i128,
    pub value: f64,
}

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Exact {
            num: *r.numer(),
            den: *r.denom(),
            value: *r.numer() as f64 / *r.denom() as f64,
        }
    }
}

impl Exact {
    fn text(&self) -> String {
        if self.den == 1 {
            self.num.to_string()
        } else {
            format!("{}/{} ({})", self.num, self.den, self.value)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultBody {
    pub vertices: Vec<Label>,
    pub size: usize,
    pub weight: Exact,
    /// `None` for an empty set.
    pub density: Option<Exact>,
    pub method: String,
    pub guarantee: String,
}

impl ResultBody {
    pub fn from_result(r: &SubgraphResult, labels: &Labels) -> Self {
        ResultBody {
            vertices: labels.labels(r.subgraph.iter()),
            size: r.size(),
            weight: r.weight.into(),
            density: Some(r.density.into()),
            method: r.method.to_string(),
            guarantee: r.guarantee.to_string(),
        }
    }

    /// A possibly empty set scored against `g`.
    pub fn from_set(g: &WeightedGraph, set: &VertexSet, labels: &Labels, method: &str, guarantee: &str) -> Self {
        let weight = g.induced_weight(set);
        ResultBody {
            vertices: labels.labels(set.iter()),
            size: set.len(),
            weight: weight.into(),
            density: (!set.is_empty()).then(|| (weight / Rational::from(set.len() as i128)).into()),
            method: method.to_string(),
            guarantee: guarantee.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactComparison {
    pub problem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub optimum: Exact,
    pub witness: Vec<Label>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub total_weight: Exact,
    pub result: ResultBody,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactComparison>,
}

fn label_list(labels: &[Label]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .map(|l| match l {
            Label::Id(i) => i.to_string(),
            Label::Name(s) => s.clone(),
        })
        .collect();
    parts.join(" ")
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().any(|v| v.is_object() && !is_rational(v)) => {
            items.iter().map(value_text).collect::<Vec<_>>().join("; ")
        }
        Value::Array(items) => items.iter().map(value_text).collect::<Vec<_>>().join(" "),
        Value::Object(o) if is_rational(v) => {
            let (num, den) = (&o["num"], &o["den"]);
            if den == &Value::from(1) {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        Value::Object(o) => o
            .iter()
            .map(|(k, v)| format!("{k}={}", value_text(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn is_rational(v: &Value) -> bool {
    v.get("num").is_some() && v.get("den").is_some()
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serialisable")
    }

    /// Aligned `key value` lines.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("command".into(), self.command.clone()),
            ("input".into(), self.input.clone()),
            ("n".into(), self.n.to_string()),
            ("m".into(), self.m.to_string()),
            ("total_weight".into(), self.total_weight.text()),
            ("vertices".into(), label_list(&self.result.vertices)),
            ("size".into(), self.result.size.to_string()),
            ("weight".into(), self.result.weight.text()),
            (
                "density".into(),
                self.result.density.as_ref().map_or("undefined".into(), Exact::text),
            ),
            ("method".into(), self.result.method.clone()),
            ("guarantee".into(), self.result.guarantee.clone()),
        ];
        if let Some(exact) = &self.exact {
            rows.push(("exact_optimum".into(), exact.optimum.text()));
            rows.push(("exact_witness".into(), label_list(&exact.witness)));
        }
        if let Some(Value::Object(trace)) = &self.trace {
            for (key, v) in trace {
                rows.push((format!("trace.{key}"), value_text(v)));
            }
        }
        rows.push(("wall_time_ms".into(), format!("{:.3}", self.wall_time_ms)));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}
