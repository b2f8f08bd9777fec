#![allow(dead_code)]

use std::collections::HashMap;
use std::path::Path;
use std::process::{Command, Output};

use densub::{Rational, WeightedGraph};
use serde_json::Value;

/// Heaviest subset of every size, by plain enumeration over the edge list.
pub struct Profile {
    /// `best[s]` = max weight over subsets of size `s`, with the mask.
    pub best: Vec<(Rational, u64)>,
}

impl Profile {
    pub fn new(g: &WeightedGraph) -> Self {
        let n = g.n();
        assert!(n <= 16, "naive profile is for small graphs");
        let edges: Vec<(usize, usize, Rational)> = g
            .edges()
            .map(|(u, v, w)| (u, v, Rational::new(w as i128, g.scale() as i128)))
            .collect();
        let mut best = vec![(Rational::from(-1), 0u64); n + 1];
        for mask in 0u64..1 << n {
            let w: Rational = edges
                .iter()
                .filter(|&&(u, v, _)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .map(|e| e.2)
                .sum();
            let s = mask.count_ones() as usize;
            if w > best[s].0 {
                best[s] = (w, mask);
            }
        }
        Profile { best }
    }

    pub fn n(&self) -> usize {
        self.best.len() - 1
    }

    pub fn dk(&self, k: usize) -> Rational {
        self.best[k].0 / Rational::from(k as i128)
    }

    pub fn dal(&self, k: usize) -> Rational {
        (k.max(1)..=self.n()).map(|s| self.dk(s)).max().expect("k <= n")
    }

    pub fn dmax(&self) -> Rational {
        self.dal(1)
    }

    /// max over all subsets, the empty one included, of W(H) - alpha |H|.
    pub fn max_excess(&self, alpha: Rational) -> Rational {
        self.best
            .iter()
            .enumerate()
            .map(|(s, &(w, _))| w - alpha * Rational::from(s as i128))
            .max()
            .expect("size 0 is always present")
    }
}

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_densub")
}

pub fn run(args: &[&str], input: &Path) -> Output {
    Command::new(binary())
        .args(args)
        .arg("--input")
        .arg(input)
        .output()
        .expect("binary runs")
}

pub fn run_json(args: &[&str], input: &Path) -> (Option<i32>, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full, input);
    let report = if out.status.success() {
        serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
    } else {
        Value::Null
    };
    (out.status.code(), report)
}

/// Exact decimal literal as a rational.
fn decimal(tok: &str) -> Rational {
    let (int, frac) = tok.split_once('.').unwrap_or((tok, ""));
    let den = 10i128.pow(frac.len() as u32);
    let whole: i128 = if int.is_empty() { 0 } else { int.parse().unwrap() };
    let part: i128 = if frac.is_empty() { 0 } else { frac.parse().unwrap() };
    Rational::new(whole * den + part, den)
}

fn label_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Recomputes the density of the report's vertex list from the raw file
/// text, matching labels as strings.
pub fn rescore(file_text: &str, report: &Value) -> Rational {
    let members: Vec<String> = report["result"]["vertices"]
        .as_array()
        .expect("vertex list")
        .iter()
        .map(label_text)
        .collect();
    let mut weights: HashMap<(String, String), Rational> = HashMap::new();
    for line in file_text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        let w = t.get(2).map_or(Rational::from(1), |s| decimal(s));
        weights.insert((t[0].to_string(), t[1].to_string()), w);
    }
    let total: Rational = weights
        .iter()
        .filter(|((u, v), _)| members.contains(u) && members.contains(v))
        .map(|(_, &w)| w)
        .sum();
    total / Rational::from(members.len() as i128)
}

pub fn reported_density(report: &Value) -> Rational {
    let d = &report["result"]["density"];
    Rational::new(d["num"].as_i64().unwrap() as i128, d["den"].as_i64().unwrap() as i128)
}
