//! Vertex labels for the CLI.
//!
//! When every vertex token is a non-negative integer the ids are used as-is,
//! so isolated vertices below the largest id survive. Otherwise each distinct
//! token becomes a dense id in order of first appearance.

use std::collections::HashMap;

use densub::{parse_graph, Result, WeightedGraph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Label {
    Id(u64),
    Name(String),
}

#[derive(Debug, Clone)]
pub enum Labels {
    Numeric,
    Named(Vec<String>),
}

impl Labels {
    pub fn label(&self, v: usize) -> Label {
        match self {
            Labels::Numeric => Label::Id(v as u64),
            Labels::Named(names) => Label::Name(names[v].clone()),
        }
    }

    pub fn labels(&self, vs: impl IntoIterator<Item = usize>) -> Vec<Label> {
        vs.into_iter().map(|v| self.label(v)).collect()
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
}

pub fn parse_labeled(text: &str, weighted: bool) -> Result<(WeightedGraph, Labels)> {
    let numeric = data_lines(text).all(|t| t.iter().take(2).all(|tok| tok.parse::<u32>().is_ok()));
    if numeric {
        return Ok((parse_graph(text, weighted)?, Labels::Numeric));
    }
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut rewritten = String::with_capacity(text.len());
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            rewritten.push('\n');
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        for (i, tok) in tokens.iter().enumerate() {
            if i > 0 {
                rewritten.push(' ');
            }
            if i < 2 {
                let id = *ids.entry(tok).or_insert_with(|| {
                    names.push(tok.to_string());
                    names.len() - 1
                });
                rewritten.push_str(&id.to_string());
            } else {
                rewritten.push_str(tok);
            }
        }
        rewritten.push('\n');
    }
    Ok((parse_graph(&rewritten, weighted)?, Labels::Named(names)))
}
