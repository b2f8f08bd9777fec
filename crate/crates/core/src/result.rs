use std::fmt;

use crate::error::Result;
use crate::graph::{VertexSet, WeightedGraph};
use crate::Rational;

/// The algorithm that produced a [`SubgraphResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Densest peel suffix with at least k vertices.
    Chalk,
    /// Densest peel suffix of any size.
    CharikarPeel,
    /// Densest member of the parametric nested family.
    ParametricFlow,
    /// Parametric family members padded up to k vertices.
    PaddedParametricFlow,
    /// Exhaustive subset enumeration.
    BruteForce,
    /// Densest peel suffix with at most k vertices.
    PeelHeuristic,
    /// Densest-k via repeated at-most-k oracle calls.
    DksViaDamks,
    /// A w-core read off the peel trace.
    WCore,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Chalk => "chalk",
            Method::CharikarPeel => "charikar-peel",
            Method::ParametricFlow => "parametric-flow",
            Method::PaddedParametricFlow => "parametric-flow-padded",
            Method::BruteForce => "brute-force",
            Method::PeelHeuristic => "peel-heuristic",
            Method::DksViaDamks => "dks-via-damks",
            Method::WCore => "w-core",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Declared worst-case approximation ratio of a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    Exact,
    /// Density is at least optimum / ratio.
    Ratio(Rational),
    Heuristic,
}

impl Guarantee {
    pub fn ratio(r: i128) -> Self {
        Guarantee::Ratio(Rational::from(r))
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guarantee::Exact => f.write_str("exact"),
            Guarantee::Heuristic => f.write_str("heuristic"),
            Guarantee::Ratio(r) => write!(f, "{r}"),
        }
    }
}

/// A vertex set together with its exact weight and density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphResult {
    pub subgraph: VertexSet,
    pub weight: Rational,
    pub density: Rational,
    pub method: Method,
    pub guarantee: Guarantee,
}

impl SubgraphResult {
    pub fn new(g: &WeightedGraph, subgraph: VertexSet, method: Method, guarantee: Guarantee) -> Result<Self> {
        let report = g.density(&subgraph)?;
        Ok(SubgraphResult {
            subgraph,
            weight: report.total_weight,
            density: report.density,
            method,
            guarantee,
        })
    }

    pub fn size(&self) -> usize {
        self.subgraph.len()
    }

    /// Re-scores the stored set against `g`.
    pub fn is_consistent_with(&self, g: &WeightedGraph) -> bool {
        g.density(&self.subgraph)
            .map(|r| r.density == self.density && r.total_weight == self.weight)
            .unwrap_or(false)
    }
}
