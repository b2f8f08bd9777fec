//! Densest-k from an at-most-k oracle.
//!
//! The oracle is called on the current graph, every edge inside the returned
//! set is deleted, and this repeats until no edges remain. Each prefix union
//! of the returned sets is then forced to exactly `k` vertices (padded when
//! small, greedily shrunk when large) and the densest candidate wins. With a
//! `(beta, gamma)` oracle the result is within `4 (gamma^2 + gamma beta)` of
//! the densest k-subgraph.

use std::fmt;

use crate::bruteforce::DEFAULT_ENUMERATION_LIMIT;
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::graph::{VertexSet, WeightedGraph};
use crate::peeling::check_k;
use crate::result::{Guarantee, Method, SubgraphResult};
use crate::solvers::{damks_bruteforce_oracle, damks_peel_heuristic, greedy_shrink, PaddingOrder};
use crate::Rational;

type Procedure = Box<dyn Fn(&WeightedGraph, usize) -> Result<VertexSet> + Send + Sync>;

/// An at-most-k procedure with its declared size factor `beta` and density
/// factor `gamma` (`None` when there is no density guarantee).
pub struct DamksOracleSpec {
    pub name: String,
    pub beta: Rational,
    pub gamma: Option<Rational>,
    procedure: Procedure,
}

impl fmt::Debug for DamksOracleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DamksOracleSpec")
            .field("name", &self.name)
            .field("beta", &self.beta)
            .field("gamma", &self.gamma)
            .finish_non_exhaustive()
    }
}

impl DamksOracleSpec {
    pub fn new<F>(name: impl Into<String>, beta: Rational, gamma: Option<Rational>, procedure: F) -> Self
    where
        F: Fn(&WeightedGraph, usize) -> Result<VertexSet> + Send + Sync + 'static,
    {
        DamksOracleSpec {
            name: name.into(),
            beta,
            gamma,
            procedure: Box::new(procedure),
        }
    }

    /// The exact (1, 1) oracle, by enumeration up to `limit` vertices.
    pub fn exact(limit: usize) -> Self {
        let one = Rational::from(1);
        Self::new("exact", one, Some(one), move |g, k| damks_bruteforce_oracle(g, k, limit))
    }

    /// The peel heuristic: at most k vertices, no density guarantee.
    pub fn peel() -> Self {
        Self::new("peel", Rational::from(1), None, damks_peel_heuristic)
    }

    pub fn call(&self, g: &WeightedGraph, k: usize) -> Result<VertexSet> {
        (self.procedure)(g, k)
    }

    /// `4 (gamma^2 + gamma beta)`, or heuristic without a gamma.
    pub fn dks_guarantee(&self) -> Guarantee {
        match self.gamma {
            Some(gamma) => Guarantee::Ratio(Rational::from(4) * (gamma * gamma + gamma * self.beta)),
            None => Guarantee::Heuristic,
        }
    }
}

impl Default for DamksOracleSpec {
    fn default() -> Self {
        Self::exact(DEFAULT_ENUMERATION_LIMIT)
    }
}

/// One oracle call: `H_i` with `n_i`, `W_i` (its weight in `G_i`) and `d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRound {
    pub subgraph: VertexSet,
    pub size: usize,
    pub weight: Rational,
    pub density: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub rounds: Vec<ReductionRound>,
    /// `prefix_unions[t]` is the union of the first `t` round sets, so
    /// index 0 is the empty set.
    pub prefix_unions: Vec<VertexSet>,
    /// The size-k set derived from each prefix union.
    pub candidates: Vec<VertexSet>,
    /// Index of the winning candidate.
    pub chosen: usize,
}

pub fn dks_via_damks(g: &WeightedGraph, k: usize, oracle: &DamksOracleSpec) -> Result<(SubgraphResult, ReductionTrace)> {
    dks_via_damks_with(g, k, oracle, Parallelism::default())
}

pub fn dks_via_damks_with(
    g: &WeightedGraph,
    k: usize,
    oracle: &DamksOracleSpec,
    par: Parallelism,
) -> Result<(SubgraphResult, ReductionTrace)> {
    check_k(g, k)?;
    let size_cap = oracle.beta * Rational::from(k as i128);
    let mut rounds = Vec::new();
    let mut current = g.clone();
    // a single vertex has density 0, which is optimal at k = 1, and no
    // at-most-1 set can contain an edge, so the loop would never progress
    while k > 1 && current.m() > 0 {
        let h = oracle.call(&current, k)?;
        if h.is_empty() {
            return Err(Error::ContractViolation(format!(
                "oracle {} returned an empty set while {} edges remain",
                oracle.name,
                current.m()
            )));
        }
        if Rational::from(h.len() as i128) > size_cap {
            return Err(Error::ContractViolation(format!(
                "oracle {} returned {} vertices, more than beta * k = {}",
                oracle.name,
                h.len(),
                size_cap
            )));
        }
        if h.iter().any(|v| v >= g.n()) {
            return Err(Error::ContractViolation(format!("oracle {} returned an unknown vertex", oracle.name)));
        }
        let (next, removed) = current.without_edges_inside(&h);
        if removed == Rational::from(0) {
            return Err(Error::ContractViolation(format!(
                "oracle {} returned a set with no edges while {} edges remain",
                oracle.name,
                current.m()
            )));
        }
        rounds.push(ReductionRound {
            size: h.len(),
            density: removed / Rational::from(h.len() as i128),
            weight: removed,
            subgraph: h,
        });
        current = next;
    }

    let mut prefix_unions = vec![VertexSet::empty()];
    for round in &rounds {
        let next = prefix_unions.last().expect("starts nonempty").union(&round.subgraph);
        prefix_unions.push(next);
    }
    let padding = PaddingOrder::new(g);
    let candidates: Vec<VertexSet> = par.map(&prefix_unions, |u| {
        if u.len() <= k {
            padding.pad(u, k)
        } else {
            greedy_shrink(g, u, k).expect("k is between 1 and |U|")
        }
    });
    let weights: Vec<i64> = par.map(&candidates, |c| g.induced_weight_scaled(c.as_slice()));
    // every candidate has k vertices, so the heaviest is the densest
    let chosen = weights
        .iter()
        .enumerate()
        .fold(0, |best, (i, &w)| if w > weights[best] { i } else { best });
    let result = SubgraphResult::new(g, candidates[chosen].clone(), Method::DksViaDamks, oracle.dks_guarantee())?;
    Ok((
        result,
        ReductionTrace {
            rounds,
            prefix_unions,
            candidates,
            chosen,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn triangle_pendant_exact() {
        let g = parse_graph("0 1\n1 2\n0 2\n0 3", false).unwrap();
        let (res, trace) = dks_via_damks(&g, 3, &DamksOracleSpec::exact(20)).unwrap();
        assert_eq!(res.subgraph.as_slice(), &[0, 1, 2]);
        assert_eq!(res.density, Rational::from(1));
        assert_eq!(res.guarantee, Guarantee::ratio(8));
        assert_eq!(trace.rounds[0].subgraph.as_slice(), &[0, 1, 2]);
        let total: Rational = trace.rounds.iter().map(|r| r.weight).sum();
        assert_eq!(total, g.total_weight());
    }

    #[test]
    fn path_exact() {
        let g = parse_graph("0 1\n1 2", false).unwrap();
        let (res, _) = dks_via_damks(&g, 2, &DamksOracleSpec::exact(20)).unwrap();
        assert_eq!((res.size(), res.density), (2, Rational::new(1, 2)));
    }

    #[test]
    fn edgeless_graph_pads_empty_prefix() {
        let g = WeightedGraph::empty(4);
        let (res, trace) = dks_via_damks(&g, 2, &DamksOracleSpec::exact(20)).unwrap();
        assert_eq!((res.size(), res.density), (2, Rational::from(0)));
        assert!(trace.rounds.is_empty());
        assert_eq!(trace.prefix_unions, vec![VertexSet::empty()]);
    }

    #[test]
    fn k_one_skips_the_loop() {
        let g = parse_graph("0 1\n1 2", false).unwrap();
        let (res, trace) = dks_via_damks(&g, 1, &DamksOracleSpec::exact(20)).unwrap();
        assert_eq!(res.size(), 1);
        assert!(trace.rounds.is_empty());
    }

    #[test]
    fn peel_oracle_is_heuristic() {
        let g = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n4 5", false).unwrap();
        let (res, trace) = dks_via_damks(&g, 4, &DamksOracleSpec::peel()).unwrap();
        assert_eq!(res.guarantee, Guarantee::Heuristic);
        assert_eq!(res.size(), 4);
        assert_eq!(res.density, Rational::new(3, 2));
        assert!(trace.rounds.iter().all(|r| r.size <= 4));
    }

    #[test]
    fn oversize_oracle_is_rejected() {
        let g = parse_graph("0 1\n1 2\n2 3", false).unwrap();
        let greedy = DamksOracleSpec::new("everything", Rational::from(1), None, |g: &WeightedGraph, _| {
            Ok(VertexSet::all(g.n()))
        });
        assert!(matches!(dks_via_damks(&g, 2, &greedy), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn edgeless_or_empty_oracle_is_rejected() {
        let g = parse_graph("0 1\n2 3", false).unwrap();
        let empty = DamksOracleSpec::new("empty", Rational::from(1), None, |_: &WeightedGraph, _| Ok(VertexSet::empty()));
        assert!(matches!(dks_via_damks(&g, 2, &empty), Err(Error::ContractViolation(_))));
        let apart = DamksOracleSpec::new("apart", Rational::from(1), None, |_: &WeightedGraph, _| {
            Ok([0, 2].into_iter().collect())
        });
        assert!(matches!(dks_via_damks(&g, 2, &apart), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn guarantee_formula() {
        let spec = DamksOracleSpec::new("loose", Rational::from(2), Some(Rational::from(3)), damks_peel_heuristic);
        // 4 * (9 + 6)
        assert_eq!(spec.dks_guarantee(), Guarantee::ratio(60));
    }
}
