//! Problem-level solvers assembled from peeling and the flow engine.

use crate::bruteforce::{brute_force_with, Problem};
use crate::error::{domain, Result};
use crate::exec::Parallelism;
use crate::graph::{VertexSet, WeightedGraph};
use crate::parametric::parametric_family_with;
use crate::peeling::{check_k, peel, peel_subset};
use crate::result::{Guarantee, Method, SubgraphResult};

/// A densest subgraph, found as the densest member of the parametric family.
pub fn exact_densest(g: &WeightedGraph) -> Result<SubgraphResult> {
    exact_densest_with(g, Parallelism::default())
}

pub fn exact_densest_with(g: &WeightedGraph, par: Parallelism) -> Result<SubgraphResult> {
    if g.n() == 0 {
        return Err(domain("densest subgraph of the empty graph is undefined"));
    }
    let family = parametric_family_with(g, par)?;
    let best = family.densest().expect("a nonempty graph has a nonempty chain member");
    SubgraphResult::new(g, best.set.clone(), Method::ParametricFlow, Guarantee::Exact)
}

/// 2-approximation for the densest subgraph on at least `k` vertices: pad
/// every parametric family member below `k` vertices up to exactly `k` and
/// keep the densest.
pub fn dalks_2approx(g: &WeightedGraph, k: usize) -> Result<SubgraphResult> {
    dalks_2approx_with(g, k, Parallelism::default())
}

pub fn dalks_2approx_with(g: &WeightedGraph, k: usize, par: Parallelism) -> Result<SubgraphResult> {
    check_k(g, k)?;
    let family = parametric_family_with(g, par)?;
    let padding = PaddingOrder::new(g);
    let mut best: Option<(VertexSet, i64)> = None;
    for member in &family.chain {
        let set = if member.size() < k {
            padding.pad(&member.set, k)
        } else {
            member.set.clone()
        };
        let w = g.induced_weight_scaled(set.as_slice());
        let improves = match &best {
            None => true,
            Some((b, bw)) => (w as i128 * b.len() as i128) > (*bw as i128 * set.len() as i128),
        };
        if improves {
            best = Some((set, w));
        }
    }
    let (set, _) = best.expect("the chain is never empty");
    SubgraphResult::new(g, set, Method::PaddedParametricFlow, Guarantee::ratio(2))
}

/// Vertices sorted by decreasing weighted degree, ties by id.
pub(crate) struct PaddingOrder {
    order: Vec<usize>,
}

impl PaddingOrder {
    pub(crate) fn new(g: &WeightedGraph) -> Self {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.weighted_degree_scaled(v)), v));
        PaddingOrder { order }
    }

    pub(crate) fn pad(&self, s: &VertexSet, k: usize) -> VertexSet {
        let mut members = s.as_slice().to_vec();
        let missing = k.saturating_sub(s.len());
        members.extend(self.order.iter().copied().filter(|&v| !s.contains(v)).take(missing));
        VertexSet::from_unsorted(members)
    }
}

/// Extends `s` to exactly `k` vertices with the highest-degree vertices not
/// already in it.
pub fn pad_to_size(g: &WeightedGraph, s: &VertexSet, k: usize) -> Result<VertexSet> {
    if k > g.n() {
        return Err(domain(format!("cannot pad to {k} vertices in a graph on {}", g.n())));
    }
    if s.len() > k {
        return Err(domain(format!("set already has {} > {k} vertices", s.len())));
    }
    if s.iter().any(|v| v >= g.n()) {
        return Err(domain("set contains a vertex outside the graph"));
    }
    Ok(PaddingOrder::new(g).pad(s, k))
}

/// Shrinks `u` to `k` vertices by repeatedly deleting a minimum weighted
/// degree vertex of the remaining induced subgraph.
///
/// For `k >= 2` the result has density at least `d(u) * k / (2|u|)`. No
/// single vertex has positive density, so the bound cannot hold at `k = 1`
/// when `u` contains an edge.
pub fn greedy_shrink(g: &WeightedGraph, u: &VertexSet, k: usize) -> Result<VertexSet> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if k > u.len() {
        return Err(domain(format!("cannot shrink {} vertices to {k}", u.len())));
    }
    if u.iter().any(|v| v >= g.n()) {
        return Err(domain("set contains a vertex outside the graph"));
    }
    Ok(peel_subset(g, u.as_slice()).suffix(k))
}

/// Exact at-most-k oracle by enumeration; refuses graphs above `limit`.
pub fn damks_bruteforce_oracle(g: &WeightedGraph, k: usize, limit: usize) -> Result<VertexSet> {
    Ok(brute_force_with(g, Problem::Damks(k), limit, Parallelism::default())?.witness)
}

/// Densest peel suffix with at most `k` vertices. No ratio guarantee.
pub fn damks_peel_heuristic(g: &WeightedGraph, k: usize) -> Result<VertexSet> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if g.n() == 0 {
        return Err(domain("the empty graph has no nonempty subgraph"));
    }
    let trace = peel(g);
    let i = trace
        .densest_suffix_in(1..=k.min(g.n()))
        .expect("range starts at 1 and the graph is nonempty");
    Ok(trace.suffix(i))
}
