#![allow(dead_code)]

use densub::{Rational, VertexSet, WeightedGraph};
use proptest::prelude::*;

/// W(S) straight from the edge list, independent of adjacency storage.
pub fn naive_weight(g: &WeightedGraph, mask: u64) -> Rational {
    let scaled: i64 = g
        .edges()
        .filter(|&(u, v, _)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .map(|(_, _, w)| w)
        .sum();
    Rational::new(scaled as i128, g.scale() as i128)
}

pub fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Max density over nonempty subsets whose size passes `keep`.
pub fn naive_best(g: &WeightedGraph, keep: impl Fn(usize) -> bool) -> Option<Rational> {
    (1u64..1 << g.n())
        .filter(|m| keep(m.count_ones() as usize))
        .map(|m| naive_weight(g, m) / Rational::from(m.count_ones() as i128))
        .max()
}

pub fn naive_dmax(g: &WeightedGraph) -> Rational {
    naive_best(g, |_| true).unwrap()
}

pub fn naive_dal(g: &WeightedGraph, k: usize) -> Rational {
    naive_best(g, |s| s >= k).unwrap()
}

pub fn naive_dk(g: &WeightedGraph, k: usize) -> Rational {
    naive_best(g, |s| s == k).unwrap()
}

/// max over all subsets (including the empty one) of W(H) - alpha |H|.
pub fn naive_max_excess(g: &WeightedGraph, alpha: Rational) -> Rational {
    (0u64..1 << g.n())
        .map(|m| naive_weight(g, m) - alpha * Rational::from(m.count_ones() as i128))
        .max()
        .unwrap()
}

pub fn min_degree_at_least(g: &WeightedGraph, mask: u64, w: Rational) -> bool {
    (0..g.n()).filter(|&v| mask >> v & 1 == 1).all(|v| {
        let d: i64 = g.neighbors(v).filter(|&(u, _)| mask >> u & 1 == 1).map(|(_, x)| x).sum();
        Rational::new(d as i128, g.scale() as i128) >= w
    })
}

pub fn graph_strategy(max_n: usize, weighted: bool) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(proptest::bool::weighted(0.5), pairs),
            proptest::collection::vec(1i64..=1000, pairs),
        )
            .prop_map(move |(n, keep, weights)| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if keep[i] {
                            edges.push((u, v, if weighted { weights[i] } else { 1 }));
                        }
                        i += 1;
                    }
                }
                WeightedGraph::from_scaled_edges(n, edges, if weighted { 100 } else { 1 }).unwrap()
            })
    })
}

pub fn any_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    prop_oneof![graph_strategy(max_n, false), graph_strategy(max_n, true)]
}

pub fn parse(text: &str) -> WeightedGraph {
    densub::parse_graph(text, false).unwrap()
}

pub fn clique_pendant() -> WeightedGraph {
    parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4")
}

pub fn triangle_pendant() -> WeightedGraph {
    parse("0 1\n1 2\n0 2\n0 3")
}

pub fn path3() -> WeightedGraph {
    parse("0 1\n1 2")
}
