//! Test graph generators: exhaustive labelled graphs, structured families,
//! and seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::graph::WeightedGraph;

/// Largest `n` for which every labelled graph is enumerated.
pub const MAX_LABELED_N: usize = 7;

/// Random weights are integer hundredths in `(0, 10]`.
pub const RANDOM_WEIGHT_SCALE: i64 = 100;
const RANDOM_WEIGHT_MAX: i64 = 10 * RANDOM_WEIGHT_SCALE;

/// What [`corpus`] yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusMode {
    /// Graphs on exactly `limit_n` vertices: every labelled unit-weight graph
    /// when `limit_n <= 5`, structured families plus seeded samples above.
    Exhaustive,
    /// `count` seeded random graphs with between 1 and `limit_n` vertices.
    Random { seed: u64, count: usize, weighted: bool },
}

pub fn corpus(limit_n: usize, mode: CorpusMode) -> Result<Box<dyn Iterator<Item = WeightedGraph>>> {
    match mode {
        CorpusMode::Exhaustive if limit_n <= 5 => Ok(Box::new(labeled_graphs(limit_n)?)),
        CorpusMode::Exhaustive if limit_n <= 8 => {
            let mut graphs = structured_families(limit_n);
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + limit_n as u64);
            for _ in 0..64 {
                let p = rng.gen_range(0.1..0.9);
                graphs.push(gnp(&mut rng, limit_n, p, false));
            }
            Ok(Box::new(graphs.into_iter()))
        }
        CorpusMode::Exhaustive => Err(domain("exhaustive corpus supports at most 8 vertices")),
        CorpusMode::Random { seed, count, weighted } => {
            Ok(Box::new(random_graphs(seed, count, 1..=limit_n.max(1), weighted).into_iter()))
        }
    }
}

/// All `2^(n choose 2)` labelled unit-weight graphs on `n` vertices.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = WeightedGraph>> {
    if n > MAX_LABELED_N {
        return Err(domain(format!("labelled enumeration supports at most {MAX_LABELED_N} vertices")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        WeightedGraph::from_unit_edges(n, &edges).expect("enumerated edges are simple")
    }))
}

/// Clique, star, path, cycle, clique plus pendant, two cliques joined by a
/// bridge, and the edgeless graph, all on `n` vertices.
pub fn structured_families(n: usize) -> Vec<WeightedGraph> {
    let unit = |edges: Vec<(usize, usize)>| WeightedGraph::from_unit_edges(n, &edges).expect("family is simple");
    let clique = |range: std::ops::Range<usize>| -> Vec<(usize, usize)> {
        range.clone().flat_map(|u| (u + 1..range.end).map(move |v| (u, v))).collect()
    };
    let mut out = vec![
        WeightedGraph::empty(n),
        unit(clique(0..n)),
        unit((1..n).map(|v| (0, v)).collect()),
        unit((1..n).map(|v| (v - 1, v)).collect()),
    ];
    if n >= 3 {
        let mut cycle: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        cycle.push((0, n - 1));
        out.push(unit(cycle));
    }
    if n >= 2 {
        let mut pendant = clique(0..n - 1);
        pendant.push((0, n - 1));
        out.push(unit(pendant));
    }
    if n >= 4 {
        let half = n / 2;
        let mut bridged = clique(0..half);
        bridged.extend(clique(half..n));
        bridged.push((half - 1, half));
        out.push(unit(bridged));
    }
    out
}

/// Seeded random graphs with a per-graph edge probability in `[0.1, 0.9]`.
pub fn random_graphs(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>, weighted: bool) -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.1..=0.9);
            gnp(&mut rng, n, p, weighted)
        })
        .collect()
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w = if weighted { rng.gen_range(1..=RANDOM_WEIGHT_MAX) } else { 1 };
                edges.push((u, v, w));
            }
        }
    }
    let scale = if weighted { RANDOM_WEIGHT_SCALE } else { 1 };
    WeightedGraph::from_scaled_edges(n, edges, scale).expect("generated edges are simple")
}

/// A uniformly random simple unit-weight graph with exactly `m` edges.
pub fn random_sparse_graph(n: usize, m: usize, seed: u64) -> Result<WeightedGraph> {
    let possible = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > possible {
        return Err(domain(format!("{m} edges do not fit in a simple graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys: Vec<u64> = Vec::with_capacity(m + m / 8);
    while keys.len() < m {
        let need = m - keys.len();
        for _ in 0..need + need / 16 + 16 {
            let u = rng.gen_range(0..n as u64);
            let v = rng.gen_range(0..n as u64);
            if u != v {
                let (a, b) = (u.min(v), u.max(v));
                keys.push(a << 32 | b);
            }
        }
        keys.sort_unstable();
        keys.dedup();
    }
    keys.shuffle(&mut rng);
    keys.truncate(m);
    let edges = keys
        .into_iter()
        .map(|k| ((k >> 32) as usize, (k & 0xffff_ffff) as usize, 1))
        .collect();
    WeightedGraph::from_scaled_edges(n, edges, 1)
}
