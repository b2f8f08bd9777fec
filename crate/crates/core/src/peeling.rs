//! Greedy minimum-degree peeling, w-cores, and the peel-based densest
//! subgraph algorithms.
//!
//! A peel on `h` vertices removes `v_h, v_{h-1}, ..., v_1` in that order.
//! `H_i` is the subgraph still present when `i` vertices remain, and `r_i` is
//! the weighted degree of `v_i` inside `H_i` at the moment it is removed.
//! Ties between minimum-degree vertices go to the smallest id.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{domain, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::result::{Guarantee, Method, SubgraphResult};
use crate::Rational;

/// Priority structure used to find the next vertex to remove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PeelQueue {
    /// Buckets when all edge weights are equal, a heap otherwise.
    #[default]
    Auto,
    /// Array of degree buckets. Only valid for uniform edge weights.
    Buckets,
    /// Binary heap keyed on weighted degree with lazy deletion.
    Heap,
}

/// The full record of one peel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelingTrace {
    scale: i64,
    order: Vec<usize>,
    removal_degrees: Vec<i64>,
    /// `suffix_weights[i]` is the scaled W(H_i).
    suffix_weights: Vec<i64>,
}

impl PeelingTrace {
    /// Number of vertices peeled.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertices in removal order: `v_h` first, `v_1` last.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Scaled removal degrees aligned with [`order`](Self::order).
    pub fn removal_degrees_scaled(&self) -> &[i64] {
        &self.removal_degrees
    }

    /// r_i, the degree of `v_i` when it was removed from `H_i`.
    pub fn removal_degree(&self, i: usize) -> Rational {
        Rational::new(self.r_scaled(i) as i128, self.scale as i128)
    }

    fn r_scaled(&self, i: usize) -> i64 {
        self.removal_degrees[self.len() - i]
    }

    /// Vertices of `H_i` in reverse removal order.
    pub fn suffix_slice(&self, i: usize) -> &[usize] {
        &self.order[self.len() - i..]
    }

    pub fn suffix(&self, i: usize) -> VertexSet {
        VertexSet::from_unsorted(self.suffix_slice(i).to_vec())
    }

    pub fn suffix_weight_scaled(&self, i: usize) -> i64 {
        self.suffix_weights[i]
    }

    /// W(H_i).
    pub fn suffix_weight(&self, i: usize) -> Rational {
        Rational::new(self.suffix_weights[i] as i128, self.scale as i128)
    }

    /// d(H_i) for `1 <= i <= len`.
    pub fn suffix_density(&self, i: usize) -> Rational {
        assert!(i >= 1 && i <= self.len(), "suffix size {i} out of range");
        Rational::new(self.suffix_weights[i] as i128, i as i128 * self.scale as i128)
    }

    /// Index `i` in `range` maximising d(H_i); density ties go to the
    /// largest `i`. Returns `None` for an empty range.
    pub fn densest_suffix_in(&self, range: std::ops::RangeInclusive<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in range {
            if i == 0 {
                continue;
            }
            best = match best {
                Some(b) if compare_density(self.suffix_weights[i], i, self.suffix_weights[b], b) == Ordering::Less => {
                    Some(b)
                }
                _ => Some(i),
            };
        }
        best
    }

    /// The w-core, read off the trace.
    ///
    /// `I(w)` is the largest index with `r_{I(w)} >= w`. The removal degrees
    /// are not monotone, so the whole sequence is scanned.
    pub fn core(&self, w: Rational) -> CoreResult {
        let index = (1..=self.len())
            .rev()
            .find(|&i| {
                // r_i / scale >= numer / denom
                self.r_scaled(i) as i128 * *w.denom() >= *w.numer() * self.scale as i128
            })
            .unwrap_or(0);
        CoreResult {
            threshold: w,
            core: self.suffix(index),
            index,
        }
    }
}

/// `w1/s1` against `w2/s2` for positive sizes.
pub(crate) fn compare_density(w1: i64, s1: usize, w2: i64, s2: usize) -> Ordering {
    (w1 as i128 * s2 as i128).cmp(&(w2 as i128 * s1 as i128))
}

/// A w-core and the peel index it was found at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    pub threshold: Rational,
    pub core: VertexSet,
    pub index: usize,
}

/// Peels the whole graph.
pub fn peel(g: &WeightedGraph) -> PeelingTrace {
    peel_with(g, PeelQueue::Auto)
}

pub fn peel_with(g: &WeightedGraph, queue: PeelQueue) -> PeelingTrace {
    let all: Vec<usize> = (0..g.n()).collect();
    peel_members(g, &all, queue)
}

/// Peels the subgraph induced by `members` (which must be distinct).
pub fn peel_subset(g: &WeightedGraph, members: &[usize]) -> PeelingTrace {
    peel_members(g, members, PeelQueue::Auto)
}

fn peel_members(g: &WeightedGraph, members: &[usize], queue: PeelQueue) -> PeelingTrace {
    let mut present = vec![false; g.n()];
    for &v in members {
        present[v] = true;
    }
    let (order, removal_degrees) = match (queue, g.uniform_weight()) {
        (PeelQueue::Auto | PeelQueue::Buckets, Some(w)) => peel_buckets(g, members, present, w),
        (PeelQueue::Buckets, None) => panic!("bucket peeling requires uniform edge weights"),
        _ => peel_heap(g, members, present),
    };
    let total: i64 = removal_degrees.iter().sum();
    let h = order.len();
    let mut suffix_weights = vec![0i64; h + 1];
    suffix_weights[h] = total;
    for i in (1..=h).rev() {
        suffix_weights[i - 1] = suffix_weights[i] - removal_degrees[h - i];
    }
    PeelingTrace {
        scale: g.scale(),
        order,
        removal_degrees,
        suffix_weights,
    }
}

fn peel_buckets(g: &WeightedGraph, members: &[usize], mut present: Vec<bool>, weight: i64) -> (Vec<usize>, Vec<i64>) {
    let mut count = vec![0u32; g.n()];
    let mut max_count = 0;
    for &v in members {
        let (targets, _) = g.row(v);
        let c = targets.iter().filter(|&&u| present[u as usize]).count() as u32;
        count[v] = c;
        max_count = max_count.max(c as usize);
    }
    let mut buckets: Vec<BinaryHeap<Reverse<u32>>> = vec![BinaryHeap::new(); max_count + 1];
    for &v in members {
        buckets[count[v] as usize].push(Reverse(v as u32));
    }
    let mut order = Vec::with_capacity(members.len());
    let mut degrees = Vec::with_capacity(members.len());
    let mut cur = 0usize;
    for _ in 0..members.len() {
        let v = loop {
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let Reverse(v) = buckets[cur].pop().expect("bucket is nonempty");
            // stale entries: already removed, or moved to a lower bucket
            if present[v as usize] && count[v as usize] as usize == cur {
                break v as usize;
            }
        };
        present[v] = false;
        order.push(v);
        degrees.push(cur as i64 * weight);
        for &u in g.row(v).0 {
            let u = u as usize;
            if present[u] {
                count[u] -= 1;
                let c = count[u] as usize;
                buckets[c].push(Reverse(u as u32));
                cur = cur.min(c);
            }
        }
    }
    (order, degrees)
}

fn peel_heap(g: &WeightedGraph, members: &[usize], mut present: Vec<bool>) -> (Vec<usize>, Vec<i64>) {
    let mut degree = vec![0i64; g.n()];
    let mut heap = BinaryHeap::with_capacity(members.len());
    for &v in members {
        let (targets, weights) = g.row(v);
        let d = targets
            .iter()
            .zip(weights)
            .filter(|(&u, _)| present[u as usize])
            .map(|(_, &w)| w)
            .sum();
        degree[v] = d;
        heap.push(Reverse((d, v as u32)));
    }
    let mut order = Vec::with_capacity(members.len());
    let mut degrees = Vec::with_capacity(members.len());
    while let Some(Reverse((d, v))) = heap.pop() {
        let v = v as usize;
        if !present[v] || degree[v] != d {
            continue;
        }
        present[v] = false;
        order.push(v);
        degrees.push(d);
        let (targets, weights) = g.row(v);
        for (&u, &w) in targets.iter().zip(weights) {
            let u = u as usize;
            if present[u] {
                degree[u] -= w;
                heap.push(Reverse((degree[u], u as u32)));
            }
        }
    }
    (order, degrees)
}

/// C_w(G): the largest induced subgraph with minimum weighted degree >= w.
pub fn w_core(g: &WeightedGraph, w: Rational) -> CoreResult {
    peel(g).core(w)
}

/// Densest peel suffix with at least `k` vertices (3-approximation for the
/// at-least-k problem).
pub fn chalk(g: &WeightedGraph, k: usize) -> Result<SubgraphResult> {
    check_k(g, k)?;
    chalk_from_trace(g, &peel(g), k, Method::Chalk, Guarantee::ratio(3))
}

/// Densest peel suffix of any size (2-approximation for densest subgraph).
pub fn charikar_densest(g: &WeightedGraph) -> Result<SubgraphResult> {
    if g.n() == 0 {
        return Err(domain("densest subgraph of the empty graph is undefined"));
    }
    chalk_from_trace(g, &peel(g), 1, Method::CharikarPeel, Guarantee::ratio(2))
}

pub(crate) fn chalk_from_trace(
    g: &WeightedGraph,
    trace: &PeelingTrace,
    k: usize,
    method: Method,
    guarantee: Guarantee,
) -> Result<SubgraphResult> {
    let i = trace
        .densest_suffix_in(k..=trace.len())
        .ok_or_else(|| domain(format!("k = {k} exceeds the vertex count {}", trace.len())))?;
    SubgraphResult::new(g, trace.suffix(i), method, guarantee)
}

pub(crate) fn check_k(g: &WeightedGraph, k: usize) -> Result<()> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if k > g.n() {
        return Err(domain(format!("k = {k} exceeds the vertex count {}", g.n())));
    }
    Ok(())
}
