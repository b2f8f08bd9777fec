//! Exhaustive ground truth for the four density problems on small graphs.
//!
//! One pass over all `2^n` vertex subsets records, for every size `s`, the
//! heaviest induced subgraph on exactly `s` vertices. Every problem is then a
//! maximisation over a range of sizes. Subsets are enumerated in chunks that
//! share their high bits; within a chunk the weight of each subset comes from
//! the subset without its lowest vertex.

use std::cmp::Ordering;

use crate::error::{domain, Error, Result};
use crate::exec::Parallelism;
use crate::graph::{VertexSet, WeightedGraph};
use crate::Rational;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Subset masks are `u64`.
const MAX_ENUMERATION_VERTICES: usize = 63;

/// Low bits handled by the per-chunk recurrence.
const CHUNK_BITS: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Maximum density over all nonempty subsets.
    Densest,
    /// At least k vertices.
    Dalks(usize),
    /// At most k vertices.
    Damks(usize),
    /// Exactly k vertices.
    Dks(usize),
}

impl Problem {
    pub fn k(self) -> Option<usize> {
        match self {
            Problem::Densest => None,
            Problem::Dalks(k) | Problem::Damks(k) | Problem::Dks(k) => Some(k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::Densest => "densest",
            Problem::Dalks(_) => "dalks",
            Problem::Damks(_) => "damks",
            Problem::Dks(_) => "dks",
        }
    }
}

/// The optimum of a problem and a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactAnswer {
    pub problem: Problem,
    pub optimum: Rational,
    pub witness: VertexSet,
}

/// For each subset size, the heaviest subset of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    n: usize,
    scale: i64,
    /// Index `s` holds `(scaled weight, mask)`; index 0 is unused.
    best: Vec<(i64, u64)>,
}

impl SizeProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest induced weight on exactly `s` vertices, `1 <= s <= n`.
    pub fn max_weight(&self, s: usize) -> Rational {
        Rational::new(self.best[s].0 as i128, self.scale as i128)
    }

    pub fn dk(&self, k: usize) -> Rational {
        Rational::new(self.best[k].0 as i128, k as i128 * self.scale as i128)
    }

    pub fn dk_witness(&self, k: usize) -> VertexSet {
        VertexSet::from_mask(self.best[k].1)
    }

    pub fn dmax(&self) -> Rational {
        self.answer_over(1..=self.n).0
    }

    pub fn dal(&self, k: usize) -> Rational {
        self.answer_over(k..=self.n).0
    }

    pub fn dam(&self, k: usize) -> Rational {
        self.answer_over(1..=k.min(self.n)).0
    }

    /// `max_H W(H) - alpha |H|` over all subsets, including the empty one.
    pub fn max_excess(&self, alpha: Rational) -> Rational {
        (1..=self.n)
            .map(|s| self.max_weight(s) - alpha * Rational::from(s as i128))
            .fold(Rational::from(0), |a, b| a.max(b))
    }

    /// Best density over the given sizes; ties go to the lexicographically
    /// smallest vertex list.
    fn answer_over(&self, sizes: std::ops::RangeInclusive<usize>) -> (Rational, u64) {
        let mut best: Option<(i64, usize, u64)> = None;
        for s in sizes {
            let (w, mask) = self.best[s];
            best = match best {
                None => Some((w, s, mask)),
                Some((bw, bs, bm)) => {
                    let ord = (w as i128 * bs as i128).cmp(&(bw as i128 * s as i128));
                    if ord == Ordering::Greater || (ord == Ordering::Equal && lex_less(mask, bm)) {
                        Some((w, s, mask))
                    } else {
                        Some((bw, bs, bm))
                    }
                }
            };
        }
        let (w, s, mask) = best.expect("size range is nonempty");
        (Rational::new(w as i128, s as i128 * self.scale as i128), mask)
    }

    pub fn answer(&self, problem: Problem) -> Result<ExactAnswer> {
        let n = self.n;
        if n == 0 {
            return Err(domain("no nonempty subsets in the empty graph"));
        }
        let sizes = match problem {
            Problem::Densest => 1..=n,
            Problem::Dalks(k) | Problem::Dks(k) if k < 1 || k > n => {
                return Err(domain(format!("k = {k} is infeasible for a graph on {n} vertices")))
            }
            Problem::Dalks(k) => k..=n,
            Problem::Dks(k) => k..=k,
            Problem::Damks(0) => return Err(domain("k must be at least 1")),
            Problem::Damks(k) => 1..=k.min(n),
        };
        let (optimum, mask) = self.answer_over(sizes);
        Ok(ExactAnswer {
            problem,
            optimum,
            witness: VertexSet::from_mask(mask),
        })
    }
}

/// Is the sorted vertex list of `a` lexicographically smaller than `b`'s?
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let v = (a ^ b).trailing_zeros();
    let above = |x: u64| x.checked_shr(v + 1).unwrap_or(0) != 0;
    if a >> v & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

fn better(w: i64, mask: u64, current: (i64, u64)) -> bool {
    w > current.0 || (w == current.0 && lex_less(mask, current.1))
}

/// Enumerates all subsets of `g` once and records the best per size.
pub fn size_profile(g: &WeightedGraph, limit: usize, par: Parallelism) -> Result<SizeProfile> {
    let n = g.n();
    if n > limit.min(MAX_ENUMERATION_VERTICES) {
        return Err(Error::Capacity {
            n,
            limit: limit.min(MAX_ENUMERATION_VERTICES),
        });
    }
    let low_bits = n.min(CHUNK_BITS);
    let chunks = 1usize << (n - low_bits);
    let adjacency: Vec<Vec<(u32, i64)>> = (0..n).map(|v| g.neighbors(v).map(|(u, w)| (u as u32, w)).collect()).collect();
    let adjacency_masks: Vec<u64> = adjacency
        .iter()
        .map(|row| row.iter().fold(0u64, |m, &(u, _)| m | 1 << u))
        .collect();
    let uniform = g.uniform_weight();

    let per_chunk = par.map_range(chunks, |chunk| {
        let base = (chunk as u64) << low_bits;
        let mut base_weight = 0i64;
        for v in (low_bits..n).filter(|&v| base >> v & 1 == 1) {
            for &(u, w) in &adjacency[v] {
                if (u as usize) > v && base >> u & 1 == 1 {
                    base_weight += w;
                }
            }
        }
        let mut best = vec![(i64::MIN, u64::MAX); n + 1];
        let mut weights = vec![0i64; 1 << low_bits];
        weights[0] = base_weight;
        if base != 0 {
            let s = base.count_ones() as usize;
            best[s] = (base_weight, base);
        }
        for low in 1u64..(1u64 << low_bits) {
            let v = low.trailing_zeros() as usize;
            let rest = low & (low - 1);
            let others = base | rest;
            let gain = match uniform {
                Some(w) => (adjacency_masks[v] & others).count_ones() as i64 * w,
                None => adjacency[v]
                    .iter()
                    .filter(|&&(u, _)| others >> u & 1 == 1)
                    .map(|&(_, w)| w)
                    .sum(),
            };
            let w = weights[rest as usize] + gain;
            weights[low as usize] = w;
            let mask = base | low;
            let s = mask.count_ones() as usize;
            if better(w, mask, best[s]) {
                best[s] = (w, mask);
            }
        }
        best
    });

    let mut best = vec![(i64::MIN, u64::MAX); n + 1];
    for chunk in per_chunk {
        for s in 1..=n {
            if better(chunk[s].0, chunk[s].1, best[s]) {
                best[s] = chunk[s];
            }
        }
    }
    Ok(SizeProfile {
        n,
        scale: g.scale(),
        best,
    })
}

/// Exact answer with the default enumeration limit.
pub fn brute_force(g: &WeightedGraph, problem: Problem) -> Result<ExactAnswer> {
    brute_force_with(g, problem, DEFAULT_ENUMERATION_LIMIT, Parallelism::default())
}

pub fn brute_force_with(g: &WeightedGraph, problem: Problem, limit: usize, par: Parallelism) -> Result<ExactAnswer> {
    size_profile(g, limit, par)?.answer(problem)
}
