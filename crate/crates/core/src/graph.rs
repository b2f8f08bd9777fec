//! Weighted undirected graphs, vertex sets, and density arithmetic.
//!
//! Edge weights are held as integers over a common power-of-ten `scale`, so
//! a weight written `2.5` in an input file is stored as `25` with scale `10`.
//! Every induced weight is therefore an exact integer and every density an
//! exact [`Rational`].

use std::fmt::Write as _;

use crate::error::{domain, Error, Result};
use crate::Rational;

/// Largest number of fractional digits accepted in a weight.
pub const MAX_WEIGHT_DECIMALS: u32 = 9;

/// An immutable simple undirected graph with positive edge weights.
///
/// Adjacency is stored in compressed sparse row form with each row sorted by
/// neighbour id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    scale: i64,
    edges: Vec<(u32, u32, i64)>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    target_weights: Vec<i64>,
    degree: Vec<i64>,
    total: i64,
    uniform: Option<i64>,
}

impl WeightedGraph {
    /// Builds a graph from integer weights expressed in units of `1/scale`.
    pub fn from_scaled_edges(n: usize, edges: Vec<(usize, usize, i64)>, scale: i64) -> Result<Self> {
        if scale <= 0 {
            return Err(domain("weight scale must be positive"));
        }
        if n > u32::MAX as usize {
            return Err(domain("vertex count exceeds u32 range"));
        }
        let mut stored = Vec::with_capacity(edges.len());
        for (i, &(u, v, w)) in edges.iter().enumerate() {
            let line = i + 1;
            if u >= n || v >= n {
                return Err(Error::Malformed {
                    line,
                    message: format!("edge ({u}, {v}) references a vertex outside 0..{n}"),
                });
            }
            if u == v {
                return Err(Error::Malformed {
                    line,
                    message: format!("self-loop on vertex {u}"),
                });
            }
            if w <= 0 {
                return Err(Error::Malformed {
                    line,
                    message: format!("edge ({u}, {v}) has non-positive weight"),
                });
            }
            stored.push((u as u32, v as u32, w));
        }
        Self::build(n, stored, scale)
    }

    /// Builds a graph where every edge has weight 1.
    pub fn from_unit_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_scaled_edges(n, edges.iter().map(|&(u, v)| (u, v, 1)).collect(), 1)
    }

    /// A graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::build(n, Vec::new(), 1).expect("edgeless graph is always valid")
    }

    fn build(n: usize, mut edges: Vec<(u32, u32, i64)>, mut scale: i64) -> Result<Self> {
        // smallest power-of-ten scale that keeps every weight integral
        while scale % 10 == 0 && edges.iter().all(|e| e.2 % 10 == 0) {
            scale /= 10;
            edges.iter_mut().for_each(|e| e.2 /= 10);
        }
        let mut offsets = vec![0usize; n + 1];
        for &(u, v, _) in &edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut slots = vec![(0u32, 0i64); offsets[n]];
        let mut degree = vec![0i64; n];
        let mut total: i64 = 0;
        for &(u, v, w) in &edges {
            slots[cursor[u as usize]] = (v, w);
            cursor[u as usize] += 1;
            slots[cursor[v as usize]] = (u, w);
            cursor[v as usize] += 1;
            degree[u as usize] = checked_add(degree[u as usize], w)?;
            degree[v as usize] = checked_add(degree[v as usize], w)?;
            total = checked_add(total, w)?;
        }
        for u in 0..n {
            let row = &mut slots[offsets[u]..offsets[u + 1]];
            row.sort_unstable_by_key(|&(v, _)| v);
            if let Some(pair) = row.windows(2).find(|p| p[0].0 == p[1].0) {
                let v = pair[0].0;
                let line = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b, _))| (a as usize, b) == (u, v) || (b as usize, a) == (u, v))
                    .map(|(i, _)| i + 1)
                    .nth(1)
                    .unwrap_or(0);
                return Err(Error::Malformed {
                    line,
                    message: format!("duplicate edge between {u} and {v}"),
                });
            }
        }
        let uniform = match edges.first() {
            Some(&(_, _, w)) if edges.iter().all(|e| e.2 == w) => Some(w),
            Some(_) => None,
            None => Some(1),
        };
        let (targets, target_weights) = slots.into_iter().unzip();
        Ok(WeightedGraph {
            n,
            scale,
            edges,
            offsets,
            targets,
            target_weights,
            degree,
            total,
            uniform,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Denominator shared by all stored weights.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Edges as `(u, v, scaled weight)` in insertion order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize, i64)> + '_ {
        self.edges.iter().map(|&(u, v, w)| (u as usize, v as usize, w))
    }

    /// Neighbours of `v` with scaled weights, sorted by neighbour id.
    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = (usize, i64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .zip(&self.target_weights[range])
            .map(|(&u, &w)| (u as usize, w))
    }

    pub(crate) fn row(&self, v: usize) -> (&[u32], &[i64]) {
        let range = self.offsets[v]..self.offsets[v + 1];
        (&self.targets[range.clone()], &self.target_weights[range])
    }

    pub fn degree_count(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn weighted_degree_scaled(&self, v: usize) -> i64 {
        self.degree[v]
    }

    pub fn weighted_degree(&self, v: usize) -> Rational {
        self.ratio(self.degree[v] as i128, 1)
    }

    pub fn total_weight_scaled(&self) -> i64 {
        self.total
    }

    /// W(G), the sum of all edge weights.
    pub fn total_weight(&self) -> Rational {
        self.ratio(self.total as i128, 1)
    }

    /// The common scaled weight when every edge weighs the same.
    pub fn uniform_weight(&self) -> Option<i64> {
        self.uniform
    }

    pub fn max_edge_weight(&self) -> Rational {
        let w = self.edges.iter().map(|e| e.2).max().unwrap_or(0);
        self.ratio(w as i128, 1)
    }

    /// Converts a scaled quantity divided by `per` into true units.
    pub(crate) fn ratio(&self, scaled: i128, per: i128) -> Rational {
        Rational::new(scaled, per * self.scale as i128)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_weight_scaled(u, v).is_some()
    }

    pub fn edge_weight_scaled(&self, u: usize, v: usize) -> Option<i64> {
        let (targets, weights) = self.row(u);
        targets.binary_search(&(v as u32)).ok().map(|i| weights[i])
    }

    /// Scaled weight of the subgraph induced by `members`.
    pub fn induced_weight_scaled(&self, members: &[usize]) -> i64 {
        let mut inside = vec![false; self.n];
        for &v in members {
            inside[v] = true;
        }
        self.induced_weight_masked(members, &inside)
    }

    pub(crate) fn induced_weight_masked(&self, members: &[usize], inside: &[bool]) -> i64 {
        let mut twice = 0i64;
        for &v in members {
            let (targets, weights) = self.row(v);
            for (&u, &w) in targets.iter().zip(weights) {
                if inside[u as usize] {
                    twice += w;
                }
            }
        }
        twice / 2
    }

    /// W(S): total weight of edges with both endpoints in `s`.
    pub fn induced_weight(&self, s: &VertexSet) -> Rational {
        self.ratio(self.induced_weight_scaled(s.as_slice()) as i128, 1)
    }

    /// d(S) = W(S) / |S|. Undefined on the empty set.
    pub fn density(&self, s: &VertexSet) -> Result<DensityReport> {
        if s.is_empty() {
            return Err(domain("density is undefined for the empty vertex set"));
        }
        let weight = self.induced_weight_scaled(s.as_slice());
        Ok(DensityReport {
            subgraph: s.clone(),
            total_weight: self.ratio(weight as i128, 1),
            density: self.ratio(weight as i128, s.len() as i128),
        })
    }

    /// Density of the whole graph.
    pub fn overall_density(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(domain("density is undefined for the empty graph"));
        }
        Ok(self.ratio(self.total as i128, self.n as i128))
    }

    /// The same vertex set with every edge inside `s` deleted.
    ///
    /// Returns the new graph and the weight that was removed.
    pub fn without_edges_inside(&self, s: &VertexSet) -> (WeightedGraph, Rational) {
        let inside = s.mask(self.n);
        let mut removed = 0i64;
        let kept: Vec<(u32, u32, i64)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v, w)| {
                let drop = inside[u as usize] && inside[v as usize];
                if drop {
                    removed += w;
                }
                !drop
            })
            .collect();
        let g = Self::build(self.n, kept, self.scale).expect("edge subset of a valid graph is valid");
        (g, self.ratio(removed as i128, 1))
    }

    /// Serializes to the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let decimals = self.scale.ilog10();
        for &(u, v, w) in &self.edges {
            let _ = writeln!(out, "{u} {v} {}", format_scaled(w, decimals));
        }
        if self.edges.iter().all(|&(u, v, _)| (u.max(v) as usize) + 1 < self.n) && self.n > 0 {
            // an isolated top vertex would otherwise be lost on re-parse
            let _ = writeln!(out, "# vertices {}", self.n);
        }
        out
    }
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or_else(|| domain("total edge weight overflows the 64-bit scaled representation"))
}

fn format_scaled(w: i64, decimals: u32) -> String {
    if decimals == 0 {
        return w.to_string();
    }
    let scale = 10i64.pow(decimals);
    let frac = format!("{:0width$}", w % scale, width = decimals as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        (w / scale).to_string()
    } else {
        format!("{}.{}", w / scale, frac)
    }
}

/// A set of vertex ids, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Validates every id against a graph with `n` vertices.
    pub fn new(n: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = ids.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= n) {
            return Err(domain(format!("vertex {bad} is out of range for a graph on {n} vertices")));
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub(crate) fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSet::from_sorted((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn all(n: usize) -> Self {
        VertexSet::from_sorted((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        VertexSet::from_unsorted(members)
    }

    /// Membership table for a graph with `n` vertices.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut inside = vec![false; n];
        for &v in &self.members {
            inside[v] = true;
        }
        inside
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// W(H) and d(H) of a nonempty vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub subgraph: VertexSet,
    pub total_weight: Rational,
    pub density: Rational,
}

/// Parses the whitespace-separated edge-list format.
///
/// Each non-comment line is `u v` or `u v w`. Lines starting with `#` are
/// comments, except `# vertices N` which raises the vertex count to at least
/// `N` (emitted by [`WeightedGraph::to_edge_list`] so isolated trailing
/// vertices survive a round trip). With `weighted` set every line must carry
/// a weight; otherwise a missing weight defaults to 1.
pub fn parse_graph(text: &str, weighted: bool) -> Result<WeightedGraph> {
    let mut raw: Vec<(usize, usize, u64, u32)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    let mut n = 0usize;
    let mut decimals = 0u32;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                if let Some(tok) = words.next() {
                    n = n.max(parse_id(tok, line_no)?);
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (u, v, w) = match tokens.as_slice() {
            [u, v] if !weighted => (*u, *v, None),
            [u, v, w] => (*u, *v, Some(*w)),
            [_, _] => {
                return Err(Error::Malformed {
                    line: line_no,
                    message: "missing edge weight".into(),
                })
            }
            _ => {
                return Err(Error::Malformed {
                    line: line_no,
                    message: format!("expected 2 or 3 fields, found {}", tokens.len()),
                })
            }
        };
        let u = parse_id(u, line_no)?;
        let v = parse_id(v, line_no)?;
        let (mantissa, places) = match w {
            Some(tok) => parse_weight(tok, line_no)?,
            None => (1, 0),
        };
        decimals = decimals.max(places);
        n = n.max(u + 1).max(v + 1);
        raw.push((u, v, mantissa, places));
        lines.push(line_no);
    }
    let scale = 10i64.pow(decimals);
    let mut edges = Vec::with_capacity(raw.len());
    for (&(u, v, mantissa, places), &line) in raw.iter().zip(&lines) {
        let factor = 10u64.pow(decimals - places);
        let scaled = mantissa
            .checked_mul(factor)
            .filter(|&x| x <= i64::MAX as u64)
            .ok_or_else(|| Error::Malformed {
                line,
                message: "weight does not fit the common decimal scale".into(),
            })?;
        edges.push((u, v, scaled as i64));
    }
    WeightedGraph::from_scaled_edges(n, edges, scale).map_err(|e| match e {
        Error::Malformed { line, message } => Error::Malformed {
            line: lines.get(line.wrapping_sub(1)).copied().unwrap_or(line),
            message,
        },
        other => other,
    })
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<u32>().map(|v| v as usize).map_err(|_| Error::Parse {
        line,
        token: tok.to_string(),
        expected: "a non-negative vertex id",
    })
}

/// Parses a positive decimal such as `3`, `2.5` or `.125` into
/// `(mantissa, fractional digits)`.
fn parse_weight(tok: &str, line: usize) -> Result<(u64, u32)> {
    let parse_err = || Error::Parse {
        line,
        token: tok.to_string(),
        expected: "a decimal weight",
    };
    let (negative, body) = match tok.as_bytes().first() {
        Some(b'-') => (true, &tok[1..]),
        Some(b'+') => (false, &tok[1..]),
        _ => (false, tok),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(parse_err());
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(parse_err());
    }
    let frac = frac.trim_end_matches('0');
    if frac.len() as u32 > MAX_WEIGHT_DECIMALS {
        return Err(Error::Malformed {
            line,
            message: format!("weight {tok} has more than {MAX_WEIGHT_DECIMALS} decimal places"),
        });
    }
    let digits = format!("{int}{frac}");
    let mantissa = if digits.is_empty() {
        0
    } else {
        digits.parse::<u64>().map_err(|_| Error::Malformed {
            line,
            message: format!("weight {tok} is too large"),
        })?
    };
    if negative || mantissa == 0 {
        return Err(Error::Malformed {
            line,
            message: format!("edge weight {tok} is not positive"),
        });
    }
    Ok((mantissa, frac.len() as u32))
}
