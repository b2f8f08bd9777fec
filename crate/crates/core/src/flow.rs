//! Maximum flow / minimum cut, and the cut network whose minimum cut picks
//! out a maximiser of `W(H) - alpha |H|`.

use std::collections::VecDeque;

use crate::error::{domain, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::Rational;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    /// Residual capacity.
    cap: i128,
}

/// A directed network with integer capacities.
///
/// Rational capacities are handled by the caller scaling them to a common
/// denominator, as [`excess_network`] does.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

/// Result of a max-flow computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub flow: i128,
    /// Nodes reachable from the source in the residual network: the
    /// minimal source side of a minimum cut.
    pub source_side: Vec<bool>,
    /// Nodes that can reach the sink in the residual network: the minimal
    /// sink side of a minimum cut.
    pub sink_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes {
            return Err(domain("source or sink outside the node range"));
        }
        if source == sink {
            return Err(domain("source and sink must differ"));
        }
        Ok(FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            source,
            sink,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i128) -> Result<()> {
        if capacity < 0 {
            return Err(domain("arc capacity must be non-negative"));
        }
        if from >= self.node_count() || to >= self.node_count() {
            return Err(domain("arc endpoint outside the node range"));
        }
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap: capacity });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        Ok(())
    }

    /// Capacity of the cut separating `side` (containing the source) from
    /// the rest, measured on the original capacities.
    pub fn cut_capacity(&self, side: &[bool]) -> i128 {
        let mut total = 0;
        for (from, arcs) in self.adj.iter().enumerate() {
            for &id in arcs {
                // forward arcs have even ids; original capacity is the
                // residual plus what flowed back into the paired arc
                if id % 2 == 0 && side[from] && !side[self.arcs[id].to] {
                    total += self.arcs[id].cap + self.arcs[id + 1].cap;
                }
            }
        }
        total
    }

    /// Runs Dinic's algorithm to completion. The network keeps its final
    /// residual state.
    pub fn max_flow_min_cut(&mut self) -> MinCut {
        let n = self.node_count();
        let mut flow = 0i128;
        let mut level = vec![usize::MAX; n];
        let mut next = vec![0usize; n];
        while self.bfs_levels(&mut level) {
            next.iter_mut().for_each(|x| *x = 0);
            loop {
                let pushed = self.augment(self.source, i128::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        MinCut {
            flow,
            source_side: self.residual_reach(self.source, true),
            sink_side: self.residual_reach(self.sink, false),
        }
    }

    fn bfs_levels(&self, level: &mut [usize]) -> bool {
        level.iter_mut().for_each(|l| *l = usize::MAX);
        level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && level[arc.to] == usize::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        level[self.sink] != usize::MAX
    }

    /// Finds one augmenting path in the level graph, iteratively.
    fn augment(&mut self, source: usize, limit: i128, level: &[usize], next: &mut [usize]) -> i128 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = source;
        loop {
            if u == self.sink {
                let pushed = path.iter().map(|&id| self.arcs[id].cap).min().unwrap_or(limit).min(limit);
                for &id in &path {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                }
                return pushed;
            }
            let mut advanced = false;
            while next[u] < self.adj[u].len() {
                let id = self.adj[u][next[u]];
                let arc = &self.arcs[id];
                if arc.cap > 0 && level[arc.to] == level[u] + 1 {
                    path.push(id);
                    u = arc.to;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                match path.pop() {
                    Some(id) => {
                        u = self.arcs[id ^ 1].to;
                        next[u] += 1;
                    }
                    None => return 0,
                }
            }
        }
    }

    fn residual_reach(&self, start: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &id in &self.adj[u] {
                // walking backwards from the sink we need residual capacity
                // on the arc pointing into `u`, which is the pair of `id`
                let (to, cap) = if forward {
                    (self.arcs[id].to, self.arcs[id].cap)
                } else {
                    (self.arcs[id].to, self.arcs[id ^ 1].cap)
                };
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

/// Solves `net` and returns the flow value with the minimal source side.
pub fn max_flow_min_cut(net: &FlowNetwork) -> (i128, Vec<bool>) {
    let mut net = net.clone();
    let cut = net.max_flow_min_cut();
    (cut.flow, cut.source_side)
}

/// The cut network for `max_H W(H) - alpha |H|`.
///
/// Nodes: source, one per vertex, one per edge, sink. Arcs: source to each
/// vertex with capacity `alpha`, each vertex to the nodes of its incident
/// edges with unbounded capacity, each edge node to the sink with the edge
/// weight. A cut with sink side `T` costs `alpha |H| + W(G) - W(H)` where `H`
/// is the set of vertex nodes in `T`, so the minimum cut equals
/// `W(G) - max_H (W(H) - alpha |H|)`. All capacities are multiplied by a
/// common factor so they are integers.
#[derive(Debug, Clone)]
pub struct ExcessNetwork {
    pub network: FlowNetwork,
    /// Integer capacities are this multiple of the true ones.
    pub capacity_factor: i128,
    n: usize,
    scale: i64,
    total_scaled: i64,
}

pub fn excess_network(g: &WeightedGraph, alpha: Rational) -> Result<ExcessNetwork> {
    if alpha < Rational::from(0) {
        return Err(domain("alpha must be non-negative"));
    }
    // alpha in scaled weight units is p / q
    let scaled = alpha * Rational::from(g.scale() as i128);
    let (p, q) = (*scaled.numer(), *scaled.denom());
    let n = g.n();
    let m = g.m();
    let source = 0;
    let sink = n + m + 1;
    let unbounded = q * g.total_weight_scaled() as i128 + p * n as i128 + 1;
    let mut net = FlowNetwork::new(n + m + 2, source, sink)?;
    for v in 0..n {
        net.add_arc(source, 1 + v, p)?;
    }
    for (e, (u, v, w)) in g.edges().enumerate() {
        let node = 1 + n + e;
        net.add_arc(1 + u, node, unbounded)?;
        net.add_arc(1 + v, node, unbounded)?;
        net.add_arc(node, sink, q * w as i128)?;
    }
    Ok(ExcessNetwork {
        network: net,
        capacity_factor: q * g.scale() as i128,
        n,
        scale: g.scale(),
        total_scaled: g.total_weight_scaled(),
    })
}

/// A maximiser of `W(H) - alpha |H|` extracted from a minimum cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessSolution {
    pub alpha: Rational,
    /// `max_H W(H) - alpha |H|`.
    pub value: Rational,
    /// The largest maximiser.
    pub maximal: VertexSet,
    /// The smallest maximiser.
    pub minimal: VertexSet,
    pub cut_value: Rational,
}

impl ExcessNetwork {
    pub fn solve(mut self, alpha: Rational) -> ExcessSolution {
        let cut = self.network.max_flow_min_cut();
        debug_assert_eq!(cut.flow, self.network.cut_capacity(&cut.source_side));
        let n = self.n;
        // the maximiser sits on the sink side; the largest one is the
        // complement of the minimal source side
        let maximal = VertexSet::from_sorted((0..n).filter(|&v| !cut.source_side[1 + v]).collect());
        let minimal = VertexSet::from_sorted((0..n).filter(|&v| cut.sink_side[1 + v]).collect());
        let cut_value = Rational::new(cut.flow, self.capacity_factor);
        let total = Rational::new(self.total_scaled as i128, self.scale as i128);
        ExcessSolution {
            alpha,
            value: total - cut_value,
            maximal,
            minimal,
            cut_value,
        }
    }
}

/// Solves `max_H W(H) - alpha |H|` with one max-flow.
pub fn max_excess(g: &WeightedGraph, alpha: Rational) -> Result<ExcessSolution> {
    Ok(excess_network(g, alpha)?.solve(alpha))
}
