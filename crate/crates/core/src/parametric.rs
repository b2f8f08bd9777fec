//! The nested family of maximisers of `W(H) - alpha |H|` over all `alpha >= 0`.
//!
//! `f(alpha) = max_H W(H) - alpha |H|` is convex, piecewise linear and
//! non-increasing. Each linear piece is the line of one vertex set, and the
//! largest maximisers of consecutive pieces form a strictly decreasing chain
//! from `V` down to the empty set. Breakpoints are found by bisecting on line
//! crossings: solve at the crossing of two known pieces; if the optimum there
//! lies on the crossing the two pieces are adjacent, otherwise the solver
//! returned a new piece and both halves are explored.

use crate::error::Result;
use crate::exec::Parallelism;
use crate::flow::max_excess;
use crate::graph::{VertexSet, WeightedGraph};
use crate::Rational;

/// One vertex set of the chain with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMember {
    pub set: VertexSet,
    pub weight: Rational,
}

impl ChainMember {
    fn new(g: &WeightedGraph, set: VertexSet) -> Self {
        let weight = g.induced_weight(&set);
        ChainMember { set, weight }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// `W(S) - alpha |S|`.
    pub fn objective(&self, alpha: Rational) -> Rational {
        self.weight - alpha * Rational::from(self.size() as i128)
    }

    pub fn density(&self) -> Option<Rational> {
        (!self.set.is_empty()).then(|| self.weight / Rational::from(self.size() as i128))
    }
}

/// Breakpoints and chain of the parametric maximiser.
///
/// `chain[0]` is optimal for `alpha <= breakpoints[0]`, `chain[j]` on
/// `[breakpoints[j-1], breakpoints[j]]`, and the last member (the empty set)
/// for `alpha >= breakpoints.last()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedFamily {
    pub breakpoints: Vec<Rational>,
    pub chain: Vec<ChainMember>,
}

impl NestedFamily {
    /// `max_H W(H) - alpha |H|`, evaluated on the chain.
    pub fn value_at(&self, alpha: Rational) -> Rational {
        self.member_at(alpha).objective(alpha)
    }

    /// The chain member optimal at `alpha`; at a breakpoint the larger of
    /// the two adjacent members.
    pub fn member_at(&self, alpha: Rational) -> &ChainMember {
        let j = self.breakpoints.iter().take_while(|&&b| b < alpha).count();
        &self.chain[j]
    }

    /// The nonempty member of largest density (ties to the larger set).
    pub fn densest(&self) -> Option<&ChainMember> {
        let mut best: Option<&ChainMember> = None;
        for m in &self.chain {
            if let Some(d) = m.density() {
                if best.and_then(|b| b.density()).is_none_or(|bd| d > bd) {
                    best = Some(m);
                }
            }
        }
        best
    }
}

/// Computes the full nested family with the default parallelism.
pub fn parametric_family(g: &WeightedGraph) -> Result<NestedFamily> {
    parametric_family_with(g, Parallelism::default())
}

pub fn parametric_family_with(g: &WeightedGraph, par: Parallelism) -> Result<NestedFamily> {
    let top = ChainMember::new(g, VertexSet::all(g.n()));
    let bottom = ChainMember {
        set: VertexSet::empty(),
        weight: Rational::from(0),
    };
    if g.n() == 0 {
        return Ok(NestedFamily {
            breakpoints: Vec::new(),
            chain: vec![bottom],
        });
    }
    let inner = explore(g, &top, &bottom, par)?;
    let mut chain = Vec::with_capacity(inner.len() + 2);
    chain.push(top);
    chain.extend(inner);
    chain.push(bottom);
    let breakpoints = chain.windows(2).map(|w| crossing(&w[0], &w[1])).collect();
    Ok(NestedFamily { breakpoints, chain })
}

/// The alpha where the lines of `a` and `b` meet; `a` must be larger.
fn crossing(a: &ChainMember, b: &ChainMember) -> Rational {
    (a.weight - b.weight) / Rational::from((a.size() - b.size()) as i128)
}

/// Pieces strictly between `left` and `right`, largest first.
fn explore(g: &WeightedGraph, left: &ChainMember, right: &ChainMember, par: Parallelism) -> Result<Vec<ChainMember>> {
    debug_assert!(left.size() > right.size());
    let alpha = crossing(left, right);
    let sol = max_excess(g, alpha)?;
    if sol.value == left.objective(alpha) {
        return Ok(Vec::new());
    }
    let mid = ChainMember {
        weight: sol.value + alpha * Rational::from(sol.maximal.len() as i128),
        set: sol.maximal,
    };
    let (a, b) = par.join(|| explore(g, left, &mid, par), || explore(g, &mid, right, par));
    let mut out = a?;
    out.push(mid);
    out.extend(b?);
    Ok(out)
}
