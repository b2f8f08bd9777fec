//! Dense subgraph discovery under size constraints.
//!
//! * [`peeling`]: greedy minimum-degree peeling, w-cores, the at-least-k
//!   3-approximation and the densest-subgraph 2-approximation.
//! * [`flow`] and [`parametric`]: max-flow, the cut network for
//!   `max_H W(H) - alpha |H|`, and the nested family of its maximisers.
//! * [`solvers`] and [`reduction`]: exact densest subgraph, the at-least-k
//!   2-approximation, and densest-k through an at-most-k oracle.
//! * [`bruteforce`] and [`corpus`]: exhaustive ground truth and test graphs.
//!
//! All densities are exact [`Rational`]s.

pub mod bruteforce;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod flow;
pub mod graph;
pub mod parametric;
pub mod peeling;
pub mod reduction;
pub mod result;
pub mod solvers;

pub type Rational = num_rational::Ratio<i128>;

pub use bruteforce::{brute_force, brute_force_with, size_profile, ExactAnswer, Problem, SizeProfile};
pub use error::{Error, Result};
pub use exec::Parallelism;
pub use flow::{excess_network, max_excess, max_flow_min_cut, FlowNetwork};
pub use graph::{parse_graph, DensityReport, VertexSet, WeightedGraph};
pub use parametric::{parametric_family, NestedFamily};
pub use peeling::{chalk, charikar_densest, peel, w_core, CoreResult, PeelingTrace};
pub use reduction::{dks_via_damks, DamksOracleSpec, ReductionTrace};
pub use result::{Guarantee, Method, SubgraphResult};
pub use solvers::{
    damks_bruteforce_oracle, damks_peel_heuristic, dalks_2approx, exact_densest, greedy_shrink, pad_to_size,
};
