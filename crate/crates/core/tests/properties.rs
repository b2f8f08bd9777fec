//! Invariants checked on random small graphs against the naive oracle.

mod common;

use common::*;
use densub::bruteforce::{size_profile, Problem};
use densub::peeling::{peel_with, PeelQueue};
use densub::*;
use proptest::prelude::*;

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in any_graph(9)) {
        let text = g.to_edge_list();
        prop_assert_eq!(parse_graph(&text, false).unwrap(), g);
    }

    #[test]
    fn graph_invariants(g in any_graph(9), mask in any::<u64>(), extra in any::<u64>()) {
        let sum: i64 = (0..g.n()).map(|v| g.weighted_degree_scaled(v)).sum();
        prop_assert_eq!(sum, 2 * g.total_weight_scaled());
        let full = (1u64 << g.n()) - 1;
        let small = mask & full;
        let big = (mask | extra) & full;
        prop_assert!(naive_weight(&g, small) <= naive_weight(&g, big));
        let s = mask_to_set(small);
        prop_assert_eq!(g.induced_weight(&s), naive_weight(&g, small));
        if !s.is_empty() {
            let d = g.density(&s).unwrap().density;
            prop_assert!(d >= r(0, 1));
            prop_assert!(d <= Rational::from((s.len() - 1) as i128) / 2 * g.max_edge_weight());
        }
        prop_assert_eq!(g.overall_density().unwrap(), g.total_weight() / Rational::from(g.n() as i128));
    }

    #[test]
    fn peel_trace_invariants(g in any_graph(9)) {
        let t = peel(&g);
        let mut order = t.order().to_vec();
        order.sort_unstable();
        prop_assert_eq!(order, (0..g.n()).collect::<Vec<_>>());
        prop_assert_eq!(t.removal_degrees_scaled().iter().sum::<i64>(), g.total_weight_scaled());
        prop_assert_eq!(t.suffix_weight(g.n()), g.total_weight());
        for i in 1..=g.n() {
            prop_assert_eq!(t.suffix_weight(i - 1), t.suffix_weight(i) - t.removal_degree(i));
            prop_assert_eq!(g.density(&t.suffix(i)).unwrap().density, t.suffix_density(i));
            // the removed vertex had minimum degree in H_i
            let members = t.suffix_slice(i);
            let mask = members.iter().fold(0u64, |m, &v| m | 1 << v);
            prop_assert!(min_degree_at_least(&g, mask, t.removal_degree(i)));
        }
        prop_assert_eq!(&peel(&g), &t);
    }

    #[test]
    fn bucket_and_heap_peels_agree(g in graph_strategy(12, false)) {
        prop_assert_eq!(peel_with(&g, PeelQueue::Buckets), peel_with(&g, PeelQueue::Heap));
    }

    #[test]
    fn cores_are_maximal_and_nested(g in any_graph(8), a in 0i128..40, b in 0i128..40) {
        let (lo, hi) = (r(a.min(b), 4), r(a.max(b), 4));
        let c_lo = w_core(&g, lo).core;
        let c_hi = w_core(&g, hi).core;
        prop_assert!(c_hi.is_subset(&c_lo));
        // unique maximal set with min degree >= w: contains every such set
        let core_mask = c_hi.iter().fold(0u64, |m, v| m | 1 << v);
        prop_assert!(min_degree_at_least(&g, core_mask, hi));
        for m in 1u64..1 << g.n() {
            if min_degree_at_least(&g, m, hi) {
                prop_assert_eq!(m & !core_mask, 0);
            }
        }
    }

    #[test]
    fn large_core_weight(g in any_graph(9), step in 1i128..=20) {
        prop_assume!(g.total_weight_scaled() > 0);
        let d = g.overall_density().unwrap();
        let alpha = r(step, 20);
        let core = w_core(&g, alpha * d).core;
        prop_assert!(g.induced_weight(&core) > (r(1, 1) - alpha) * g.total_weight());
        prop_assert!(!w_core(&g, d).core.is_empty());
    }

    #[test]
    fn peel_ratios(g in any_graph(7)) {
        let dmax = naive_dmax(&g);
        prop_assert!(charikar_densest(&g).unwrap().density * 2 >= dmax);
        for k in 1..=g.n() {
            let res = chalk(&g, k).unwrap();
            prop_assert!(res.size() >= k);
            prop_assert!(res.density * 3 >= naive_dal(&g, k));
        }
    }

    #[test]
    fn excess_network_matches_enumeration(g in any_graph(7), num in 0i128..60, den in 1i128..8) {
        let alpha = r(num, den * 4);
        let sol = max_excess(&g, alpha).unwrap();
        let oracle = naive_max_excess(&g, alpha);
        prop_assert_eq!(sol.value, oracle);
        prop_assert_eq!(g.induced_weight(&sol.maximal) - alpha * Rational::from(sol.maximal.len() as i128), oracle);
        prop_assert_eq!(g.induced_weight(&sol.minimal) - alpha * Rational::from(sol.minimal.len() as i128), oracle);
        prop_assert!(sol.minimal.is_subset(&sol.maximal));
        prop_assert_eq!(sol.cut_value, g.total_weight() - oracle);
    }

    #[test]
    fn family_invariants(g in any_graph(7)) {
        let fam = parametric_family(&g).unwrap();
        prop_assert!(fam.breakpoints.len() <= g.n());
        prop_assert_eq!(fam.chain.len(), fam.breakpoints.len() + 1);
        prop_assert!(fam.breakpoints.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(fam.chain.windows(2).all(|w| w[1].set.is_subset(&w[0].set) && w[1].size() < w[0].size()));
        prop_assert!(fam.chain.last().unwrap().set.is_empty());
        let dmax = naive_dmax(&g);
        prop_assert_eq!(fam.densest().unwrap().density().unwrap(), dmax);
        // strictly inside each interval the recorded member is optimal
        let mut probes = vec![r(0, 1)];
        let mut edges = vec![r(0, 1)];
        edges.extend(fam.breakpoints.iter().copied());
        edges.push(dmax + 1);
        for w in edges.windows(2) {
            probes.push((w[0] + w[1]) / 2);
        }
        for alpha in probes {
            let member = fam.member_at(alpha);
            prop_assert_eq!(member.objective(alpha), naive_max_excess(&g, alpha));
        }
    }

    #[test]
    fn flow_solvers_match_oracle(g in any_graph(7)) {
        prop_assert_eq!(exact_densest(&g).unwrap().density, naive_dmax(&g));
        for k in 1..=g.n() {
            let res = dalks_2approx(&g, k).unwrap();
            prop_assert!(res.size() >= k);
            prop_assert!(res.is_consistent_with(&g));
            prop_assert!(res.density * 2 >= naive_dal(&g, k));
        }
    }

    #[test]
    fn shrink_bound(g in any_graph(10), mask in any::<u64>(), pick in any::<usize>()) {
        let u = mask_to_set(mask & ((1u64 << g.n()) - 1));
        prop_assume!(u.len() >= 2);
        let k = 2 + pick % (u.len() - 1);
        let s = greedy_shrink(&g, &u, k).unwrap();
        prop_assert_eq!(s.len(), k);
        prop_assert!(s.is_subset(&u));
        let du = g.density(&u).unwrap().density;
        let bound = du * Rational::from(k as i128) / Rational::from(2 * u.len() as i128);
        prop_assert!(g.density(&s).unwrap().density >= bound);
    }

    #[test]
    fn reduction_with_exact_oracle(g in any_graph(7)) {
        let oracle = DamksOracleSpec::exact(20);
        for k in 1..=g.n() {
            let (res, trace) = dks_via_damks(&g, k, &oracle).unwrap();
            prop_assert_eq!(res.size(), k);
            prop_assert!(res.density * 8 >= naive_dk(&g, k));
            let total: Rational = trace.rounds.iter().map(|x| x.weight).sum();
            if k > 1 {
                prop_assert_eq!(total, g.total_weight());
            }
            prop_assert!(trace.rounds.iter().all(|x| x.size <= k));
        }
    }

    #[test]
    fn profile_consistency(g in any_graph(8)) {
        let p = size_profile(&g, 20, Parallelism::default()).unwrap();
        let n = g.n();
        let dks: Vec<_> = (1..=n).map(|k| p.dk(k)).collect();
        prop_assert_eq!(p.dmax(), *dks.iter().max().unwrap());
        prop_assert_eq!(p.dal(1), p.dmax());
        for k in 1..=n {
            prop_assert_eq!(p.dk(k), naive_dk(&g, k));
            prop_assert_eq!(p.dal(k), *dks[k - 1..].iter().max().unwrap());
            prop_assert_eq!(p.dam(k), *dks[..k].iter().max().unwrap());
            if k > 1 {
                prop_assert!(p.dal(k) <= p.dal(k - 1));
                prop_assert!(p.dam(k) >= p.dam(k - 1));
            }
            for problem in [Problem::Dalks(k), Problem::Damks(k), Problem::Dks(k)] {
                let a = brute_force(&g, problem).unwrap();
                prop_assert_eq!(g.density(&a.witness).unwrap().density, a.optimum);
            }
        }
    }
}

#[test]
fn large_core_bound_cannot_be_strict_at_alpha_zero() {
    // every vertex has degree >= 0, so the 0-core is the whole graph and
    // its weight equals W rather than exceeding it
    let g = parse("0 1\n1 2");
    let core = w_core(&g, r(0, 1)).core;
    assert_eq!(core, VertexSet::all(3));
    assert_eq!(g.induced_weight(&core), g.total_weight());
}

/// Independent clique test: every pair inside `mask` is an edge.
fn is_clique(g: &WeightedGraph, mask: u64) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[test]
fn clique_anchor_on_all_five_vertex_graphs() {
    for g in densub::corpus::labeled_graphs(5).unwrap() {
        let p = size_profile(&g, 20, Parallelism::default()).unwrap();
        for k in 1..=5 {
            let has_clique = (1u64..32).any(|m| m.count_ones() as usize == k && is_clique(&g, m));
            let threshold = Rational::new(k as i128 - 1, 2);
            assert_eq!(p.dam(k) >= threshold, has_clique, "k = {k}, graph {:?}", g.to_edge_list());
        }
    }
}
