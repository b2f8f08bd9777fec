//! Worked examples whose expected values come from exhaustive enumeration.
//! Each test first checks the frozen value against the naive subset oracle
//! in `common`, then checks the implementation against the frozen value.

mod common;

use common::*;
use densub::bruteforce::Problem;
use densub::*;

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

#[test]
fn triangle_pendant_two_core_is_the_triangle() {
    let g = triangle_pendant();
    // the largest subset with min degree >= 2, by enumeration
    let maximal = (1u64..16)
        .filter(|&m| min_degree_at_least(&g, m, r(2, 1)))
        .max_by_key(|m| m.count_ones())
        .unwrap();
    assert_eq!(maximal, 0b0111);
    assert_eq!(w_core(&g, r(2, 1)).core, mask_to_set(maximal));
}

#[test]
fn chalk_on_triangle_pendant_is_optimal() {
    let g = triangle_pendant();
    assert_eq!(naive_dal(&g, 4), r(1, 1));
    assert_eq!(naive_dal(&g, 3), r(1, 1));
    assert_eq!(chalk(&g, 4).unwrap().density, r(1, 1));
    assert_eq!(chalk(&g, 3).unwrap().density, r(1, 1));
}

#[test]
fn charikar_on_clique_pendant() {
    let g = clique_pendant();
    assert_eq!(naive_dmax(&g), r(3, 2));
    assert!(charikar_densest(&g).unwrap().density >= r(3, 4));
}

#[test]
fn excess_values() {
    let p3 = path3();
    assert_eq!(naive_max_excess(&p3, r(1, 1)), r(0, 1));
    assert_eq!(max_excess(&p3, r(1, 1)).unwrap().value, r(0, 1));
    let kp = clique_pendant();
    assert_eq!(naive_max_excess(&kp, r(6, 5)), r(6, 5));
    let sol = max_excess(&kp, r(6, 5)).unwrap();
    assert_eq!(sol.value, r(6, 5));
    assert_eq!(sol.maximal.as_slice(), &[0, 1, 2, 3]);
}

#[test]
fn parametric_breakpoints_match_enumeration() {
    for (g, expected) in [(path3(), vec![r(2, 3)]), (clique_pendant(), vec![r(1, 1), r(3, 2)])] {
        let fam = parametric_family(&g).unwrap();
        assert_eq!(fam.breakpoints, expected);
        // the envelope agrees with enumeration on a grid that straddles
        // every breakpoint
        for j in 0..=40 {
            let alpha = r(j, 16);
            assert_eq!(fam.value_at(alpha), naive_max_excess(&g, alpha), "alpha {alpha}");
        }
    }
}

#[test]
fn exact_densest_values() {
    for (g, expected) in [(clique_pendant(), r(3, 2)), (path3(), r(2, 3))] {
        assert_eq!(naive_dmax(&g), expected);
        assert_eq!(exact_densest(&g).unwrap().density, expected);
    }
}

#[test]
fn dalks_values() {
    let kp = clique_pendant();
    assert_eq!(naive_dal(&kp, 4), r(3, 2));
    assert_eq!(dalks_2approx(&kp, 4).unwrap().density, r(3, 2));
    assert_eq!(naive_dal(&path3(), 2), r(2, 3));
    assert_eq!(dalks_2approx(&path3(), 2).unwrap().density, r(2, 3));
}

#[test]
fn damks_and_dks_values() {
    let kp = clique_pendant();
    assert_eq!(naive_best(&kp, |s| s <= 4), Some(r(3, 2)));
    let w = damks_bruteforce_oracle(&kp, 4, 20).unwrap();
    assert_eq!(kp.density(&w).unwrap().density, r(3, 2));

    assert_eq!(naive_dk(&path3(), 2), r(1, 2));
    assert_eq!(brute_force(&path3(), Problem::Dks(2)).unwrap().optimum, r(1, 2));

    let tp = triangle_pendant();
    assert_eq!(naive_dk(&tp, 3), r(1, 1));
    let (res, trace) = dks_via_damks(&tp, 3, &DamksOracleSpec::exact(20)).unwrap();
    assert_eq!(res.density, r(1, 1));
    assert_eq!(trace.rounds[0].subgraph.as_slice(), &[0, 1, 2]);
}

#[test]
fn greedy_shrink_pair_of_triangle() {
    let k3 = parse("0 1\n1 2\n0 2");
    let pair = greedy_shrink(&k3, &VertexSet::all(3), 2).unwrap();
    let d = k3.density(&pair).unwrap().density;
    assert_eq!(d, r(1, 2));
    assert!(d >= r(1, 1) * r(2, 6));
}

#[test]
fn star_heuristic_suffixes() {
    let star = parse("0 1\n0 2\n0 3");
    let t = peel(&star);
    for i in 1..=4 {
        let s = t.suffix(i);
        let mask = s.iter().fold(0u64, |m, v| m | 1 << v);
        assert_eq!(t.suffix_density(i), naive_weight(&star, mask) / Rational::from(i as i128));
    }
    let pick = damks_peel_heuristic(&star, 2).unwrap();
    assert!(pick.contains(0));
    assert_eq!(star.density(&pick).unwrap().density, r(1, 2));
}
