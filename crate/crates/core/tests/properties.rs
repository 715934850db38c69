//! Property tests against the brute-force oracles.

mod common;

use std::collections::BTreeSet;

use maxstable_core::cut::{
    condense, cut_weight, enumerate_max_cuts, feasible_flow, is_feasible, is_optimal,
    max_weight_ideal_cut, min_flow, min_max_weight_ideal_cut, validate_dag,
};
use maxstable_core::generate::{
    irving_leather, random_decimal_weights, random_instance, random_weights, relabel,
};
use maxstable_core::matching::{
    blocking_pairs, dominates, format_instance, format_weights, gale_shapley, join,
    matching_weight, meet, parse_instance, parse_weights, Side,
};
use maxstable_core::oracle::{
    all_max_weight_cuts, all_max_weight_matchings, all_stable_matchings, brute_bi_objective,
    brute_max_weight_matching,
};
use maxstable_core::reduction::{build_reduction, solve_max_weight, Reduction};
use maxstable_core::rotation::{
    all_closed_sets, build_poset, closed_set_to_matching, eliminate, exposed_rotations,
};
use maxstable_core::sublattice::{
    boy_optimal_max, contract, enumerate_max_matchings, girl_optimal_max, meta_rotation_poset,
    solve_bi_objective,
};
use proptest::prelude::*;

fn instance(n: usize, seed: u64) -> maxstable_core::matching::Instance {
    random_instance(n, &mut common::rng(seed))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn meet_and_join_stay_stable(n in 2usize..=6, seed in any::<u64>()) {
        let inst = instance(n, seed);
        let all = all_stable_matchings(&inst).unwrap();
        for a in &all {
            for b in &all {
                prop_assert!(blocking_pairs(&inst, &meet(a, b, &inst)).is_empty());
                prop_assert!(blocking_pairs(&inst, &join(a, b, &inst)).is_empty());
            }
        }
    }

    #[test]
    fn gale_shapley_gives_the_poles(n in 1usize..=7, seed in any::<u64>()) {
        let inst = instance(n, seed);
        let m0 = gale_shapley(&inst, Side::Boys);
        let mz = gale_shapley(&inst, Side::Girls);
        for m in all_stable_matchings(&inst).unwrap() {
            prop_assert!(dominates(&m0, &m, &inst));
            prop_assert!(dominates(&m, &mz, &inst));
        }
    }

    #[test]
    fn lattice_is_distributive(k in 2u32..=2, seed in any::<u64>()) {
        let inst = relabel(&irving_leather(k), &mut common::rng(seed));
        let all = all_stable_matchings(&inst).unwrap();
        for x in &all {
            for y in &all {
                for z in &all {
                    let lhs = join(x, &meet(y, z, &inst), &inst);
                    let rhs = meet(&join(x, y, &inst), &join(x, z, &inst), &inst);
                    prop_assert_eq!(lhs, rhs);
                    let lhs = meet(x, &join(y, z, &inst), &inst);
                    let rhs = join(&meet(x, y, &inst), &meet(x, z, &inst), &inst);
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn closed_sets_biject_with_stable_matchings(n in 1usize..=7, seed in any::<u64>()) {
        let inst = instance(n, seed);
        let poset = build_poset(&inst).unwrap();
        prop_assert!(poset.len() <= n * (n - 1) / 2 + n);
        let generated: Vec<_> = all_closed_sets(&poset, usize::MAX - 1)
            .items
            .iter()
            .map(|c| closed_set_to_matching(&poset, c).unwrap())
            .collect();
        let unique: BTreeSet<_> = generated.iter().cloned().collect();
        prop_assert_eq!(unique.len(), generated.len());
        let oracle: BTreeSet<_> = all_stable_matchings(&inst).unwrap().into_iter().collect();
        prop_assert_eq!(unique, oracle);
    }

    #[test]
    fn exposed_rotations_lead_to_stable_matchings(n in 2usize..=7, seed in any::<u64>()) {
        let inst = instance(n, seed);
        for m in all_stable_matchings(&inst).unwrap() {
            for rho in exposed_rotations(&inst, &m) {
                let next = eliminate(&inst, &m, &rho).unwrap();
                prop_assert!(blocking_pairs(&inst, &next).is_empty());
                prop_assert!(dominates(&m, &next, &inst) && m != next);
            }
        }
    }

    #[test]
    fn solver_matches_oracle(n in 1usize..=7, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = random_instance(n, &mut rng);
        let w = random_weights(n, -9..=9, &mut rng);
        let sol = solve_max_weight(&inst, &w).unwrap();
        let (_, best) = brute_max_weight_matching(&inst, &w).unwrap();
        prop_assert_eq!(sol.weight, best);
        prop_assert!(blocking_pairs(&inst, &sol.matching).is_empty());
        prop_assert_eq!(matching_weight(&sol.matching, &w).unwrap(), best);
    }

    #[test]
    fn decimal_weights_stay_exact(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = random_instance(n, &mut rng);
        let w = random_decimal_weights(n, 50, 3, &mut rng);
        let reparsed = parse_weights(&format_weights(&w), n).unwrap();
        let sol = solve_max_weight(&inst, &reparsed).unwrap();
        let (_, best) = brute_max_weight_matching(&inst, &w).unwrap();
        // printing drops trailing zeros, so the scales may differ
        prop_assert_eq!(sol.weight * i128::from(w.scale()), best * i128::from(reparsed.scale()));
    }

    #[test]
    fn weight_transport_through_cuts(n in 2usize..=7, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = random_instance(n, &mut rng);
        let w = random_weights(n, -9..=9, &mut rng);
        let poset = build_poset(&inst).unwrap();
        if let Reduction::Dag(art) = build_reduction(&poset, &w).unwrap() {
            for c in all_closed_sets(&poset, 4096).items {
                let m = closed_set_to_matching(&poset, &c).unwrap();
                let cut = art.cut_of_closed_set(&c).unwrap();
                prop_assert_eq!(
                    cut_weight(art.dag(), &cut) + art.base_weight(),
                    matching_weight(&m, &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn min_flow_is_dual_to_max_cut(v in 2usize..=12, seed in any::<u64>()) {
        let g = maxstable_core::generate::random_dag(v, 0.3, -9..=9, &mut common::rng(seed));
        validate_dag(&g).unwrap();
        prop_assert!(is_feasible(&g, &feasible_flow(&g)));
        let f = min_flow(&g);
        prop_assert!(is_optimal(&g, &f));
        let (cuts, best) = all_max_weight_cuts(&g).unwrap();
        prop_assert_eq!(f.value(), best);
        let (largest, w1) = max_weight_ideal_cut(&g);
        let (smallest, w2) = min_max_weight_ideal_cut(&g);
        prop_assert_eq!((w1, w2), (best, best));
        for c in &cuts {
            prop_assert!(c.vertices().all(|x| largest.contains(x)));
            prop_assert!(smallest.vertices().all(|x| c.contains(x)));
        }
        let listed: BTreeSet<_> = enumerate_max_cuts(&condense(&g, &f).unwrap(), 1 << 16).items.into_iter().collect();
        prop_assert_eq!(listed, cuts.into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn sublattice_is_complete(seed in any::<u64>(), sparse in any::<bool>()) {
        let mut rng = common::rng(seed);
        let inst = relabel(&irving_leather(2), &mut rng);
        let w = random_weights(4, if sparse { 0..=1 } else { -9..=9 }, &mut rng);
        let p = meta_rotation_poset(&inst, &w).unwrap();
        let got = enumerate_max_matchings(&p, 1000).unwrap().items;
        let (oracle, best) = all_max_weight_matchings(&inst, &w).unwrap();
        prop_assert_eq!(p.optimum_weight(), best);
        prop_assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), oracle.iter().cloned().collect());
        let (top, bottom) = (boy_optimal_max(&p), girl_optimal_max(&p));
        for m in &oracle {
            prop_assert!(dominates(&top, m, &inst) && dominates(m, &bottom, &inst));
        }
    }

    #[test]
    fn bi_objective_is_lexicographic(n in 2usize..=7, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = random_instance(n, &mut rng);
        let w1 = random_weights(n, 0..=1, &mut rng);
        let w2 = random_weights(n, -9..=9, &mut rng);
        let sol = solve_bi_objective(&inst, &w1, &w2).unwrap();
        let (_, b1, b2) = brute_bi_objective(&inst, &w1, &w2).unwrap();
        prop_assert_eq!((sol.weight1, sol.weight2), (b1, b2));
        let p = meta_rotation_poset(&inst, &w1).unwrap();
        if let (Some(d), Reduction::Dag(art)) = (p.condensed(), build_reduction(p.rotation_poset(), &w2).unwrap()) {
            validate_dag(&contract(art.dag(), d).unwrap()).unwrap();
        }
    }

    #[test]
    fn instance_text_round_trips(n in 1usize..=9, seed in any::<u64>()) {
        let inst = instance(n, seed);
        prop_assert_eq!(parse_instance(&format_instance(&inst)).unwrap(), inst);
    }
}
