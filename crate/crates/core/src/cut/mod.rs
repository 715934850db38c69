//! Maximum-weight ideal cuts in edge-weighted DAGs.

mod condense;
mod dag;
mod flow;

pub use condense::{condense, enumerate_max_cuts, CondensedDag};
pub use dag::{cut_weight, parse_dag, validate_dag, Edge, IdealCut, WeightedDag};
pub use flow::{
    augment, feasible_flow, is_feasible, is_optimal, max_weight_ideal_cut, min_flow,
    min_max_weight_ideal_cut, residual, residual_max_flow, ArcKind, Flow, ResidualArc,
    ResidualGraph,
};

/// Formats a cut as `S: v1 v2 ...` with 1-based vertex ids.
pub fn format_cut(cut: &IdealCut) -> String {
    let ids: Vec<String> = cut.vertices().map(|v| (v + 1).to_string()).collect();
    if ids.is_empty() {
        "S:".to_string()
    } else {
        format!("S: {}", ids.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // s = 0, a = 1, t = 2
    fn two_edge_path() -> WeightedDag {
        WeightedDag::new(
            3,
            0,
            2,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: 5,
                },
                Edge {
                    from: 1,
                    to: 2,
                    weight: -2,
                },
            ],
        )
        .unwrap()
    }

    // s = 0, a = 1, b = 2, t = 3
    fn diamond() -> WeightedDag {
        WeightedDag::new(
            4,
            0,
            3,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: 1,
                },
                Edge {
                    from: 0,
                    to: 2,
                    weight: 4,
                },
                Edge {
                    from: 1,
                    to: 3,
                    weight: 3,
                },
                Edge {
                    from: 2,
                    to: 3,
                    weight: 2,
                },
            ],
        )
        .unwrap()
    }

    fn tie_dag() -> WeightedDag {
        WeightedDag::new(
            3,
            0,
            2,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: 4,
                },
                Edge {
                    from: 1,
                    to: 2,
                    weight: 4,
                },
            ],
        )
        .unwrap()
    }

    fn single(w: i128) -> WeightedDag {
        WeightedDag::new(
            2,
            0,
            1,
            vec![Edge {
                from: 0,
                to: 1,
                weight: w,
            }],
        )
        .unwrap()
    }

    fn cut(g: &WeightedDag, vs: &[usize]) -> IdealCut {
        IdealCut::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn validation() {
        validate_dag(&two_edge_path()).unwrap();
        validate_dag(&diamond()).unwrap();
        let isolated = WeightedDag::new(
            4,
            0,
            3,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: 1,
                },
                Edge {
                    from: 1,
                    to: 3,
                    weight: 1,
                },
            ],
        )
        .unwrap();
        let err = validate_dag(&isolated).unwrap_err();
        assert!(err.to_string().contains("vertex 3"), "{err}");

        let two_cycle = WeightedDag::new(
            4,
            0,
            3,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: 0,
                },
                Edge {
                    from: 1,
                    to: 2,
                    weight: 0,
                },
                Edge {
                    from: 2,
                    to: 1,
                    weight: 0,
                },
                Edge {
                    from: 2,
                    to: 3,
                    weight: 0,
                },
            ],
        )
        .unwrap();
        assert!(validate_dag(&two_cycle)
            .unwrap_err()
            .to_string()
            .contains("cycle"));
        assert!(WeightedDag::new(
            2,
            0,
            1,
            vec![Edge {
                from: 1,
                to: 1,
                weight: 0
            }]
        )
        .is_err());
        assert!(WeightedDag::new(2, 1, 1, vec![]).is_err());
    }

    #[test]
    fn cut_weights() {
        let c = two_edge_path();
        assert_eq!(cut_weight(&c, &cut(&c, &[0])), 5);
        assert_eq!(cut_weight(&c, &cut(&c, &[0, 1])), -2);
        let d = diamond();
        assert_eq!(cut_weight(&d, &cut(&d, &[0, 1])), 7);
        assert!(IdealCut::new(&d, [0, 3]).is_err());
        assert!(IdealCut::new(&d, [1]).is_err());
        assert!(IdealCut::new(&c, [0, 2]).is_err());
    }

    #[test]
    fn feasible_flows() {
        let c = two_edge_path();
        let f = feasible_flow(&c);
        assert_eq!(f.edge_flows(), &[5, 5]);
        assert_eq!(f.value(), 5);

        let neg = WeightedDag::new(
            3,
            0,
            2,
            vec![
                Edge {
                    from: 0,
                    to: 1,
                    weight: -1,
                },
                Edge {
                    from: 1,
                    to: 2,
                    weight: -4,
                },
            ],
        )
        .unwrap();
        let f = feasible_flow(&neg);
        assert_eq!(f.edge_flows(), &[0, 0]);
        assert_eq!(f.value(), 0);

        let d = diamond();
        let f = feasible_flow(&d);
        assert!(is_feasible(&d, &f));
        assert!(f.value() <= 10);
    }

    #[test]
    fn min_flow_values() {
        assert_eq!(min_flow(&two_edge_path()).value(), 5);
        assert_eq!(min_flow(&diamond()).value(), 7);
        for w in [0, 3, 17] {
            assert_eq!(min_flow(&single(w)).value(), w);
        }
        assert_eq!(min_flow(&single(-3)).value(), -3);
    }

    #[test]
    fn residual_arcs() {
        let c = two_edge_path();
        let f = feasible_flow(&c);
        let res = residual(&c, &f);
        assert!(res.backward_arc(0).is_none());
        let back = res.backward_arc(1).unwrap();
        assert_eq!((back.from, back.to, back.capacity), (2, 1, 7));
        assert!(res
            .arcs()
            .iter()
            .filter(|a| a.kind == ArcKind::Forward)
            .all(|a| a.capacity == res.unbounded_capacity()));

        let t = tie_dag();
        let res = residual(&t, &feasible_flow(&t));
        assert!(res.arcs().iter().all(|a| a.kind == ArcKind::Forward));

        let d = diamond();
        let f = min_flow(&d);
        assert!(!residual(&d, &f).reach(d.sink(), true)[d.source()]);
        assert!(is_optimal(&d, &f));
    }

    #[test]
    fn max_cuts() {
        let c = two_edge_path();
        assert_eq!(max_weight_ideal_cut(&c), (cut(&c, &[0]), 5));
        let d = diamond();
        assert_eq!(max_weight_ideal_cut(&d), (cut(&d, &[0, 1]), 7));
        let s = single(-3);
        assert_eq!(max_weight_ideal_cut(&s), (cut(&s, &[0]), -3));

        let t = tie_dag();
        assert_eq!(max_weight_ideal_cut(&t), (cut(&t, &[0, 1]), 4));
        assert_eq!(min_max_weight_ideal_cut(&t), (cut(&t, &[0]), 4));
    }

    #[test]
    fn condensation() {
        let c = two_edge_path();
        let d = condense(&c, &min_flow(&c)).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.members(d.source_component()), &[0]);
        assert_eq!(d.members(d.sink_component()), &[1, 2]);
        let cuts = enumerate_max_cuts(&d, 10);
        assert_eq!(cuts.items, vec![cut(&c, &[0])]);
        assert!(!cuts.truncated);

        let t = tie_dag();
        let d = condense(&t, &min_flow(&t)).unwrap();
        assert_eq!(d.component_count(), 3);
        let cuts = enumerate_max_cuts(&d, 10);
        assert_eq!(cuts.items, vec![cut(&t, &[0]), cut(&t, &[0, 1])]);
        let capped = enumerate_max_cuts(&d, 1);
        assert_eq!(capped.items.len(), 1);
        assert!(capped.truncated);

        // zero flow is feasible here but not optimal
        let g = single(-3);
        assert!(condense(&g, &feasible_flow(&g))
            .unwrap_err()
            .is_contract_violation());
    }

    #[test]
    fn parse_dag_file() {
        let text = "# diamond\n4 4\n1 4\n1 2 1\n1 3 4\n2 4 3\n3 4 2\n";
        let (g, scale) = parse_dag(text).unwrap();
        assert_eq!(scale, 1);
        assert_eq!(g, diamond());
        let (g, scale) = parse_dag("2 1\n1 2\n1 2 -0.5\n").unwrap();
        assert_eq!((g.edge(0).weight, scale), (-5, 10));
        assert!(parse_dag("2 1\n1 2\n").is_err());
        assert!(parse_dag("2 1\n1 3\n1 2 1\n").is_err());
        assert!(parse_dag("2 1\n1 2\n1 1 1\n").is_err());
        assert!(parse_dag("2 1\n1 2\n1 2 1\n2 1 1\n").is_err());
        assert_eq!(format_cut(&cut(&g, &[0])), "S: 1");
    }
}
