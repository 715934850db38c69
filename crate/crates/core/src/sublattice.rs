//! The sublattice of maximum-weight stable matchings.
//!
//! Condensing the optimal residual graph of the reduction DAG partitions the
//! rotations into meta-rotations. Closed subsets of the resulting poset that
//! contain the source's meta-rotation and exclude the sink's are exactly the
//! maximum-weight stable matchings.

use std::collections::HashSet;

use crate::closure::Enumeration;
use crate::cut::{
    condense, max_weight_ideal_cut, min_flow, validate_dag, CondensedDag, Edge, WeightedDag,
};
use crate::error::{Error, Result};
use crate::matching::{matching_weight, Instance, Matching, WeightFunction};
use crate::reduction::{build_reduction, Reduction, ReductionArtifacts};
use crate::rotation::{build_poset, closed_set_to_matching, ClosedSet, RotationPoset};

#[derive(Debug, Clone)]
pub struct MetaRotationPoset {
    poset: RotationPoset,
    weight: i128,
    structure: Option<MetaStructure>,
}

#[derive(Debug, Clone)]
struct MetaStructure {
    reduction: ReductionArtifacts,
    condensed: CondensedDag,
    // rotation ids per component, ascending
    meta_rotations: Vec<Vec<usize>>,
}

impl MetaRotationPoset {
    pub fn rotation_poset(&self) -> &RotationPoset {
        &self.poset
    }

    /// Whether the instance has a single stable matching, in which case
    /// there is no graph and every operation answers with it.
    pub fn is_unique(&self) -> bool {
        self.structure.is_none()
    }

    /// The maximum matching weight, in the weight function's scaled domain.
    pub fn optimum_weight(&self) -> i128 {
        self.weight
    }

    pub fn reduction(&self) -> Option<&ReductionArtifacts> {
        self.structure.as_ref().map(|s| &s.reduction)
    }

    pub fn condensed(&self) -> Option<&CondensedDag> {
        self.structure.as_ref().map(|s| &s.condensed)
    }

    /// Number of elements, counting the source and sink elements.
    pub fn len(&self) -> usize {
        self.structure
            .as_ref()
            .map_or(0, |s| s.meta_rotations.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rotations making up element `c`.
    pub fn meta_rotation(&self, c: usize) -> &[usize] {
        &self
            .structure
            .as_ref()
            .expect("no elements for a unique matching")
            .meta_rotations[c]
    }

    /// Precedence arcs `(a, b)` between elements, `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        self.structure.as_ref().map_or(&[], |s| s.condensed.edges())
    }

    pub fn s_element(&self) -> Option<usize> {
        self.condensed().map(CondensedDag::source_component)
    }

    pub fn t_element(&self) -> Option<usize> {
        self.condensed().map(CondensedDag::sink_component)
    }
}

pub fn meta_rotation_poset(inst: &Instance, w: &WeightFunction) -> Result<MetaRotationPoset> {
    let poset = build_poset(inst)?;
    match build_reduction(&poset, w)? {
        Reduction::UniqueMatching { weight, .. } => Ok(MetaRotationPoset {
            poset,
            weight,
            structure: None,
        }),
        Reduction::Dag(reduction) => {
            let g = reduction.dag();
            let flow = min_flow(g);
            let condensed = condense(g, &flow)?;
            let meta_rotations = (0..condensed.component_count())
                .map(|c| {
                    condensed
                        .members(c)
                        .iter()
                        .filter_map(|&v| reduction.rotation_of_vertex(v))
                        .collect()
                })
                .collect();
            let weight = flow.value() + reduction.base_weight();
            Ok(MetaRotationPoset {
                poset,
                weight,
                structure: Some(MetaStructure {
                    reduction,
                    condensed,
                    meta_rotations,
                }),
            })
        }
    }
}

/// The matching generated by eliminating every rotation of the chosen
/// elements from the boy-optimal matching.
pub fn closed_subset_to_max_matching(p: &MetaRotationPoset, subset: &[usize]) -> Result<Matching> {
    let Some(s) = &p.structure else {
        if subset.is_empty() {
            return Ok(p.poset.boy_optimal().clone());
        }
        return Err(Error::contract(
            "a unique stable matching has no meta-rotations",
        ));
    };
    if !s.condensed.is_ideal_cut(subset) {
        return Err(Error::contract(format!(
            "element set {subset:?} is not closed or does not separate the poles"
        )));
    }
    let rotations = subset
        .iter()
        .flat_map(|&c| s.meta_rotations[c].iter().copied())
        .collect();
    closed_set_to_matching(&p.poset, &ClosedSet::new(rotations))
}

/// The maximum-weight stable matching every other one is dominated by.
pub fn boy_optimal_max(p: &MetaRotationPoset) -> Matching {
    let subset: Vec<usize> = p.s_element().into_iter().collect();
    closed_subset_to_max_matching(p, &subset).expect("the source element alone is closed")
}

/// The maximum-weight stable matching that is dominated by every other one.
pub fn girl_optimal_max(p: &MetaRotationPoset) -> Matching {
    let subset: Vec<usize> = match p.t_element() {
        Some(t) => (0..p.len()).filter(|&c| c != t).collect(),
        None => Vec::new(),
    };
    closed_subset_to_max_matching(p, &subset).expect("everything but the sink element is closed")
}

/// Every maximum-weight stable matching, in the order of their generating
/// element sets (size, then lexicographic), up to `cap`.
pub fn enumerate_max_matchings(p: &MetaRotationPoset, cap: usize) -> Result<Enumeration<Matching>> {
    let Some(s) = &p.structure else {
        return Ok(Enumeration {
            items: vec![p.poset.boy_optimal().clone()],
            truncated: false,
        });
    };
    let subsets = s.condensed.ideal_space().enumerate(cap);
    let mut seen = HashSet::new();
    let mut items = Vec::with_capacity(subsets.items.len());
    for subset in &subsets.items {
        let m = closed_subset_to_max_matching(p, subset)?;
        if seen.insert(m.partners().to_vec()) {
            items.push(m);
        }
    }
    Ok(Enumeration {
        items,
        truncated: subsets.truncated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiObjectiveSolution {
    pub matching: Matching,
    pub weight1: i128,
    pub weight2: i128,
}

/// Among the matchings of maximum `w1` weight, one of maximum `w2` weight.
///
/// The `w2` reduction DAG is built over the same rotation poset, then every
/// element of the `w1` meta-rotation poset is contracted to one vertex.
/// Ideal cuts of the contracted graph are exactly the `w1` optima.
pub fn solve_bi_objective(
    inst: &Instance,
    w1: &WeightFunction,
    w2: &WeightFunction,
) -> Result<BiObjectiveSolution> {
    let p = meta_rotation_poset(inst, w1)?;
    let Some(s) = &p.structure else {
        let matching = p.poset.boy_optimal().clone();
        let weight2 = matching_weight(&matching, w2)?;
        return Ok(BiObjectiveSolution {
            matching,
            weight1: p.weight,
            weight2,
        });
    };
    let second = match build_reduction(&p.poset, w2)? {
        Reduction::Dag(art) => art,
        Reduction::UniqueMatching { .. } => unreachable!("the poset has rotations"),
    };
    let contracted = contract(second.dag(), &s.condensed)?;
    let (cut, cut_value) = max_weight_ideal_cut(&contracted);
    let subset: Vec<usize> = cut.vertices().collect();
    let matching = closed_subset_to_max_matching(&p, &subset)?;
    let weight1 = matching_weight(&matching, w1)?;
    let weight2 = matching_weight(&matching, w2)?;
    if weight1 != p.weight || weight2 != cut_value + second.base_weight() {
        return Err(Error::contract(format!(
            "bi-objective weights ({weight1}, {weight2}) disagree with the cut solution"
        )));
    }
    Ok(BiObjectiveSolution {
        matching,
        weight1,
        weight2,
    })
}

/// Merges the vertices of each component of `d` in `g`. Edges inside a
/// component vanish; parallel edges between components stay separate.
pub fn contract(g: &WeightedDag, d: &CondensedDag) -> Result<WeightedDag> {
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            from: d.component_of(e.from),
            to: d.component_of(e.to),
            weight: e.weight,
        })
        .filter(|e| e.from != e.to)
        .collect();
    let contracted = WeightedDag::new(
        d.component_count(),
        d.component_of(g.source()),
        d.component_of(g.sink()),
        edges,
    )?;
    validate_dag(&contracted)
        .map_err(|e| Error::contract(format!("contracted graph is invalid: {e}")))?;
    Ok(contracted)
}
