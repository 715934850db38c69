//! From a weighted stable marriage instance to a maximum-weight ideal cut
//! instance on the rotation DAG, and back.
//!
//! Every pair that occurs in some but not all stable matchings gets a path
//! in the DAG whose edges carry its weight. An ideal cut crosses that path
//! exactly when the matching generated by the cut's rotations contains the
//! pair, so cut weight plus the weight of always-present pairs equals the
//! matching weight.

use std::collections::BTreeSet;

use crate::cut::{cut_weight, max_weight_ideal_cut, validate_dag, Edge, IdealCut, WeightedDag};
use crate::error::{Error, Result};
use crate::matching::{matching_weight, Instance, Matching, WeightFunction};
use crate::rotation::{build_poset, closed_set_to_matching, ClosedSet, RotationPoset};

/// Which rotations bound a pair's path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCase {
    /// In the boy-optimal matching only: source to the rotation that breaks it.
    FromSource { breaks: usize },
    /// In the girl-optimal matching only: the rotation that creates it to sink.
    ToSink { creates: usize },
    /// In neither pole: creating rotation to breaking rotation.
    Between { creates: usize, breaks: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPath {
    pub boy: usize,
    pub girl: usize,
    pub case: PathCase,
    /// Edge ids of the DAG, in path order.
    pub edges: Vec<usize>,
}

/// The cut instance built from a rotation poset and one weight function.
///
/// Vertex layout: source `0`, rotation `i` at vertex `i + 1`, sink last.
#[derive(Debug, Clone)]
pub struct ReductionArtifacts {
    dag: WeightedDag,
    paths: Vec<PairPath>,
    base_weight: i128,
    rotation_count: usize,
    scale: i64,
}

impl ReductionArtifacts {
    pub fn dag(&self) -> &WeightedDag {
        &self.dag
    }

    /// Paths of the in-scope pairs, sorted by (boy, girl).
    pub fn paths(&self) -> &[PairPath] {
        &self.paths
    }

    pub fn path_of_pair(&self, boy: usize, girl: usize) -> Option<&PairPath> {
        self.paths
            .binary_search_by_key(&(boy, girl), |p| (p.boy, p.girl))
            .ok()
            .map(|i| &self.paths[i])
    }

    /// Total weight of the pairs present in every stable matching.
    pub fn base_weight(&self) -> i128 {
        self.base_weight
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn vertex_of_rotation(&self, rotation: usize) -> usize {
        rotation + 1
    }

    pub fn rotation_of_vertex(&self, v: usize) -> Option<usize> {
        (1..=self.rotation_count).contains(&v).then(|| v - 1)
    }

    /// Rotations whose vertices lie on the source side.
    pub fn closed_set_of_cut(&self, cut: &IdealCut) -> ClosedSet {
        ClosedSet::new(
            cut.vertices()
                .filter_map(|v| self.rotation_of_vertex(v))
                .collect(),
        )
    }

    /// Source side made of the source and the given rotations' vertices.
    pub fn cut_of_closed_set(&self, c: &ClosedSet) -> Result<IdealCut> {
        let side = std::iter::once(self.dag.source())
            .chain(c.members.iter().map(|&r| self.vertex_of_rotation(r)));
        IdealCut::new(&self.dag, side)
    }

    /// Whether `cut` crosses the path of a pair.
    pub fn cuts_path(&self, cut: &IdealCut, path: &PairPath) -> bool {
        path.edges.iter().any(|&id| cut.crosses(&self.dag.edge(id)))
    }
}

/// Result of building the cut instance.
#[derive(Debug, Clone)]
pub enum Reduction {
    /// The instance has a single stable matching, so there is no cut
    /// problem to build: a DAG with no rotation vertices has no source-sink
    /// path.
    UniqueMatching {
        matching: Matching,
        weight: i128,
    },
    Dag(ReductionArtifacts),
}

pub fn build_reduction(poset: &RotationPoset, w: &WeightFunction) -> Result<Reduction> {
    let m0 = poset.boy_optimal();
    let mz = poset.girl_optimal();
    if w.n() != m0.n() {
        return Err(Error::InvalidArgument(format!(
            "weights have n = {} but the instance has n = {}",
            w.n(),
            m0.n()
        )));
    }
    if poset.is_empty() {
        let weight = matching_weight(m0, w)?;
        return Ok(Reduction::UniqueMatching {
            matching: m0.clone(),
            weight,
        });
    }

    let k = poset.len();
    let (source, sink) = (0, k + 1);
    let vertex = |r: usize| r + 1;
    let mut edges = Vec::new();
    for r in 0..k {
        if poset.predecessors(r).is_empty() {
            edges.push(Edge {
                from: source,
                to: vertex(r),
                weight: 0,
            });
        }
    }
    for &(a, b) in poset.edges() {
        edges.push(Edge {
            from: vertex(a),
            to: vertex(b),
            weight: 0,
        });
    }
    for r in 0..k {
        if poset.successors(r).is_empty() {
            edges.push(Edge {
                from: vertex(r),
                to: sink,
                weight: 0,
            });
        }
    }
    let mut dag = WeightedDag::new(k + 2, source, sink, edges)?;

    let mut base_weight: i128 = 0;
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (b, g) in m0.pairs() {
        if mz.contains(b, g) {
            base_weight += i128::from(w.get(b, g));
        } else {
            pairs.insert((b, g));
        }
    }
    for rho in poset.rotations() {
        for (b, _, to) in rho.moves() {
            pairs.insert((b, to));
        }
    }

    let mut paths = Vec::with_capacity(pairs.len());
    for (b, g) in pairs {
        let case = match (poset.moves_to(b, g), poset.moves_from(b, g)) {
            (None, Some(breaks)) => PathCase::FromSource { breaks },
            (Some(creates), None) => PathCase::ToSink { creates },
            (Some(creates), Some(breaks)) => PathCase::Between { creates, breaks },
            (None, None) => unreachable!("in-scope pair without a rotation"),
        };
        let (from, to) = match case {
            PathCase::FromSource { breaks } => (source, vertex(breaks)),
            PathCase::ToSink { creates } => (vertex(creates), sink),
            PathCase::Between { creates, breaks } => (vertex(creates), vertex(breaks)),
        };
        let edges = dag.shortest_path(from, to).ok_or_else(|| {
            Error::contract(format!(
                "no path for pair ({}, {}) between vertices {} and {}",
                b + 1,
                g + 1,
                from + 1,
                to + 1
            ))
        })?;
        paths.push(PairPath {
            boy: b,
            girl: g,
            case,
            edges,
        });
    }

    let mut weights = vec![0i128; dag.edges().len()];
    for p in &paths {
        for &id in &p.edges {
            weights[id] += i128::from(w.get(p.boy, p.girl));
        }
    }
    let weighted: Vec<Edge> = dag
        .edges()
        .iter()
        .zip(&weights)
        .map(|(e, &weight)| Edge { weight, ..*e })
        .collect();
    dag = WeightedDag::new(k + 2, source, sink, weighted)?;
    validate_dag(&dag).map_err(|e| Error::contract(format!("reduction DAG invalid: {e}")))?;

    Ok(Reduction::Dag(ReductionArtifacts {
        dag,
        paths,
        base_weight,
        rotation_count: k,
        scale: w.scale(),
    }))
}

/// The stable matching generated by the rotations on the cut's source side.
pub fn cut_to_matching(
    art: &ReductionArtifacts,
    poset: &RotationPoset,
    cut: &IdealCut,
) -> Result<Matching> {
    closed_set_to_matching(poset, &art.closed_set_of_cut(cut))
}

/// Cut weight plus the always-present pairs: the weight of the matching
/// the cut generates.
pub fn matching_weight_from_cut(art: &ReductionArtifacts, cut: &IdealCut) -> i128 {
    cut_weight(&art.dag, cut) + art.base_weight
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub matching: Matching,
    /// In the weight function's scaled domain.
    pub weight: i128,
}

/// A maximum-weight stable matching.
pub fn solve_max_weight(inst: &Instance, w: &WeightFunction) -> Result<Solution> {
    let poset = build_poset(inst)?;
    match build_reduction(&poset, w)? {
        Reduction::UniqueMatching { matching, weight } => Ok(Solution { matching, weight }),
        Reduction::Dag(art) => {
            let (cut, _) = max_weight_ideal_cut(art.dag());
            let matching = cut_to_matching(&art, &poset, &cut)?;
            let weight = matching_weight_from_cut(&art, &cut);
            let direct = matching_weight(&matching, w)?;
            if weight != direct {
                return Err(Error::contract(format!(
                    "cut weight {weight} disagrees with matching weight {direct}"
                )));
            }
            Ok(Solution { matching, weight })
        }
    }
}
