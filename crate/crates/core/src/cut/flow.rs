//! Minimum source-sink flow where every edge weight is a lower bound on the
//! edge's flow. This is the LP dual of the maximum-weight ideal cut problem:
//! the optimal flow value equals the maximum cut weight, and the vertices
//! that cannot be reached from the sink in the final residual graph form an
//! optimal cut.

use std::collections::{BTreeSet, VecDeque};

use super::dag::{cut_weight, IdealCut, WeightedDag};

/// Per-edge flow values. Flows may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    edge_flow: Vec<i128>,
    value: i128,
}

impl Flow {
    fn from_edges(g: &WeightedDag, edge_flow: Vec<i128>) -> Self {
        let s = g.source();
        let out: i128 = g.out_edges(s).iter().map(|&id| edge_flow[id]).sum();
        let inn: i128 = g.in_edges(s).iter().map(|&id| edge_flow[id]).sum();
        Flow {
            edge_flow,
            value: out - inn,
        }
    }

    /// Flow on edge `id`.
    pub fn on(&self, id: usize) -> i128 {
        self.edge_flow[id]
    }

    pub fn edge_flows(&self) -> &[i128] {
        &self.edge_flow
    }

    /// Net flow leaving the source.
    pub fn value(&self) -> i128 {
        self.value
    }
}

/// Conservation at every vertex but the terminals, and `f >= w` on every edge.
pub fn is_feasible(g: &WeightedDag, f: &Flow) -> bool {
    if f.edge_flow.len() != g.edges().len() {
        return false;
    }
    let bounds = g
        .edges()
        .iter()
        .zip(&f.edge_flow)
        .all(|(e, &x)| x >= e.weight);
    bounds
        && (0..g.vertex_count())
            .filter(|&v| v != g.source() && v != g.sink())
            .all(|v| {
                let inn: i128 = g.in_edges(v).iter().map(|&id| f.edge_flow[id]).sum();
                let out: i128 = g.out_edges(v).iter().map(|&id| f.edge_flow[id]).sum();
                inn == out
            })
}

/// A feasible flow: for each edge with positive weight whose flow is still
/// below its weight, push that weight along a source-sink path through it.
///
/// Paths are breadth-first (fewest edges, smaller vertex ids first). Flow
/// never decreases, so one pass in edge order suffices and the value is at
/// most the sum of positive weights.
pub fn feasible_flow(g: &WeightedDag) -> Flow {
    let from_source = g.bfs_tree(g.source(), true);
    let to_sink = g.bfs_tree(g.sink(), false);
    let mut f = vec![0i128; g.edges().len()];
    for (id, e) in g.edges().iter().enumerate() {
        if e.weight <= 0 || f[id] >= e.weight {
            continue;
        }
        let mut v = e.from;
        while v != g.source() {
            let via = from_source[v].expect("validated DAG: vertex reachable from source");
            f[via] += e.weight;
            v = g.edge(via).from;
        }
        f[id] += e.weight;
        let mut v = e.to;
        while v != g.sink() {
            let via = to_sink[v].expect("validated DAG: vertex reaches sink");
            f[via] += e.weight;
            v = g.edge(via).to;
        }
    }
    Flow::from_edges(g, f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    /// Along an original edge; extra flow there never breaks a lower bound.
    Forward,
    /// Against an original edge; capacity is the slack `f - w`.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualArc {
    pub from: usize,
    pub to: usize,
    pub capacity: i128,
    pub edge: usize,
    pub kind: ArcKind,
}

/// Residual graph of a feasible flow. Arcs are listed edge by edge: the
/// forward arc, then the backward arc when the edge has slack.
#[derive(Debug, Clone)]
pub struct ResidualGraph {
    vertex_count: usize,
    arcs: Vec<ResidualArc>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    unbounded: i128,
}

impl ResidualGraph {
    pub fn arcs(&self) -> &[ResidualArc] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    /// Capacity used for forward arcs. It exceeds the total backward
    /// capacity, which bounds every flow from the sink, so it never binds.
    pub fn unbounded_capacity(&self) -> i128 {
        self.unbounded
    }

    /// Backward arc of edge `edge`, if the edge has slack.
    pub fn backward_arc(&self, edge: usize) -> Option<&ResidualArc> {
        self.arcs
            .iter()
            .find(|a| a.edge == edge && a.kind == ArcKind::Backward)
    }

    /// Vertices reachable from `root` (along arcs when `forward`, against otherwise).
    pub fn reach(&self, root: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let list = if forward {
                &self.out_arcs[u]
            } else {
                &self.in_arcs[u]
            };
            for &a in list {
                let arc = self.arcs[a];
                let v = if forward { arc.to } else { arc.from };
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Residual graph of a feasible flow `f`.
pub fn residual(g: &WeightedDag, f: &Flow) -> ResidualGraph {
    let mut arcs = Vec::with_capacity(2 * g.edges().len());
    for (id, e) in g.edges().iter().enumerate() {
        arcs.push(ResidualArc {
            from: e.from,
            to: e.to,
            capacity: 0,
            edge: id,
            kind: ArcKind::Forward,
        });
        let slack = f.on(id) - e.weight;
        debug_assert!(slack >= 0, "residual of an infeasible flow");
        if slack > 0 {
            arcs.push(ResidualArc {
                from: e.to,
                to: e.from,
                capacity: slack,
                edge: id,
                kind: ArcKind::Backward,
            });
        }
    }
    let unbounded = 1 + arcs.iter().map(|a| a.capacity).sum::<i128>();
    let mut out_arcs = vec![Vec::new(); g.vertex_count()];
    let mut in_arcs = vec![Vec::new(); g.vertex_count()];
    for (i, a) in arcs.iter_mut().enumerate() {
        if a.kind == ArcKind::Forward {
            a.capacity = unbounded;
        }
        out_arcs[a.from].push(i);
        in_arcs[a.to].push(i);
    }
    ResidualGraph {
        vertex_count: g.vertex_count(),
        arcs,
        out_arcs,
        in_arcs,
        unbounded,
    }
}

/// Maximum flow `from -> to` in the residual graph by shortest augmenting
/// paths. Returns the flow on each residual arc.
pub fn residual_max_flow(res: &ResidualGraph, from: usize, to: usize) -> Vec<i128> {
    // arc 2i is residual arc i, arc 2i+1 its reverse
    let m = res.arcs.len();
    let mut cap: Vec<i128> = Vec::with_capacity(2 * m);
    let mut head: Vec<usize> = Vec::with_capacity(2 * m);
    let mut adj = vec![Vec::new(); res.vertex_count];
    for (i, a) in res.arcs.iter().enumerate() {
        cap.push(a.capacity);
        head.push(a.to);
        cap.push(0);
        head.push(a.from);
        adj[a.from].push(2 * i);
        adj[a.to].push(2 * i + 1);
    }
    loop {
        let mut via = vec![usize::MAX; res.vertex_count];
        let mut seen = vec![false; res.vertex_count];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &a in &adj[u] {
                let v = head[a];
                if cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    via[v] = a;
                    queue.push_back(v);
                }
            }
        }
        if !seen[to] {
            break;
        }
        let mut bottleneck = i128::MAX;
        let mut v = to;
        while v != from {
            let a = via[v];
            bottleneck = bottleneck.min(cap[a]);
            v = head[a ^ 1];
        }
        let mut v = to;
        while v != from {
            let a = via[v];
            cap[a] -= bottleneck;
            cap[a ^ 1] += bottleneck;
            v = head[a ^ 1];
        }
    }
    (0..m).map(|i| cap[2 * i + 1]).collect()
}

/// `f ⊕ x`: forward residual flow adds to an edge, backward residual flow
/// subtracts from it. Feasibility is preserved because backward flow never
/// exceeds an edge's slack.
pub fn augment(g: &WeightedDag, f: &Flow, res: &ResidualGraph, x: &[i128]) -> Flow {
    let mut edge_flow = f.edge_flow.clone();
    for (arc, &amount) in res.arcs.iter().zip(x) {
        match arc.kind {
            ArcKind::Forward => edge_flow[arc.edge] += amount,
            ArcKind::Backward => edge_flow[arc.edge] -= amount,
        }
    }
    let out = Flow::from_edges(g, edge_flow);
    assert!(is_feasible(g, &out), "augmentation broke feasibility");
    out
}

/// Optimal flow: a feasible flow, then a maximum sink-to-source flow in its
/// residual graph folded back in.
pub fn min_flow(g: &WeightedDag) -> Flow {
    let f = feasible_flow(g);
    let res = residual(g, &f);
    let x = residual_max_flow(&res, g.sink(), g.source());
    augment(g, &f, &res, &x)
}

/// A feasible flow is optimal iff its residual graph has no sink-to-source path.
pub fn is_optimal(g: &WeightedDag, f: &Flow) -> bool {
    is_feasible(g, f) && !residual(g, f).reach(g.sink(), true)[g.source()]
}

/// The maximum-weight ideal cut with the largest source side: everything
/// not reachable from the sink in the optimal residual graph.
pub fn max_weight_ideal_cut(g: &WeightedDag) -> (IdealCut, i128) {
    let f = min_flow(g);
    let from_sink = residual(g, &f).reach(g.sink(), true);
    let side: BTreeSet<usize> = (0..g.vertex_count()).filter(|&v| !from_sink[v]).collect();
    finish_cut(g, side, &f)
}

/// The maximum-weight ideal cut with the smallest source side: the vertices
/// that reach the source in the optimal residual graph.
pub fn min_max_weight_ideal_cut(g: &WeightedDag) -> (IdealCut, i128) {
    let f = min_flow(g);
    let to_source = residual(g, &f).reach(g.source(), false);
    let side: BTreeSet<usize> = (0..g.vertex_count()).filter(|&v| to_source[v]).collect();
    finish_cut(g, side, &f)
}

fn finish_cut(g: &WeightedDag, side: BTreeSet<usize>, f: &Flow) -> (IdealCut, i128) {
    let cut = IdealCut::from_set_unchecked(side);
    let weight = cut_weight(g, &cut);
    assert_eq!(
        weight,
        f.value(),
        "cut weight must equal the minimum flow value"
    );
    (cut, weight)
}
