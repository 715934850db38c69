use std::collections::BTreeSet;

use super::dag::{IdealCut, WeightedDag};
use super::flow::{is_optimal, residual, Flow, ResidualGraph};
use crate::closure::{Enumeration, IdealSpace};
use crate::error::{Error, Result};

/// Strongly connected components of an optimal residual graph, contracted.
///
/// Components are numbered in topological order. An ideal cut of this DAG
/// (source component in, sink component out, no arc entering) pulls back to
/// a maximum-weight ideal cut of the original graph, and every maximum cut
/// arises this way exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedDag {
    component_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    preds: Vec<Vec<usize>>,
    source_component: usize,
    sink_component: usize,
}

impl CondensedDag {
    pub fn component_count(&self) -> usize {
        self.members.len()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Original vertices in component `c`, ascending.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    /// Deduplicated component arcs `(a, b)` with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn predecessors(&self, c: usize) -> &[usize] {
        &self.preds[c]
    }

    pub fn source_component(&self) -> usize {
        self.source_component
    }

    pub fn sink_component(&self) -> usize {
        self.sink_component
    }

    pub(crate) fn ideal_space(&self) -> IdealSpace<'_> {
        IdealSpace::new(&self.preds)
            .require(self.source_component)
            .forbid(self.sink_component)
    }

    /// Whether a component set is an ideal cut of this DAG.
    pub fn is_ideal_cut(&self, components: &[usize]) -> bool {
        components.iter().all(|&c| c < self.component_count())
            && self.ideal_space().is_ideal(components)
    }

    /// Union of the members of `components`.
    pub fn pull_back(&self, components: &[usize]) -> IdealCut {
        let side: BTreeSet<usize> = components
            .iter()
            .flat_map(|&c| self.members[c].iter().copied())
            .collect();
        IdealCut::from_set_unchecked(side)
    }
}

/// Condenses the residual graph of the optimal flow `f`.
pub fn condense(g: &WeightedDag, f: &Flow) -> Result<CondensedDag> {
    if !is_optimal(g, f) {
        return Err(Error::contract(
            "condensation needs an optimal flow (sink must not reach source)",
        ));
    }
    let res = residual(g, f);
    let (component_of, count) = strongly_connected(&res);
    let mut members = vec![Vec::new(); count];
    for (v, &c) in component_of.iter().enumerate() {
        members[c].push(v);
    }
    let edges: BTreeSet<(usize, usize)> = res
        .arcs()
        .iter()
        .map(|a| (component_of[a.from], component_of[a.to]))
        .filter(|(a, b)| a != b)
        .collect();
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let mut preds = vec![Vec::new(); count];
    for &(a, b) in &edges {
        if a >= b {
            return Err(Error::contract(
                "condensation is not topologically numbered",
            ));
        }
        preds[b].push(a);
    }
    Ok(CondensedDag {
        source_component: component_of[g.source()],
        sink_component: component_of[g.sink()],
        component_of,
        members,
        edges,
        preds,
    })
}

/// Tarjan's algorithm without recursion. Returns component ids numbered in
/// topological order of the condensation, and the component count.
fn strongly_connected(res: &ResidualGraph) -> (Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let n = res.vertex_count();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![NONE; n];
    let mut found = 0;
    let mut counter = 0;
    // (vertex, next out-arc position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, pos)) = call.last() {
            let arcs = res.out_arcs(v);
            if pos < arcs.len() {
                let w = res.arcs()[arcs[pos]].to;
                call.last_mut().unwrap().1 += 1;
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = found;
                    if w == v {
                        break;
                    }
                }
                found += 1;
            }
        }
    }
    // Tarjan emits sink components first
    let comp = comp.into_iter().map(|c| found - 1 - c).collect();
    (comp, found)
}

/// Every maximum-weight ideal cut of the graph `d` was built from, via the
/// ideal cuts of `d`, ordered by component count then lexicographically.
pub fn enumerate_max_cuts(d: &CondensedDag, cap: usize) -> Enumeration<IdealCut> {
    d.ideal_space()
        .enumerate(cap)
        .map(|comps| d.pull_back(&comps))
}
