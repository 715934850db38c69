use std::collections::{BTreeSet, VecDeque};

use crate::decimal::{common_scale, parse_decimal, Decimal};
use crate::error::{Error, Result};
use crate::matching::content_lines;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Scaled integer weight; may be negative.
    pub weight: i128,
}

/// Edge-weighted directed graph with a designated source and sink.
///
/// [`WeightedDag::new`] only checks structure; [`validate_dag`] checks the
/// acyclicity and s-t reachability that the cut algorithms rely on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDag {
    vertex_count: usize,
    source: usize,
    sink: usize,
    edges: Vec<Edge>,
    // edge ids sorted by (head, id) / (tail, id)
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl WeightedDag {
    pub fn new(vertex_count: usize, source: usize, sink: usize, edges: Vec<Edge>) -> Result<Self> {
        if source >= vertex_count || sink >= vertex_count {
            return Err(Error::Graph(format!(
                "source/sink out of range for {vertex_count} vertices"
            )));
        }
        if source == sink {
            return Err(Error::Graph("source and sink coincide".into()));
        }
        let mut out_edges = vec![Vec::new(); vertex_count];
        let mut in_edges = vec![Vec::new(); vertex_count];
        for (id, e) in edges.iter().enumerate() {
            if e.from >= vertex_count || e.to >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge {} has an endpoint out of range",
                    id + 1
                )));
            }
            if e.from == e.to {
                return Err(Error::Graph(format!("self-loop at vertex {}", e.from + 1)));
            }
            out_edges[e.from].push(id);
            in_edges[e.to].push(id);
        }
        for list in &mut out_edges {
            list.sort_by_key(|&id| (edges[id].to, id));
        }
        for list in &mut in_edges {
            list.sort_by_key(|&id| (edges[id].from, id));
        }
        Ok(WeightedDag {
            vertex_count,
            source,
            sink,
            edges,
            out_edges,
            in_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// Breadth-first tree from `root` along edges (`forward`) or against them.
    /// Returns, per vertex, the edge through which it was first reached.
    pub(crate) fn bfs_tree(&self, root: usize, forward: bool) -> Vec<Option<usize>> {
        let mut via = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let list = if forward {
                &self.out_edges[u]
            } else {
                &self.in_edges[u]
            };
            for &id in list {
                let e = self.edges[id];
                let v = if forward { e.to } else { e.from };
                if !seen[v] {
                    seen[v] = true;
                    via[v] = Some(id);
                    queue.push_back(v);
                }
            }
        }
        via
    }

    /// Shortest edge path `from -> to` (fewest edges, smallest vertex ids
    /// first among ties), or `None` when `to` is unreachable.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        let via = self.bfs_tree(from, true);
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let id = via[cur]?;
            path.push(id);
            cur = self.edges[id].from;
        }
        path.reverse();
        Some(path)
    }

    /// Vertices in a topological order, or a vertex on a cycle.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, usize> {
        let mut indeg: Vec<usize> = self.in_edges.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> =
            (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &id in &self.out_edges[u] {
                let v = self.edges[id].to;
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if order.len() == self.vertex_count {
            Ok(order)
        } else {
            Err((0..self.vertex_count).find(|&v| indeg[v] > 0).unwrap())
        }
    }
}

/// Checks acyclicity and that every vertex lies on a source-sink path.
pub fn validate_dag(g: &WeightedDag) -> Result<()> {
    if let Err(v) = g.topological_order() {
        return Err(Error::Graph(format!("cycle through vertex {}", v + 1)));
    }
    let from_source = g.bfs_tree(g.source, true);
    let to_sink = g.bfs_tree(g.sink, false);
    for v in 0..g.vertex_count {
        if v != g.source && from_source[v].is_none() {
            return Err(Error::Graph(format!(
                "vertex {} is not reachable from the source",
                v + 1
            )));
        }
        if v != g.sink && to_sink[v].is_none() {
            return Err(Error::Graph(format!(
                "vertex {} cannot reach the sink",
                v + 1
            )));
        }
    }
    Ok(())
}

/// Source side `S` of an ideal cut: contains the source, excludes the sink,
/// and no edge enters it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealCut {
    source_side: BTreeSet<usize>,
}

impl IdealCut {
    pub fn new(g: &WeightedDag, source_side: impl IntoIterator<Item = usize>) -> Result<Self> {
        let cut = IdealCut {
            source_side: source_side.into_iter().collect(),
        };
        cut.check(g)?;
        Ok(cut)
    }

    pub(crate) fn from_set_unchecked(source_side: BTreeSet<usize>) -> Self {
        IdealCut { source_side }
    }

    fn check(&self, g: &WeightedDag) -> Result<()> {
        if let Some(&v) = self.source_side.iter().find(|&&v| v >= g.vertex_count) {
            return Err(Error::InvalidArgument(format!(
                "vertex {} out of range",
                v + 1
            )));
        }
        if !self.contains(g.source) || self.contains(g.sink) {
            return Err(Error::InvalidArgument(
                "cut must contain the source and exclude the sink".into(),
            ));
        }
        if let Some(e) = g
            .edges
            .iter()
            .find(|e| !self.contains(e.from) && self.contains(e.to))
        {
            return Err(Error::InvalidArgument(format!(
                "edge {} -> {} enters the source side",
                e.from + 1,
                e.to + 1
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.source_side.contains(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.source_side.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.source_side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source_side.is_empty()
    }

    pub fn crosses(&self, e: &Edge) -> bool {
        self.contains(e.from) && !self.contains(e.to)
    }
}

/// Total weight of edges leaving the source side.
pub fn cut_weight(g: &WeightedDag, cut: &IdealCut) -> i128 {
    g.edges
        .iter()
        .filter(|e| cut.crosses(e))
        .map(|e| e.weight)
        .sum()
}

/// Parses the DAG format: `V E`, then `s t`, then `E` lines `u v w`.
/// Vertex ids are 1-based; weights are decimals sharing one scale.
pub fn parse_dag(text: &str) -> Result<(WeightedDag, i64)> {
    let mut lines = content_lines(text);
    let mut next_line = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count() + 1, format!("missing {what}")))
    };
    let (l1, header) = next_line("`V E` header")?;
    let [vc, ec] = parse_ints::<2>(header, l1)?;
    let (l2, ends) = next_line("`s t` line")?;
    let [s, t] = parse_ints::<2>(ends, l2)?;
    let vertex = |x: usize, line: usize| {
        if (1..=vc).contains(&x) {
            Ok(x - 1)
        } else {
            Err(Error::parse(line, format!("vertex {x} outside 1..{vc}")))
        }
    };
    let (s, t) = (vertex(s, l2)?, vertex(t, l2)?);
    let mut raw: Vec<(usize, usize, usize, Decimal)> = Vec::with_capacity(ec);
    for _ in 0..ec {
        let (ln, line) = next_line("edge line")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(ln, "expected `u v w`"));
        }
        let [u, v] = parse_ints::<2>(&toks[..2].join(" "), ln)?;
        let w = parse_decimal(toks[2]).map_err(|m| Error::parse(ln, m))?;
        raw.push((ln, vertex(u, ln)?, vertex(v, ln)?, w));
    }
    if let Some((ln, _)) = content_lines(text).nth(ec + 2) {
        return Err(Error::parse(ln, "unexpected trailing content"));
    }
    let decimals: Vec<Decimal> = raw.iter().map(|r| r.3).collect();
    let (scaled, scale) = common_scale(&decimals)
        .ok_or_else(|| Error::Overflow("edge weights exceed the scaled range".into()))?;
    let mut edges = Vec::with_capacity(ec);
    for (&(ln, from, to, _), weight) in raw.iter().zip(scaled) {
        if from == to {
            return Err(Error::parse(
                ln,
                format!("self-loop at vertex {}", from + 1),
            ));
        }
        edges.push(Edge { from, to, weight });
    }
    Ok((WeightedDag::new(vc, s, t, edges)?, scale))
}

fn parse_ints<const K: usize>(line: &str, line_no: usize) -> Result<[usize; K]> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != K {
        return Err(Error::parse(line_no, format!("expected {K} integers")));
    }
    let mut out = [0; K];
    for (slot, tok) in out.iter_mut().zip(toks) {
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a non-negative integer")))?;
    }
    Ok(out)
}
