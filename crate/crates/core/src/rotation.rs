//! Rotations, the rotation poset, and closed subsets of it.
//!
//! A rotation exposed in a stable matching `M` is a cycle
//! `(b_0, g_0), ..., (b_{r-1}, g_{r-1})` of matched pairs where `g_{i+1}` is
//! the first girl below `g_i` on `b_i`'s list who prefers `b_i` to her
//! partner. Eliminating it gives every `b_i` the girl `g_{i+1}`.

use std::collections::{BTreeSet, HashMap};

use crate::closure::{Enumeration, IdealSpace};
use crate::error::{Error, Result};
use crate::matching::{gale_shapley, Instance, Matching, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub id: usize,
    /// `(boy, girl)` pairs as matched before elimination; at least two.
    pub pairs: Vec<(usize, usize)>,
}

impl Rotation {
    /// `(boy, old girl, new girl)` for every boy the rotation moves.
    pub fn moves(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let r = self.pairs.len();
        (0..r).map(move |i| {
            let (b, g) = self.pairs[i];
            (b, g, self.pairs[(i + 1) % r].1)
        })
    }

    fn apply_unchecked(&self, partners: &mut [usize]) {
        for (b, _, to) in self.moves() {
            partners[b] = to;
        }
    }
}

/// For every boy, the girl he would move to on eliminating an exposed
/// rotation: the first girl after his partner who prefers him to hers.
fn successors(inst: &Instance, m: &Matching) -> Vec<Option<usize>> {
    let girl_partner = m.partner_of_girl();
    (0..inst.n())
        .map(|b| {
            let start = inst.boy_rank(b, m.partner_of_boy(b)) + 1;
            inst.boy_prefs(b)[start..]
                .iter()
                .copied()
                .find(|&g| inst.girl_prefers(g, b, girl_partner[g]))
        })
        .collect()
}

/// Cycles of the partial map `b -> next(b)`, each rotated to start at its
/// smallest boy, listed by that boy.
fn cycles(next: &[Option<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = next.len();
    let mut stamp = vec![UNSEEN; n];
    let mut out = Vec::new();
    for start in 0..n {
        let mut cur = start;
        while stamp[cur] == UNSEEN {
            stamp[cur] = start;
            match next[cur] {
                Some(nx) => cur = nx,
                None => break,
            }
        }
        if stamp[cur] == start && next[cur].is_some() {
            // closed a new cycle during this walk
            let mut cycle = vec![cur];
            let mut v = next[cur].unwrap();
            while v != cur {
                cycle.push(v);
                v = next[v].unwrap();
            }
            let min_pos = cycle.iter().enumerate().min_by_key(|(_, &b)| b).unwrap().0;
            cycle.rotate_left(min_pos);
            out.push(cycle);
        }
    }
    out.sort();
    out
}

/// Rotations exposed in the stable matching `m`; empty iff `m` is girl-optimal.
/// Ids number the returned list.
pub fn exposed_rotations(inst: &Instance, m: &Matching) -> Vec<Rotation> {
    let succ = successors(inst, m);
    let girl_partner = m.partner_of_girl();
    let next: Vec<Option<usize>> = succ.iter().map(|s| s.map(|g| girl_partner[g])).collect();
    cycles(&next)
        .into_iter()
        .enumerate()
        .map(|(id, boys)| Rotation {
            id,
            pairs: boys.iter().map(|&b| (b, m.partner_of_boy(b))).collect(),
        })
        .collect()
}

/// Eliminates `rho` from `m`. Fails unless `rho` is exposed in `m`.
pub fn eliminate(inst: &Instance, m: &Matching, rho: &Rotation) -> Result<Matching> {
    let exposed = exposed_rotations(inst, m)
        .into_iter()
        .any(|e| e.pairs == rho.pairs);
    if !exposed {
        return Err(Error::contract(format!(
            "rotation {} is not exposed in the given matching",
            rho.id
        )));
    }
    let mut partners = m.partners().to_vec();
    rho.apply_unchecked(&mut partners);
    Ok(Matching::from_vec_unchecked(partners))
}

/// Walks one maximal elimination chain from the boy-optimal to the
/// girl-optimal matching. Every rotation occurs exactly once on any such
/// chain, so this finds them all; discovery order is a topological order of
/// the precedence relation.
struct ChainWalk<'a> {
    inst: &'a Instance,
    partner: Vec<usize>,
    girl_partner: Vec<usize>,
    // position in the boy's list at which the successor search resumes
    cursor: Vec<usize>,
}

impl<'a> ChainWalk<'a> {
    fn new(inst: &'a Instance, m0: &Matching) -> Self {
        let partner = m0.partners().to_vec();
        let cursor = (0..inst.n())
            .map(|b| inst.boy_rank(b, partner[b]) + 1)
            .collect();
        ChainWalk {
            inst,
            girl_partner: m0.partner_of_girl(),
            partner,
            cursor,
        }
    }

    // Girls only improve along the chain, so a girl who prefers her partner
    // to b keeps doing so and the cursor never moves backwards.
    fn next_map(&mut self) -> Vec<Option<usize>> {
        let inst = self.inst;
        (0..inst.n())
            .map(|b| {
                let prefs = inst.boy_prefs(b);
                while self.cursor[b] < prefs.len() {
                    let g = prefs[self.cursor[b]];
                    if inst.girl_prefers(g, b, self.girl_partner[g]) {
                        return Some(self.girl_partner[g]);
                    }
                    self.cursor[b] += 1;
                }
                None
            })
            .collect()
    }

    fn step(&mut self, id: usize) -> Option<Rotation> {
        let next = self.next_map();
        let boys = cycles(&next).into_iter().next()?;
        let rho = Rotation {
            id,
            pairs: boys.iter().map(|&b| (b, self.partner[b])).collect(),
        };
        for (b, _, to) in rho.moves() {
            self.partner[b] = to;
            self.girl_partner[to] = b;
            self.cursor[b] = self.inst.boy_rank(b, to) + 1;
        }
        Some(rho)
    }
}

/// Every rotation of the instance, each once, in elimination-chain order.
pub fn enumerate_rotations(inst: &Instance) -> Vec<Rotation> {
    let m0 = gale_shapley(inst, Side::Boys);
    let mut walk = ChainWalk::new(inst, &m0);
    let mut out = Vec::new();
    while let Some(rho) = walk.step(out.len()) {
        out.push(rho);
    }
    out
}

/// The rotation poset: rotations, precedence arcs `pred -> succ`, and which
/// rotation moves each boy to or away from each girl.
#[derive(Debug, Clone)]
pub struct RotationPoset {
    boy_optimal: Matching,
    girl_optimal: Matching,
    rotations: Vec<Rotation>,
    edges: Vec<(usize, usize)>,
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
    moves_to: HashMap<(usize, usize), usize>,
    moves_from: HashMap<(usize, usize), usize>,
}

impl RotationPoset {
    pub fn rotations(&self) -> &[Rotation] {
        &self.rotations
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    /// Precedence arcs `(a, b)` meaning `a` must be eliminated before `b`.
    /// Not transitively reduced; always `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn predecessors(&self, id: usize) -> &[usize] {
        &self.preds[id]
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.succs[id]
    }

    pub fn boy_optimal(&self) -> &Matching {
        &self.boy_optimal
    }

    pub fn girl_optimal(&self) -> &Matching {
        &self.girl_optimal
    }

    /// The rotation that gives `boy` the partner `girl`, if any.
    pub fn moves_to(&self, boy: usize, girl: usize) -> Option<usize> {
        self.moves_to.get(&(boy, girl)).copied()
    }

    /// The rotation that takes `girl` away from `boy`, if any.
    pub fn moves_from(&self, boy: usize, girl: usize) -> Option<usize> {
        self.moves_from.get(&(boy, girl)).copied()
    }

    pub fn is_closed(&self, members: &[usize]) -> bool {
        members.iter().all(|&r| r < self.len()) && IdealSpace::new(&self.preds).is_ideal(members)
    }
}

/// Builds the rotation poset with both precedence rules:
///
/// 1. if `a` moves boy `b` to girl `g` and `c` moves `b` away from `g`, then `a -> c`;
/// 2. if `c` moves `b` from above `g` to below `g` on `b`'s list, and `a` moves
///    `g` from a boy she ranks below `b` to one she ranks above `b`, then `a -> c`.
pub fn build_poset(inst: &Instance) -> Result<RotationPoset> {
    let n = inst.n();
    let boy_optimal = gale_shapley(inst, Side::Boys);
    let rotations = enumerate_rotations(inst);
    if rotations.len() > n * (n - 1) / 2 + n {
        return Err(Error::contract(format!(
            "{} rotations exceed the n(n-1)/2 + n bound",
            rotations.len()
        )));
    }

    let mut moves_to = HashMap::new();
    let mut moves_from = HashMap::new();
    // per girl: (rotation, old partner rank, new partner rank) in chain order
    let mut girl_moves: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    let mut partner = boy_optimal.partners().to_vec();
    let mut girl_partner = boy_optimal.partner_of_girl();
    for rho in &rotations {
        for (b, from, to) in rho.moves() {
            if moves_to.insert((b, to), rho.id).is_some() {
                return Err(Error::contract(format!(
                    "two rotations move boy {} to girl {}",
                    b + 1,
                    to + 1
                )));
            }
            if moves_from.insert((b, from), rho.id).is_some() {
                return Err(Error::contract(format!(
                    "two rotations move boy {} away from girl {}",
                    b + 1,
                    from + 1
                )));
            }
            let old = girl_partner[to];
            girl_moves[to].push((rho.id, inst.girl_rank(to, old), inst.girl_rank(to, b)));
        }
        rho.apply_unchecked(&mut partner);
        for (b, _, to) in rho.moves() {
            girl_partner[to] = b;
        }
    }
    let girl_optimal = Matching::from_vec_unchecked(partner);

    let mut edges = BTreeSet::new();
    for (&(b, g), &first) in &moves_to {
        if let Some(&second) = moves_from.get(&(b, g)) {
            edges.insert((first, second));
        }
    }
    for rho in &rotations {
        for (b, from, to) in rho.moves() {
            let skipped = &inst.boy_prefs(b)[inst.boy_rank(b, from) + 1..inst.boy_rank(b, to)];
            for &g in skipped {
                let pivot = inst.girl_rank(g, b);
                let crossing = girl_moves[g]
                    .iter()
                    .find(|&&(_, old, new)| old > pivot && new < pivot);
                if let Some(&(pi, _, _)) = crossing {
                    edges.insert((pi, rho.id));
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    if let Some(&(a, b)) = edges.iter().find(|(a, b)| a >= b) {
        return Err(Error::contract(format!(
            "precedence arc {a} -> {b} contradicts elimination order"
        )));
    }

    let mut preds = vec![Vec::new(); rotations.len()];
    let mut succs = vec![Vec::new(); rotations.len()];
    for &(a, b) in &edges {
        preds[b].push(a);
        succs[a].push(b);
    }
    Ok(RotationPoset {
        boy_optimal,
        girl_optimal,
        rotations,
        edges,
        preds,
        succs,
        moves_to,
        moves_from,
    })
}

/// Sorted rotation ids forming a predecessor-closed subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClosedSet {
    pub members: Vec<usize>,
}

impl ClosedSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ClosedSet { members }
    }
}

/// Eliminates the members of `c` from the boy-optimal matching in id order
/// (a topological order of the poset).
pub fn closed_set_to_matching(poset: &RotationPoset, c: &ClosedSet) -> Result<Matching> {
    if !poset.is_closed(&c.members) {
        return Err(Error::contract(format!(
            "rotation set {:?} is not closed",
            c.members
        )));
    }
    Ok(eliminate_sorted(poset, c.members.iter().copied()))
}

/// Applies rotations in the given (ascending, closed) order without checks.
pub(crate) fn eliminate_sorted(
    poset: &RotationPoset,
    ids: impl Iterator<Item = usize>,
) -> Matching {
    let mut partners = poset.boy_optimal.partners().to_vec();
    for id in ids {
        let rho = &poset.rotations[id];
        debug_assert!(rho.pairs.iter().all(|&(b, g)| partners[b] == g));
        rho.apply_unchecked(&mut partners);
    }
    Matching::from_vec_unchecked(partners)
}

/// All closed subsets, ordered by size then lexicographically, up to `cap`.
pub fn all_closed_sets(poset: &RotationPoset, cap: usize) -> Enumeration<ClosedSet> {
    IdealSpace::new(&poset.preds)
        .enumerate(cap)
        .map(|members| ClosedSet { members })
}

/// Renders the poset as `rotation <id>: (b,g) ...` lines followed by
/// `edge <a> <b>` lines. Rotation ids are 0-based, agents 1-based.
pub fn format_poset(poset: &RotationPoset) -> String {
    let mut out = String::new();
    for rho in &poset.rotations {
        let pairs: Vec<String> = rho
            .pairs
            .iter()
            .map(|(b, g)| format!("({},{})", b + 1, g + 1))
            .collect();
        out.push_str(&format!("rotation {}: {}\n", rho.id, pairs.join(" ")));
    }
    for (a, b) in &poset.edges {
        out.push_str(&format!("edge {a} {b}\n"));
    }
    out
}
