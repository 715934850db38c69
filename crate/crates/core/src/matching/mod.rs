//! Instances, matchings, stability and the dominance lattice.

mod instance;
mod weights;

pub(crate) use instance::content_lines;
pub use instance::{format_instance, parse_instance, Instance, Matching, MAX_AGENTS};
pub use weights::{
    format_weights, matching_weight, parse_weights, preset_desirable_undesirable,
    preset_egalitarian, Sense, WeightFunction,
};

use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Boys,
    Girls,
}

/// A boy and a girl who both prefer each other to their partners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockingPair {
    pub boy: usize,
    pub girl: usize,
}

/// Deferred acceptance. Boys proposing yields the boy-optimal matching,
/// girls proposing the girl-optimal one.
pub fn gale_shapley(inst: &Instance, proposing: Side) -> Matching {
    let holder = match proposing {
        Side::Boys => {
            deferred_acceptance(inst.n(), |p| inst.boy_prefs(p), |r, p| inst.girl_rank(r, p))
        }
        Side::Girls => {
            deferred_acceptance(inst.n(), |p| inst.girl_prefs(p), |r, p| inst.boy_rank(r, p))
        }
    };
    let partner_of_boy = match proposing {
        Side::Boys => Matching::from_vec_unchecked(holder).partner_of_girl(),
        Side::Girls => holder,
    };
    Matching::from_vec_unchecked(partner_of_boy)
}

/// Returns, for each receiver, the proposer she ends up holding.
fn deferred_acceptance<'a>(
    n: usize,
    prefs: impl Fn(usize) -> &'a [usize],
    rank: impl Fn(usize, usize) -> usize,
) -> Vec<usize> {
    let mut next_choice = vec![0usize; n];
    let mut holder: Vec<Option<usize>> = vec![None; n];
    let mut free: VecDeque<usize> = (0..n).collect();
    while let Some(p) = free.pop_front() {
        let r = prefs(p)[next_choice[p]];
        next_choice[p] += 1;
        match holder[r] {
            None => holder[r] = Some(p),
            Some(cur) if rank(r, p) < rank(r, cur) => {
                holder[r] = Some(p);
                free.push_back(cur);
            }
            Some(_) => free.push_back(p),
        }
    }
    holder
        .into_iter()
        .map(|p| p.expect("complete lists leave nobody unmatched"))
        .collect()
}

/// Every blocking pair of `m`, in (boy, girl) order.
pub fn blocking_pairs(inst: &Instance, m: &Matching) -> Vec<BlockingPair> {
    let girl_partner = m.partner_of_girl();
    let mut out = Vec::new();
    for b in 0..inst.n() {
        let current = m.partner_of_boy(b);
        for &g in &inst.boy_prefs(b)[..inst.boy_rank(b, current)] {
            if inst.girl_prefers(g, b, girl_partner[g]) {
                out.push(BlockingPair { boy: b, girl: g });
            }
        }
    }
    out.sort();
    out
}

pub fn is_stable(inst: &Instance, m: &Matching) -> bool {
    blocking_pairs(inst, m).is_empty()
}

/// Each boy takes the better of his two partners.
///
/// Both inputs must be stable; this is not checked, and the result is
/// unspecified (possibly not a matching at all) otherwise.
pub fn meet(m1: &Matching, m2: &Matching, inst: &Instance) -> Matching {
    pick(m1, m2, |b, g1, g2| {
        inst.boy_rank(b, g1) <= inst.boy_rank(b, g2)
    })
}

/// Each boy takes the worse of his two partners. Same precondition as [`meet`].
pub fn join(m1: &Matching, m2: &Matching, inst: &Instance) -> Matching {
    pick(m1, m2, |b, g1, g2| {
        inst.boy_rank(b, g1) >= inst.boy_rank(b, g2)
    })
}

fn pick(m1: &Matching, m2: &Matching, first: impl Fn(usize, usize, usize) -> bool) -> Matching {
    let partners = m1
        .pairs()
        .map(|(b, g1)| {
            let g2 = m2.partner_of_boy(b);
            if first(b, g1, g2) {
                g1
            } else {
                g2
            }
        })
        .collect();
    Matching::from_vec_unchecked(partners)
}

/// True iff every boy weakly prefers his partner in `m1` to his partner in `m2`.
pub fn dominates(m1: &Matching, m2: &Matching, inst: &Instance) -> bool {
    m1.pairs()
        .all(|(b, g)| inst.boy_rank(b, g) <= inst.boy_rank(b, m2.partner_of_boy(b)))
}
