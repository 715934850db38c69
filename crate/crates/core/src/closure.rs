//! Enumeration of predecessor-closed subsets (order ideals) of a DAG.
//!
//! Rotation posets, condensed cut DAGs and meta-rotation posets all share
//! this: nodes are numbered in a topological order and a subset is closed
//! when it contains every predecessor of each of its members.

/// Items produced by a capped enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    /// Set when more items existed than the cap allowed.
    pub truncated: bool,
}

impl<T> Enumeration<T> {
    pub fn map<U>(self, f: impl FnMut(T) -> U) -> Enumeration<U> {
        Enumeration {
            items: self.items.into_iter().map(f).collect(),
            truncated: self.truncated,
        }
    }
}

/// Closure constraints over nodes `0..preds.len()`.
///
/// `preds[v]` must only name nodes smaller than `v`.
#[derive(Debug, Clone)]
pub struct IdealSpace<'a> {
    preds: &'a [Vec<usize>],
    required: Vec<bool>,
    forbidden: Vec<bool>,
}

impl<'a> IdealSpace<'a> {
    pub fn new(preds: &'a [Vec<usize>]) -> Self {
        debug_assert!(preds
            .iter()
            .enumerate()
            .all(|(v, ps)| ps.iter().all(|&p| p < v)));
        IdealSpace {
            preds,
            required: vec![false; preds.len()],
            forbidden: vec![false; preds.len()],
        }
    }

    /// Only ideals containing `v` are produced.
    pub fn require(mut self, v: usize) -> Self {
        self.required[v] = true;
        self
    }

    /// Only ideals avoiding `v` are produced.
    pub fn forbid(mut self, v: usize) -> Self {
        self.forbidden[v] = true;
        self
    }

    pub fn is_ideal(&self, members: &[usize]) -> bool {
        let mut inside = vec![false; self.preds.len()];
        for &v in members {
            inside[v] = true;
        }
        members
            .iter()
            .all(|&v| self.preds[v].iter().all(|&p| inside[p]))
            && self.required.iter().zip(&inside).all(|(r, i)| !r | i)
            && self.forbidden.iter().zip(&inside).all(|(f, i)| !(f & i))
    }

    /// All admissible ideals as sorted member lists, ordered by size and then
    /// lexicographically, stopping after `cap` items.
    pub fn enumerate(&self, cap: usize) -> Enumeration<Vec<usize>> {
        assert!(cap >= 1, "enumeration cap must be at least 1");
        let m = self.preds.len();
        let mut search = LevelSearch {
            space: self,
            inside: vec![false; m],
            chosen: Vec::new(),
            out: Vec::new(),
            limit: cap + 1,
        };
        for size in 0..=m {
            search.level(0, size);
            if search.out.len() >= search.limit {
                break;
            }
        }
        let truncated = search.out.len() > cap;
        search.out.truncate(cap);
        Enumeration {
            items: search.out,
            truncated,
        }
    }
}

struct LevelSearch<'s, 'a> {
    space: &'s IdealSpace<'a>,
    inside: Vec<bool>,
    chosen: Vec<usize>,
    out: Vec<Vec<usize>>,
    limit: usize,
}

impl LevelSearch<'_, '_> {
    /// Extends `chosen` with nodes `>= from` until it has `size` members.
    /// Candidates are tried in increasing order, so every prefix is itself
    /// closed and output within a level is lexicographic.
    fn level(&mut self, from: usize, size: usize) {
        if self.chosen.len() == size {
            if !self.space.required[from..].contains(&true) {
                self.out.push(self.chosen.clone());
            }
            return;
        }
        let m = self.space.preds.len();
        for v in from..m {
            if self.out.len() >= self.limit || m - v < size - self.chosen.len() {
                return;
            }
            let admissible =
                !self.space.forbidden[v] && self.space.preds[v].iter().all(|&p| self.inside[p]);
            if admissible {
                self.inside[v] = true;
                self.chosen.push(v);
                self.level(v + 1, size);
                self.chosen.pop();
                self.inside[v] = false;
            }
            if self.space.required[v] {
                // skipping a required node can never be repaired
                return;
            }
        }
    }
}
