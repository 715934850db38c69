//! Brute-force reference implementations. Slow on purpose and obviously
//! correct; size limits are refused rather than truncated.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::cut::{cut_weight, IdealCut, WeightedDag};
use crate::error::{Error, Result};
use crate::matching::{dominates, is_stable, matching_weight, Instance, Matching, WeightFunction};

pub const MAX_ORACLE_AGENTS: usize = 8;
pub const MAX_ORACLE_VERTICES: usize = 20;

fn check_agents(n: usize) -> Result<()> {
    if n > MAX_ORACLE_AGENTS {
        return Err(Error::OracleLimit(format!(
            "brute force over matchings needs n <= {MAX_ORACLE_AGENTS}, got {n}"
        )));
    }
    Ok(())
}

/// Every stable matching, in lexicographic order of partner arrays.
pub fn all_stable_matchings(inst: &Instance) -> Result<Vec<Matching>> {
    check_agents(inst.n())?;
    Ok((0..inst.n())
        .permutations(inst.n())
        .map(Matching::from_vec_unchecked)
        .filter(|m| is_stable(inst, m))
        .collect())
}

/// Heaviest stable matching. Ties go to the matching that dominates the
/// most others among the tied ones, then to the smallest partner array.
pub fn brute_max_weight_matching(inst: &Instance, w: &WeightFunction) -> Result<(Matching, i128)> {
    let weighed = weighed_matchings(inst, w)?;
    let best = weighed
        .iter()
        .map(|(_, x)| *x)
        .max()
        .expect("at least one stable matching");
    let tied: Vec<&Matching> = weighed
        .iter()
        .filter(|(_, x)| *x == best)
        .map(|(m, _)| m)
        .collect();
    let score = |m: &Matching| tied.iter().filter(|o| dominates(m, o, inst)).count();
    let winner = tied
        .iter()
        .copied()
        .min_by(|a, b| score(b).cmp(&score(a)).then_with(|| a.cmp(b)))
        .unwrap();
    Ok((winner.clone(), best))
}

/// Every stable matching of maximum weight, lexicographically ordered.
pub fn all_max_weight_matchings(
    inst: &Instance,
    w: &WeightFunction,
) -> Result<(Vec<Matching>, i128)> {
    let weighed = weighed_matchings(inst, w)?;
    let best = weighed
        .iter()
        .map(|(_, x)| *x)
        .max()
        .expect("at least one stable matching");
    let ms = weighed
        .into_iter()
        .filter(|(_, x)| *x == best)
        .map(|(m, _)| m)
        .collect();
    Ok((ms, best))
}

/// Lexicographic optimum: maximum `w2` among the `w1`-optimal matchings.
/// Ties go to the smallest partner array.
pub fn brute_bi_objective(
    inst: &Instance,
    w1: &WeightFunction,
    w2: &WeightFunction,
) -> Result<(Matching, i128, i128)> {
    let (optima, x1) = all_max_weight_matchings(inst, w1)?;
    let mut best: Option<(Matching, i128)> = None;
    for m in optima {
        let x2 = matching_weight(&m, w2)?;
        if best.as_ref().is_none_or(|(_, b)| x2 > *b) {
            best = Some((m, x2));
        }
    }
    let (m, x2) = best.unwrap();
    Ok((m, x1, x2))
}

fn weighed_matchings(inst: &Instance, w: &WeightFunction) -> Result<Vec<(Matching, i128)>> {
    all_stable_matchings(inst)?
        .into_iter()
        .map(|m| matching_weight(&m, w).map(|x| (m, x)))
        .collect()
}

/// Every ideal cut, ordered by size then lexicographically.
pub fn all_ideal_cuts(g: &WeightedDag) -> Result<Vec<IdealCut>> {
    let v = g.vertex_count();
    if v > MAX_ORACLE_VERTICES {
        return Err(Error::OracleLimit(format!(
            "brute force over cuts needs at most {MAX_ORACLE_VERTICES} vertices, got {v}"
        )));
    }
    let mut cuts: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << v) {
        let inside = |x: usize| mask >> x & 1 == 1;
        if !inside(g.source()) || inside(g.sink()) {
            continue;
        }
        if g.edges().iter().any(|e| !inside(e.from) && inside(e.to)) {
            continue;
        }
        cuts.push((0..v).filter(|&x| inside(x)).collect());
    }
    cuts.sort_by(|a, b| size_then_lex(a, b));
    Ok(cuts
        .into_iter()
        .map(|c| IdealCut::new(g, c).expect("brute-force cut is ideal"))
        .collect())
}

/// Heaviest ideal cut; ties go to the smallest source side, then lexicographic.
pub fn brute_max_weight_cut(g: &WeightedDag) -> Result<(IdealCut, i128)> {
    let (cuts, best) = all_max_weight_cuts(g)?;
    Ok((cuts.into_iter().next().expect("some cut exists"), best))
}

/// Every maximum-weight ideal cut, ordered by size then lexicographically.
pub fn all_max_weight_cuts(g: &WeightedDag) -> Result<(Vec<IdealCut>, i128)> {
    let cuts = all_ideal_cuts(g)?;
    let best = cuts
        .iter()
        .map(|c| cut_weight(g, c))
        .max()
        .ok_or_else(|| Error::Graph("graph has no ideal cut".into()))?;
    let max = cuts
        .into_iter()
        .filter(|c| cut_weight(g, c) == best)
        .collect();
    Ok((max, best))
}

fn size_then_lex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::Edge;
    use crate::matching::parse_instance;

    fn crossed() -> Instance {
        parse_instance("2\n1 2\n2 1\n2 1\n1 2\n").unwrap()
    }

    fn m(v: &[usize]) -> Matching {
        Matching::new(v.to_vec()).unwrap()
    }

    fn dag(v: usize, edges: &[(usize, usize, i128)]) -> WeightedDag {
        let edges = edges
            .iter()
            .map(|&(from, to, weight)| Edge { from, to, weight })
            .collect();
        WeightedDag::new(v, 0, v - 1, edges).unwrap()
    }

    fn sides(cuts: &[IdealCut]) -> Vec<Vec<usize>> {
        cuts.iter().map(|c| c.vertices().collect()).collect()
    }

    #[test]
    fn stable_matchings() {
        assert_eq!(
            all_stable_matchings(&crossed()).unwrap(),
            vec![m(&[0, 1]), m(&[1, 0])]
        );
        let identity: Vec<Vec<usize>> = vec![vec![0, 1, 2]; 3];
        let identical = Instance::new(identity.clone(), identity).unwrap();
        assert_eq!(
            all_stable_matchings(&identical).unwrap(),
            vec![m(&[0, 1, 2])]
        );
        let big: Vec<Vec<usize>> = vec![(0..9).collect(); 9];
        let err = all_stable_matchings(&Instance::new(big.clone(), big).unwrap()).unwrap_err();
        assert!(matches!(err, Error::OracleLimit(_)));
    }

    #[test]
    fn max_weight_matching() {
        let w = WeightFunction::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(
            brute_max_weight_matching(&crossed(), &w).unwrap(),
            (m(&[0, 1]), 1)
        );
        let zero = WeightFunction::zero(2);
        assert_eq!(
            brute_max_weight_matching(&crossed(), &zero).unwrap(),
            (m(&[0, 1]), 0)
        );
        let tie = WeightFunction::from_rows(&[vec![3, 2], vec![2, 1]]).unwrap();
        let (all, best) = all_max_weight_matchings(&crossed(), &tie).unwrap();
        assert_eq!((all.len(), best), (2, 4));
    }

    #[test]
    fn bi_objective() {
        let tie = WeightFunction::from_rows(&[vec![3, 2], vec![2, 1]]).unwrap();
        let on_b1g1 = WeightFunction::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        let on_b1g2 = WeightFunction::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(
            brute_bi_objective(&crossed(), &tie, &on_b1g1).unwrap(),
            (m(&[0, 1]), 4, 1)
        );
        assert_eq!(
            brute_bi_objective(&crossed(), &tie, &on_b1g2).unwrap(),
            (m(&[1, 0]), 4, 1)
        );
    }

    #[test]
    fn cuts() {
        let c = dag(3, &[(0, 1, 5), (1, 2, -2)]);
        assert_eq!(
            sides(&all_ideal_cuts(&c).unwrap()),
            vec![vec![0], vec![0, 1]]
        );
        assert_eq!(brute_max_weight_cut(&c).unwrap().1, 5);

        let d = dag(4, &[(0, 1, 1), (0, 2, 4), (1, 3, 3), (2, 3, 2)]);
        assert_eq!(all_ideal_cuts(&d).unwrap().len(), 4);
        let (best, weight) = brute_max_weight_cut(&d).unwrap();
        assert_eq!(
            (best.vertices().collect::<Vec<_>>(), weight),
            (vec![0, 1], 7)
        );

        let s = dag(2, &[(0, 1, -3)]);
        assert_eq!(sides(&all_ideal_cuts(&s).unwrap()), vec![vec![0]]);
        assert_eq!(brute_max_weight_cut(&s).unwrap().1, -3);

        let wide = WeightedDag::new(21, 0, 20, vec![]).unwrap();
        assert!(matches!(all_ideal_cuts(&wide), Err(Error::OracleLimit(_))));
    }
}
