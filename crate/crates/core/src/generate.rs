//! Seeded random instances, weights and DAGs for tests and benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cut::{Edge, WeightedDag};
use crate::matching::{Instance, WeightFunction};

/// Uniformly random preference lists on both sides.
pub fn random_instance<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Instance {
    let mut side = || {
        (0..n)
            .map(|_| {
                let mut row: Vec<usize> = (0..n).collect();
                row.shuffle(rng);
                row
            })
            .collect::<Vec<_>>()
    };
    let boys = side();
    let girls = side();
    Instance::new(boys, girls).expect("shuffled rows are permutations")
}

/// Boy `b` ranks girls `b, b+1, ...` and girl `g` ranks boys `g+1, g+2, ...,
/// g` (all mod `n`), which gives `n` stable matchings in a chain.
pub fn cyclic_instance(n: usize) -> Instance {
    let boys = (0..n)
        .map(|b| (0..n).map(|k| (b + k) % n).collect())
        .collect();
    let girls = (0..n)
        .map(|g| (1..=n).map(|k| (g + k) % n).collect())
        .collect();
    Instance::new(boys, girls).expect("cyclic rows are permutations")
}

/// The doubling family with many stable matchings: `n = 2^k`, 10 stable
/// matchings at `n = 4` and 268 at `n = 8`.
pub fn irving_leather(k: u32) -> Instance {
    let mut boys = vec![vec![0usize, 1], vec![1, 0]];
    let mut girls = vec![vec![1usize, 0], vec![0, 1]];
    for _ in 1..k {
        boys = double(&boys, false);
        girls = double(&girls, true);
    }
    Instance::new(boys, girls).expect("doubled rows are permutations")
}

// Agents in the first half rank their own half first unless `swap`.
fn double(rows: &[Vec<usize>], swap: bool) -> Vec<Vec<usize>> {
    let n = rows.len();
    let shifted = |row: &[usize]| row.iter().map(|&x| x + n).collect::<Vec<_>>();
    let halves = |r: &Vec<usize>, own_first: bool| {
        if own_first {
            [r.clone(), shifted(r)].concat()
        } else {
            [shifted(r), r.clone()].concat()
        }
    };
    let low = rows.iter().map(|r| halves(r, !swap));
    let high = rows.iter().map(|r| halves(r, swap));
    low.chain(high).collect()
}

/// `inst` with boys and girls renamed by independent random permutations.
pub fn relabel<R: Rng + ?Sized>(inst: &Instance, rng: &mut R) -> Instance {
    let n = inst.n();
    let mut boy_name: Vec<usize> = (0..n).collect();
    let mut girl_name: Vec<usize> = (0..n).collect();
    boy_name.shuffle(rng);
    girl_name.shuffle(rng);
    let mut boys = vec![Vec::new(); n];
    let mut girls = vec![Vec::new(); n];
    for b in 0..n {
        boys[boy_name[b]] = inst.boy_prefs(b).iter().map(|&g| girl_name[g]).collect();
    }
    for g in 0..n {
        girls[girl_name[g]] = inst.girl_prefs(g).iter().map(|&b| boy_name[b]).collect();
    }
    Instance::new(boys, girls).expect("relabelled rows are permutations")
}

/// Integer weights drawn uniformly from `range`.
pub fn random_weights<R: Rng + ?Sized>(
    n: usize,
    range: RangeInclusive<i64>,
    rng: &mut R,
) -> WeightFunction {
    let entries = (0..n * n).map(|_| rng.gen_range(range.clone())).collect();
    WeightFunction::new(n, entries, 1).expect("n * n entries")
}

/// Decimal weights with `fraction_digits` digits after the point and
/// magnitude below `bound`.
pub fn random_decimal_weights<R: Rng + ?Sized>(
    n: usize,
    bound: i64,
    fraction_digits: u32,
    rng: &mut R,
) -> WeightFunction {
    let scale = 10i64.pow(fraction_digits);
    let limit = bound * scale - 1;
    let entries = (0..n * n).map(|_| rng.gen_range(-limit..=limit)).collect();
    WeightFunction::new(n, entries, scale).expect("n * n entries")
}

/// DAG on vertices `0..vertex_count` with source `0` and sink
/// `vertex_count - 1`. Each forward pair `i < j` becomes an edge with
/// probability `density`. Vertices left without an incoming edge get one
/// from the source, then vertices without an outgoing edge get one to the
/// sink, so every vertex lies on a source-sink path.
pub fn random_dag<R: Rng + ?Sized>(
    vertex_count: usize,
    density: f64,
    weights: RangeInclusive<i64>,
    rng: &mut R,
) -> WeightedDag {
    assert!(vertex_count >= 2, "need a source and a sink");
    let (s, t) = (0, vertex_count - 1);
    let mut edges = Vec::new();
    let weight = |rng: &mut R| i128::from(rng.gen_range(weights.clone()));
    for from in 0..vertex_count {
        for to in from + 1..vertex_count {
            if rng.gen_bool(density) {
                edges.push(Edge {
                    from,
                    to,
                    weight: weight(rng),
                });
            }
        }
    }
    for v in 1..vertex_count {
        if !edges.iter().any(|e| e.to == v) {
            edges.push(Edge {
                from: s,
                to: v,
                weight: weight(rng),
            });
        }
    }
    for v in 0..t {
        if !edges.iter().any(|e| e.from == v) {
            edges.push(Edge {
                from: v,
                to: t,
                weight: weight(rng),
            });
        }
    }
    WeightedDag::new(vertex_count, s, t, edges).expect("forward edges only")
}
