#![allow(dead_code)]

use maxstable_core::cut::WeightedDag;
use maxstable_core::generate::{
    cyclic_instance, irving_leather, random_dag, random_instance, random_weights, relabel,
};
use maxstable_core::matching::{Instance, WeightFunction};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` instances with n cycling through 2..=7 and weights in `range`.
pub fn weighted_instances(
    count: usize,
    range: std::ops::RangeInclusive<i64>,
    seed: u64,
) -> Vec<(Instance, WeightFunction)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = 2 + i % 6;
            let inst = random_instance(n, &mut rng);
            let w = random_weights(n, range.clone(), &mut rng);
            (inst, w)
        })
        .collect()
}

/// `count` DAGs with 2..=12 vertices, density 0.3, weights in [-9, 9].
pub fn dags(count: usize, seed: u64) -> Vec<WeightedDag> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| random_dag(2 + i % 11, 0.3, -9..=9, &mut rng))
        .collect()
}

/// Relabelled instances with many stable matchings: the doubling family at
/// n = 4 and n = 8 and cyclic chains. Weights cycle through a tie-prone
/// range, a wide range, and sparse weights that leave large optimal sets.
pub fn structured_instances(seed: u64) -> Vec<(Instance, WeightFunction)> {
    let mut rng = rng(seed);
    let mut bases = Vec::new();
    for _ in 0..40 {
        bases.push(irving_leather(2));
    }
    for _ in 0..6 {
        bases.push(irving_leather(3));
    }
    for n in 3..=7 {
        for _ in 0..4 {
            bases.push(cyclic_instance(n));
        }
    }
    bases
        .iter()
        .enumerate()
        .map(|(i, base)| {
            let inst = relabel(base, &mut rng);
            let n = inst.n();
            let w = match i % 3 {
                0 => random_weights(n, 0..=2, &mut rng),
                1 => random_weights(n, -9..=9, &mut rng),
                _ => {
                    let mut w = WeightFunction::zero(n);
                    for _ in 0..3 {
                        let (b, g) = (rng.gen_range(0..n), rng.gen_range(0..n));
                        w.set(b, g, rng.gen_range(-3..=3));
                    }
                    w
                }
            };
            (inst, w)
        })
        .collect()
}
