//! Random squarefree pairs `I ⊆ J` for property and oracle tests.

#![allow(dead_code)]

use rand::Rng;
use squarefree_depth::ideal::{QuotientPair, SquarefreeIdeal, VarSet};

pub fn random_ideal<R: Rng>(rng: &mut R, ground: usize) -> SquarefreeIdeal {
    let count = rng.gen_range(0..=6);
    let gens: Vec<VarSet> = (0..count)
        .map(|_| {
            let bits = rng.gen_range(0..1u64 << ground);
            VarSet::from_bits(ground, bits).unwrap()
        })
        .collect();
    SquarefreeIdeal::minimalize(ground, &gens).unwrap()
}

/// `J` random, `I = J ∩ K` for another random `K`; about a quarter of the
/// draws are plain ideals or plain quotients.
pub fn random_pair<R: Rng>(rng: &mut R, ground: usize) -> QuotientPair {
    let upper = random_ideal(rng, ground);
    match rng.gen_range(0..4) {
        0 => QuotientPair::ideal(upper),
        1 => QuotientPair::quotient(upper),
        _ => {
            let lower = upper.intersect(&random_ideal(rng, ground)).unwrap();
            QuotientPair::new(lower, upper).unwrap()
        }
    }
}
