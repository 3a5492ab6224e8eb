//! Seeded random complexes for tests and sweeps.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, ChainMap, Complex};
use crate::algebra::{hom_basis, Element, GradingMode};

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Two-term complex in degrees 0 and 1 with up to three summands per degree;
/// entries may be invertible.
pub fn random_two_term(rng: &mut ChaCha8Rng, rank: usize, mode: &GradingMode) -> Complex<Q> {
    let mut parts = Vec::new();
    for d in 0..2 {
        for _ in 0..rng.gen_range(0..4) {
            parts.push((rng.gen_range(1..=rank), rng.gen_range(-1..=1), d));
        }
    }
    let mut entries = Vec::new();
    for (a, &(va, ka, da)) in parts.iter().enumerate() {
        for (b, &(vb, kb, db)) in parts.iter().enumerate() {
            if db != da + 1 {
                continue;
            }
            for bp in hom_basis(va, vb) {
                if mode.degree(&bp) == kb - ka && rng.gen_bool(0.7) {
                    entries.push((a, b, Element::term(bp, q(rng.gen_range(-2..=2)))));
                }
            }
        }
    }
    Complex::from_parts(rank, mode.clone(), parts, entries).expect("two-term complexes are valid")
}

/// Cone of a random degree-zero chain map between two random two-term
/// complexes, so up to three homological degrees.
pub fn random_complex(seed: u64, rank: usize, mode: &GradingMode) -> Complex<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_two_term(&mut rng, rank, mode);
    let y = random_two_term(&mut rng, rank, mode).shift(-1, 0);
    let space = hom_space(&x, &y, 0, 0).expect("compatible complexes");
    let mut acc: BTreeMap<(usize, usize), Element<Q>> = BTreeMap::new();
    for f in &space.basis {
        let c = q(rng.gen_range(-2..=2));
        for (s, t, e) in f.entries() {
            let slot = acc.entry((s, t)).or_insert_with(Element::zero);
            *slot = slot.add(&e.scale(&c));
        }
    }
    let f = ChainMap::new(x, y, 0, 0, acc).expect("combination of chain maps");
    Complex::cone(&f).expect("zero offsets")
}
