//! Seeded generators for blocks and elements.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::block::Block;
use crate::element::{conjugate, identity, Element};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A block of exactly `target` pieces built by random subdivisions of the
/// trivial block.
pub fn random_block<R: Rng + ?Sized>(rng: &mut R, dim: usize, target: usize) -> Block {
    assert!(dim >= 1 && target >= 1);
    let mut b = Block::trivial(dim);
    while b.len() < target {
        let i = rng.gen_range(0..b.len());
        let k = rng.gen_range(0..dim);
        b = b.subdivide(i, k).expect("indices in range");
    }
    b
}

fn random_permutation<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

pub fn random_element_with<R: Rng + ?Sized>(rng: &mut R, dim: usize, target: usize) -> Element {
    if target == 1 {
        return identity(dim);
    }
    let x = random_block(rng, dim, target);
    let y = random_block(rng, dim, target);
    let p = random_permutation(rng, target);
    Element::new(x, y, p).expect("equal lengths")
}

/// `(X, X, σ)` for a random block and permutation.
pub fn random_torsion_with<R: Rng + ?Sized>(rng: &mut R, dim: usize, target: usize) -> Element {
    let x = random_block(rng, dim, target);
    let p = random_permutation(rng, target);
    Element::new(x.clone(), x, p).expect("equal lengths")
}

pub fn random_element(dim: usize, target: usize, seed: u64) -> Element {
    random_element_with(&mut rng_from_seed(seed), dim, target)
}

/// An identical block pair, conjugated by a random element of
/// `conjugator_blocks` pieces when that is given.
pub fn random_torsion(
    dim: usize,
    target: usize,
    seed: u64,
    conjugator_blocks: Option<usize>,
) -> Element {
    let mut rng = rng_from_seed(seed);
    let g = random_torsion_with(&mut rng, dim, target);
    match conjugator_blocks {
        Some(c) => {
            let c = random_element_with(&mut rng, dim, c);
            conjugate(&g, &c).expect("same dimension")
        }
        None => g,
    }
}
