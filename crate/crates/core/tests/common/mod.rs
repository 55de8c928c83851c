//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use nv_core::random::random_block;
use nv_core::{BinaryWord, Block, Element, PeriodicSequence, Point};
use rand::Rng;

/// Refines `b` by `extra` random subdivisions.
pub fn refine_randomly<R: Rng>(rng: &mut R, b: &Block, extra: usize) -> Block {
    let mut b = b.clone();
    for _ in 0..extra {
        let i = rng.gen_range(0..b.len());
        let k = rng.gen_range(0..b.dim());
        b = b.subdivide(i, k).unwrap();
    }
    b
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> BinaryWord {
    let n = rng.gen_range(0..=max_len);
    BinaryWord::from_bits(&(0..n).map(|_| rng.gen_range(0..2u8)).collect::<Vec<_>>())
}

pub fn random_point<R: Rng>(rng: &mut R, dim: usize) -> Point {
    let coords = (0..dim)
        .map(|_| {
            let prefix = random_word(rng, 8);
            let mut period = random_word(rng, 4);
            if period.is_empty() {
                period.push(rng.gen_range(0..2));
            }
            PeriodicSequence::new(prefix, period).unwrap()
        })
        .collect();
    Point::new(coords).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// `(X, X, σ)` on a random block.
pub fn identical_pair<R: Rng>(rng: &mut R, dim: usize, m: usize) -> (Element, Vec<usize>) {
    let x = random_block(rng, dim, m);
    let sigma = random_permutation(rng, m);
    (Element::new(x.clone(), x, sigma.clone()).unwrap(), sigma)
}

/// The first `n` bits of each image coordinate, read off bit by bit
/// without going through the library's point arithmetic.
pub fn eval_bits(g: &Element, p: &Point, n: usize) -> Vec<Vec<u8>> {
    let dim = g.dim();
    let depth = g
        .domain()
        .pieces()
        .iter()
        .map(|s| s.depth())
        .max()
        .unwrap_or(0);
    let bits: Vec<Vec<u8>> = (0..dim)
        .map(|k| (0..depth + n).map(|i| p.coord(k).bit(i)).collect())
        .collect();
    let (d, r) = g
        .pairs()
        .find(|(d, _)| (0..dim).all(|k| d.word(k).iter().enumerate().all(|(i, b)| bits[k][i] == b)))
        .expect("domain pieces cover the cube");
    (0..dim)
        .map(|k| {
            let mut out: Vec<u8> = r.word(k).iter().collect();
            out.extend_from_slice(&bits[k][d.word(k).len()..]);
            out.truncate(n);
            out
        })
        .collect()
}

pub fn point_bits(p: &Point, n: usize) -> Vec<Vec<u8>> {
    p.coords()
        .iter()
        .map(|c| (0..n).map(|i| c.bit(i)).collect())
        .collect()
}

fn compose_images(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

/// Multiplicative order by repeated composition.
pub fn perm_order(p: &[usize]) -> u64 {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut acc = p.to_vec();
    let mut k = 1;
    while acc != id {
        acc = compose_images(&acc, p);
        k += 1;
    }
    k
}

/// Group order by saturating the set under all pairwise products.
pub fn naive_closure_order(gens: &[Vec<usize>], degree: usize) -> usize {
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    set.insert((0..degree).collect());
    set.extend(gens.iter().cloned());
    loop {
        let current: Vec<Vec<usize>> = set.iter().cloned().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                if set.insert(compose_images(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set.len();
        }
    }
}

/// Exact sum of rectangle areas per square in a rendered SVG, in units
/// of `1/SQUARE²`, plus the rectangle count.
pub fn svg_area_check(svg: &str) -> (usize, f64, f64) {
    let doc = roxmltree::Document::parse(svg).expect("well-formed XML");
    let mut left = 0.0;
    let mut right = 0.0;
    let mut count = 0;
    let split = nv_core::io::svg::SQUARE + 40.0;
    for n in doc.descendants().filter(|n| n.has_tag_name("rect")) {
        let num = |a: &str| n.attribute(a).unwrap().parse::<f64>().unwrap();
        let area = num("width") * num("height");
        if num("x") < split {
            left += area;
        } else {
            right += area;
        }
        count += 1;
    }
    (count, left, right)
}
