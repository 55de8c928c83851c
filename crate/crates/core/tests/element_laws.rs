mod common;

use nv_core::random::{random_element_with, rng_from_seed};
use nv_core::{
    apply_block, apply_point, compose, conjugate, equal, identity, inverse, is_identity, power,
    reduce, refine_domain, wedge, Block, Element, Subblock,
};
use proptest::prelude::*;

fn triple(seed: u64, dim: usize, m: usize) -> (Element, Element, Element) {
    let mut rng = rng_from_seed(seed);
    (
        random_element_with(&mut rng, dim, m),
        random_element_with(&mut rng, dim, m),
        random_element_with(&mut rng, dim, m),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(seed in any::<u64>(), dim in 1usize..4, m in 1usize..12) {
        let (a, b, c) = triple(seed, dim, m);
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert!(equal(&left, &right).unwrap());
        prop_assert!(is_identity(&compose(&a, &inverse(&a)).unwrap()));
        prop_assert!(equal(&compose(&identity(dim), &a).unwrap(), &a).unwrap());
        prop_assert_eq!(inverse(&inverse(&a)), a.clone());
        let ab_inv = inverse(&compose(&a, &b).unwrap());
        prop_assert!(equal(&ab_inv, &compose(&inverse(&b), &inverse(&a)).unwrap()).unwrap());
    }

    #[test]
    fn evaluation_follows_composition(seed in any::<u64>(), dim in 1usize..4, m in 1usize..12) {
        let (a, b, _) = triple(seed, dim, m);
        let ab = compose(&a, &b).unwrap();
        let mut rng = rng_from_seed(seed ^ 0x5a5a);
        for _ in 0..8 {
            let p = common::random_point(&mut rng, dim);
            let ap = apply_point(&a, &p).unwrap();
            prop_assert_eq!(common::point_bits(&ap, 48), common::eval_bits(&a, &p, 48));
            prop_assert_eq!(apply_point(&ab, &p).unwrap(), apply_point(&b, &ap).unwrap());
            prop_assert_eq!(apply_point(&inverse(&a), &ap).unwrap(), p);
        }
    }

    #[test]
    fn equality_is_representation_independent(seed in any::<u64>(), dim in 1usize..4, m in 1usize..10, extra in 0usize..8) {
        let (a, b, _) = triple(seed, dim, m);
        let mut rng = rng_from_seed(seed);
        let z = common::refine_randomly(&mut rng, a.domain(), extra);
        let r = refine_domain(&a, &z).unwrap();
        prop_assert_eq!(r.domain(), &z);
        prop_assert!(equal(&r, &a).unwrap());
        prop_assert!(equal(&reduce(&r), &a).unwrap());
        prop_assert!(reduce(&r).len() <= r.len());
        prop_assert_eq!(equal(&a, &b).unwrap(), equal(&b, &a).unwrap());
    }

    #[test]
    fn block_images_distribute_over_wedge(seed in any::<u64>(), dim in 1usize..4, m in 1usize..10, e1 in 0usize..6, e2 in 0usize..6) {
        let (g, _, _) = triple(seed, dim, m);
        let mut rng = rng_from_seed(seed);
        let x = common::refine_randomly(&mut rng, g.domain(), e1);
        let y = common::refine_randomly(&mut rng, g.domain(), e2);
        let lhs = apply_block(&g, &wedge(&x, &y).unwrap()).unwrap();
        let rhs = wedge(&apply_block(&g, &x).unwrap(), &apply_block(&g, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(apply_block(&inverse(&g), &apply_block(&g, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn powers_add(seed in any::<u64>(), dim in 1usize..3, m in 1usize..8, i in -4i64..5, j in -4i64..5) {
        let (g, c, _) = triple(seed, dim, m);
        let lhs = compose(&power(&g, i), &power(&g, j)).unwrap();
        prop_assert!(equal(&lhs, &power(&g, i + j)).unwrap());
        prop_assert!(equal(&power(&g, -i), &inverse(&power(&g, i))).unwrap());
        let k = conjugate(&g, &c).unwrap();
        let lifted = conjugate(&power(&g, i), &c).unwrap();
        prop_assert!(equal(&power(&k, i), &lifted).unwrap());
    }
}

#[test]
fn shift_element_matches_point_oracle() {
    let x = Block::parse(&[&["0"], &["10"], &["11"]], 1).unwrap();
    let y = Block::parse(&[&["00"], &["01"], &["1"]], 1).unwrap();
    let a = Element::new(x, y, vec![0, 1, 2]).unwrap();
    let mut rng = rng_from_seed(11);
    for _ in 0..50 {
        let p = common::random_point(&mut rng, 1);
        assert_eq!(
            common::point_bits(&apply_point(&a, &p).unwrap(), 32),
            common::eval_bits(&a, &p, 32)
        );
    }
}

#[test]
fn reduce_merges_split_identity() {
    let z = Block::parse(&[&["00", "e"], &["01", "0"], &["01", "1"], &["1", "e"]], 2).unwrap();
    let r = refine_domain(&identity(2), &z).unwrap();
    assert_eq!(r.len(), 4);
    assert_eq!(reduce(&r), identity(2));
}

#[test]
fn from_families_rejects_bad_pairing() {
    let h = Block::parse(&[&["0"], &["1"]], 1).unwrap();
    assert!(Element::new(h.clone(), h.clone(), vec![0, 0]).is_err());
    assert!(Element::new(h.clone(), Block::trivial(1), vec![0]).is_err());
    let s = Element::from_map_lines(
        1,
        vec![
            (
                Subblock::parse(&["1"]).unwrap(),
                Subblock::parse(&["0"]).unwrap(),
            ),
            (
                Subblock::parse(&["0"]).unwrap(),
                Subblock::parse(&["1"]).unwrap(),
            ),
        ],
    )
    .unwrap();
    assert_eq!(s.pairing(), &[1, 0]);
}
