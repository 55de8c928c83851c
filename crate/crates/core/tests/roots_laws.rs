use nv_core::roots::{
    base_shift, dyadic_to_element, root_chain, root_chain_capped, verify_root, DyadicRational,
};
use nv_core::torsion::{order, OrderResult};
use nv_core::{apply_point, compose, equal, identity, is_identity, power, NvError, Point};
use proptest::prelude::*;

#[test]
fn chain_squares_down() {
    let chain: Vec<_> = (0..=6).map(|i| root_chain(i).unwrap()).collect();
    for i in 1..=6 {
        assert!(verify_root(&chain[i], &chain[i - 1], 2).unwrap(), "h_{i}");
        assert_eq!(chain[i].len(), (1 << i) + 2);
    }
    assert!(equal(&power(&chain[4], 16), &base_shift()).unwrap());
}

#[test]
fn chain_elements_commute() {
    let chain: Vec<_> = (0..=4).map(|i| root_chain(i).unwrap()).collect();
    for a in &chain {
        for b in &chain {
            assert!(equal(&compose(a, b).unwrap(), &compose(b, a).unwrap()).unwrap());
        }
    }
}

#[test]
fn chain_has_infinite_order() {
    for i in 0..=4 {
        assert!(matches!(
            order(&root_chain(i).unwrap(), 64, 65536),
            OrderResult::ExceedsCap { .. }
        ));
    }
}

#[test]
fn base_shift_orbits() {
    let h = base_shift();
    let ones = Point::parse_parts(&[("0", "1"), ("", "1")]).unwrap();
    assert_eq!(apply_point(&h, &ones).unwrap(), ones);
    // (0̄, 0·1̄) marches to (0̄, 0^k·1̄) and never returns.
    let mut p = Point::parse_parts(&[("", "0"), ("0", "1")]).unwrap();
    for k in 2..20 {
        p = apply_point(&h, &p).unwrap();
        assert_eq!(p.coord(1).prefix().len(), k);
        assert_eq!(
            p.coord(0),
            Point::parse_parts(&[("", "0")]).unwrap().coord(0)
        );
    }
}

#[test]
fn chain_cap_is_enforced() {
    assert!(matches!(
        root_chain_capped(10, 1000),
        Err(NvError::Resource {
            size: 1026,
            cap: 1000
        })
    ));
}

fn dyadic() -> impl Strategy<Value = DyadicRational> {
    (-20i64..=20, 0u32..=4).prop_map(|(k, i)| DyadicRational::new(k, i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dyadic_embedding_is_additive(a in dyadic(), b in dyadic()) {
        let lhs = compose(&dyadic_to_element(a).unwrap(), &dyadic_to_element(b).unwrap()).unwrap();
        prop_assert!(equal(&lhs, &dyadic_to_element(a + b).unwrap()).unwrap());
        prop_assert_eq!(is_identity(&dyadic_to_element(a).unwrap()), a == DyadicRational::integer(0));
    }

    #[test]
    fn dyadic_text_round_trips(a in dyadic()) {
        prop_assert_eq!(a.to_string().parse::<DyadicRational>().unwrap(), a);
        prop_assert_eq!(a + (-a), DyadicRational::integer(0));
    }
}

#[test]
fn zero_maps_to_identity() {
    assert_eq!(
        dyadic_to_element(DyadicRational::integer(0)).unwrap(),
        identity(2)
    );
}
