use proptest::prelude::*;
use twocoset::boolfn::{
    cube_degree, degree2_sensitivity_scan, degree_at_most, lift_to_cube, polynomial_degree, restrict_to_coset,
    sensitivity_at, BooleanFunction, CubeFunction, FlipSpec,
};
use twocoset::cert::Certificate;
use twocoset::sample::{last_pair, seeded};
use twocoset::{Domain, Element, Error, Kind, Pair, Permutation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn raw_roundtrip(n in 1usize..=5, sym in any::<bool>(), seed in any::<u64>()) {
        let d = if sym { Domain::sym(n).unwrap() } else { Domain::pm(n).unwrap() };
        let f = BooleanFunction::random(d, 0.5, &mut seeded(seed)).unwrap();
        let raw = f.to_raw();
        let text = serde_json::to_string(&raw).unwrap();
        prop_assert!(text.contains("\"bits\""));
        prop_assert_eq!(BooleanFunction::from_raw(&serde_json::from_str(&text).unwrap()).unwrap(), f);
    }

    #[test]
    fn degree_is_closed_under_complement(seed in any::<u64>()) {
        let d = Domain::sym(4).unwrap();
        let f = BooleanFunction::random(d, 0.3, &mut seeded(seed)).unwrap();
        prop_assert_eq!(polynomial_degree(&f).unwrap(), polynomial_degree(&f.complement()).unwrap());
    }

    #[test]
    fn cube_degree_bounds_lifted_degree(seed in any::<u64>()) {
        // lifting along k disjoint transpositions cannot raise the degree
        let d = Domain::sym(4).unwrap();
        let f = BooleanFunction::random(d, 0.5, &mut seeded(seed)).unwrap();
        let base = Element::Sym(Permutation::identity(4));
        let g = lift_to_cube(&f, &base, &[FlipSpec(1, 2), FlipSpec(3, 4)]).unwrap();
        prop_assert!(cube_degree(&g) <= polynomial_degree(&f).unwrap());
    }

    #[test]
    fn sensitivity_counts_flips(table in any::<u16>(), point in 0u64..16) {
        let g = CubeFunction::new(4, table as u64).unwrap();
        let s = sensitivity_at(&g, point).unwrap();
        let by_hand = (0..4).filter(|i| g.value(point ^ 1 << i) != g.value(point)).count();
        prop_assert_eq!(s, by_hand);
    }
}

#[test]
fn scan_examples() {
    assert_eq!(degree2_sensitivity_scan(2, 2).unwrap().unwrap().table(), 0b0110);
    assert!(degree2_sensitivity_scan(3, 3).unwrap().is_some());
    assert!(degree2_sensitivity_scan(4, 4).unwrap().is_none());
    assert!(matches!(degree2_sensitivity_scan(6, 1), Err(Error::Capacity(_))));
    assert!(matches!(degree2_sensitivity_scan(3, 4), Err(Error::Usage(_))));
}

#[test]
fn cosets_have_degree_equal_to_size() {
    for (d, c) in [
        (Domain::sym(4).unwrap(), Certificate::sym([(1, 1), (2, 3)])),
        (Domain::pm(4).unwrap(), Certificate::pm([(1, 2), (3, 4)])),
        (Domain::sym(5).unwrap(), Certificate::sym([(5, 1)])),
    ] {
        let f = BooleanFunction::coset(d, &c).unwrap();
        assert_eq!(polynomial_degree(&f).unwrap(), c.len());
    }
}

#[test]
fn restriction_of_coset_family() {
    for kind in [Kind::Sym, Kind::Pm] {
        let d = Domain::new(kind, 4).unwrap();
        let anchor = last_pair(d);
        let other = match kind {
            Kind::Sym => Pair(1, 2),
            Kind::Pm => Pair(1, 2),
        };
        let f = BooleanFunction::coset(d, &Certificate::from_pairs([anchor, other])).unwrap();
        let r = restrict_to_coset(&f, anchor).unwrap();
        assert_eq!(r.domain(), d.reduced().unwrap());
        assert!(degree_at_most(&r, 1).unwrap());
        assert_eq!(polynomial_degree(&r).unwrap(), 1);
    }
}
