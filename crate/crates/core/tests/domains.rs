use proptest::prelude::*;
use twocoset::domains::{ElementRepr, FamilyFile};
use twocoset::{Domain, Element, Kind, PerfectMatching, Permutation, Space};

fn domain_strategy() -> impl Strategy<Value = Domain> {
    prop_oneof![(1usize..=8).prop_map(|n| Domain::sym(n).unwrap()), (1usize..=6).prop_map(|n| Domain::pm(n).unwrap()),]
}

proptest! {
    #[test]
    fn unrank_then_rank(d in domain_strategy(), seed in any::<u64>()) {
        let r = seed % d.size();
        let x = d.unrank(r).unwrap();
        prop_assert_eq!(d.rank(&x).unwrap(), r);
        prop_assert!(d.contains(&x));
    }

    #[test]
    fn intersection_is_symmetric(n in 2usize..=6, a in any::<u64>(), b in any::<u64>()) {
        for d in [Domain::sym(n).unwrap(), Domain::pm(n).unwrap()] {
            let x = d.unrank(a % d.size()).unwrap();
            let y = d.unrank(b % d.size()).unwrap();
            let k = x.intersection_size(&y).unwrap();
            prop_assert_eq!(k, y.intersection_size(&x).unwrap());
            prop_assert_eq!(x.intersection_size(&x).unwrap(), n);
            let shared = x.pairs().iter().filter(|&&p| y.has_pair(p)).count();
            prop_assert_eq!(k, shared);
        }
    }

    #[test]
    fn family_file_roundtrip(n in 1usize..=5, picks in prop::collection::vec(any::<u64>(), 0..6)) {
        for d in [Domain::sym(n).unwrap(), Domain::pm(n).unwrap()] {
            let members: Vec<Element> = picks.iter().map(|r| d.unrank(r % d.size()).unwrap()).collect();
            let file = FamilyFile::new(d, &members);
            let back = FamilyFile::parse(&file.to_json()).unwrap();
            prop_assert_eq!(back.members().unwrap(), members);
        }
    }
}

#[test]
fn enumeration_is_lexicographic() {
    for d in [Domain::sym(5).unwrap(), Domain::pm(4).unwrap()] {
        let space = Space::of(d).unwrap();
        assert!(space.elements().windows(2).all(|w| w[0].map() < w[1].map()));
    }
}

#[test]
fn family_file_format() {
    let d = Domain::pm(2).unwrap();
    let m = Element::Pm(PerfectMatching::from_edges(2, &[(3, 1), (4, 2)]).unwrap());
    assert_eq!(FamilyFile::new(d, &[m]).to_json(), r#"{"kind":"pm","n":2,"elements":[[[1,3],[2,4]]]}"#);
    let p = Element::Sym(Permutation::new(vec![2, 1, 3]).unwrap());
    assert_eq!(ElementRepr::of(&p), ElementRepr::Images(vec![2, 1, 3]));
    assert!(FamilyFile::parse(r#"{"kind":"sym","n":3,"elements":[[1,1,3]]}"#).unwrap().members().is_err());
    assert!(FamilyFile::parse(r#"{"kind":"xx","n":3,"elements":[]}"#).is_err());
    assert_eq!("pm".parse::<Kind>().unwrap(), Kind::Pm);
}
