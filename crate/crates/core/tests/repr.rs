use proptest::prelude::*;
use twocoset::boolfn::{polynomial_degree, BooleanFunction};
use twocoset::repr::{
    component_dimension, isotypic_decomposition, partitions_of, spectral_degree, standard_tableaux, Partition,
    YoungTableau,
};
use twocoset::sample::seeded;
use twocoset::{Domain, Kind};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degrees_agree(seed in any::<u64>(), pm in any::<bool>()) {
        let d = if pm { Domain::pm(3).unwrap() } else { Domain::sym(4).unwrap() };
        let f = BooleanFunction::random(d, 0.5, &mut seeded(seed)).unwrap();
        prop_assert_eq!(spectral_degree(&f).unwrap(), polynomial_degree(&f).unwrap());
    }

    #[test]
    fn parseval(seed in any::<u64>()) {
        let d = Domain::sym(4).unwrap();
        let f = BooleanFunction::random(d, 0.5, &mut seeded(seed)).unwrap();
        let parts = isotypic_decomposition(&f).unwrap();
        let total: twocoset::linalg::Rational = parts.iter().map(|c| c.norm_sq.clone()).sum();
        prop_assert_eq!(total, twocoset::linalg::Rational::from_integer(f.weight().into()));
    }
}

#[test]
fn dimensions_sum_to_domain_size() {
    for n in 1..=6 {
        let parts = partitions_of(n);
        let sym: usize = parts.iter().map(|l| component_dimension(Kind::Sym, l)).sum();
        let pm: usize = parts.iter().map(|l| component_dimension(Kind::Pm, l)).sum();
        assert_eq!(sym as u64, Domain::sym(n).unwrap().size());
        assert_eq!(pm as u64, Domain::pm(n).unwrap().size());
    }
}

#[test]
fn standard_tableau_counts() {
    let counts: Vec<usize> = partitions_of(5).iter().map(|l| standard_tableaux(l).len()).collect();
    assert_eq!(counts, vec![1, 4, 5, 6, 5, 4, 1]);
    let l: Partition = "(3,1)".parse().unwrap();
    assert_eq!(l.to_string(), "(3,1)");
    assert!(standard_tableaux(&l).iter().all(YoungTableau::is_standard));
}

#[test]
fn report_format() {
    let d = Domain::sym(3).unwrap();
    let f = BooleanFunction::constant(d, true).unwrap();
    let parts = isotypic_decomposition(&f).unwrap();
    let json = serde_json::to_string(&parts[0].report()).unwrap();
    assert_eq!(json, r#"{"lambda":[3],"norm_sq":"6","dimension":1}"#);
    assert!(parts[1..].iter().all(|c| c.is_zero()));
}
