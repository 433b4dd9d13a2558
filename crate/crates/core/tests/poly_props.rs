mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert!(ring_axioms(&a, &b, &c).is_ok(), "{}", ring_axioms(&a, &b, &c).unwrap_err());
    }

    #[test]
    fn negative_degree_h((k, m) in h_params()) {
        let r = negative_h(k, m);
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn antisymmetrizer_alternates(f in poly(4, 2), swap in prop::sample::select(vec![(0, 1), (0, 2), (1, 2)])) {
        let r = antisymmetry(&f, swap);
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }

    #[test]
    fn determinant_methods_agree((n, entries) in matrix()) {
        let r = leibniz_bareiss(n, &entries);
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }
}
