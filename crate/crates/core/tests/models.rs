use num_bigint::BigInt;
use vsasm_core::amt::{amt_count, gf_antisym, gf_brute, gf_operator};
use vsasm_core::identities::{verify_catalogue, verify_identity};
use vsasm_core::involutions::{verify, System};
use vsasm_core::lattice::{specialized_det, tiling_count, unrefined_det, Interpretation};
use vsasm_core::Error;

#[test]
fn general_bottom_rows_agree() {
    for bottom in [vec![0, 1], vec![-1, 3], vec![0, 1, 2], vec![1, 2, 5]] {
        let b = gf_brute(&bottom).unwrap();
        assert_eq!(gf_operator(&bottom).unwrap(), b, "{bottom:?}");
        assert_eq!(gf_antisym(&bottom).unwrap(), b, "{bottom:?}");
    }
}

#[test]
fn arrowed_triangle_counts() {
    // a lone entry is free and takes any of the three decorations
    assert_eq!(amt_count(&[0, 2]).unwrap(), BigInt::from(45));
    assert_eq!(amt_count(&[0]).unwrap(), BigInt::from(3));
}

#[test]
fn unrefined_counts_against_tilings() {
    for n in 1..=5 {
        let (families, signed) = tiling_count(n);
        assert_eq!(BigInt::from(families), unrefined_det(n));
        assert_eq!(families as i64, signed);
    }
}

#[test]
fn determinant_routes_agree_numerically() {
    for n in 1..=6 {
        // integer evaluation needs every X_i to be a unit
        let mut point: Vec<BigInt> = [2, -3, 5].into_iter().map(BigInt::from).collect();
        point.extend((0..n).map(|i| BigInt::from(if i % 2 == 0 { -1 } else { 1 })));
        let jt4 = specialized_det(Interpretation::Jt4, n, &point).unwrap();
        for kind in [Interpretation::I1, Interpretation::I2, Interpretation::I3] {
            assert_eq!(specialized_det(kind, n, &point).unwrap(), jt4, "{kind:?} n={n}");
        }
    }
}

#[test]
fn every_involution_system_passes_small_bounds() {
    for (system, bounds) in [
        (System::Ba, vec![6, 3]),
        (System::Sum2, vec![4, 4]),
        (System::Signless, vec![4, 2]),
        (System::Touching, vec![2]),
        (System::Counterpart, vec![2, 2]),
    ] {
        for r in verify(system, &bounds).unwrap() {
            assert!(r.passed(), "{system}: {:?}", r.failures);
        }
    }
    assert!(matches!(verify(System::Ba, &[3]), Err(Error::Parse(_))));
}

#[test]
fn identity_lookups() {
    assert!(verify_identity("id_sum1", &[5, 2]).unwrap().passed());
    assert!(matches!(verify_identity("nope", &[1]), Err(Error::Parse(_))));
    assert!(matches!(verify_identity("cor_1", &[9]), Err(Error::Unsupported(_))));
    let only = verify_catalogue(Some("neg_h")).unwrap();
    assert!(only.iter().all(|c| c.name == "neg_h" && c.passed()));
}
