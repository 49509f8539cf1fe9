use chyplat_core::exactalg::{field_make, CycloNum, Field};
use num_bigint::BigInt;
use proptest::prelude::*;

fn element(field: &Field, coeffs: &[i64], den: i64) -> CycloNum {
    let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
    CycloNum::from_int_poly(field, c, BigInt::from(den))
}

fn conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 12, 15])
}

fn pair() -> impl Strategy<Value = (u32, Vec<i64>, i64, Vec<i64>, i64)> {
    conductor().prop_flat_map(|m| {
        let d = field_make(m).unwrap().degree();
        (
            Just(m),
            prop::collection::vec(-5i64..=5, d),
            1i64..=4,
            prop::collection::vec(-5i64..=5, d),
            1i64..=4,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((m, a, da, b, db) in pair()) {
        let k = field_make(m).unwrap();
        let x = element(&k, &a, da);
        let y = element(&k, &b, db);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &x, &(&x * &x) + &(&y * &x));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
    }

    #[test]
    fn inverses((m, a, da, _b, _db) in pair()) {
        let k = field_make(m).unwrap();
        let x = element(&k, &a, da);
        if x.is_zero() {
            prop_assert!(x.inv().is_err());
        } else {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_involution((m, a, da, b, db) in pair()) {
        let k = field_make(m).unwrap();
        let x = element(&k, &a, da);
        let y = element(&k, &b, db);
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert!((&x * &x.conj()).is_real());
    }

    #[test]
    fn extension_round_trips((m, a, da, b, db) in pair()) {
        let k = field_make(m).unwrap();
        let big = field_make(m * 3).unwrap();
        let x = element(&k, &a, da);
        let y = element(&k, &b, db);
        let xe = x.extend(&big).unwrap();
        prop_assert_eq!(xe.restrict(&k), Some(x.clone()));
        prop_assert_eq!((&x * &y).extend(&big).unwrap(), &xe * &y.extend(&big).unwrap());
    }

    #[test]
    fn embeddings_are_multiplicative((m, a, da, b, db) in pair()) {
        let k = field_make(m).unwrap();
        let x = element(&k, &a, da);
        let y = element(&k, &b, db);
        for &place in k.embedding_exponents() {
            let prod = x.embed(place, 96).mul(&y.embed(place, 96));
            prop_assert!(prod.overlaps(&(&x * &y).embed(place, 96)));
            let sum = x.embed(place, 96).add(&y.embed(place, 96));
            prop_assert!(sum.overlaps(&(&x + &y).embed(place, 96)));
        }
    }
}

#[test]
fn embedding_radius_shrinks_with_precision() {
    let k = field_make(7).unwrap();
    let x = element(&k, &[1, -2, 3, 0, 1, 1], 3);
    let coarse = x.embed(1, 64);
    let fine = x.embed(1, 256);
    assert!(fine.radius() < coarse.radius());
    assert!(fine.radius() < 1e-60);
    assert!(coarse.overlaps(&fine));
}
