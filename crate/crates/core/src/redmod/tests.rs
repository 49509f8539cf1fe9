use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::*;
use crate::elliptic::{char_poly, CharPoly};
use crate::exactalg::{field_make, totient, CycloNum, Field};
use crate::gmp2::{g_p, is_prime};
use crate::hermitian::MatE;
use crate::Error;

fn random_mat(field: &Field, rng: &mut ChaCha8Rng) -> MatE {
    let d = field.degree();
    MatE::from_fn(|_, _| {
        let coeffs: Vec<num_bigint::BigInt> =
            (0..d).map(|_| num_bigint::BigInt::from(rng.next_u64() % 7) - 3).collect();
        CycloNum::from_int_poly(field, coeffs, 1.into())
    })
}

#[test]
fn split_five_eleven() {
    let rep = split_prime(5, 11).unwrap();
    assert_eq!(rep.residue_degree(), 1);
    assert_eq!(rep.num_factors(), 4);
    // roots of Φ_5 over Z/11 by exhaustive search
    let roots: Vec<u64> = (0..11u64).filter(|x| (1 + x + x * x + x * x * x + x * x * x * x) % 11 == 0).collect();
    assert_eq!(roots, [3, 4, 5, 9]);
    // least factor read from the constant term is t - 9 = [2, 1]
    assert_eq!(rep.factor_poly(), [2, 1]);
    assert_eq!(rep.zeta(), rep.from_i64(9));
}

#[test]
fn split_five_two_and_ramified() {
    let rep = split_prime(5, 2).unwrap();
    assert_eq!(rep.residue_degree(), 4);
    assert_eq!(rep.num_factors(), 1);
    assert_eq!(rep.factor_poly(), [1, 1, 1, 1, 1]);
    assert_eq!(split_prime(5, 5), Err(Error::RamifiedPrime { q: 5, m: 5 }));
    assert_eq!(split_prime(5, 9), Err(Error::NotPrime(9)));
}

#[test]
fn splitting_law() {
    for m in 3..=100u32 {
        let phi = totient(u64::from(m)) as usize;
        for q in (2..=100u64).filter(|&q| is_prime(q) && u64::from(m) % q != 0) {
            let rep = split_prime(m, q).unwrap();
            assert_eq!(rep.residue_degree(), residue_degree(q, m));
            assert_eq!(rep.residue_degree() as usize * rep.num_factors(), phi, "m={m} q={q}");
            assert_eq!(rep.factor_poly().len(), rep.residue_degree() as usize + 1);
        }
    }
}

#[test]
fn zeta_has_full_order_at_split_primes() {
    for (m, q) in [(5u32, 11u64), (7, 29), (9, 19), (12, 13), (15, 31)] {
        let rep = split_prime(m, q).unwrap();
        assert_eq!(rep.residue_degree(), 1);
        assert_eq!(rep.mult_order(&rep.zeta()), Some(u64::from(m)));
    }
}

#[test]
fn reduce_g5() {
    let k = field_make(5).unwrap();
    let rep = split_prime(5, 11).unwrap();
    assert_eq!(rep.reduce_mat(&MatE::identity(&k)).unwrap(), FFMat::identity(&rep));
    let g = g_p(5, &k).unwrap();
    let img = rep.reduce_mat(&g).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                assert!(img.entry(i, j).is_zero());
            }
        }
    }
    assert_eq!(rep.mult_order(img.entry(0, 0)), Some(5));
    assert_eq!(rep.mult_order(img.entry(1, 1)), Some(5));
    assert_eq!(img.pow(5, &rep), FFMat::identity(&rep));
    assert_ne!(img, FFMat::identity(&rep));
    // three distinct roots, one of them 1
    let cp = rep.charpoly_mod(&g).unwrap();
    let roots = cp.root_multiplicities(&rep, 1000).unwrap();
    assert_eq!(roots.len(), 3);
    assert!(roots.iter().all(|(_, k)| *k == 1));
    assert!(roots.iter().any(|(x, _)| *x == rep.one()));
}

#[test]
fn identity_charpoly_is_cube() {
    let k = field_make(7).unwrap();
    let rep = split_prime(7, 29).unwrap();
    assert_eq!(
        rep.charpoly_mod(&MatE::identity(&k)).unwrap(),
        rep.cube_of_linear(&rep.one())
    );
}

#[test]
fn denominators_prime_to_q_are_inverted() {
    let k = field_make(5).unwrap();
    let rep = split_prime(5, 11).unwrap();
    let half = CycloNum::from_rational(&k, &crate::exactalg::rat(1, 2));
    assert_eq!(rep.reduce(&half).unwrap(), rep.from_i64(6));
    let rep2 = split_prime(5, 2).unwrap();
    assert_eq!(rep2.reduce(&half), Err(Error::NeedsDenominator(2)));
    let k7 = field_make(7).unwrap();
    assert!(matches!(rep.reduce(&CycloNum::one(&k7)), Err(Error::FieldMismatch { .. })));
}

#[test]
fn reduction_is_multiplicative_and_commutes_with_charpoly() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (m, q) in [(5u32, 11u64), (5, 2), (9, 2), (7, 13), (12, 5)] {
        let k = field_make(m).unwrap();
        let rep = split_prime(m, q).unwrap();
        for _ in 0..20 {
            let a = random_mat(&k, &mut rng);
            let b = random_mat(&k, &mut rng);
            let lhs = rep.reduce_mat(&a.mul(&b)).unwrap();
            let rhs = rep.reduce_mat(&a).unwrap().mul(&rep.reduce_mat(&b).unwrap(), &rep);
            assert_eq!(lhs, rhs);
            let sum = rep.reduce_mat(&a.add(&b)).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let expect = rep.add(
                        rep.reduce_mat(&a).unwrap().entry(i, j),
                        rep.reduce_mat(&b).unwrap().entry(i, j),
                    );
                    assert_eq!(*sum.entry(i, j), expect);
                }
            }
            assert_eq!(rep.charpoly_mod(&a).unwrap(), rep.reduce_poly(&char_poly(&a)).unwrap());
        }
    }
}

fn lambda_poly(field: &Field, lambda: &CycloNum) -> CharPoly {
    let other = lambda.pow(2).inv().unwrap();
    let cp = CharPoly::from_roots(lambda, lambda, &other);
    assert_eq!(cp.field().conductor(), field.conductor());
    cp
}

#[test]
fn candidates_for_five() {
    let k = field_make(5).unwrap();
    let c = candidate_reflection_polys(&k);
    assert_eq!(c.len(), 9);
    let minus_one = CycloNum::from_int(&k, -1);
    assert!(c.contains(&lambda_poly(&k, &minus_one)));
    assert!(c.contains(&lambda_poly(&k, &CycloNum::zeta(&k))));
    assert!(!c.contains(&identity_poly(&k)));
    assert!(c.iter().all(|p| p.c0 == CycloNum::from_int(&k, -1)));
}

#[test]
fn candidates_for_nine() {
    let k = field_make(9).unwrap();
    let c = candidate_reflection_polys(&k);
    assert_eq!(c.len(), 15);
    let omega = CycloNum::zeta_pow(&k, 3);
    let scalar = CharPoly::from_roots(&omega, &omega, &omega);
    assert!(!c.contains(&scalar));
}

#[test]
fn separation_examples() {
    let k = field_make(5).unwrap();
    let cands = candidate_reflection_polys(&k);
    for q in [2u64, 3, 7, 11, 13] {
        let rep = split_prime(5, q).unwrap();
        let id = separation_test(&MatE::identity(&k), &rep, &cands).unwrap();
        assert!(!id.pass && id.collides_with_identity);
        let pr = MatE::from_ints(&k, [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        let r = separation_test(&pr, &rep, &cands).unwrap();
        assert!(!r.pass);
        assert!(!r.collisions.is_empty());
    }
    let g5 = g_p(5, &k).unwrap();
    let least = (5..100u64)
        .filter(|&q| is_prime(q) && q != 5)
        .find(|&q| separation_test(&g5, &split_prime(5, q).unwrap(), &cands).unwrap().pass);
    assert_eq!(least, Some(7));
    let rep = split_prime(5, 7).unwrap();
    assert!(residue_recheck(&g5, &rep).unwrap());
}

#[test]
fn sl3_orders() {
    assert_eq!(sl3_order(2, 1), BigUint::from(168u32));
    assert_eq!(sl3_order(3, 1), BigUint::from(5616u32));
    let mut prev = BigUint::from(0u32);
    for (q, f) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)] {
        let o = sl3_order(q, f);
        assert!(o > prev);
        prev = o;
    }
}

fn brute_force_sl3(q: u64) -> u64 {
    let total = q.pow(9);
    let mut count = 0;
    for idx in 0..total {
        let mut e = [0u64; 9];
        let mut r = idx;
        for x in e.iter_mut() {
            *x = r % q;
            r /= q;
        }
        let det = e[0] * (e[4] * e[8] + (q - e[5]) * e[7] % q)
            + e[1] * (e[5] * e[6] + (q - e[3]) * e[8] % q)
            + e[2] * (e[3] * e[7] + (q - e[4]) * e[6] % q);
        if det % q == 1 {
            count += 1;
        }
    }
    count
}

#[test]
fn sl3_order_matches_enumeration() {
    assert_eq!(BigUint::from(brute_force_sl3(2)), sl3_order(2, 1));
    assert_eq!(BigUint::from(brute_force_sl3(3)), sl3_order(3, 1));
}

#[test]
fn discriminant_detects_repeated_roots() {
    let rep = split_prime(5, 11).unwrap();
    let cube = rep.cube_of_linear(&rep.from_i64(4));
    assert!(cube.cubic_discriminant(&rep).is_zero());
    let rows = vec![vec![5], vec![0], vec![10], vec![1]]; // t^3 - t + 5
    let p = FFPoly::from_rows(&rows, &rep);
    let mults = p.root_multiplicities(&rep, 100).unwrap();
    let repeated = mults.iter().any(|(_, k)| *k > 1);
    assert_eq!(repeated, p.cubic_discriminant(&rep).is_zero());
}
