use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;

use super::residue::{FFMat, FFPoly, PrimeIdealRep};
use crate::elliptic::{char_poly, CharPoly};
use crate::exactalg::{field_make, totient, CycloNum, Field};
use crate::hermitian::MatE;
use crate::Result;

/// Whether every `σ_a` fixing `Q(ζ_m)` (so `a ≡ 1 mod m`) fixes each
/// primitive `n`-th root of unity, i.e. whether the repeated root of
/// `(t - λ)^2 (t - λ^{-2})` is forced to stay put when the coefficients are
/// fixed.
fn galois_fixed(n: u64, m: u64) -> bool {
    let l = m.lcm(&n);
    let mut a = 1;
    while a < l {
        if a.gcd(&l) == 1 && a % n != 1 % n {
            return false;
        }
        a += m;
    }
    true
}

/// Every monic `(t - λ)^2 (t - λ^{-2})` with `λ` a root of unity, `λ^3 ≠ 1`,
/// `φ(ord λ) ≤ 3 φ(m)`, and coefficients in `Q(ζ_m)`. Ordered by the order
/// of `λ` and then by its exponent.
pub fn candidate_reflection_polys(field: &Field) -> Vec<CharPoly> {
    let m = u64::from(field.conductor());
    let bound = 3 * totient(m);
    let n_max = 2 * bound * bound;
    let mut out: Vec<CharPoly> = Vec::new();
    for n in 1..=n_max {
        if totient(n) > bound || !galois_fixed(n, m) {
            continue;
        }
        let l = m.lcm(&n) as u32;
        let big = field_make(l).expect("conductor at least m");
        for k in 0..n {
            if k.gcd(&n) != 1 || (3 * k) % n == 0 {
                continue;
            }
            let lambda = CycloNum::zeta_pow(&big, (k * (u64::from(l) / n)) as i64);
            let other = lambda.pow(2).inv().expect("roots of unity are invertible");
            let cp = CharPoly::from_roots(&lambda, &lambda, &other);
            let restricted = (
                cp.c0.restrict(field),
                cp.c1.restrict(field),
                cp.c2.restrict(field),
            );
            if let (Some(c0), Some(c1), Some(c2)) = restricted {
                let cp = CharPoly { c0, c1, c2 };
                if cp.is_integral() && !out.contains(&cp) {
                    out.push(cp);
                }
            }
        }
    }
    out
}

/// `(t - 1)^3` over `Q(ζ_m)`.
pub fn identity_poly(field: &Field) -> CharPoly {
    char_poly(&MatE::identity(field))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub pass: bool,
    pub tau_charpoly: FFPoly,
    pub collides_with_identity: bool,
    /// Indices into the candidate list whose reduction equals that of `τ`.
    pub collisions: Vec<usize>,
}

/// Compare the reduced characteristic polynomial of `τ` with the reduction
/// of `(t - 1)^3` and of every candidate.
pub fn separation_test(tau: &MatE, rep: &PrimeIdealRep, candidates: &[CharPoly]) -> Result<SeparationReport> {
    let tau_charpoly = rep.charpoly_mod(tau)?;
    let collides_with_identity = rep.reduce_poly(&identity_poly(tau.field()))? == tau_charpoly;
    let mut collisions = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if rep.reduce_poly(c)? == tau_charpoly {
            collisions.push(i);
        }
    }
    Ok(SeparationReport {
        pass: !collides_with_identity && collisions.is_empty(),
        tau_charpoly,
        collides_with_identity,
        collisions,
    })
}

/// Independent check over the residue field: the image of `τ` is not the
/// identity and its characteristic polynomial has no repeated root.
pub fn residue_recheck(tau: &MatE, rep: &PrimeIdealRep) -> Result<bool> {
    let img: FFMat = rep.reduce_mat(tau)?;
    let nontrivial = img != FFMat::identity(rep);
    let disc = img.char_poly(rep).cubic_discriminant(rep);
    Ok(nontrivial && !disc.is_zero())
}

/// `|SL_3(F_Q)| = Q^3 (Q^3 - 1)(Q^2 - 1)` with `Q = q^f`.
pub fn sl3_order(q: u64, f: u32) -> BigUint {
    let big_q = BigUint::from(q).pow(f);
    let q2 = &big_q * &big_q;
    let q3 = &q2 * &big_q;
    &q3 * (&q3 - 1u32) * (q2 - 1u32)
}
