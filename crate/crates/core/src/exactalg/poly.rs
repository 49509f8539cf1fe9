//! Dense univariate polynomials over `Z` and `Q`, coefficients stored
//! constant term first.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim_int(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn trim_rat(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact quotient of `num` by a monic `den`. Returns `None` if the division
/// leaves a remainder.
pub fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = divrem_monic(num, den);
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Quotient and remainder of `num` by a monic `den` over `Z`.
pub fn divrem_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let d = den.len() - 1;
    debug_assert!(den[d].is_one());
    let mut r = num.to_vec();
    if r.len() <= d {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - d];
    for i in (d..r.len()).rev() {
        let c = core::mem::take(&mut r[i]);
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den[..d].iter().enumerate() {
            if !dj.is_zero() {
                r[i - d + j] -= &c * dj;
            }
        }
        q[i - d] = c;
    }
    r.truncate(d);
    (q, r)
}

/// Reduce `v` in place modulo a monic `modulus`, leaving exactly
/// `deg(modulus)` coefficients.
pub fn reduce_monic_in_place(v: &mut Vec<BigInt>, modulus: &[BigInt]) {
    let d = modulus.len() - 1;
    for i in (d..v.len()).rev() {
        let c = core::mem::take(&mut v[i]);
        if c.is_zero() {
            continue;
        }
        for (j, mj) in modulus[..d].iter().enumerate() {
            if !mj.is_zero() {
                v[i - d + j] -= &c * mj;
            }
        }
    }
    v.resize(d, BigInt::zero());
}

pub fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Proper divisors `d < n` of `n`, ascending.
pub(crate) fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `m`-th cyclotomic polynomial, obtained by dividing `t^m - 1` by
/// `Φ_d` for every proper divisor `d` of `m`.
pub fn cyclotomic(m: u32) -> Vec<BigInt> {
    let divs = divisors(m);
    let mut table: Vec<(u32, Vec<BigInt>)> = Vec::with_capacity(divs.len());
    for &n in &divs {
        let mut p = vec![BigInt::zero(); n as usize + 1];
        p[0] = -BigInt::one();
        p[n as usize] = BigInt::one();
        for (d, phi_d) in &table {
            if n % d == 0 {
                p = div_exact_monic(&p, phi_d).expect("Φ_d divides t^n - 1");
            }
        }
        trim_int(&mut p);
        table.push((n, p));
    }
    table.pop().expect("m has at least one divisor").1
}

pub(crate) fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_rat(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = &r[i] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    r.truncate(db);
    trim_rat(&mut r);
    (q, r)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim_rat(&mut out);
    out
}

/// Inverse of `a` modulo the polynomial `modulus` over `Q` by the extended
/// Euclidean algorithm. `None` when `gcd(a, modulus) != 1`.
pub(crate) fn rat_inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim_rat(&mut r1);
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let (_, mut inv) = rat_divrem(&s0.iter().map(|x| x * &c).collect::<Vec<_>>(), modulus);
    trim_rat(&mut inv);
    Some(inv)
}

/// Common denominator form: integer numerators over a positive denominator,
/// reduced so that the content of the numerators is coprime to it.
pub(crate) fn common_denominator(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (num, den)
}

pub(crate) fn abs_gcd(values: &[BigInt], start: &BigInt) -> BigInt {
    let mut g = start.abs();
    for v in values {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    g
}
