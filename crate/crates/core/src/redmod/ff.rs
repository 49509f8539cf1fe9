//! Polynomials over `Z/q` for a prime `q < 2^32`, and their factorization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub type Poly = Vec<u64>;

pub fn add(a: u64, b: u64, q: u64) -> u64 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

pub fn mul(a: u64, b: u64, q: u64) -> u64 {
    a * b % q
}

pub fn pow(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, q);
        }
        a = mul(a, a, q);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo the prime `q`.
pub fn inv(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    pow(a, q - 2, q)
}

pub fn trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub fn poly_add(a: &[u64], b: &[u64], q: u64) -> Poly {
    let mut r = vec![0; a.len().max(b.len())];
    for (i, x) in r.iter_mut().enumerate() {
        *x = add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), q);
    }
    trim(&mut r);
    r
}

pub fn poly_sub(a: &[u64], b: &[u64], q: u64) -> Poly {
    let mut r = vec![0; a.len().max(b.len())];
    for (i, x) in r.iter_mut().enumerate() {
        *x = sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), q);
    }
    trim(&mut r);
    r
}

pub fn poly_mul(a: &[u64], b: &[u64], q: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = add(r[i + j], mul(x, y, q), q);
        }
    }
    trim(&mut r);
    r
}

/// Quotient and remainder; `b` must be nonzero.
pub fn poly_divrem(a: &[u64], b: &[u64], q: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv(b[db], q);
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quo = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = mul(r[i], lead_inv, q);
        if c == 0 {
            continue;
        }
        quo[i - db] = c;
        for j in 0..=db {
            r[i - db + j] = sub(r[i - db + j], mul(c, b[j], q), q);
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut quo);
    (quo, r)
}

pub fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Poly {
    poly_divrem(a, b, q).1
}

pub fn make_monic(p: &[u64], q: u64) -> Poly {
    let mut p = p.to_vec();
    trim(&mut p);
    if let Some(&lead) = p.last() {
        let li = inv(lead, q);
        for c in p.iter_mut() {
            *c = mul(*c, li, q);
        }
    }
    p
}

/// Monic gcd (zero stays zero).
pub fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Poly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, q);
        a = b;
        b = r;
    }
    make_monic(&a, q)
}

pub fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], q: u64) -> Poly {
    poly_rem(&poly_mul(a, b, q), modulus, q)
}

/// `base^e mod modulus`.
pub fn poly_powmod(base: &[u64], e: &BigUint, modulus: &[u64], q: u64) -> Poly {
    let mut result: Poly = poly_rem(&[1], modulus, q);
    let base = poly_rem(base, modulus, q);
    for i in (0..e.bits()).rev() {
        result = poly_mulmod(&result, &result, modulus, q);
        if e.bit(i) {
            result = poly_mulmod(&result, &base, modulus, q);
        }
    }
    result
}

/// Lexicographic order on coefficient vectors read constant term first.
pub fn lex_cmp(a: &[u64], b: &[u64]) -> core::cmp::Ordering {
    a.iter().cmp(b.iter())
}

/// Distinct-degree factorization of a squarefree monic `f`: pairs
/// `(d, product of all irreducible factors of degree d)`.
pub fn distinct_degree(f: &[u64], q: u64) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    let mut rest = make_monic(f, q);
    let x: Poly = vec![0, 1];
    let qq = BigUint::from(q);
    let mut h = poly_rem(&x, &rest, q);
    let mut d = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = poly_powmod(&h, &qq, &rest, q);
        let g = poly_gcd(&rest, &poly_sub(&h, &x, q), q);
        if degree(&g).unwrap_or(0) > 0 {
            out.push((d, g.clone()));
            rest = poly_divrem(&rest, &g, q).0;
            h = poly_rem(&h, &rest, q);
        }
    }
    if let Some(dr) = degree(&rest) {
        if dr > 0 {
            out.push((dr, rest));
        }
    }
    out
}

fn random_poly(deg_below: usize, q: u64, rng: &mut ChaCha8Rng) -> Poly {
    let mut p: Poly = (0..deg_below).map(|_| rng.next_u64() % q).collect();
    trim(&mut p);
    p
}

/// Split a monic squarefree `f` whose irreducible factors all have degree
/// `d`. Cantor–Zassenhaus for odd `q`, the trace map for `q = 2`.
pub fn equal_degree(f: &[u64], d: usize, q: u64, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = degree(f).unwrap_or(0);
    if n == d {
        return vec![make_monic(f, q)];
    }
    let exponent = (BigUint::from(q).pow(d as u32) - 1u32) >> 1;
    loop {
        let a = random_poly(n, q, rng);
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = poly_mulmod(&t, &t, f, q);
                acc = poly_add(&acc, &t, q);
            }
            acc
        } else {
            poly_sub(&poly_powmod(&a, &exponent, f, q), &[1], q)
        };
        let g = poly_gcd(f, &b, q);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = poly_divrem(f, &g, q).0;
            let mut out = equal_degree(&g, d, q, rng);
            out.extend(equal_degree(&make_monic(&other, q), d, q, rng));
            return out;
        }
    }
}

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles, sorted by degree and then lexicographically.
pub fn factor_squarefree(f: &[u64], q: u64, seed: u64) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (d, part) in distinct_degree(f, q) {
        out.extend(equal_degree(&part, d, q, &mut rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(a, b)));
    out
}
