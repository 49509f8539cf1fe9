use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{CycloNum, Field, Precision};
use crate::{Error, Result};

/// Power basis `1, θ, …, θ^{d-1}` of `Z[θ]`, `θ = ζ + ζ^{-1}`, the ring of
/// integers of the maximal totally real subfield.
pub fn real_subfield_basis(field: &Field) -> Vec<CycloNum> {
    let z = CycloNum::zeta(field);
    let theta = &z + &z.conj();
    let mut out = Vec::with_capacity(field.real_degree());
    let mut acc = CycloNum::one(field);
    for _ in 0..field.real_degree() {
        out.push(acc.clone());
        acc = &acc * &theta;
    }
    out
}

/// Coefficient values in search order: 0, 1, -1, 2, -2, …
fn search_values(radius: i64) -> Vec<i64> {
    let mut v = vec![0];
    for r in 1..=radius {
        v.push(r);
        v.push(-r);
    }
    v
}

/// Find `β` in the real subfield's ring of integers that is negative at the
/// identity real place and positive at every other real place.
///
/// Candidates are integer combinations of [`real_subfield_basis`] with
/// coefficients bounded by `search_radius`. Shells of increasing maximal
/// coefficient are searched in turn; within a shell, tuples are ordered
/// lexicographically (first coordinate most significant) with each
/// coordinate running through `0, 1, -1, 2, -2, …`.
pub fn find_beta(field: &Field, search_radius: u32, prec: Precision) -> Result<CycloNum> {
    let d = field.real_degree();
    if d < 2 {
        return Err(Error::NotCocompact(field.conductor()));
    }
    let basis = real_subfield_basis(field);
    let places = field.real_places();
    for r in 1..=i64::from(search_radius) {
        let vals = search_values(r);
        let mut idx = vec![0usize; d];
        loop {
            let coeffs: Vec<i64> = idx.iter().map(|&i| vals[i]).collect();
            if coeffs.iter().any(|c| c.abs() == r) {
                let beta = combine(field, &basis, &coeffs);
                if sign_pattern_ok(&beta, &places, prec)? {
                    return Ok(beta);
                }
            }
            // odometer, last coordinate fastest
            let mut pos = d;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < vals.len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    Err(Error::BetaNotFound(search_radius))
}

fn combine(field: &Field, basis: &[CycloNum], coeffs: &[i64]) -> CycloNum {
    let mut acc = CycloNum::zero(field);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.scale(&c.into());
        }
    }
    acc
}

fn sign_pattern_ok(beta: &CycloNum, places: &[u32], prec: Precision) -> Result<bool> {
    for &a in places {
        let want = if a == 1 { Ordering::Less } else { Ordering::Greater };
        if beta.real_sign_at(a, prec)? != want {
            return Ok(false);
        }
    }
    Ok(true)
}
