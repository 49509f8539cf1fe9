use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigUint;
use num_rational::BigRational;
use sha2::{Digest, Sha256};

use crate::elliptic::{CharPoly, ElliptTag};

pub const TORSION_FREE_NOTE: &str = "asserted (Minkowski), guard satisfied";
pub const SURJECTIVITY_NOTE: &str = "trusted (Strong Approximation); quotient_order is the bound realized under surjectivity";
pub const VERDICT_PASS: &str = "PASS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaceSignature {
    pub place: u32,
    pub pos: u32,
    pub neg: u32,
}

/// Conditions under which the congruence kernel is expected to be
/// torsion-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub q_gt_3: bool,
    pub q_coprime_to_m: bool,
    pub unramified: bool,
}

impl Guards {
    pub fn for_prime(q: u64, m: u32) -> Self {
        let coprime = u64::from(m) % q != 0;
        Self {
            q_gt_3: q > 3,
            q_coprime_to_m: coprime,
            // q is ramified in Q(ζ_m) exactly when it divides m
            unramified: coprime,
        }
    }

    pub fn all(&self) -> bool {
        self.q_gt_3 && self.q_coprime_to_m && self.unramified
    }
}

/// Everything needed to re-derive one congruence quotient in which the
/// image of `τ = g_p` is nontrivial and separated from every reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub p: u32,
    pub m: u32,
    pub search_radius: u32,
    /// Degree of the totally real subfield `k`; the lattice is cocompact
    /// when this is at least 2.
    pub real_degree: u32,
    /// Power-basis coordinates of `β` in `Q(ζ_m)`.
    pub beta: Vec<BigRational>,
    pub hermitian_signatures: Vec<PlaceSignature>,
    pub tau: [[Vec<BigRational>; 3]; 3],
    pub tau_order: u64,
    pub tau_class: ElliptTag,
    pub q: u64,
    pub f: u32,
    pub factor_poly: Vec<u64>,
    /// Coefficients of the reduced characteristic polynomial, constant term
    /// first, each a length-`f` vector over `Z/q`.
    pub tau_charpoly_mod: Vec<Vec<u64>>,
    pub excluded_candidates: usize,
    pub candidates_digest: String,
    pub guards: Guards,
    pub torsion_free: String,
    pub surjectivity: String,
    pub quotient_order: BigUint,
    pub verdict: String,
}

/// `"n/d"` with `d > 0`, always including the denominator.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Hex SHA-256 of the canonical text form of a candidate list: one line per
/// polynomial, coefficients `c0, c1, c2` each written as a bracketed list
/// of `n/d` coordinates.
pub fn candidates_digest(candidates: &[CharPoly]) -> String {
    let mut text = String::new();
    for cp in candidates {
        let parts: Vec<String> = [&cp.c0, &cp.c1, &cp.c2]
            .iter()
            .map(|c| {
                let coords: Vec<String> = c.coeffs().iter().map(rational_string).collect();
                format!("[{}]", coords.join(","))
            })
            .collect();
        text.push_str(&parts.join(";"));
        text.push('\n');
    }
    let digest = Sha256::digest(text.as_bytes());
    let mut hex = String::with_capacity(64);
    for b in digest {
        let _ = write!(hex, "{b:02x}");
    }
    hex
}
