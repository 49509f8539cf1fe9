use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::certificate::{
    candidates_digest, Certificate, Guards, PlaceSignature, SURJECTIVITY_NOTE, TORSION_FREE_NOTE, VERDICT_PASS,
};
use crate::elliptic::{classify, default_cap, element_order, ElliptTag};
use crate::exactalg::{field_make, find_beta, CycloNum, Field, Precision};
use crate::gmp2::{g_p, is_prime};
use crate::hermitian::{build_h_beta, is_admissible, su_membership, HermForm, MatE};
use crate::redmod::{
    candidate_reflection_polys, ff, residue_degree, residue_recheck, separation_test, sl3_order, split_prime,
};
use crate::{Error, Result};

/// Conductor used for the prime `p`: `p` itself, or 9 for `p = 3` so that
/// the totally real subfield is not `Q`.
pub fn conductor_for(p: u32) -> u32 {
    if p == 3 {
        9
    } else {
        p
    }
}

fn check_prime_input(p: u32) -> Result<()> {
    if p == 2 {
        return Err(Error::PrimeTwoUnsupported);
    }
    if !is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    Ok(())
}

/// Build `H_β`, `τ = g_p`, the reflection candidates, and find the least
/// admissible prime `q ≤ max_prime` at which `τ` separates.
pub fn pipeline_certify(p: u32, max_prime: u64, search_radius: u32, prec: Precision) -> Result<Certificate> {
    check_prime_input(p)?;
    let m = conductor_for(p);
    let field = field_make(m)?;
    if field.real_degree() < 2 {
        return Err(Error::NotCocompact(m));
    }
    let beta = find_beta(&field, search_radius, prec)?;
    let h = build_h_beta(&beta)?;
    let report = is_admissible(&h, prec)?;
    if !report.admissible {
        return Err(Error::InvalidBeta);
    }
    let tau = g_p(p, &field)?;
    let tau_order = element_order(&tau, default_cap(m)).ok_or(Error::InfiniteOrder(default_cap(m)))?;
    let tau_class = classify(&tau, &h, default_cap(m), prec)?.tag();
    if tau_class != ElliptTag::RegularElliptic || tau_order != u64::from(p) {
        return Err(Error::InvalidInput(format!(
            "g_p has order {tau_order} and class {tau_class}"
        )));
    }
    let candidates = candidate_reflection_polys(&field);
    for q in 4..=max_prime {
        if !is_prime(q) || u64::from(m) % q == 0 {
            continue;
        }
        let rep = split_prime(m, q)?;
        let sep = separation_test(&tau, &rep, &candidates)?;
        if !sep.pass || !residue_recheck(&tau, &rep)? {
            continue;
        }
        return Ok(Certificate {
            p,
            m,
            search_radius,
            real_degree: field.real_degree() as u32,
            beta: beta.coeffs(),
            hermitian_signatures: report
                .signatures
                .iter()
                .map(|(place, s)| PlaceSignature {
                    place: *place,
                    pos: s.pos,
                    neg: s.neg,
                })
                .collect(),
            tau: tau.coeff_rows(),
            tau_order,
            tau_class,
            q,
            f: rep.residue_degree(),
            factor_poly: rep.factor_poly().to_vec(),
            tau_charpoly_mod: sep.tau_charpoly.to_rows(&rep),
            excluded_candidates: candidates.len(),
            candidates_digest: candidates_digest(&candidates),
            guards: Guards::for_prime(q, m),
            torsion_free: TORSION_FREE_NOTE.to_string(),
            surjectivity: SURJECTIVITY_NOTE.to_string(),
            quotient_order: sl3_order(q, rep.residue_degree()),
            verdict: VERDICT_PASS.to_string(),
        });
    }
    Err(Error::SearchExhausted(max_prime))
}

/// The first check a certificate failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub stage: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub failure: Option<VerifyFailure>,
}

impl VerifyOutcome {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }
}

fn fail<T>(stage: &'static str, detail: impl Into<String>) -> core::result::Result<T, VerifyFailure> {
    Err(VerifyFailure {
        stage,
        detail: detail.into(),
    })
}

fn ensure(cond: bool, stage: &'static str, detail: impl Into<String>) -> core::result::Result<(), VerifyFailure> {
    if cond {
        Ok(())
    } else {
        fail(stage, detail)
    }
}

fn lift<T>(stage: &'static str, r: Result<T>) -> core::result::Result<T, VerifyFailure> {
    r.map_err(|e| VerifyFailure {
        stage,
        detail: e.to_string(),
    })
}

/// Recompute every claim of `c` from its raw contents.
pub fn verify_certificate(c: &Certificate, prec: Precision) -> VerifyOutcome {
    VerifyOutcome {
        failure: verify_inner(c, prec).err(),
    }
}

fn verify_inner(c: &Certificate, prec: Precision) -> core::result::Result<(), VerifyFailure> {
    lift("prime", check_prime_input(c.p))?;
    ensure(c.m == conductor_for(c.p), "conductor", format!("expected m = {}", conductor_for(c.p)))?;
    let field = lift("conductor", field_make(c.m))?;
    ensure(
        field.real_degree() as u32 == c.real_degree && c.real_degree >= 2,
        "cocompactness",
        "totally real subfield degree",
    )?;

    let h = verify_form(c, &field, prec)?;

    ensure(c.beta.len() == field.degree(), "beta", "coordinate count")?;
    let canonical = lift("beta", find_beta(&field, c.search_radius, prec))?;
    ensure(canonical.coeffs() == c.beta, "beta", "differs from the canonical search result")?;

    let tau = matrix_from_coeffs(&field, &c.tau).ok_or(VerifyFailure {
        stage: "tau",
        detail: "malformed matrix".into(),
    })?;
    ensure(tau == lift("tau", g_p(c.p, &field))?, "tau", "not g_p")?;
    ensure(su_membership(&tau, &h), "tau", "not in SU(H)")?;
    let order = element_order(&tau, default_cap(c.m));
    ensure(order == Some(c.tau_order) && c.tau_order == u64::from(c.p), "tau order", format!("recomputed {order:?}"))?;
    let class = lift("tau class", classify(&tau, &h, default_cap(c.m), prec))?.tag();
    ensure(class == c.tau_class && class == ElliptTag::RegularElliptic, "tau class", class.as_str())?;

    ensure(is_prime(c.q) && c.q < 1 << 32, "guards", "q is not a prime below 2^32")?;
    let guards = Guards::for_prime(c.q, c.m);
    ensure(guards == c.guards && guards.all(), "guards", format!("{guards:?}"))?;
    ensure(c.torsion_free == TORSION_FREE_NOTE, "torsion-free note", c.torsion_free.clone())?;
    ensure(c.surjectivity == SURJECTIVITY_NOTE, "surjectivity note", c.surjectivity.clone())?;

    ensure(c.f == residue_degree(c.q, c.m), "residue degree", format!("f = {}", residue_degree(c.q, c.m)))?;
    let phi_mod: Vec<u64> = field
        .phi_poly()
        .iter()
        .map(|x| x.mod_floor(&BigInt::from(c.q)).to_u64().expect("residue fits"))
        .collect();
    ensure(
        c.factor_poly.len() == c.f as usize + 1
            && c.factor_poly.last() == Some(&1)
            && c.factor_poly.iter().all(|&x| x < c.q),
        "factor poly",
        "not a monic polynomial of degree f over Z/q",
    )?;
    ensure(
        ff::poly_rem(&phi_mod, &c.factor_poly, c.q).is_empty(),
        "factor poly",
        "does not divide the cyclotomic polynomial mod q",
    )?;
    let rep = lift("factor poly", split_prime(c.m, c.q))?;
    ensure(rep.factor_poly() == c.factor_poly.as_slice(), "factor poly", "not the least factor")?;

    let candidates = candidate_reflection_polys(&field);
    ensure(candidates.len() == c.excluded_candidates, "candidates", "count differs")?;
    ensure(candidates_digest(&candidates) == c.candidates_digest, "candidates", "digest differs")?;
    let sep = lift("separation", separation_test(&tau, &rep, &candidates))?;
    ensure(sep.tau_charpoly.to_rows(&rep) == c.tau_charpoly_mod, "separation", "reduced characteristic polynomial differs")?;
    ensure(sep.pass, "separation", format!("collisions {:?}", sep.collisions))?;
    ensure(lift("separation", residue_recheck(&tau, &rep))?, "separation", "residue recheck failed")?;

    ensure(c.quotient_order == sl3_order(c.q, c.f), "quotient order", "differs from |SL_3|")?;
    ensure(c.verdict == VERDICT_PASS, "verdict", c.verdict.clone())?;
    Ok(())
}

fn verify_form(c: &Certificate, field: &Field, prec: Precision) -> core::result::Result<HermForm, VerifyFailure> {
    let stage = "sign check";
    let beta = CycloNum::from_coeffs(field, &c.beta);
    let h = build_h_beta(&beta).or_else(|e| fail(stage, e.to_string()))?;
    let report = lift(stage, is_admissible(&h, prec))?;
    ensure(report.admissible, stage, "H_beta is not admissible")?;
    let recorded: Vec<(u32, u32, u32)> = c.hermitian_signatures.iter().map(|s| (s.place, s.pos, s.neg)).collect();
    let recomputed: Vec<(u32, u32, u32)> = report.signatures.iter().map(|(a, s)| (*a, s.pos, s.neg)).collect();
    ensure(recorded == recomputed, stage, "recorded signatures differ")?;
    Ok(h)
}

fn matrix_from_coeffs(field: &Field, rows: &[[Vec<num_rational::BigRational>; 3]; 3]) -> Option<MatE> {
    if rows.iter().flatten().any(|v| v.len() > field.degree()) {
        return None;
    }
    Some(MatE::from_fn(|i, j| CycloNum::from_coeffs(field, &rows[i][j])))
}
