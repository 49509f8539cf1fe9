//! Canonical JSON form of certificates.
//!
//! Objects are written with sorted keys, rationals as `"n/d"` strings,
//! polynomials as coefficient arrays starting from the constant term, and a
//! trailing newline, so two runs on the same input compare byte for byte.

use anyhow::{anyhow, bail, Context, Result};
use chyplat_core::certpipe::{rational_string, Certificate, Guards, PlaceSignature};
use chyplat_core::elliptic::ElliptTag;
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

fn rationals(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rational_string(r))).collect())
}

pub fn to_value(c: &Certificate) -> Value {
    let tau: Vec<Value> = c
        .tau
        .iter()
        .map(|row| Value::Array(row.iter().map(|e| rationals(e)).collect()))
        .collect();
    let sigs: Vec<Value> = c
        .hermitian_signatures
        .iter()
        .map(|s| json!({ "place": s.place, "pos": s.pos, "neg": s.neg }))
        .collect();
    json!({
        "p": c.p,
        "m": c.m,
        "search_radius": c.search_radius,
        "real_degree": c.real_degree,
        "beta": rationals(&c.beta),
        "hermitian_signatures": sigs,
        "tau": tau,
        "tau_order": c.tau_order,
        "tau_class": c.tau_class.as_str(),
        "q": c.q,
        "f": c.f,
        "factor_poly": c.factor_poly,
        "tau_charpoly_mod": c.tau_charpoly_mod,
        "excluded_candidates": c.excluded_candidates,
        "candidates_digest": c.candidates_digest,
        "guards": {
            "q_gt_3": c.guards.q_gt_3,
            "q_coprime_to_m": c.guards.q_coprime_to_m,
            "unramified": c.guards.unramified,
        },
        "torsion_free": c.torsion_free,
        "surjectivity": c.surjectivity,
        "quotient_order": c.quotient_order.to_string(),
        "verdict": c.verdict,
    })
}

/// Pretty-printed canonical text, newline-terminated.
pub fn to_string(c: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(c)).expect("certificate values serialize");
    s.push('\n');
    s
}

struct Obj<'a>(&'a Map<String, Value>);

impl<'a> Obj<'a> {
    fn get(&self, key: &str) -> Result<&'a Value> {
        self.0.get(key).ok_or_else(|| anyhow!("missing field `{key}`"))
    }

    fn u64(&self, key: &str) -> Result<u64> {
        self.get(key)?.as_u64().ok_or_else(|| anyhow!("`{key}` is not a non-negative integer"))
    }

    fn u32(&self, key: &str) -> Result<u32> {
        u32::try_from(self.u64(key)?).with_context(|| format!("`{key}` out of range"))
    }

    fn bool(&self, key: &str) -> Result<bool> {
        self.get(key)?.as_bool().ok_or_else(|| anyhow!("`{key}` is not a boolean"))
    }

    fn str(&self, key: &str) -> Result<&'a str> {
        self.get(key)?.as_str().ok_or_else(|| anyhow!("`{key}` is not a string"))
    }

    fn array(&self, key: &str) -> Result<&'a Vec<Value>> {
        self.get(key)?.as_array().ok_or_else(|| anyhow!("`{key}` is not an array"))
    }
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    let s = v.as_str().ok_or_else(|| anyhow!("rational entries must be strings, got {v}"))?;
    let r: BigRational = s.trim().parse().map_err(|_| anyhow!("malformed rational `{s}`"))?;
    Ok(r)
}

pub fn parse_rationals(v: &Value) -> Result<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array of rationals"))?
        .iter()
        .map(parse_rational)
        .collect()
}

fn parse_u64s(v: &Value) -> Result<Vec<u64>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array of integers"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| anyhow!("expected a non-negative integer, got {x}")))
        .collect()
}

fn rows3<T>(v: &Value, what: &str, mut f: impl FnMut(&Value) -> Result<T>) -> Result<[T; 3]> {
    let a = v.as_array().ok_or_else(|| anyhow!("{what} must be an array"))?;
    if a.len() != 3 {
        bail!("{what} must have 3 entries");
    }
    Ok([f(&a[0])?, f(&a[1])?, f(&a[2])?])
}

pub fn from_value(v: &Value) -> Result<Certificate> {
    let o = Obj(v.as_object().ok_or_else(|| anyhow!("certificate must be a JSON object"))?);
    let sigs = o
        .array("hermitian_signatures")?
        .iter()
        .map(|s| {
            let s = Obj(s.as_object().ok_or_else(|| anyhow!("signature must be an object"))?);
            Ok(PlaceSignature {
                place: s.u32("place")?,
                pos: s.u32("pos")?,
                neg: s.u32("neg")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let tau = rows3(o.get("tau")?, "tau", |row| rows3(row, "tau row", parse_rationals))?;
    let guards = Obj(o.get("guards")?.as_object().ok_or_else(|| anyhow!("`guards` must be an object"))?);
    let class = o.str("tau_class")?;
    let charpoly = o
        .array("tau_charpoly_mod")?
        .iter()
        .map(parse_u64s)
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate {
        p: o.u32("p")?,
        m: o.u32("m")?,
        search_radius: o.u32("search_radius")?,
        real_degree: o.u32("real_degree")?,
        beta: parse_rationals(o.get("beta")?)?,
        hermitian_signatures: sigs,
        tau,
        tau_order: o.u64("tau_order")?,
        tau_class: ElliptTag::parse(class).ok_or_else(|| anyhow!("unknown class `{class}`"))?,
        q: o.u64("q")?,
        f: o.u32("f")?,
        factor_poly: parse_u64s(o.get("factor_poly")?)?,
        tau_charpoly_mod: charpoly,
        excluded_candidates: usize::try_from(o.u64("excluded_candidates")?)?,
        candidates_digest: o.str("candidates_digest")?.to_string(),
        guards: Guards {
            q_gt_3: guards.bool("q_gt_3")?,
            q_coprime_to_m: guards.bool("q_coprime_to_m")?,
            unramified: guards.bool("unramified")?,
        },
        torsion_free: o.str("torsion_free")?.to_string(),
        surjectivity: o.str("surjectivity")?.to_string(),
        quotient_order: o
            .str("quotient_order")?
            .parse::<BigUint>()
            .map_err(|_| anyhow!("`quotient_order` is not a decimal integer"))?,
        verdict: o.str("verdict")?.to_string(),
    })
}

pub fn from_str(s: &str) -> Result<Certificate> {
    let v: Value = serde_json::from_str(s).context("certificate is not valid JSON")?;
    from_value(&v)
}
