//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use chyplat::certjson;
use chyplat_core::certpipe::{conductor_for, divalg_torsion_admissible, pipeline_certify, verify_certificate};
use chyplat_core::elliptic::{char_poly, classify, default_cap, element_order, normalize_to_su, ElliptTag};
use chyplat_core::exactalg::{field_make, find_beta, totient, CycloNum, Field, Precision};
use chyplat_core::gmp2::{build_group, embed_u21, g_p, standard_form, torsion_census};
use chyplat_core::hermitian::{build_h_beta, is_admissible, MatE};
use chyplat_core::redmod::{residue_degree, sl3_order, split_prime};
use num_bigint::{BigInt, BigUint};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde_json::Value;

const GROUPS: [(u32, u32); 5] = [(4, 2), (5, 5), (6, 3), (9, 3), (10, 5)];

/// Least separating primes observed on the first successful run.
const FROZEN_Q: [(u32, u64); 2] = [(5, 7), (7, 5)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn group_orders() -> Outcome {
    for (m, p) in GROUPS {
        let g = build_group(m, p).map_err(err)?;
        let expected = (2 * m * m / p) as usize;
        ensure(g.len() == expected, || format!("|G({m},{p},2)| = {} != {expected}", g.len()))?;
    }
    Ok("5 groups enumerated".into())
}

fn structure_checks() -> Outcome {
    let mut rows = 0;
    for (m, p) in GROUPS {
        let g = build_group(m, p).map_err(err)?;
        let census = torsion_census(&g, &standard_form(&g), Precision::default()).map_err(err)?;
        ensure(census.checks.all_hold(), || format!("G({m},{p},2): {:?}", census.checks))?;
        rows += census.rows.len();
    }
    Ok(format!("{rows} elements, zero violations"))
}

fn gp_regular_elliptic() -> Outcome {
    for p in [3u32, 5, 7] {
        let m = conductor_for(p);
        let field = field_make(m).map_err(err)?;
        let h = build_h_beta(&find_beta(&field, 2, Precision::default()).map_err(err)?).map_err(err)?;
        let g = g_p(p, &field).map_err(err)?;
        let class = classify(&g, &h, default_cap(m), Precision::default()).map_err(err)?;
        let order = element_order(&g, default_cap(m));
        ensure(class.tag() == ElliptTag::RegularElliptic && order == Some(u64::from(p)), || {
            format!("g_{p}: {} of order {order:?}", class.tag())
        })?;
    }
    Ok("g_3, g_5, g_7 regular elliptic of order p".into())
}

fn diagonal_shapes() -> Outcome {
    let mut count = 0;
    for m in 2u32..=9 {
        for p in (2..=m).filter(|&p| m % p == 0 && (2..p).all(|d| p % d != 0)) {
            let g = build_group(m, p).map_err(err)?;
            let h = standard_form(&g);
            for e in g.elements().iter().filter(|e| !e.swap) {
                let mat = embed_u21(m, *e, g.field()).map_err(err)?;
                let n = normalize_to_su(&mat).map_err(err)?;
                let hn = h.extend(n.field()).map_err(err)?;
                let tag = classify(&n, &hn, default_cap(n.conductor()), Precision::default()).map_err(err)?.tag();
                let (x1, x2) = (e.a1 % m, e.a2 % m);
                let classical = (x1 == 0) != (x2 == 0);
                let regular = x1 != x2 && x1 != 0 && x2 != 0;
                ensure(classical == (tag == ElliptTag::ComplexReflection), || format!("G({m},{p},2) {e}: {tag}"))?;
                ensure(regular == (tag == ElliptTag::RegularElliptic), || format!("G({m},{p},2) {e}: {tag}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} diagonal elements"))
}

fn beta_admissibility() -> Outcome {
    for p in [3u32, 5, 7] {
        let field = field_make(conductor_for(p)).map_err(err)?;
        let beta = find_beta(&field, 2, Precision::default()).map_err(err)?;
        let report = is_admissible(&build_h_beta(&beta).map_err(err)?, Precision::default()).map_err(err)?;
        ensure(report.admissible, || format!("p={p}: H_beta not admissible"))?;
        for (place, sig) in &report.signatures {
            let want = if *place == 1 { (2, 1) } else { (3, 0) };
            ensure((sig.pos, sig.neg) == want, || {
                format!("p={p}: signature ({},{}) at place {place}", sig.pos, sig.neg)
            })?;
        }
    }
    Ok("p = 3, 5, 7 admissible at radius 2".into())
}

fn end_to_end() -> Outcome {
    let mut notes = Vec::new();
    for (p, frozen) in FROZEN_Q {
        let cert = pipeline_certify(p, 1000, 3, Precision::default()).map_err(err)?;
        ensure(cert.verdict == "PASS" && cert.q <= 1000, || format!("p={p}: verdict {} q {}", cert.verdict, cert.q))?;
        ensure(cert.q == frozen, || format!("p={p}: least q {} differs from frozen {frozen}", cert.q))?;
        let back = certjson::from_str(&certjson::to_string(&cert)).map_err(err)?;
        let outcome = verify_certificate(&back, Precision::default());
        ensure(outcome.is_ok(), || format!("p={p}: verify failed: {:?}", outcome.failure))?;
        notes.push(format!("p={p} q={}", cert.q));
    }
    Ok(notes.join(", "))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn divalg_arithmetic() -> Outcome {
    let primes: Vec<u64> = (5..=1000).filter(|&n| is_prime(n)).collect();
    for &p in &primes {
        ensure(divalg_torsion_admissible(p) == (p % 3 == 1), || format!("p={p}"))?;
    }
    Ok(format!("{} primes", primes.len()))
}

fn random_integral(field: &Field, rng: &mut ChaCha8Rng) -> MatE {
    MatE::from_fn(|_, _| {
        let c: Vec<BigInt> = (0..field.degree()).map(|_| BigInt::from(i64::from(rng.next_u32() % 7) - 3)).collect();
        CycloNum::from_int_poly(field, c, BigInt::from(1))
    })
}

fn mult_order(q: u64, m: u64) -> u32 {
    let mut x = q % m;
    let mut k = 1;
    while x != 1 {
        x = x * q % m;
        k += 1;
    }
    k
}

fn reduction_algebra() -> Outcome {
    for (m, q) in [(5u32, 11u64), (5, 2), (7, 29), (9, 19)] {
        let field = field_make(m).map_err(err)?;
        let rep = split_prime(m, q).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64((u64::from(m) << 32) | q);
        for i in 0..100 {
            let g = random_integral(&field, &mut rng);
            let lhs = rep.reduce_mat(&g).map_err(err)?.char_poly(&rep);
            let rhs = rep.reduce_poly(&char_poly(&g)).map_err(err)?;
            ensure(lhs == rhs, || format!("(m,q)=({m},{q}) matrix {i}"))?;
        }
    }
    let mut pairs = 0;
    for m in 3u32..=50 {
        for q in (2..=100u64).filter(|&q| is_prime(q) && u64::from(m) % q != 0) {
            let f = mult_order(q, u64::from(m));
            let rep = split_prime(m, q).map_err(err)?;
            ensure(residue_degree(q, m) == f && rep.residue_degree() == f, || format!("m={m} q={q}"))?;
            ensure(rep.num_factors() as u64 * u64::from(f) == totient(u64::from(m)), || format!("m={m} q={q}"))?;
            pairs += 1;
        }
    }
    Ok(format!("400 matrices, factor-degree law on {pairs} pairs"))
}

fn brute_sl3(q: u64) -> u64 {
    let mut count = 0;
    let n = q.pow(9);
    for code in 0..n {
        let mut a = [0u64; 9];
        let mut c = code;
        for x in &mut a {
            *x = c % q;
            c /= q;
        }
        let pos = a[0] * a[4] * a[8] + a[1] * a[5] * a[6] + a[2] * a[3] * a[7];
        let neg = a[2] * a[4] * a[6] + a[0] * a[5] * a[7] + a[1] * a[3] * a[8];
        if (pos % q + q - neg % q) % q == 1 {
            count += 1;
        }
    }
    count
}

fn sl3_orders() -> Outcome {
    for (q, want) in [(2u64, 168u32), (3, 5616)] {
        let formula = sl3_order(q, 1);
        let brute = brute_sl3(q);
        ensure(formula == BigUint::from(want) && brute == u64::from(want), || {
            format!("q={q}: formula {formula}, brute force {brute}")
        })?;
    }
    Ok("168 and 5616".into())
}

fn tamper_suite() -> Outcome {
    let cert = pipeline_certify(5, 1000, 3, Precision::default()).map_err(err)?;
    let base = certjson::to_value(&cert);
    ensure(verify_certificate(&cert, Precision::default()).is_ok(), || "untampered certificate fails".into())?;
    let corruptions: [(&str, fn(&mut Value)); 5] = [
        ("beta", |v| v["beta"][0] = Value::String("5/1".into())),
        ("tau_order", |v| v["tau_order"] = Value::from(10)),
        ("q", |v| v["q"] = Value::from(11)),
        ("factor_poly", |v| {
            let c = v["factor_poly"][0].as_u64().unwrap();
            v["factor_poly"][0] = Value::from((c + 1) % 7);
        }),
        ("quotient_order", |v| {
            let n: BigUint = v["quotient_order"].as_str().unwrap().parse().unwrap();
            v["quotient_order"] = Value::String((n + 1u32).to_string());
        }),
    ];
    let mut stages = Vec::new();
    for (field, corrupt) in corruptions {
        let mut v = base.clone();
        corrupt(&mut v);
        ensure(v != base, || format!("{field}: corruption left the certificate unchanged"))?;
        let c = certjson::from_value(&v).map_err(err)?;
        let outcome = verify_certificate(&c, Precision::default());
        let failure = outcome.failure.ok_or_else(|| format!("corrupted {field} still verifies"))?;
        stages.push(format!("{field}->{}", failure.stage));
    }
    Ok(stages.join(", "))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(err)?;
    let mut bytes = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_chyplat"))
            .args(["certify", "--p", "5", "--out"])
            .arg(&path)
            .status()
            .map_err(err)?;
        ensure(status.success(), || format!("run {run} exited with {status}"))?;
        bytes.push(std::fs::read(&path).map_err(err)?);
    }
    ensure(!bytes[0].is_empty() && bytes[0] == bytes[1], || "outputs differ".into())?;
    Ok(format!("{} identical bytes", bytes[0].len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "group orders", limit: secs(1), run: group_orders },
        Criterion { id: 2, name: "structure facts via census", limit: secs(10), run: structure_checks },
        Criterion { id: 3, name: "g_p regular elliptic", limit: secs(5), run: gp_regular_elliptic },
        Criterion { id: 4, name: "diagonal shape vs classification", limit: secs(10), run: diagonal_shapes },
        Criterion { id: 5, name: "beta admissibility", limit: secs(5), run: beta_admissibility },
        Criterion { id: 6, name: "end-to-end certify and verify", limit: secs(60), run: end_to_end },
        Criterion { id: 7, name: "division algebra torsion criterion", limit: secs(1), run: divalg_arithmetic },
        Criterion { id: 8, name: "reduction algebra", limit: secs(10), run: reduction_algebra },
        Criterion { id: 9, name: "SL3 orders", limit: secs(30), run: sl3_orders },
        Criterion { id: 10, name: "tamper suite", limit: secs(5), run: tamper_suite },
        Criterion { id: 11, name: "determinism", limit: None, run: determinism },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let late = c.limit.is_some_and(|l| elapsed >= l);
        let limit = c.limit.map_or("no limit".to_string(), |l| format!("< {}s", l.as_secs()));
        let (status, detail) = match (&result, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "[{status}] criterion {:>2}: {} ({:.3}s, {limit}) {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
