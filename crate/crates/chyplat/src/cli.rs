//! The `chyplat` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use chyplat_core::certpipe::{divalg_torsion_admissible, pipeline_certify, verify_certificate, verify_p2_presentation};
use chyplat_core::elliptic::{classify, default_cap, element_order, EllipticClass};
use chyplat_core::exactalg::{field_make, find_beta, Precision};
use chyplat_core::gmp2::{build_group, standard_form, torsion_census};
use chyplat_core::hermitian::build_h_beta;
use chyplat_core::Error;
use clap::{Parser, Subcommand};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::{certjson, matrix_input};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const PRECISION_ENV: &str = "CHYPLAT_PRECISION_BITS";

#[derive(Debug, Parser)]
#[command(name = "chyplat", version, about = "Congruence certificates for torsion in complex hyperbolic lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for a separating prime for g_p and emit a certificate.
    Certify {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 10_000)]
        max_prime: u64,
        #[arg(long, default_value_t = 3)]
        search_radius: u32,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive every claim of a certificate.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Torsion census of G(m,p,2) as a TSV table.
    Gmp2 {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        /// Use diag(1,1,β) with β found for this conductor instead of diag(1,1,-1).
        #[arg(long)]
        beta_conductor: Option<u32>,
    },
    /// Classify the matrices of a matrix-input file.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Whether a division-algebra lattice admits torsion of order N.
    DivalgAdmissible {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// Check the p = 2 presentation for R1 = matrices[0], J = matrices[1].
    P2Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// A failure together with the exit code it maps to.
struct Exit(i32, anyhow::Error);

fn usage(e: impl Into<anyhow::Error>) -> Exit {
    Exit(EXIT_USAGE, e.into())
}

fn failed(e: impl Into<anyhow::Error>) -> Exit {
    Exit(EXIT_FAILED, e.into())
}

fn precision_from_env() -> Result<Precision> {
    match std::env::var(PRECISION_ENV) {
        Ok(s) => {
            let bits: u32 = s.trim().parse().with_context(|| format!("{PRECISION_ENV}={s} is not an integer"))?;
            if !(8..=8192).contains(&bits) {
                return Err(anyhow!("{PRECISION_ENV} must lie in 8..=8192"));
            }
            Ok(Precision::starting_at(bits))
        }
        Err(std::env::VarError::NotPresent) => Ok(Precision::default()),
        Err(e) => Err(e.into()),
    }
}

fn read_file(path: &PathBuf) -> std::result::Result<String, Exit> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(usage)
}

fn write_json(out: &mut dyn Write, v: &Value) -> std::result::Result<(), Exit> {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    out.write_all(s.as_bytes()).map_err(failed)
}

fn class_json(c: &EllipticClass) -> Value {
    let roots: Vec<String> = c.eigen_roots().iter().map(|r| r.to_string()).collect();
    json!({ "class": c.tag().as_str(), "eigenvalues": roots })
}

/// Run with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Exit(code, e)) => {
            let _ = writeln!(err, "error: {e:#}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, Exit> {
    let prec = precision_from_env().map_err(usage)?;
    match cmd {
        Command::Certify {
            p,
            max_prime,
            search_radius,
            out: path,
        } => {
            let cert = pipeline_certify(p, max_prime, search_radius, prec).map_err(|e| match e {
                Error::PrimeTwoUnsupported | Error::NotPrime(_) => usage(e),
                other => failed(other),
            })?;
            let text = certjson::to_string(&cert);
            match path {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))
                    .map_err(failed)?,
                None => out.write_all(text.as_bytes()).map_err(failed)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { cert } => {
            let text = read_file(&cert)?;
            let c = certjson::from_str(&text).map_err(failed)?;
            let outcome = verify_certificate(&c, prec);
            match outcome.failure {
                None => {
                    writeln!(out, "PASS").map_err(failed)?;
                    Ok(EXIT_OK)
                }
                Some(f) => {
                    writeln!(out, "FAIL at {}: {}", f.stage, f.detail).map_err(failed)?;
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::Gmp2 { m, p, beta_conductor } => {
            let g = build_group(m, p).map_err(usage)?;
            let h = match beta_conductor {
                None => standard_form(&g),
                Some(c) => {
                    let small = field_make(c).map_err(usage)?;
                    let beta = find_beta(&small, 3, prec).map_err(failed)?;
                    let big = field_make(g.field().conductor().lcm(&c)).map_err(usage)?;
                    build_h_beta(&beta.extend(&big).map_err(failed)?).map_err(failed)?
                }
            };
            let census = torsion_census(&g, &h, prec).map_err(failed)?;
            out.write_all(census.to_tsv().as_bytes()).map_err(failed)?;
            Ok(if census.checks.all_hold() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Classify { input } => {
            let parsed = matrix_input::parse(&read_file(&input)?).map_err(failed)?;
            let cap = default_cap(parsed.field.conductor());
            let mut results = Vec::new();
            let mut all_ok = true;
            for (i, g) in parsed.matrices.iter().enumerate() {
                let entry = match classify(g, &parsed.hermitian, cap, prec) {
                    Ok(c) => {
                        let mut v = class_json(&c);
                        v["index"] = json!(i);
                        v["order"] = json!(element_order(g, cap));
                        v
                    }
                    Err(e) => {
                        all_ok = false;
                        json!({ "index": i, "error": e.to_string() })
                    }
                };
                results.push(entry);
            }
            write_json(out, &json!({ "conductor": parsed.field.conductor(), "results": results }))?;
            Ok(if all_ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::DivalgAdmissible { n } => {
            writeln!(out, "{}", divalg_torsion_admissible(n)).map_err(failed)?;
            Ok(EXIT_OK)
        }
        Command::P2Check { input } => {
            let parsed = matrix_input::parse(&read_file(&input)?).map_err(failed)?;
            if parsed.matrices.len() < 2 {
                return Err(failed(anyhow!("p2-check needs matrices [R1, J]")));
            }
            let report = verify_p2_presentation(&parsed.matrices[0], &parsed.matrices[1], &parsed.hermitian, prec)
                .map_err(failed)?;
            let relations: Vec<Value> = report
                .relations
                .iter()
                .map(|r| json!({ "relation": r.relation, "holds": r.holds }))
                .collect();
            let probes: Vec<Value> = report
                .probes
                .iter()
                .map(|w| json!({ "word": w.word, "order": w.order, "class": w.class.map(|c| c.as_str()) }))
                .collect();
            write_json(
                out,
                &json!({
                    "relations": relations,
                    "probes": probes,
                    "r1r2_order": report.r1r2_order,
                    "involution_is_point_reflection": report.involution_is_point_reflection,
                    "degenerate": report.degenerate,
                }),
            )?;
            Ok(if report.all_relations_hold() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
