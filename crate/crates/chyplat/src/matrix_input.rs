//! Matrix input files:
//!
//! ```json
//! {"conductor": 5,
//!  "hermitian": [[["1"], [], []], [[], ["1"], []], [[], [], ["0","0","-1","-1"]]],
//!  "matrices": [[[["0","1"], [], []], ...]]}
//! ```
//!
//! Every entry is a list of rational strings giving power-basis coordinates
//! in `Q(ζ_m)`; missing trailing coordinates are zero.

use anyhow::{anyhow, bail, Context, Result};
use chyplat_core::exactalg::{field_make, CycloNum, Field};
use chyplat_core::hermitian::{HermForm, MatE};
use serde_json::Value;

use crate::certjson::parse_rationals;

#[derive(Debug, Clone)]
pub struct MatrixInput {
    pub field: Field,
    pub hermitian: HermForm,
    pub matrices: Vec<MatE>,
}

fn parse_matrix(field: &Field, v: &Value) -> Result<MatE> {
    let rows = v.as_array().filter(|r| r.len() == 3).ok_or_else(|| anyhow!("a matrix must have 3 rows"))?;
    let mut entries: Vec<CycloNum> = Vec::with_capacity(9);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == 3).ok_or_else(|| anyhow!("a row must have 3 entries"))?;
        for e in row {
            let coeffs = parse_rationals(e)?;
            if coeffs.len() > field.degree() {
                bail!(
                    "entry has {} coordinates but Q(ζ_{}) has degree {}",
                    coeffs.len(),
                    field.conductor(),
                    field.degree()
                );
            }
            entries.push(CycloNum::from_coeffs(field, &coeffs));
        }
    }
    Ok(MatE::from_fn(|i, j| entries[3 * i + j].clone()))
}

pub fn parse(text: &str) -> Result<MatrixInput> {
    let v: Value = serde_json::from_str(text).context("matrix input is not valid JSON")?;
    let m = v
        .get("conductor")
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("missing integer field `conductor`"))?;
    let field = field_make(u32::try_from(m)?)?;
    let h = parse_matrix(&field, v.get("hermitian").ok_or_else(|| anyhow!("missing field `hermitian`"))?)
        .context("in `hermitian`")?;
    let hermitian = HermForm::new(h)?;
    let matrices = v
        .get("matrices")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("missing array field `matrices`"))?
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(&field, m).with_context(|| format!("in matrices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixInput {
        field,
        hermitian,
        matrices,
    })
}
