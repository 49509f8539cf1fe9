use alloc::vec::Vec;
use core::cmp::Ordering;

use super::MatE;
use crate::exactalg::{CycloNum, Field, Precision};
use crate::{Error, Result};

/// Counts of positive and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub pos: u32,
    pub neg: u32,
}

impl Signature {
    pub const fn new(pos: u32, neg: u32) -> Self {
        Self { pos, neg }
    }
}

/// A Hermitian matrix `H = H̄ᵗ` with entries in `Z[ζ_m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermForm {
    matrix: MatE,
}

impl HermForm {
    pub fn new(matrix: MatE) -> Result<Self> {
        if matrix.conj_transpose() != matrix {
            return Err(Error::NotHermitian);
        }
        if !matrix.is_integral() {
            return Err(Error::InvalidInput("Hermitian form entries must be integral".into()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &MatE {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn extend(&self, target: &Field) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.extend(target)?,
        })
    }

    /// Characteristic polynomial `det(tI - H)`, constant term first.
    pub fn char_poly(&self) -> [CycloNum; 4] {
        let h = &self.matrix;
        [
            -h.det(),
            h.principal_minor_sum(),
            -h.trace(),
            CycloNum::one(h.field()),
        ]
    }
}

/// The form `|z_1|^2 + |z_2|^2 + β|z_3|^2`.
pub fn build_h_beta(beta: &CycloNum) -> Result<HermForm> {
    if !beta.is_integral() || !beta.is_real() {
        return Err(Error::InvalidBeta);
    }
    let f = beta.field();
    HermForm::new(MatE::diag([CycloNum::one(f), CycloNum::one(f), beta.clone()]))
}

/// Signature of a Hermitian matrix at a real place, from its exact
/// characteristic polynomial (monic, constant term first).
///
/// The polynomial has only real roots, so Descartes' rule of signs counts
/// positive roots exactly; negative roots are counted on `p(-t)`. Only the
/// signs of the exact coefficients are evaluated numerically, and a zero
/// coefficient is recognised exactly.
pub fn hermitian_signature(char_poly: &[CycloNum], place: u32, prec: Precision) -> Result<Signature> {
    let n = char_poly.len() - 1;
    if char_poly[0].is_zero() {
        return Err(Error::DegenerateForm(place));
    }
    let mut signs = Vec::with_capacity(n + 1);
    for c in char_poly {
        debug_assert!(c.is_real());
        signs.push(c.real_sign_at(place, prec)?);
    }
    let changes = |flip_odd: bool| -> u32 {
        let mut last: Option<Ordering> = None;
        let mut count = 0;
        for (i, s) in signs.iter().enumerate() {
            let s = if flip_odd && i % 2 == 1 { s.reverse() } else { *s };
            if s == Ordering::Equal {
                continue;
            }
            if last.is_some_and(|l| l != s) {
                count += 1;
            }
            last = Some(s);
        }
        count
    };
    let sig = Signature::new(changes(false), changes(true));
    if (sig.pos + sig.neg) as usize != n {
        return Err(Error::DegenerateForm(place));
    }
    Ok(sig)
}

/// Signature of `H` at the real place indexed by the embedding exponent `place`.
pub fn signature_at(h: &HermForm, place: u32, prec: Precision) -> Result<Signature> {
    hermitian_signature(&h.char_poly(), place, prec)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// `(place, signature)` for every real place, identity place first.
    pub signatures: Vec<(u32, Signature)>,
}

/// Signature `(2,1)` at the identity place and `(3,0)` at every other.
pub fn is_admissible(h: &HermForm, prec: Precision) -> Result<AdmissibilityReport> {
    let mut signatures = Vec::new();
    let mut admissible = true;
    for a in h.field().real_places() {
        let s = signature_at(h, a, prec)?;
        let want = if a == 1 { Signature::new(2, 1) } else { Signature::new(3, 0) };
        admissible &= s == want;
        signatures.push((a, s));
    }
    Ok(AdmissibilityReport {
        admissible,
        signatures,
    })
}

/// Exact test of `det g = 1` and `g H ḡᵗ = H`.
pub fn su_membership(g: &MatE, h: &HermForm) -> bool {
    if g.conductor() != h.matrix.conductor() {
        return false;
    }
    g.det().is_one() && g.mul(&h.matrix).mul(&g.conj_transpose()) == h.matrix
}
