//! End-to-end congruence certificates for `g_p`, their independent
//! verification, the division-algebra torsion criterion, and the relation
//! checker for the `p = 2` presentation.

mod certificate;
mod pipeline;
mod presentation;

pub use certificate::{
    candidates_digest, rational_string, Certificate, Guards, PlaceSignature, SURJECTIVITY_NOTE, TORSION_FREE_NOTE,
    VERDICT_PASS,
};
pub use pipeline::{conductor_for, pipeline_certify, verify_certificate, VerifyFailure, VerifyOutcome};
pub use presentation::{verify_p2_presentation, PresentationReport, ProbeWord, RelationCheck};

use crate::exactalg::totient;

/// Whether a division-algebra lattice can contain torsion of order `n`:
/// `3 | φ(n)` or `3 | φ(3n)`.
pub fn divalg_torsion_admissible(n: u64) -> bool {
    totient(n).is_multiple_of(3) || totient(3 * n).is_multiple_of(3)
}
