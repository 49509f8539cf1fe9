//! Hermitian forms on `E^3`, their signatures at every real place, and
//! membership in `SU(H)`.

mod form;
mod mat;

pub use form::{
    build_h_beta, hermitian_signature, is_admissible, signature_at, su_membership, AdmissibilityReport,
    HermForm, Signature,
};
pub use mat::MatE;
