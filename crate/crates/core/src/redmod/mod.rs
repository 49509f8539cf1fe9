//! Reduction modulo prime ideals of `Z[ζ_m]` and the characteristic
//! polynomial separation test.
//!
//! If a finite-order element `τ` has reduced characteristic polynomial
//! different from that of every finite-order element with a repeated
//! eigenvalue, and different from `(t - 1)^3`, then its image in
//! `SL_3(R/Q)` is nontrivial and not conjugate to the image of any complex
//! reflection.

pub mod ff;
mod residue;
mod separation;

pub use residue::{residue_degree, split_prime, FFElem, FFMat, FFPoly, PrimeIdealRep};
pub use separation::{
    candidate_reflection_polys, identity_poly, residue_recheck, separation_test, sl3_order, SeparationReport,
};

#[cfg(test)]
mod tests;
