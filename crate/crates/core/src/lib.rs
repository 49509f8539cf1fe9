//! Exact algebra behind congruence certificates for cyclic actions with
//! isolated fixed points on compact complex hyperbolic surfaces.
//!
//! Everything here is `no_std` (with `alloc`): cyclotomic field arithmetic,
//! certified sign decisions at real places, Hermitian forms over `Q(ζ_m)`,
//! classification of finite-order elements of `SU(H)`, the groups
//! `G(m,p,2)`, reduction modulo prime ideals and the certificate pipeline.
//! File formats and the command line live in the `chyplat` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certpipe;
pub mod elliptic;
pub mod error;
pub mod exactalg;
pub mod gmp2;
pub mod hermitian;
pub mod redmod;

pub use error::{Error, Result};
