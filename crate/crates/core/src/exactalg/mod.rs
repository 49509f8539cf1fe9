//! Exact arithmetic in cyclotomic fields `Q(ζ_m)` and certified evaluation
//! of their complex embeddings.

pub mod ball;
mod beta;
mod field;
mod num;
pub mod poly;

pub use ball::{IntervalComplex, RealBall};
pub use beta::{find_beta, real_subfield_basis};
pub use field::{field_make, totient, CycloField, Field};
pub(crate) use field::lcm;
pub use num::{rat, CycloNum, Precision};
