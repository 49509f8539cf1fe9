use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly;
use crate::{Error, Result};

/// The cyclotomic field `Q(ζ_m)` with its power basis `1, ζ, …, ζ^{φ(m)-1}`.
///
/// Embeddings into `C` are indexed by exponents `a` coprime to `m`, sending
/// `ζ_m` to `exp(2πi a/m)`; `a = 1` is the identity embedding.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    conductor: u32,
    phi: Vec<BigInt>,
    exponents: Vec<u32>,
}

/// Shared handle to a field. Fields are immutable once built.
pub type Field = Arc<CycloField>;

/// Build `Q(ζ_m)`.
pub fn field_make(m: u32) -> Result<Field> {
    if m < 3 {
        return Err(Error::InvalidConductor(m));
    }
    let phi = poly::cyclotomic(m);
    let exponents: Vec<u32> = (1..m).filter(|a| a.gcd(&m) == 1).collect();
    debug_assert_eq!(phi.len() - 1, exponents.len());
    Ok(Arc::new(CycloField {
        conductor: m,
        phi,
        exponents,
    }))
}

impl CycloField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.exponents.len()
    }

    /// `Φ_m`, constant term first.
    pub fn phi_poly(&self) -> &[BigInt] {
        &self.phi
    }

    pub fn embedding_exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// One representative per real place of the maximal totally real
    /// subfield: the smaller member `a` of each pair `{a, m - a}`. The
    /// identity place `a = 1` comes first.
    pub fn real_places(&self) -> Vec<u32> {
        self.exponents
            .iter()
            .copied()
            .filter(|&a| 2 * a < self.conductor)
            .collect()
    }

    /// Degree of the maximal totally real subfield.
    pub fn real_degree(&self) -> usize {
        self.degree() / 2
    }
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
