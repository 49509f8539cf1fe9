use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid conductor {0}: cyclotomic conductors must be at least 3")]
    InvalidConductor(u32),
    #[error("field mismatch: conductor {left} vs conductor {right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide conductor {to}")]
    ConductorNotDivisible { from: u32, to: u32 },
    #[error("no admissible beta with coefficients bounded by {0}")]
    BetaNotFound(u32),
    #[error("real subfield of conductor {0} has degree < 2; the lattice would not be cocompact")]
    NotCocompact(u32),
    #[error("sign undecided at the precision cap of {0} bits")]
    PrecisionExhausted(u32),
    #[error("beta must be integral and fixed by complex conjugation")]
    InvalidBeta,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("degenerate Hermitian form: zero eigenvalue at real place {0}")]
    DegenerateForm(u32),
    #[error("matrix does not lie in SU(H)")]
    NotInSu,
    #[error("no finite order up to cap {0}")]
    InfiniteOrder(u64),
    #[error("determinant is not a root of unity")]
    NotRootOfUnity,
    #[error("unexpected eigenspace: {0}")]
    UnexpectedEigenspace(String),
    #[error("p = {p} does not divide m = {m}")]
    NotDivisible { m: u32, p: u32 },
    #[error("p = 2 is unsupported: no regular elliptic element of order 2 exists; use the presentation checker with explicit matrices")]
    PrimeTwoUnsupported,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {q} ramifies in conductor {m}")]
    RamifiedPrime { q: u64, m: u32 },
    #[error("entry has a denominator divisible by {0}")]
    NeedsDenominator(u64),
    #[error("no separating prime up to {0}")]
    SearchExhausted(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
