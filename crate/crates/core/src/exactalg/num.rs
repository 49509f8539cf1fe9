use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ball::{self, IntervalComplex};
use super::field::{field_make, Field};
use super::poly;
use crate::{Error, Result};

/// Starting and maximal working precision (in bits) for certified sign
/// decisions. Precision doubles from `start_bits` until the decision is
/// certified or `max_bits` is exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            start_bits: 128,
            max_bits: 8192,
        }
    }
}

impl Precision {
    pub fn starting_at(start_bits: u32) -> Self {
        Self {
            start_bits: start_bits.max(8),
            ..Self::default()
        }
    }
}

/// An exact element of `Q(ζ_m)` in power-basis coordinates.
///
/// Stored as integer numerators over one positive common denominator, in
/// lowest terms, so equal field elements have identical representations.
#[derive(Clone)]
pub struct CycloNum {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor() == other.field.conductor() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[m={}](", self.field.conductor())?;
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*z^{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl CycloNum {
    fn normalized(field: Field, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree());
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -core::mem::take(c);
            }
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else {
            let g = poly::abs_gcd(&num, &den);
            if !g.is_one() {
                for c in &mut num {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        Self { field, num, den }
    }

    /// Build from an integer polynomial in `ζ` of any length, reducing it
    /// modulo `Φ_m`.
    pub fn from_int_poly(field: &Field, mut coeffs: Vec<BigInt>, den: BigInt) -> Self {
        if coeffs.len() < field.degree() {
            coeffs.resize(field.degree(), BigInt::zero());
        }
        poly::reduce_monic_in_place(&mut coeffs, field.phi_poly());
        Self::normalized(field.clone(), coeffs, den)
    }

    /// Build from rational power-basis coordinates (any length).
    pub fn from_coeffs(field: &Field, coeffs: &[BigRational]) -> Self {
        let (num, den) = poly::common_denominator(coeffs);
        Self::from_int_poly(field, num, den)
    }

    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_bigint(field, BigInt::from(n))
    }

    pub fn from_bigint(field: &Field, n: BigInt) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = n;
        Self::normalized(field.clone(), num, BigInt::one())
    }

    pub fn from_rational(field: &Field, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = q.numer().clone();
        Self::normalized(field.clone(), num, q.denom().clone())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(field: &Field, k: i64) -> Self {
        let m = i64::from(field.conductor());
        let e = k.rem_euclid(m) as usize;
        let mut v = vec![BigInt::zero(); e.max(field.degree() - 1) + 1];
        v[e] = BigInt::one();
        Self::from_int_poly(field, v, BigInt::one())
    }

    pub fn zeta(field: &Field) -> Self {
        Self::zeta_pow(field, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Membership in `Z[ζ_m]`, the ring of integers.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field.conductor() == other.field.conductor() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Ok(Self::normalized(self.field.clone(), num, &self.den * &other.den))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let prod = poly::mul_int(&self.num, &other.num);
        Ok(Self::from_int_poly(&self.field, prod, &self.den * &other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> = self
            .field
            .phi_poly()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = poly::rat_inverse_mod(&self.coeffs(), &modulus)
            .expect("Φ_m is irreducible, so every nonzero element is invertible");
        Ok(Self::from_coeffs(&self.field, &inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * n).collect();
        Self::normalized(self.field.clone(), num, self.den.clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.field.conductor() as usize;
        let mut v = vec![BigInt::zero(); m];
        for (j, c) in self.num.iter().enumerate() {
            v[(m - j) % m] += c;
        }
        Self::from_int_poly(&self.field, v, self.den.clone())
    }

    /// Fixed by complex conjugation, i.e. in the maximal totally real subfield.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Image in `Q(ζ_M)` under `ζ_m = ζ_M^{M/m}`.
    pub fn extend(&self, target: &Field) -> Result<Self> {
        let m = self.field.conductor();
        let big = target.conductor();
        if !big.is_multiple_of(m) {
            return Err(Error::ConductorNotDivisible { from: m, to: big });
        }
        if big == m {
            return Ok(Self {
                field: target.clone(),
                num: self.num.clone(),
                den: self.den.clone(),
            });
        }
        let step = (big / m) as usize;
        let len = (self.num.len().saturating_sub(1)) * step + 1;
        let mut v = vec![BigInt::zero(); len.max(target.degree())];
        for (j, c) in self.num.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Ok(Self::from_int_poly(target, v, self.den.clone()))
    }

    /// Convenience: extend to `Q(ζ_M)` building the target field.
    pub fn extend_to(&self, big: u32) -> Result<Self> {
        if big == self.conductor() {
            return Ok(self.clone());
        }
        self.extend(&field_make(big)?)
    }

    /// Preimage of `self` in the subfield `Q(ζ_m)`, `m | M`, if it lies there.
    pub fn restrict(&self, small: &Field) -> Option<Self> {
        let m = small.conductor();
        let big = self.field.conductor();
        if !big.is_multiple_of(m) {
            return None;
        }
        // Columns: images of the power basis of the subfield.
        let cols: Vec<Vec<BigRational>> = (0..small.degree())
            .map(|j| {
                CycloNum::zeta_pow(small, j as i64)
                    .extend(&self.field)
                    .expect("m divides M")
                    .coeffs()
            })
            .collect();
        let sol = solve_rational(&cols, &self.coeffs())?;
        Some(Self::from_coeffs(small, &sol))
    }

    pub fn lies_in_subfield(&self, m: u32) -> bool {
        match field_make(m) {
            Ok(f) => self.restrict(&f).is_some(),
            Err(_) => false,
        }
    }

    /// Certified enclosure of the image under `ζ_m ↦ exp(2πi a/m)`.
    /// `prec` is the working precision in bits.
    pub fn embed(&self, a: u32, prec: u32) -> IntervalComplex {
        let w = prec + 32;
        let m = self.field.conductor();
        let z = ball::root_of_unity(i64::from(a), m, w);
        // Horner from the top coefficient.
        let mut acc = IntervalComplex::zero(w);
        let top = match self.num.iter().rposition(|c| !c.is_zero()) {
            Some(i) => i,
            None => return acc,
        };
        for c in self.num[..=top].iter().rev() {
            acc = acc.mul(&z);
            if !c.is_zero() {
                let mut cb = IntervalComplex::zero(w);
                cb.re = ball::RealBall::from_int(c, w);
                acc = acc.add(&cb);
            }
        }
        if self.den.is_one() {
            acc
        } else {
            acc.div_int(&self.den)
        }
    }

    /// Sign of the real part of the image at the embedding `a`, escalating
    /// precision until certified. For elements of the real subfield this is
    /// the sign at the real place `a`. Exact zero is detected exactly.
    pub fn real_sign_at(&self, a: u32, prec: Precision) -> Result<Ordering> {
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        let mut bits = prec.start_bits;
        loop {
            if let Some(s) = self.embed(a, bits).re.sign() {
                return Ok(s);
            }
            if bits >= prec.max_bits {
                return Err(Error::PrecisionExhausted(prec.max_bits));
            }
            bits = (bits * 2).min(prec.max_bits);
        }
    }
}

/// Solve `Σ x_j cols[j] = rhs` over `Q` by Gaussian elimination; `None` if
/// inconsistent. Columns are assumed linearly independent.
pub(crate) fn solve_rational(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = cols.len();
    let rows = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let Some(r) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, r);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let t = &f * &a[pivot_row][c];
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][n].clone();
    }
    Some(x)
}

impl Add for &CycloNum {
    type Output = CycloNum;
    /// Panics on field mismatch; see [`CycloNum::checked_add`].
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: Arc::clone(&self.field),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

/// Rational `a/b` from machine integers; convenience for tests and callers.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}
