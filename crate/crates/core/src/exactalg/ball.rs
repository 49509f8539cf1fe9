//! Fixed-point ball arithmetic with outward rounding.
//!
//! A [`RealBall`] at precision `prec` stands for the closed interval
//! `[(mid - rad) / 2^prec, (mid + rad) / 2^prec]`. Every operation widens
//! `rad` enough to absorb the truncation it performs, so the true value of
//! any expression built from exact inputs stays inside the resulting ball.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealBall {
    mid: BigInt,
    rad: BigInt,
    prec: u32,
}

impl RealBall {
    pub fn zero(prec: u32) -> Self {
        Self {
            mid: BigInt::zero(),
            rad: BigInt::zero(),
            prec,
        }
    }

    pub fn from_int(n: &BigInt, prec: u32) -> Self {
        Self {
            mid: n << prec,
            rad: BigInt::zero(),
            prec,
        }
    }

    /// Enclosure of `num / den`; `den` must be nonzero.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        let (q, r) = (num << prec).div_mod_floor(den);
        let rad = if r.is_zero() { BigInt::zero() } else { BigInt::from(1) };
        Self { mid: q, rad, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Self {
            mid: &self.mid + &other.mid,
            rad: &self.rad + &other.rad,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Self {
            mid: &self.mid - &other.mid,
            rad: &self.rad + &other.rad,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mid: -&self.mid,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        let mid = (&self.mid * &other.mid) >> self.prec;
        let spread = self.mid.abs() * &other.rad + other.mid.abs() * &self.rad + &self.rad * &other.rad;
        Self {
            mid,
            rad: (spread >> self.prec) + 2,
            prec: self.prec,
        }
    }

    /// Exact scaling by an integer.
    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self {
            mid: &self.mid * n,
            rad: &self.rad * n.abs(),
            prec: self.prec,
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, n: &BigInt) -> Self {
        debug_assert!(n.is_positive());
        let (q, r) = self.mid.div_mod_floor(n);
        let extra = if r.is_zero() { 0 } else { 1 };
        Self {
            mid: q,
            rad: (&self.rad / n) + 1 + extra,
            prec: self.prec,
        }
    }

    /// Certified sign, or `None` when the ball contains zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.mid > self.rad {
            Some(Ordering::Greater)
        } else if -&self.mid > self.rad {
            Some(Ordering::Less)
        } else if self.mid.is_zero() && self.rad.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    /// Upper bound on the absolute value, in units of `2^-prec`.
    pub(crate) fn magnitude_ulps(&self) -> BigInt {
        self.mid.abs() + &self.rad
    }

    pub(crate) fn widen_ulps(&mut self, extra: &BigInt) {
        self.rad += extra;
    }

    pub fn mid_f64(&self) -> f64 {
        scaled_to_f64(&self.mid, self.prec)
    }

    /// Radius as an `f64`, rounded away from zero.
    pub fn rad_f64(&self) -> f64 {
        let r = scaled_to_f64(&self.rad, self.prec);
        r * (1.0 + 1e-12) + f64::MIN_POSITIVE
    }

    fn bounds_at(&self, prec: u32) -> (BigInt, BigInt) {
        let shift = prec - self.prec;
        ((&self.mid - &self.rad) << shift, (&self.mid + &self.rad) << shift)
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn contains(&self, other: &RealBall) -> bool {
        let p = self.prec.max(other.prec);
        let (lo, hi) = self.bounds_at(p);
        let (olo, ohi) = other.bounds_at(p);
        lo <= olo && ohi <= hi
    }

    pub fn overlaps(&self, other: &RealBall) -> bool {
        let p = self.prec.max(other.prec);
        let (lo, hi) = self.bounds_at(p);
        let (olo, ohi) = other.bounds_at(p);
        lo <= ohi && olo <= hi
    }
}

fn scaled_to_f64(v: &BigInt, prec: u32) -> f64 {
    let extra = v.bits().saturating_sub(64);
    let head: BigInt = v >> extra;
    let e = extra as i64 - i64::from(prec);
    head.to_f64().unwrap_or(f64::NAN) * pow2(e / 2) * pow2(e - e / 2)
}

fn pow2(e: i64) -> f64 {
    if e < -1022 {
        0.0
    } else if e > 1023 {
        f64::INFINITY
    } else {
        f64::from_bits(((e + 1023) as u64) << 52)
    }
}

/// A certified enclosure of a complex number: a rectangle given by two real
/// balls. `center()` and `radius()` expose it as a disc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalComplex {
    pub re: RealBall,
    pub im: RealBall,
}

impl IntervalComplex {
    pub fn zero(prec: u32) -> Self {
        Self {
            re: RealBall::zero(prec),
            im: RealBall::zero(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self {
            re: RealBall::from_int(&BigInt::from(1), prec),
            im: RealBall::zero(prec),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self {
            re: self.re.mul_int(n),
            im: self.im.mul_int(n),
        }
    }

    pub fn div_int(&self, n: &BigInt) -> Self {
        Self {
            re: self.re.div_int(n),
            im: self.im.div_int(n),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn center(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    /// Upper bound on the distance from `center()` to any enclosed point.
    pub fn radius(&self) -> f64 {
        self.re.rad_f64() + self.im.rad_f64()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.re.contains(&other.re) && self.im.contains(&other.im)
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }
}

/// `atan(1/x)` for an integer `x >= 2`, by the alternating Taylor series.
fn atan_inv(x: u64, prec: u32) -> RealBall {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    // p_k approximates 2^prec / x^(2k+1) from below with error at most 2;
    // each term p_k / (2k+1) is then off by at most 3.
    let mut p = (BigInt::from(1) << prec) / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !p.is_zero() {
        let term = &p / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        p /= &x2;
        k += 1;
    }
    RealBall {
        mid: sum,
        rad: BigInt::from(3 * (k + 1) + 2),
        prec,
    }
}

/// Enclosure of π by Machin's formula.
pub fn pi(prec: u32) -> RealBall {
    let a = atan_inv(5, prec).mul_int(&BigInt::from(16));
    let b = atan_inv(239, prec).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// Enclosure of `exp(2πi a / m)`.
pub fn root_of_unity(a: i64, m: u32, prec: u32) -> IntervalComplex {
    let m_i = i64::from(m);
    let mut a = a.rem_euclid(m_i);
    let flip = 2 * a > m_i;
    if flip {
        a = m_i - a;
    }
    if a == 0 {
        return IntervalComplex::one(prec);
    }
    // θ = 2πa/m in (0, π]
    let theta = pi(prec)
        .mul_int(&BigInt::from(2 * a))
        .div_int(&BigInt::from(m));
    let mut cos = RealBall::from_int(&BigInt::from(1), prec);
    let mut sin = RealBall::zero(prec);
    let mut term = cos.clone();
    let two_ulps = BigInt::from(2);
    let mut n: u64 = 1;
    loop {
        term = term.mul(&theta).div_int(&BigInt::from(n));
        match n % 4 {
            1 => sin = sin.add(&term),
            2 => cos = cos.sub(&term),
            3 => sin = sin.sub(&term),
            _ => cos = cos.add(&term),
        }
        // For n >= 7 we have θ/(n+1) <= 1/2, so the discarded tail is
        // bounded by the magnitude of the last term taken.
        let mag = term.magnitude_ulps();
        if n >= 7 && mag <= two_ulps {
            cos.widen_ulps(&mag);
            sin.widen_ulps(&mag);
            break;
        }
        n += 1;
    }
    let z = IntervalComplex { re: cos, im: sin };
    if flip {
        z.conj()
    } else {
        z
    }
}
