use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::ff::{self, Poly};
use crate::elliptic::CharPoly;
use crate::exactalg::{field_make, CycloNum};
use crate::gmp2::is_prime;
use crate::hermitian::MatE;
use crate::{Error, Result};

/// A prime ideal `Q` above an unramified rational prime `q` in `Z[ζ_m]`,
/// presented by a monic irreducible factor of `Φ_m` modulo `q`. The residue
/// field is `F_q[x] / (factor)`, with `ζ_m ↦ x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealRep {
    q: u64,
    m: u32,
    f: u32,
    factor: Poly,
    num_factors: usize,
}

/// Multiplicative order of `q` modulo `m`.
pub fn residue_degree(q: u64, m: u32) -> u32 {
    let m = u64::from(m);
    let mut x = q % m;
    let mut f = 1;
    while x != 1 {
        x = x * (q % m) % m;
        f += 1;
    }
    f
}

/// The prime ideal above `q` whose factor of `Φ_m` is least, reading
/// coefficient vectors from the constant term.
pub fn split_prime(m: u32, q: u64) -> Result<PrimeIdealRep> {
    if m < 3 {
        return Err(Error::InvalidConductor(m));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q >= 1 << 32 {
        return Err(Error::InvalidInput("residue characteristic must be below 2^32".into()));
    }
    if u64::from(m) % q == 0 {
        return Err(Error::RamifiedPrime { q, m });
    }
    let field = field_make(m)?;
    let phi: Poly = field.phi_poly().iter().map(|c| mod_q(c, q)).collect();
    let f = residue_degree(q, m);
    let factors = ff::factor_squarefree(&phi, q, (u64::from(m) << 32) | q);
    if factors.iter().any(|p| p.len() != f as usize + 1) || factors.len() * f as usize != field.degree() {
        return Err(Error::InvalidInput("cyclotomic factorization violates the splitting law".into()));
    }
    let factor = factors
        .iter()
        .min_by(|a, b| ff::lex_cmp(a, b))
        .cloned()
        .expect("at least one factor");
    Ok(PrimeIdealRep {
        q,
        m,
        f,
        factor,
        num_factors: factors.len(),
    })
}

fn mod_q(c: &BigInt, q: u64) -> u64 {
    c.mod_floor(&BigInt::from(q)).to_u64().expect("residue fits in u64")
}

/// Residue-field element: a polynomial of degree below `f` over `Z/q`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFElem(Poly);

impl FFElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl PrimeIdealRep {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn residue_degree(&self) -> u32 {
        self.f
    }

    /// Monic irreducible factor of `Φ_m` mod `q`, constant term first.
    pub fn factor_poly(&self) -> &[u64] {
        &self.factor
    }

    /// Number of primes of `Z[ζ_m]` above `q`.
    pub fn num_factors(&self) -> usize {
        self.num_factors
    }

    /// Size `q^f` of the residue field.
    pub fn residue_size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.f)
    }

    pub fn elem(&self, coeffs: &[u64]) -> FFElem {
        let c: Poly = coeffs.iter().map(|x| x % self.q).collect();
        FFElem(ff::poly_rem(&c, &self.factor, self.q))
    }

    pub fn zero(&self) -> FFElem {
        FFElem(Vec::new())
    }

    pub fn one(&self) -> FFElem {
        self.elem(&[1])
    }

    pub fn from_i64(&self, n: i64) -> FFElem {
        self.elem(&[n.rem_euclid(self.q as i64) as u64])
    }

    /// Image of `ζ_m`.
    pub fn zeta(&self) -> FFElem {
        self.elem(&[0, 1])
    }

    pub fn add(&self, a: &FFElem, b: &FFElem) -> FFElem {
        FFElem(ff::poly_add(&a.0, &b.0, self.q))
    }

    pub fn sub(&self, a: &FFElem, b: &FFElem) -> FFElem {
        FFElem(ff::poly_sub(&a.0, &b.0, self.q))
    }

    pub fn neg(&self, a: &FFElem) -> FFElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        FFElem(ff::poly_mulmod(&a.0, &b.0, &self.factor, self.q))
    }

    pub fn pow(&self, a: &FFElem, e: &BigUint) -> FFElem {
        FFElem(ff::poly_powmod(&a.0, e, &self.factor, self.q))
    }

    pub fn inv(&self, a: &FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, &(self.residue_size() - 2u32)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: &FFElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let one = self.one();
        let mut acc = a.clone();
        let mut n = 1;
        while acc != one {
            acc = self.mul(&acc, a);
            n += 1;
        }
        Some(n)
    }

    /// Image of an element of `Z[ζ_m]` (or of a fraction whose denominator
    /// is prime to `q`).
    pub fn reduce(&self, x: &CycloNum) -> Result<FFElem> {
        if x.conductor() != self.m {
            return Err(Error::FieldMismatch {
                left: x.conductor(),
                right: self.m,
            });
        }
        let den = mod_q(x.denominator(), self.q);
        if den == 0 {
            return Err(Error::NeedsDenominator(self.q));
        }
        let den_inv = ff::inv(den, self.q);
        let mut c: Poly = x
            .numerators()
            .iter()
            .map(|n| ff::mul(mod_q(n, self.q), den_inv, self.q))
            .collect();
        ff::trim(&mut c);
        Ok(FFElem(ff::poly_rem(&c, &self.factor, self.q)))
    }

    pub fn reduce_mat(&self, g: &MatE) -> Result<FFMat> {
        let mut rows: [[FFElem; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.reduce(g.entry(i, j))?;
            }
        }
        Ok(FFMat { rows })
    }

    pub fn reduce_poly(&self, chi: &CharPoly) -> Result<FFPoly> {
        let coeffs = chi.coeffs().iter().map(|c| self.reduce(c)).collect::<Result<Vec<_>>>()?;
        Ok(FFPoly { coeffs })
    }

    pub fn charpoly_mod(&self, g: &MatE) -> Result<FFPoly> {
        Ok(self.reduce_mat(g)?.char_poly(self))
    }

    /// `(t - a)^3` over the residue field.
    pub fn cube_of_linear(&self, a: &FFElem) -> FFPoly {
        let na = self.neg(a);
        let three = self.from_i64(3);
        let a2 = self.mul(a, a);
        FFPoly {
            coeffs: vec![
                self.mul(&na, &a2),
                self.mul(&three, &a2),
                self.mul(&three, &na),
                self.one(),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFMat {
    pub rows: [[FFElem; 3]; 3],
}

impl FFMat {
    pub fn identity(rep: &PrimeIdealRep) -> Self {
        let mut rows: [[FFElem; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = rep.one();
        }
        Self { rows }
    }

    pub fn entry(&self, i: usize, j: usize) -> &FFElem {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self, rep: &PrimeIdealRep) -> Self {
        let mut rows: [[FFElem; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let mut acc = rep.zero();
                for k in 0..3 {
                    acc = rep.add(&acc, &rep.mul(&self.rows[i][k], &other.rows[k][j]));
                }
                *x = acc;
            }
        }
        Self { rows }
    }

    pub fn pow(&self, mut e: u64, rep: &PrimeIdealRep) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(rep);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, rep);
            }
            base = base.mul(&base, rep);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self, rep: &PrimeIdealRep) -> FFElem {
        let s = rep.add(&self.rows[0][0], &self.rows[1][1]);
        rep.add(&s, &self.rows[2][2])
    }

    fn minor(&self, rep: &PrimeIdealRep, i: usize, j: usize) -> FFElem {
        let a = rep.mul(&self.rows[i][i], &self.rows[j][j]);
        let b = rep.mul(&self.rows[i][j], &self.rows[j][i]);
        rep.sub(&a, &b)
    }

    pub fn det(&self, rep: &PrimeIdealRep) -> FFElem {
        let r = &self.rows;
        let c0 = rep.sub(&rep.mul(&r[1][1], &r[2][2]), &rep.mul(&r[1][2], &r[2][1]));
        let c1 = rep.sub(&rep.mul(&r[1][0], &r[2][2]), &rep.mul(&r[1][2], &r[2][0]));
        let c2 = rep.sub(&rep.mul(&r[1][0], &r[2][1]), &rep.mul(&r[1][1], &r[2][0]));
        let t = rep.sub(&rep.mul(&r[0][0], &c0), &rep.mul(&r[0][1], &c1));
        rep.add(&t, &rep.mul(&r[0][2], &c2))
    }

    /// `det(tI - g)`, constant term first.
    pub fn char_poly(&self, rep: &PrimeIdealRep) -> FFPoly {
        let minors = rep.add(&rep.add(&self.minor(rep, 0, 1), &self.minor(rep, 0, 2)), &self.minor(rep, 1, 2));
        FFPoly {
            coeffs: vec![rep.neg(&self.det(rep)), minors, rep.neg(&self.trace(rep)), rep.one()],
        }
    }
}

/// Polynomial over the residue field, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFPoly {
    pub coeffs: Vec<FFElem>,
}

impl FFPoly {
    /// Coefficients as plain vectors over `Z/q`, each padded to length `f`.
    pub fn to_rows(&self, rep: &PrimeIdealRep) -> Vec<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| {
                let mut v = c.0.clone();
                v.resize(rep.f as usize, 0);
                v
            })
            .collect()
    }

    pub fn from_rows(rows: &[Vec<u64>], rep: &PrimeIdealRep) -> Self {
        Self {
            coeffs: rows.iter().map(|r| rep.elem(r)).collect(),
        }
    }

    pub fn eval(&self, x: &FFElem, rep: &PrimeIdealRep) -> FFElem {
        let mut acc = rep.zero();
        for c in self.coeffs.iter().rev() {
            acc = rep.add(&rep.mul(&acc, x), c);
        }
        acc
    }

    /// Discriminant of a monic cubic; zero exactly when a root repeats over
    /// an algebraic closure.
    pub fn cubic_discriminant(&self, rep: &PrimeIdealRep) -> FFElem {
        debug_assert_eq!(self.coeffs.len(), 4);
        let (d, c, b) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        let k = |n: i64| rep.from_i64(n);
        let m = |x: &FFElem, y: &FFElem| rep.mul(x, y);
        let b2 = m(b, b);
        let c2 = m(c, c);
        let terms = [
            m(&b2, &c2),
            m(&k(-4), &m(&c2, c)),
            m(&k(-4), &m(&m(&b2, b), d)),
            m(&k(-27), &m(d, d)),
            m(&k(18), &m(&m(b, c), d)),
        ];
        terms.iter().fold(rep.zero(), |acc, t| rep.add(&acc, t))
    }

    /// Roots in the residue field with multiplicities, by exhaustive search.
    /// Returns `None` when the residue field has more than `limit` elements.
    pub fn root_multiplicities(&self, rep: &PrimeIdealRep, limit: u64) -> Option<Vec<(FFElem, usize)>> {
        let size = rep.residue_size().to_u64().filter(|&s| s <= limit)?;
        let mut out = Vec::new();
        for idx in 0..size {
            let mut digits = Vec::with_capacity(rep.f as usize);
            let mut r = idx;
            for _ in 0..rep.f {
                digits.push(r % rep.q);
                r /= rep.q;
            }
            let x = rep.elem(&digits);
            let mut p = self.coeffs.clone();
            let mut mult = 0;
            while p.len() > 1 {
                // synthetic division by (t - x)
                let n = p.len() - 1;
                let mut quo = vec![rep.zero(); n];
                let mut carry = rep.zero();
                for i in (0..=n).rev() {
                    let v = rep.add(&p[i], &rep.mul(&carry, &x));
                    if i > 0 {
                        quo[i - 1] = v.clone();
                    } else if !v.is_zero() {
                        quo.clear();
                    }
                    carry = v;
                }
                if quo.is_empty() {
                    break;
                }
                p = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((x, mult));
            }
        }
        Some(out)
    }
}
