use core::array;

use num_bigint::BigInt;

use crate::exactalg::{field_make, CycloNum, Field};
use crate::{Error, Result};

/// A 3×3 matrix over one cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatE {
    rows: [[CycloNum; 3]; 3],
}

impl MatE {
    pub fn new(rows: [[CycloNum; 3]; 3]) -> Result<Self> {
        let m = rows[0][0].conductor();
        for x in rows.iter().flatten() {
            if x.conductor() != m {
                return Err(Error::FieldMismatch {
                    left: m,
                    right: x.conductor(),
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let rows = array::from_fn(|i| array::from_fn(|j| f(i, j)));
        Self::new(rows).expect("entries built over one field")
    }

    pub fn identity(field: &Field) -> Self {
        Self::diag([CycloNum::one(field), CycloNum::one(field), CycloNum::one(field)])
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_fn(|_, _| CycloNum::zero(field))
    }

    pub fn diag(d: [CycloNum; 3]) -> Self {
        let field = d[0].field().clone();
        let mut d = d.map(Some);
        Self::from_fn(|i, j| {
            if i == j {
                d[i].take().expect("diagonal visited once")
            } else {
                CycloNum::zero(&field)
            }
        })
    }

    /// Diagonal matrix `diag(ζ^a, ζ^b, ζ^c)`.
    pub fn diag_zeta(field: &Field, exps: [i64; 3]) -> Self {
        Self::diag(exps.map(|e| CycloNum::zeta_pow(field, e)))
    }

    /// Integer matrix, row-major.
    pub fn from_ints(field: &Field, ints: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| CycloNum::from_int(field, ints[i][j]))
    }

    pub fn field(&self) -> &Field {
        self.rows[0][0].field()
    }

    pub fn conductor(&self) -> u32 {
        self.rows[0][0].conductor()
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycloNum {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[CycloNum; 3]; 3] {
        &self.rows
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(CycloNum::is_integral)
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let x = &self.rows[i][j];
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.conductor() != other.conductor() {
            return Err(Error::FieldMismatch {
                left: self.conductor(),
                right: other.conductor(),
            });
        }
        Ok(self.mul(other))
    }

    /// Panics on field mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        let field = self.field().clone();
        Self::from_fn(|i, j| {
            let mut acc = CycloNum::zero(&field);
            for k in 0..3 {
                let a = &self.rows[i][k];
                let b = &other.rows[k][j];
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| &self.rows[i][j] + &other.rows[i][j])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| &self.rows[i][j] - &other.rows[i][j])
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        Self::from_fn(|i, j| &self.rows[i][j] * s)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    /// `ḡᵗ`
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].conj())
    }

    pub fn trace(&self) -> CycloNum {
        &(&self.rows[0][0] + &self.rows[1][1]) + &self.rows[2][2]
    }

    fn minor(&self, r: [usize; 2], c: [usize; 2]) -> CycloNum {
        let a = &self.rows[r[0]][c[0]] * &self.rows[r[1]][c[1]];
        let b = &self.rows[r[0]][c[1]] * &self.rows[r[1]][c[0]];
        &a - &b
    }

    /// Sum of the three principal 2×2 minors.
    pub fn principal_minor_sum(&self) -> CycloNum {
        let a = self.minor([0, 1], [0, 1]);
        let b = self.minor([0, 2], [0, 2]);
        let c = self.minor([1, 2], [1, 2]);
        &(&a + &b) + &c
    }

    pub fn det(&self) -> CycloNum {
        let r = &self.rows;
        let t0 = &r[0][0] * &self.minor([1, 2], [1, 2]);
        let t1 = &r[0][1] * &self.minor([1, 2], [0, 2]);
        let t2 = &r[0][2] * &self.minor([1, 2], [0, 1]);
        &(&t0 - &t1) + &t2
    }

    fn adjugate(&self) -> Self {
        // adj[i][j] = (-1)^{i+j} M_{ji}
        let others = |k: usize| -> [usize; 2] {
            match k {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            }
        };
        Self::from_fn(|i, j| {
            let m = self.minor(others(j), others(i));
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det().inv()?;
        Ok(self.adjugate().scale(&d))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn extend(&self, target: &Field) -> Result<Self> {
        let mut err = None;
        let out = Self::from_fn(|i, j| match self.rows[i][j].extend(target) {
            Ok(x) => x,
            Err(e) => {
                err = Some(e);
                CycloNum::zero(target)
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn extend_to(&self, big: u32) -> Result<Self> {
        if big == self.conductor() {
            return Ok(self.clone());
        }
        self.extend(&field_make(big)?)
    }

    /// Row-major entries as rational power-basis coordinate lists.
    pub fn coeff_rows(&self) -> [[alloc::vec::Vec<num_rational::BigRational>; 3]; 3] {
        array::from_fn(|i| array::from_fn(|j| self.rows[i][j].coeffs()))
    }

    /// Integral scaling helper used in tests and generators.
    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigInt::from(n);
        Self::from_fn(|i, j| self.rows[i][j].scale(&n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let k = field_make(7).unwrap();
        let z = CycloNum::zeta(&k);
        let one = CycloNum::one(&k);
        let g = MatE::new([
            [one.clone(), z.clone(), CycloNum::zero(&k)],
            [CycloNum::zero(&k), one.clone(), z.conj()],
            [z.clone(), CycloNum::zero(&k), one.clone()],
        ])
        .unwrap();
        let gi = g.inverse().unwrap();
        assert!(g.mul(&gi).is_identity());
        assert!(gi.mul(&g).is_identity());
        let d = g.det();
        // det = 1 + z * z * z^{-1} = 1 + z
        assert_eq!(d, &one + &z);
        assert_eq!(g.pow(0), MatE::identity(&k));
        assert_eq!(g.pow(3), g.mul(&g).mul(&g));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = CycloNum::one(&field_make(5).unwrap());
        let b = CycloNum::one(&field_make(7).unwrap());
        let rows = [
            [a.clone(), a.clone(), a.clone()],
            [a.clone(), b, a.clone()],
            [a.clone(), a.clone(), a],
        ];
        assert!(matches!(MatE::new(rows), Err(Error::FieldMismatch { .. })));
    }
}
