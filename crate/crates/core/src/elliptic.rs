//! Classification of finite-order elements of `SU(H)`.
//!
//! A finite-order element is elliptic. With a single eigenvalue it is
//! scalar; with a repeated eigenvalue it is a complex reflection when the
//! 2-dimensional eigenspace has signature `(1,1)` and a reflection through a
//! point when the eigenspace is positive definite; with three distinct
//! eigenvalues it is regular elliptic. Only complex reflections fix more
//! than an isolated point.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::exactalg::{field_make, lcm, CycloNum, Field, Precision};
use crate::hermitian::{hermitian_signature, su_membership, HermForm, MatE, Signature};
use crate::{Error, Result};

/// Monic cubic `t^3 + c2 t^2 + c1 t + c0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub c0: CycloNum,
    pub c1: CycloNum,
    pub c2: CycloNum,
}

impl CharPoly {
    /// `(t - a)(t - b)(t - c)`
    pub fn from_roots(a: &CycloNum, b: &CycloNum, c: &CycloNum) -> Self {
        let ab = a * b;
        Self {
            c0: -(&ab * c),
            c1: &(&ab + &(a * c)) + &(b * c),
            c2: -(&(a + b) + c),
        }
    }

    pub fn field(&self) -> &Field {
        self.c0.field()
    }

    /// Coefficients constant term first, including the leading 1.
    pub fn coeffs(&self) -> [CycloNum; 4] {
        [
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            CycloNum::one(self.field()),
        ]
    }

    pub fn eval(&self, x: &CycloNum) -> CycloNum {
        let mut acc = &self.c2 + x;
        acc = &(&acc * x) + &self.c1;
        &(&acc * x) + &self.c0
    }

    /// Evaluate at a matrix (Cayley–Hamilton check).
    pub fn eval_mat(&self, g: &MatE) -> MatE {
        let id = MatE::identity(g.field());
        let mut acc = g.add(&id.scale(&self.c2));
        acc = acc.mul(g).add(&id.scale(&self.c1));
        acc.mul(g).add(&id.scale(&self.c0))
    }

    pub fn extend(&self, target: &Field) -> Result<Self> {
        Ok(Self {
            c0: self.c0.extend(target)?,
            c1: self.c1.extend(target)?,
            c2: self.c2.extend(target)?,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.c0.is_integral() && self.c1.is_integral() && self.c2.is_integral()
    }
}

pub fn char_poly(g: &MatE) -> CharPoly {
    CharPoly {
        c0: -g.det(),
        c1: g.principal_minor_sum(),
        c2: -g.trace(),
    }
}

/// Least `n <= cap` with `g^n = 1`.
pub fn element_order(g: &MatE, cap: u64) -> Option<u64> {
    let mut acc = g.clone();
    for n in 1..=cap {
        if acc.is_identity() {
            return Some(n);
        }
        if n < cap {
            acc = acc.mul(g);
        }
    }
    None
}

/// Default order cap for matrices over `Q(ζ_m)`.
pub fn default_cap(m: u32) -> u64 {
    3 * u64::from(m) * u64::from(m)
}

/// `exp(2πi exponent / order)` with `gcd(exponent, order) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    pub order: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    /// `exp(2πi k / n)` in lowest terms.
    pub fn new(k: i64, n: u32) -> Self {
        let k = k.rem_euclid(i64::from(n)) as u32;
        let g = k.gcd(&n);
        if k == 0 {
            return Self { order: 1, exponent: 0 };
        }
        Self {
            order: n / g,
            exponent: k / g,
        }
    }

    pub fn pow(self, e: u64) -> Self {
        let k = (u64::from(self.exponent) * e) % u64::from(self.order);
        Self::new(k as i64, self.order)
    }

    /// The element in `Q(ζ_L)`; requires `order | L`.
    pub fn to_cyclo(self, field: &Field) -> Result<CycloNum> {
        let l = field.conductor();
        if !l.is_multiple_of(self.order) {
            return Err(Error::ConductorNotDivisible {
                from: self.order,
                to: l,
            });
        }
        Ok(CycloNum::zeta_pow(field, i64::from(self.exponent * (l / self.order))))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.exponent, self.order)
    }
}

/// Identify `x` as a root of unity, if it is one. The roots of unity in
/// `Q(ζ_m)` are exactly `±ζ_m^k`.
pub fn as_root_of_unity(x: &CycloNum) -> Option<RootOfUnity> {
    if !x.is_integral() {
        return None;
    }
    let m = x.conductor();
    let neg = -x;
    for k in 0..m {
        let z = CycloNum::zeta_pow(x.field(), i64::from(k));
        if z == *x {
            return Some(RootOfUnity::new(i64::from(k), m));
        }
        if z == neg {
            return Some(RootOfUnity::new(i64::from(2 * k + m), 2 * m));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenvalue {
    pub value: CycloNum,
    pub root: RootOfUnity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElliptTag {
    Scalar,
    ComplexReflection,
    PointReflection,
    RegularElliptic,
}

impl ElliptTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ElliptTag::Scalar => "Scalar",
            ElliptTag::ComplexReflection => "ComplexReflection",
            ElliptTag::PointReflection => "PointReflection",
            ElliptTag::RegularElliptic => "RegularElliptic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            ElliptTag::Scalar,
            ElliptTag::ComplexReflection,
            ElliptTag::PointReflection,
            ElliptTag::RegularElliptic,
        ]
        .into_iter()
        .find(|t| t.as_str() == s)
    }
}

impl fmt::Display for ElliptTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification verdict. Eigenvalues live in `Q(ζ_L)`, `L = lcm(m, n)`
/// with `n` the order of the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EllipticClass {
    Scalar {
        eigenvalue: Eigenvalue,
    },
    ComplexReflection {
        repeated: Eigenvalue,
        simple: Eigenvalue,
    },
    PointReflection {
        repeated: Eigenvalue,
        simple: Eigenvalue,
    },
    RegularElliptic {
        eigenvalues: [Eigenvalue; 3],
    },
}

impl EllipticClass {
    pub fn tag(&self) -> ElliptTag {
        match self {
            EllipticClass::Scalar { .. } => ElliptTag::Scalar,
            EllipticClass::ComplexReflection { .. } => ElliptTag::ComplexReflection,
            EllipticClass::PointReflection { .. } => ElliptTag::PointReflection,
            EllipticClass::RegularElliptic { .. } => ElliptTag::RegularElliptic,
        }
    }

    /// Eigenvalues with multiplicity, sorted by root of unity.
    pub fn eigen_roots(&self) -> Vec<RootOfUnity> {
        let mut v = match self {
            EllipticClass::Scalar { eigenvalue } => vec![eigenvalue.root; 3],
            EllipticClass::ComplexReflection { repeated, simple }
            | EllipticClass::PointReflection { repeated, simple } => {
                vec![repeated.root, repeated.root, simple.root]
            }
            EllipticClass::RegularElliptic { eigenvalues } => eigenvalues.iter().map(|e| e.root).collect(),
        };
        v.sort();
        v
    }
}

/// Divide `p` (constant term first) by `t - r`, returning the quotient if
/// the division is exact.
fn deflate(p: &[CycloNum], r: &CycloNum) -> Option<Vec<CycloNum>> {
    let n = p.len() - 1;
    let mut q = vec![CycloNum::zero(r.field()); n];
    let mut carry = CycloNum::zero(r.field());
    for i in (0..=n).rev() {
        let v = &p[i] + &(&carry * r);
        if i == 0 {
            return v.is_zero().then_some(q);
        }
        q[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Basis of the left kernel `{z : z A = 0}` of a 3×3 matrix.
fn left_kernel(a: &MatE) -> Vec<[CycloNum; 3]> {
    let field = a.field().clone();
    // rows of Aᵗ, eliminated to reduced echelon form
    let mut rows: Vec<Vec<CycloNum>> = (0..3).map(|j| (0..3).map(|i| a.entry(i, j).clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..3 {
        let Some(p) = (r..3).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..3 {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..3 {
                    let t = &f * &rows[r][k];
                    rows[i][k] = &rows[i][k] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = [CycloNum::zero(&field), CycloNum::zero(&field), CycloNum::zero(&field)];
            v[fc] = CycloNum::one(&field);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[i][fc];
            }
            v
        })
        .collect()
}

/// `u H v̄ᵗ` for row vectors; this is the form preserved by `g` when
/// `g H ḡᵗ = H`.
fn form_value(h: &MatE, u: &[CycloNum; 3], v: &[CycloNum; 3]) -> CycloNum {
    let mut acc = CycloNum::zero(h.field());
    for i in 0..3 {
        for j in 0..3 {
            let hij = h.entry(i, j);
            if !hij.is_zero() && !u[i].is_zero() && !v[j].is_zero() {
                acc = &acc + &(&(&u[i] * hij) * &v[j].conj());
            }
        }
    }
    acc
}

/// Signature of `H` restricted to the eigenspace of a repeated eigenvalue.
fn eigenspace_signature(g: &MatE, h: &MatE, lambda: &CycloNum, prec: Precision) -> Result<Signature> {
    let shifted = g.sub(&MatE::identity(g.field()).scale(lambda));
    let basis = left_kernel(&shifted);
    if basis.len() != 2 {
        return Err(Error::UnexpectedEigenspace(format!(
            "repeated eigenvalue has a {}-dimensional eigenspace",
            basis.len()
        )));
    }
    let g00 = form_value(h, &basis[0], &basis[0]);
    let g01 = form_value(h, &basis[0], &basis[1]);
    let g11 = form_value(h, &basis[1], &basis[1]);
    let det = &(&g00 * &g11) - &(&g01 * &g01.conj());
    let trace = &g00 + &g11;
    let one = CycloNum::one(g.field());
    hermitian_signature(&[det, -trace, one], 1, prec).map_err(|e| match e {
        Error::DegenerateForm(_) => Error::UnexpectedEigenspace("degenerate eigenspace Gram matrix".into()),
        other => other,
    })
}

/// Classify a finite-order element `g` of `SU(H)`.
///
/// Eigenvalues are located exactly among the `n`-th roots of unity in
/// `Q(ζ_{lcm(m,n)})`; for a repeated eigenvalue the restriction of `H` to
/// its eigenspace decides between complex reflection and point reflection.
pub fn classify(g: &MatE, h: &HermForm, cap: u64, prec: Precision) -> Result<EllipticClass> {
    if g.conductor() != h.field().conductor() {
        return Err(Error::FieldMismatch {
            left: g.conductor(),
            right: h.field().conductor(),
        });
    }
    if !su_membership(g, h) {
        return Err(Error::NotInSu);
    }
    let n = element_order(g, cap).ok_or(Error::InfiniteOrder(cap))?;
    let big = lcm(g.conductor(), n as u32);
    let field = field_make(big)?;
    let g = g.extend(&field)?;
    let h = h.extend(&field)?;
    let mut remaining: Vec<CycloNum> = char_poly(&g).coeffs().into();
    let mut found: Vec<(Eigenvalue, usize)> = Vec::new();
    let step = i64::from(big) / n as i64;
    for k in 0..n as i64 {
        let lambda = CycloNum::zeta_pow(&field, k * step);
        let mut mult = 0;
        while remaining.len() > 1 {
            match deflate(&remaining, &lambda) {
                Some(q) => {
                    remaining = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            found.push((
                Eigenvalue {
                    value: lambda,
                    root: RootOfUnity::new(k, n as u32),
                },
                mult,
            ));
        }
    }
    if remaining.len() != 1 {
        return Err(Error::UnexpectedEigenspace(
            "characteristic polynomial does not split over the order's roots of unity".into(),
        ));
    }
    match found.len() {
        1 => Ok(EllipticClass::Scalar {
            eigenvalue: found.remove(0).0,
        }),
        2 => {
            let (rep_idx, simple_idx) = if found[0].1 == 2 { (0, 1) } else { (1, 0) };
            let simple = found[simple_idx].0.clone();
            let repeated = found[rep_idx].0.clone();
            let sig = eigenspace_signature(&g, h.matrix(), &repeated.value, prec)?;
            match (sig.pos, sig.neg) {
                (1, 1) => Ok(EllipticClass::ComplexReflection { repeated, simple }),
                (2, 0) => Ok(EllipticClass::PointReflection { repeated, simple }),
                _ => Err(Error::UnexpectedEigenspace(format!(
                    "eigenspace signature ({}, {})",
                    sig.pos, sig.neg
                ))),
            }
        }
        _ => {
            let mut it = found.into_iter().map(|(e, _)| e);
            let eigenvalues = [
                it.next().expect("three eigenvalues"),
                it.next().expect("three eigenvalues"),
                it.next().expect("three eigenvalues"),
            ];
            Ok(EllipticClass::RegularElliptic { eigenvalues })
        }
    }
}

/// Scale a finite-order `g` by a cube root of `det(g)^{-1}` so that the
/// result lies in `SL_3`. The projective action is unchanged. The result is
/// defined over `Q(ζ_L)` with `L = lcm(m, 3·ord(det g))`; a matrix with
/// determinant 1 is returned unchanged.
pub fn normalize_to_su(g: &MatE) -> Result<MatE> {
    let d = g.det();
    if d.is_one() {
        return Ok(g.clone());
    }
    let root = as_root_of_unity(&d).ok_or(Error::NotRootOfUnity)?;
    let n = root.order;
    let big = lcm(g.conductor(), 3 * n);
    let field = field_make(big)?;
    let s = RootOfUnity::new(-i64::from(root.exponent), 3 * n).to_cyclo(&field)?;
    Ok(g.extend(&field)?.scale(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{find_beta, rat};
    use crate::hermitian::build_h_beta;

    fn h_beta(m: u32) -> HermForm {
        let k = field_make(m).unwrap();
        build_h_beta(&find_beta(&k, 2, Precision::default()).unwrap()).unwrap()
    }

    fn std_form(field: &Field) -> HermForm {
        build_h_beta(&CycloNum::from_int(field, -1)).unwrap()
    }

    fn tag(g: &MatE, h: &HermForm) -> ElliptTag {
        classify(g, h, default_cap(g.conductor()), Precision::default()).unwrap().tag()
    }

    #[test]
    fn char_poly_examples() {
        let k = field_make(5).unwrap();
        let id = MatE::identity(&k);
        let cp = char_poly(&id);
        assert_eq!(cp.c2, CycloNum::from_int(&k, -3));
        assert_eq!(cp.c1, CycloNum::from_int(&k, 3));
        assert_eq!(cp.c0, CycloNum::from_int(&k, -1));
        let g = MatE::diag_zeta(&k, [1, -1, 0]);
        let z = CycloNum::zeta(&k);
        assert_eq!(char_poly(&g), CharPoly::from_roots(&z, &z.conj(), &CycloNum::one(&k)));
        assert_eq!(char_poly(&g).eval_mat(&g), MatE::zero(&k));
    }

    #[test]
    fn orders() {
        let k = field_make(5).unwrap();
        assert_eq!(element_order(&MatE::diag_zeta(&k, [1, -1, 0]), 10), Some(5));
        assert_eq!(element_order(&MatE::identity(&k), 10), Some(1));
        let unipotent = MatE::from_ints(&k, [[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
        assert_eq!(element_order(&unipotent, 100), None);
    }

    #[test]
    fn g5_is_regular_elliptic() {
        let h = h_beta(5);
        let g = MatE::diag_zeta(h.field(), [1, -1, 0]);
        let c = classify(&g, &h, 75, Precision::default()).unwrap();
        assert_eq!(c.tag(), ElliptTag::RegularElliptic);
        assert_eq!(
            c.eigen_roots(),
            [RootOfUnity::new(0, 1), RootOfUnity::new(1, 5), RootOfUnity::new(4, 5)]
        );
    }

    #[test]
    fn point_reflection_minus_one() {
        let h = h_beta(5);
        let g = MatE::from_ints(h.field(), [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        assert_eq!(tag(&g, &h), ElliptTag::PointReflection);
    }

    #[test]
    fn scalars() {
        let h = h_beta(5);
        assert_eq!(tag(&MatE::identity(h.field()), &h), ElliptTag::Scalar);
        let h9 = h_beta(9);
        let w = MatE::diag_zeta(h9.field(), [3, 3, 3]);
        assert_eq!(tag(&w, &h9), ElliptTag::Scalar);
    }

    #[test]
    fn reflections_with_repeated_fifth_root() {
        let h = h_beta(5);
        let k = h.field().clone();
        let pr = MatE::diag_zeta(&k, [1, 1, -2]);
        assert_eq!(tag(&pr, &h), ElliptTag::PointReflection);
        let cr = MatE::diag_zeta(&k, [1, -2, 1]);
        assert_eq!(tag(&cr, &h), ElliptTag::ComplexReflection);
    }

    #[test]
    fn classify_preconditions() {
        let h = h_beta(5);
        let k = h.field().clone();
        let not_su = MatE::diag_zeta(&k, [1, 0, 0]);
        assert_eq!(classify(&not_su, &h, 75, Precision::default()), Err(Error::NotInSu));
        let other = MatE::identity(&field_make(7).unwrap());
        assert!(matches!(
            classify(&other, &h, 75, Precision::default()),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        let k3 = field_make(3).unwrap();
        let g = MatE::diag_zeta(&k3, [1, 0, 0]);
        let n = normalize_to_su(&g).unwrap();
        assert_eq!(n.conductor(), 9);
        assert!(n.det().is_one());
        let k9 = field_make(9).unwrap();
        let expected = g.extend(&k9).unwrap().scale(&CycloNum::zeta_pow(&k9, -1));
        assert_eq!(n, expected);

        let k5 = field_make(5).unwrap();
        let sl = MatE::diag_zeta(&k5, [1, -1, 0]);
        assert_eq!(normalize_to_su(&sl).unwrap(), sl);

        let two = MatE::from_ints(&k5, [[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(normalize_to_su(&two), Err(Error::NotRootOfUnity));
        let half = MatE::diag([
            CycloNum::from_rational(&k5, &rat(1, 2)),
            CycloNum::from_int(&k5, 2),
            CycloNum::one(&k5),
        ]);
        assert_eq!(normalize_to_su(&half).unwrap(), half);
    }

    #[test]
    fn classical_reflection_after_normalization() {
        // diag(ζ_4, 1, 1): eigenvalue 1 twice with eigenspace span(e2, e3).
        let k4 = field_make(4).unwrap();
        let g = MatE::diag_zeta(&k4, [1, 0, 0]);
        let n = normalize_to_su(&g).unwrap();
        let h = std_form(n.field());
        assert_eq!(tag(&n, &h), ElliptTag::ComplexReflection);
    }

    #[test]
    fn roots_of_unity_identified() {
        let k = field_make(5).unwrap();
        assert_eq!(as_root_of_unity(&CycloNum::zeta_pow(&k, 2)), Some(RootOfUnity::new(2, 5)));
        assert_eq!(as_root_of_unity(&-CycloNum::zeta_pow(&k, 1)), Some(RootOfUnity::new(7, 10)));
        assert_eq!(as_root_of_unity(&CycloNum::from_int(&k, -1)), Some(RootOfUnity::new(1, 2)));
        assert_eq!(as_root_of_unity(&CycloNum::from_int(&k, 2)), None);
    }

    #[test]
    fn conjugation_invariance_with_rotation() {
        // Over Q(ζ_12): a real rotation by 60° in the (e1,e2) plane is in SU(diag(1,1,-1)).
        let k = field_make(12).unwrap();
        let h = std_form(&k);
        let z = CycloNum::zeta(&k);
        let sqrt3 = &z + &z.conj();
        let half = CycloNum::from_rational(&k, &rat(1, 2));
        let c = half.clone();
        let s = &sqrt3 * &half;
        let zero = CycloNum::zero(&k);
        let one = CycloNum::one(&k);
        let rot = MatE::new([
            [c.clone(), -&s, zero.clone()],
            [s.clone(), c.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ])
        .unwrap();
        assert!(su_membership(&rot, &h));
        let rot_inv = rot.inverse().unwrap();
        let samples = [
            MatE::diag_zeta(&k, [1, -1, 0]),
            MatE::diag_zeta(&k, [4, 4, 4]),
            MatE::diag_zeta(&k, [6, 6, 0]),
            MatE::diag_zeta(&k, [4, -8, 4]),
            MatE::diag_zeta(&k, [3, 5, 4]),
        ];
        for g in &samples {
            let before = classify(g, &h, 500, Precision::default()).unwrap();
            let conj = rot.mul(g).mul(&rot_inv);
            let after = classify(&conj, &h, 500, Precision::default()).unwrap();
            assert_eq!(before.tag(), after.tag());
            assert_eq!(before.eigen_roots(), after.eigen_roots());
        }
    }
}
