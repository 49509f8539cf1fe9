//! The imprimitive reflection groups `G(m,p,2) = A(m,p,2) ⋊ ⟨w⟩` inside
//! `U(2,1)`, the special subgroup `S(m,p,2)`, and exhaustive torsion censuses.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::elliptic::{classify, default_cap, element_order, normalize_to_su, ElliptTag};
use crate::exactalg::{field_make, CycloNum, Field, Precision};
use crate::hermitian::{HermForm, MatE};
use crate::{Error, Result};

/// `diag(ζ_m^{a1}, ζ_m^{a2}) · w^swap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gmp2Element {
    pub a1: u32,
    pub a2: u32,
    pub swap: bool,
}

impl Gmp2Element {
    pub const IDENTITY: Self = Self {
        a1: 0,
        a2: 0,
        swap: false,
    };

    pub fn new(a1: u32, a2: u32, swap: bool) -> Self {
        Self { a1, a2, swap }
    }
}

impl fmt::Display for Gmp2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a1, self.a2, u8::from(self.swap))
    }
}

#[derive(Debug, Clone)]
pub struct Gmp2Group {
    m: u32,
    p: u32,
    elements: Vec<Gmp2Element>,
    field: Field,
    embedded: BTreeMap<Gmp2Element, MatE>,
}

/// Smallest conductor that can host `μ_m`.
fn natural_conductor(m: u32) -> u32 {
    if m < 3 {
        2 * m
    } else {
        m
    }
}

pub fn build_group(m: u32, p: u32) -> Result<Gmp2Group> {
    if p < 2 || !m.is_multiple_of(p) {
        return Err(Error::NotDivisible { m, p });
    }
    let mut elements = Vec::with_capacity((2 * m * m / p) as usize);
    for a1 in 0..m {
        for a2 in 0..m {
            if (a1 + a2) % p == 0 {
                for swap in [false, true] {
                    elements.push(Gmp2Element::new(a1, a2, swap));
                }
            }
        }
    }
    elements.sort();
    let field = field_make(natural_conductor(m))?;
    let mut g = Gmp2Group {
        m,
        p,
        elements,
        field,
        embedded: BTreeMap::new(),
    };
    g.validate()?;
    for e in g.elements.clone() {
        let mat = embed_u21(m, e, &g.field)?;
        g.embedded.insert(e, mat);
    }
    Ok(g)
}

impl Gmp2Group {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn elements(&self) -> &[Gmp2Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The field the cached matrices live in.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn contains(&self, e: &Gmp2Element) -> bool {
        e.a1 < self.m && e.a2 < self.m && (e.a1 + e.a2).is_multiple_of(self.p)
    }

    /// Cached embedding over [`Gmp2Group::field`].
    pub fn matrix(&self, e: &Gmp2Element) -> Option<&MatE> {
        self.embedded.get(e)
    }

    pub fn mul(&self, x: &Gmp2Element, y: &Gmp2Element) -> Gmp2Element {
        let (b1, b2) = if x.swap { (y.a2, y.a1) } else { (y.a1, y.a2) };
        Gmp2Element::new((x.a1 + b1) % self.m, (x.a2 + b2) % self.m, x.swap ^ y.swap)
    }

    pub fn inverse(&self, x: &Gmp2Element) -> Gmp2Element {
        let neg = |a: u32| (self.m - a) % self.m;
        if x.swap {
            // (D w)^{-1} = w D^{-1} = swap(D^{-1}) w
            Gmp2Element::new(neg(x.a2), neg(x.a1), true)
        } else {
            Gmp2Element::new(neg(x.a1), neg(x.a2), false)
        }
    }

    pub fn pow(&self, x: &Gmp2Element, k: u64) -> Gmp2Element {
        let mut acc = Gmp2Element::IDENTITY;
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn order(&self, x: &Gmp2Element) -> u64 {
        let mut acc = *x;
        let mut n = 1;
        while acc != Gmp2Element::IDENTITY {
            acc = self.mul(&acc, x);
            n += 1;
        }
        n
    }

    /// Exponents mod `2m` of the two eigenvalues in `U(2)`, as powers of
    /// `ζ_{2m}`, sorted.
    pub fn u2_eigen_exponents(&self, x: &Gmp2Element) -> [u32; 2] {
        let mut e = if x.swap {
            let k = (x.a1 + x.a2) % self.m;
            [k, k + self.m]
        } else {
            [2 * x.a1, 2 * x.a2]
        };
        e.sort();
        e
    }

    /// Reflection in `U(2)`: a non-identity element with eigenvalue 1.
    pub fn is_classical_reflection(&self, x: &Gmp2Element) -> bool {
        let e = self.u2_eigen_exponents(x);
        (e[0] == 0) != (e[1] == 0)
    }

    fn validate(&self) -> Result<()> {
        let expected = 2 * self.m as usize * self.m as usize / self.p as usize;
        if self.elements.len() != expected {
            return Err(Error::InvalidInput("element count differs from 2m²/p".into()));
        }
        let closed = self.elements.iter().all(|x| {
            self.contains(&self.inverse(x))
                && self.mul(x, &self.inverse(x)) == Gmp2Element::IDENTITY
                && self.elements.iter().all(|y| self.contains(&self.mul(x, y)))
        });
        if !closed {
            return Err(Error::InvalidInput("element set is not closed".into()));
        }
        // associativity on a deterministic sample of triples
        let n = self.elements.len();
        for i in 0..n.min(16) {
            let x = &self.elements[i];
            let y = &self.elements[(7 * i + 3) % n];
            let z = &self.elements[(13 * i + 5) % n];
            if self.mul(&self.mul(x, y), z) != self.mul(x, &self.mul(y, z)) {
                return Err(Error::InvalidInput("multiplication is not associative".into()));
            }
        }
        Ok(())
    }
}

/// The matrix `diag(ζ^{a1}, ζ^{a2}, 1) · P^swap`, with `P` exchanging the
/// first two coordinates, over a field whose conductor is a multiple of
/// `m`.
pub fn embed_u21(m: u32, e: Gmp2Element, target: &Field) -> Result<MatE> {
    let big = target.conductor();
    if !big.is_multiple_of(m) {
        return Err(Error::ConductorNotDivisible { from: m, to: big });
    }
    let s = i64::from(big / m);
    let d = MatE::diag_zeta(target, [i64::from(e.a1) * s, i64::from(e.a2) * s, 0]);
    if e.swap {
        Ok(d.mul(&MatE::from_ints(target, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])))
    } else {
        Ok(d)
    }
}

/// `S(m,p,2)`: elements whose embedded matrix has determinant 1.
pub fn special_subgroup(g: &Gmp2Group) -> Vec<Gmp2Element> {
    g.elements
        .iter()
        .filter(|e| g.embedded[e].det().is_one())
        .copied()
        .collect()
}

/// `g_p = diag(ζ_p, ζ_p^{-1}, 1)` over `target`.
pub fn g_p(p: u32, target: &Field) -> Result<MatE> {
    if p == 2 {
        return Err(Error::PrimeTwoUnsupported);
    }
    if p < 2 || !is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    let m = target.conductor();
    if !m.is_multiple_of(p) {
        return Err(Error::NotDivisible { m, p });
    }
    let s = i64::from(m / p);
    Ok(MatE::diag_zeta(target, [s, -s, 0]))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub element: Gmp2Element,
    pub order: u64,
    pub class: ElliptTag,
    /// Reflection in the classical `U(2)` sense.
    pub classical_reflection: bool,
}

/// Outcome of the structural checks on a census. `None` marks an item whose
/// hypothesis does not hold for the given `(m, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureChecks {
    /// Every embedded element preserves `H`.
    pub form_preserved: bool,
    /// `|G| = 2m²/p`.
    pub order_formula: bool,
    /// Complex reflections have order 2 or order dividing `m/p`.
    pub reflection_orders: bool,
    /// Complex reflections of order other than 2 lie in `A(m,p,2)`.
    pub reflections_diagonal: bool,
    /// No power of an order-`p` element is a complex reflection.
    pub order_p_powers: Option<bool>,
    /// Some element of order `p` is regular elliptic.
    pub regular_of_order_p: Option<bool>,
    /// Classical and `U(2,1)` reflection notions agree, and regular
    /// elliptic elements are those with distinct nontrivial eigenvalues.
    pub reflection_notions_agree: bool,
}

impl StructureChecks {
    pub fn all_hold(&self) -> bool {
        self.form_preserved
            && self.order_formula
            && self.reflection_orders
            && self.reflections_diagonal
            && self.order_p_powers != Some(false)
            && self.regular_of_order_p != Some(false)
            && self.reflection_notions_agree
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub m: u32,
    pub p: u32,
    /// Ordered by `(a1, a2, swap)`.
    pub rows: Vec<CensusRow>,
    pub checks: StructureChecks,
}

impl Census {
    pub fn row(&self, e: &Gmp2Element) -> Option<&CensusRow> {
        self.rows
            .binary_search_by(|r| r.element.cmp(e))
            .ok()
            .map(|i| &self.rows[i])
    }

    /// Tab-separated `element, order, class` with a header line.
    pub fn to_tsv(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::from("element\torder\tclass\n");
        for r in &self.rows {
            let _ = writeln!(out, "{}\t{}\t{}", r.element, r.order, r.class);
        }
        out
    }
}

/// Classify every element of `G` (after scaling into `SU`) with respect to
/// `H`, and check the structural facts about reflections and order-`p`
/// elements against the result.
pub fn torsion_census(g: &Gmp2Group, h: &HermForm, prec: Precision) -> Result<Census> {
    let hf = h.field().clone();
    let mut rows = Vec::with_capacity(g.len());
    let mut form_preserved = true;
    let mut notions_agree = true;
    for e in &g.elements {
        let mat = embed_u21(g.m, *e, &hf)?;
        form_preserved &= mat.mul(h.matrix()).mul(&mat.conj_transpose()) == *h.matrix();
        if !form_preserved {
            return Err(Error::InvalidInput("the group does not preserve the given form".into()));
        }
        let order = element_order(&mat, default_cap(g.m.max(3))).ok_or(Error::InfiniteOrder(default_cap(g.m)))?;
        debug_assert_eq!(order, g.order(e));
        let normalized = normalize_to_su(&mat)?;
        let h_ext = h.extend(normalized.field())?;
        let class = classify(&normalized, &h_ext, default_cap(normalized.conductor()), prec)?.tag();
        let classical = g.is_classical_reflection(e);
        let ex = g.u2_eigen_exponents(e);
        let regular_oracle = ex[0] != ex[1] && ex[0] != 0 && ex[1] != 0;
        notions_agree &= classical == (class == ElliptTag::ComplexReflection);
        notions_agree &= regular_oracle == (class == ElliptTag::RegularElliptic);
        rows.push(CensusRow {
            element: *e,
            order,
            class,
            classical_reflection: classical,
        });
    }
    let class_of: BTreeMap<Gmp2Element, ElliptTag> = rows.iter().map(|r| (r.element, r.class)).collect();
    let (m, p) = (g.m, g.p);
    let mp = u64::from(m / p);
    let reflections: Vec<&CensusRow> = rows.iter().filter(|r| r.class == ElliptTag::ComplexReflection).collect();
    let reflection_orders = reflections.iter().all(|r| r.order == 2 || mp % r.order == 0);
    let reflections_diagonal = reflections.iter().all(|r| r.order == 2 || !r.element.swap);
    let order_p: Vec<&CensusRow> = rows.iter().filter(|r| r.order == u64::from(p)).collect();
    let order_p_powers = (p >= 3 && p % 2 == 1 && (m / p).gcd(&p) == 1).then(|| {
        order_p.iter().all(|r| {
            (1..u64::from(p)).all(|k| class_of[&g.pow(&r.element, k)] != ElliptTag::ComplexReflection)
        })
    });
    let regular_of_order_p =
        (p >= 3).then(|| order_p.iter().any(|r| r.class == ElliptTag::RegularElliptic));
    let checks = StructureChecks {
        form_preserved,
        order_formula: g.len() as u64 == 2 * u64::from(m) * u64::from(m) / u64::from(p),
        reflection_orders,
        reflections_diagonal,
        order_p_powers,
        regular_of_order_p,
        reflection_notions_agree: notions_agree,
    };
    Ok(Census { m, p, rows, checks })
}

/// The form `diag(1, 1, -1)` over the group's natural field.
pub fn standard_form(g: &Gmp2Group) -> HermForm {
    let f = &g.field;
    HermForm::new(MatE::diag([CycloNum::one(f), CycloNum::one(f), CycloNum::from_int(f, -1)]))
        .expect("diag(1,1,-1) is Hermitian and integral")
}
