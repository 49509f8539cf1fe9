use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::elliptic::{classify, default_cap, element_order, ElliptTag};
use crate::exactalg::Precision;
use crate::hermitian::{su_membership, HermForm, MatE};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeWord {
    pub word: String,
    pub order: Option<u64>,
    pub class: Option<ElliptTag>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub relations: Vec<RelationCheck>,
    pub probes: Vec<ProbeWord>,
    pub r1r2_order: Option<u64>,
    /// `Some` when `R1 R2` has order 12: whether its sixth power, an
    /// involution, is a reflection through a point.
    pub involution_is_point_reflection: Option<bool>,
    /// Both generators are scalar, so every relation holds trivially.
    pub degenerate: bool,
}

impl PresentationReport {
    pub fn all_relations_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Check the relations `R1^3 = (R1 J)^7 = J^3 = 1`, the cyclic conjugation
/// `J R3 J^{-1} = R1` and the braid relation `R1 R2 R1 R2 = R2 R1 R2 R1`,
/// where `R2 = J R1 J^{-1}` and `R3 = J R2 J^{-1}`, and classify the probe
/// words of finite order.
pub fn verify_p2_presentation(r1: &MatE, j: &MatE, h: &HermForm, prec: Precision) -> Result<PresentationReport> {
    if r1.conductor() != j.conductor() || r1.conductor() != h.field().conductor() {
        return Err(Error::FieldMismatch {
            left: r1.conductor(),
            right: j.conductor(),
        });
    }
    if !su_membership(r1, h) || !su_membership(j, h) {
        return Err(Error::NotInSu);
    }
    let j_inv = j.inverse()?;
    let r2 = j.mul(r1).mul(&j_inv);
    let r3 = j.mul(&r2).mul(&j_inv);
    let r1j = r1.mul(j);
    let r1r2 = r1.mul(&r2);
    let rel = |relation: &str, holds: bool| RelationCheck {
        relation: relation.to_string(),
        holds,
    };
    let relations = alloc::vec![
        rel("R1^3 = 1", r1.pow(3).is_identity()),
        rel("(R1 J)^7 = 1", r1j.pow(7).is_identity()),
        rel("J^3 = 1", j.pow(3).is_identity()),
        rel("J R3 J^-1 = R1", j.mul(&r3).mul(&j_inv) == *r1),
        rel("R1 R2 R1 R2 = R2 R1 R2 R1", r1r2.mul(&r1r2) == r2.mul(r1).mul(&r2).mul(r1)),
    ];
    let cap = default_cap(r1.conductor()).max(144);
    let involution = r1r2.pow(6);
    let words = [
        ("R1", r1.clone()),
        ("J", j.clone()),
        ("R1 J", r1j),
        ("R1 R2", r1r2.clone()),
        ("(R1 R2)^6", involution),
    ];
    let mut probes = Vec::new();
    for (word, g) in words {
        let order = element_order(&g, cap);
        let class = match order {
            Some(_) => Some(classify(&g, h, cap, prec)?.tag()),
            None => None,
        };
        probes.push(ProbeWord {
            word: word.to_string(),
            order,
            class,
        });
    }
    let r1r2_order = probes[3].order;
    let involution_is_point_reflection =
        (r1r2_order == Some(12)).then(|| probes[4].class == Some(ElliptTag::PointReflection));
    let degenerate = probes[0].class == Some(ElliptTag::Scalar) && probes[1].class == Some(ElliptTag::Scalar);
    Ok(PresentationReport {
        relations,
        probes,
        r1r2_order,
        involution_is_point_reflection,
        degenerate,
    })
}
