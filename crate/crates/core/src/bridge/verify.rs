use num_traits::Zero;
use rayon::prelude::*;

use crate::diagram::{jacobi_classes, DiagramError, JacobiDiagram};
use crate::rational::{q, Q};
use crate::space::{classify, generate_relations, Algebra, ClassKind, DiagramVector, RelationKind};
use crate::weight::wc_eval;

use super::weights::BcrWeights;

/// One compared pair of exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub label: String,
    pub lhs: Q,
    pub rhs: Q,
}

impl CheckItem {
    pub fn new(label: impl Into<String>, lhs: Q, rhs: Q) -> CheckItem {
        CheckItem {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub degree: usize,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.ok())
    }
}

fn wc_prime(alg: &Algebra, d: &JacobiDiagram) -> Result<Q, DiagramError> {
    let v = DiagramVector::from_diagram(d);
    if v.is_zero() {
        return Ok(Q::zero());
    }
    let space = alg.space(d.degree())?;
    Ok(wc_eval(&space.project_pc(&v)))
}

/// `w_BCR(G) = -w'_C([G])` on every class representative of degree `k`.
pub fn verify_main(k: usize, alg: &Algebra, weights: &BcrWeights) -> Result<Report, DiagramError> {
    let classes = jacobi_classes(k, alg.limits())?;
    alg.space(k)?;
    weights.table(k)?;
    let items = classes
        .par_iter()
        .map(|key| {
            let d = key.jacobi_representative().expect("jacobi key");
            Ok(CheckItem::new(
                key.to_string(),
                weights.wbcr(&d)?,
                -wc_prime(alg, &d)?,
            ))
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    Ok(Report {
        name: "prop32".into(),
        degree: k,
        items,
    })
}

/// `w_BCR` against every STU relator of degree `k`, and its antisymmetry
/// under reversal of one vertex orientation.
pub fn verify_stu(k: usize, weights: &BcrWeights) -> Result<Report, DiagramError> {
    let relators = generate_relations(k, weights.limits())?;
    weights.table(k)?;
    let items = relators
        .par_iter()
        .filter(|r| r.kind != RelationKind::Ihx)
        .map(|r| {
            let w = |d: &JacobiDiagram| weights.wbcr(d);
            Ok(match r.kind {
                RelationKind::Stu => {
                    let lhs = w(&r.terms[0].1)?;
                    let rhs = w(&r.terms[1].1)? - w(&r.terms[2].1)?;
                    CheckItem::new(format!("stu {} @{}", r.source, r.site), lhs, rhs)
                }
                _ => {
                    let lhs = w(&r.terms[0].1)?;
                    let rhs = -w(&r.terms[1].1)?;
                    CheckItem::new(format!("as {} @{}", r.source, r.site), lhs, rhs)
                }
            })
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    Ok(Report {
        name: "stu".into(),
        degree: k,
        items,
    })
}

/// `w_BCR(Gamma_k) = 1 + (-1)^k`, and `w_BCR = 0` on classes with more
/// trivalent vertices than their degree.
pub fn verify_wheels(
    k: usize,
    alg: &Algebra,
    weights: &BcrWeights,
) -> Result<Report, DiagramError> {
    let mut items = Vec::new();
    if k >= 2 {
        let expected = q(1 + if k.is_multiple_of(2) { 1 } else { -1 });
        items.push(CheckItem::new(
            "wheel",
            weights.wbcr(&JacobiDiagram::wheel(k))?,
            expected,
        ));
    }
    for key in jacobi_classes(k, alg.limits())? {
        let d = key.jacobi_representative().expect("jacobi key");
        if d.trivalent_count() > k {
            items.push(CheckItem::new(
                format!("excess {key}"),
                weights.wbcr(&d)?,
                Q::zero(),
            ));
        }
    }
    Ok(Report {
        name: "lemma33".into(),
        degree: k,
        items,
    })
}

/// `w_BCR = 0` on every nonempty product class of degree `k`.
pub fn verify_products(
    k: usize,
    alg: &Algebra,
    weights: &BcrWeights,
) -> Result<Report, DiagramError> {
    let mut items = Vec::new();
    for key in jacobi_classes(k, alg.limits())? {
        let d = key.jacobi_representative().expect("jacobi key");
        if d.vertex_count() > 0 && classify(&d) == ClassKind::Product {
            items.push(CheckItem::new(
                format!("product {key}"),
                weights.wbcr(&d)?,
                Q::zero(),
            ));
        }
    }
    Ok(Report {
        name: "lemma35".into(),
        degree: k,
        items,
    })
}
