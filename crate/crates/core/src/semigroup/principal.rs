use std::fmt;

use super::{bfs_closure, enumerate_j_class, ElementSet};
use crate::error::Result;
use crate::relations::DifunRelation;

/// An element of a principal factor `J*`: the adjoined zero or a member of `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PfElement {
    Zero,
    Elem(DifunRelation),
}

impl fmt::Display for PfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PfElement::Zero => write!(f, "0"),
            PfElement::Elem(e) => write!(f, "{e}"),
        }
    }
}

/// `J_r*`: the J-class of rank `r` with an adjoined zero, where `a * b` is
/// `a ⋄ b` if that stays in `J_r` and zero otherwise.
#[derive(Debug, Clone)]
pub struct PrincipalFactor {
    r: usize,
    j_class: ElementSet,
}

pub fn principal_factor(n: usize, r: usize) -> Result<PrincipalFactor> {
    Ok(PrincipalFactor {
        r,
        j_class: enumerate_j_class(n, r)?,
    })
}

impl PrincipalFactor {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn j_class(&self) -> &ElementSet {
        &self.j_class
    }

    /// Zero first, then the J-class in canonical order.
    pub fn elements(&self) -> Vec<PfElement> {
        std::iter::once(PfElement::Zero)
            .chain(self.j_class.iter().map(|e| PfElement::Elem(*e)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.j_class.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn product(&self, a: &PfElement, b: &PfElement) -> PfElement {
        match (a, b) {
            (PfElement::Elem(x), PfElement::Elem(y)) => {
                let p = x.mul(y);
                if p.rank() == self.r {
                    PfElement::Elem(p)
                } else {
                    PfElement::Zero
                }
            }
            _ => PfElement::Zero,
        }
    }

    pub fn idempotents(&self) -> Vec<PfElement> {
        self.elements()
            .into_iter()
            .filter(|e| self.product(e, e) == *e)
            .collect()
    }

    /// `⟨A⟩*`, the subsemigroup of `J*` generated by `gens ⊆ J`.
    pub fn closure(&self, gens: &[DifunRelation]) -> Vec<PfElement> {
        let gens: Vec<PfElement> = gens.iter().map(|g| PfElement::Elem(*g)).collect();
        let (elements, _) = bfs_closure(&gens, |a, b| self.product(a, b));
        elements.into_iter().collect()
    }

    /// Whether `gens` generates all of `J*`, zero included.
    pub fn is_generated_by(&self, gens: &[DifunRelation]) -> bool {
        self.closure(gens).len() == self.len()
    }

    /// Whether every element of `J` lies in `⟨gens⟩*`. This is what a
    /// generating set of an ideal must achieve inside its top J-class; it
    /// differs from [`Self::is_generated_by`] only when `J` is closed under
    /// `⋄` (the top class `S_n`), so that zero is never produced.
    pub fn covers_j_class(&self, gens: &[DifunRelation]) -> bool {
        let reached = self.closure(gens);
        reached
            .iter()
            .filter(|e| matches!(e, PfElement::Elem(_)))
            .count()
            == self.j_class.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_factor_in_d2() {
        let pf = principal_factor(2, 1).unwrap();
        assert_eq!(pf.len(), 10);
        let idem = pf.idempotents();
        // 3 idempotents ker = coker, plus the zero
        assert_eq!(idem.len(), 4);
        for e in idem.iter() {
            if let PfElement::Elem(x) = e {
                assert_eq!(x.kernel(), x.cokernel());
            }
        }
    }

    #[test]
    fn products_leaving_the_class_are_zero() {
        let pf = principal_factor(3, 2).unwrap();
        let elems = pf.elements();
        for a in &elems {
            for b in &elems {
                if let (PfElement::Elem(x), PfElement::Elem(y)) = (a, b) {
                    let p = pf.product(a, b);
                    if x.mul(y).rank() < 2 {
                        assert_eq!(p, PfElement::Zero);
                    } else {
                        assert_eq!(p, PfElement::Elem(x.mul(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn top_factor_never_hits_zero() {
        let pf = principal_factor(3, 3).unwrap();
        for a in pf.j_class() {
            for b in pf.j_class() {
                assert_ne!(
                    pf.product(&PfElement::Elem(*a), &PfElement::Elem(*b)),
                    PfElement::Zero
                );
            }
        }
        let all = pf.j_class().to_vec();
        assert!(pf.covers_j_class(&all));
        assert!(!pf.is_generated_by(&all));
    }

    #[test]
    fn star_product_is_associative() {
        for (n, r) in [(2, 1), (3, 1), (3, 2)] {
            let pf = principal_factor(n, r).unwrap();
            let elems = pf.elements();
            for a in &elems {
                for b in &elems {
                    let ab = pf.product(a, b);
                    for c in &elems {
                        assert_eq!(pf.product(&ab, c), pf.product(a, &pf.product(b, c)));
                    }
                }
            }
        }
    }
}
