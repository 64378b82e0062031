//! Necessary-element checks for generating sets of the ideals `I_r`.
//!
//! If `I_r = ⟨J_r ∪ Σ⟩` then, for every partition `A` of `{1..n}` with at
//! most `r − 1` blocks, `Σ` holds some `σ` with kernel `A` and some `τ`
//! with cokernel `A`; and for every rank `1 ≤ k ≤ r − 1` it holds a
//! full-domain rank-`k` element of positive codefect and a full-codomain
//! rank-`k` element of positive defect. These checks drive both the audit
//! verdicts and the pruning bound used by subset search.

use std::collections::HashSet;

use serde::Serialize;

use crate::combinatorics::{count_r_classes, full_partitions};
use crate::error::Result;
use crate::generators::symmetric_group_rank;
use crate::relations::{full_mask, DifunRelation, SetPartition};
use crate::semigroup::{ElementSet, SubsetBound};
use num_traits::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditVerdict {
    pub n: usize,
    pub r: usize,
    pub passes: bool,
    /// Full partitions with no candidate of that kernel.
    pub missing_kernels: Vec<SetPartition>,
    /// Full partitions with no candidate of that cokernel.
    pub missing_cokernels: Vec<SetPartition>,
    /// Ranks `k` lacking a full-domain element with positive codefect.
    pub missing_full_domain: Vec<usize>,
    /// Ranks `k` lacking a full-codomain element with positive defect.
    pub missing_full_codomain: Vec<usize>,
}

fn has_full_domain_witness(c: &DifunRelation, k: usize) -> bool {
    c.rank() == k && c.defect() == 0 && c.codefect() > 0
}

fn has_full_codomain_witness(c: &DifunRelation, k: usize) -> bool {
    c.rank() == k && c.codefect() == 0 && c.defect() > 0
}

/// Checks `candidate` (the part of a generating set outside `J_r`) against
/// the necessary-element conditions for `I_r`.
pub fn audit_necessary_elements(
    n: usize,
    r: usize,
    candidate: &ElementSet,
) -> Result<AuditVerdict> {
    let kernels: HashSet<SetPartition> = candidate.iter().map(|c| *c.kernel()).collect();
    let cokernels: HashSet<SetPartition> = candidate.iter().map(|c| *c.cokernel()).collect();
    let mut verdict = AuditVerdict {
        n,
        r,
        passes: true,
        missing_kernels: Vec::new(),
        missing_cokernels: Vec::new(),
        missing_full_domain: Vec::new(),
        missing_full_codomain: Vec::new(),
    };
    for k in 1..r {
        for p in full_partitions(n, k)? {
            if !kernels.contains(&p) {
                verdict.missing_kernels.push(p);
            }
            if !cokernels.contains(&p) {
                verdict.missing_cokernels.push(p);
            }
        }
        if !candidate.iter().any(|c| has_full_domain_witness(c, k)) {
            verdict.missing_full_domain.push(k);
        }
        if !candidate.iter().any(|c| has_full_codomain_witness(c, k)) {
            verdict.missing_full_codomain.push(k);
        }
    }
    verdict.passes = verdict.missing_kernels.is_empty()
        && verdict.missing_cokernels.is_empty()
        && verdict.missing_full_domain.is_empty()
        && verdict.missing_full_codomain.is_empty();
    Ok(verdict)
}

/// Lower bound on the generators still needed to reach `I_r`.
///
/// Per rank `k < r`, each uncovered full kernel needs its own element and
/// the full-codomain witness (having a defect) covers no full kernel, and
/// dually for cokernels. In the top class every R-class and every L-class
/// must be met by a generator, and when `r = n` the generators in `J_n`
/// must generate `S_n`. Elements of different ranks are distinct, so the
/// per-rank bounds add up.
#[derive(Debug, Clone)]
pub struct IdealBound {
    n: usize,
    r: usize,
    include_lower: bool,
    include_top: bool,
    full_partition_counts: Vec<usize>,
    top_classes: usize,
}

impl IdealBound {
    /// Bound for a search generating `I_r` from scratch.
    pub fn new(n: usize, r: usize) -> Self {
        Self::build(n, r, true, true)
    }

    /// Bound for a search of `B` with `⟨J_r ∪ B⟩ = I_r`.
    pub fn relative(n: usize, r: usize) -> Self {
        Self::build(n, r, true, false)
    }

    /// Bound for a search of `A ⊆ J_r` covering `J_r` inside `J_r*`.
    pub fn principal(n: usize, r: usize) -> Self {
        Self::build(n, r, false, true)
    }

    fn build(n: usize, r: usize, include_lower: bool, include_top: bool) -> Self {
        let full_partition_counts = (0..r)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    crate::combinatorics::stirling2(n, k)
                        .to_usize()
                        .unwrap_or(usize::MAX)
                }
            })
            .collect();
        let top_classes = count_r_classes(n, r).to_usize().unwrap_or(usize::MAX);
        IdealBound {
            n,
            r,
            include_lower,
            include_top,
            full_partition_counts,
            top_classes,
        }
    }
}

impl SubsetBound for IdealBound {
    fn lower_bound(&self, chosen: &[DifunRelation]) -> usize {
        let full = full_mask(self.n);
        let mut total = 0;
        let lower = if self.include_lower { 1..self.r } else { 0..0 };
        for k in lower {
            let at_rank: Vec<&DifunRelation> = chosen.iter().filter(|c| c.rank() == k).collect();
            let kernels: HashSet<&SetPartition> = at_rank
                .iter()
                .filter(|c| c.dom() == full)
                .map(|c| c.kernel())
                .collect();
            let cokernels: HashSet<&SetPartition> = at_rank
                .iter()
                .filter(|c| c.codom() == full)
                .map(|c| c.cokernel())
                .collect();
            let sigma_missing = !at_rank.iter().any(|c| has_full_domain_witness(c, k)) as usize;
            let tau_missing = !at_rank.iter().any(|c| has_full_codomain_witness(c, k)) as usize;
            let p = self.full_partition_counts[k];
            let by_kernel = p - kernels.len() + tau_missing;
            let by_cokernel = p - cokernels.len() + sigma_missing;
            total += by_kernel.max(by_cokernel);
        }
        if self.include_top {
            let top: Vec<&DifunRelation> = chosen.iter().filter(|c| c.rank() == self.r).collect();
            let kernels: HashSet<&SetPartition> = top.iter().map(|c| c.kernel()).collect();
            let cokernels: HashSet<&SetPartition> = top.iter().map(|c| c.cokernel()).collect();
            let mut need =
                (self.top_classes - kernels.len()).max(self.top_classes - cokernels.len());
            if self.r == self.n {
                need = need.max(symmetric_group_rank(self.n).saturating_sub(top.len()));
            }
            total += need;
        }
        total
    }
}

/// Checks the conclusions of the two factorization lemmas and their duals
/// for `a = b ⋄ c`:
///
/// * `dom(a)` full ⇒ `ker(a) = ker(b)`;
/// * `ker(a) = ker(b)` and `codom(b)` full ⇒ `b⁻¹ ⋄ a = c`;
/// * `codom(a)` full ⇒ `coker(a) = coker(c)`;
/// * `coker(a) = coker(c)` and `dom(c)` full ⇒ `a ⋄ c⁻¹ = b`.
///
/// Returns `true` when every applicable conclusion holds, including the
/// vacuous case `a ≠ b ⋄ c`.
pub fn factorization_kernel_lemma_check(
    a: &DifunRelation,
    b: &DifunRelation,
    c: &DifunRelation,
) -> bool {
    if a.n() != b.n() || a.n() != c.n() || b.mul(c) != *a {
        return true;
    }
    let full = full_mask(a.n());
    if a.dom() == full && a.kernel() != b.kernel() {
        return false;
    }
    if a.kernel() == b.kernel() && b.codom() == full && b.inverse().mul(a) != *c {
        return false;
    }
    if a.codom() == full && a.cokernel() != c.cokernel() {
        return false;
    }
    if a.cokernel() == c.cokernel() && c.dom() == full && a.mul(&c.inverse()) != *b {
        return false;
    }
    true
}
