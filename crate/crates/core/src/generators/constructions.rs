use crate::combinatorics::full_partitions;
use crate::error::{Error, Result};
use crate::relations::{full_mask, DifunRelation, SetPartition};
use crate::semigroup::{enumerate_j_class, ElementSet};

fn require_full(p: &SetPartition) -> Result<()> {
    if !p.is_full() {
        return Err(Error::InvalidPartition(format!(
            "{p} does not partition {{1..{}}}",
            p.n()
        )));
    }
    Ok(())
}

/// `λ_A = [A_1 … A_k; 1 … k]` for a partition `A` of `{1..n}`.
pub fn lambda_rel(p: &SetPartition) -> Result<DifunRelation> {
    require_full(p)?;
    DifunRelation::from_block_pairs(
        p.n(),
        p.blocks().iter().enumerate().map(|(i, &a)| (a, 1 << i)),
    )
}

/// `ρ_A = [1 … k; A_1 … A_k]`, the inverse of `λ_A`.
pub fn rho_rel(p: &SetPartition) -> Result<DifunRelation> {
    require_full(p)?;
    DifunRelation::from_block_pairs(
        p.n(),
        p.blocks().iter().enumerate().map(|(i, &a)| (1 << i, a)),
    )
}

/// `φ_{A,B} = [A_1 … A_r; B_1 … B_r]`, both partitions of `{1..n}` with `r`
/// blocks, matched in min-order.
pub fn phi_rel(p: &SetPartition, q: &SetPartition) -> Result<DifunRelation> {
    require_full(p)?;
    require_full(q)?;
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    if p.len() != q.len() {
        return Err(Error::InvalidPartition(format!(
            "{p} and {q} have different block counts"
        )));
    }
    DifunRelation::from_block_pairs(
        p.n(),
        p.blocks().iter().copied().zip(q.blocks().iter().copied()),
    )
}

/// `L_r`: every `λ_A` with `A` a partition of `{1..n}` into at most `r` blocks.
pub fn lambda_set(n: usize, r: usize) -> Result<ElementSet> {
    let mut set = ElementSet::new(n);
    for k in 1..=r.min(n) {
        for p in full_partitions(n, k)? {
            set.insert(lambda_rel(&p)?)?;
        }
    }
    Ok(set)
}

/// `R_r`: every `ρ_A` with at most `r` blocks.
pub fn rho_set(n: usize, r: usize) -> Result<ElementSet> {
    let mut set = ElementSet::new(n);
    for k in 1..=r.min(n) {
        for p in full_partitions(n, k)? {
            set.insert(rho_rel(&p)?)?;
        }
    }
    Ok(set)
}

/// `Σ_k`: the `φ`-chain `φ_{A_1,A_2}, …, φ_{A_{p−1},A_p}` through
/// `Part({1..n}, k)` in restricted-growth order, then `λ_{A_p}` and `ρ_{A_1}`.
/// It has `S(n, k) + 1` elements.
pub fn sigma_k(n: usize, k: usize) -> Result<ElementSet> {
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!(
            "Σ_k needs 1 ≤ k ≤ n−1, got k = {k}, n = {n}"
        )));
    }
    let parts = full_partitions(n, k)?;
    let mut set = ElementSet::new(n);
    for w in parts.windows(2) {
        set.insert(phi_rel(&w[0], &w[1])?)?;
    }
    set.insert(lambda_rel(parts.last().expect("k ≤ n"))?)?;
    set.insert(rho_rel(&parts[0])?)?;
    Ok(set)
}

/// `J_r ∪ Σ_1 ∪ ⋯ ∪ Σ_{r−1}`, whose closure is the ideal `I_r`.
pub fn build_ideal_generators(n: usize, r: usize) -> Result<ElementSet> {
    let mut set = enumerate_j_class(n, r)?;
    for k in 1..r {
        set = set.union(&sigma_k(n, k)?)?;
    }
    Ok(set)
}

/// A generating set of `D_n` of size `B(n) + n` (`3` when `n = 2`): a
/// transposition and an `n`-cycle generating `S_n`, then `Σ_1, …, Σ_{n−1}`.
pub fn minimal_generators_of_dn(n: usize) -> Result<ElementSet> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n}: need n ≥ 2")));
    }
    let mut transposition: Vec<usize> = (1..=n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (1..=n).map(|x| x % n + 1).collect();
    let mut set = ElementSet::new(n);
    set.insert(DifunRelation::permutation(n, &transposition)?)?;
    if n >= 3 {
        set.insert(DifunRelation::permutation(n, &cycle)?)?;
    }
    for k in 1..n {
        set = set.union(&sigma_k(n, k)?)?;
    }
    Ok(set)
}

/// `α = β ⋄ γ ⋄ δ` with `β ∈ L_r`, `γ` a partial injection of the same
/// rank as `α`, and `δ ∈ R_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub beta: DifunRelation,
    pub gamma: DifunRelation,
    pub delta: DifunRelation,
}

impl Decomposition {
    pub fn reassemble(&self) -> DifunRelation {
        self.beta.mul(&self.gamma).mul(&self.delta)
    }
}

/// Extends a partition of a subset by the complement block, if nonempty.
fn complete(p: &SetPartition) -> SetPartition {
    let rest = full_mask(p.n()) & !p.support();
    let blocks = p
        .blocks()
        .iter()
        .copied()
        .chain((rest != 0).then_some(rest));
    SetPartition::new(p.n(), blocks).expect("complement is disjoint")
}

/// Factors `a ∈ I_{r−1}` as `λ_A ⋄ γ ⋄ ρ_B`, where `A` and `B` are the
/// kernel and cokernel of `a` completed by their complement blocks and
/// `γ = ρ_A ⋄ a ⋄ λ_B`.
pub fn decompose(a: &DifunRelation, r: usize) -> Result<Decomposition> {
    if a.rank() + 1 > r {
        return Err(Error::Precondition(format!(
            "rank {} is not below r = {r}",
            a.rank()
        )));
    }
    let ker = complete(a.kernel());
    let coker = complete(a.cokernel());
    let gamma = rho_rel(&ker)?.mul(a).mul(&lambda_rel(&coker)?);
    Ok(Decomposition {
        beta: lambda_rel(&ker)?,
        gamma,
        delta: rho_rel(&coker)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::stirling2;
    use crate::semigroup::{closure, enumerate_ideal};
    use num_bigint::BigUint;

    fn part(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::from_blocks(n, blocks).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let singletons = SetPartition::singletons(3, 0b111).unwrap();
        assert_eq!(
            lambda_rel(&singletons).unwrap(),
            DifunRelation::identity(3).unwrap()
        );
        assert_eq!(
            rho_rel(&singletons).unwrap(),
            DifunRelation::identity(3).unwrap()
        );
        let one = part(3, &[&[1, 2, 3]]);
        assert_eq!(
            lambda_rel(&one).unwrap(),
            DifunRelation::from_blocks(3, &[(&[1, 2, 3], &[1])]).unwrap()
        );
        assert!(lambda_rel(&part(3, &[&[1, 2]])).is_err());
    }

    #[test]
    fn lambda_rho_products() {
        for k in 1..=4 {
            for p in full_partitions(4, k).unwrap() {
                let l = lambda_rel(&p).unwrap();
                let r = rho_rel(&p).unwrap();
                assert_eq!(r, l.inverse());
                assert_eq!(
                    r.mul(&l),
                    DifunRelation::partial_identity(4, (1 << k) - 1).unwrap()
                );
                assert_eq!(l.mul(&r), phi_rel(&p, &p).unwrap());
                assert!(l.mul(&r).is_idempotent());
            }
        }
    }

    #[test]
    fn phi_chain_and_inverse() {
        let parts = full_partitions(4, 2).unwrap();
        for p in &parts {
            for q in &parts {
                let pq = phi_rel(p, q).unwrap();
                assert_eq!(pq.inverse(), phi_rel(q, p).unwrap());
                for s in &parts {
                    assert_eq!(pq.mul(&phi_rel(q, s).unwrap()), phi_rel(p, s).unwrap());
                }
            }
        }
        assert!(phi_rel(&parts[0], &part(4, &[&[1, 2, 3, 4]])).is_err());
    }

    #[test]
    fn sigma_sizes() {
        for n in 2..=6 {
            for k in 1..n {
                let s = sigma_k(n, k).unwrap();
                assert_eq!(BigUint::from(s.len()), stirling2(n, k) + 1u32);
                assert!(s.iter().all(|e| e.rank() == k));
            }
        }
        let s = sigma_k(3, 1).unwrap();
        assert_eq!(s.len(), 2);
        assert!(sigma_k(3, 3).is_err());
        assert!(sigma_k(3, 0).is_err());
    }

    #[test]
    fn ideal_generators_close_to_ideals_n3() {
        assert_eq!(
            build_ideal_generators(3, 1).unwrap(),
            crate::semigroup::enumerate_j_class(3, 1).unwrap()
        );
        for r in 1..=3 {
            let c = closure(&build_ideal_generators(3, r).unwrap()).unwrap();
            assert_eq!(c.elements(), &enumerate_ideal(3, r).unwrap());
        }
        assert_eq!(
            closure(&build_ideal_generators(3, 2).unwrap())
                .unwrap()
                .len(),
            122
        );
    }

    #[test]
    fn minimal_dn_generators() {
        for n in 2..=3 {
            let gens = minimal_generators_of_dn(n).unwrap();
            let bell_plus =
                crate::combinatorics::bell(n) + BigUint::from(if n == 2 { 1u32 } else { n as u32 });
            assert_eq!(BigUint::from(gens.len()), bell_plus);
            assert_eq!(
                closure(&gens).unwrap().elements(),
                &enumerate_ideal(n, n).unwrap()
            );
        }
    }

    #[test]
    fn decomposition_examples() {
        let z = DifunRelation::empty(3).unwrap();
        let d = decompose(&z, 1).unwrap();
        assert!(d.gamma.is_zero());
        assert_eq!(d.reassemble(), z);
        let a = DifunRelation::from_blocks(3, &[(&[1, 2, 3], &[1, 2, 3])]).unwrap();
        let d = decompose(&a, 2).unwrap();
        assert_eq!(d.beta, lambda_rel(a.kernel()).unwrap());
        assert_eq!(d.delta, rho_rel(a.cokernel()).unwrap());
        assert_eq!(d.reassemble(), a);
        assert!(decompose(&a, 1).is_err());
    }
}
