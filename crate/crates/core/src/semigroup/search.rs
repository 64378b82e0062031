use super::{bfs_closure, ElementSet};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::relations::DifunRelation;
use num_traits::ToPrimitive;

/// Default cap on subsets examined by a rank search.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// Pruning rule for subset search.
pub trait SubsetBound {
    /// A lower bound on how many further pool elements every generating
    /// superset of `chosen` still needs. Must never overestimate.
    fn lower_bound(&self, chosen: &[DifunRelation]) -> usize;
}

/// Size-ascending subset search options.
pub struct RankSearch<'a> {
    pub max_size: usize,
    pub budget: u128,
    pub bound: Option<&'a dyn SubsetBound>,
}

impl<'a> RankSearch<'a> {
    pub fn new(max_size: usize) -> Self {
        RankSearch {
            max_size,
            budget: DEFAULT_BUDGET,
            bound: None,
        }
    }

    pub fn with_bound(mut self, bound: &'a dyn SubsetBound) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    /// Smallest `A ⊆ pool` with `⟨A⟩ = target`, and its witness.
    pub fn rank(
        &self,
        target: &ElementSet,
        pool: &ElementSet,
    ) -> Result<Option<Vec<DifunRelation>>> {
        self.relative_rank(target, &[], pool)
    }

    /// Smallest `B ⊆ pool` with `⟨base ∪ B⟩ = target`, and its witness.
    /// `target` must be closed under `⋄` and contain `base` and `pool`.
    pub fn relative_rank(
        &self,
        target: &ElementSet,
        base: &[DifunRelation],
        pool: &ElementSet,
    ) -> Result<Option<Vec<DifunRelation>>> {
        let pool = pool.to_vec();
        let mut gens: Vec<DifunRelation> = Vec::with_capacity(base.len() + self.max_size);
        search_min_subset(&pool, self, |chosen| {
            gens.clear();
            gens.extend_from_slice(base);
            gens.extend_from_slice(chosen);
            if gens.is_empty() {
                return target.is_empty();
            }
            let (reached, _) = bfs_closure(&gens, DifunRelation::mul);
            reached.len() == target.len() && reached.iter().all(|e| target.contains(e))
        })
    }
}

/// `rank(target)` from subsets of `pool` of size at most `max_size`, by
/// exhaustive size-ascending search under the default budget.
pub fn brute_force_rank(
    target: &ElementSet,
    pool: &ElementSet,
    max_size: usize,
) -> Result<Option<usize>> {
    Ok(RankSearch::new(max_size)
        .rank(target, pool)?
        .map(|w| w.len()))
}

/// `rank(target : base)` from subsets of `pool`.
pub fn brute_force_relative_rank(
    target: &ElementSet,
    base: &ElementSet,
    pool: &ElementSet,
    max_size: usize,
) -> Result<Option<usize>> {
    Ok(RankSearch::new(max_size)
        .relative_rank(target, &base.to_vec(), pool)?
        .map(|w| w.len()))
}

fn subset_estimate(pool: usize, max_size: usize) -> u128 {
    (0..=max_size.min(pool))
        .map(|k| binomial(pool, k).to_u128().unwrap_or(u128::MAX))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Finds a smallest subset of `pool` (size at most `opts.max_size`)
/// accepted by `accept`, trying sizes in increasing order and subsets of a
/// given size in lexicographic index order.
///
/// Without a bound the total subset count is checked against the budget up
/// front; with a bound the number of subsets handed to `accept` is capped
/// instead.
pub fn search_min_subset(
    pool: &[DifunRelation],
    opts: &RankSearch<'_>,
    mut accept: impl FnMut(&[DifunRelation]) -> bool,
) -> Result<Option<Vec<DifunRelation>>> {
    let estimated = subset_estimate(pool.len(), opts.max_size);
    if opts.bound.is_none() && estimated > opts.budget {
        return Err(Error::BudgetExceeded {
            estimated,
            budget: opts.budget,
        });
    }
    let mut state = Dfs {
        pool,
        bound: opts.bound,
        budget: opts.budget,
        estimated,
        visited: 0,
        chosen: Vec::new(),
    };
    for k in 0..=opts.max_size.min(pool.len()) {
        if state.run(0, k, &mut accept)? {
            return Ok(Some(state.chosen));
        }
    }
    Ok(None)
}

struct Dfs<'a> {
    pool: &'a [DifunRelation],
    bound: Option<&'a dyn SubsetBound>,
    budget: u128,
    estimated: u128,
    visited: u128,
    chosen: Vec<DifunRelation>,
}

impl Dfs<'_> {
    fn feasible(&self, k: usize) -> bool {
        match self.bound {
            Some(b) => self.chosen.len() + b.lower_bound(&self.chosen) <= k,
            None => true,
        }
    }

    fn run(
        &mut self,
        start: usize,
        k: usize,
        accept: &mut impl FnMut(&[DifunRelation]) -> bool,
    ) -> Result<bool> {
        if !self.feasible(k) {
            return Ok(false);
        }
        if self.chosen.len() == k {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded {
                    estimated: self.estimated,
                    budget: self.budget,
                });
            }
            return Ok(accept(&self.chosen));
        }
        let need = k - self.chosen.len();
        for i in start..=self.pool.len() - need {
            self.chosen.push(self.pool[i]);
            if self.run(i + 1, k, accept)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}
