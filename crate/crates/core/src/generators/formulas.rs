use num_traits::{One, Zero};

use serde::{Serialize, Serializer};

use crate::combinatorics::{j_class_size, BigCount, StirlingTable};
use crate::error::{Error, Result};

/// How far a [`RankReport`] has been checked beyond evaluating formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// Closed formulas only.
    FormulaOnly,
    /// The constructed generating set was closed and compared with the ideal.
    ClosureVerified,
    /// Additionally, exhaustive subset search confirmed the rank.
    ExhaustivelyVerified,
}

fn decimal<S: Serializer>(v: &BigCount, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Rank data for the ideal `I_r` of `D_n`. Big counts serialize as decimal
/// strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub r: usize,
    /// `ρ_{nr} = r + (r+1)·S(n, r+1) + Σ_{k=1}^{r} S(n, k)`.
    #[serde(serialize_with = "decimal")]
    pub rho: BigCount,
    /// `rank(I_r)`: `ρ_{nr}`, less one when `r ∈ {1, 2}`.
    #[serde(serialize_with = "decimal")]
    pub rank_formula: BigCount,
    /// `rank(I_r : J_r)`.
    #[serde(serialize_with = "decimal")]
    pub relative_rank: BigCount,
    /// The share of a minimum generating set lying in `J_r`: `rank(J_r*)`
    /// for `r < n`, `rank(S_n)` for `r = n`.
    #[serde(serialize_with = "decimal")]
    pub brandt_rank: BigCount,
    /// `|J_r ∪ Σ_1 ∪ ⋯ ∪ Σ_{r−1}|`.
    #[serde(serialize_with = "decimal")]
    pub constructed_set_size: BigCount,
    pub verification: Verification,
    pub warnings: Vec<String>,
}

/// Minimum number of generators of the symmetric group `S_r`.
pub fn symmetric_group_rank(r: usize) -> usize {
    if r <= 2 {
        1
    } else {
        2
    }
}

fn check_range(n: usize, r: usize, min_r: usize) -> Result<()> {
    if r < min_r || r > n {
        return Err(Error::Precondition(format!(
            "need {min_r} ≤ r ≤ n, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

fn rho_with(table: &StirlingTable, n: usize, r: usize) -> BigCount {
    let tail: BigCount = (1..=r).map(|k| table.get(n, k)).sum();
    BigCount::from(r) + table.get(n, r + 1) * (r + 1) + tail
}

pub fn rho(n: usize, r: usize) -> BigCount {
    rho_with(&StirlingTable::new(n + 1), n, r)
}

/// `rank(I_r : J_r) = r − 1 + Σ_{k=1}^{r−1} S(n, k)`.
pub fn relative_rank_formula(n: usize, r: usize) -> Result<BigCount> {
    check_range(n, r, 1)?;
    let table = StirlingTable::new(n);
    Ok(BigCount::from(r - 1) + (1..r).map(|k| table.get(n, k)).sum::<BigCount>())
}

/// `rank(S_r) − 1 + (r+1)·S(n, r+1) + S(n, r)`.
pub fn brandt_rank_formula(n: usize, r: usize) -> Result<BigCount> {
    check_range(n, r, 1)?;
    let table = StirlingTable::new(n + 1);
    Ok(BigCount::from(symmetric_group_rank(r) - 1)
        + table.get(n, r + 1) * (r + 1)
        + table.get(n, r))
}

/// The rank of `I_r` with its decomposition, for `0 ≤ r ≤ n`. For `n < 2`
/// the values are formal and a warning is attached.
pub fn rank_formula(n: usize, r: usize) -> Result<RankReport> {
    check_range(n, r, 0)?;
    let table = StirlingTable::new(n + 1);
    let rho = rho_with(&table, n, r);
    let rank = if (1..=2).contains(&r) {
        &rho - 1u32
    } else {
        rho.clone()
    };
    let (relative, brandt, constructed) = if r == 0 {
        // I_0 = J_0 = {∅}: the whole rank sits in the top class
        (BigCount::zero(), rank.clone(), BigCount::one())
    } else {
        let relative = relative_rank_formula(n, r)?;
        let brandt = brandt_rank_formula(n, r)?;
        let sigmas: BigCount = (1..r).map(|k| table.get(n, k) + 1u32).sum();
        (relative, brandt, j_class_size(n, r) + sigmas)
    };
    let mut warnings = Vec::new();
    if n < 2 {
        warnings.push(format!(
            "n = {n}: the rank formula is only established for n ≥ 2; value is formal"
        ));
    }
    Ok(RankReport {
        n,
        r,
        rho,
        rank_formula: rank,
        relative_rank: relative,
        brandt_rank: brandt,
        constructed_set_size: constructed,
        verification: Verification::FormulaOnly,
        warnings,
    })
}

/// `rank(D_n)`, i.e. `rank(I_n)`.
pub fn rank_of_dn(n: usize) -> BigCount {
    rank_formula(n, n).expect("r = n is in range").rank_formula
}
