//! Set-partition enumeration and exact Stirling/Bell arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::Result;
use crate::relations::{full_mask, points, Mask, SetPartition};

/// Exact non-negative integer.
pub type BigCount = BigUint;

/// Triangle of `S(m, k)` for `0 ≤ k ≤ m ≤ max_n` built by
/// `S(m, k) = k·S(m−1, k) + S(m−1, k−1)`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigCount>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigCount::one()]);
        for m in 1..=max_n {
            let prev = &rows[m - 1];
            let mut row = vec![BigCount::zero(); m + 1];
            for k in 1..=m {
                let carried = if k < m {
                    prev[k].clone() * k
                } else {
                    BigCount::zero()
                };
                row[k] = carried + &prev[k - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n, k)`, zero when `k > n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigCount {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn bell(&self, n: usize) -> BigCount {
        self.rows[n].iter().sum()
    }
}

pub fn stirling2(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    StirlingTable::new(n).get(n, k)
}

/// `B(n) = S(n,0) + ⋯ + S(n,n)`; `S(n,0)` vanishes except at `n = 0`.
pub fn bell(n: usize) -> BigCount {
    StirlingTable::new(n).bell(n)
}

pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, i| acc * i)
}

/// All partitions of `support` (into exactly `k` blocks when given), in
/// restricted-growth-string lexicographic order over the points of
/// `support` taken in increasing order.
pub fn enumerate_partitions(
    n: usize,
    support: Mask,
    k: Option<usize>,
) -> Result<Vec<SetPartition>> {
    let elems: Vec<usize> = points(support & full_mask(n)).collect();
    let mut out = Vec::new();
    let mut labels = vec![0usize; elems.len()];
    SetPartition::empty(n)?;
    rgs_fill(n, &elems, k, 0, 0, &mut labels, &mut out);
    Ok(out)
}

fn rgs_fill(
    n: usize,
    elems: &[usize],
    k: Option<usize>,
    pos: usize,
    used: usize,
    labels: &mut [usize],
    out: &mut Vec<SetPartition>,
) {
    let remaining = elems.len() - pos;
    if let Some(k) = k {
        if used > k || used + remaining < k {
            return;
        }
    }
    if remaining == 0 {
        let mut blocks = vec![0 as Mask; used];
        for (&p, &l) in elems.iter().zip(labels.iter()) {
            blocks[l] |= 1 << (p - 1);
        }
        out.push(SetPartition::new(n, blocks).expect("labels form a partition"));
        return;
    }
    for label in 0..=used {
        labels[pos] = label;
        let used_next = if label == used { used + 1 } else { used };
        rgs_fill(n, elems, k, pos + 1, used_next, labels, out);
    }
}

/// `Part({1..n}, k)` in restricted-growth-string order.
pub fn full_partitions(n: usize, k: usize) -> Result<Vec<SetPartition>> {
    enumerate_partitions(n, full_mask(n), Some(k))
}

/// Every partition with exactly `r` blocks of some subset of `{1..n}`:
/// the possible kernels (and cokernels) of a rank-`r` relation. Ordered by
/// support mask, then restricted-growth order.
pub fn partial_partitions(n: usize, r: usize) -> Result<Vec<SetPartition>> {
    let mut out = Vec::new();
    for support in 0..=full_mask(n) as u32 {
        let support = support as Mask;
        if (support.count_ones() as usize) < r {
            continue;
        }
        out.extend(enumerate_partitions(n, support, Some(r))?);
    }
    Ok(out)
}

/// Number of R-classes (equally, L-classes) in the J-class of rank `r`:
/// `(r+1)·S(n, r+1) + S(n, r)`.
pub fn count_r_classes(n: usize, r: usize) -> BigCount {
    let table = StirlingTable::new(n.max(r + 1));
    table.get(n, r + 1) * (r + 1) + table.get(n, r)
}

/// The same count by choosing the support first: `Σ_{k=r}^{n} C(n,k)·S(k,r)`.
pub fn count_r_classes_by_support(n: usize, r: usize) -> BigCount {
    let table = StirlingTable::new(n);
    (r..=n).map(|k| binomial(n, k) * table.get(k, r)).sum()
}

/// Size of the J-class of rank `r`: one element per (kernel, cokernel,
/// block bijection).
pub fn j_class_size(n: usize, r: usize) -> BigCount {
    let q = count_r_classes(n, r);
    &q * &q * factorial(r)
}

/// Reference prefixes of OEIS A008277 (rows `n = 1..16`) and A000110
/// (`n = 0..15`).
#[derive(Debug, Clone)]
pub struct OeisFixtures {
    /// `stirling_rows[n - 1][k - 1] = S(n, k)`.
    pub stirling_rows: Vec<Vec<BigCount>>,
    /// `bell[n] = B(n)`.
    pub bell: Vec<BigCount>,
}

#[derive(Deserialize)]
struct RawFixtures {
    #[serde(rename = "A008277")]
    stirling: RawTriangle,
    #[serde(rename = "A000110")]
    bell: RawSequence,
}

#[derive(Deserialize)]
struct RawTriangle {
    rows: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct RawSequence {
    terms: Vec<u64>,
}

const OEIS_FIXTURES: &str = include_str!("../data/oeis_fixtures.json");

pub fn oeis_fixtures() -> OeisFixtures {
    let raw: RawFixtures = serde_json::from_str(OEIS_FIXTURES).expect("bundled fixture parses");
    OeisFixtures {
        stirling_rows: raw
            .stirling
            .rows
            .into_iter()
            .map(|row| row.into_iter().map(BigCount::from).collect())
            .collect(),
        bell: raw.bell.terms.into_iter().map(BigCount::from).collect(),
    }
}
