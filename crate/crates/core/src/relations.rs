//! Binary and difunctional relations on `{1..n}`.
//!
//! A [`BinaryRelation`] is stored as `n` packed rows, row `x` holding the image
//! set `xα` as a bitmask (bit `p - 1` stands for point `p`). A [`DifunRelation`]
//! is the block form `(A_1 × B_1) ∪ ⋯ ∪ (A_r × B_r)` with the kernel blocks
//! `A_i` in min-order and the cokernel blocks `B_j` in min-order, plus the
//! pairing `i ↦ j`. Both representations are canonical, so derived equality
//! and hashing are set equality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_N};

/// Bitmask of points; bit `p - 1` is point `p`.
pub type Mask = u16;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

/// Mask of the whole ground set `{1..n}`.
pub fn full_mask(n: usize) -> Mask {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Points of a mask in increasing order, 1-based.
pub fn points(mask: Mask) -> impl Iterator<Item = usize> {
    (0..16).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
}

/// Bit index (point minus one) of the smallest point of a nonempty mask.
fn min_point(mask: Mask) -> u32 {
    mask.trailing_zeros()
}

fn mask_from_points(n: usize, pts: &[usize]) -> Result<Mask> {
    let mut mask = 0;
    for &p in pts {
        if p == 0 || p > n {
            return Err(Error::PointOutOfRange { point: p, n });
        }
        mask |= 1 << (p - 1);
    }
    Ok(mask)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryRelation {
    n: u8,
    rows: [Mask; MAX_N],
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(BinaryRelation {
            n: n as u8,
            rows: [0; MAX_N],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut rel = Self::empty(n)?;
        for x in 0..n {
            rel.rows[x] = 1 << x;
        }
        Ok(rel)
    }

    pub fn full(n: usize) -> Result<Self> {
        let mut rel = Self::empty(n)?;
        for x in 0..n {
            rel.rows[x] = full_mask(n);
        }
        Ok(rel)
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rel = Self::empty(n)?;
        for (x, y) in pairs {
            rel.insert(x, y)?;
        }
        Ok(rel)
    }

    /// Builds a relation from row masks (row `x` at index `x - 1`).
    pub fn from_rows(n: usize, rows: &[Mask]) -> Result<Self> {
        let mut rel = Self::empty(n)?;
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: rows.len(),
            });
        }
        for (x, &row) in rows.iter().enumerate() {
            if row & !full_mask(n) != 0 {
                return Err(Error::PointOutOfRange {
                    point: 16 - row.leading_zeros() as usize,
                    n,
                });
            }
            rel.rows[x] = row;
        }
        Ok(rel)
    }

    /// The relation whose pair `(x, y)` is bit `n·(x−1) + (y−1)` of `index`.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        if n * n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut rel = Self::empty(n)?;
        for x in 0..n {
            rel.rows[x] = ((index >> (n * x)) as Mask) & full_mask(n);
        }
        Ok(rel)
    }

    /// Every relation on `{1..n}`, all `2^{n²}` of them, in index order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = BinaryRelation>> {
        if n > 5 {
            return Err(Error::GroundSetTooLarge(n));
        }
        let count = 1u64 << (n * n);
        Ok((0..count).map(move |i| Self::from_index(n, i).expect("n checked")))
    }

    pub fn insert(&mut self, x: usize, y: usize) -> Result<()> {
        let n = self.n();
        for p in [x, y] {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
        }
        self.rows[x - 1] |= 1 << (y - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x >= 1 && y >= 1 && x <= self.n() && y <= self.n() && self.rows[x - 1] & (1 << (y - 1)) != 0
    }

    /// Row masks, index `x - 1` holding `xα`.
    pub fn rows(&self) -> &[Mask] {
        &self.rows[..self.n()]
    }

    /// The image `xα` as a mask.
    pub fn row(&self, x: usize) -> Mask {
        self.rows[x - 1]
    }

    /// The preimage `αy` as a mask.
    pub fn column(&self, y: usize) -> Mask {
        let bit = 1 << (y - 1);
        let mut col = 0;
        for x in 0..self.n() {
            if self.rows[x] & bit != 0 {
                col |= 1 << x;
            }
        }
        col
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..=self.n() {
            out.extend(points(self.rows[x - 1]).map(|y| (x, y)));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows().iter().all(|&r| r == 0)
    }

    /// `α⁻¹ = {(y, x) : (x, y) ∈ α}`.
    pub fn inverse(&self) -> BinaryRelation {
        let mut out = BinaryRelation {
            n: self.n,
            rows: [0; MAX_N],
        };
        for y in 1..=self.n() {
            out.rows[y - 1] = self.column(y);
        }
        out
    }

    fn check_same_n(&self, other: &BinaryRelation) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Usual composition: `(x, y)` iff `xα ∩ βy ≠ ∅`.
    pub fn compose_circ(&self, other: &BinaryRelation) -> Result<BinaryRelation> {
        self.check_same_n(other)?;
        let n = self.n();
        let cols: Vec<Mask> = (1..=n).map(|y| other.column(y)).collect();
        let mut out = BinaryRelation {
            n: self.n,
            rows: [0; MAX_N],
        };
        for x in 0..n {
            for (y, &col) in cols.iter().enumerate() {
                if self.rows[x] & col != 0 {
                    out.rows[x] |= 1 << y;
                }
            }
        }
        Ok(out)
    }

    /// The diamond product: `(x, y)` iff `xα = βy ≠ ∅`.
    pub fn diamond(&self, other: &BinaryRelation) -> Result<BinaryRelation> {
        self.check_same_n(other)?;
        let n = self.n();
        let cols: Vec<Mask> = (1..=n).map(|y| other.column(y)).collect();
        let mut out = BinaryRelation {
            n: self.n,
            rows: [0; MAX_N],
        };
        for x in 0..n {
            let row = self.rows[x];
            if row == 0 {
                continue;
            }
            for (y, &col) in cols.iter().enumerate() {
                if row == col {
                    out.rows[x] |= 1 << y;
                }
            }
        }
        Ok(out)
    }

    /// Riguet's definition: `α = α∘α⁻¹∘α`.
    pub fn is_difunctional(&self) -> bool {
        let inv = self.inverse();
        let triple = self
            .compose_circ(&inv)
            .and_then(|t| t.compose_circ(self))
            .expect("same ground set");
        triple == *self
    }

    /// Block form of a difunctional relation.
    ///
    /// Distinct nonempty rows of a difunctional relation are pairwise
    /// disjoint; they are the cokernel blocks and the points sharing a row
    /// form the matching kernel block. On failure the error names a pair of
    /// `α∘α⁻¹∘α` missing from `α`.
    pub fn to_canonical(&self) -> Result<DifunRelation> {
        let n = self.n();
        let mut pairs: Vec<(Mask, Mask)> = Vec::new();
        for x in 0..n {
            let row = self.rows[x];
            if row == 0 {
                continue;
            }
            match pairs.iter_mut().find(|(_, b)| *b == row) {
                Some((a, _)) => *a |= 1 << x,
                None => {
                    if let Some(&(a, b)) = pairs.iter().find(|(_, b)| b & row != 0) {
                        let other = min_point(a) as usize;
                        // x α z α⁻¹ other α y for z in the overlap
                        return Err(if b & !row != 0 {
                            Error::NotDifunctional(x + 1, min_point(b & !row) as usize + 1)
                        } else {
                            Error::NotDifunctional(other + 1, min_point(row & !b) as usize + 1)
                        });
                    }
                    pairs.push((1 << x, row));
                }
            }
        }
        // kernel blocks were opened in increasing order of their minima
        Ok(DifunRelation::from_sorted_kernel(self.n, &pairs))
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryRelation(n={}, {:?})", self.n, self.pairs())
    }
}

/// A partition of a subset of `{1..n}` into nonempty blocks, ordered by
/// their minima.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u8,
    len: u8,
    blocks: [Mask; MAX_N],
}

impl SetPartition {
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SetPartition {
            n: n as u8,
            len: 0,
            blocks: [0; MAX_N],
        })
    }

    /// Validates and min-orders the given block masks.
    pub fn new(n: usize, blocks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        let mut part = Self::empty(n)?;
        let mut seen: Mask = 0;
        for block in blocks {
            if block == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if block & !full_mask(n) != 0 {
                return Err(Error::InvalidPartition(format!(
                    "block {block:#b} leaves {{1..{n}}}"
                )));
            }
            if block & seen != 0 {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            seen |= block;
            part.blocks[part.len as usize] = block;
            part.len += 1;
        }
        part.blocks[..part.len as usize].sort_by_key(|&b| min_point(b));
        Ok(part)
    }

    /// 1-based convenience constructor.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| mask_from_points(n, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, masks)
    }

    /// The partition of `support` into singletons.
    pub fn singletons(n: usize, support: Mask) -> Result<Self> {
        Self::new(n, points(support).map(|p| 1 << (p - 1)))
    }

    /// Trusted constructor for blocks already min-ordered and disjoint.
    pub(crate) fn from_sorted(n: u8, blocks: &[Mask]) -> Self {
        let mut part = SetPartition {
            n,
            len: blocks.len() as u8,
            blocks: [0; MAX_N],
        };
        part.blocks[..blocks.len()].copy_from_slice(blocks);
        part
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks[..self.len()]
    }

    pub fn support(&self) -> Mask {
        self.blocks().iter().fold(0, |acc, b| acc | b)
    }

    /// Whether the blocks cover all of `{1..n}`.
    pub fn is_full(&self) -> bool {
        self.support() == full_mask(self.n())
    }

    pub fn contains_block(&self, block: Mask) -> bool {
        self.blocks().contains(&block)
    }

    /// Block-set inclusion: every block of `self` is a block of `other`.
    pub fn is_subset_of(&self, other: &SetPartition) -> bool {
        self.blocks().iter().all(|&b| other.contains_block(b))
    }

    pub fn blocks_as_points(&self) -> Vec<Vec<usize>> {
        self.blocks().iter().map(|&b| points(b).collect()).collect()
    }
}

fn fmt_block(f: &mut fmt::Formatter<'_>, block: Mask) -> fmt::Result {
    let pts: Vec<String> = points(block).map(|p| p.to_string()).collect();
    write!(f, "{{{}}}", pts.join(","))
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &b) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            fmt_block(f, b)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition(n={}, {})", self.n, self)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.blocks_as_points().serialize(serializer)
    }
}

/// A difunctional relation `[A_1 … A_r; B_1 … B_r]` in canonical form.
///
/// Kernel blocks are min-ordered; `pairing[i]` is the index, in the
/// min-ordered cokernel, of the block matched with kernel block `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DifunJson", into = "DifunJson")]
pub struct DifunRelation {
    n: u8,
    kernel: SetPartition,
    cokernel: SetPartition,
    pairing: [u8; MAX_N],
}

impl DifunRelation {
    /// The empty relation, the zero of `D_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        let part = SetPartition::empty(n)?;
        Ok(DifunRelation {
            n: n as u8,
            kernel: part,
            cokernel: part,
            pairing: [0; MAX_N],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::partial_identity(n, full_mask(n))
    }

    /// `[p_1 … p_k; p_1 … p_k]` on the points of `support`.
    pub fn partial_identity(n: usize, support: Mask) -> Result<Self> {
        Self::from_block_pairs(n, points(support).map(|p| (1 << (p - 1), 1 << (p - 1))))
    }

    /// The permutation `x ↦ images[x - 1]`.
    pub fn permutation(n: usize, images: &[usize]) -> Result<Self> {
        if images.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: images.len(),
            });
        }
        let pairs = images
            .iter()
            .enumerate()
            .map(|(x, &y)| Ok((1 << x, mask_from_points(n, &[y])?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_block_pairs(n, pairs)
    }

    /// Builds `⋃ A_i × B_i` from `(A_i, B_i)` mask pairs given in any order.
    pub fn from_block_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (Mask, Mask)>,
    ) -> Result<Self> {
        check_n(n)?;
        let mut pairs: Vec<(Mask, Mask)> = pairs.into_iter().collect();
        if pairs.len() > n {
            return Err(Error::InvalidBlocks(format!(
                "{} blocks on {n} points",
                pairs.len()
            )));
        }
        // validate each side as a partition of its support
        SetPartition::new(n, pairs.iter().map(|p| p.0))
            .map_err(|e| Error::InvalidBlocks(format!("kernel: {e}")))?;
        SetPartition::new(n, pairs.iter().map(|p| p.1))
            .map_err(|e| Error::InvalidBlocks(format!("cokernel: {e}")))?;
        pairs.sort_by_key(|p| min_point(p.0));
        Ok(Self::from_sorted_kernel(n as u8, &pairs))
    }

    /// 1-based convenience constructor from `(A_i, B_i)` point lists.
    pub fn from_blocks(n: usize, pairs: &[(&[usize], &[usize])]) -> Result<Self> {
        let masks = pairs
            .iter()
            .map(|(a, b)| Ok((mask_from_points(n, a)?, mask_from_points(n, b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_block_pairs(n, masks)
    }

    /// Trusted constructor: `pairs` valid and sorted by kernel-block minimum.
    pub(crate) fn from_sorted_kernel(n: u8, pairs: &[(Mask, Mask)]) -> Self {
        let r = pairs.len();
        let mut kernel = [0; MAX_N];
        let mut order: [u8; MAX_N] = [0; MAX_N];
        for (i, &(a, _)) in pairs.iter().enumerate() {
            kernel[i] = a;
            order[i] = i as u8;
        }
        let order = &mut order[..r];
        order.sort_unstable_by_key(|&i| min_point(pairs[i as usize].1));
        let mut cokernel = [0; MAX_N];
        let mut pairing = [0; MAX_N];
        for (j, &i) in order.iter().enumerate() {
            cokernel[j] = pairs[i as usize].1;
            pairing[i as usize] = j as u8;
        }
        DifunRelation {
            n,
            kernel: SetPartition::from_sorted(n, &kernel[..r]),
            cokernel: SetPartition::from_sorted(n, &cokernel[..r]),
            pairing,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.kernel.len()
    }

    pub fn kernel(&self) -> &SetPartition {
        &self.kernel
    }

    pub fn cokernel(&self) -> &SetPartition {
        &self.cokernel
    }

    /// Cokernel index matched with each kernel block.
    pub fn pairing(&self) -> &[u8] {
        &self.pairing[..self.rank()]
    }

    pub fn dom(&self) -> Mask {
        self.kernel.support()
    }

    pub fn codom(&self) -> Mask {
        self.cokernel.support()
    }

    pub fn defect(&self) -> usize {
        self.n() - self.dom().count_ones() as usize
    }

    pub fn codefect(&self) -> usize {
        self.n() - self.codom().count_ones() as usize
    }

    /// `(A_i, B_i)` pairs in kernel-min order.
    pub fn block_pairs(&self) -> impl Iterator<Item = (Mask, Mask)> + '_ {
        self.kernel
            .blocks()
            .iter()
            .zip(self.pairing())
            .map(|(&a, &j)| (a, self.cokernel.blocks[j as usize]))
    }

    /// The cokernel block matched with kernel block `i`.
    fn partner(&self, i: usize) -> Mask {
        self.cokernel.blocks[self.pairing[i] as usize]
    }

    /// Blockwise form of `⋄`: `A_i × D_j` survives exactly when the
    /// cokernel block `B_i` of `self` equals the kernel block `C_j` of
    /// `other`.
    pub fn diamond(&self, other: &DifunRelation) -> Result<DifunRelation> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.mul(other))
    }

    /// Infallible [`Self::diamond`].
    ///
    /// # Panics
    ///
    /// If the ground sets differ.
    pub fn mul(&self, other: &DifunRelation) -> DifunRelation {
        assert_eq!(self.n, other.n, "ground sets differ");
        let mut pairs = [(0, 0); MAX_N];
        let mut len = 0;
        let theirs = other.kernel.blocks();
        for i in 0..self.rank() {
            let b = self.partner(i);
            if let Some(j) = theirs.iter().position(|&c| c == b) {
                pairs[len] = (self.kernel.blocks[i], other.partner(j));
                len += 1;
            }
        }
        Self::from_sorted_kernel(self.n, &pairs[..len])
    }

    pub fn inverse(&self) -> DifunRelation {
        let mut pairing = [0; MAX_N];
        for (i, &j) in self.pairing().iter().enumerate() {
            pairing[j as usize] = i as u8;
        }
        DifunRelation {
            n: self.n,
            kernel: self.cokernel,
            cokernel: self.kernel,
            pairing,
        }
    }

    pub fn expand_pairs(&self) -> BinaryRelation {
        let mut rel = BinaryRelation {
            n: self.n,
            rows: [0; MAX_N],
        };
        for (a, b) in self.block_pairs() {
            for x in points(a) {
                rel.rows[x - 1] = b;
            }
        }
        rel
    }

    pub fn params(&self) -> RelationParams {
        RelationParams {
            rank: self.rank(),
            dom: points(self.dom()).collect(),
            codom: points(self.codom()).collect(),
            ker: self.kernel,
            coker: self.cokernel,
            defect: self.defect(),
            codefect: self.codefect(),
        }
    }

    /// Membership in the symmetric inverse monoid: all blocks singletons.
    pub fn is_partial_injection(&self) -> bool {
        self.kernel
            .blocks()
            .iter()
            .chain(self.cokernel.blocks())
            .all(|b| b.count_ones() == 1)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }
}

impl fmt::Display for DifunRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (a, _)) in self.block_pairs().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            fmt_block(f, a)?;
        }
        write!(f, "; ")?;
        for (i, (_, b)) in self.block_pairs().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            fmt_block(f, b)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for DifunRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DifunRelation(n={}, {})", self.n, self)
    }
}

impl TryFrom<&BinaryRelation> for DifunRelation {
    type Error = Error;

    fn try_from(rel: &BinaryRelation) -> Result<Self> {
        rel.to_canonical()
    }
}

/// Wire form: `{"n": 3, "blocks": [[[1],[2]], [[2,3],[1,3]]]}`, one
/// `[kernel_block, cokernel_block]` pair per block in kernel-min order.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DifunJson {
    n: usize,
    blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl From<DifunRelation> for DifunJson {
    fn from(d: DifunRelation) -> Self {
        DifunJson {
            n: d.n(),
            blocks: d
                .block_pairs()
                .map(|(a, b)| (points(a).collect(), points(b).collect()))
                .collect(),
        }
    }
}

impl TryFrom<DifunJson> for DifunRelation {
    type Error = Error;

    fn try_from(json: DifunJson) -> Result<Self> {
        let blocks: Vec<(&[usize], &[usize])> = json
            .blocks
            .iter()
            .map(|(a, b)| (a.as_slice(), b.as_slice()))
            .collect();
        DifunRelation::from_blocks(json.n, &blocks)
    }
}

/// The seven parameters of a difunctional relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationParams {
    pub rank: usize,
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: SetPartition,
    pub coker: SetPartition,
    pub defect: usize,
    pub codefect: usize,
}
