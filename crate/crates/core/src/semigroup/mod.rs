//! The semigroup `(D_n, ⋄)`: element sets, closure, J-classes and ideals,
//! Green's relations, principal factors and minimum generating-set search.

mod closure;
mod green;
mod principal;
mod search;

pub use closure::{bfs_closure, closure, ClosureResult};
pub use green::{green_class, green_equiv, green_leq, Green, GreenOracle};
pub use principal::{principal_factor, PfElement, PrincipalFactor};
pub use search::{
    brute_force_rank, brute_force_relative_rank, search_min_subset, RankSearch, SubsetBound,
    DEFAULT_BUDGET,
};

use indexmap::IndexSet;
use itertools::Itertools;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::combinatorics::partial_partitions;
use crate::error::{Error, Result};
use crate::relations::{BinaryRelation, DifunRelation};

/// An insertion-ordered, duplicate-free list of elements of `D_n`.
///
/// Equality is set equality; order only matters for generator indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    n: usize,
    elements: IndexSet<DifunRelation>,
}

impl ElementSet {
    pub fn new(n: usize) -> Self {
        ElementSet {
            n,
            elements: IndexSet::new(),
        }
    }

    pub fn from_elements(
        n: usize,
        elements: impl IntoIterator<Item = DifunRelation>,
    ) -> Result<Self> {
        let mut set = Self::new(n);
        for e in elements {
            set.insert(e)?;
        }
        Ok(set)
    }

    pub(crate) fn from_index_set(n: usize, elements: IndexSet<DifunRelation>) -> Self {
        ElementSet { n, elements }
    }

    /// Parses a JSON array of relation encodings. An empty array is
    /// rejected since it carries no ground-set size.
    pub fn from_json(json: &str) -> Result<Self> {
        let elems: Vec<DifunRelation> =
            serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))?;
        let n = elems
            .first()
            .map(|e| e.n())
            .ok_or_else(|| Error::Json("empty generator list".into()))?;
        Self::from_elements(n, elems)
    }

    /// Returns `false` if the element was already present.
    pub fn insert(&mut self, e: DifunRelation) -> Result<bool> {
        if e.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: e.n(),
            });
        }
        Ok(self.elements.insert(e))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &DifunRelation) -> bool {
        self.elements.contains(e)
    }

    pub fn index_of(&self, e: &DifunRelation) -> Option<usize> {
        self.elements.get_index_of(e)
    }

    pub fn get(&self, i: usize) -> Option<&DifunRelation> {
        self.elements.get_index(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = &DifunRelation> + '_ {
        self.elements.iter()
    }

    pub fn to_vec(&self) -> Vec<DifunRelation> {
        self.elements.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        let mut out = self.clone();
        for e in other.iter() {
            out.insert(*e)?;
        }
        Ok(out)
    }

    /// Elements satisfying `keep`, order preserved.
    pub fn filter(&self, keep: impl Fn(&DifunRelation) -> bool) -> ElementSet {
        ElementSet {
            n: self.n,
            elements: self.elements.iter().copied().filter(|e| keep(e)).collect(),
        }
    }

    /// Canonically sorted copy.
    pub fn sorted(&self) -> ElementSet {
        let mut elements = self.elements.clone();
        elements.sort();
        ElementSet {
            n: self.n,
            elements,
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a DifunRelation;
    type IntoIter = indexmap::set::Iter<'a, DifunRelation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for e in self.iter() {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// The J-class `J_r`, built from its structure: a kernel and a cokernel
/// with `r` blocks each and a bijection between them. Canonically sorted.
pub fn enumerate_j_class(n: usize, r: usize) -> Result<ElementSet> {
    if r > n {
        return Err(Error::Precondition(format!("rank {r} exceeds n = {n}")));
    }
    let kernels = partial_partitions(n, r)?;
    let mut set = ElementSet::new(n);
    for ker in &kernels {
        for coker in &kernels {
            for perm in (0..r).permutations(r) {
                let pairs = ker
                    .blocks()
                    .iter()
                    .zip(&perm)
                    .map(|(&a, &j)| (a, coker.blocks()[j]));
                set.insert(DifunRelation::from_block_pairs(n, pairs)?)?;
            }
        }
    }
    Ok(set.sorted())
}

/// The ideal `I_r = J_0 ∪ ⋯ ∪ J_r`, sorted by rank then canonically.
pub fn enumerate_ideal(n: usize, r: usize) -> Result<ElementSet> {
    if r > n {
        return Err(Error::Precondition(format!("rank {r} exceeds n = {n}")));
    }
    let mut set = ElementSet::new(n);
    for s in 0..=r {
        for e in enumerate_j_class(n, s)?.iter() {
            set.insert(*e)?;
        }
    }
    Ok(set)
}

/// `D_n` by brute force: every relation on `{1..n}` passing the
/// definitional difunctionality test. Only feasible for `n ≤ 4`.
pub fn filter_difunctional(n: usize) -> Result<ElementSet> {
    if n > 4 {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut set = ElementSet::new(n);
    for rel in BinaryRelation::all(n)? {
        if rel.is_difunctional() {
            set.insert(rel.to_canonical()?)?;
        }
    }
    Ok(set.sorted())
}
