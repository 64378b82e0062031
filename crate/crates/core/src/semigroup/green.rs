use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::ElementSet;
use crate::error::{Error, Result};
use crate::relations::DifunRelation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Green {
    R,
    L,
    J,
    H,
}

fn check_pair(a: &DifunRelation, b: &DifunRelation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// Green's preorders on `D_n` read off the block structure: `≤_R` is
/// inclusion of kernels (as sets of blocks), `≤_L` of cokernels, `≤_J`
/// comparison of ranks. `≤_H` is `≤_R ∧ ≤_L`.
pub fn green_leq(a: &DifunRelation, b: &DifunRelation, which: Green) -> Result<bool> {
    check_pair(a, b)?;
    Ok(match which {
        Green::R => a.kernel().is_subset_of(b.kernel()),
        Green::L => a.cokernel().is_subset_of(b.cokernel()),
        Green::J => a.rank() <= b.rank(),
        Green::H => a.kernel().is_subset_of(b.kernel()) && a.cokernel().is_subset_of(b.cokernel()),
    })
}

pub fn green_equiv(a: &DifunRelation, b: &DifunRelation, which: Green) -> Result<bool> {
    check_pair(a, b)?;
    Ok(match which {
        Green::R => a.kernel() == b.kernel(),
        Green::L => a.cokernel() == b.cokernel(),
        Green::J => a.rank() == b.rank(),
        Green::H => a.kernel() == b.kernel() && a.cokernel() == b.cokernel(),
    })
}

/// The `which`-class of `a` inside `universe`.
pub fn green_class(a: &DifunRelation, which: Green, universe: &ElementSet) -> Result<ElementSet> {
    if !universe.contains(a) {
        return Err(Error::Precondition(format!("{a} is not in the universe")));
    }
    let mut out = ElementSet::new(universe.n());
    for b in universe {
        if green_equiv(a, b, which)? {
            out.insert(*b)?;
        }
    }
    Ok(out)
}

/// Green's preorders from their definitions, `a ≤_R b ⇔ a ∈ bS¹` and so
/// on, with `S = ⟨generators⟩` and `S¹` its monoid with an adjoined
/// identity. Translates are computed by closing under multiplication by
/// the generators, which reaches every element of `S`.
#[derive(Debug, Clone)]
pub struct GreenOracle {
    generators: Vec<DifunRelation>,
}

impl GreenOracle {
    pub fn new(generators: &ElementSet) -> Self {
        GreenOracle {
            generators: generators.to_vec(),
        }
    }

    fn close(&self, start: Vec<DifunRelation>, right: bool) -> HashSet<DifunRelation> {
        let mut seen: HashSet<DifunRelation> = start.iter().copied().collect();
        let mut queue = start;
        while let Some(x) = queue.pop() {
            for g in &self.generators {
                let p = if right { x.mul(g) } else { g.mul(&x) };
                if seen.insert(p) {
                    queue.push(p);
                }
            }
        }
        seen
    }

    /// `bS¹` when `with_identity`, else `bS`.
    pub fn right_ideal(&self, b: &DifunRelation, with_identity: bool) -> HashSet<DifunRelation> {
        if with_identity {
            self.close(vec![*b], true)
        } else {
            self.close(self.generators.iter().map(|g| b.mul(g)).collect(), true)
        }
    }

    /// `S¹b` when `with_identity`, else `Sb`.
    pub fn left_ideal(&self, b: &DifunRelation, with_identity: bool) -> HashSet<DifunRelation> {
        if with_identity {
            self.close(vec![*b], false)
        } else {
            self.close(self.generators.iter().map(|g| g.mul(b)).collect(), false)
        }
    }

    /// `S¹bS¹` when `with_identity`, else `SbS`.
    pub fn two_sided_ideal(
        &self,
        b: &DifunRelation,
        with_identity: bool,
    ) -> HashSet<DifunRelation> {
        let right = self.right_ideal(b, with_identity);
        if with_identity {
            self.close(right.into_iter().collect(), false)
        } else {
            let start = right
                .iter()
                .flat_map(|x| self.generators.iter().map(move |g| g.mul(x)))
                .collect();
            self.close(start, false)
        }
    }

    pub fn leq(&self, a: &DifunRelation, b: &DifunRelation, which: Green) -> bool {
        match which {
            Green::R => self.right_ideal(b, true).contains(a),
            Green::L => self.left_ideal(b, true).contains(a),
            Green::J => self.two_sided_ideal(b, true).contains(a),
            Green::H => self.leq(a, b, Green::R) && self.leq(a, b, Green::L),
        }
    }
}
