use std::hash::Hash;

use indexmap::IndexSet;

use super::ElementSet;
use crate::error::{Error, Result};
use crate::relations::DifunRelation;

/// Breadth-first closure of `generators` under `mul`.
///
/// Every element of `⟨A⟩` is a word `g_1 ⋯ g_k`, so right multiplication by
/// generators alone reaches all of it, and processing the queue in discovery
/// order visits words by nondecreasing length. Returns the elements in
/// discovery order and, for each, `None` (a generator) or the pair
/// `(prefix index, generator index)` it was first reached by.
pub fn bfs_closure<T, F>(generators: &[T], mul: F) -> (IndexSet<T>, Vec<Option<(u32, u32)>>)
where
    T: Copy + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements: IndexSet<T> = IndexSet::new();
    let mut parent = Vec::new();
    let mut gen_index = Vec::with_capacity(generators.len());
    for g in generators {
        let (i, fresh) = elements.insert_full(*g);
        if fresh {
            parent.push(None);
        }
        gen_index.push(i);
    }
    let mut head = 0;
    while head < elements.len() {
        let x = *elements.get_index(head).expect("in range");
        for (gi, g) in generators.iter().enumerate() {
            let p = mul(&x, g);
            if elements.insert(p) {
                parent.push(Some((head as u32, gi as u32)));
            }
        }
        head += 1;
    }
    (elements, parent)
}

/// `⟨A⟩` together with a shortest generator word for each element.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    generators: ElementSet,
    elements: ElementSet,
    parent: Vec<Option<(u32, u32)>>,
}

/// The subsemigroup of `D_n` generated by `generators` under `⋄`.
pub fn closure(generators: &ElementSet) -> Result<ClosureResult> {
    if generators.is_empty() {
        return Err(Error::Precondition(
            "closure needs at least one generator".into(),
        ));
    }
    let gens = generators.to_vec();
    let (elements, parent) = bfs_closure(&gens, DifunRelation::mul);
    Ok(ClosureResult {
        generators: generators.clone(),
        elements: ElementSet::from_index_set(generators.n(), elements),
        parent,
    })
}

impl ClosureResult {
    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn generators(&self) -> &ElementSet {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn into_elements(self) -> ElementSet {
        self.elements
    }

    /// Word over generator indices evaluating to the element at `index`.
    pub fn witness_at(&self, index: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = index;
        loop {
            match self.parent[cur] {
                None => {
                    let g = self.elements.get(cur).expect("in range");
                    word.push(self.generators.index_of(g).expect("generator"));
                    break;
                }
                Some((prefix, g)) => {
                    word.push(g as usize);
                    cur = prefix as usize;
                }
            }
        }
        word.reverse();
        word
    }

    pub fn witness(&self, e: &DifunRelation) -> Option<Vec<usize>> {
        self.elements.index_of(e).map(|i| self.witness_at(i))
    }

    /// The `⋄`-product of the generators named by `word`.
    pub fn evaluate(&self, word: &[usize]) -> Option<DifunRelation> {
        let (first, rest) = word.split_first()?;
        let mut acc = *self.generators.get(*first)?;
        for &g in rest {
            acc = acc.mul(self.generators.get(g)?);
        }
        Some(acc)
    }
}
