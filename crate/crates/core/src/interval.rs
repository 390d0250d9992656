//! Materialized intervals `[F, G]`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::order::{leq, lower_set};
use crate::poset::Poset;

/// The interval `[lower, upper]` with its elements, coranks and covers.
///
/// Elements are sorted by decreasing corank, then canonically, so index 0
/// is `lower` and the last index is `upper`. Corank is the number of trees
/// minus the number of trees of `upper`.
#[derive(Clone, Debug)]
pub struct IntervalPoset {
    lower: Forest,
    upper: Forest,
    elements: Vec<Forest>,
    poset: Poset,
}

/// Materializes `[lower, upper]` from the lower set of `upper`.
pub fn interval(lower: &Forest, upper: &Forest) -> Result<IntervalPoset> {
    if !leq(lower, upper)? {
        return Err(Error::NotComparable);
    }
    let candidates = lower_set(upper);
    IntervalPoset::from_candidates(lower, upper, candidates)
}

impl IntervalPoset {
    /// Builds the interval from any superset of its elements that lies below `upper`.
    pub(crate) fn from_candidates(
        lower: &Forest,
        upper: &Forest,
        candidates: Vec<Forest>,
    ) -> Result<Self> {
        let mut elements: Vec<Forest> = candidates
            .into_iter()
            .filter(|h| h.tree_count() <= lower.tree_count() && leq(lower, h).unwrap_or(false))
            .collect();
        elements.sort_by(|a, b| b.tree_count().cmp(&a.tree_count()).then_with(|| a.cmp(b)));
        elements.dedup();
        let top = upper.tree_count();
        let corank = elements.iter().map(|h| h.tree_count() - top).collect();
        let poset = Poset::graded(corank, |a, b| {
            leq(&elements[a], &elements[b]).expect("same label set")
        })?;
        Ok(IntervalPoset {
            lower: lower.clone(),
            upper: upper.clone(),
            elements,
            poset,
        })
    }

    pub fn lower(&self) -> &Forest {
        &self.lower
    }

    pub fn upper(&self) -> &Forest {
        &self.upper
    }

    pub fn elements(&self) -> &[Forest] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn index_of(&self, forest: &Forest) -> Option<usize> {
        self.elements.iter().position(|h| h == forest)
    }

    pub fn corank_of(&self, a: usize) -> usize {
        self.poset.corank(a)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    /// `|V(upper)| - |V(lower)|`, the corank of the bottom.
    pub fn degree(&self) -> usize {
        self.upper.inner_count() - self.lower.inner_count()
    }
}
