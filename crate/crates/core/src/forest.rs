//! Forests: finite sets of trees with pairwise disjoint leaf sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::partition::enumerate_partitions;
use crate::tree::{enumerate_trees, Tree};

/// An inner vertex, identified by the set of its ancestor leaves.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(BTreeSet<Label>);

impl VertexId {
    pub(crate) fn from_leaves(leaves: BTreeSet<Label>) -> Self {
        debug_assert!(leaves.len() >= 2);
        VertexId(leaves)
    }

    /// Fails unless at least two leaves are given.
    pub fn new(leaves: BTreeSet<Label>) -> Result<Self> {
        if leaves.len() < 2 {
            return Err(Error::InvalidPartition(
                "an inner vertex has at least two ancestor leaves".into(),
            ));
        }
        Ok(VertexId(leaves))
    }

    pub fn leaves(&self) -> &BTreeSet<Label> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A forest on a finite label set, trees sorted by their minimum label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for t in &trees {
            for l in t.leaves() {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(Forest::from_disjoint(trees))
    }

    pub(crate) fn from_disjoint(mut trees: Vec<Tree>) -> Self {
        trees.sort_by(|a, b| a.min_label().cmp(b.min_label()));
        Forest { trees }
    }

    /// The forest `E` without inner vertices.
    pub fn discrete(labels: &[Label]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
        Forest::new(labels.iter().cloned().map(Tree::leaf).collect())
    }

    pub fn from_tree(tree: Tree) -> Self {
        Forest {
            trees: alloc::vec![tree],
        }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.trees
    }

    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    pub fn as_tree(&self) -> Option<&Tree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn label_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.trees
            .iter()
            .flat_map(|t| t.leaves().cloned())
            .collect()
    }

    pub fn inner_count(&self) -> usize {
        self.label_count() - self.tree_count()
    }

    /// `V(F)`: one vertex identity per inner vertex.
    pub fn inner_vertices(&self) -> BTreeSet<VertexId> {
        self.trees.iter().flat_map(Tree::inner_vertices).collect()
    }

    /// Leaf sets of the trees, in tree order.
    pub fn blocks(&self) -> Vec<BTreeSet<Label>> {
        self.trees.iter().map(Tree::leaf_set).collect()
    }

    /// `F[J]` for a union `J` of leaf sets of whole trees.
    pub fn restrict(&self, subset: &BTreeSet<Label>) -> Result<Forest> {
        let mut kept = Vec::new();
        let mut covered = 0;
        for t in &self.trees {
            let inside = t.leaves().filter(|l| subset.contains(*l)).count();
            if inside == t.leaf_count() {
                covered += inside;
                kept.push(t.clone());
            } else if inside > 0 {
                return Err(Error::SplitsTree(t.min_label().clone()));
            }
        }
        if covered != subset.len() {
            return Err(Error::LabelSetMismatch);
        }
        Ok(Forest { trees: kept })
    }

    /// Disjoint union `F1 ⊔ F2`.
    pub fn union(&self, other: &Forest) -> Result<Forest> {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::new(trees)
    }

    pub(crate) fn union_disjoint(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::from_disjoint(trees)
    }

    /// `G(F1, J1, F2, J2)` with `self = F1`: the tree `i` of `self` and tree
    /// `j` of `other` are grafted on a new root, everything else is kept.
    pub(crate) fn graft_union(&self, i: usize, other: &Forest, j: usize) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len() - 1);
        for (k, t) in self.trees.iter().enumerate() {
            if k != i {
                trees.push(t.clone());
            }
        }
        for (k, t) in other.trees.iter().enumerate() {
            if k != j {
                trees.push(t.clone());
            }
        }
        trees.push(Tree::graft_disjoint(
            self.trees[i].clone(),
            other.trees[j].clone(),
        ));
        Forest::from_disjoint(trees)
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest::from_tree(t)
    }
}

/// All canonical forests on `labels`, each exactly once: for every set
/// partition of the labels, every choice of one tree per block.
pub fn enumerate_forests(labels: &[Label]) -> Result<Vec<Forest>> {
    if labels.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    let mut out = Vec::new();
    for p in enumerate_partitions(labels)? {
        let per_block: Vec<Vec<Tree>> = p
            .blocks()
            .iter()
            .map(|b| enumerate_trees(&b.iter().cloned().collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let mut acc: Vec<Vec<Tree>> = alloc::vec![Vec::new()];
        for choices in &per_block {
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for partial in &acc {
                for t in choices {
                    let mut v = partial.clone();
                    v.push(t.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(Forest::from_disjoint));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::labels;

    fn f(s: &str) -> Forest {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Label> {
        items.iter().map(|s| Label::new(s).unwrap()).collect()
    }

    #[test]
    fn inner_vertices_by_ancestor_leaves() {
        let ls = labels(&["a", "b", "c", "d"]).unwrap();
        assert!(Forest::discrete(&ls).unwrap().inner_vertices().is_empty());
        let vs: Vec<_> = f("((a,b),c)").inner_vertices().into_iter().collect();
        assert_eq!(vs.len(), 2);
        assert!(vs.contains(&VertexId::new(set(&["a", "b"])).unwrap()));
        assert!(vs.contains(&VertexId::new(set(&["a", "b", "c"])).unwrap()));
        let vs = f("((a,b),(c,d))").inner_vertices();
        assert_eq!(vs.len(), 3);
        assert!(vs.contains(&VertexId::new(set(&["c", "d"])).unwrap()));
    }

    #[test]
    fn restriction_follows_tree_boundaries() {
        assert_eq!(f("(a,b)|c").restrict(&set(&["c"])).unwrap(), f("c"));
        let g = f("(a,b)|(c,d)");
        assert_eq!(g.restrict(&set(&["a", "b", "c", "d"])).unwrap(), g);
        assert_eq!(g.restrict(&set(&["a", "b"])).unwrap(), f("(a,b)"));
        assert!(matches!(
            g.restrict(&set(&["a", "c"])),
            Err(Error::SplitsTree(_))
        ));
        assert_eq!(
            g.restrict(&set(&["a", "b", "z"])),
            Err(Error::LabelSetMismatch)
        );
    }

    #[test]
    fn tree_count_plus_inner_count_is_label_count() {
        let ls = labels(&["a", "b", "c", "d", "e"]).unwrap();
        for forest in enumerate_forests(&ls).unwrap() {
            assert_eq!(forest.tree_count() + forest.inner_vertices().len(), 5);
        }
    }

    #[test]
    fn forest_counts_small() {
        let ls = labels(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(enumerate_forests(&ls[..1]).unwrap().len(), 1);
        assert_eq!(enumerate_forests(&ls[..3]).unwrap().len(), 7);
        assert_eq!(enumerate_forests(&ls).unwrap().len(), 266);
        assert!(enumerate_forests(&[]).is_err());
    }

    #[test]
    fn union_rejects_shared_labels() {
        assert!(f("(a,b)").union(&f("b|c")).is_err());
        assert_eq!(f("(a,b)").union(&f("c")).unwrap(), f("(a,b)|c"));
    }
}
