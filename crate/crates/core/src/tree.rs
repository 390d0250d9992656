//! Unordered leaf-labeled rooted binary trees in canonical form.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::VertexId;
use crate::label::Label;

/// A leaf-labeled rooted binary tree with unordered children.
///
/// Values are always canonical: at every inner vertex the child whose leaf
/// set has the smaller minimum label comes first. Structural equality is
/// therefore plain value equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree(Repr);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    Leaf(Label),
    Node(Arc<Node>),
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Node {
    min: Label,
    leaves: usize,
    left: Tree,
    right: Tree,
}

impl Tree {
    pub fn leaf(label: Label) -> Self {
        Tree(Repr::Leaf(label))
    }

    /// `t1 ∨ t2`: both roots grafted on a new inner vertex.
    pub fn graft(t1: Tree, t2: Tree) -> Result<Self> {
        let right_leaves: BTreeSet<&Label> = t2.leaves().collect();
        if let Some(shared) = t1.leaves().find(|l| right_leaves.contains(l)) {
            return Err(Error::OverlappingLeaves(shared.clone()));
        }
        Ok(Tree::graft_disjoint(t1, t2))
    }

    /// Grafting without the disjointness check. Callers guarantee disjoint leaf sets.
    pub(crate) fn graft_disjoint(t1: Tree, t2: Tree) -> Self {
        let (left, right) = if t1.min_label() <= t2.min_label() {
            (t1, t2)
        } else {
            (t2, t1)
        };
        Tree(Repr::Node(Arc::new(Node {
            min: left.min_label().clone(),
            leaves: left.leaf_count() + right.leaf_count(),
            left,
            right,
        })))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.0, Repr::Leaf(_))
    }

    pub fn as_leaf(&self) -> Option<&Label> {
        match &self.0 {
            Repr::Leaf(l) => Some(l),
            Repr::Node(_) => None,
        }
    }

    /// The two subtrees of the root, in canonical order.
    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match &self.0 {
            Repr::Leaf(_) => None,
            Repr::Node(n) => Some((&n.left, &n.right)),
        }
    }

    pub fn min_label(&self) -> &Label {
        match &self.0 {
            Repr::Leaf(l) => l,
            Repr::Node(n) => &n.min,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match &self.0 {
            Repr::Leaf(_) => 1,
            Repr::Node(n) => n.leaves,
        }
    }

    pub fn inner_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Leaf labels in left-to-right canonical order.
    pub fn leaves(&self) -> Leaves<'_> {
        Leaves { stack: vec![self] }
    }

    pub fn leaf_set(&self) -> BTreeSet<Label> {
        self.leaves().cloned().collect()
    }

    /// Ancestor-leaf sets of all inner vertices, in post-order.
    pub fn inner_vertices(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.inner_count());
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut Vec<VertexId>) -> BTreeSet<Label> {
        match &self.0 {
            Repr::Leaf(l) => BTreeSet::from([l.clone()]),
            Repr::Node(n) => {
                let mut set = n.left.collect_vertices(out);
                set.extend(n.right.collect_vertices(out));
                out.push(VertexId::from_leaves(set.clone()));
                set
            }
        }
    }

    /// The vertex identity of the root, or `None` for a single leaf.
    pub fn root_vertex(&self) -> Option<VertexId> {
        (!self.is_leaf()).then(|| VertexId::from_leaves(self.leaf_set()))
    }

    /// Every inner vertex has at least one child that is a leaf.
    pub fn is_comb(&self) -> bool {
        match self.children() {
            None => true,
            Some((l, r)) => (l.is_leaf() && r.is_comb()) || (r.is_leaf() && l.is_comb()),
        }
    }

    /// The left comb `((..((l1,l2),l3),..),ln)`.
    pub fn comb(ordered: &[Label]) -> Result<Self> {
        let (first, rest) = ordered.split_first().ok_or(Error::EmptyLabelSet)?;
        let mut seen = BTreeSet::from([first]);
        let mut tree = Tree::leaf(first.clone());
        for l in rest {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
            tree = Tree::graft_disjoint(tree, Tree::leaf(l.clone()));
        }
        Ok(tree)
    }

    /// The subtree rooted at the inner vertex with the given ancestor leaves.
    pub fn subtree(&self, vertex: &VertexId) -> Option<&Tree> {
        let target = vertex.leaves();
        let probe = target.iter().next()?;
        let mut cur = self;
        loop {
            if cur.leaf_count() <= target.len() {
                let exact =
                    cur.leaf_count() == target.len() && cur.leaves().all(|l| target.contains(l));
                return exact.then_some(cur);
            }
            let (l, r) = cur.children()?;
            cur = if l.leaves().any(|x| x == probe) { l } else { r };
        }
    }
}

pub struct Leaves<'a> {
    stack: Vec<&'a Tree>,
}

impl<'a> Iterator for Leaves<'a> {
    type Item = &'a Label;

    fn next(&mut self) -> Option<&'a Label> {
        while let Some(t) = self.stack.pop() {
            match &t.0 {
                Repr::Leaf(l) => return Some(l),
                Repr::Node(n) => {
                    self.stack.push(&n.right);
                    self.stack.push(&n.left);
                }
            }
        }
        None
    }
}

/// All canonical trees on `labels`, each exactly once.
///
/// Labels are inserted one at a time on every edge of every tree on the
/// previous labels (including the edge above the root), which yields
/// `(2n-3)!!` distinct trees for `n >= 2`.
pub fn enumerate_trees(labels: &[Label]) -> Result<Vec<Tree>> {
    let (first, rest) = labels.split_first().ok_or(Error::EmptyLabelSet)?;
    let mut seen = BTreeSet::from([first]);
    let mut trees = vec![Tree::leaf(first.clone())];
    for l in rest {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
        let leaf = Tree::leaf(l.clone());
        trees = trees
            .iter()
            .flat_map(|t| insert_everywhere(t, &leaf))
            .collect();
    }
    Ok(trees)
}

fn insert_everywhere(tree: &Tree, leaf: &Tree) -> Vec<Tree> {
    let mut out = vec![Tree::graft_disjoint(tree.clone(), leaf.clone())];
    if let Some((l, r)) = tree.children() {
        for nl in insert_everywhere(l, leaf) {
            out.push(Tree::graft_disjoint(nl, r.clone()));
        }
        for nr in insert_everywhere(r, leaf) {
            out.push(Tree::graft_disjoint(l.clone(), nr));
        }
    }
    out
}
