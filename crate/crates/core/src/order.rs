//! The partial order on forests.
//!
//! `F ≤ G` is decided by recursive decomposition rather than by searching
//! for topological maps. Per tree `T = T1 ∨ T2` of `G`, the trees of `F`
//! under `T` either all sit inside one side (then recurse on both sides), or
//! exactly one of them straddles the root split and must itself split the
//! same way at its root (then its root is the only vertex of `F` landing on
//! the root of `T`, and its two subtrees are handed to the two sides).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::{Forest, VertexId};
use crate::label::Label;
use crate::tree::{enumerate_trees, Tree};

fn same_labels(a: &Forest, b: &Forest) -> Result<()> {
    if a.label_count() != b.label_count() || a.labels() != b.labels() {
        return Err(Error::LabelSetMismatch);
    }
    Ok(())
}

/// Groups the trees of `lower` by the tree of `upper` containing them, or
/// `None` when the tree partition of `lower` does not refine that of `upper`.
fn group_by_upper<'a>(lower: &'a Forest, upper: &Forest) -> Option<Vec<Vec<&'a Tree>>> {
    let mut home: BTreeMap<&Label, usize> = BTreeMap::new();
    for (i, t) in upper.trees().iter().enumerate() {
        for l in t.leaves() {
            home.insert(l, i);
        }
    }
    let mut groups = vec![Vec::new(); upper.tree_count()];
    for t in lower.trees() {
        let mut leaves = t.leaves();
        let i = home[leaves.next().unwrap()];
        if leaves.any(|l| home[l] != i) {
            return None;
        }
        groups[i].push(t);
    }
    Some(groups)
}

enum Side {
    Left,
    Right,
    Both,
}

fn side_of(t: &Tree, left: &BTreeSet<&Label>) -> Side {
    let inside = t.leaves().filter(|l| left.contains(l)).count();
    if inside == t.leaf_count() {
        Side::Left
    } else if inside == 0 {
        Side::Right
    } else {
        Side::Both
    }
}

/// Whether the trees `parts` (whose leaves are exactly those of `target`)
/// embed into `target`. Images of the roots that land on inner vertices of
/// `target` are collected into `marks`.
fn embeds(parts: Vec<&Tree>, target: &Tree, marks: &mut Option<&mut BTreeSet<VertexId>>) -> bool {
    let Some((t1, t2)) = target.children() else {
        return true;
    };
    let left: BTreeSet<&Label> = t1.leaves().collect();
    let mut lparts = Vec::new();
    let mut rparts = Vec::new();
    let mut straddling = None;
    for p in parts {
        match side_of(p, &left) {
            Side::Left => lparts.push(p),
            Side::Right => rparts.push(p),
            Side::Both if straddling.is_some() => return false,
            Side::Both => straddling = Some(p),
        }
    }
    if let Some(s) = straddling {
        // a straddling tree has leaves on both sides, so it is not a leaf
        let (s1, s2) = s.children().unwrap();
        let (sl, sr) = match (side_of(s1, &left), side_of(s2, &left)) {
            (Side::Left, Side::Right) => (s1, s2),
            (Side::Right, Side::Left) => (s2, s1),
            _ => return false,
        };
        lparts.push(sl);
        rparts.push(sr);
        if let Some(m) = marks.as_deref_mut() {
            m.insert(VertexId::from_leaves(target.leaf_set()));
        }
    }
    embeds(lparts, t1, marks) && embeds(rparts, t2, marks)
}

fn decide(lower: &Forest, upper: &Forest, mut marks: Option<&mut BTreeSet<VertexId>>) -> bool {
    let Some(groups) = group_by_upper(lower, upper) else {
        return false;
    };
    groups
        .into_iter()
        .zip(upper.trees())
        .all(|(parts, t)| embeds(parts, t, &mut marks))
}

/// `lower ≤ upper` in `For(I)`.
pub fn leq(lower: &Forest, upper: &Forest) -> Result<bool> {
    same_labels(lower, upper)?;
    Ok(decide(lower, upper, None))
}

/// The image of `V(lower)` in `V(upper)` along the canonical embedding.
pub fn marked_vertices(lower: &Forest, upper: &Forest) -> Result<BTreeSet<VertexId>> {
    same_labels(lower, upper)?;
    let mut marks = BTreeSet::new();
    if !decide(lower, upper, Some(&mut marks)) {
        return Err(Error::NotComparable);
    }
    debug_assert_eq!(marks.len(), lower.inner_count());
    Ok(marks)
}

/// All forests below `upper`, each exactly once.
pub fn lower_set(upper: &Forest) -> Vec<Forest> {
    let mut acc = vec![Forest::from_disjoint(Vec::new())];
    for t in upper.trees() {
        let below = lower_set_of_tree(t);
        let mut next = Vec::with_capacity(acc.len() * below.len());
        for a in &acc {
            for b in &below {
                next.push(a.union_disjoint(b));
            }
        }
        acc = next;
    }
    acc
}

/// Forests below a tree `T1 ∨ T2`: every `F1 ⊔ F2` and every
/// `G(F1, J1, F2, J2)` with `F1 ≤ T1`, `F2 ≤ T2`.
pub fn lower_set_of_tree(tree: &Tree) -> Vec<Forest> {
    let Some((t1, t2)) = tree.children() else {
        return vec![Forest::from_tree(tree.clone())];
    };
    let below1 = lower_set_of_tree(t1);
    let below2 = lower_set_of_tree(t2);
    let mut out = Vec::new();
    for f1 in &below1 {
        for f2 in &below2 {
            out.push(f1.union_disjoint(f2));
            for j1 in 0..f1.tree_count() {
                for j2 in 0..f2.tree_count() {
                    out.push(f1.graft_union(j1, f2, j2));
                }
            }
        }
    }
    out
}

/// The maximal elements of `For(I)`: the trees on `I`.
pub fn maximal_elements(labels: &[Label]) -> Result<Vec<Forest>> {
    Ok(enumerate_trees(labels)?
        .into_iter()
        .map(Forest::from_tree)
        .collect())
}

/// An upper forest together with a set of marked inner vertices.
///
/// Every subset of `V(upper)` is the image of `V(F)` for some `F ≤ upper`,
/// so any subset is accepted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MarkedTreePair {
    upper: Forest,
    marked: BTreeSet<VertexId>,
}

impl MarkedTreePair {
    pub fn new(upper: Forest, marked: BTreeSet<VertexId>) -> Result<Self> {
        let inner = upper.inner_vertices();
        if let Some(v) = marked.iter().find(|v| !inner.contains(*v)) {
            return Err(Error::UnmarkableVertex(v.clone()));
        }
        Ok(MarkedTreePair { upper, marked })
    }

    /// `(upper, marked_vertices(lower, upper))`.
    pub fn from_interval(lower: &Forest, upper: &Forest) -> Result<Self> {
        let marked = marked_vertices(lower, upper)?;
        Ok(MarkedTreePair {
            upper: upper.clone(),
            marked,
        })
    }

    pub fn upper(&self) -> &Forest {
        &self.upper
    }

    pub fn marked(&self) -> &BTreeSet<VertexId> {
        &self.marked
    }

    pub fn is_marked(&self, v: &VertexId) -> bool {
        self.marked.contains(v)
    }

    /// Degree of the interval: the number of unmarked inner vertices.
    pub fn degree(&self) -> usize {
        self.upper.inner_count() - self.marked.len()
    }

    /// One pair per tree of the upper forest.
    pub fn components(&self) -> Vec<MarkedTreePair> {
        self.upper
            .trees()
            .iter()
            .map(|t| self.restricted_to(t))
            .collect()
    }

    fn restricted_to(&self, t: &Tree) -> MarkedTreePair {
        let leaves = t.leaf_set();
        MarkedTreePair {
            upper: Forest::from_tree(t.clone()),
            marked: self
                .marked
                .iter()
                .filter(|v| v.leaves().is_subset(&leaves))
                .cloned()
                .collect(),
        }
    }

    /// For a single tree `T1 ∨ T2`: the two subtree pairs and whether the
    /// root is marked.
    pub fn split_root(&self) -> Option<(MarkedTreePair, MarkedTreePair, bool)> {
        let t = self.upper.as_tree()?;
        let (t1, t2) = t.children()?;
        let root_marked = self.marked.contains(&t.root_vertex()?);
        Some((self.restricted_to(t1), self.restricted_to(t2), root_marked))
    }
}
