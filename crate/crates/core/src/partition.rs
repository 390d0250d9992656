//! Set partitions under refinement, and the comb isomorphism.
//!
//! Nothing here depends on the forest order: the partition lattice built by
//! [`partition_lattice`] is enumerated and ordered directly, so it can serve
//! as an independent oracle for intervals below a comb.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::label::Label;
use crate::order::leq;
use crate::poly::UnivariatePolynomial;
use crate::poset::Poset;
use crate::tree::Tree;

/// A partition of a finite label set into nonempty blocks, sorted by minimum label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<BTreeSet<Label>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<BTreeSet<Label>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for l in b {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(SetPartition::from_disjoint(blocks))
    }

    fn from_disjoint(mut blocks: Vec<BTreeSet<Label>>) -> Self {
        blocks.sort_by(|a, b| a.first().cmp(&b.first()));
        SetPartition { blocks }
    }

    pub fn finest(ground: &[Label]) -> Result<Self> {
        SetPartition::new(ground.iter().map(|l| BTreeSet::from([l.clone()])).collect())
    }

    pub fn coarsest(ground: &[Label]) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
        SetPartition::new(vec![ground.iter().cloned().collect()])
    }

    /// The partition of the labels of `forest` by trees.
    pub fn of_forest(forest: &Forest) -> Self {
        SetPartition::from_disjoint(forest.blocks())
    }

    pub fn blocks(&self) -> &[BTreeSet<Label>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground(&self) -> BTreeSet<Label> {
        self.blocks.iter().flatten().cloned().collect()
    }

    /// Sorted block sizes.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(BTreeSet::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn block_containing(&self, label: &Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(label))
    }

    /// Index of the block containing all of `part`, if there is one.
    pub fn block_covering(&self, part: &BTreeSet<Label>) -> Option<usize> {
        let i = self.block_containing(part.first()?)?;
        part.is_subset(&self.blocks[i]).then_some(i)
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        if self.ground() != other.ground() {
            return Err(Error::GroundSetMismatch);
        }
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &SetPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.block_covering(b).is_some())
    }

    /// Disjoint union of partitions of disjoint ground sets.
    pub fn disjoint_union(&self, other: &SetPartition) -> Result<SetPartition> {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        SetPartition::new(blocks).map_err(|_| Error::OverlappingGroundSets)
    }

    /// Gathers blocks `i` and `j` into a single block.
    pub fn merge(&self, i: usize, j: usize) -> Result<SetPartition> {
        if i >= self.blocks.len() || j >= self.blocks.len() {
            return Err(Error::IndexOutOfRange(i.max(j)));
        }
        if i == j {
            return Ok(self.clone());
        }
        let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
        let mut merged = self.blocks[i].clone();
        merged.extend(self.blocks[j].iter().cloned());
        for (k, b) in self.blocks.iter().enumerate() {
            if k != i && k != j {
                blocks.push(b.clone());
            }
        }
        blocks.push(merged);
        Ok(SetPartition::from_disjoint(blocks))
    }
}

impl fmt::Display for SetPartition {
    /// Blocks joined by `|`, labels of a block sorted and concatenated
    /// (comma-separated when some label is longer than one character).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.blocks.iter().flatten().all(|l| l.as_str().len() == 1);
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (k, l) in b.iter().enumerate() {
                if k > 0 && !compact {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// All set partitions of `ground`, via restricted growth strings.
pub fn enumerate_partitions(ground: &[Label]) -> Result<Vec<SetPartition>> {
    if ground.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    let distinct: BTreeSet<&Label> = ground.iter().collect();
    if distinct.len() != ground.len() {
        let dup = ground
            .iter()
            .enumerate()
            .find(|(i, l)| ground[..*i].contains(l))
            .map(|(_, l)| l.clone())
            .unwrap();
        return Err(Error::DuplicateLabel(dup));
    }
    let n = ground.len();
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks_n = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![BTreeSet::new(); blocks_n];
        for (l, &b) in ground.iter().zip(&rgs) {
            blocks[b].insert(l.clone());
        }
        out.push(SetPartition::from_disjoint(blocks));

        // next restricted growth string: a[i] <= 1 + max(a[..i])
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(out);
            }
            i -= 1;
            let prefix_max = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// The partition lattice of `ground`, ordered by refinement, corank = blocks - 1.
pub fn partition_lattice(ground: &[Label]) -> Result<(Vec<SetPartition>, Poset)> {
    let mut parts = enumerate_partitions(ground)?;
    parts.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then(a.cmp(b)));
    let corank: Vec<usize> = parts.iter().map(|p| p.block_count() - 1).collect();
    let poset = Poset::graded(corank, |a, b| parts[a].refines_unchecked(&parts[b]))?;
    Ok((parts, poset))
}

/// The isomorphism from `[E, C]` onto the partition lattice: a forest of
/// combs below `C` goes to the partition of the labels by its trees.
pub fn comb_iso(forest: &Forest, comb: &Tree) -> Result<SetPartition> {
    if !comb.is_comb() {
        return Err(Error::NotAComb);
    }
    if !leq(forest, &Forest::from_tree(comb.clone()))? {
        return Err(Error::NotComparable);
    }
    Ok(SetPartition::of_forest(forest))
}

/// `(y-1)(y-2)...(y-(n-1))`, the characteristic polynomial of `Π_n`.
pub fn partition_char_poly(n: usize) -> Result<UnivariatePolynomial> {
    if n == 0 {
        return Err(Error::EmptyLabelSet);
    }
    let mut chi = UnivariatePolynomial::one();
    for k in 1..n {
        chi = &chi * &UnivariatePolynomial::linear_root(BigInt::from(k));
    }
    Ok(chi)
}
