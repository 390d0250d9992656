//! Partitive posets: ranked posets with a rank-compatible, order-preserving
//! map into a partition lattice, and the three ways of combining two of them
//! that model the decompositions of forest intervals.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::interval::{interval, IntervalPoset};
use crate::invariants::is_ranked;
use crate::label::Label;
use crate::order::marked_vertices;
use crate::partition::SetPartition;
use crate::poset::Poset;

/// Where an element of a constructed partitive poset comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// An element of a concrete forest interval.
    Forest(Forest),
    /// `(a1, a2)` in a product or twisted product.
    Pair(usize, usize),
    /// `a1 ⊔ a2` in a `∨`-product.
    Disjoint(usize, usize),
    /// `G(a1, J1, a2, J2)` in a `∨`-product; `J1`, `J2` are block indices
    /// of the images of `a1` and `a2`.
    Graft {
        left: usize,
        left_block: usize,
        right: usize,
        right_block: usize,
    },
}

#[derive(Clone, Debug)]
pub struct PartitivePoset {
    poset: Poset,
    ground: BTreeSet<Label>,
    parts: Vec<SetPartition>,
    provenance: Vec<Provenance>,
    // (#blocks(f(a)) - 1) - corank(a), the same for every a
    rank_shift: i64,
}

impl PartitivePoset {
    pub fn new(
        poset: Poset,
        ground: BTreeSet<Label>,
        parts: Vec<SetPartition>,
        provenance: Vec<Provenance>,
    ) -> Result<Self> {
        if parts.len() != poset.len() || provenance.len() != poset.len() {
            return Err(Error::InvalidPoset(
                "one partition and one tag per element".into(),
            ));
        }
        if poset.bottom().is_none() || poset.top().is_none() {
            return Err(Error::InvalidPoset("missing bottom or top".into()));
        }
        if !is_ranked(&poset) {
            return Err(Error::InvalidPoset("not ranked".into()));
        }
        if parts.iter().any(|p| p.ground() != ground) {
            return Err(Error::GroundSetMismatch);
        }
        let shift_of = |a: usize| parts[a].block_count() as i64 - 1 - poset.corank(a) as i64;
        let rank_shift = shift_of(0);
        if let Some(a) = (0..poset.len()).find(|&a| shift_of(a) != rank_shift) {
            return Err(Error::InvalidPoset(format!(
                "element {a} breaks the rank shift"
            )));
        }
        for &(a, b) in poset.covers() {
            if !parts[a].refines_unchecked(&parts[b]) {
                return Err(Error::InvalidPoset(format!(
                    "map is not monotone on {a} < {b}"
                )));
            }
        }
        Ok(PartitivePoset {
            poset,
            ground,
            parts,
            provenance,
            rank_shift,
        })
    }

    /// The interval with every element mapped to its partition by trees.
    pub fn from_interval(iv: &IntervalPoset) -> Result<Self> {
        let parts = iv.elements().iter().map(SetPartition::of_forest).collect();
        let provenance = iv
            .elements()
            .iter()
            .cloned()
            .map(Provenance::Forest)
            .collect();
        PartitivePoset::new(iv.poset().clone(), iv.upper().labels(), parts, provenance)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ground(&self) -> &BTreeSet<Label> {
        &self.ground
    }

    pub fn parts(&self) -> &[SetPartition] {
        &self.parts
    }

    pub fn part(&self, a: usize) -> &SetPartition {
        &self.parts[a]
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn rank_shift(&self) -> i64 {
        self.rank_shift
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom().unwrap()
    }

    pub fn top(&self) -> usize {
        self.poset.top().unwrap()
    }

    fn require_one_block_top(&self) -> Result<()> {
        if self.parts[self.top()].block_count() != 1 {
            return Err(Error::TopNotOneBlock);
        }
        Ok(())
    }
}

/// `[lower, upper]` as a partitive poset.
pub fn as_partitive(lower: &Forest, upper: &Forest) -> Result<PartitivePoset> {
    PartitivePoset::from_interval(&interval(lower, upper)?)
}

fn disjoint_grounds(p1: &PartitivePoset, p2: &PartitivePoset) -> Result<BTreeSet<Label>> {
    if !p1.ground.is_disjoint(&p2.ground) {
        return Err(Error::OverlappingGroundSets);
    }
    Ok(p1.ground.union(&p2.ground).cloned().collect())
}

fn pair_tags(n1: usize, n2: usize) -> Vec<Provenance> {
    (0..n1)
        .flat_map(|a1| (0..n2).map(move |a2| Provenance::Pair(a1, a2)))
        .collect()
}

/// Product poset mapped by disjoint union of partitions.
pub fn product(p1: &PartitivePoset, p2: &PartitivePoset) -> Result<PartitivePoset> {
    let ground = disjoint_grounds(p1, p2)?;
    let poset = Poset::product(&p1.poset, &p2.poset);
    let mut parts = Vec::with_capacity(poset.len());
    for a1 in &p1.parts {
        for a2 in &p2.parts {
            parts.push(a1.disjoint_union(a2)?);
        }
    }
    PartitivePoset::new(poset, ground, parts, pair_tags(p1.len(), p2.len()))
}

/// Product poset whose map gathers the blocks containing `k1` and `k2`,
/// where `k_i` is a block of the image of the bottom of `p_i`.
pub fn twisted_product(
    p1: &PartitivePoset,
    p2: &PartitivePoset,
    k1: &BTreeSet<Label>,
    k2: &BTreeSet<Label>,
) -> Result<PartitivePoset> {
    p1.require_one_block_top()?;
    p2.require_one_block_top()?;
    if !p1.parts[p1.bottom()].blocks().contains(k1) || !p2.parts[p2.bottom()].blocks().contains(k2)
    {
        return Err(Error::NotABlock);
    }
    let ground = disjoint_grounds(p1, p2)?;
    let poset = Poset::product(&p1.poset, &p2.poset);
    let (probe1, probe2) = (k1.first().unwrap(), k2.first().unwrap());
    let mut parts = Vec::with_capacity(poset.len());
    for a1 in &p1.parts {
        for a2 in &p2.parts {
            let u = a1.disjoint_union(a2)?;
            let i = u.block_containing(probe1).unwrap();
            let j = u.block_containing(probe2).unwrap();
            parts.push(u.merge(i, j)?);
        }
    }
    PartitivePoset::new(poset, ground, parts, pair_tags(p1.len(), p2.len()))
}

/// The `∨`-product: elements `a1 ⊔ a2` and `G(a1, J1, a2, J2)` for blocks
/// `J1` of `f(a1)` and `J2` of `f(a2)`, ordered by
/// - `a ⊔ b ≤ a' ⊔ b'` iff `a ≤ a'` and `b ≤ b'`,
/// - `G(a,J,b,K) ≤ G(a',J',b',K')` iff additionally `J ⊆ J'` and `K ⊆ K'`,
/// - `a ⊔ b ≤ G(a',J',b',K')` iff `a ≤ a'` and `b ≤ b'`,
///
/// and never `G ≤ ⊔`.
pub fn vee_product(p1: &PartitivePoset, p2: &PartitivePoset) -> Result<PartitivePoset> {
    p1.require_one_block_top()?;
    p2.require_one_block_top()?;
    let ground = disjoint_grounds(p1, p2)?;
    let (n1, n2) = (p1.len(), p2.len());
    let (q1, q2) = (&p1.poset, &p2.poset);

    let mut provenance = Vec::new();
    let mut corank = Vec::new();
    let mut parts = Vec::new();
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            provenance.push(Provenance::Disjoint(a1, a2));
            corank.push(1 + q1.corank(a1) + q2.corank(a2));
            parts.push(p1.parts[a1].disjoint_union(&p2.parts[a2])?);
        }
    }
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            let u = p1.parts[a1].disjoint_union(&p2.parts[a2])?;
            for (j1, b1) in p1.parts[a1].blocks().iter().enumerate() {
                for (j2, b2) in p2.parts[a2].blocks().iter().enumerate() {
                    provenance.push(Provenance::Graft {
                        left: a1,
                        left_block: j1,
                        right: a2,
                        right_block: j2,
                    });
                    corank.push(q1.corank(a1) + q2.corank(a2));
                    let i = u.block_containing(b1.first().unwrap()).unwrap();
                    let j = u.block_containing(b2.first().unwrap()).unwrap();
                    parts.push(u.merge(i, j)?);
                }
            }
        }
    }

    let len = provenance.len();
    let mut order = vec![false; len * len];
    for (x, px) in provenance.iter().enumerate() {
        for (y, py) in provenance.iter().enumerate() {
            order[x * len + y] = match (px, py) {
                (Provenance::Disjoint(a1, a2), Provenance::Disjoint(b1, b2)) => {
                    q1.leq(*a1, *b1) && q2.leq(*a2, *b2)
                }
                (Provenance::Disjoint(a1, a2), Provenance::Graft { left, right, .. }) => {
                    q1.leq(*a1, *left) && q2.leq(*a2, *right)
                }
                (
                    Provenance::Graft {
                        left: a1,
                        left_block: j1,
                        right: a2,
                        right_block: j2,
                    },
                    Provenance::Graft {
                        left: b1,
                        left_block: k1,
                        right: b2,
                        right_block: k2,
                    },
                ) => {
                    q1.leq(*a1, *b1)
                        && q2.leq(*a2, *b2)
                        && p1.parts[*a1].blocks()[*j1].is_subset(&p1.parts[*b1].blocks()[*k1])
                        && p2.parts[*a2].blocks()[*j2].is_subset(&p2.parts[*b2].blocks()[*k2])
                }
                _ => false,
            };
        }
    }
    let poset = Poset::from_relation(corank, order)?;
    PartitivePoset::new(poset, ground, parts, provenance)
}

/// Rebuilds `[lower, upper]` abstractly along its decomposition: products
/// over the trees of `upper`, twisted products at marked roots and
/// `∨`-products at unmarked roots, down to one-element intervals.
pub fn rebuild(lower: &Forest, upper: &Forest) -> Result<PartitivePoset> {
    if lower == upper {
        return as_partitive(lower, upper);
    }
    let marked = marked_vertices(lower, upper)?;
    if upper.tree_count() > 1 {
        let mut acc: Option<PartitivePoset> = None;
        for t in upper.trees() {
            let sub_upper = Forest::from_tree(t.clone());
            let sub_lower = lower.restrict(&t.leaf_set())?;
            let factor = rebuild(&sub_lower, &sub_upper)?;
            acc = Some(match acc {
                None => factor,
                Some(prev) => product(&prev, &factor)?,
            });
        }
        return Ok(acc.unwrap());
    }
    let t = upper.as_tree().unwrap();
    let (t1, t2) = t.children().unwrap();
    let left = t1.leaf_set();
    let root = t.root_vertex().unwrap();
    let mut lower1 = Vec::new();
    let mut lower2 = Vec::new();
    let mut chosen = None;
    for s in lower.trees() {
        let inside = s.leaves().filter(|l| left.contains(*l)).count();
        if inside == s.leaf_count() {
            lower1.push(s.clone());
        } else if inside == 0 {
            lower2.push(s.clone());
        } else {
            let (s1, s2) = s.children().unwrap();
            let (s1, s2) = if left.contains(s1.min_label()) {
                (s1, s2)
            } else {
                (s2, s1)
            };
            lower1.push(s1.clone());
            lower2.push(s2.clone());
            chosen = Some((s1.leaf_set(), s2.leaf_set()));
        }
    }
    debug_assert_eq!(chosen.is_some(), marked.contains(&root));
    let p1 = rebuild(&Forest::new(lower1)?, &Forest::from_tree(t1.clone()))?;
    let p2 = rebuild(&Forest::new(lower2)?, &Forest::from_tree(t2.clone()))?;
    match chosen {
        Some((k1, k2)) => twisted_product(&p1, &p2, &k1, &k2),
        None => vee_product(&p1, &p2),
    }
}

fn up_down_counts(p: &Poset, a: usize) -> (usize, usize) {
    let above = (0..p.len()).filter(|&b| p.leq(a, b)).count();
    let below = (0..p.len()).filter(|&b| p.leq(b, a)).count();
    (above, below)
}

/// Joint color refinement of two posets starting from the given labels.
fn refine(
    p1: &Poset,
    p2: &Poset,
    init1: Vec<Vec<usize>>,
    init2: Vec<Vec<usize>>,
) -> (Vec<usize>, Vec<usize>) {
    let mut dict: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let intern = |key: Vec<usize>, dict: &mut BTreeMap<Vec<usize>, usize>| {
        let next = dict.len();
        *dict.entry(key).or_insert(next)
    };
    let mut c1: Vec<usize> = init1.into_iter().map(|k| intern(k, &mut dict)).collect();
    let mut c2: Vec<usize> = init2.into_iter().map(|k| intern(k, &mut dict)).collect();
    let mut classes = dict.len();
    loop {
        let mut round: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let signature = |p: &Poset, c: &[usize], a: usize| {
            let mut up: Vec<usize> = p.upper_covers(a).iter().map(|&b| c[b]).collect();
            let mut down: Vec<usize> = p.lower_covers(a).iter().map(|&b| c[b]).collect();
            up.sort_unstable();
            down.sort_unstable();
            let mut key = vec![c[a], usize::MAX];
            key.extend(up);
            key.push(usize::MAX);
            key.extend(down);
            key
        };
        let n1: Vec<usize> = (0..p1.len())
            .map(|a| intern(signature(p1, &c1, a), &mut round))
            .collect();
        let n2: Vec<usize> = (0..p2.len())
            .map(|a| intern(signature(p2, &c2, a), &mut round))
            .collect();
        let stable = round.len() == classes;
        classes = round.len();
        c1 = n1;
        c2 = n2;
        if stable {
            return (c1, c2);
        }
    }
}

/// An order isomorphism `p1 → p2` that preserves the given initial labels.
fn find_isomorphism(
    p1: &Poset,
    p2: &Poset,
    extra1: &[Vec<usize>],
    extra2: &[Vec<usize>],
) -> Option<Vec<usize>> {
    if p1.len() != p2.len() || p1.covers().len() != p2.covers().len() {
        return None;
    }
    let init = |p: &Poset, extra: &[Vec<usize>]| -> Vec<Vec<usize>> {
        (0..p.len())
            .map(|a| {
                let (above, below) = up_down_counts(p, a);
                let mut key = vec![
                    p.corank(a),
                    p.upper_covers(a).len(),
                    p.lower_covers(a).len(),
                    above,
                    below,
                ];
                key.extend(extra[a].iter().copied());
                key
            })
            .collect()
    };
    let (c1, c2) = refine(p1, p2, init(p1, extra1), init(p2, extra2));
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }

    // visit p1 in breadth-first order over the undirected cover graph
    let mut seq = Vec::with_capacity(p1.len());
    let mut seen = vec![false; p1.len()];
    for start in 0..p1.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut head = seq.len();
        seq.push(start);
        while head < seq.len() {
            let a = seq[head];
            head += 1;
            for &b in p1.upper_covers(a).iter().chain(p1.lower_covers(a)) {
                if !seen[b] {
                    seen[b] = true;
                    seq.push(b);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; p1.len()];
    let mut used = vec![false; p2.len()];
    if extend(p1, p2, &c1, &c2, &seq, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p1: &Poset,
    p2: &Poset,
    c1: &[usize],
    c2: &[usize],
    seq: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = seq.get(depth) else {
        return true;
    };
    for cand in 0..p2.len() {
        if used[cand] || c2[cand] != c1[a] {
            continue;
        }
        let consistent = seq[..depth].iter().all(|&u| {
            let v = map[u];
            p1.leq(u, a) == p2.leq(v, cand) && p1.leq(a, u) == p2.leq(cand, v)
        });
        if !consistent {
            continue;
        }
        map[a] = cand;
        used[cand] = true;
        if extend(p1, p2, c1, c2, seq, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[a] = usize::MAX;
    }
    false
}

/// Whether the two posets are isomorphic as ordered sets.
pub fn poset_isomorphic(p1: &Poset, p2: &Poset) -> bool {
    let none1 = vec![Vec::new(); p1.len()];
    let none2 = vec![Vec::new(); p2.len()];
    find_isomorphism(p1, p2, &none1, &none2).is_some()
}

/// An order isomorphism matching elements whose images have the same
/// multiset of block sizes.
pub fn block_size_isomorphism(p1: &PartitivePoset, p2: &PartitivePoset) -> Option<Vec<usize>> {
    if p1.rank_shift != p2.rank_shift {
        return None;
    }
    let sizes1: Vec<Vec<usize>> = p1.parts.iter().map(SetPartition::block_sizes).collect();
    let sizes2: Vec<Vec<usize>> = p2.parts.iter().map(SetPartition::block_sizes).collect();
    find_isomorphism(&p1.poset, &p2.poset, &sizes1, &sizes2)
}

/// Each image partition read as a partition of the blocks of the bottom
/// image, which it coarsens. Blocks are listed by bottom-block index.
fn coarsenings(p: &PartitivePoset) -> Vec<Vec<Vec<usize>>> {
    let bottom = &p.parts[p.bottom()];
    p.parts
        .iter()
        .map(|part| {
            let mut blocks = vec![Vec::new(); part.block_count()];
            for (i, b) in bottom.blocks().iter().enumerate() {
                let j = part
                    .block_covering(b)
                    .expect("bottom refines every element");
                blocks[j].push(i);
            }
            blocks
        })
        .collect()
}

fn relabel(blocks: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b: Vec<usize> = b.iter().map(|&i| perm[i]).collect();
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    fn go(i: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for j in i..current.len() {
            current.swap(i, j);
            go(i + 1, current, out);
            current.swap(i, j);
        }
    }
    go(0, &mut current, &mut out);
    out
}

/// An isomorphism of partitive posets: an order isomorphism together with a
/// bijection between the blocks of the two bottom images that carries the
/// image of every element onto the image of its partner. Images are only
/// compared through the bottom blocks they gather, so block sizes may differ.
///
/// Returns the element map and the bottom-block map.
pub fn partitive_isomorphism(
    p1: &PartitivePoset,
    p2: &PartitivePoset,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if p1.rank_shift != p2.rank_shift || p1.len() != p2.len() {
        return None;
    }
    let c1 = coarsenings(p1);
    let c2 = coarsenings(p2);
    let k = p1.parts[p1.bottom()].block_count();
    if k != p2.parts[p2.bottom()].block_count() {
        return None;
    }
    // block sizes counted in bottom blocks do not depend on the bijection
    let profile = |c: &[Vec<Vec<usize>>]| -> Vec<Vec<usize>> {
        c.iter()
            .map(|blocks| {
                let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                sizes
            })
            .collect()
    };
    let (prof1, prof2) = (profile(&c1), profile(&c2));
    find_isomorphism(&p1.poset, &p2.poset, &prof1, &prof2)?;

    let identity: Vec<usize> = (0..k).collect();
    let mut keys: BTreeMap<Vec<Vec<usize>>, usize> = BTreeMap::new();
    let mut key_of = |blocks: Vec<Vec<usize>>| {
        let next = keys.len();
        *keys.entry(blocks).or_insert(next)
    };
    let target: Vec<Vec<usize>> = c2
        .iter()
        .map(|b| vec![key_of(relabel(b, &identity))])
        .collect();
    let mut wanted: Vec<usize> = target.iter().map(|k| k[0]).collect();
    wanted.sort_unstable();
    for perm in permutations(k) {
        let labels: Vec<Vec<usize>> = c1
            .iter()
            .map(|b| vec![keys.get(&relabel(b, &perm)).copied().unwrap_or(usize::MAX)])
            .collect();
        let mut have: Vec<usize> = labels.iter().map(|k| k[0]).collect();
        have.sort_unstable();
        if have != wanted {
            continue;
        }
        if let Some(map) = find_isomorphism(&p1.poset, &p2.poset, &labels, &target) {
            return Some((map, perm));
        }
    }
    None
}

pub fn partitive_isomorphic(p1: &PartitivePoset, p2: &PartitivePoset) -> bool {
    partitive_isomorphism(p1, p2).is_some()
}
