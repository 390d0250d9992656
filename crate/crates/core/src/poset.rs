//! Finite posets with a corank function, stored as a dense order matrix.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    len: usize,
    corank: Vec<usize>,
    // order[a * len + b] is true iff a <= b
    order: Vec<bool>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds a poset known to be graded by `corank`: `leq` is only queried
    /// for pairs whose coranks allow a relation, and covers are the related
    /// pairs whose coranks differ by exactly one.
    pub fn graded<F>(corank: Vec<usize>, mut leq: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let len = corank.len();
        let mut order = vec![false; len * len];
        for a in 0..len {
            order[a * len + a] = true;
            for b in 0..len {
                if corank[a] > corank[b] && leq(a, b) {
                    order[a * len + b] = true;
                }
            }
        }
        let covers = (0..len)
            .flat_map(|a| (0..len).map(move |b| (a, b)))
            .filter(|&(a, b)| order[a * len + b] && corank[a] == corank[b] + 1)
            .collect();
        Ok(Poset::assemble(corank, order, covers))
    }

    /// Builds a poset from an arbitrary order matrix, checking the partial
    /// order axioms. Covers come from the transitive reduction.
    pub fn from_relation(corank: Vec<usize>, order: Vec<bool>) -> Result<Self> {
        let len = corank.len();
        if order.len() != len * len {
            return Err(Error::InvalidPoset(
                "order matrix has the wrong size".into(),
            ));
        }
        for a in 0..len {
            if !order[a * len + a] {
                return Err(Error::InvalidPoset(format!("{a} is not reflexive")));
            }
            for b in 0..len {
                if a != b && order[a * len + b] && order[b * len + a] {
                    return Err(Error::InvalidPoset(format!(
                        "{a} and {b} violate antisymmetry"
                    )));
                }
            }
        }
        for a in 0..len {
            for b in 0..len {
                if !order[a * len + b] {
                    continue;
                }
                for c in 0..len {
                    if order[b * len + c] && !order[a * len + c] {
                        return Err(Error::InvalidPoset(format!(
                            "{a} <= {b} <= {c} violates transitivity"
                        )));
                    }
                }
            }
        }
        let covers = transitive_reduction(len, &order);
        Ok(Poset::assemble(corank, order, covers))
    }

    /// Takes the cover list as given, without checking it against the order.
    /// Useful to exercise structural checks on deliberately broken inputs.
    pub fn with_covers(
        corank: Vec<usize>,
        order: Vec<bool>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let len = corank.len();
        if order.len() != len * len {
            return Err(Error::InvalidPoset(
                "order matrix has the wrong size".into(),
            ));
        }
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| a >= len || b >= len) {
            return Err(Error::IndexOutOfRange(a.max(b)));
        }
        Ok(Poset::assemble(corank, order, covers))
    }

    fn assemble(corank: Vec<usize>, order: Vec<bool>, mut covers: Vec<(usize, usize)>) -> Self {
        let len = corank.len();
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        Poset {
            len,
            corank,
            order,
            covers,
            up,
            down,
        }
    }

    /// Componentwise product; element `(a1, a2)` has index `a1 * p2.len() + a2`.
    pub fn product(p1: &Poset, p2: &Poset) -> Poset {
        let (n1, n2) = (p1.len, p2.len);
        let len = n1 * n2;
        let idx = |a1: usize, a2: usize| a1 * n2 + a2;
        let mut corank = vec![0; len];
        let mut order = vec![false; len * len];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                let a = idx(a1, a2);
                corank[a] = p1.corank[a1] + p2.corank[a2];
                for b1 in 0..n1 {
                    if !p1.leq(a1, b1) {
                        continue;
                    }
                    for b2 in 0..n2 {
                        if p2.leq(a2, b2) {
                            order[a * len + idx(b1, b2)] = true;
                        }
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for &(a1, b1) in &p1.covers {
            for a2 in 0..n2 {
                covers.push((idx(a1, a2), idx(b1, a2)));
            }
        }
        for &(a2, b2) in &p2.covers {
            for a1 in 0..n1 {
                covers.push((idx(a1, a2), idx(a1, b2)));
            }
        }
        Poset::assemble(corank, order, covers)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn corank(&self, a: usize) -> usize {
        self.corank[a]
    }

    pub fn coranks(&self) -> &[usize] {
        &self.corank
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a * self.len + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn order_matrix(&self) -> &[bool] {
        &self.order
    }

    /// Cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    /// The unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len).find(|&a| (0..self.len).all(|b| self.leq(a, b)))
    }

    /// The unique maximum, if any.
    pub fn top(&self) -> Option<usize> {
        (0..self.len).find(|&b| (0..self.len).all(|a| self.leq(a, b)))
    }

    /// Elements sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let below: Vec<usize> = (0..self.len)
            .map(|b| (0..self.len).filter(|&a| self.leq(a, b)).count())
            .collect();
        let mut idx: Vec<usize> = (0..self.len).collect();
        idx.sort_by_key(|&a| (below[a], a));
        idx
    }

    /// Corank of the bottom element.
    pub fn degree(&self) -> Option<usize> {
        self.bottom().map(|b| self.corank[b])
    }
}

/// Pairs `a < b` with nothing strictly between them.
pub fn transitive_reduction(len: usize, order: &[bool]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && order[a * len + b];
    let mut covers = Vec::new();
    for a in 0..len {
        for b in 0..len {
            if lt(a, b) && !(0..len).any(|c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}
