//! Invariants of `[F, F']` computed from the pair `(F', V)` alone, where `V`
//! is the set of marked vertices, without materializing the interval.
//!
//! The pair decomposes recursively:
//! - an upper forest with several trees is the product of its per-tree pairs;
//! - a tree whose root is marked is the (twisted) product of its two subtree pairs;
//! - a tree whose root is unmarked is a special interval, assembled from its
//!   two subtree pairs by the `∨` formulas for `Z` and `M`.
//!
//! Characteristic polynomials factor completely: each unmarked vertex with
//! subtrees `T1`, `T2` contributes the root `d1·d2`, where `d_i` is the
//! number of leaves of `T_i` minus its number of marked vertices.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::One;

use crate::forest::VertexId;
use crate::label::Label;
use crate::order::MarkedTreePair;
use crate::poly::{BivariatePolynomial, UnivariatePolynomial};
use crate::tree::Tree;

/// The exponents of a pair, sorted ascending. All entries are positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExponentMultiset(Vec<u64>);

impl ExponentMultiset {
    pub fn new(mut exponents: Vec<u64>) -> Self {
        exponents.sort_unstable();
        ExponentMultiset(exponents)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∏ (y - e)`.
    pub fn polynomial(&self) -> UnivariatePolynomial {
        UnivariatePolynomial::from_roots(self.0.iter().map(|&e| BigInt::from(e)))
    }

    /// Factored display such as `(y - 1)^2*(y - 4)`; `1` when empty.
    pub fn factored(&self, var: char) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let e = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == e).count();
            if !out.is_empty() {
                out.push('*');
            }
            let _ = write!(out, "({var} - {e})");
            if run > 1 {
                let _ = write!(out, "^{run}");
            }
            i += run;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    /// Degree zero: a one-element interval.
    Atom,
    /// One factor per tree of the upper forest.
    ForestProduct(Vec<Decomposition>),
    /// A tree whose lowest vertex is marked.
    TwistedProduct(Box<Decomposition>, Box<Decomposition>),
    /// A tree whose lowest vertex is unmarked.
    SpecialVee(Box<Decomposition>, Box<Decomposition>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pair: MarkedTreePair,
    kind: DecompositionKind,
}

/// Unrolls the pair into its canonical decomposition tree.
pub fn decompose(pair: &MarkedTreePair) -> Decomposition {
    let kind = if pair.degree() == 0 {
        DecompositionKind::Atom
    } else if pair.upper().tree_count() > 1 {
        DecompositionKind::ForestProduct(pair.components().iter().map(decompose).collect())
    } else {
        // degree > 0 on a single tree, so the root is an inner vertex
        let (l, r, root_marked) = pair.split_root().unwrap();
        let (l, r) = (Box::new(decompose(&l)), Box::new(decompose(&r)));
        if root_marked {
            DecompositionKind::TwistedProduct(l, r)
        } else {
            DecompositionKind::SpecialVee(l, r)
        }
    };
    Decomposition {
        pair: pair.clone(),
        kind,
    }
}

impl Decomposition {
    pub fn pair(&self) -> &MarkedTreePair {
        &self.pair
    }

    pub fn kind(&self) -> &DecompositionKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.pair.degree()
    }

    pub fn children(&self) -> Vec<&Decomposition> {
        match &self.kind {
            DecompositionKind::Atom => Vec::new(),
            DecompositionKind::ForestProduct(fs) => fs.iter().collect(),
            DecompositionKind::TwistedProduct(l, r) | DecompositionKind::SpecialVee(l, r) => {
                alloc::vec![&**l, &**r]
            }
        }
    }

    pub fn special_vee_count(&self) -> usize {
        let own = matches!(self.kind, DecompositionKind::SpecialVee(..)) as usize;
        own + self
            .children()
            .iter()
            .map(|c| c.special_vee_count())
            .sum::<usize>()
    }

    /// `Z` by direct folding, without memoization.
    pub fn z(&self) -> BivariatePolynomial {
        match &self.kind {
            DecompositionKind::Atom => BivariatePolynomial::one(),
            DecompositionKind::ForestProduct(fs) => fs.iter().map(Decomposition::z).product(),
            DecompositionKind::TwistedProduct(l, r) => &l.z() * &r.z(),
            DecompositionKind::SpecialVee(l, r) => z_vee(&l.z(), &r.z()),
        }
    }

    /// `M` by direct folding, without memoization.
    pub fn m(&self) -> BivariatePolynomial {
        match &self.kind {
            DecompositionKind::Atom => BivariatePolynomial::one(),
            DecompositionKind::ForestProduct(fs) => fs.iter().map(Decomposition::m).product(),
            DecompositionKind::TwistedProduct(l, r) => &l.m() * &r.m(),
            DecompositionKind::SpecialVee(l, r) => m_vee(&l.m(), &r.m()),
        }
    }

    /// `χ` by expanding `χ = (y - (deg1+1)(deg2+1)) χ1 χ2` at every special node.
    pub fn chi(&self) -> UnivariatePolynomial {
        match &self.kind {
            DecompositionKind::Atom => UnivariatePolynomial::one(),
            DecompositionKind::ForestProduct(fs) => fs.iter().map(Decomposition::chi).product(),
            DecompositionKind::TwistedProduct(l, r) => &l.chi() * &r.chi(),
            DecompositionKind::SpecialVee(l, r) => {
                let root = BigInt::from((l.degree() + 1) * (r.degree() + 1));
                &(&UnivariatePolynomial::linear_root(root) * &l.chi()) * &r.chi()
            }
        }
    }

    /// One line per node, indented by depth.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        self.write_trace(&mut out, 0);
        out
    }

    fn write_trace(&self, out: &mut String, depth: usize) {
        let name = match self.kind {
            DecompositionKind::Atom => "atom",
            DecompositionKind::ForestProduct(_) => "forest-product",
            DecompositionKind::TwistedProduct(..) => "twisted-product",
            DecompositionKind::SpecialVee(..) => "special-vee",
        };
        let _ = write!(
            out,
            "{:indent$}{name} {} deg={}",
            "",
            self.pair.upper(),
            self.degree(),
            indent = 2 * depth
        );
        if !self.pair.marked().is_empty() {
            out.push_str(" marked=");
            for (i, v) in self.pair.marked().iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
        }
        out.push('\n');
        for c in self.children() {
            c.write_trace(out, depth + 1);
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.trace())
    }
}

/// `Z = xy Z1 Z2 + ∂x(x Z1) ∂x(x Z2) + x ∂y(y Z1) ∂y(y Z2)`.
pub fn z_vee(z1: &BivariatePolynomial, z2: &BivariatePolynomial) -> BivariatePolynomial {
    let first = (z1 * z2).times_x().times_y();
    let second = &z1.dx_times_x() * &z2.dx_times_x();
    let third = (&z1.dy_times_y() * &z2.dy_times_y()).times_x();
    &(&first + &second) + &third
}

/// `M = xy M1 M2 + (1 - x) ∂x(x M1) ∂x(x M2)`.
pub fn m_vee(m1: &BivariatePolynomial, m2: &BivariatePolynomial) -> BivariatePolynomial {
    let first = (m1 * m2).times_x().times_y();
    let d = &m1.dx_times_x() * &m2.dx_times_x();
    &(&first + &d) - &d.times_x()
}

/// Memoizing evaluator for `Z` and `M`, keyed by (tree, marked subset).
#[derive(Default)]
pub struct Engine {
    z_memo: BTreeMap<MarkedTreePair, BivariatePolynomial>,
    m_memo: BTreeMap<MarkedTreePair, BivariatePolynomial>,
}

#[derive(Clone, Copy)]
enum Which {
    Z,
    M,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn z(&mut self, pair: &MarkedTreePair) -> BivariatePolynomial {
        self.eval(pair, Which::Z)
    }

    pub fn m(&mut self, pair: &MarkedTreePair) -> BivariatePolynomial {
        self.eval(pair, Which::M)
    }

    pub fn cached(&self) -> usize {
        self.z_memo.len() + self.m_memo.len()
    }

    fn eval(&mut self, pair: &MarkedTreePair, which: Which) -> BivariatePolynomial {
        if pair.degree() == 0 {
            return BivariatePolynomial::one();
        }
        if pair.upper().tree_count() > 1 {
            return pair
                .components()
                .iter()
                .map(|c| self.eval(c, which))
                .product();
        }
        let memo = match which {
            Which::Z => &self.z_memo,
            Which::M => &self.m_memo,
        };
        if let Some(p) = memo.get(pair) {
            return p.clone();
        }
        let (l, r, root_marked) = pair.split_root().unwrap();
        let (p1, p2) = (self.eval(&l, which), self.eval(&r, which));
        let p = match (root_marked, which) {
            (true, _) => &p1 * &p2,
            (false, Which::Z) => z_vee(&p1, &p2),
            (false, Which::M) => m_vee(&p1, &p2),
        };
        let memo = match which {
            Which::Z => &mut self.z_memo,
            Which::M => &mut self.m_memo,
        };
        memo.insert(pair.clone(), p.clone());
        p
    }
}

pub fn z_fast(pair: &MarkedTreePair) -> BivariatePolynomial {
    Engine::new().z(pair)
}

pub fn m_fast(pair: &MarkedTreePair) -> BivariatePolynomial {
    Engine::new().m(pair)
}

/// Exponents of the unmarked vertices of the pair.
pub fn exponents(pair: &MarkedTreePair) -> ExponentMultiset {
    let mut out = Vec::new();
    for t in pair.upper().trees() {
        collect_exponents(t, pair.marked(), &mut out);
    }
    ExponentMultiset::new(out)
}

/// Returns the leaf set of `t` and `#leaves - #marked` over `t`.
fn collect_exponents(
    t: &Tree,
    marked: &BTreeSet<VertexId>,
    out: &mut Vec<u64>,
) -> (BTreeSet<Label>, u64) {
    let Some((t1, t2)) = t.children() else {
        // a leaf child: one leaf, nothing marked
        return (BTreeSet::from([t.as_leaf().unwrap().clone()]), 1);
    };
    let (mut leaves, d1) = collect_exponents(t1, marked, out);
    let (right, d2) = collect_exponents(t2, marked, out);
    leaves.extend(right);
    let v = VertexId::from_leaves(leaves);
    let d = if marked.contains(&v) {
        d1 + d2 - 1
    } else {
        out.push(d1 * d2);
        d1 + d2
    };
    (v.leaves().clone(), d)
}

/// `∏ (y - e)` over the exponents.
pub fn chi_fast(pair: &MarkedTreePair) -> UnivariatePolynomial {
    exponents(pair).polynomial()
}

/// `χ` through the decomposition, independent of the exponent rule.
pub fn chi_recursive(pair: &MarkedTreePair) -> UnivariatePolynomial {
    decompose(pair).chi()
}

/// `∏ (-e)` over the exponents.
pub fn mobius_fast(pair: &MarkedTreePair) -> BigInt {
    exponents(pair)
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, &e| acc * -BigInt::from(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::Forest;
    use crate::label::labels;

    fn f(s: &str) -> Forest {
        s.parse().unwrap()
    }

    fn from_e(top: &str) -> MarkedTreePair {
        MarkedTreePair::new(f(top), BTreeSet::new()).unwrap()
    }

    fn all_marked(top: &str) -> MarkedTreePair {
        let g = f(top);
        let v = g.inner_vertices();
        MarkedTreePair::new(g, v).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bi(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
        let mut p = BivariatePolynomial::zero();
        for &(i, j, c) in terms {
            p.add_monomial(i, j, big(c));
        }
        p
    }

    #[test]
    fn fully_marked_is_an_atom() {
        let d = decompose(&all_marked("((a,b),(c,d))"));
        assert_eq!(d.kind(), &DecompositionKind::Atom);
        assert!(exponents(&all_marked("((a,b),(c,d))")).is_empty());
        assert_eq!(mobius_fast(&all_marked("((a,b),c)")), big(1));
    }

    #[test]
    fn root_unmarked_children_marked() {
        let g = f("((a,b),(c,d))");
        let marked = g
            .inner_vertices()
            .into_iter()
            .filter(|v| v.len() == 2)
            .collect();
        let d = decompose(&MarkedTreePair::new(g, marked).unwrap());
        match d.kind() {
            DecompositionKind::SpecialVee(l, r) => {
                assert_eq!(l.kind(), &DecompositionKind::Atom);
                assert_eq!(r.kind(), &DecompositionKind::Atom);
            }
            k => panic!("unexpected {k:?}"),
        }
    }

    #[test]
    fn comb_on_three_unrolls() {
        let d = decompose(&from_e("((a,b),c)"));
        let DecompositionKind::SpecialVee(l, r) = d.kind() else {
            panic!("expected special vee")
        };
        assert!(matches!(l.kind(), DecompositionKind::SpecialVee(..)));
        assert_eq!(r.kind(), &DecompositionKind::Atom);
        assert_eq!(d.special_vee_count(), 2);
        assert_eq!(
            d.trace(),
            "special-vee ((a,b),c) deg=2\n  special-vee (a,b) deg=1\n    atom a deg=0\n    atom b deg=0\n  atom c deg=0\n"
        );
    }

    #[test]
    fn degree_one_polynomials() {
        let p = from_e("(a,b)");
        assert_eq!(z_fast(&p), bi(&[(1, 1, 1), (1, 0, 1), (0, 0, 1)]));
        assert_eq!(m_fast(&p), bi(&[(1, 1, 1), (1, 0, -1), (0, 0, 1)]));
        assert_eq!(z_fast(&all_marked("(a,b)")), BivariatePolynomial::one());
    }

    #[test]
    fn comb_on_three_m_polynomial() {
        let m = m_fast(&from_e("((a,b),c)"));
        assert_eq!(
            m,
            bi(&[
                (2, 2, 1),
                (2, 1, -3),
                (2, 0, 2),
                (1, 1, 3),
                (1, 0, -3),
                (0, 0, 1)
            ])
        );
        assert_eq!(m.substitute_y(&big(1)), UnivariatePolynomial::one());
    }

    #[test]
    fn exponent_examples() {
        let ls = labels(&["a", "b", "c", "d", "e", "f"]).unwrap();
        for n in 2..=6 {
            let comb = Forest::from_tree(Tree::comb(&ls[..n]).unwrap());
            let pair = MarkedTreePair::new(comb, BTreeSet::new()).unwrap();
            let want: Vec<u64> = (1..n as u64).collect();
            assert_eq!(exponents(&pair).as_slice(), want.as_slice());
        }
        assert_eq!(exponents(&from_e("((a,b),(c,d))")).as_slice(), &[1, 1, 4]);
    }

    #[test]
    fn chi_and_mobius_examples() {
        let chi = chi_fast(&from_e("(((a,b),c),d)"));
        assert_eq!(
            chi,
            UnivariatePolynomial::from_roots([big(1), big(2), big(3)])
        );
        let chi = chi_fast(&from_e("((a,b),(c,d))"));
        assert_eq!(
            chi,
            UnivariatePolynomial::from_roots([big(1), big(1), big(4)])
        );
        assert_eq!(mobius_fast(&from_e("((a,b),(c,d))")), big(-4));
        assert_eq!(mobius_fast(&from_e("(((a,b),c),d)")), big(-6));
        assert_eq!(chi_fast(&all_marked("(a,b)")), UnivariatePolynomial::one());
        assert_eq!(
            exponents(&from_e("((a,b),(c,d))")).factored('y'),
            "(y - 1)^2*(y - 4)"
        );
    }

    #[test]
    fn memoized_and_folded_paths_agree() {
        let mut engine = Engine::new();
        for top in ["((a,b),(c,d))|e", "(((a,b),c),(d,e))", "((a,(b,c)),(d,e))"] {
            let g = f(top);
            for v in g.inner_vertices() {
                let pair = MarkedTreePair::new(g.clone(), BTreeSet::from([v])).unwrap();
                let d = decompose(&pair);
                assert_eq!(engine.z(&pair), d.z());
                assert_eq!(engine.m(&pair), d.m());
                assert_eq!(chi_fast(&pair), d.chi());
            }
        }
        assert!(engine.cached() > 0);
    }
}
