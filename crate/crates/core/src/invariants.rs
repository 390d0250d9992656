//! Brute-force invariants of finite ranked posets: Möbius function,
//! `M`-, `Z`-, characteristic and cardinal polynomials, plus the rank and
//! semimodularity checks. Everything here works on the materialized order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::IntervalPoset;
use crate::poly::{BivariatePolynomial, UnivariatePolynomial};
use crate::poset::Poset;

/// `μ(a, b)` for every `b`, `None` where `a ≰ b`.
pub fn mobius_row(p: &Poset, a: usize) -> Vec<Option<BigInt>> {
    let mut row: Vec<Option<BigInt>> = vec![None; p.len()];
    for b in p.linear_extension() {
        if !p.leq(a, b) {
            continue;
        }
        if a == b {
            row[b] = Some(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for (c, mu) in row.iter().enumerate() {
            if let Some(mu) = mu {
                if c != b && p.leq(c, b) {
                    sum += mu;
                }
            }
        }
        row[b] = Some(-sum);
    }
    row
}

pub fn mobius(p: &Poset, a: usize, b: usize) -> Result<BigInt> {
    if a >= p.len() || b >= p.len() {
        return Err(Error::IndexOutOfRange(a.max(b)));
    }
    if !p.leq(a, b) {
        return Err(Error::NotComparable);
    }
    Ok(mobius_row(p, a).swap_remove(b).unwrap())
}

fn bottom(p: &Poset) -> usize {
    p.bottom().expect("ranked poset with a bottom element")
}

/// `μ(0̂, 1̂)`.
pub fn mobius_number(p: &Poset) -> BigInt {
    let top = p.top().expect("ranked poset with a top element");
    mobius_row(p, bottom(p)).swap_remove(top).unwrap()
}

/// `Σ_{a ≤ b} μ(a,b) x^crk(a) y^crk(b)`.
pub fn m_polynomial(p: &Poset) -> BivariatePolynomial {
    let mut m = BivariatePolynomial::zero();
    for a in 0..p.len() {
        for (b, mu) in mobius_row(p, a).into_iter().enumerate() {
            if let Some(mu) = mu {
                m.add_monomial(p.corank(a) as u32, p.corank(b) as u32, mu);
            }
        }
    }
    m
}

/// `Σ_{a ≤ b} x^crk(a) y^crk(b)`.
pub fn z_polynomial(p: &Poset) -> BivariatePolynomial {
    let mut z = BivariatePolynomial::zero();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.leq(a, b) {
                z.add_monomial(p.corank(a) as u32, p.corank(b) as u32, BigInt::one());
            }
        }
    }
    z
}

/// `Σ_b μ(0̂, b) y^crk(b)`.
pub fn characteristic_polynomial(p: &Poset) -> UnivariatePolynomial {
    let mut chi = UnivariatePolynomial::zero();
    for (b, mu) in mobius_row(p, bottom(p)).into_iter().enumerate() {
        if let Some(mu) = mu {
            chi.add_monomial(p.corank(b) as u32, mu);
        }
    }
    chi
}

/// `Σ_a x^crk(a)`.
pub fn cardinal_polynomial(p: &Poset) -> UnivariatePolynomial {
    let mut card = UnivariatePolynomial::zero();
    for a in 0..p.len() {
        card.add_monomial(p.corank(a) as u32, BigInt::one());
    }
    card
}

/// Length shared by all maximal chains of the cover graph, starting from
/// the bottom, or `None` when two maximal chains differ in length.
pub fn chain_length(p: &Poset) -> Option<usize> {
    let start = p.bottom()?;
    // shortest and longest cover paths from the bottom
    let mut shortest = vec![usize::MAX; p.len()];
    let mut longest = vec![0usize; p.len()];
    shortest[start] = 0;
    let order = topological_by_covers(p)?;
    for &a in &order {
        if shortest[a] == usize::MAX {
            continue;
        }
        for &b in p.upper_covers(a) {
            shortest[b] = shortest[b].min(shortest[a] + 1);
            longest[b] = longest[b].max(longest[a] + 1);
        }
    }
    let mut length = None;
    for a in 0..p.len() {
        if shortest[a] == usize::MAX {
            return None;
        }
        if p.upper_covers(a).is_empty() {
            if shortest[a] != longest[a] || length.is_some_and(|l| l != shortest[a]) {
                return None;
            }
            length = Some(shortest[a]);
        }
    }
    length
}

fn topological_by_covers(p: &Poset) -> Option<Vec<usize>> {
    let mut indegree: Vec<usize> = (0..p.len()).map(|a| p.lower_covers(a).len()).collect();
    let mut ready: Vec<usize> = (0..p.len()).filter(|&a| indegree[a] == 0).collect();
    let mut out = Vec::with_capacity(p.len());
    while let Some(a) = ready.pop() {
        out.push(a);
        for &b in p.upper_covers(a) {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    (out.len() == p.len()).then_some(out)
}

/// All maximal chains from the bottom have the same length.
pub fn is_ranked(p: &Poset) -> bool {
    chain_length(p).is_some()
}

/// All maximal chains of the interval have length `|V(upper)| - |V(lower)|`.
pub fn check_ranked(interval: &IntervalPoset) -> bool {
    check_ranked_with(interval.poset(), interval.degree())
}

pub fn check_ranked_with(p: &Poset, expected: usize) -> bool {
    chain_length(p) == Some(expected)
}

/// Greatest common lower bound of `x` and `y`, if it exists.
pub fn meet(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..p.len())
        .filter(|&z| p.leq(z, x) && p.leq(z, y))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| p.leq(z, m)))
}

/// Least common upper bound of `x` and `y`, if it exists.
pub fn join(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..p.len())
        .filter(|&z| p.leq(x, z) && p.leq(y, z))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&j| upper.iter().all(|&z| p.leq(j, z)))
}

/// A pair `(x, y)` covering their meet whose join does not cover both.
/// Pairs without a meet or without a join are skipped.
pub fn semimodular_violation(p: &Poset) -> Option<(usize, usize)> {
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            let Some(m) = meet(p, x, y) else { continue };
            if !(p.is_cover(m, x) && p.is_cover(m, y)) {
                continue;
            }
            let Some(j) = join(p, x, y) else { continue };
            if !(p.is_cover(x, j) && p.is_cover(y, j)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn check_semimodular(p: &Poset) -> bool {
    semimodular_violation(p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::Forest;
    use crate::interval::interval;
    use crate::label::labels;
    use crate::tree::Tree;

    fn f(s: &str) -> Forest {
        s.parse().unwrap()
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

    fn e_to(top: &str) -> IntervalPoset {
        let upper = f(top);
        let ls: Vec<_> = upper.labels().into_iter().collect();
        interval(&Forest::discrete(&ls).unwrap(), &upper).unwrap()
    }

    #[test]
    fn mobius_basics() {
        let p = interval(&f("(a,b)|c"), &f("((a,b),c)")).unwrap();
        assert_eq!(mobius(p.poset(), 0, 0).unwrap(), big(1));
        assert_eq!(mobius(p.poset(), 0, 1).unwrap(), big(-1));
        assert_eq!(mobius(p.poset(), 1, 0), Err(Error::NotComparable));
        assert_eq!(mobius_number(e_to("(((a,b),c),d)").poset()), big(-6));
    }

    #[test]
    fn polynomials_of_degree_one() {
        let p = interval(&f("(a,b)|c"), &f("((a,b),c)")).unwrap();
        assert_eq!(
            m_polynomial(p.poset()),
            bi(&[(1, 1, 1), (1, 0, -1), (0, 0, 1)])
        );
        assert_eq!(
            z_polynomial(p.poset()),
            bi(&[(1, 1, 1), (1, 0, 1), (0, 0, 1)])
        );
    }

    #[test]
    fn single_element() {
        let p = interval(&f("(a,b)"), &f("(a,b)")).unwrap();
        assert_eq!(m_polynomial(p.poset()), BivariatePolynomial::one());
        assert_eq!(z_polynomial(p.poset()), BivariatePolynomial::one());
        assert_eq!(
            characteristic_polynomial(p.poset()),
            UnivariatePolynomial::one()
        );
        assert_eq!(cardinal_polynomial(p.poset()), UnivariatePolynomial::one());
    }

    #[test]
    fn comb_on_three() {
        let p = e_to("((a,b),c)");
        let m = bi(&[
            (2, 2, 1),
            (2, 1, -3),
            (2, 0, 2),
            (1, 1, 3),
            (1, 0, -3),
            (0, 0, 1),
        ]);
        assert_eq!(m_polynomial(p.poset()), m);
        let chi = characteristic_polynomial(p.poset());
        assert_eq!(chi, UnivariatePolynomial::from_roots([big(1), big(2)]));
        let mut card = UnivariatePolynomial::zero();
        card.add_monomial(2, big(1));
        card.add_monomial(1, big(3));
        card.add_monomial(0, big(1));
        assert_eq!(cardinal_polynomial(p.poset()), card);
    }

    #[test]
    fn balanced_tree_from_e() {
        let p = e_to("((a,b),(c,d))");
        let chi = characteristic_polynomial(p.poset());
        assert_eq!(
            chi,
            UnivariatePolynomial::from_roots([big(1), big(1), big(4)])
        );
        assert!(chi.is_monic());
    }

    #[test]
    fn cardinal_counts_elements() {
        let p = e_to("((a,b),(c,d))");
        let card = cardinal_polynomial(p.poset());
        assert_eq!(card.eval(&big(1)), big(p.len() as i64));
        for k in 0..=3u32 {
            let n = p
                .elements()
                .iter()
                .filter(|h| h.tree_count() - 1 == k as usize)
                .count();
            assert_eq!(card.coefficient(k), big(n as i64));
        }
    }

    #[test]
    fn ranked_examples() {
        let p = interval(&f("(a,b)|c"), &f("((a,b),c)")).unwrap();
        assert!(check_ranked(&p));
        let p = e_to("((a,b),(c,d))");
        assert!(check_ranked(&p));
    }

    #[test]
    fn ranked_rejects_rank_skipping_cover() {
        let p = e_to("(((a,b),c),d)");
        let q = p.poset();
        // add a cover from the bottom straight to the top
        let mut covers = q.covers().to_vec();
        covers.push((0, q.len() - 1));
        let broken =
            Poset::with_covers(q.coranks().to_vec(), q.order_matrix().to_vec(), covers).unwrap();
        assert!(!check_ranked_with(&broken, p.degree()));
        assert!(!is_ranked(&broken));
    }

    #[test]
    fn semimodularity_examples() {
        let chain = interval(&f("(a,b)|c"), &f("((a,b),c)")).unwrap();
        assert!(check_semimodular(chain.poset()));
        let ls = labels(&["a", "b", "c", "d"]).unwrap();
        for n in 3..=4 {
            let comb = Tree::comb(&ls[..n]).unwrap();
            let p = interval(&Forest::discrete(&ls[..n]).unwrap(), &comb.into()).unwrap();
            assert!(check_semimodular(p.poset()));
        }
    }

    #[test]
    fn mobius_rows_sum_to_zero() {
        let p = e_to("((a,b),(c,d))");
        let q = p.poset();
        for a in 0..q.len() {
            for b in 0..q.len() {
                if q.lt(a, b) {
                    let row = mobius_row(q, a);
                    let s: BigInt = (0..q.len())
                        .filter(|&c| q.leq(c, b))
                        .filter_map(|c| row[c].clone())
                        .sum();
                    assert_eq!(s, big(0));
                }
            }
        }
    }
}
