//! Sparse polynomials with arbitrary-precision integer coefficients.
//!
//! [`BivariatePolynomial`] carries the `M`- and `Z`-polynomials in `x`
//! (corank of the lower element) and `y` (corank of the upper element);
//! [`UnivariatePolynomial`] carries characteristic and cardinal polynomials.
//! Zero coefficients are never stored, so derived equality is equality of
//! polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePolynomial {
    terms: BTreeMap<u32, BigInt>,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(x_deg: u32, y_deg: u32, c: BigInt) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, (x_deg, y_deg), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x_deg: u32, y_deg: u32) -> BigInt {
        self.terms.get(&(x_deg, y_deg)).cloned().unwrap_or_default()
    }

    /// Adds `c·x^i·y^j` in place.
    pub fn add_monomial(&mut self, x_deg: u32, y_deg: u32, c: BigInt) {
        add_term(&mut self.terms, (x_deg, y_deg), c);
    }

    /// `(x-degree, y-degree, coefficient)` in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn times_x(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + 1, j), c.clone()))
                .collect(),
        }
    }

    pub fn times_y(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j + 1), c.clone()))
                .collect(),
        }
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                add_term(&mut out.terms, (i - 1, j), c * BigInt::from(i));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                add_term(&mut out.terms, (i, j - 1), c * BigInt::from(j));
            }
        }
        out
    }

    /// `∂x(x·P)`.
    pub fn dx_times_x(&self) -> Self {
        self.times_x().partial_x()
    }

    /// `∂y(y·P)`.
    pub fn dy_times_y(&self) -> Self {
        self.times_y().partial_y()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
            })
            .sum()
    }

    /// The polynomial in `x` obtained by setting `y` to `value`.
    pub fn substitute_y(&self, value: &BigInt) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            add_term(
                &mut out.terms,
                i,
                c * num_traits::pow(value.clone(), j as usize),
            );
        }
        out
    }

    /// The polynomial in `y` obtained by setting `x` to `value`.
    pub fn substitute_x(&self, value: &BigInt) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            add_term(
                &mut out.terms,
                j,
                c * num_traits::pow(value.clone(), i as usize),
            );
        }
        out
    }

    /// Coefficient of `x^i` as a polynomial in `y`.
    pub fn x_coefficient(&self, x_deg: u32) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            if i == x_deg {
                add_term(&mut out.terms, j, c.clone());
            }
        }
        out
    }
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(deg: u32, c: BigInt) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, deg, c);
        p
    }

    /// `y - root`.
    pub fn linear_root(root: BigInt) -> Self {
        let mut p = Self::monomial(1, BigInt::one());
        add_term(&mut p.terms, 0, -root);
        p
    }

    /// `∏ (y - r)` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = BigInt>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg: u32) -> BigInt {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }

    pub fn add_monomial(&mut self, deg: u32, c: BigInt) {
        add_term(&mut self.terms, deg, c);
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_one()
    }

    /// `(degree, coefficient)` in ascending degree order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        // Horner over the dense range.
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for d in (0..=deg).rev() {
            acc = acc * at + self.coefficient(d);
        }
        acc
    }

    /// Synthetic division by `(y - root)`: returns quotient and remainder.
    pub fn div_linear(&self, root: &BigInt) -> (UnivariatePolynomial, BigInt) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), BigInt::zero());
        };
        let mut quotient = Self::zero();
        let mut carry = BigInt::zero();
        for d in (0..=deg).rev() {
            carry = carry * root + self.coefficient(d);
            if d > 0 {
                add_term(&mut quotient.terms, d - 1, carry.clone());
            }
        }
        (quotient, carry)
    }

    pub fn display(&self, var: char) -> UnivariateDisplay<'_> {
        UnivariateDisplay { poly: self, var }
    }
}

fn write_term(out: &mut String, first: bool, c: &BigInt, monomial: &str) {
    let negative = c.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let abs = c.abs();
    if monomial.is_empty() {
        let _ = write!(out, "{abs}");
    } else if abs.is_one() {
        out.push_str(monomial);
    } else {
        let _ = write!(out, "{abs}*{monomial}");
    }
}

fn power(var: char, deg: u32) -> String {
    match deg {
        0 => String::new(),
        1 => var.into(),
        d => alloc::format!("{var}^{d}"),
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Terms in descending lexicographic order, e.g. `x^2*y - 3*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let mono = match (power('x', i), power('y', j)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => alloc::format!("{a}*{b}"),
            };
            write_term(&mut out, k == 0, c, &mono);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct UnivariateDisplay<'a> {
    poly: &'a UnivariatePolynomial,
    var: char,
}

impl fmt::Display for UnivariateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (&d, c)) in self.poly.terms.iter().rev().enumerate() {
            write_term(&mut out, k == 0, c, &power(self.var, d));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display('t'), f)
    }
}

macro_rules! impl_ring_ops {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let mut out = self.clone();
                for (k, c) in &rhs.terms {
                    add_term(&mut out.terms, *k, c.clone());
                }
                out
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let mut out = self.clone();
                for (k, c) in &rhs.terms {
                    add_term(&mut out.terms, *k, -c);
                }
                out
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
                }
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl core::iter::Product for $ty {
            fn product<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::one(), |a, b| &a * &b)
            }
        }
    };
}

impl_ring_ops!(BivariatePolynomial);
impl_ring_ops!(UnivariatePolynomial);

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                add_term(&mut out.terms, (i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                add_term(&mut out.terms, d1 + d2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// `1 - x + xy`
    fn sample() -> BivariatePolynomial {
        let mut p = BivariatePolynomial::one();
        p.add_monomial(1, 0, big(-1));
        p.add_monomial(1, 1, big(1));
        p
    }

    #[test]
    fn dx_times_x_examples() {
        assert_eq!(
            BivariatePolynomial::one().dx_times_x(),
            BivariatePolynomial::one()
        );
        // 1 - 2x + 2xy
        let mut want = BivariatePolynomial::one();
        want.add_monomial(1, 0, big(-2));
        want.add_monomial(1, 1, big(2));
        assert_eq!(sample().dx_times_x(), want);
    }

    #[test]
    fn dx_times_x_matches_difference_quotient() {
        // centered differences are exact for polynomials of x-degree <= 2
        let p = sample();
        let xp = p.times_x();
        for x in -3..=3 {
            for y in -3..=3 {
                let (xb, yb) = (big(x), big(y));
                let fd = (xp.eval(&big(x + 1), &yb) - xp.eval(&big(x - 1), &yb)) / big(2);
                assert_eq!(p.dx_times_x().eval(&xb, &yb), fd);
            }
        }
    }

    #[test]
    fn evaluation_and_substitution() {
        assert_eq!(sample().eval(&big(1), &big(1)), big(1));
        assert_eq!(sample().substitute_y(&big(1)), UnivariatePolynomial::one());
        assert_eq!(sample().to_string(), "x*y - x + 1");
    }

    #[test]
    fn display_forms() {
        let mut p = BivariatePolynomial::zero();
        p.add_monomial(2, 2, big(1));
        p.add_monomial(2, 1, big(-3));
        p.add_monomial(0, 0, big(1));
        assert_eq!(p.to_string(), "x^2*y^2 - 3*x^2*y + 1");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
        let chi = UnivariatePolynomial::from_roots([big(1), big(2)]);
        assert_eq!(chi.display('y').to_string(), "y^2 - 3*y + 2");
        assert_eq!(
            (-&UnivariatePolynomial::one()).display('y').to_string(),
            "-1"
        );
    }

    #[test]
    fn synthetic_division() {
        let chi = UnivariatePolynomial::from_roots([big(1), big(1), big(4)]);
        let (q, r) = chi.div_linear(&big(4));
        assert_eq!(r, big(0));
        assert_eq!(q, UnivariatePolynomial::from_roots([big(1), big(1)]));
        let (_, r) = chi.div_linear(&big(2));
        assert_eq!(r, chi.eval(&big(2)));
        assert!(chi.is_monic());
        assert_eq!(chi.degree(), Some(3));
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = &sample() - &sample();
        assert!(p.is_zero());
        assert_eq!(p, BivariatePolynomial::zero());
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePolynomial> {
        proptest::collection::vec((0u32..4, 0u32..4, -20i64..20), 0..6).prop_map(|ts| {
            let mut p = BivariatePolynomial::zero();
            for (i, j, c) in ts {
                p.add_monomial(i, j, big(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_ops_agree_with_evaluation(a in arb_poly(), b in arb_poly(), x in -4i64..4, y in -4i64..4) {
            let (x, y) = (big(x), big(y));
            prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
            prop_assert_eq!((&a + &b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
            prop_assert_eq!((&a - &b).eval(&x, &y), a.eval(&x, &y) - b.eval(&x, &y));
            prop_assert_eq!(a.substitute_y(&y).eval(&x), a.eval(&x, &y));
            prop_assert_eq!(a.substitute_x(&x).eval(&y), a.eval(&x, &y));
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).partial_x();
            let rhs = &(&a.partial_x() * &b) + &(&a * &b.partial_x());
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a * &b).partial_y();
            let rhs = &(&a.partial_y() * &b) + &(&a * &b.partial_y());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
