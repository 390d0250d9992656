//! The verification suite: every property the library promises, checked
//! exhaustively on small label sets and by seeded sampling above that.

use std::collections::BTreeMap;
use std::fmt;

use forest_poset::engine::{chi_recursive, chi_fast, exponents, m_fast, mobius_fast, z_fast};
use forest_poset::forest::enumerate_forests;
use forest_poset::interval::interval;
use forest_poset::invariants::{
    characteristic_polynomial, check_ranked, m_polynomial, mobius_number, semimodular_violation,
    z_polynomial,
};
use forest_poset::order::{leq, lower_set, marked_vertices};
use forest_poset::partition::{enumerate_partitions, partition_char_poly};
use forest_poset::partitive::{as_partitive, partitive_isomorphic, rebuild};
use forest_poset::tree::enumerate_trees;
use forest_poset::{labels, Forest, Label, MarkedTreePair, Tree, UnivariatePolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const MAX_LISTED_FAILURES: usize = 10;

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of individual cases examined.
    pub checked: usize,
    pub detail: String,
    /// The first few failing cases, with intervals in forest text.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            checked: 0,
            detail: String::new(),
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn fail(&mut self, message: String) {
        self.passed = false;
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(message);
        }
    }

    fn expect(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(message());
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} ({} cases)",
            self.name, self.detail, self.checked
        )?;
        for failure in &self.failures {
            write!(f, "\n    {failure}")?;
        }
        if self.failure_count > self.failures.len() {
            write!(
                f,
                "\n    ... {} more",
                self.failure_count - self.failures.len()
            )?;
        }
        Ok(())
    }
}

/// Seeded sampling at one label-set size.
#[derive(Clone, Copy, Debug)]
pub struct Sample {
    pub labels: usize,
    pub count: usize,
    pub seed: u64,
}

/// Labels `a`, `b`, ... (then `l26`, ... past `z`).
pub fn ground(n: usize) -> Vec<Label> {
    let names: Vec<String> = (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("l{i}")
            }
        })
        .collect();
    labels(&names).expect("distinct labels")
}

pub fn forests(n: usize) -> Vec<Forest> {
    enumerate_forests(&ground(n)).expect("valid labels")
}

fn bracket(lower: &Forest, upper: &Forest) -> String {
    format!("[{lower}, {upper}]")
}

/// Every interval on `1..=max` labels, as (lower, upper) pairs.
fn all_intervals(max: usize) -> Vec<(Forest, Forest)> {
    let mut out = Vec::new();
    for n in 1..=max {
        for upper in forests(n) {
            for lower in lower_set(&upper) {
                out.push((lower, upper.clone()));
            }
        }
    }
    out
}

/// `count` intervals on `labels` labels: a uniform upper forest, then a
/// uniform element of its lower set.
fn sampled_intervals(sample: Sample) -> Vec<(Forest, Forest)> {
    let uppers = forests(sample.labels);
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    (0..sample.count)
        .map(|_| {
            let upper = uppers.choose(&mut rng).unwrap().clone();
            let lower = lower_set(&upper).choose(&mut rng).unwrap().clone();
            (lower, upper)
        })
        .collect()
}

fn double_factorial(k: u64) -> u128 {
    (1..=k).rev().step_by(2).map(u128::from).product()
}

fn tree_count(n: usize) -> u128 {
    if n <= 1 {
        1
    } else {
        double_factorial(2 * n as u64 - 3)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Forests counted as a sum over set partitions of products of tree counts,
/// by conditioning on the block holding the first label.
fn forest_count(n: usize) -> u128 {
    let mut f = vec![1u128; n + 1];
    for m in 1..=n {
        f[m] = (1..=m)
            .map(|k| binomial(m - 1, k - 1) * tree_count(k) * f[m - k])
            .sum();
    }
    f[n]
}

/// Bell numbers by the Bell triangle.
fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 1..n.max(1) {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

/// Enumeration sizes against closed-form or recurrence counts.
pub fn counting(tree_max: usize, forest_max: usize, bell_max: usize) -> Check {
    let mut check = Check::new("counting");
    for n in 1..=tree_max {
        let got = enumerate_trees(&ground(n)).unwrap().len() as u128;
        check.expect(got == tree_count(n), || {
            format!("{got} trees on {n} labels, expected {}", tree_count(n))
        });
    }
    for n in 1..=forest_max {
        let got = forests(n).len() as u128;
        check.expect(got == forest_count(n), || {
            format!("{got} forests on {n} labels, expected {}", forest_count(n))
        });
    }
    for n in 1..=bell_max {
        let g = ground(n);
        let comb = Forest::from_tree(Tree::comb(&g).unwrap());
        let size = interval(&Forest::discrete(&g).unwrap(), &comb)
            .unwrap()
            .len() as u128;
        let parts = enumerate_partitions(&g).unwrap().len() as u128;
        check.expect(size == bell(n) && parts == bell(n), || {
            format!(
                "[E, {comb}] has {size} elements, {parts} partitions, Bell = {}",
                bell(n)
            )
        });
    }
    check.detail = format!(
        "trees = (2n-3)!! for n <= {tree_max}, forests = partition sum for n <= {forest_max}, \
         |[E, comb]| = Bell(n) for n <= {bell_max}"
    );
    check
}

/// Partial order axioms and strict growth of inner vertices, exhaustively.
pub fn order_axioms(max: usize) -> Check {
    let mut check = Check::new("order-axioms");
    for n in 1..=max {
        let all = forests(n);
        let k = all.len();
        let rel: Vec<bool> = all
            .iter()
            .flat_map(|a| all.iter().map(|b| leq(a, b).unwrap()).collect::<Vec<_>>())
            .collect();
        let r = |a: usize, b: usize| rel[a * k + b];
        for a in 0..k {
            check.expect(r(a, a), || format!("{} is not below itself", all[a]));
            for b in 0..k {
                if a == b || !r(a, b) {
                    continue;
                }
                check.expect(!r(b, a), || {
                    format!("{} and {} are mutually below", all[a], all[b])
                });
                check.expect(all[a].inner_count() < all[b].inner_count(), || {
                    format!("{} < {} without more inner vertices", all[a], all[b])
                });
                for c in 0..k {
                    if r(b, c) {
                        check.expect(r(a, c), || {
                            format!(
                                "{} <= {} <= {} but not {} <= {}",
                                all[a], all[b], all[c], all[a], all[c]
                            )
                        });
                    }
                }
            }
        }
    }
    check.detail =
        format!("reflexive, antisymmetric, transitive; F < G implies |V(F)| < |V(G)|; n <= {max}");
    check
}

/// `chi` of `[E, comb]` is `(y-1)...(y-n+1)`.
pub fn comb_factorization(max: usize, brute_max: usize) -> Check {
    let mut check = Check::new("comb-factorization");
    for n in 2..=max {
        let g = ground(n);
        let comb = Forest::from_tree(Tree::comb(&g).unwrap());
        let want = partition_char_poly(n).unwrap();
        let pair = MarkedTreePair::new(comb.clone(), Default::default()).unwrap();
        let fast = chi_fast(&pair);
        check.expect(fast == want, || {
            format!(
                "[E, {comb}]: fast chi = {}, expected {}",
                fast.display('y'),
                want.display('y')
            )
        });
        if n <= brute_max {
            let brute = characteristic_polynomial(
                interval(&Forest::discrete(&g).unwrap(), &comb)
                    .unwrap()
                    .poset(),
            );
            check.expect(brute == want, || {
                format!("[E, {comb}]: brute chi = {}", brute.display('y'))
            });
        }
    }
    check.detail = format!(
        "chi(E, comb_n) = (y-1)...(y-n+1) for 2 <= n <= {max}, brute cross-check n <= {brute_max}"
    );
    check
}

/// Checks that are computed together over the same set of intervals.
#[derive(Clone, Debug)]
pub struct Sweep {
    /// Fast and brute-force `M`, `Z`, `chi` and Möbius number coincide.
    pub equivalence: Check,
    /// `M(x, 1) = 1`.
    pub m_at_one: Check,
    /// The roots of `chi` are the exponents.
    pub chi_roots: Check,
    /// Every maximal chain has length `|V(upper)| - |V(lower)|`.
    pub ranked: Check,
}

impl Sweep {
    pub fn checks(self) -> [Check; 4] {
        [self.equivalence, self.m_at_one, self.chi_roots, self.ranked]
    }
}

fn splits_over(chi: &UnivariatePolynomial, roots: &[u64]) -> bool {
    let mut rest = chi.clone();
    for &r in roots {
        let (q, rem) = rest.div_linear(&BigInt::from(r));
        if !rem.is_zero() {
            return false;
        }
        rest = q;
    }
    rest == UnivariatePolynomial::one()
}

/// Brute force against the recursion engine on every interval with at most
/// `max` labels, plus an optional sample.
pub fn sweep(max: usize, sample: Option<Sample>) -> Sweep {
    let mut cases = all_intervals(max);
    let mut scope = format!("all intervals, n <= {max}");
    if let Some(s) = sample {
        cases.extend(sampled_intervals(s));
        scope.push_str(&format!(
            ", {} sampled at n = {} (seed {})",
            s.count, s.labels, s.seed
        ));
    }
    let mut sw = Sweep {
        equivalence: Check::new("oracle-equivalence"),
        m_at_one: Check::new("m-at-one"),
        chi_roots: Check::new("chi-roots"),
        ranked: Check::new("ranked"),
    };
    let one = BigInt::one();
    for (lower, upper) in &cases {
        let at = bracket(lower, upper);
        let iv = interval(lower, upper).unwrap();
        let p = iv.poset();
        let pair = MarkedTreePair::from_interval(lower, upper).unwrap();
        let m = m_polynomial(p);
        let chi = characteristic_polynomial(p);
        let fast_chi = chi_fast(&pair);
        let mismatches: Vec<&str> = [
            ("M", m_fast(&pair) == m),
            ("Z", z_fast(&pair) == z_polynomial(p)),
            ("chi", fast_chi == chi),
            ("chi (recursive)", chi_recursive(&pair) == chi),
            ("mobius", mobius_fast(&pair) == mobius_number(p)),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
        sw.equivalence.expect(mismatches.is_empty(), || {
            format!("{at}: {} differ", mismatches.join(", "))
        });
        let m1 = m.substitute_y(&one);
        sw.m_at_one.expect(m1 == UnivariatePolynomial::one(), || {
            format!("{at}: M(x, 1) = {}", m1.display('x'))
        });
        let ex = exponents(&pair);
        let positive = ex.as_slice().iter().all(|&e| e >= 1);
        sw.chi_roots
            .expect(positive && splits_over(&chi, ex.as_slice()), || {
                format!(
                    "{at}: chi = {}, exponents {:?}",
                    chi.display('y'),
                    ex.as_slice()
                )
            });
        sw.ranked.expect(check_ranked(&iv), || {
            format!(
                "{at}: maximal chains do not all have length {}",
                iv.degree()
            )
        });
    }
    sw.equivalence.detail = format!("fast = brute for M, Z, chi, mobius; {scope}");
    sw.m_at_one.detail = format!("M(x, 1) = 1; {scope}");
    sw.chi_roots.detail = format!("chi = prod (y - e) over positive exponents e; {scope}");
    sw.ranked.detail = format!("all maximal chains have length |V(F')| - |V(F)|; {scope}");
    sw
}

/// Intervals under one upper forest with the same marked vertices are
/// isomorphic partitive posets.
pub fn classification(exhaustive_max: usize, sample: Option<Sample>) -> Check {
    let mut check = Check::new("classification");
    for n in 1..=exhaustive_max {
        for upper in forests(n) {
            let mut first: BTreeMap<_, (Forest, _)> = BTreeMap::new();
            for lower in lower_set(&upper) {
                let marks = marked_vertices(&lower, &upper).unwrap();
                let p = as_partitive(&lower, &upper).unwrap();
                match first.get(&marks) {
                    Some((other, q)) => check.expect(partitive_isomorphic(q, &p), || {
                        format!(
                            "{} and {} not isomorphic",
                            bracket(other, &upper),
                            bracket(&lower, &upper)
                        )
                    }),
                    None => {
                        first.insert(marks, (lower, p));
                    }
                }
            }
        }
    }
    let mut detail =
        format!("same (F', V) gives isomorphic partitive posets; all pairs, n <= {exhaustive_max}");
    if let Some(s) = sample {
        let found = sampled_pairs(s, &mut check);
        detail.push_str(&format!(
            "; {found} sampled pairs at n = {} (seed {})",
            s.labels, s.seed
        ));
    }
    check.detail = detail;
    check
}

/// The sampled half of [`classification`] on its own; `checked` is the
/// number of pairs drawn.
pub fn classification_sample(sample: Sample) -> Check {
    let mut check = Check::new("classification-sample");
    let found = sampled_pairs(sample, &mut check);
    check.detail = format!(
        "same (F', V) gives isomorphic partitive posets; {found} sampled pairs at n = {} (seed {})",
        sample.labels, sample.seed
    );
    check
}

/// Draws pairs of distinct lower forests sharing marks under a common upper
/// forest and checks each pair; returns the number of pairs drawn.
fn sampled_pairs(s: Sample, check: &mut Check) -> usize {
    let uppers = forests(s.labels);
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut classes_by_upper: BTreeMap<usize, Vec<Vec<Forest>>> = BTreeMap::new();
    let mut found = 0;
    let mut attempts = 0;
    while found < s.count && attempts < 100 * s.count {
        attempts += 1;
        let u = rng.gen_range(0..uppers.len());
        let upper = &uppers[u];
        let classes = classes_by_upper.entry(u).or_insert_with(|| {
            let mut by_marks: BTreeMap<_, Vec<Forest>> = BTreeMap::new();
            for lower in lower_set(upper) {
                by_marks
                    .entry(marked_vertices(&lower, upper).unwrap())
                    .or_default()
                    .push(lower);
            }
            by_marks.into_values().filter(|c| c.len() > 1).collect()
        });
        let Some(class) = classes.choose(&mut rng) else {
            continue;
        };
        let pick: Vec<&Forest> = class.choose_multiple(&mut rng, 2).collect();
        let (a, b) = (pick[0], pick[1]);
        let pa = as_partitive(a, upper).unwrap();
        let pb = as_partitive(b, upper).unwrap();
        check.expect(partitive_isomorphic(&pa, &pb), || {
            format!(
                "{} and {} not isomorphic",
                bracket(a, upper),
                bracket(b, upper)
            )
        });
        found += 1;
    }
    found
}

/// Each interval against its abstract rebuild from products, twisted
/// products and vee-products.
pub fn decomposition(max: usize, sample: Option<Sample>) -> Check {
    let mut check = Check::new("decomposition");
    let mut cases = all_intervals(max);
    let mut scope = format!("all intervals, n <= {max}");
    if let Some(s) = sample {
        cases.extend(sampled_intervals(s));
        scope.push_str(&format!(
            ", {} sampled at n = {} (seed {})",
            s.count, s.labels, s.seed
        ));
    }
    for (lower, upper) in &cases {
        let concrete = as_partitive(lower, upper).unwrap();
        let ok = match rebuild(lower, upper) {
            Ok(rebuilt) => partitive_isomorphic(&concrete, &rebuilt),
            Err(_) => false,
        };
        check.expect(ok, || {
            format!("{}: rebuild is not isomorphic", bracket(lower, upper))
        });
    }
    check.detail = format!("interval = rebuilt product / twisted / vee-product; {scope}");
    check
}

/// A non-semimodular interval on `n` labels, found by exhaustive search.
pub fn semimodularity_witness(n: usize) -> Check {
    let mut check = Check::new("non-semimodular-witness");
    let mut witnesses = Vec::new();
    for upper in forests(n) {
        for lower in lower_set(&upper) {
            let iv = interval(&lower, &upper).unwrap();
            check.checked += 1;
            if let Some((x, y)) = semimodular_violation(iv.poset()) {
                witnesses.push((iv, x, y));
            }
        }
    }
    match witnesses.first() {
        Some((iv, x, y)) => {
            let (ex, ey) = (&iv.elements()[*x], &iv.elements()[*y]);
            check.detail = format!(
                "{} of {} intervals on {n} labels are not semimodular, e.g. {}: {ex} and {ey} \
                 cover their meet but their join does not cover both",
                witnesses.len(),
                check.checked,
                bracket(iv.lower(), iv.upper()),
            );
        }
        None => {
            check.detail = format!("no non-semimodular interval on {n} labels");
            check.fail(check.detail.clone());
        }
    }
    check
}

/// The suite run by `forest-poset verify`: exhaustive up to
/// `min(max_labels, 5)` labels, sampled at 6.
pub fn run_suite(max_labels: usize, seed: u64, samples: usize) -> Vec<Check> {
    let exhaustive = max_labels.min(5);
    let sample_at = |n: usize| {
        (max_labels >= n).then_some(Sample {
            labels: n,
            count: samples,
            seed,
        })
    };
    let mut checks = vec![
        counting(max_labels, max_labels, max_labels),
        order_axioms(max_labels.min(4)),
        comb_factorization(max_labels, exhaustive),
    ];
    checks.extend(sweep(exhaustive, sample_at(6)).checks());
    checks.push(classification(exhaustive, sample_at(6)));
    checks.push(decomposition(exhaustive, sample_at(6)));
    if max_labels >= 4 {
        checks.push(semimodularity_witness(4));
    }
    checks
}
