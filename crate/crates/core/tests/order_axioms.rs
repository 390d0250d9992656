mod common;

use std::collections::BTreeSet;

use common::{f, forests};
use forest_poset::order::{leq, lower_set, marked_vertices};
use forest_poset::{Forest, VertexId};

fn relation(all: &[Forest]) -> Vec<Vec<bool>> {
    all.iter()
        .map(|a| all.iter().map(|b| leq(a, b).unwrap()).collect())
        .collect()
}

#[test]
fn leq_is_a_partial_order() {
    for n in 1..=4 {
        let all = forests(n);
        let r = relation(&all);
        let k = all.len();
        for a in 0..k {
            assert!(r[a][a], "{} not reflexive", all[a]);
            for b in 0..k {
                if a != b && r[a][b] {
                    assert!(!r[b][a], "{} and {} break antisymmetry", all[a], all[b]);
                }
                if !r[a][b] {
                    continue;
                }
                for c in 0..k {
                    if r[b][c] {
                        assert!(
                            r[a][c],
                            "{} ≤ {} ≤ {} not transitive",
                            all[a], all[b], all[c]
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn strict_order_adds_inner_vertices() {
    for n in 1..=4 {
        let all = forests(n);
        for a in &all {
            for b in &all {
                if a != b && leq(a, b).unwrap() {
                    assert!(a.inner_count() < b.inner_count(), "{a} < {b}");
                }
            }
        }
    }
}

#[test]
fn lower_set_agrees_with_leq() {
    for n in 1..=4 {
        let all = forests(n);
        for upper in &all {
            let below: BTreeSet<Forest> = lower_set(upper).into_iter().collect();
            let want: BTreeSet<Forest> = all
                .iter()
                .filter(|a| leq(a, upper).unwrap())
                .cloned()
                .collect();
            assert_eq!(below, want, "lower set of {upper}");
        }
    }
}

/// The smallest vertex of `upper` whose leaf set contains `leaves`.
fn lowest_common_ancestor(upper: &Forest, leaves: &BTreeSet<forest_poset::Label>) -> VertexId {
    upper
        .inner_vertices()
        .into_iter()
        .filter(|v| leaves.is_subset(v.leaves()))
        .min_by_key(|v| v.len())
        .unwrap()
}

#[test]
fn marked_vertices_are_lowest_common_ancestors() {
    for n in 1..=5 {
        let all = forests(n);
        for upper in &all {
            for lower in lower_set(upper) {
                let want: BTreeSet<VertexId> = lower
                    .inner_vertices()
                    .iter()
                    .map(|v| lowest_common_ancestor(upper, v.leaves()))
                    .collect();
                let got = marked_vertices(&lower, upper).unwrap();
                assert_eq!(got, want, "[{lower}, {upper}]");
                assert_eq!(got.len(), lower.inner_count(), "image is injective");
            }
        }
    }
}

#[test]
fn incomparable_pairs_are_rejected() {
    assert!(!leq(&f("((a,b),c)|d"), &f("((a,c),b)|d")).unwrap());
    assert!(marked_vertices(&f("((a,b),c)|d"), &f("((a,c),b)|d")).is_err());
    assert!(leq(&f("a|b"), &f("a|c")).is_err());
}
