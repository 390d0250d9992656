mod common;

use std::collections::BTreeMap;

use common::forests;
use forest_poset::order::{lower_set, marked_vertices};
use forest_poset::partitive::{as_partitive, partitive_isomorphic, rebuild};

#[test]
fn rebuilt_intervals_match_concrete_ones() {
    for n in 1..=4 {
        for upper in forests(n) {
            for lower in lower_set(&upper) {
                let concrete = as_partitive(&lower, &upper).unwrap();
                let rebuilt = rebuild(&lower, &upper).unwrap();
                assert_eq!(concrete.rank_shift(), rebuilt.rank_shift());
                assert!(
                    partitive_isomorphic(&concrete, &rebuilt),
                    "[{lower}, {upper}]"
                );
            }
        }
    }
}

#[test]
fn same_upper_and_marks_give_isomorphic_intervals() {
    for n in 1..=4 {
        for upper in forests(n) {
            let mut classes = BTreeMap::new();
            for lower in lower_set(&upper) {
                let marks = marked_vertices(&lower, &upper).unwrap();
                let p = as_partitive(&lower, &upper).unwrap();
                match classes.get(&marks) {
                    None => {
                        classes.insert(marks, (lower, p));
                    }
                    Some((first, q)) => {
                        assert!(
                            partitive_isomorphic(q, &p),
                            "[{first}, {upper}] vs [{lower}, {upper}]"
                        )
                    }
                }
            }
        }
    }
}
