mod common;

use common::{bell, forest_count, forests, ground, tree_count};
use forest_poset::interval::interval;
use forest_poset::partition::enumerate_partitions;
use forest_poset::tree::enumerate_trees;
use forest_poset::{Forest, Tree};

#[test]
fn oracle_sequences() {
    let trees: Vec<u128> = (1..=7).map(tree_count).collect();
    assert_eq!(trees, [1, 1, 3, 15, 105, 945, 10395]);
    let forests: Vec<u128> = (1..=6).map(forest_count).collect();
    assert_eq!(forests, [1, 2, 7, 37, 266, 2431]);
    let bells: Vec<u128> = (1..=6).map(bell).collect();
    assert_eq!(bells, [1, 2, 5, 15, 52, 203]);
}

#[test]
fn tree_enumeration_matches_double_factorial() {
    for n in 1..=7 {
        let trees = enumerate_trees(&ground(n)).unwrap();
        assert_eq!(trees.len() as u128, tree_count(n), "n = {n}");
        let mut sorted = trees.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), trees.len());
    }
}

#[test]
fn forest_enumeration_matches_partition_sum() {
    for n in 1..=6 {
        let all = forests(n);
        assert_eq!(all.len() as u128, forest_count(n), "n = {n}");
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn comb_intervals_have_bell_many_elements() {
    for n in 1..=6 {
        let g = ground(n);
        let comb = Forest::from_tree(Tree::comb(&g).unwrap());
        let iv = interval(&Forest::discrete(&g).unwrap(), &comb).unwrap();
        assert_eq!(iv.len() as u128, bell(n), "n = {n}");
        assert_eq!(enumerate_partitions(&g).unwrap().len() as u128, bell(n));
    }
}
