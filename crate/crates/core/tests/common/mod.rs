#![allow(dead_code)]

use forest_poset::forest::enumerate_forests;
use forest_poset::{labels, Forest, Label};

pub fn ground(n: usize) -> Vec<Label> {
    let names: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    labels(&names).unwrap()
}

pub fn forests(n: usize) -> Vec<Forest> {
    enumerate_forests(&ground(n)).unwrap()
}

pub fn f(text: &str) -> Forest {
    text.parse().unwrap()
}

pub fn double_factorial(k: i64) -> u128 {
    let mut acc = 1u128;
    let mut i = k;
    while i > 1 {
        acc *= i as u128;
        i -= 2;
    }
    acc
}

/// Rooted binary trees on `n` labels: `(2n - 3)!!`.
pub fn tree_count(n: usize) -> u128 {
    if n == 1 {
        1
    } else {
        double_factorial(2 * n as i64 - 3)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Sum over set partitions of the product of per-block tree counts,
/// computed by conditioning on the block of the first label.
pub fn forest_count(n: usize) -> u128 {
    let mut f = vec![1u128; n + 1];
    for m in 1..=n {
        f[m] = (1..=m)
            .map(|k| binomial(m - 1, k - 1) * tree_count(k) * f[m - k])
            .sum();
    }
    f[n]
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 1..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    if n == 0 {
        1
    } else {
        *row.last().unwrap()
    }
}
