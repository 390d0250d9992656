//! Structured (JSON) exports of forests, polynomials and intervals.

use forest_poset::interval::IntervalPoset;
use forest_poset::text::Nested;
use forest_poset::{BivariatePolynomial, Forest, SetPartition, UnivariatePolynomial};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

/// An exact integer as a JSON number, however large.
pub fn integer(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

pub fn nested(node: &Nested) -> Value {
    match node {
        Nested::Leaf(l) => Value::String(l.clone()),
        Nested::Node(a, b) => Value::Array(vec![nested(a), nested(b)]),
    }
}

/// A forest as a list of trees, each a leaf string or a two-element array.
pub fn forest(f: &Forest) -> Value {
    Value::Array(f.to_nested().iter().map(nested).collect())
}

/// `[[x_degree, y_degree, coefficient], ...]` in increasing degree order.
pub fn bivariate(p: &BivariatePolynomial) -> Value {
    p.terms()
        .map(|(i, j, c)| json!([i, j, integer(c)]))
        .collect()
}

/// `[[degree, coefficient], ...]` in increasing degree order.
pub fn univariate(p: &UnivariatePolynomial) -> Value {
    p.terms().map(|(d, c)| json!([d, integer(c)])).collect()
}

pub fn partition(p: &SetPartition) -> Value {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|l| l.to_string()).collect::<Vec<_>>())
        .collect()
}

/// Elements (text, nested form, corank, partition by trees) and cover pairs.
pub fn interval(iv: &IntervalPoset) -> Value {
    let elements: Vec<Value> = iv
        .elements()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            json!({
                "index": i,
                "forest": h.to_string(),
                "nested": forest(h),
                "corank": iv.corank_of(i),
                "partition": partition(&SetPartition::of_forest(h)),
            })
        })
        .collect();
    json!({
        "lower": iv.lower().to_string(),
        "upper": iv.upper().to_string(),
        "degree": iv.degree(),
        "elements": elements,
        "covers": iv.covers().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}
