//! Posets of leaf-labeled rooted binary forests.
//!
//! The elements of `For(I)` are forests of unordered binary trees whose
//! leaves are bijectively labeled by a finite set `I`. A forest `F` is
//! below `F'` when `F` maps into `F'` by an orientation-preserving map that
//! is the identity on leaves and injective on inner vertices and on each
//! tree. This crate decides that order, materializes intervals, and
//! computes their Möbius numbers, `M`/`Z`-polynomials and characteristic
//! polynomials two ways: by brute force over the materialized interval, and
//! by recursive decomposition of the pair (upper forest, marked vertices)
//! without ever building the interval.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled. IO, exports and the command-line front end live in the
//! companion `forest-poset-cli` crate.
//!
//! ```
//! use forest_poset::{Forest, MarkedTreePair, engine};
//!
//! let lower: Forest = "a|b|c|d".parse().unwrap();
//! let upper: Forest = "((a,b),(c,d))".parse().unwrap();
//! let pair = MarkedTreePair::from_interval(&lower, &upper).unwrap();
//! assert_eq!(engine::exponents(&pair).as_slice(), &[1, 1, 4]);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
mod label;
pub mod text;

pub mod engine;
pub mod forest;
pub mod interval;
pub mod invariants;
pub mod order;
pub mod partition;
pub mod partitive;
pub mod poly;
pub mod poset;
pub mod tree;

pub use error::{Error, Result};
pub use forest::{Forest, VertexId};
pub use interval::IntervalPoset;
pub use label::{labels, Label};
pub use order::MarkedTreePair;
pub use partition::SetPartition;
pub use partitive::PartitivePoset;
pub use poly::{BivariatePolynomial, UnivariatePolynomial};
pub use poset::Poset;
pub use tree::Tree;
