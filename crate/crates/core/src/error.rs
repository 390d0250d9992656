use alloc::string::String;
use core::fmt;

use crate::forest::VertexId;
use crate::label::Label;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed forest text; `position` is a byte offset into the input.
    Syntax {
        position: usize,
        message: String,
    },
    InvalidLabel(String),
    DuplicateLabel(Label),
    /// Two trees (or a tree and a graft partner) share a leaf.
    OverlappingLeaves(Label),
    EmptyLabelSet,
    /// A restriction set cuts through a tree instead of following tree boundaries.
    SplitsTree(Label),
    LabelSetMismatch,
    NotComparable,
    NotAComb,
    UnmarkableVertex(VertexId),
    GroundSetMismatch,
    OverlappingGroundSets,
    /// The top element of a partitive poset does not map to a one-block partition.
    TopNotOneBlock,
    NotABlock,
    InvalidPartition(String),
    InvalidPoset(String),
    IndexOutOfRange(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::InvalidLabel(s) => write!(f, "invalid label {s:?}"),
            Error::DuplicateLabel(l) => write!(f, "duplicate label `{l}`"),
            Error::OverlappingLeaves(l) => write!(f, "leaf `{l}` occurs on both sides"),
            Error::EmptyLabelSet => f.write_str("label set is empty"),
            Error::SplitsTree(l) => {
                write!(f, "restriction splits the tree containing `{l}`")
            }
            Error::LabelSetMismatch => f.write_str("forests are not on the same label set"),
            Error::NotComparable => f.write_str("forests are not comparable"),
            Error::NotAComb => f.write_str("tree is not a comb"),
            Error::UnmarkableVertex(v) => {
                write!(f, "vertex {v} is not an inner vertex of the upper forest")
            }
            Error::GroundSetMismatch => f.write_str("partitions are on different ground sets"),
            Error::OverlappingGroundSets => f.write_str("ground sets are not disjoint"),
            Error::TopNotOneBlock => {
                f.write_str("top element does not map to a one-block partition")
            }
            Error::NotABlock => f.write_str("chosen part is not a block of the bottom partition"),
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::InvalidPoset(s) => write!(f, "invalid poset: {s}"),
            Error::IndexOutOfRange(i) => write!(f, "element index {i} out of range"),
        }
    }
}

impl core::error::Error for Error {}
