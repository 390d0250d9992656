//! Reports, exports and the verification suite behind the `forest-poset`
//! binary.

pub mod dot;
pub mod export;
pub mod report;
pub mod verify;
