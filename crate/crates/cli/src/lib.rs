//! Batch command-line surface over the counting library: single counts,
//! profile tables, gap-polynomial inspection and the verification sweep.

pub mod output;
pub mod verify;
