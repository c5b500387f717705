//! Exact enumeration of graph homomorphisms into quasi-complete targets,
//! i.e. complete graphs with a single edge removed.
//!
//! Six structured source families are supported: complete graphs,
//! quasi-complete graphs, paths, cycles, broken wheels and wheels. For each
//! family the crate provides a closed-form count ([`closed_form`]) together
//! with two independent oracles it is validated against: exhaustive
//! backtracking enumeration ([`bruteforce`]) and transfer-matrix dynamic
//! programming ([`transfer`]).
//!
//! All arithmetic is exact; counts are arbitrary-precision nonnegative
//! integers. The crate is `no_std` (allocation required).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bruteforce;
pub mod closed_form;
mod error;
pub mod graph;
pub mod poly;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{make_family, Family, FamilySpec, Graph, HomClass};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact nonnegative count, unbounded magnitude.
pub type Count = BigUint;
