//! Partition-level combinatorics of covering Barbasch-Vogan duality.
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! - partition arithmetic and B/C/D collapses ([`partitions`]);
//! - Cartan bookkeeping, pseudo-Levi shapes over alcove vertices, and the
//!   finite quotients `X_n = Y / Y_{Q,n}` ([`root_systems`]);
//! - the covering duality `d_BV` built from `d_com` ([`duality`]);
//! - closed-form truncated induction and the upper-bound sweep for the
//!   wavefront calculus ([`induction`]);
//! - autotomous subsets and strict-descent sweeps ([`levi`]);
//! - Weyl-group characters, permutation-module inner products, and the
//!   affine Springer fiber product formula ([`characters`]);
//! - a self-contained realization of the whole pipeline for `G2` ([`g2`]).
//!
//! The crate is `no_std` + `alloc`; all state is explicit and every function
//! is pure, so everything can be called from parallel sweeps freely.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characters;
pub mod duality;
pub mod g2;
pub mod induction;
pub mod levi;
pub mod partitions;
pub mod root_systems;

pub use partitions::{Class, Label, Partition, PartitionError};
pub use root_systems::{CartanType, CoverParams, Family};
