//! Order-theoretic computability toolkit.
//!
//! * [`poset`]: finite partial orders with brute-force oracles for directed
//!   sets, suprema, the way-below relation, density properties and bases.
//! * [`density`]: instance-level checks of the density theorems.
//! * [`domains`]: the Cantor, interval and majorization domains in exact
//!   rational arithmetic.
//! * [`effective`]: finite maps onto countable carriers, pairing, and
//!   emitters for recursively enumerable relations.
//! * [`enumerated`]: lazy chain constructions on enumerated posets.
//! * [`topology`]: Scott and lower topologies and multi-utilities.
//! * [`gallery`]: finite truncations of standard counterexamples.
//! * [`random`]: seeded generators for sweeps.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod density;
pub mod domains;
pub mod effective;
pub mod enumerated;
pub mod gallery;
pub mod poset;
pub mod random;
pub mod rational;
pub mod report;
pub mod topology;
