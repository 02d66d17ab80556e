//! Graph inverse semigroups of finite directed graphs and their congruence
//! lattices.
//!
//! Congruences are handled through congruence triples `(H, W, f)`; the
//! [`oracle`] module computes the same lattices by brute force on the
//! semigroup itself.

pub mod classify;
pub mod cli;
pub mod graph;
pub mod lattice;
pub mod oracle;
pub mod semigroup;
pub mod triples;
