//! Exact computations with edge ideals of finite simple graphs.
//!
//! The crate computes, over the polynomial ring `K[x1..xn]`:
//!
//! * symbolic powers `I(G)^(s)` (intersections of powers of the minimal
//!   vertex cover primes) and ordinary powers `I(G)^s`,
//! * colon ideals of monomial ideals by monomials,
//! * multigraded Betti numbers and Castelnuovo-Mumford regularity via
//!   reduced simplicial homology with exact arithmetic,
//! * a family of checkers that verify equalities and regularity bounds
//!   relating these objects on concrete graphs, with machine-checkable
//!   witnesses.
//!
//! Everything is exact: homology ranks come from fraction-free integer
//! elimination (or from a prime field when requested), never from floats.
//! The intended scale is exhaustive corpora of small graphs (n <= 8),
//! though the types allow up to 32 vertices.

pub mod betti;
mod budget;
pub mod graphs;
pub mod ideals;
pub mod linalg;
pub mod symbolic;
pub mod theorems;

pub use betti::{BettiTable, Regularity, SimplicialComplex};
pub use budget::{Budget, Interrupted};
pub use graphs::{Graph, OddGirth, VertexSet};
pub use ideals::{Monomial, MonomialIdeal};
pub use linalg::Field;
pub use symbolic::CoverSystem;
pub use theorems::{CheckReport, CheckStatus, Statement};
