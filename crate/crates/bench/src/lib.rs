//! Shared fixtures for the kernel benchmarks. Everything here builds inputs
//! only; the timed work lives in the bench targets.

use edgeal_core::graphs::{complete, cycle, Graph};
use edgeal_core::ideals::MonomialIdeal;
use edgeal_core::symbolic::CoverSystem;

pub fn k5_covers() -> CoverSystem {
    CoverSystem::of_graph(&complete(5))
}

pub fn c5() -> Graph {
    cycle(5)
}

/// I(C5)^2: ten generators, the smallest case where the lcm lattice does
/// real work.
pub fn c5_squared() -> MonomialIdeal {
    MonomialIdeal::edge_ideal(&cycle(5)).power(2)
}

pub fn c7() -> Graph {
    cycle(7)
}
