//! Cooperative deadlines for the expensive kernels.
//!
//! Exhaustive sweeps can hit pathological instances (dense graphs, high
//! powers).  Rather than aborting the process, the heavy entry points accept a
//! [`Budget`] and bail out with [`Interrupted`] once the deadline passes.
//! Checks happen at coarse-grained points (per lattice element, per search
//! batch), so overruns stay in the millisecond range.

use std::time::{Duration, Instant};

use thiserror::Error;

/// A soft compute deadline. `Budget::unlimited()` never interrupts.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + timeout),
        }
    }

    pub fn from_timeout(timeout: Option<Duration>) -> Self {
        match timeout {
            Some(t) => Budget::with_timeout(t),
            None => Budget::unlimited(),
        }
    }

    /// Returns `Err(Interrupted)` once the deadline has passed.
    pub fn check(&self) -> Result<(), Interrupted> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Interrupted),
            _ => Ok(()),
        }
    }
}

/// A budgeted computation ran past its deadline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("computation exceeded its time budget")]
pub struct Interrupted;
