//! Resource caps shared by the enumeration paths and the partition solver.

use std::env;

/// Largest ground set enumerated by default (`2^24` lattice points).
pub const DEFAULT_ENUM_CAP: usize = 24;
/// Largest ground set handed to the interval-partition solver by default.
pub const DEFAULT_SOLVER_CAP: usize = 12;
/// Default node budget of one partition search.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

pub const ENUM_CAP_VAR: &str = "ENUM_CAP";
pub const NODE_BUDGET_VAR: &str = "SDEPTH_NODE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enum_cap: usize,
    pub solver_cap: usize,
    pub node_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: DEFAULT_ENUM_CAP,
            solver_cap: DEFAULT_SOLVER_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl Limits {
    /// Defaults overridden by `ENUM_CAP` and `SDEPTH_NODE_BUDGET` when they
    /// hold valid numbers. Malformed values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = env::var(ENUM_CAP_VAR).ok().and_then(|v| v.trim().parse().ok()) {
            limits.enum_cap = cap;
        }
        if let Some(budget) = env::var(NODE_BUDGET_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.node_budget = budget;
        }
        limits
    }
}
