//! Hard limits that keep exhaustive scans from running away.
//!
//! Every search is exact, so the only defense against an oversized request
//! is to refuse it loudly. Budgets are checked before work starts whenever
//! the cost is predictable, and during the scan otherwise.

use crate::{Error, Result};

/// Default maximum ambient dimension accepted by constructors.
pub const DEFAULT_MAX_DIM: usize = 4;

/// Default cell limit for a single box scan.
pub const DEFAULT_MAX_BOX_CELLS: u64 = 10_000;

/// Default limit on saturated chains enumerated by the oracle.
pub const DEFAULT_MAX_CHAINS: u64 = 1_000_000;

/// Default limit on candidate subsets tried per enumeration box.
pub const DEFAULT_MAX_CANDIDATES: u64 = 1 << 22;

/// Environment variable overriding the enumeration candidate budget.
pub const BUDGET_ENV: &str = "GOODSEMI_BUDGET";

/// Environment variable overriding the maximum ambient dimension.
pub const MAX_DIM_ENV: &str = "GOODSEMI_MAX_DIM";

/// Search budgets threaded through oracles and enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of cells a single box scan may visit.
    pub max_box_cells: u64,
    /// Maximum number of saturated chains the oracle may enumerate.
    pub max_chains: u64,
    /// Maximum number of candidate small sets per enumeration box.
    pub max_candidates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_box_cells: DEFAULT_MAX_BOX_CELLS,
            max_chains: DEFAULT_MAX_CHAINS,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl Budget {
    /// Default budget with the candidate limit taken from `GOODSEMI_BUDGET`
    /// when that variable is set to a positive integer.
    pub fn from_env() -> Budget {
        let mut budget = Budget::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            if let Ok(n) = raw.trim().parse::<u64>() {
                if n > 0 {
                    budget.max_candidates = n;
                }
            }
        }
        budget
    }

    pub fn check_box_cells(&self, needed: u64) -> Result<()> {
        if needed > self.max_box_cells {
            return Err(Error::BudgetExceeded {
                what: "box cells",
                needed,
                limit: self.max_box_cells,
            });
        }
        Ok(())
    }

    pub fn check_candidates(&self, needed: u64) -> Result<()> {
        if needed > self.max_candidates {
            return Err(Error::BudgetExceeded {
                what: "enumeration candidates",
                needed,
                limit: self.max_candidates,
            });
        }
        Ok(())
    }

    pub fn check_chains(&self, needed: u64) -> Result<()> {
        if needed > self.max_chains {
            return Err(Error::BudgetExceeded {
                what: "saturated chains",
                needed,
                limit: self.max_chains,
            });
        }
        Ok(())
    }
}

/// Maximum ambient dimension, `GOODSEMI_MAX_DIM` when set, 4 otherwise.
pub fn max_dim() -> usize {
    if let Ok(raw) = std::env::var(MAX_DIM_ENV) {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    DEFAULT_MAX_DIM
}

/// Rejects dimensions outside `1..=max_dim()`.
pub fn check_dim(dim: usize) -> Result<()> {
    let max = max_dim();
    if dim == 0 || dim > max {
        return Err(Error::DimensionCap { dim, max });
    }
    Ok(())
}
