//! Exact, witness-producing detectors for the induced patterns used by the
//! clean-graft conditions.
//!
//! Every search counts the nodes it explores. Under a node budget a search
//! that runs out returns [`Error::Inconclusive`]; "not found" is only ever
//! reported after the search space has been exhausted.

mod clean;
mod cycles;
mod paths;
mod patterns;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::witness::Witness;

pub use clean::{is_clean, is_clean_with, CleanReport, Condition, Verdict};
pub use cycles::{find_hole, find_hole_with, HoleIter};
pub use patterns::{
    find_fan, find_fan_with, find_guarded_fan, find_guarded_fan_with, find_mountable_path,
    find_mountable_path_with, find_theta, find_theta_with, find_triangle, find_triangle_with,
    find_wheel, find_wheel_with, tip_edge, tip_edge_with,
};

/// Above this many vertices a search must be given an explicit budget.
pub const AUTO_UNLIMITED_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Budget {
    /// Unlimited up to [`AUTO_UNLIMITED_MAX_N`] vertices, an error above.
    #[default]
    Auto,
    Unlimited,
    Nodes(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Worker threads for searches that split over independent candidates.
    /// With one thread the returned witness is the first in search order.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::Auto,
            threads: 1,
        }
    }
}

impl SearchConfig {
    pub fn unlimited() -> Self {
        SearchConfig {
            budget: Budget::Unlimited,
            threads: 1,
        }
    }

    pub fn with_budget(nodes: u64) -> Self {
        SearchConfig {
            budget: Budget::Nodes(nodes),
            threads: 1,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub(crate) fn meter(&self, n: usize) -> Result<Meter> {
        let limit = match self.budget {
            Budget::Unlimited => None,
            Budget::Nodes(l) => Some(l),
            Budget::Auto if n <= AUTO_UNLIMITED_MAX_N => None,
            Budget::Auto => {
                return Err(Error::BudgetRequired {
                    n,
                    limit: AUTO_UNLIMITED_MAX_N,
                })
            }
        };
        Ok(Meter::new(limit))
    }
}

/// Result of a completed search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub witness: Option<Witness>,
    pub explored: u64,
}

/// Shared node counter. Cloning yields a handle to the same counter.
#[derive(Clone, Debug)]
pub(crate) struct Meter {
    inner: Arc<MeterState>,
}

#[derive(Debug)]
struct MeterState {
    explored: AtomicU64,
    limit: Option<u64>,
    exhausted: AtomicBool,
}

impl Meter {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        Meter {
            inner: Arc::new(MeterState {
                explored: AtomicU64::new(0),
                limit,
                exhausted: AtomicBool::new(false),
            }),
        }
    }

    pub(crate) fn unlimited() -> Self {
        Self::new(None)
    }

    #[inline]
    pub(crate) fn tick(&self) -> Result<()> {
        let count = self.inner.explored.fetch_add(1, Ordering::Relaxed) + 1;
        match self.inner.limit {
            Some(limit) if count > limit => {
                self.inner.exhausted.store(true, Ordering::Relaxed);
                Err(Error::Inconclusive { explored: limit })
            }
            _ => Ok(()),
        }
    }

    pub(crate) fn explored(&self) -> u64 {
        let raw = self.inner.explored.load(Ordering::Relaxed);
        self.inner.limit.map_or(raw, |l| raw.min(l))
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.inner.exhausted.load(Ordering::Relaxed)
    }
}

/// Run `probe` over `items` and return the first witness.
///
/// Sequentially the first witness in item order wins. In parallel any
/// witness may win; an exhausted budget is only reported when no worker
/// found a witness.
pub(crate) fn first_witness<F>(
    items: &[usize],
    threads: usize,
    meter: &Meter,
    probe: F,
) -> Result<Option<Witness>>
where
    F: Fn(usize) -> Result<Option<Witness>> + Sync,
{
    if threads <= 1 {
        for &item in items {
            if let Some(w) = probe(item)? {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let found = pool.install(|| {
        items
            .par_iter()
            .find_map_any(|&item| probe(item).ok().flatten())
    });
    match found {
        Some(w) => Ok(Some(w)),
        None if meter.exhausted() => Err(Error::Inconclusive {
            explored: meter.explored(),
        }),
        None => Ok(None),
    }
}
