//! Exhaustive, isomorphism-reduced search for the small exact values, with
//! persisted, replayable result records.

mod colorings;
mod compute;
mod enumerate;
mod record;

use std::time::{Duration, Instant};

use crate::error::{parameter, Error, Result};

pub use colorings::{automorphisms, enumerate_colorings, enumerate_colorings_pruned, MAX_COLORING_EDGES};
pub use compute::{compute_f, compute_f_g_gprime, compute_g_gprime, compute_sat, compute_sat_rainbow, SatVariant};
pub use enumerate::{enumerate_graphs, GraphFilter, MAX_ENUMERATION_VERTICES};
pub use record::{parse_pattern, pattern_name, verify_record, Bound, Quantity, ResultCache, ResultRecord};

/// Limits for one search call. Running out is an error, never a truncated
/// answer.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Candidate graphs generated during enumeration.
    pub max_nodes: u64,
    pub wall_time: Duration,
    started: Instant,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: MAX_ENUMERATION_VERTICES,
            max_nodes: 1_000_000_000,
            wall_time: Duration::from_secs(24 * 3600),
            started: Instant::now(),
        }
    }
}

impl SearchBudget {
    pub fn new(max_vertices: usize, max_nodes: u64, wall_time: Duration) -> Result<Self> {
        if max_vertices == 0 || max_nodes == 0 || wall_time.is_zero() {
            return Err(parameter("search budget limits must be positive"));
        }
        Ok(SearchBudget {
            max_vertices,
            max_nodes,
            wall_time,
            started: Instant::now(),
        })
    }

    /// Restarts the wall clock.
    pub fn restarted(&self) -> Self {
        SearchBudget {
            started: Instant::now(),
            ..self.clone()
        }
    }

    pub(crate) fn check_time(&self) -> Result<()> {
        if self.started.elapsed() > self.wall_time {
            return Err(Error::Budget {
                partial: format!("wall time limit of {:?} reached", self.wall_time),
            });
        }
        Ok(())
    }
}
