//! Per-stratum evaluation.
//!
//! Every decision procedure splits into independent problems, one per atom of
//! the base. Results always come back in stratum order regardless of how the
//! work was scheduled.

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel,
}

pub(crate) fn map_strata<T, F>(exec: Exec, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..count).map(f).collect(),
        Exec::Parallel => (0..count).into_par_iter().map(f).collect(),
    }
}
