//! Resource bounds and the execution strategy for exhaustive scans.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};

/// How exhaustive scans are executed.
///
/// `Parallel` falls back to sequential execution when the crate is built
/// without the `parallel` feature. Both strategies return identical results
/// in identical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Enumeration bounds plus the execution strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest permutation degree that may be enumerated.
    pub perm_degree: usize,
    /// Largest leaf count for planar tree enumeration.
    pub tree_leaves: usize,
    /// Largest leaf count for decorated tree enumeration.
    pub decorated_leaves: usize,
    /// Largest internal-vertex count for binary tree enumeration.
    pub binary_degree: usize,
    /// Largest total degree of a law audit over permutations.
    pub perm_law_degree: usize,
    /// Largest total degree of a law audit over the other structures.
    pub law_degree: usize,
    /// Largest truncation order for series built from tree counts.
    pub series_order: usize,
    pub strategy: Strategy,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            perm_degree: 8,
            tree_leaves: 10,
            decorated_leaves: 8,
            binary_degree: 10,
            perm_law_degree: 7,
            law_degree: 9,
            series_order: 12,
            strategy: Strategy::default(),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            strategy: Strategy::Sequential,
            ..Config::default()
        }
    }

    pub fn with_strategy(self, strategy: Strategy) -> Self {
        Config { strategy, ..self }
    }
}

pub(crate) fn check_bound(what: &'static str, requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        Err(Error::BoundExceeded {
            what,
            requested,
            bound,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidDegree(n))
    } else {
        Ok(())
    }
}

/// Order-preserving `flat_map` over a slice.
pub(crate) fn flat_map<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items.par_iter().flat_map_iter(f).collect(),
        _ => items.iter().flat_map(f).collect(),
    }
}

/// First item (in slice order) for which `f` returns `Some`.
pub(crate) fn find_map_first<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Option<(usize, U)>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items
            .par_iter()
            .enumerate()
            .find_map_first(|(i, x)| f(x).map(|u| (i, u))),
        _ => items
            .iter()
            .enumerate()
            .find_map(|(i, x)| f(x).map(|u| (i, u))),
    }
}

/// Sort in place; parallel sort is stable and gives the same order.
pub(crate) fn sort<T: Ord + Send>(strategy: Strategy, items: &mut [T]) {
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items.par_sort(),
        _ => items.sort(),
    }
}
