//! Thin switch between rayon data-parallel loops and a sequential fallback.
//!
//! With the `parallel` feature disabled everything is compiled sequentially.
//! With it enabled (the default), parallelism can still be turned off at
//! runtime, which the benchmarks use to compare both paths on identical
//! binaries. All call sites produce output in input order, so results are
//! independent of the thread count.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static PARALLEL: AtomicBool = AtomicBool::new(true);

pub fn set_parallel(enabled: bool) {
    PARALLEL.store(enabled, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return items.par_iter().map(|t| f(t)).collect();
    }
    items.iter().map(|t| f(t)).collect()
}

/// Maps `f` over an index range, preserving order.
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return range.into_par_iter().map(&f).collect();
    }
    range.map(f).collect()
}

/// Flat-maps `f` over `items`, preserving order.
pub fn flat_map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return items.par_iter().flat_map_iter(|t| f(t)).collect();
    }
    items.iter().flat_map(|t| f(t)).collect()
}
