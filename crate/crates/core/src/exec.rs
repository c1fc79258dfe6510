//! Execution strategy for batches of independent solves.
//!
//! The spectral sweeps and multi-problem reports are embarrassingly
//! parallel: each (boundary condition, Bloch parameter) pair is an
//! independent assembly + dense eigensolve. With the default `parallel`
//! feature these run on the rayon pool; without it the same code runs
//! sequentially. Output order is the input order either way, so results are
//! identical across both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, in parallel when the `parallel` feature is active.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Map `f` over `items`, in parallel when the `parallel` feature is active.
#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential map, kept available for benchmark comparisons.
pub fn map_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
