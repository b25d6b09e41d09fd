//! Seed-indexed batch evaluation.
//!
//! Results always come back in seed order, so aggregates are independent of
//! scheduling. With the `parallel` feature the seeds are spread over the
//! rayon pool; without it they run in a plain loop.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluates `f` on `first_seed..first_seed + count`, in parallel when the
/// `parallel` feature is enabled.
pub fn map_seeds<T, F>(first_seed: u64, count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (first_seed..first_seed + count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seeds_sequential(first_seed, count, f)
    }
}

/// Single-threaded [`map_seeds`].
pub fn map_seeds_sequential<T, F>(first_seed: u64, count: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (first_seed..first_seed + count).map(f).collect()
}
