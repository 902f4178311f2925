//! Data-parallel sweep helper. With the `parallel` feature the work is
//! spread across rayon workers; results come back in input order either way,
//! so every corpus sweep is deterministic regardless of worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn sweep<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn sweep<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    sweep_sequential(items, f)
}

/// Single-threaded sweep, always available; the benches compare this
/// against the rayon path.
pub fn sweep_sequential<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
