//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers run on rayon when asked to;
//! without it every call is a plain iterator loop. Output order always
//! follows input order, so results do not depend on the schedule.

/// Whether this build can run work in parallel.
pub const AVAILABLE: bool = cfg!(feature = "parallel");

/// `items.iter().map(f)`, in parallel when `parallel` is set and supported.
pub fn map<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// `(0..n).flat_map(f)` with the same ordering guarantee as [`map`].
pub fn flat_map_range<U, F>(n: usize, parallel: bool, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        let chunks: Vec<Vec<U>> = (0..n).into_par_iter().map(f).collect();
        return chunks.into_iter().flatten().collect();
    }
    let _ = parallel;
    (0..n).flat_map(f).collect()
}

/// Runs `op` on a pool of `jobs` threads (`0` keeps the global pool).
pub fn with_jobs<R, F>(jobs: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(op);
        }
    }
    let _ = jobs;
    op()
}
