//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper takes a runtime `parallel` flag; without the `parallel`
//! feature the flag is ignored. Results never depend on the flag.

/// Smallest index `i < n` with `f(i)` returning `Some`, and that value.
pub fn find_first<T, F>(n: usize, parallel: bool, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = parallel;
    (0..n).find_map(f)
}

/// `f` applied to `0..n`, in index order.
pub fn map_collect<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Whether `parallel = true` actually runs on the thread pool.
pub const fn available() -> bool {
    cfg!(feature = "parallel")
}
