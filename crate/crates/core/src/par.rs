//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers run on the rayon pool when asked
//! to; without it, or when `parallel` is false, they run on the calling
//! thread. Results are always in input order, so callers observe the same
//! values either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` produced by `f` over `items`, in index order.
pub(crate) fn find_map_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().find_map_first(f);
    }
    let _ = parallel;
    items.iter().find_map(f)
}

/// `items.map(f)` collected in input order.
pub(crate) fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Whether this build can run anything in parallel at all.
pub const fn available() -> bool {
    cfg!(feature = "parallel")
}
