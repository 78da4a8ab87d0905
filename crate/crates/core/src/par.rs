//! Switch between rayon and plain iteration.
//!
//! With the `parallel` feature disabled every helper runs sequentially and
//! [`Parallelism::Auto`] behaves like [`Parallelism::Sequential`].

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Parallelism {
    /// Use the rayon pool when the `parallel` feature is compiled in.
    #[default]
    Auto,
    /// Single-threaded; search results and certificates are reproducible.
    Sequential,
}

impl Parallelism {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Auto
    }
}

/// Fold over `range`, merging partial results with `reduce`.
pub(crate) fn fold_range<A, I, F, R>(par: Parallelism, range: Range<usize>, init: I, fold: F, reduce: R) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, usize) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        return range.into_par_iter().fold(&init, &fold).reduce(&init, &reduce);
    }
    let _ = (&par, &reduce);
    range.fold(init(), fold)
}

/// Order-preserving map.
pub(crate) fn map_collect<T, U, F>(par: Parallelism, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = par;
    items.iter().map(f).collect()
}

/// Some `f(item)` that is `Some`; the first one in order when sequential.
pub(crate) fn find_map<T, U, F>(par: Parallelism, items: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        return items.par_iter().find_map_any(f);
    }
    let _ = par;
    items.iter().find_map(f)
}
