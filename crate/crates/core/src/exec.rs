//! Sequential / data-parallel execution of independent work items.
//!
//! Every parallel path here merges results in item order, so outputs are
//! identical to the sequential path regardless of thread count. Without the
//! `parallel` feature, [`Strategy::Parallel`] silently runs sequentially.

use std::ops::ControlFlow;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// The strategy that will actually run given the compiled features.
    pub fn effective(self) -> Strategy {
        if cfg!(feature = "parallel") {
            self
        } else {
            Strategy::Sequential
        }
    }
}

/// `items.iter().map(f).collect()`, possibly in parallel, order preserved.
pub fn map_ordered<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy.effective() {
        Strategy::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Strategy::Parallel => unreachable!(),
    }
}

/// `(0..n).map(f).collect()`, possibly in parallel, order preserved.
pub fn map_range<R, F>(strategy: Strategy, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match strategy.effective() {
        Strategy::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Strategy::Parallel => unreachable!(),
    }
}

/// Evaluates strata `0..n` and feeds each result to `consume` in index order
/// until it breaks. In parallel mode strata are evaluated a chunk at a time,
/// so at most one chunk of work is wasted past the break point.
pub fn scan_strata<R, B, F, C>(strategy: Strategy, n: usize, eval: F, mut consume: C) -> Option<B>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
    C: FnMut(R) -> ControlFlow<B>,
{
    match strategy.effective() {
        Strategy::Sequential => {
            for i in 0..n {
                if let ControlFlow::Break(b) = consume(eval(i)) {
                    return Some(b);
                }
            }
            None
        }
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            let chunk = (rayon::current_num_threads() * 2).max(1);
            let mut start = 0;
            while start < n {
                let end = (start + chunk).min(n);
                let results: Vec<R> = (start..end).into_par_iter().map(&eval).collect();
                for r in results {
                    if let ControlFlow::Break(b) = consume(r) {
                        return Some(b);
                    }
                }
                start = end;
            }
            None
        }
        #[cfg(not(feature = "parallel"))]
        Strategy::Parallel => unreachable!(),
    }
}
