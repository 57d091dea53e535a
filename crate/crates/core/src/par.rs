//! Ordered chunked maps, parallel when the `parallel` feature is on.

use std::ops::Range;

/// How a scan is executed. Results never depend on the choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Splits `range` into chunks of at most `chunk` elements.
pub fn chunks(range: Range<i64>, chunk: i64) -> Vec<Range<i64>> {
    let chunk = chunk.max(1);
    let mut out = Vec::new();
    let mut s = range.start;
    while s < range.end {
        let e = (s + chunk).min(range.end);
        out.push(s..e);
        s = e;
    }
    out
}

/// Applies `f` to each item, keeping input order in the output.
pub fn ordered_map<I, T, F>(items: Vec<I>, exec: Execution, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// Ordered map over the chunks of an integer range.
pub fn map_chunks<T, F>(range: Range<i64>, chunk: i64, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<i64>) -> T + Sync + Send,
{
    ordered_map(chunks(range, chunk), exec, f)
}
