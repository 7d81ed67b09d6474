//! Data-parallel helpers with a sequential fallback.
//!
//! Every sweep in the crate takes an [`Exec`] so callers (benchmarks, the
//! CLI's `--jobs` flag, tests) can pick the strategy at run time. Without
//! the `parallel` feature both variants run sequentially.

/// Execution strategy for the exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Returns some `Some` result of `f`, or `None` if every call returns `None`.
/// Sequential execution returns the first hit in order; parallel execution
/// may return any hit.
pub fn find_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().find_map_any(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}

/// Like [`find_map`] over `0..n`.
pub fn find_map_range<R, F>(exec: Exec, n: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_any(f);
    }
    let _ = exec;
    (0..n).find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u32> = (0..1000).collect();
        let a = map(Exec::Sequential, &items, |x| x * 3);
        let b = map(Exec::Parallel, &items, |x| x * 3);
        assert_eq!(a, b);
        let hit = |x: &u32| (*x == 777).then_some(*x);
        assert_eq!(find_map(Exec::Sequential, &items, hit), Some(777));
        assert_eq!(find_map(Exec::Parallel, &items, hit), Some(777));
        assert_eq!(find_map_range(Exec::Parallel, 10, |i| (i == 20).then_some(i)), None);
    }
}
