//! Index-parallel sweeps. With the `parallel` feature the work is spread over
//! the rayon thread pool; without it the same calls run sequentially.

/// Evaluates `f(0), …, f(n-1)` sequentially.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Evaluates `f(0), …, f(n-1)` on the rayon pool, preserving order.
#[cfg(feature = "parallel")]
pub fn map_indexed_par<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_indexed_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

/// Largest value of `f(i)` over `0..n`; `0` when `n = 0`.
pub fn max_over<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    map_indexed(n, f).into_iter().fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v = map_indexed(100, |i| i * i);
        assert_eq!(v, map_indexed_seq(100, |i| i * i));
        assert_eq!(max_over(0, |_| 1.0), 0.0);
        assert_eq!(max_over(5, |i| i as f64), 4.0);
    }
}
