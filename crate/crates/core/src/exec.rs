//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon's pool; without it, or with [`Exec::Sequential`], they run inline.
//! Results never depend on the choice.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether work will actually be split across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn sum<F>(self, range: std::ops::Range<usize>, f: F) -> u64
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).sum();
        }
        range.map(f).sum()
    }

    /// Maps `f` over `items`, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Flat-maps `f` over `0..n`, keeping order.
    pub fn flat_map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> Vec<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().flat_map_iter(f).collect();
        }
        (0..n).flat_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| (i * i % 7) as u64;
        assert_eq!(Exec::Sequential.sum(0..1000, f), Exec::Parallel.sum(0..1000, f));
        let xs: Vec<u32> = (0..100).collect();
        assert_eq!(Exec::Sequential.map(&xs, |x| x * 2), Exec::Parallel.map(&xs, |x| x * 2));
        let g = |i: usize| vec![i; i % 3];
        assert_eq!(Exec::Sequential.flat_map_range(50, g), Exec::Parallel.flat_map_range(50, g));
    }
}
