//! Data-parallel helpers. With the `parallel` feature disabled every
//! strategy runs sequentially.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `(0..len).map(f)` collected in index order.
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }

    /// Fallible variant of [`Exec::map`]; returns the first error by index.
    pub fn try_map<T, E, F>(self, len: usize, f: F) -> Result<Vec<T>, E>
    where
        T: Send,
        E: Send,
        F: Fn(usize) -> Result<T, E> + Sync + Send,
    {
        self.map(len, f).into_iter().collect()
    }

    /// Fills an `len × len` matrix with `f(a, b)`, row-major.
    pub fn matrix<T, F>(self, len: usize, f: F) -> Vec<Vec<T>>
    where
        T: Send,
        F: Fn(usize, usize) -> T + Sync + Send,
    {
        let flat = self.map(len * len, |k| f(k / len, k % len));
        let mut rows = Vec::with_capacity(len);
        let mut it = flat.into_iter();
        for _ in 0..len {
            rows.push(it.by_ref().take(len).collect());
        }
        rows
    }
}
