//! Data-parallel helpers. With the `parallel` feature the maps run on the
//! rayon pool; without it, or with [`Exec::Sequential`], they run in order on
//! the calling thread. Outputs are collected in input order either way.

/// Execution strategy for the batch loops (strata, samples, relation rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved() {
        let v: Vec<u64> = (0..100).collect();
        let a = Exec::Parallel.map(v.clone(), |x| x * x);
        let b = Exec::Sequential.map(v, |x| x * x);
        assert_eq!(a, b);
    }
}
