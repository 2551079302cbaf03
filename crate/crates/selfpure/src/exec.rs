use rayon::prelude::*;
use selfpure_core::harness::Executor;

/// Runs harness instances on a dedicated rayon pool. Results keep input
/// order, so reports match the sequential ones exactly.
pub struct RayonExecutor {
    pool: rayon::ThreadPool,
}

impl RayonExecutor {
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
        Ok(RayonExecutor { pool })
    }
}

impl Executor for RayonExecutor {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync,
    {
        self.pool.install(|| items.par_iter().map(&f).collect())
    }
}
