//! Rayon-backed batch runner. Draw i always uses ChaCha8 stream i, so the
//! output does not depend on how draws are spread over threads.

use linstat_core::stats::BatchRunner;
use linstat_core::Result;
use rayon::prelude::*;

/// Environment variable that overrides the default worker count.
pub const THREADS_ENV: &str = "LINSTAT_THREADS";

pub struct RayonRunner {
    pool: rayon::ThreadPool,
}

impl RayonRunner {
    pub fn new(threads: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
        RayonRunner { pool }
    }

    /// Worker count from LINSTAT_THREADS, else the number of CPUs.
    pub fn from_env() -> Result<Self> {
        Ok(Self::new(threads_from_env()?))
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Run a closure inside the pool.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        self.pool.install(f)
    }
}

pub fn threads_from_env() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(t),
            _ => Err(linstat_core::Error::InvalidSpec(format!("{THREADS_ENV}='{v}' is not a positive integer"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

impl BatchRunner for RayonRunner {
    fn map<T: Send, F: Fn(u64) -> Result<T> + Sync>(&self, first: u64, count: u64, f: F) -> Result<Vec<T>> {
        self.pool.install(|| (first..first + count).into_par_iter().map(&f).collect())
    }
}
