//! Worker-count plumbing for the enumeration-heavy sweeps.

use crate::error::Error;

/// Runs `f` on a pool of `jobs` workers, or on the global pool when `None`.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, Error> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::ParameterDomain("--jobs must be at least 1".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Format(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}
