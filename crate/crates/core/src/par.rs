//! Thread configuration and the parallel-map primitive used by all kernels.
//!
//! Field kernels are embarrassingly parallel over output cells: every output
//! value is a pure function of the (immutable) input arrays, so splitting the
//! output into chunks is bitwise deterministic for any thread count.
//! Reductions (integrals, norms, dot products) are always evaluated
//! sequentially so that audit sums do not depend on the thread count at all.
//!
//! With the `parallel` feature disabled the same API runs sequentially.

use std::sync::atomic::{AtomicUsize, Ordering};

#[cfg(feature = "parallel")]
use std::sync::OnceLock;

static THREADS: AtomicUsize = AtomicUsize::new(1);

/// Set the worker thread count. `1` forces the sequential path.
pub fn set_threads(n: usize) {
    THREADS.store(n.max(1), Ordering::SeqCst);
}

/// Currently configured worker thread count.
pub fn threads() -> usize {
    THREADS.load(Ordering::SeqCst)
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        rayon::ThreadPoolBuilder::new()
            .build()
            .expect("failed to build worker pool")
    })
}

const CHUNK: usize = 4096;

/// Fill `out[i] = f(i)` for all `i`, in parallel when enabled.
pub fn fill(out: &mut [f64], f: impl Fn(usize) -> f64 + Sync) {
    #[cfg(feature = "parallel")]
    {
        if threads() > 1 && out.len() >= 2 * CHUNK {
            use rayon::prelude::*;
            pool().install(|| {
                out.par_chunks_mut(CHUNK).enumerate().for_each(|(c, chunk)| {
                    let base = c * CHUNK;
                    for (i, v) in chunk.iter_mut().enumerate() {
                        *v = f(base + i);
                    }
                });
            });
            return;
        }
    }
    for (i, v) in out.iter_mut().enumerate() {
        *v = f(i);
    }
}

/// Sequential reference version of [`fill`]; used by the benches to compare
/// against the parallel path.
pub fn fill_seq(out: &mut [f64], f: impl Fn(usize) -> f64) {
    for (i, v) in out.iter_mut().enumerate() {
        *v = f(i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_matches_seq_for_any_thread_count() {
        let n = 20_000;
        let f = |i: usize| (i as f64).sin() * 1.5 + (i % 7) as f64;
        let mut a = vec![0.0; n];
        let mut b = vec![0.0; n];
        fill_seq(&mut a, f);
        let saved = threads();
        set_threads(4);
        fill(&mut b, f);
        set_threads(saved);
        assert_eq!(a, b); // bitwise
    }
}
