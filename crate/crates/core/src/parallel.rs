//! Deterministic work splitting.
//!
//! Index ranges are cut into contiguous chunks, one per worker, and results
//! come back in chunk order, so reductions see the same sequence no matter
//! how many workers ran.

use std::thread;

/// Environment variable naming the worker count (default 1).
pub const WORKERS_ENV: &str = "RIPCERT_WORKERS";

pub fn workers_from_env() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or(1)
}

/// Runs `f(start, end)` over `[0, total)` split into at most `workers`
/// contiguous chunks; results are returned in range order.
pub fn run_chunks<R, F>(total: u128, workers: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u128, u128) -> R + Sync,
{
    let workers = workers.max(1) as u128;
    if workers == 1 || total < 2 {
        return vec![f(0, total)];
    }
    let chunks = workers.min(total);
    let bounds: Vec<(u128, u128)> = (0..chunks)
        .map(|c| (total * c / chunks, total * (c + 1) / chunks))
        .collect();
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(a, b)| s.spawn(move || f(a, b)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}
