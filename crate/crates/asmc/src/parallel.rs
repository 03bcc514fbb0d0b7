//! Enumeration split over worker threads by the column of the first-row `1`.
//!
//! Part `col` holds the matrices whose first row has its `1` in column `col`;
//! concatenating parts `n, n-1, ..., 1` gives the sequential order back.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use asmc_core::{enumerate_first_row, AsmIter, AsmMatrix, EnumFilter, Result};

fn workers(requested: Option<usize>, parts: usize) -> usize {
    let available = thread::available_parallelism().map_or(1, NonZeroUsize::get);
    requested.unwrap_or(available).clamp(1, parts.max(1))
}

/// Runs `work` on every part, spread over `jobs` threads, and returns the
/// results in part order `n, ..., 1`.
fn run_parts<T: Send>(
    filter: EnumFilter,
    cap: usize,
    jobs: Option<usize>,
    work: impl Fn(AsmIter) -> T + Sync,
) -> Result<Vec<T>> {
    let n = filter.n;
    // Validate the cap and the order once, up front.
    let iters: Vec<AsmIter> = (1..=n)
        .rev()
        .map(|col| enumerate_first_row(filter, cap, col))
        .collect::<Result<_>>()?;
    let slots: Vec<Mutex<Option<AsmIter>>> =
        iters.into_iter().map(|it| Mutex::new(Some(it))).collect();
    let results: Vec<Mutex<Option<T>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..workers(jobs, n) {
            s.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= n {
                    break;
                }
                let it = slots[idx]
                    .lock()
                    .expect("slot lock")
                    .take()
                    .expect("each part is taken once");
                let out = work(it);
                *results[idx].lock().expect("result lock") = Some(out);
            });
        }
    });
    Ok(results
        .into_iter()
        .map(|m| {
            m.into_inner()
                .expect("result lock")
                .expect("every part ran")
        })
        .collect())
}

/// Number of matrices matching `filter`.
pub fn count_parallel(filter: EnumFilter, cap: usize, jobs: Option<usize>) -> Result<u64> {
    Ok(run_parts(filter, cap, jobs, |it| it.count() as u64)?
        .into_iter()
        .sum())
}

/// Same stream as `enumerate_asm`, produced in parallel.
pub fn enumerate_parallel(
    filter: EnumFilter,
    cap: usize,
    jobs: Option<usize>,
) -> Result<Vec<AsmMatrix>> {
    Ok(run_parts(filter, cap, jobs, Iterator::collect::<Vec<_>>)?
        .into_iter()
        .flatten()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use asmc_core::{enumerate_asm, SignClass};

    #[test]
    fn matches_sequential_stream() {
        for n in 1..=5 {
            for filter in [EnumFilter::all(n), EnumFilter::with_minus(n, 1)] {
                let seq: Vec<_> = enumerate_asm(filter, 7).unwrap().collect();
                for jobs in [Some(1), Some(3), None] {
                    assert_eq!(enumerate_parallel(filter, 7, jobs).unwrap(), seq);
                    assert_eq!(count_parallel(filter, 7, jobs).unwrap(), seq.len() as u64);
                }
            }
        }
        let pos = EnumFilter {
            n: 5,
            s: Some(1),
            class: Some(SignClass::Positive),
        };
        assert_eq!(
            enumerate_parallel(pos, 7, None).unwrap(),
            enumerate_asm(pos, 7).unwrap().collect::<Vec<_>>()
        );
    }

    #[test]
    fn cap_checked_before_spawning() {
        assert!(count_parallel(EnumFilter::all(9), 7, None).is_err());
    }
}
