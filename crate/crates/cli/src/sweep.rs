//! Sweep driver: dispatches per-shape work to a bounded pool of worker
//! threads while streaming reports to the caller in the canonical pair order,
//! regardless of completion order. With one job the sweep runs inline.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use fulltwist::{coprime_pairs, run_checks_for_pair, CheckReport, Result, SweepSpec, SweepSummary};

pub fn run(
    spec: &SweepSpec,
    jobs: usize,
    mut emit: impl FnMut(&CheckReport),
) -> Result<SweepSummary> {
    let pairs = coprime_pairs(spec.max_sum());
    let mut summary = SweepSummary::default();

    if jobs <= 1 {
        for &(m, n) in &pairs {
            for report in run_checks_for_pair(m, n, spec.checks())? {
                summary.record(&report);
                emit(&report);
            }
        }
        return Ok(summary);
    }

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<Vec<CheckReport>>)>();
    let workers = jobs.min(pairs.len().max(1));
    thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let pairs = &pairs;
            let next = &next;
            let checks = spec.checks();
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= pairs.len() {
                    break;
                }
                let (m, n) = pairs[i];
                if tx.send((i, run_checks_for_pair(m, n, checks))).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Reorder completions so the stream matches the sequential order.
        let mut pending: BTreeMap<usize, Result<Vec<CheckReport>>> = BTreeMap::new();
        let mut want = 0usize;
        let mut first_error = None;
        for (i, result) in rx {
            pending.insert(i, result);
            while let Some(result) = pending.remove(&want) {
                want += 1;
                match result {
                    Ok(reports) => {
                        for report in &reports {
                            summary.record(report);
                            emit(report);
                        }
                    }
                    Err(e) => {
                        if first_error.is_none() {
                            first_error = Some(e);
                        }
                    }
                }
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(summary),
        }
    })
}
