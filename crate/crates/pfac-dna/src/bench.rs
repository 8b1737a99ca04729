//! Scan throughput measurement across layout variants and worker counts.
//!
//! Timing covers the scan phase only: table construction, layout encoding,
//! and file I/O all happen before the clock starts. The headline number is
//! the median over repetitions, with the minimum reported alongside. Cells
//! run strictly sequentially so they cannot interfere with each other.

use std::fmt::Write as _;
use std::time::Instant;

use crate::automaton::TransitionTable;
use crate::error::{Error, Result};
use crate::layout::{encode_table, scan_pfac_with_layout, LayoutVariant};
use crate::matcher::ScanPolicy;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub variants: Vec<LayoutVariant>,
    pub worker_counts: Vec<usize>,
    pub repetitions: usize,
    pub warmup_runs: usize,
    pub policy: ScanPolicy,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            variants: LayoutVariant::ALL.to_vec(),
            worker_counts: vec![1],
            repetitions: 3,
            warmup_runs: 1,
            policy: ScanPolicy::longest_only(),
        }
    }
}

/// One measured cell of the sweep.
#[derive(Debug, Clone)]
pub struct BenchResult {
    pub variant: LayoutVariant,
    pub workers: usize,
    pub pattern_set: String,
    pub data_set: String,
    pub median_seconds: f64,
    pub min_seconds: f64,
    pub throughput_mb_per_s: f64,
    pub match_count: u64,
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Run the full (variant x workers) sweep for one (patterns, data) pair.
///
/// Every cell must find the same number of matches; a mismatch is a
/// correctness bug and aborts the run.
pub fn run_bench(
    config: &BenchConfig,
    table: &TransitionTable,
    pattern_label: &str,
    text: &[u8],
    data_label: &str,
) -> Result<Vec<BenchResult>> {
    let reps = config.repetitions.max(1);
    let mut results = Vec::new();
    let mut expected_count: Option<u64> = None;

    for &variant in &config.variants {
        let encoded = encode_table(table, variant)?;
        for &workers in &config.worker_counts {
            let mut times = Vec::with_capacity(reps);
            let mut count = 0u64;
            for run in 0..config.warmup_runs + reps {
                let start = Instant::now();
                let records = scan_pfac_with_layout(&encoded, text, config.policy, workers);
                let elapsed = start.elapsed().as_secs_f64();
                count = records.len() as u64;
                if run >= config.warmup_runs {
                    times.push(elapsed);
                }
            }
            match expected_count {
                None => expected_count = Some(count),
                Some(expected) if expected != count => {
                    return Err(Error::MatchCountMismatch {
                        variant: variant.to_string(),
                        workers,
                        got: count,
                        expected,
                    });
                }
                Some(_) => {}
            }
            times.sort_by(f64::total_cmp);
            let median_seconds = median(&times);
            results.push(BenchResult {
                variant,
                workers,
                pattern_set: pattern_label.to_string(),
                data_set: data_label.to_string(),
                median_seconds,
                min_seconds: times[0],
                throughput_mb_per_s: if median_seconds > 0.0 {
                    text.len() as f64 / 1e6 / median_seconds
                } else {
                    0.0
                },
                match_count: count,
            });
        }
    }
    Ok(results)
}

/// Render results as CSV, one header line, LF endings.
pub fn write_csv(results: &[BenchResult]) -> String {
    let mut out = String::from(
        "variant,workers,pattern_set,data_set,median_s,min_s,throughput_mbps,match_count\n",
    );
    for r in results {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6},{:.2},{}",
            r.variant,
            r.workers,
            r.pattern_set,
            r.data_set,
            r.median_seconds,
            r.min_seconds,
            r.throughput_mb_per_s,
            r.match_count
        );
    }
    out
}

/// Per-cell ratio against a baseline variant, flagging cells more than 5%
/// slower than baseline.
pub fn compare_report(results: &[BenchResult], baseline: LayoutVariant) -> Result<String> {
    let mut out = String::from(
        "variant,workers,pattern_set,data_set,median_s,baseline_median_s,ratio,slower_than_baseline\n",
    );
    let mut found_baseline = false;
    for r in results {
        let base = results.iter().find(|b| {
            b.variant == baseline
                && b.workers == r.workers
                && b.pattern_set == r.pattern_set
                && b.data_set == r.data_set
        });
        let Some(base) = base else { continue };
        found_baseline = true;
        let ratio = if base.median_seconds > 0.0 {
            r.median_seconds / base.median_seconds
        } else {
            1.0
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6},{:.4},{}",
            r.variant,
            r.workers,
            r.pattern_set,
            r.data_set,
            r.median_seconds,
            base.median_seconds,
            ratio,
            ratio > 1.05
        );
    }
    if !found_baseline {
        return Err(Error::MissingBaseline(baseline.to_string()));
    }
    Ok(out)
}
