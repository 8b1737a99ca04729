//! Scanners: serial Aho-Corasick, failure-less parallel scanning, and the
//! naive oracle.
//!
//! The failure-less scan starts one logical scanner at every byte offset and
//! walks the trie until it dead-ends. A walk can never exceed the longest
//! pattern length, because the trie has no deeper states. Non-DNA bytes act
//! as barriers: no transition exists for them, so no match spans one.

use std::ops::Range;

use crate::automaton::{FailureAutomaton, TransitionCell, TransitionTable};
use crate::dna::DnaSymbol;
use crate::pattern::PatternSet;

/// One occurrence of a pattern in the input text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatchRecord {
    /// 0-based byte offset of the first matched byte.
    pub start: usize,
    /// Pattern length in bytes.
    pub len: usize,
    /// 1-based pattern id.
    pub pattern_id: u32,
}

/// Which matches a failure-less scanner reports per start offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatchMode {
    /// Only the longest pattern starting at each offset.
    #[default]
    LongestOnly,
    /// Every pattern completed along the walk.
    AllMatches,
}

/// Scan policy. Non-DNA bytes are always barriers; only the match mode
/// varies.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScanPolicy {
    pub mode: MatchMode,
}

impl ScanPolicy {
    pub fn all_matches() -> Self {
        ScanPolicy { mode: MatchMode::AllMatches }
    }

    pub fn longest_only() -> Self {
        ScanPolicy { mode: MatchMode::LongestOnly }
    }
}

/// Read access to a transition table cell, regardless of physical layout.
pub trait CellLookup: Sync {
    fn cell(&self, state: u32, symbol: DnaSymbol) -> TransitionCell;
    fn max_pattern_len(&self) -> usize;
}

impl CellLookup for TransitionTable {
    #[inline]
    fn cell(&self, state: u32, symbol: DnaSymbol) -> TransitionCell {
        TransitionTable::cell(self, state, symbol)
    }

    fn max_pattern_len(&self) -> usize {
        TransitionTable::max_pattern_len(self)
    }
}

/// Walk the failure-less automaton from every start offset in `starts`,
/// reading bytes from `text` and reporting match starts rebased by `base`.
pub(crate) fn walk_offsets<T: CellLookup + ?Sized>(
    table: &T,
    text: &[u8],
    starts: Range<usize>,
    base: usize,
    mode: MatchMode,
    out: &mut Vec<MatchRecord>,
) {
    for start in starts {
        let mut state = 0u32;
        let mut longest: Option<MatchRecord> = None;
        for (depth, &b) in text[start..].iter().enumerate() {
            let Some(sym) = DnaSymbol::from_byte(b) else {
                break; // barrier
            };
            let cell = table.cell(state, sym);
            if cell.next_state == 0 {
                break;
            }
            if cell.matched_pattern_id != 0 {
                let rec = MatchRecord {
                    start: base + start,
                    len: depth + 1,
                    pattern_id: cell.matched_pattern_id,
                };
                match mode {
                    MatchMode::AllMatches => out.push(rec),
                    MatchMode::LongestOnly => longest = Some(rec),
                }
            }
            state = cell.next_state;
        }
        if let Some(rec) = longest {
            out.push(rec);
        }
    }
}

/// Split `n` start offsets into `workers` contiguous ranges.
pub(crate) fn partition(n: usize, workers: usize) -> Vec<Range<usize>> {
    let workers = workers.max(1);
    let chunk = n.div_ceil(workers).max(1);
    (0..workers)
        .map(|w| {
            let lo = (w * chunk).min(n);
            let hi = ((w + 1) * chunk).min(n);
            lo..hi
        })
        .collect()
}

pub(crate) fn sort_records(records: &mut [MatchRecord]) {
    records.sort_unstable_by_key(|r| (r.start, r.pattern_id));
}

/// Failure-less parallel scan: one logical scanner per start offset,
/// partitioned into contiguous ranges across `workers` threads. Output is
/// sorted by (start, pattern id) and identical for every worker count.
pub fn scan_pfac(
    table: &TransitionTable,
    text: &[u8],
    policy: ScanPolicy,
    workers: usize,
) -> Vec<MatchRecord> {
    scan_failureless(table, text, policy, workers, |table, text, range, out| {
        walk_offsets(table, text, range, 0, policy.mode, out);
    })
}

/// Shared parallel driver: `scan_range` fills a private buffer for one
/// contiguous range of start offsets; buffers are concatenated in range
/// order, then sorted.
pub(crate) fn scan_failureless<T, F>(
    table: &T,
    text: &[u8],
    _policy: ScanPolicy,
    workers: usize,
    scan_range: F,
) -> Vec<MatchRecord>
where
    T: CellLookup + ?Sized,
    F: Fn(&T, &[u8], Range<usize>, &mut Vec<MatchRecord>) + Sync,
{
    let ranges = partition(text.len(), workers);
    let mut buffers: Vec<Vec<MatchRecord>> = Vec::new();
    if ranges.len() == 1 {
        let mut buf = Vec::new();
        scan_range(table, text, ranges.into_iter().next().unwrap(), &mut buf);
        buffers.push(buf);
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| {
                    let scan_range = &scan_range;
                    scope.spawn(move || {
                        let mut buf = Vec::new();
                        scan_range(table, text, range, &mut buf);
                        buf
                    })
                })
                .collect();
            for h in handles {
                buffers.push(h.join().expect("scan worker panicked"));
            }
        });
    }
    let mut records: Vec<MatchRecord> = buffers.concat();
    sort_records(&mut records);
    records
}

/// Serial Aho-Corasick scan over the full automaton. Reports every
/// occurrence of every pattern via goto/failure/output traversal. A non-DNA
/// byte resets the cursor to the root.
pub fn scan_serial_ac(
    automaton: &FailureAutomaton,
    text: &[u8],
    _policy: ScanPolicy,
) -> Vec<MatchRecord> {
    let table = automaton.table();
    let mut records = Vec::new();
    let mut state = 0u32;
    for (i, &b) in text.iter().enumerate() {
        let Some(sym) = DnaSymbol::from_byte(b) else {
            state = 0;
            continue;
        };
        loop {
            let cell = table.cell(state, sym);
            if cell.next_state != 0 {
                state = cell.next_state;
                break;
            }
            if state == 0 {
                break;
            }
            state = automaton.failure(state);
        }
        for &id in automaton.outputs(state) {
            let len = table.pattern_len(id) as usize;
            records.push(MatchRecord {
                start: i + 1 - len,
                len,
                pattern_id: id,
            });
        }
    }
    sort_records(&mut records);
    records
}

/// Brute-force oracle: direct comparison of every (offset, pattern) pair.
pub fn scan_naive(patterns: &PatternSet, text: &[u8]) -> Vec<MatchRecord> {
    let mut records = Vec::new();
    for (id, pattern) in patterns.iter() {
        let len = pattern.len();
        if len > text.len() {
            continue;
        }
        for start in 0..=text.len() - len {
            let hit = text[start..start + len]
                .iter()
                .zip(pattern)
                .all(|(&b, &sym)| DnaSymbol::from_byte(b) == Some(sym));
            if hit {
                records.push(MatchRecord { start, len, pattern_id: id });
            }
        }
    }
    sort_records(&mut records);
    records
}

/// Keep only the longest match per start offset. Ties are impossible:
/// duplicate patterns are rejected at load, so equal (start, len) implies
/// the same pattern.
pub fn longest_only_filter(records: &[MatchRecord]) -> Vec<MatchRecord> {
    let mut out: Vec<MatchRecord> = Vec::new();
    for &rec in records {
        match out.last_mut() {
            Some(last) if last.start == rec.start => {
                if rec.len > last.len {
                    *last = rec;
                }
            }
            _ => out.push(rec),
        }
    }
    out
}
