//! Trie construction and the full Aho-Corasick automaton.
//!
//! The trie is stored as a dense states x 4 transition table. Each cell holds
//! the next state (0 = no transition) and the id of the pattern completed by
//! taking that edge (0 = none). Pattern ids ride on edges, not states, so a
//! failure-less scanner sees every completed pattern during its walk without
//! any extra lookup.
//!
//! Every newly created trie node gets a fresh state number from a single
//! counter, in pattern-then-character insertion order. Terminal states are
//! never reused for unrelated nodes; reusing them conflates distinct path
//! strings and produces false matches.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::dna::{DnaSymbol, PITCH};
use crate::error::{Error, Result};
use crate::pattern::PatternSet;

/// One entry of the dense transition table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TransitionCell {
    /// Next state, or 0 for "no transition".
    pub next_state: u32,
    /// Pattern completed by taking this edge, or 0 for none.
    pub matched_pattern_id: u32,
}

/// Dense states x 4 transition table: the trie of all patterns.
#[derive(Debug, Clone)]
pub struct TransitionTable {
    cells: Vec<TransitionCell>,
    num_states: u32,
    pattern_lens: Vec<u32>,
    max_pattern_len: usize,
}

impl TransitionTable {
    /// Row count, including the root (state 0).
    pub fn num_states(&self) -> u32 {
        self.num_states
    }

    #[inline]
    pub fn cell(&self, state: u32, symbol: DnaSymbol) -> TransitionCell {
        debug_assert!(state < self.num_states);
        self.cells[state as usize * PITCH + symbol.code()]
    }

    /// Flat row-major cell storage, `num_states * 4` entries.
    pub fn cells(&self) -> &[TransitionCell] {
        &self.cells
    }

    /// Number of patterns the table was built from.
    pub fn num_patterns(&self) -> u32 {
        self.pattern_lens.len() as u32
    }

    /// Length in symbols of a 1-based pattern id.
    pub fn pattern_len(&self, id: u32) -> u32 {
        self.pattern_lens[(id - 1) as usize]
    }

    pub fn max_pattern_len(&self) -> usize {
        self.max_pattern_len
    }

    /// Reassemble a table from raw parts (layout decoding).
    pub(crate) fn from_parts(
        cells: Vec<TransitionCell>,
        num_states: u32,
        pattern_lens: Vec<u32>,
    ) -> TransitionTable {
        debug_assert_eq!(cells.len(), num_states as usize * PITCH);
        let max_pattern_len = pattern_lens.iter().copied().max().unwrap_or(0) as usize;
        TransitionTable { cells, num_states, pattern_lens, max_pattern_len }
    }
}

/// Build the trie transition table for a pattern set.
///
/// `max_states` caps the arena; `None` means exact fit (`1 + total pattern
/// length`, the trie upper bound).
pub fn build_trie(patterns: &PatternSet, max_states: Option<u32>) -> Result<TransitionTable> {
    // The trie bound is pessimistic when prefixes are shared, so the cap is
    // enforced at state allocation rather than up front.
    let bound = 1 + patterns.total_len() as u64;
    let cap = max_states.map(u64::from).unwrap_or(bound);

    let mut cells: Vec<TransitionCell> = vec![TransitionCell::default(); PITCH];
    let mut num_states: u32 = 1;

    for (id, pattern) in patterns.iter() {
        let mut state: u32 = 0;
        for (i, &sym) in pattern.iter().enumerate() {
            let last = i + 1 == pattern.len();
            let idx = state as usize * PITCH + sym.code();
            let cell = cells[idx];
            let next = if cell.next_state != 0 {
                cell.next_state
            } else {
                if u64::from(num_states) + 1 > cap {
                    return Err(Error::TooManyStates {
                        needed: u64::from(num_states) + 1,
                        max: cap,
                    });
                }
                let fresh = num_states;
                num_states += 1;
                cells.extend(std::iter::repeat_n(TransitionCell::default(), PITCH));
                cells[idx].next_state = fresh;
                fresh
            };
            if last {
                let existing = cells[idx].matched_pattern_id;
                if existing != 0 {
                    return Err(Error::DuplicatePattern {
                        first_id: existing,
                        second_id: id,
                    });
                }
                cells[idx].matched_pattern_id = id;
            }
            state = next;
        }
    }

    Ok(TransitionTable {
        cells,
        num_states,
        pattern_lens: patterns.iter().map(|(_, p)| p.len() as u32).collect(),
        max_pattern_len: patterns.max_len(),
    })
}

/// The serial Aho-Corasick automaton: trie plus failure links and per-state
/// output sets.
#[derive(Debug, Clone)]
pub struct FailureAutomaton {
    table: TransitionTable,
    failure: Vec<u32>,
    outputs: Vec<Vec<u32>>,
}

impl FailureAutomaton {
    pub fn table(&self) -> &TransitionTable {
        &self.table
    }

    pub fn failure(&self, state: u32) -> u32 {
        self.failure[state as usize]
    }

    /// Pattern ids whose pattern is a suffix of this state's path string.
    pub fn outputs(&self, state: u32) -> &[u32] {
        &self.outputs[state as usize]
    }
}

/// Compute failure links and output sets by breadth-first traversal from the
/// root. The table itself is unchanged.
pub fn build_failure(table: TransitionTable) -> FailureAutomaton {
    let n = table.num_states() as usize;
    let mut failure = vec![0u32; n];
    let mut outputs: Vec<Vec<u32>> = vec![Vec::new(); n];

    // Seed output sets with the pattern ending exactly at each state.
    for state in 0..table.num_states() {
        for sym in DnaSymbol::ALL {
            let cell = table.cell(state, sym);
            if cell.matched_pattern_id != 0 {
                outputs[cell.next_state as usize].push(cell.matched_pattern_id);
            }
        }
    }

    let mut queue = VecDeque::new();
    for sym in DnaSymbol::ALL {
        let child = table.cell(0, sym).next_state;
        if child != 0 {
            failure[child as usize] = 0;
            queue.push_back(child);
        }
    }

    while let Some(state) = queue.pop_front() {
        for sym in DnaSymbol::ALL {
            let child = table.cell(state, sym).next_state;
            if child == 0 {
                continue;
            }
            // Follow failures of the parent until a state with a transition
            // on this symbol exists (the root always terminates the walk).
            let mut f = failure[state as usize];
            loop {
                let next = table.cell(f, sym).next_state;
                if next != 0 {
                    f = next;
                    break;
                }
                if f == 0 {
                    break;
                }
                f = failure[f as usize];
            }
            failure[child as usize] = f;
            let inherited = outputs[f as usize].clone();
            outputs[child as usize].extend(inherited);
            outputs[child as usize].sort_unstable();
            outputs[child as usize].dedup();
            queue.push_back(child);
        }
    }

    FailureAutomaton {
        table,
        failure,
        outputs,
    }
}

/// Render the transition table as rows of `(next_state, pattern_id)` with one
/// column per symbol, header `A T C G`.
pub fn render_table(table: &TransitionTable) -> String {
    let mut out = String::new();
    out.push_str("state\tA\tT\tC\tG\n");
    for state in 0..table.num_states() {
        let _ = write!(out, "{state}");
        for sym in DnaSymbol::ALL {
            let c = table.cell(state, sym);
            let _ = write!(out, "\t{},{}", c.next_state, c.matched_pattern_id);
        }
        out.push('\n');
    }
    out
}

/// Render failure links and output sets, one line per state.
pub fn render_failure(automaton: &FailureAutomaton) -> String {
    let mut out = String::new();
    for state in 0..automaton.table().num_states() {
        let ids = automaton
            .outputs(state)
            .iter()
            .map(|id| id.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(
            out,
            "state {state}: failure={} outputs={{{ids}}}",
            automaton.failure(state)
        );
    }
    out
}
