//! Physical table encodings and input staging strategies.
//!
//! The logical transition table can be stored three ways: two parallel flat
//! arrays (`SplitArrays`), one flat array of (next_state, pattern_id) pairs
//! (`InterleavedPairs`), or one flat array of packed machine words
//! (`PackedWord`). Input can be read in place (`Direct`) or copied chunk by
//! chunk into a worker-private buffer before scanning (`ChunkLocal`). Every
//! combination yields identical match output; only cache behavior differs.

use std::fmt;
use std::str::FromStr;

use crate::automaton::{TransitionCell, TransitionTable};
use crate::dna::{DnaSymbol, PITCH};
use crate::error::{Error, Result};
use crate::matcher::{
    scan_failureless, walk_offsets, CellLookup, MatchRecord, ScanPolicy,
};

/// Default ChunkLocal chunk size: 64 KiB, comfortably inside a typical L2.
pub const DEFAULT_CHUNK_SIZE: usize = 64 * 1024;

/// `PackedWord` 32-bit split: next_state in the low 20 bits, pattern id in
/// the high 12. A 64-bit (32/32) fallback is selected automatically when
/// either bound is exceeded.
pub const PACKED32_STATE_BITS: u32 = 20;
pub const PACKED32_PATTERN_BITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableLayout {
    /// Two parallel flat arrays, one of next states, one of pattern ids.
    SplitArrays,
    /// One flat array of (next_state, pattern_id) cells.
    InterleavedPairs,
    /// One flat array of words packing both fields.
    PackedWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputStaging {
    /// Read the shared input text in place.
    Direct,
    /// Copy each chunk (plus longest-pattern overhang) into a worker-private
    /// buffer before scanning it.
    ChunkLocal,
}

/// A (table layout, input staging) pair under benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayoutVariant {
    pub table: TableLayout,
    pub staging: InputStaging,
}

impl LayoutVariant {
    pub const ALL: [LayoutVariant; 6] = [
        LayoutVariant { table: TableLayout::SplitArrays, staging: InputStaging::Direct },
        LayoutVariant { table: TableLayout::SplitArrays, staging: InputStaging::ChunkLocal },
        LayoutVariant { table: TableLayout::InterleavedPairs, staging: InputStaging::Direct },
        LayoutVariant { table: TableLayout::InterleavedPairs, staging: InputStaging::ChunkLocal },
        LayoutVariant { table: TableLayout::PackedWord, staging: InputStaging::Direct },
        LayoutVariant { table: TableLayout::PackedWord, staging: InputStaging::ChunkLocal },
    ];

    /// The configuration used as CLI default: merged table, staged input.
    pub const DEFAULT: LayoutVariant = LayoutVariant {
        table: TableLayout::InterleavedPairs,
        staging: InputStaging::ChunkLocal,
    };
}

impl fmt::Display for LayoutVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = match self.table {
            TableLayout::SplitArrays => "split",
            TableLayout::InterleavedPairs => "merged",
            TableLayout::PackedWord => "packed",
        };
        let staging = match self.staging {
            InputStaging::Direct => "direct",
            InputStaging::ChunkLocal => "staged",
        };
        write!(f, "{table}+{staging}")
    }
}

impl FromStr for LayoutVariant {
    type Err = Error;

    /// Parses `"<table>+<staging>"`, e.g. `"merged+staged"`.
    fn from_str(s: &str) -> Result<LayoutVariant> {
        let bad = || Error::UnknownVariant(s.to_string());
        let (table, staging) = s.split_once('+').ok_or_else(bad)?;
        let table = match table {
            "split" => TableLayout::SplitArrays,
            "merged" => TableLayout::InterleavedPairs,
            "packed" => TableLayout::PackedWord,
            _ => return Err(bad()),
        };
        let staging = match staging {
            "direct" => InputStaging::Direct,
            "staged" => InputStaging::ChunkLocal,
            _ => return Err(bad()),
        };
        Ok(LayoutVariant { table, staging })
    }
}

/// Pack a cell into a 32-bit word (20-bit state, 12-bit pattern id).
pub fn pack32(cell: TransitionCell) -> Result<u32> {
    if cell.next_state >= 1 << PACKED32_STATE_BITS {
        return Err(Error::PackedOverflow {
            value: cell.next_state as u64,
            bits: PACKED32_STATE_BITS,
        });
    }
    if cell.matched_pattern_id >= 1 << PACKED32_PATTERN_BITS {
        return Err(Error::PackedOverflow {
            value: cell.matched_pattern_id as u64,
            bits: PACKED32_PATTERN_BITS,
        });
    }
    Ok(cell.next_state | (cell.matched_pattern_id << PACKED32_STATE_BITS))
}

#[inline]
pub fn unpack32(word: u32) -> TransitionCell {
    TransitionCell {
        next_state: word & ((1 << PACKED32_STATE_BITS) - 1),
        matched_pattern_id: word >> PACKED32_STATE_BITS,
    }
}

#[inline]
fn pack64(cell: TransitionCell) -> u64 {
    cell.next_state as u64 | ((cell.matched_pattern_id as u64) << 32)
}

#[inline]
fn unpack64(word: u64) -> TransitionCell {
    TransitionCell {
        next_state: word as u32,
        matched_pattern_id: (word >> 32) as u32,
    }
}

#[derive(Debug, Clone)]
enum Storage {
    Split { next: Vec<u32>, pattern: Vec<u32> },
    Interleaved(Vec<TransitionCell>),
    Packed32(Vec<u32>),
    Packed64(Vec<u64>),
}

/// A transition table committed to one physical layout.
#[derive(Debug, Clone)]
pub struct EncodedTable {
    variant: LayoutVariant,
    storage: Storage,
    num_states: u32,
    num_patterns: u32,
    pattern_lens: Vec<u32>,
    max_pattern_len: usize,
    chunk_size: usize,
}

impl EncodedTable {
    pub fn variant(&self) -> LayoutVariant {
        self.variant
    }

    pub fn num_states(&self) -> u32 {
        self.num_states
    }

    pub fn num_patterns(&self) -> u32 {
        self.num_patterns
    }

    /// True when `PackedWord` fell back to 64-bit words.
    pub fn packed_is_wide(&self) -> bool {
        matches!(self.storage, Storage::Packed64(_))
    }

    pub fn chunk_size(&self) -> usize {
        self.chunk_size
    }

    pub fn set_chunk_size(&mut self, bytes: usize) {
        self.chunk_size = bytes.max(1);
    }

    #[inline]
    pub fn lookup(&self, state: u32, symbol: DnaSymbol) -> TransitionCell {
        debug_assert!(state < self.num_states);
        let idx = state as usize * PITCH + symbol.code();
        match &self.storage {
            Storage::Split { next, pattern } => TransitionCell {
                next_state: next[idx],
                matched_pattern_id: pattern[idx],
            },
            Storage::Interleaved(cells) => cells[idx],
            Storage::Packed32(words) => unpack32(words[idx]),
            Storage::Packed64(words) => unpack64(words[idx]),
        }
    }

    /// Reconstruct the logical table. Exact inverse of `encode_table` for
    /// every variant.
    pub fn decode(&self) -> TransitionTable {
        let mut cells = Vec::with_capacity(self.num_states as usize * PITCH);
        for state in 0..self.num_states {
            for sym in DnaSymbol::ALL {
                cells.push(self.lookup(state, sym));
            }
        }
        TransitionTable::from_parts(cells, self.num_states, self.pattern_lens.clone())
    }
}

impl CellLookup for EncodedTable {
    #[inline]
    fn cell(&self, state: u32, symbol: DnaSymbol) -> TransitionCell {
        self.lookup(state, symbol)
    }

    fn max_pattern_len(&self) -> usize {
        self.max_pattern_len
    }
}

/// Commit a logical table to a physical layout.
pub fn encode_table(table: &TransitionTable, variant: LayoutVariant) -> Result<EncodedTable> {
    let cells = table.cells();
    let storage = match variant.table {
        TableLayout::SplitArrays => Storage::Split {
            next: cells.iter().map(|c| c.next_state).collect(),
            pattern: cells.iter().map(|c| c.matched_pattern_id).collect(),
        },
        TableLayout::InterleavedPairs => Storage::Interleaved(cells.to_vec()),
        TableLayout::PackedWord => {
            let fits32 = table.num_states() <= 1 << PACKED32_STATE_BITS
                && table.num_patterns() < 1 << PACKED32_PATTERN_BITS;
            if fits32 {
                let words: Result<Vec<u32>> = cells.iter().map(|&c| pack32(c)).collect();
                Storage::Packed32(words?)
            } else {
                Storage::Packed64(cells.iter().map(|&c| pack64(c)).collect())
            }
        }
    };
    Ok(EncodedTable {
        variant,
        storage,
        num_states: table.num_states(),
        num_patterns: table.num_patterns(),
        pattern_lens: (1..=table.num_patterns()).map(|id| table.pattern_len(id)).collect(),
        max_pattern_len: table.max_pattern_len(),
        chunk_size: DEFAULT_CHUNK_SIZE,
    })
}

/// Failure-less scan over an encoded table. Identical output contract to
/// `matcher::scan_pfac` for every variant.
pub fn scan_pfac_with_layout(
    encoded: &EncodedTable,
    text: &[u8],
    policy: ScanPolicy,
    workers: usize,
) -> Vec<MatchRecord> {
    match encoded.variant.staging {
        InputStaging::Direct => {
            scan_failureless(encoded, text, policy, workers, |table, text, range, out| {
                walk_offsets(table, text, range, 0, policy.mode, out);
            })
        }
        InputStaging::ChunkLocal => {
            let chunk_size = encoded.chunk_size;
            let overhang = encoded.max_pattern_len.saturating_sub(1);
            scan_failureless(encoded, text, policy, workers, move |table, text, range, out| {
                // Copy each chunk plus overhang into a private buffer; a
                // scanner starting inside the chunk never needs more than
                // chunk_end + max_pattern_len - 1.
                let mut buf = Vec::with_capacity(chunk_size + overhang);
                let mut lo = range.start;
                while lo < range.end {
                    let hi = (lo + chunk_size).min(range.end);
                    let copy_end = (hi + overhang).min(text.len());
                    buf.clear();
                    buf.extend_from_slice(&text[lo..copy_end]);
                    walk_offsets(table, &buf, 0..hi - lo, lo, policy.mode, out);
                    lo = hi;
                }
            })
        }
    }
}
