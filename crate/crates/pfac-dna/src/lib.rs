//! Multi-pattern DNA sequence matching.
//!
//! Two scanners over the same pattern trie:
//!
//! - **Serial Aho-Corasick**: one cursor over the text, failure links and
//!   output sets report every occurrence of every pattern in a single pass.
//! - **Failure-less parallel scan**: no failure links; one logical scanner
//!   starts at every byte offset and walks the trie until it dead-ends,
//!   reporting (by default) the longest pattern beginning at that offset.
//!   Start offsets are partitioned across worker threads.
//!
//! The trie is a dense states x 4 table over the DNA alphabet (columns
//! A, T, C, G) where each cell holds the next state and the id of the
//! pattern completed by that edge. The [`layout`] module offers three
//! physical encodings of this table and two input staging strategies; all
//! six combinations produce identical matches and exist so the [`bench`]
//! module can compare their cache behavior. Note these are CPU analogs of
//! GPU memory placements (plain arrays, worker-private staging buffers,
//! packed read-only words), not an emulation of GPU hardware.
//!
//! See the crate examples for runnable walkthroughs of each capability, or
//! the `pfac-dna` binary for the command-line interface.

pub mod automaton;
pub mod bench;
pub mod datagen;
pub mod dna;
pub mod error;
pub mod layout;
pub mod matcher;
pub mod pattern;
pub mod text_io;

pub use automaton::{build_failure, build_trie, FailureAutomaton, TransitionCell, TransitionTable};
pub use dna::DnaSymbol;
pub use error::{Error, Result};
pub use layout::{encode_table, scan_pfac_with_layout, EncodedTable, LayoutVariant};
pub use matcher::{
    longest_only_filter, scan_naive, scan_pfac, scan_serial_ac, MatchMode, MatchRecord, ScanPolicy,
};
pub use pattern::PatternSet;
