//! Scan a text with the serial Aho-Corasick automaton, which reports every
//! occurrence of every pattern, including sub-patterns and overlaps.

use pfac_dna::automaton::{build_failure, build_trie};
use pfac_dna::{scan_serial_ac, PatternSet, ScanPolicy};

fn main() -> pfac_dna::Result<()> {
    let patterns = PatternSet::new(["AC", "ACG", "CTGT", "TG"])?;
    let automaton = build_failure(build_trie(&patterns, None)?);

    let text = b"ACTGTNACGACG";
    println!("text: {}", String::from_utf8_lossy(text));
    for m in scan_serial_ac(&automaton, text, ScanPolicy::all_matches()) {
        println!(
            "  [{}, {}) pattern {} = {}",
            m.start,
            m.start + m.len,
            m.pattern_id,
            patterns.to_string(m.pattern_id)
        );
    }
    Ok(())
}
