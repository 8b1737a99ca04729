//! Failure-less parallel scanning: one logical scanner per start offset,
//! partitioned across worker threads. Longest-only mode suppresses
//! sub-patterns; all-matches mode reports them too. Output is identical
//! for every worker count.

use pfac_dna::automaton::build_trie;
use pfac_dna::{scan_pfac, PatternSet, ScanPolicy};

fn main() -> pfac_dna::Result<()> {
    let patterns = PatternSet::new(["AC", "ACG", "CTGT", "TG"])?;
    let table = build_trie(&patterns, None)?;
    let text = b"ACGACTGT";

    println!("text: {}", String::from_utf8_lossy(text));
    println!("longest-only:");
    for m in scan_pfac(&table, text, ScanPolicy::longest_only(), 4) {
        println!("  start {} len {} -> {}", m.start, m.len, patterns.to_string(m.pattern_id));
    }
    println!("all matches:");
    for m in scan_pfac(&table, text, ScanPolicy::all_matches(), 4) {
        println!("  start {} len {} -> {}", m.start, m.len, patterns.to_string(m.pattern_id));
    }

    let one = scan_pfac(&table, text, ScanPolicy::all_matches(), 1);
    let eight = scan_pfac(&table, text, ScanPolicy::all_matches(), 8);
    assert_eq!(one, eight);
    println!("worker counts 1 and 8 agree: {} matches", one.len());
    Ok(())
}
