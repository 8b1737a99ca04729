//! Build the pattern trie and full automaton for a small pattern set and
//! print the transition table, failure links, and output sets.

use pfac_dna::automaton::{build_failure, build_trie, render_failure, render_table};
use pfac_dna::PatternSet;

fn main() -> pfac_dna::Result<()> {
    let patterns = PatternSet::new(["AC", "ACG", "CTGT", "TG"])?;
    let table = build_trie(&patterns, None)?;

    println!("{} patterns, {} states", patterns.len(), table.num_states());
    println!("\ntransition table (next_state,pattern_id per column):");
    print!("{}", render_table(&table));

    let automaton = build_failure(table);
    println!("\nfailure links and output sets:");
    print!("{}", render_failure(&automaton));
    Ok(())
}
