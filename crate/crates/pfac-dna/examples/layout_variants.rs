//! Encode one logical transition table into every physical layout and show
//! that all of them produce identical matches.

use pfac_dna::automaton::build_trie;
use pfac_dna::layout::{encode_table, scan_pfac_with_layout, LayoutVariant};
use pfac_dna::{PatternSet, ScanPolicy};

fn main() -> pfac_dna::Result<()> {
    let patterns = PatternSet::new(["ACGT", "GTT", "TTACG", "CG"])?;
    let table = build_trie(&patterns, None)?;
    let text = b"TTACGTTACGTNCGACGT".repeat(100);

    let mut reference = None;
    for variant in LayoutVariant::ALL {
        let encoded = encode_table(&table, variant)?;
        let matches = scan_pfac_with_layout(&encoded, &text, ScanPolicy::all_matches(), 2);
        println!(
            "{variant:<14} {} states, {} matches",
            encoded.num_states(),
            matches.len()
        );
        match &reference {
            None => reference = Some(matches),
            Some(r) => assert_eq!(r, &matches, "layouts must agree"),
        }
    }
    println!("all six layout variants produced identical match sets");
    Ok(())
}
