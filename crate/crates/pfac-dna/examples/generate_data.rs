//! Generate a deterministic synthetic pattern set and corpus, then count
//! matches against the analytic expectation for uniform random DNA.

use pfac_dna::automaton::build_trie;
use pfac_dna::datagen::{gen_pattern_set, gen_text, GenSpec, LengthSpec};
use pfac_dna::{scan_pfac, ScanPolicy};

fn main() -> pfac_dna::Result<()> {
    let pattern_spec = GenSpec::patterns(42, 1000, LengthSpec::Fixed(10));
    let text_spec = GenSpec::text(43, 10_000_000);

    let patterns = gen_pattern_set(&pattern_spec)?;
    let text = gen_text(&text_spec);
    println!(
        "{} patterns of length 10, corpus of {} bytes (seeds 42/43)",
        patterns.len(),
        text.len()
    );

    let table = build_trie(&patterns, None)?;
    let matches = scan_pfac(&table, &text, ScanPolicy::all_matches(), 2);

    // k * (n - L + 1) * 4^-L occurrences expected on uniform DNA.
    let expected = 1000.0 * (text.len() - 9) as f64 * 4f64.powi(-10);
    println!("found {} matches, analytic expectation {expected:.1}", matches.len());
    Ok(())
}
