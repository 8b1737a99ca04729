//! Scan a multi-record FASTA file. Records are concatenated with a non-DNA
//! separator byte, so no match ever crosses a record boundary.

use std::io::Write;

use pfac_dna::automaton::build_trie;
use pfac_dna::text_io::{parse_fasta, write_matches};
use pfac_dna::{scan_pfac, PatternSet, ScanPolicy};

fn main() -> pfac_dna::Result<()> {
    let fasta = b">read1\nACTGT\nACG\n>read2\nCTGTG\n>read3\nTGTG\n";
    let text = parse_fasta(fasta)?;
    println!("flattened {} FASTA bytes into {} scannable bytes", fasta.len(), text.len());

    let patterns = PatternSet::new(["AC", "ACG", "CTGT", "TG"])?;
    let table = build_trie(&patterns, None)?;
    let matches = scan_pfac(&table, &text, ScanPolicy::longest_only(), 2);

    let mut tsv = Vec::new();
    write_matches(&matches, &mut tsv, true).expect("write to Vec");
    std::io::stdout().write_all(&tsv).expect("stdout");
    Ok(())
}
