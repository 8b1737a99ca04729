//! Sweep every layout variant over a small generated corpus and print the
//! timing CSV plus a comparison against the split+direct baseline.

use pfac_dna::automaton::build_trie;
use pfac_dna::bench::{compare_report, run_bench, write_csv, BenchConfig};
use pfac_dna::datagen::{gen_pattern_set, gen_text, GenSpec, LengthSpec};

fn main() -> pfac_dna::Result<()> {
    let patterns = gen_pattern_set(&GenSpec::patterns(1, 500, LengthSpec::Fixed(100)))?;
    let text = gen_text(&GenSpec::text(2, 8 << 20));
    let table = build_trie(&patterns, None)?;

    let config = BenchConfig {
        worker_counts: vec![1, 2],
        repetitions: 3,
        ..BenchConfig::default()
    };
    let results = run_bench(&config, &table, "gen500", &text, "8MiB")?;
    print!("{}", write_csv(&results));

    println!();
    print!("{}", compare_report(&results, "split+direct".parse()?)?);
    Ok(())
}
