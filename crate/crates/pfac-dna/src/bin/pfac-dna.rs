//! Command-line front end: match, gen, bench, inspect.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pfac_dna::automaton::{build_failure, build_trie, render_failure, render_table};
use pfac_dna::bench::{compare_report, run_bench, write_csv, BenchConfig};
use pfac_dna::datagen::{data_preset, pattern_preset, GenSpec, LengthSpec};
use pfac_dna::error::Error;
use pfac_dna::layout::{encode_table, scan_pfac_with_layout, LayoutVariant};
use pfac_dna::matcher::ScanPolicy;
use pfac_dna::text_io::{read_patterns, read_text, write_matches, TextFormat};

const EXIT_CODES_HELP: &str = "EXIT CODES:
   0  success
   2  non-DNA symbol in a pattern file
   3  duplicate pattern
   4  empty pattern
   5  empty pattern file
   6  state limit exceeded
   7  packed-field overflow
   8  malformed FASTA input
   9  pattern space saturated (datagen)
  10  match count mismatch between benchmark cells
  11  baseline variant missing from results
  12  unknown layout variant
  13  unknown preset
  14  file I/O error
   1  any other failure";

#[derive(Parser)]
#[command(
    name = "pfac-dna",
    about = "Multi-pattern DNA matching: serial Aho-Corasick and failure-less parallel scanning",
    after_help = EXIT_CODES_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Fasta,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Longest,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a text file for every pattern in a pattern file, emitting TSV
    /// matches (start, length, pattern id)
    Match(MatchArgs),
    /// Generate synthetic pattern files and DNA corpora
    Gen(GenArgs),
    /// Sweep layout variants and worker counts, emitting a timing CSV
    Bench(BenchArgs),
    /// Print the transition table (and optionally failure links) for a
    /// pattern file
    Inspect(InspectArgs),
}

#[derive(Args)]
struct MatchArgs {
    /// Pattern file: one DNA pattern per line
    patterns: PathBuf,
    /// Input text file
    text: PathBuf,
    /// Input text format
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    /// Report only the longest match per start offset, or all matches
    #[arg(long, value_enum, default_value = "longest")]
    mode: ModeArg,
    /// Table layout and input staging, e.g. merged+staged
    #[arg(long, default_value = "merged+staged")]
    layout: String,
    /// Worker threads (default: available cores, or $PFAC_DNA_WORKERS)
    #[arg(long)]
    workers: Option<usize>,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Prepend a TSV header line
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct GenArgs {
    /// What to generate: "patterns" or "text"
    #[arg(value_parser = ["patterns", "text"])]
    kind: String,
    /// Preset name (patterns: ps1..ps5; text: ds1..ds5, mini1..mini5).
    /// Omit to use --count/--length or --bytes instead.
    preset: Option<String>,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Explicit pattern count (patterns without a preset)
    #[arg(long)]
    count: Option<usize>,
    /// Explicit pattern length, "N" or "MIN-MAX" (patterns without a preset)
    #[arg(long)]
    length: Option<String>,
    /// Explicit corpus size in bytes (text without a preset)
    #[arg(long)]
    bytes: Option<usize>,
    /// Output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Pattern preset (ps1..ps5) or pattern file path
    #[arg(long)]
    patterns: String,
    /// Data preset (ds1..ds5, mini1..mini5) or text file path
    #[arg(long)]
    data: String,
    /// Comma-separated layout variants (default: all six)
    #[arg(long, value_delimiter = ',')]
    variants: Vec<String>,
    /// Comma-separated worker counts
    #[arg(long, value_delimiter = ',')]
    workers: Vec<usize>,
    /// Timed repetitions per cell
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Discarded warmup runs per cell
    #[arg(long, default_value_t = 1)]
    warmup: usize,
    /// Seed for preset generation
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also emit a ratio report against this baseline variant
    #[arg(long)]
    baseline: Option<String>,
    /// Ratio report output file (default: stdout, after the main CSV)
    #[arg(long)]
    compare_out: Option<PathBuf>,
}

#[derive(Args)]
struct InspectArgs {
    /// Pattern file
    patterns: PathBuf,
    /// Print the transition table
    #[arg(long)]
    dump_table: bool,
    /// Print failure links and output sets
    #[arg(long)]
    dump_failure: bool,
}

fn default_workers() -> usize {
    if let Ok(v) = std::env::var("PFAC_DNA_WORKERS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn emit(out: Option<&PathBuf>, contents: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                source: e,
            })?);
            f.write_all(contents.as_bytes()).map_err(|e| Error::Io {
                path: path.display().to_string(),
                source: e,
            })
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn cmd_match(args: MatchArgs) -> Result<(), Error> {
    let patterns = read_patterns(&args.patterns)?;
    let format = match args.format {
        FormatArg::Plain => TextFormat::Plain,
        FormatArg::Fasta => TextFormat::Fasta,
    };
    let text = read_text(&args.text, format)?;
    let policy = match args.mode {
        ModeArg::Longest => ScanPolicy::longest_only(),
        ModeArg::All => ScanPolicy::all_matches(),
    };
    let variant: LayoutVariant = args.layout.parse()?;
    let workers = args.workers.unwrap_or_else(default_workers);

    let table = build_trie(&patterns, None)?;
    let encoded = encode_table(&table, variant)?;
    let records = scan_pfac_with_layout(&encoded, &text, policy, workers);

    let mut buf = Vec::new();
    write_matches(&records, &mut buf, args.header).map_err(|e| Error::Io {
        path: "<matches>".into(),
        source: e,
    })?;
    emit(args.out.as_ref(), std::str::from_utf8(&buf).expect("TSV is ASCII"))
}

fn parse_length(s: &str) -> Result<LengthSpec, Error> {
    let bad = || Error::UnknownPreset(format!("--length {s} (expected N or MIN-MAX)"));
    if let Some((lo, hi)) = s.split_once('-') {
        let lo = lo.parse().map_err(|_| bad())?;
        let hi = hi.parse().map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        Ok(LengthSpec::Range(lo, hi))
    } else {
        let n: usize = s.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(LengthSpec::Fixed(n))
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Error> {
    let open = |path: &PathBuf| {
        File::create(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })
    };
    match args.kind.as_str() {
        "patterns" => {
            let (count, length) = match &args.preset {
                Some(name) => pattern_preset(name)?,
                None => {
                    let count = args.count.ok_or_else(|| {
                        Error::UnknownPreset("patterns needs a preset or --count/--length".into())
                    })?;
                    let length = parse_length(args.length.as_deref().unwrap_or("100"))?;
                    (count, length)
                }
            };
            let spec = GenSpec::patterns(args.seed, count, length);
            eprintln!(
                "gen patterns: seed={} count={} length={:?} -> {}",
                spec.seed,
                spec.pattern_count,
                spec.pattern_length,
                args.out.display()
            );
            let mut f = BufWriter::new(open(&args.out)?);
            pfac_dna::datagen::write_patterns(&spec, &mut f)?;
        }
        "text" => {
            let bytes = match &args.preset {
                Some(name) => data_preset(name)?,
                None => args.bytes.ok_or_else(|| {
                    Error::UnknownPreset("text needs a preset or --bytes".into())
                })?,
            };
            let spec = GenSpec::text(args.seed, bytes);
            eprintln!(
                "gen text: seed={} bytes={} -> {}",
                spec.seed,
                spec.text_length,
                args.out.display()
            );
            let mut f = BufWriter::new(open(&args.out)?);
            pfac_dna::datagen::write_text(&spec, &mut f)?;
        }
        _ => unreachable!("clap validates kind"),
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Error> {
    let (patterns, pattern_label) = if let Ok((count, length)) = pattern_preset(&args.patterns) {
        let spec = GenSpec::patterns(args.seed, count, length);
        (pfac_dna::datagen::gen_pattern_set(&spec)?, args.patterns.clone())
    } else if std::path::Path::new(&args.patterns).exists() {
        (read_patterns(&args.patterns)?, args.patterns.clone())
    } else {
        return Err(Error::UnknownPreset(args.patterns.clone()));
    };
    let (text, data_label) = if let Ok(bytes) = data_preset(&args.data) {
        let spec = GenSpec::text(args.seed.wrapping_add(1), bytes);
        (pfac_dna::datagen::gen_text(&spec), args.data.clone())
    } else if std::path::Path::new(&args.data).exists() {
        (read_text(&args.data, TextFormat::Plain)?, args.data.clone())
    } else {
        return Err(Error::UnknownPreset(args.data.clone()));
    };

    let variants = if args.variants.is_empty() {
        LayoutVariant::ALL.to_vec()
    } else {
        args.variants
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>, _>>()?
    };
    let worker_counts = if args.workers.is_empty() {
        vec![default_workers()]
    } else {
        args.workers.clone()
    };

    let config = BenchConfig {
        variants,
        worker_counts,
        repetitions: args.reps,
        warmup_runs: args.warmup,
        policy: ScanPolicy::longest_only(),
    };
    let table = build_trie(&patterns, None)?;
    let results = run_bench(&config, &table, &pattern_label, &text, &data_label)?;
    emit(args.out.as_ref(), &write_csv(&results))?;

    if let Some(baseline) = &args.baseline {
        let report = compare_report(&results, baseline.parse()?)?;
        emit(args.compare_out.as_ref(), &report)?;
    }
    Ok(())
}

fn cmd_inspect(args: InspectArgs) -> Result<(), Error> {
    let patterns = read_patterns(&args.patterns)?;
    let table = build_trie(&patterns, None)?;
    // --dump-table is the default when no dump flag is given.
    if args.dump_table || !args.dump_failure {
        print!("{}", render_table(&table));
    }
    if args.dump_failure {
        let automaton = build_failure(table);
        print!("{}", render_failure(&automaton));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Match(args) => cmd_match(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Inspect(args) => cmd_inspect(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("pfac-dna: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
