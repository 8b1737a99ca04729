//! Pattern files, input texts (plain or FASTA), and match output.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matcher::MatchRecord;
use crate::pattern::PatternSet;

/// Separator inserted between FASTA records: a non-DNA control byte, so the
/// barrier policy keeps matches from spanning records.
pub const FASTA_RECORD_SEPARATOR: u8 = 0;

/// Input text file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TextFormat {
    /// Whole file verbatim; line breaks are barrier bytes.
    #[default]
    Plain,
    /// '>' header lines; sequence lines concatenated per record, records
    /// joined with a single separator byte.
    Fasta,
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

/// Read a pattern file: one pattern per line, LF or CRLF endings, blank
/// lines ignored. Ids are assigned 1-based in non-blank line order.
pub fn read_patterns(path: impl AsRef<Path>) -> Result<PatternSet> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| io_err(path, e))?;
    parse_patterns(&data)
}

/// Parse pattern file contents. Error positions refer to file lines, not
/// pattern ids.
pub fn parse_patterns(data: &[u8]) -> Result<PatternSet> {
    let mut lines = Vec::new();
    for (lineno, line) in data.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        lines.push((lineno + 1, line));
    }
    PatternSet::new(lines.iter().map(|&(_, l)| l)).map_err(|e| match e {
        // Rebase id-relative positions onto file line numbers.
        Error::NonDnaSymbol { ch, line, column } => Error::NonDnaSymbol {
            ch,
            line: lines[line - 1].0,
            column,
        },
        other => other,
    })
}

/// Read an input text. FASTA records are concatenated with one separator
/// byte between records.
pub fn read_text(path: impl AsRef<Path>, format: TextFormat) -> Result<Vec<u8>> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| io_err(path, e))?;
    match format {
        TextFormat::Plain => Ok(data),
        TextFormat::Fasta => parse_fasta(&data),
    }
}

/// Flatten FASTA contents into one scannable byte string.
pub fn parse_fasta(data: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(data.len());
    let mut in_record = false;
    let mut record_has_sequence = true;
    let mut header_line = 0;
    for (lineno, line) in data.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.first() == Some(&b'>') {
            if in_record && !record_has_sequence {
                return Err(Error::MalformedFasta { line: header_line });
            }
            if in_record {
                out.push(FASTA_RECORD_SEPARATOR);
            }
            in_record = true;
            record_has_sequence = false;
            header_line = lineno + 1;
        } else if !line.is_empty() {
            out.extend_from_slice(line);
            record_has_sequence = true;
        }
    }
    if in_record && !record_has_sequence {
        return Err(Error::MalformedFasta { line: header_line });
    }
    Ok(out)
}

/// Write matches as TSV: `start<TAB>length<TAB>pattern_id`, LF-terminated.
/// Byte-stable across runs; records must already be in (start, pattern_id)
/// order.
pub fn write_matches(
    records: &[MatchRecord],
    dest: &mut impl Write,
    header: bool,
) -> std::io::Result<()> {
    let mut buf = String::new();
    if header {
        buf.push_str("start\tlength\tpattern_id\n");
    }
    for r in records {
        buf.push_str(&format!("{}\t{}\t{}\n", r.start, r.len, r.pattern_id));
    }
    dest.write_all(buf.as_bytes())
}

/// Parse `write_matches` output back into records (headerless input).
pub fn parse_matches(data: &str) -> Option<Vec<MatchRecord>> {
    data.lines()
        .map(|line| {
            let mut f = line.split('\t');
            let start = f.next()?.parse().ok()?;
            let len = f.next()?.parse().ok()?;
            let pattern_id = f.next()?.parse().ok()?;
            f.next().is_none().then_some(MatchRecord { start, len, pattern_id })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_file_line_order_ids() {
        let ps = parse_patterns(b"AC\nACG\nCTGT\nTG\n").unwrap();
        assert_eq!(ps.len(), 4);
        assert_eq!(ps.to_string(1), "AC");
        assert_eq!(ps.to_string(4), "TG");
    }

    #[test]
    fn blank_lines_and_crlf_ignored() {
        let ps = parse_patterns(b"AC\r\n\r\n\nTG\r\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps.to_string(2), "TG");
    }

    #[test]
    fn non_dna_reports_file_line_and_column() {
        let err = parse_patterns(b"AC\n\nACX\n").unwrap_err();
        match err {
            Error::NonDnaSymbol { ch, line, column } => {
                assert_eq!((ch, line, column), ('X', 3, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_file_rejected() {
        assert!(matches!(parse_patterns(b"\n\n").unwrap_err(), Error::EmptyFile));
    }

    #[test]
    fn fasta_concatenation_with_separator() {
        let text = parse_fasta(b">r1\nACT\nGT\n>r2\nAC\n").unwrap();
        assert_eq!(text, b"ACTGT\x00AC");
        assert_eq!(text.len(), 8);
    }

    #[test]
    fn fasta_header_without_sequence_rejected() {
        assert!(matches!(
            parse_fasta(b">r1\nACT\n>r2\n").unwrap_err(),
            Error::MalformedFasta { line: 3 }
        ));
        assert!(matches!(
            parse_fasta(b">only\n>next\nAC\n").unwrap_err(),
            Error::MalformedFasta { line: 1 }
        ));
    }

    #[test]
    fn tsv_format() {
        let mut out = Vec::new();
        let recs = [MatchRecord { start: 0, len: 2, pattern_id: 1 }];
        write_matches(&recs, &mut out, false).unwrap();
        assert_eq!(out, b"0\t2\t1\n");

        out.clear();
        write_matches(&[], &mut out, false).unwrap();
        assert!(out.is_empty());

        out.clear();
        write_matches(&recs, &mut out, true).unwrap();
        assert!(out.starts_with(b"start\tlength\tpattern_id\n"));
    }

    #[test]
    fn tsv_round_trip() {
        let recs = vec![
            MatchRecord { start: 0, len: 2, pattern_id: 1 },
            MatchRecord { start: 1, len: 4, pattern_id: 3 },
            MatchRecord { start: 2, len: 2, pattern_id: 4 },
        ];
        let mut out = Vec::new();
        write_matches(&recs, &mut out, false).unwrap();
        let parsed = parse_matches(std::str::from_utf8(&out).unwrap()).unwrap();
        assert_eq!(parsed, recs);
    }

    #[test]
    fn read_missing_file_is_io_error() {
        let err = read_patterns("/nonexistent/patterns.txt").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
        assert!(err.to_string().contains("/nonexistent/patterns.txt"));
    }
}
