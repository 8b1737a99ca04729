//! Deterministic synthetic pattern sets and input corpora.
//!
//! All generation is driven by ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
//! with a caller-supplied 64-bit value. ChaCha8 is a fixed, portable stream
//! cipher, so identical specs produce identical bytes on every platform.
//! Symbols are drawn as `next_u32() & 3`, which is exactly uniform over the
//! four-letter alphabet.

use std::collections::HashSet;
use std::io::Write;

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pattern::PatternSet;

const ALPHABET: [u8; 4] = *b"ACGT";

/// Pattern length: fixed, or uniform over an inclusive range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthSpec {
    Fixed(usize),
    Range(usize, usize),
}

impl LengthSpec {
    fn sample(self, rng: &mut ChaCha8Rng) -> usize {
        match self {
            LengthSpec::Fixed(n) => n,
            LengthSpec::Range(lo, hi) => lo + (rng.next_u32() as usize) % (hi - lo + 1),
        }
    }

    fn min(self) -> usize {
        match self {
            LengthSpec::Fixed(n) => n,
            LengthSpec::Range(lo, _) => lo,
        }
    }
}

/// A generation request. Same spec, same bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub seed: u64,
    pub pattern_count: usize,
    pub pattern_length: LengthSpec,
    pub text_length: usize,
}

impl GenSpec {
    pub fn patterns(seed: u64, count: usize, length: LengthSpec) -> GenSpec {
        GenSpec { seed, pattern_count: count, pattern_length: length, text_length: 0 }
    }

    pub fn text(seed: u64, length: usize) -> GenSpec {
        GenSpec { seed, pattern_count: 0, pattern_length: LengthSpec::Fixed(0), text_length: length }
    }
}

/// Pattern-set presets shaped like the five tested pattern files:
/// 1000..5000 patterns of 100 symbols (≈101KB per 1000 patterns on disk).
pub fn pattern_preset(name: &str) -> Result<(usize, LengthSpec)> {
    let k = match name {
        "ps1" => 1000,
        "ps2" => 2000,
        "ps3" => 3000,
        "ps4" => 4000,
        "ps5" => 5000,
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok((k, LengthSpec::Fixed(100)))
}

/// Corpus-size presets in bytes: ds1..ds5 are the 76..380MB tested data
/// sets (decimal MB); mini1..mini5 are a 1..16MiB tier for quick runs.
pub fn data_preset(name: &str) -> Result<usize> {
    Ok(match name {
        "ds1" => 76_000_000,
        "ds2" => 152_000_000,
        "ds3" => 228_000_000,
        "ds4" => 304_000_000,
        "ds5" => 380_000_000,
        "mini1" => 1 << 20,
        "mini2" => 2 << 20,
        "mini3" => 4 << 20,
        "mini4" => 8 << 20,
        "mini5" => 16 << 20,
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

fn gen_symbol(rng: &mut ChaCha8Rng) -> u8 {
    ALPHABET[(rng.next_u32() & 3) as usize]
}

/// Generate `pattern_count` unique patterns. A colliding pattern is
/// regenerated; after 1000 consecutive collisions the symbol space is
/// considered saturated.
pub fn gen_patterns(spec: &GenSpec) -> Result<Vec<Vec<u8>>> {
    assert!(spec.pattern_count >= 1, "pattern_count must be >= 1");
    assert!(spec.pattern_length.min() >= 1, "pattern length must be >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut seen = HashSet::with_capacity(spec.pattern_count);
    let mut out = Vec::with_capacity(spec.pattern_count);
    while out.len() < spec.pattern_count {
        let mut retries = 0;
        loop {
            let len = spec.pattern_length.sample(&mut rng);
            let pattern: Vec<u8> = (0..len).map(|_| gen_symbol(&mut rng)).collect();
            if seen.insert(pattern.clone()) {
                out.push(pattern);
                break;
            }
            retries += 1;
            if retries >= 1000 {
                return Err(Error::DuplicateSaturation {
                    requested: spec.pattern_count,
                    length: len,
                });
            }
        }
    }
    Ok(out)
}

/// Generate patterns directly as a loaded `PatternSet`.
pub fn gen_pattern_set(spec: &GenSpec) -> Result<PatternSet> {
    PatternSet::new(gen_patterns(spec)?)
}

/// Write a generated pattern file: one pattern per line, LF endings.
pub fn write_patterns(spec: &GenSpec, dest: &mut impl Write) -> Result<()> {
    let patterns = gen_patterns(spec)?;
    let mut buf = Vec::new();
    for p in &patterns {
        buf.extend_from_slice(p);
        buf.push(b'\n');
    }
    dest.write_all(&buf).map_err(|e| Error::Io { path: "<patterns>".into(), source: e })
}

/// Stream exactly `text_length` uniform DNA bytes to `dest`.
pub fn write_text(spec: &GenSpec, dest: &mut impl Write) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut remaining = spec.text_length;
    let mut buf = vec![0u8; (1 << 20).min(remaining.max(1))];
    while remaining > 0 {
        let n = buf.len().min(remaining);
        for b in &mut buf[..n] {
            *b = gen_symbol(&mut rng);
        }
        dest.write_all(&buf[..n])
            .map_err(|e| Error::Io { path: "<text>".into(), source: e })?;
        remaining -= n;
    }
    Ok(())
}

/// Generate a corpus in memory.
pub fn gen_text(spec: &GenSpec) -> Vec<u8> {
    let mut out = Vec::with_capacity(spec.text_length);
    write_text(spec, &mut out).expect("writing to a Vec cannot fail");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_spec_same_bytes() {
        let spec = GenSpec::patterns(42, 50, LengthSpec::Range(1, 20));
        assert_eq!(gen_patterns(&spec).unwrap(), gen_patterns(&spec).unwrap());

        let spec = GenSpec::text(42, 4096);
        assert_eq!(gen_text(&spec), gen_text(&spec));
    }

    #[test]
    fn different_seed_different_bytes() {
        assert_ne!(gen_text(&GenSpec::text(1, 256)), gen_text(&GenSpec::text(2, 256)));
    }

    #[test]
    fn ps1_file_size_near_101kb() {
        let (count, len) = pattern_preset("ps1").unwrap();
        let spec = GenSpec::patterns(7, count, len);
        let mut out = Vec::new();
        write_patterns(&spec, &mut out).unwrap();
        // 1000 lines of 100 symbols plus LF.
        assert_eq!(out.len(), 101_000);
    }

    #[test]
    fn single_symbol_pattern() {
        let spec = GenSpec::patterns(3, 1, LengthSpec::Fixed(1));
        let p = gen_patterns(&spec).unwrap();
        assert_eq!(p.len(), 1);
        assert!(ALPHABET.contains(&p[0][0]));
    }

    #[test]
    fn saturation_detected() {
        // Only 4 unique length-1 patterns exist.
        let spec = GenSpec::patterns(9, 5, LengthSpec::Fixed(1));
        assert!(matches!(
            gen_patterns(&spec).unwrap_err(),
            Error::DuplicateSaturation { .. }
        ));
    }

    #[test]
    fn alphabet_purity() {
        let text = gen_text(&GenSpec::text(11, 1 << 16));
        assert!(text.iter().all(|b| ALPHABET.contains(b)));

        let mut file = Vec::new();
        write_patterns(&GenSpec::patterns(11, 100, LengthSpec::Range(1, 20)), &mut file).unwrap();
        assert!(file.iter().all(|b| ALPHABET.contains(b) || *b == b'\n'));
    }

    #[test]
    fn empty_text_allowed() {
        assert!(gen_text(&GenSpec::text(5, 0)).is_empty());
    }

    #[test]
    fn symbol_frequencies_near_uniform() {
        let text = gen_text(&GenSpec::text(13, 1 << 20));
        for sym in ALPHABET {
            let freq = text.iter().filter(|&&b| b == sym).count() as f64 / text.len() as f64;
            assert!((freq / 0.25 - 1.0).abs() <= 0.01, "{}: {freq}", sym as char);
        }
    }

    #[test]
    fn presets_resolve() {
        assert_eq!(pattern_preset("ps5").unwrap().0, 5000);
        assert_eq!(data_preset("ds1").unwrap(), 76_000_000);
        assert_eq!(data_preset("mini5").unwrap(), 16 << 20);
        assert!(pattern_preset("ps9").is_err());
        assert!(data_preset("huge").is_err());
    }
}
