//! Ordered pattern sets with 1-based pattern ids.

use std::collections::HashMap;

use crate::dna::DnaSymbol;
use crate::error::{Error, Result};

/// An ordered, duplicate-free list of DNA patterns. Pattern ids are 1-based;
/// id 0 is reserved to mean "no pattern" in transition cells.
#[derive(Debug, Clone)]
pub struct PatternSet {
    patterns: Vec<Vec<DnaSymbol>>,
}

impl PatternSet {
    /// Build from ASCII pattern strings (upper or lower case). Rejects empty
    /// patterns, non-DNA characters, and duplicates.
    pub fn new<S: AsRef<[u8]>>(patterns: impl IntoIterator<Item = S>) -> Result<PatternSet> {
        let mut seen: HashMap<Vec<DnaSymbol>, u32> = HashMap::new();
        let mut out = Vec::new();
        for (idx, raw) in patterns.into_iter().enumerate() {
            let id = idx as u32 + 1;
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(Error::EmptyPattern { id });
            }
            let mut encoded = Vec::with_capacity(raw.len());
            for (col, &b) in raw.iter().enumerate() {
                match DnaSymbol::from_byte(b) {
                    Some(s) => encoded.push(s),
                    None => {
                        return Err(Error::NonDnaSymbol {
                            ch: b as char,
                            line: id as usize,
                            column: col + 1,
                        })
                    }
                }
            }
            if let Some(&first) = seen.get(&encoded) {
                return Err(Error::DuplicatePattern {
                    first_id: first,
                    second_id: id,
                });
            }
            seen.insert(encoded.clone(), id);
            out.push(encoded);
        }
        if out.is_empty() {
            return Err(Error::EmptyFile);
        }
        Ok(PatternSet { patterns: out })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Pattern for a 1-based id. Panics on id 0 or out of range.
    pub fn get(&self, id: u32) -> &[DnaSymbol] {
        &self.patterns[(id - 1) as usize]
    }

    /// Iterate `(id, pattern)` pairs in id order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &[DnaSymbol])> {
        self.patterns
            .iter()
            .enumerate()
            .map(|(i, p)| (i as u32 + 1, p.as_slice()))
    }

    /// Length of the longest pattern.
    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sum of all pattern lengths; `1 + total_len()` bounds the trie size.
    pub fn total_len(&self) -> usize {
        self.patterns.iter().map(Vec::len).sum()
    }

    /// Upper-case ASCII rendering of a pattern id.
    pub fn to_string(&self, id: u32) -> String {
        self.get(id).iter().map(|s| s.to_byte() as char).collect()
    }
}
