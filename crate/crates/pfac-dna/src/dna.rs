//! The four-letter DNA alphabet and its column encoding.

/// Number of symbols in the DNA alphabet; also the row stride (pitch) of
/// every transition table.
pub const PITCH: usize = 4;

/// A DNA base encoded as a table column index: A=0, T=1, C=2, G=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DnaSymbol(u8);

impl DnaSymbol {
    pub const A: DnaSymbol = DnaSymbol(0);
    pub const T: DnaSymbol = DnaSymbol(1);
    pub const C: DnaSymbol = DnaSymbol(2);
    pub const G: DnaSymbol = DnaSymbol(3);

    /// All four symbols in column order.
    pub const ALL: [DnaSymbol; PITCH] = [Self::A, Self::T, Self::C, Self::G];

    /// Encode an ASCII byte, case-insensitively. Returns `None` for anything
    /// outside {A, T, C, G}.
    #[inline]
    pub fn from_byte(b: u8) -> Option<DnaSymbol> {
        match b {
            b'A' | b'a' => Some(Self::A),
            b'T' | b't' => Some(Self::T),
            b'C' | b'c' => Some(Self::C),
            b'G' | b'g' => Some(Self::G),
            _ => None,
        }
    }

    /// Column index in 0..4.
    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    /// Upper-case ASCII letter for this symbol.
    pub fn to_byte(self) -> u8 {
        b"ATCG"[self.0 as usize]
    }
}
