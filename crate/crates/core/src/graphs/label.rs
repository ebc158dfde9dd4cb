use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Widest label the packed representation can hold.
pub const MAX_LABEL_BITS: usize = 63;

/// A binary string `x_1 x_2 … x_n`.
///
/// Position `x_i` (1-based, leftmost character first) lives in bit `i - 1`
/// of `bits`. Ordering is lexicographic on the printed string, which is the
/// vertex order used by every generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitLabel {
    bits: u64,
    len: u8,
}

impl BitLabel {
    /// The empty label `ε`.
    pub const EMPTY: BitLabel = BitLabel { bits: 0, len: 0 };

    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_LABEL_BITS, "label length {len} too large");
        let mask = if len == 0 { 0 } else { (1u64 << len) - 1 };
        assert_eq!(bits & !mask, 0, "bits set beyond label length");
        BitLabel { bits, len: len as u8 }
    }

    pub fn zeros(len: usize) -> Self {
        BitLabel::new(0, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Value of `x_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.len());
        self.bits >> (i - 1) & 1 == 1
    }

    pub fn flipped(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= self.len());
        BitLabel {
            bits: self.bits ^ (1 << (i - 1)),
            len: self.len,
        }
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn hamming(&self, other: &BitLabel) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// True when the string contains the substring `11`.
    pub fn has_adjacent_ones(&self) -> bool {
        self.bits & (self.bits >> 1) != 0
    }

    /// Numeric key whose order matches string order (x_1 most significant).
    pub fn lex_key(&self) -> u64 {
        if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.len)
        }
    }
}

impl Ord for BitLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for BitLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("ε");
        }
        for i in 1..=self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitLabel({self})")
    }
}

impl FromStr for BitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" {
            return Ok(BitLabel::EMPTY);
        }
        if s.chars().count() > MAX_LABEL_BITS {
            return Err(Error::Parse {
                line: 0,
                msg: format!("label `{s}` longer than {MAX_LABEL_BITS} bits"),
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid character `{c}` in label `{s}`"),
                    })
                }
            }
        }
        Ok(BitLabel::new(bits, s.len()))
    }
}
