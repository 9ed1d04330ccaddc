use std::collections::BTreeMap;
use std::fmt;

use super::{BorderStrip, RapiditySeq};
use crate::error::{Error, Result};

/// Semi-infinite 0/1 word with fewer than `n` consecutive 1's that ends in
/// the periodic vacuum pattern: position `i` is 0 exactly when
/// `i = k mod n`.
///
/// The text form lists a prefix followed by `|`. The prefix has at least `n`
/// bits and its last `n` bits are one period of the tail, which fixes `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Motif {
    n: u32,
    k: u32,
    /// Bits at positions `1..=cutoff`, canonical (shortest) prefix.
    bits: Vec<bool>,
}

impl Motif {
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let body = text
            .trim()
            .strip_suffix('|')
            .ok_or_else(|| Error::InvalidMotif(format!("{text:?} must end with '|'")))?;
        let bits: Vec<bool> = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidMotif(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<_>>()?;
        if n < 2 || bits.len() < n as usize {
            return Err(Error::InvalidMotif(format!(
                "prefix needs at least n = {n} bits"
            )));
        }
        let period = &bits[bits.len() - n as usize..];
        let zeros: Vec<usize> = period
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i)
            .collect();
        let [z] = zeros[..] else {
            return Err(Error::InvalidMotif(format!(
                "last {n} bits must contain exactly one 0 to fix the periodic tail"
            )));
        };
        let position = (bits.len() - n as usize + z + 1) as u32;
        Self::from_bits(n, position % n, &bits)
    }

    /// Motif with the given explicit bits at positions `1..=bits.len()` and
    /// the class-`k` tail afterwards.
    pub fn from_bits(n: u32, k: u32, bits: &[bool]) -> Result<Self> {
        let entries = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64 + 1)
            .collect();
        let seq = RapiditySeq::new(n, k, bits.len() as u64, entries).map_err(|e| match e {
            Error::ConsecutiveRun { n, at } => {
                Error::InvalidMotif(format!("{n} consecutive 1's ending at {at}"))
            }
            other => other,
        })?;
        Ok(Self::from_rapidities(&seq))
    }

    /// The 1-positions of the motif are exactly the rapidities.
    pub fn from_rapidities(seq: &RapiditySeq) -> Self {
        let bits = (1..=seq.cutoff()).map(|m| seq.contains(m)).collect();
        Motif {
            n: seq.n(),
            k: seq.class(),
            bits,
        }
    }

    pub fn to_rapidities(&self) -> RapiditySeq {
        let entries = self
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64 + 1)
            .collect();
        RapiditySeq::new(self.n, self.k, self.bits.len() as u64, entries)
            .expect("validated on construction")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn class(&self) -> u32 {
        self.k
    }

    /// `d_i` for 1-based `i`.
    pub fn bit(&self, i: u64) -> bool {
        if i == 0 {
            return false;
        }
        match self.bits.get(i as usize - 1) {
            Some(&b) => b,
            None => i % self.n as u64 != self.k as u64,
        }
    }

    /// Square construction: square 0 sits at the origin, and square `i` goes
    /// directly under square `i-1` when `d_i = 1`, otherwise directly to its
    /// left. Column heights are read off the coordinates, the column cut by
    /// the finite horizon is discarded, and trailing full columns are
    /// removed.
    pub fn to_strip(&self) -> BorderStrip {
        let n = self.n;
        let horizon = self.bits.len() as u64 + 3 * n as u64;
        let mut heights: BTreeMap<i64, u32> = BTreeMap::new();
        let (mut x, mut _y) = (0i64, 0i64);
        heights.insert(0, 1);
        for i in 1..=horizon {
            if self.bit(i) {
                _y += 1;
            } else {
                x -= 1;
            }
            *heights.entry(x).or_insert(0) += 1;
        }
        // Right to left, then drop the unfinished leftmost column.
        let mut cols: Vec<u32> = heights.values().rev().copied().collect();
        cols.pop();
        while cols.last() == Some(&n) {
            cols.pop();
        }
        BorderStrip::from_cols(&cols, n).expect("admissible motifs give strips")
    }
}

impl fmt::Display for Motif {
    /// Shortest prefix of length at least `n` whose last `n` bits are one
    /// period of the tail.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as u64;
        let tail = |i: u64| i % n != self.k as u64;
        let mut len = (self.bits.len() as u64).max(n);
        while !(len - n + 1..=len).all(|i| self.bit(i) == tail(i)) {
            len += 1;
        }
        let s: String = (1..=len)
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect();
        write!(f, "{s}|")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_border_strips;

    #[test]
    fn text_examples() {
        let m = Motif::parse("10|", 2).unwrap();
        assert_eq!(m.to_rapidities(), RapiditySeq::vacuum(2, 0).unwrap());
        assert_eq!(m.to_strip(), BorderStrip::empty(2));
        let even = Motif::parse("01|", 2).unwrap();
        assert_eq!(
            even.to_rapidities().iter().take(3).collect::<Vec<_>>(),
            vec![2, 4, 6]
        );
        assert_eq!(even.to_strip(), BorderStrip::from_rows(&[1], 2).unwrap());
        assert_eq!(even.to_string(), "01|");
    }

    #[test]
    fn rejects_bad_text() {
        assert!(Motif::parse("10", 2).is_err());
        assert!(Motif::parse("1|", 2).is_err());
        assert!(Motif::parse("11|", 2).is_err());
        assert!(Motif::parse("0110|", 2).is_err());
        assert!(Motif::parse("1a|", 2).is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["10|", "0010|", "110|", "0101|", "1011011|"] {
            let n = if text.contains("11") { 3 } else { 2 };
            let m = Motif::parse(text, n).unwrap();
            assert_eq!(Motif::parse(&m.to_string(), n).unwrap(), m, "{text}");
        }
    }

    #[test]
    fn square_construction_agrees_with_rapidity_route() {
        for n in 2..=4 {
            for size in 0..=7 {
                for k in enumerate_border_strips(n, size, true) {
                    let seq = RapiditySeq::from_strip(&k).unwrap();
                    let motif = Motif::from_rapidities(&seq);
                    assert_eq!(motif.to_strip(), k);
                    assert_eq!(motif.to_rapidities(), seq);
                }
            }
        }
    }
}
