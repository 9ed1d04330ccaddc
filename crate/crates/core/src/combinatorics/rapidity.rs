use std::fmt;

use super::BorderStrip;
use crate::error::{Error, Result};

/// Semi-infinite strictly increasing sequence of positive integers that
/// agrees with the class-`k` vacuum `{m : m != k mod n}` beyond `cutoff`.
///
/// Values are kept canonical: `cutoff` is the smallest index past which the
/// vacuum pattern holds, so structural equality is sequence equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RapiditySeq {
    n: u32,
    k: u32,
    cutoff: u64,
    entries: Vec<u64>,
}

impl RapiditySeq {
    /// `entries` lists every member in `1..=cutoff`; beyond `cutoff` the
    /// sequence follows the class-`k` vacuum.
    pub fn new(n: u32, k: u32, cutoff: u64, entries: Vec<u64>) -> Result<Self> {
        if n < 2 || k >= n {
            return Err(Error::InvalidRapidity(format!(
                "need n >= 2 and 0 <= k < n, got n={n}, k={k}"
            )));
        }
        if entries.first() == Some(&0) || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRapidity(
                "entries must be strictly increasing positive integers".into(),
            ));
        }
        if entries.last().is_some_and(|&e| e > cutoff) {
            return Err(Error::InvalidRapidity(format!(
                "entry beyond the cutoff {cutoff}"
            )));
        }
        let mut seq = RapiditySeq {
            n,
            k,
            cutoff,
            entries,
        };
        // The tail itself never has n consecutive members, so checking a
        // window of n past the cutoff covers every run.
        let mut run = 0u32;
        for m in 1..=cutoff + n as u64 {
            if seq.contains(m) {
                run += 1;
                if run >= n {
                    return Err(Error::ConsecutiveRun { n, at: m });
                }
            } else {
                run = 0;
            }
        }
        seq.canonicalize();
        Ok(seq)
    }

    /// `{m >= 1 : m != k mod n}`.
    pub fn vacuum(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, 0, Vec::new())
    }

    /// Parses `"e1,e2,...|k"`: the listed entries, then the class-`k` vacuum
    /// beyond the last listed entry.
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let (head, class) = text
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("rapidity sequence {text:?} lacks '|k'")))?;
        let k: u32 = class
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad class {class:?}")))?;
        let entries: Vec<u64> = head
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        let cutoff = entries.last().copied().unwrap_or(0);
        Self::new(n, k, cutoff, entries)
    }

    fn canonicalize(&mut self) {
        while self.cutoff > 0 {
            let last_is_member = self.entries.last() == Some(&self.cutoff);
            if last_is_member != self.in_tail(self.cutoff) {
                break;
            }
            if last_is_member {
                self.entries.pop();
            }
            self.cutoff -= 1;
        }
    }

    fn in_tail(&self, m: u64) -> bool {
        m % self.n as u64 != self.k as u64
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn class(&self) -> u32 {
        self.k
    }

    /// Smallest index past which the vacuum pattern holds.
    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    /// Members in `1..=cutoff`.
    pub fn prefix(&self) -> &[u64] {
        &self.entries
    }

    pub fn contains(&self, m: u64) -> bool {
        if m == 0 {
            false
        } else if m <= self.cutoff {
            self.entries.binary_search(&m).is_ok()
        } else {
            self.in_tail(m)
        }
    }

    /// Members in increasing order (an infinite iterator).
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (1..).filter(move |&m| self.contains(m))
    }

    /// The `i`-th member, 1-based.
    pub fn nth(&self, i: usize) -> u64 {
        self.iter().nth(i - 1).expect("sequence is infinite")
    }

    /// Number of members in `1..=bound`.
    pub fn count_upto(&self, bound: u64) -> u64 {
        (1..=bound).filter(|&m| self.contains(m)).count() as u64
    }

    /// Reduced strip whose stabilized rows are the successive gaps
    /// `m_i - m_{i-1}` (with `m_0 = 0`).
    pub fn to_strip(&self) -> BorderStrip {
        let n = self.n;
        // Enough rows to reach at least two complete stabilizing columns
        // beyond the cutoff.
        let horizon = self.cutoff + 3 * n as u64;
        let members: Vec<u64> = self.iter().take_while(|&m| m <= horizon).collect();
        let rows: Vec<u32> = members
            .iter()
            .scan(0u64, |prev, &m| {
                let gap = (m - *prev) as u32;
                *prev = m;
                Some(gap)
            })
            .collect();
        let long = BorderStrip::from_rows(&rows, n).expect("admissible sequences give strips");
        // Tail rows imply full columns; the last column may be cut short by
        // the finite horizon, so drop it before stripping full columns.
        let mut cols = long.cols();
        cols.pop();
        while cols.last() == Some(&n) {
            cols.pop();
        }
        BorderStrip::from_cols(&cols, n).expect("subsequence of valid columns")
    }

    /// Inverse of [`RapiditySeq::to_strip`]; requires a reduced strip.
    pub fn from_strip(strip: &BorderStrip) -> Result<Self> {
        let n = strip.n();
        if !strip.is_reduced() {
            return Err(Error::NotReduced(n));
        }
        let k = strip.size() % n;
        // Stabilized rows: a_1..a_{r-1}, a_r + 1, then full columns add
        // (n - 2) unit rows followed by a row of two, repeatedly. From the
        // empty strip the first column contributes n - 1 unit rows.
        let mut rows: Vec<u32> = strip.rows().to_vec();
        match rows.last_mut() {
            Some(last) => *last += 1,
            None => rows.push(1),
        }
        rows.extend(std::iter::repeat_n(1, n as usize - 2));
        for _ in 0..2 {
            rows.push(2);
            rows.extend(std::iter::repeat_n(1, n as usize - 2));
        }
        let entries: Vec<u64> = rows
            .iter()
            .scan(0u64, |acc, &a| {
                *acc += a as u64;
                Some(*acc)
            })
            .collect();
        let cutoff = *entries.last().unwrap();
        let seq = Self::new(n, k, cutoff, entries)?;
        if seq.cutoff() + n as u64 > cutoff {
            return Err(Error::Internal(format!(
                "stabilized rows of {strip} do not reach the vacuum tail"
            )));
        }
        Ok(seq)
    }
}

impl fmt::Display for RapiditySeq {
    /// Lists members up to the first member at or past the cutoff, then the
    /// class, matching [`RapiditySeq::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.iter().find(|&m| m >= self.cutoff).expect("infinite");
        let shown: Vec<String> = self
            .iter()
            .take_while(|&m| m <= last)
            .map(|m| m.to_string())
            .collect();
        write!(f, "{}|{}", shown.join(","), self.k)
    }
}
