use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{Partition, SkewShape};
use crate::error::{Error, Result};

/// Connected skew diagram without 2x2 blocks whose columns have height at
/// most `n`, held in canonical position.
///
/// Rows `a_1..a_r` are read top to bottom; each lower row extends further
/// left and shares exactly one column with the row above. Columns
/// `b_1..b_s` are read right to left. Canonical position puts the
/// bottom-left box in column 1.
///
/// Internally a non-empty strip is also described by its step word: starting
/// from the top-right box, each further box lies either directly below the
/// previous one (`true`) or directly to its left (`false`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorderStrip {
    n: u32,
    rows: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct StripJson {
    rows: Vec<u32>,
    cols: Vec<u32>,
    n: u32,
}

impl Serialize for BorderStrip {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StripJson {
            rows: self.rows.clone(),
            cols: self.cols(),
            n: self.n,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BorderStrip {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = StripJson::deserialize(d)?;
        let strip = BorderStrip::from_rows(&raw.rows, raw.n).map_err(serde::de::Error::custom)?;
        if strip.cols() != raw.cols {
            return Err(serde::de::Error::custom(
                "rows and cols describe different strips",
            ));
        }
        Ok(strip)
    }
}

impl BorderStrip {
    pub fn empty(n: u32) -> Self {
        BorderStrip {
            n,
            rows: Vec::new(),
        }
    }

    /// Validates an arbitrary skew shape and returns it as a strip.
    pub fn validate(shape: &SkewShape, n: u32) -> Result<Self> {
        let filled: Vec<usize> = (1..=shape.rows())
            .filter(|&i| shape.row_length(i) > 0)
            .collect();
        let Some((&first, rest)) = filled.split_first() else {
            return Ok(BorderStrip::empty(n));
        };
        let mut prev = first;
        for &i in rest {
            let (start, _) = shape.row_span(i);
            if i != prev + 1 {
                return Err(Error::Disconnected(i, start as usize));
            }
            // Rows i-1 and i share columns (start of row i-1) ..= (end of row i).
            let (above_start, _) = shape.row_span(prev);
            let (_, end) = shape.row_span(i);
            let overlap = end as i64 - above_start as i64 + 1;
            if overlap <= 0 {
                return Err(Error::Disconnected(i, start as usize));
            }
            if overlap >= 2 {
                return Err(Error::TwoByTwo(prev, above_start as usize));
            }
            prev = i;
        }
        for (j, &h) in shape.column_heights().iter().enumerate() {
            if h > n {
                let col = j as u32 + 1;
                let row = (1..=shape.rows())
                    .find(|&i| shape.contains_box(i, col))
                    .unwrap_or(1);
                return Err(Error::ColumnTooTall {
                    row,
                    col: col as usize,
                    height: h,
                    n,
                });
            }
        }
        let rows = filled.iter().map(|&i| shape.row_length(i)).collect();
        Ok(BorderStrip { n, rows })
    }

    pub fn from_rows(rows: &[u32], n: u32) -> Result<Self> {
        if let Some(pos) = rows.iter().position(|&a| a == 0) {
            return Err(Error::Domain(format!(
                "row {} of a strip must be non-empty",
                pos + 1
            )));
        }
        Self::validate(&canonical_shape(rows), n)
    }

    pub fn from_cols(cols: &[u32], n: u32) -> Result<Self> {
        if cols.contains(&0) {
            return Err(Error::Domain("columns of a strip must be non-empty".into()));
        }
        if cols.is_empty() {
            return Ok(BorderStrip::empty(n));
        }
        let word: Vec<bool> = cols
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| {
                let sep = (i > 0).then_some(false);
                sep.into_iter()
                    .chain(std::iter::repeat_n(true, b as usize - 1))
            })
            .collect();
        Self::from_word(&word, n)
    }

    /// Builds the non-empty strip whose step word is `word` (length = size - 1).
    pub fn from_word(word: &[bool], n: u32) -> Result<Self> {
        let mut rows = vec![1u32];
        for &down in word {
            if down {
                rows.push(1);
            } else {
                *rows.last_mut().unwrap() += 1;
            }
        }
        let strip = BorderStrip { n, rows };
        if let Some((idx, &h)) = strip.cols().iter().enumerate().find(|(_, &h)| h > n) {
            let (row, col) = strip.column_top(idx);
            return Err(Error::ColumnTooTall {
                row,
                col,
                height: h,
                n,
            });
        }
        Ok(strip)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn word(&self) -> Vec<bool> {
        let mut w = Vec::new();
        for (i, &a) in self.rows.iter().enumerate() {
            if i > 0 {
                w.push(true);
            }
            w.extend(std::iter::repeat_n(false, a as usize - 1));
        }
        w
    }

    /// Column heights, rightmost first.
    pub fn cols(&self) -> Vec<u32> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut cols = vec![1u32];
        for down in self.word() {
            if down {
                *cols.last_mut().unwrap() += 1;
            } else {
                cols.push(1);
            }
        }
        cols
    }

    /// Leftmost column shorter than `n` (the empty strip counts as reduced).
    pub fn is_reduced(&self) -> bool {
        self.cols().last().is_none_or(|&b| b < self.n)
    }

    pub fn shape(&self) -> SkewShape {
        canonical_shape(&self.rows)
    }

    /// Canonical coordinates of the top box of column `idx` (0 = rightmost).
    fn column_top(&self, idx: usize) -> (usize, usize) {
        let shape = self.shape();
        let width = shape.outer().part(1) as usize;
        let col = width - idx;
        let row = (1..=shape.rows())
            .find(|&i| shape.contains_box(i, col as u32))
            .unwrap_or(1);
        (row, col)
    }

    /// Row-form energy `(n-1)|k|^2/(2n) + sum_i (i - r) a_i`.
    pub fn energy_rows(&self) -> Rational64 {
        let n = self.n as i64;
        let size = self.size() as i64;
        let r = self.rows.len() as i64;
        let tail: i64 = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as i64 + 1 - r) * a as i64)
            .sum();
        Rational64::new((n - 1) * size * size, 2 * n) + Rational64::from_integer(tail)
    }

    /// Column-form energy `|k|(n-|k|)/(2n) + sum_i (s - i) b_i`.
    pub fn energy_cols(&self) -> Rational64 {
        let n = self.n as i64;
        let size = self.size() as i64;
        let cols = self.cols();
        let s = cols.len() as i64;
        let tail: i64 = cols
            .iter()
            .enumerate()
            .map(|(i, &b)| (s - i as i64 - 1) * b as i64)
            .sum();
        Rational64::new(size * (n - size), 2 * n) + Rational64::from_integer(tail)
    }

    /// The energy statistic. Both closed forms are evaluated; on reduced
    /// strips they must coincide and a disagreement is reported as an
    /// internal error. Non-reduced strips return the row form.
    pub fn energy(&self) -> Result<Rational64> {
        let e = self.energy_rows();
        if self.is_reduced() {
            let e2 = self.energy_cols();
            if e != e2 {
                return Err(Error::Internal(format!(
                    "row energy {e} != column energy {e2} for {self}"
                )));
            }
        }
        Ok(e)
    }

    /// Appends one full column of height `n` at the lower left.
    pub fn stabilized(&self) -> BorderStrip {
        let mut cols = self.cols();
        cols.push(self.n);
        BorderStrip::from_cols(&cols, self.n).expect("a full column keeps the strip valid")
    }

    /// Removes full columns from the left end.
    pub fn reduced(&self) -> BorderStrip {
        let mut cols = self.cols();
        while cols.last() == Some(&self.n) {
            cols.pop();
        }
        BorderStrip::from_cols(&cols, self.n).expect("removing columns keeps the strip valid")
    }
}

/// Skew shape for the given rows with the bottom-left box in column 1.
fn canonical_shape(rows: &[u32]) -> SkewShape {
    let r = rows.len();
    let mut outer = vec![0u32; r];
    let mut inner = vec![0u32; r];
    for i in (0..r).rev() {
        inner[i] = if i + 1 < r { outer[i + 1] - 1 } else { 0 };
        outer[i] = inner[i] + rows[i];
    }
    let outer = Partition::new(outer).expect("rows extend leftwards");
    let inner = Partition::new(inner).expect("rows extend leftwards");
    SkewShape::new(outer, inner).expect("inner fits inside outer")
}

/// All strips of the given size with columns of height at most `n`. With
/// `reduced`, the leftmost column must also be shorter than `n`.
pub fn enumerate_border_strips(n: u32, size: u32, reduced: bool) -> Vec<BorderStrip> {
    if size == 0 {
        return vec![BorderStrip::empty(n)];
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(size as usize);
    extend_words(n, size as usize - 1, reduced, 0, &mut word, &mut out);
    out.sort();
    out
}

fn extend_words(
    n: u32,
    len: usize,
    reduced: bool,
    run: u32,
    word: &mut Vec<bool>,
    out: &mut Vec<BorderStrip>,
) {
    if word.len() == len {
        let cap = if reduced { n.saturating_sub(2) } else { n - 1 };
        if run <= cap {
            out.push(BorderStrip::from_word(word, n).expect("runs are bounded"));
        }
        return;
    }
    word.push(false);
    extend_words(n, len, reduced, 0, word, out);
    word.pop();
    if run + 1 < n {
        word.push(true);
        extend_words(n, len, reduced, run + 1, word, out);
        word.pop();
    }
}

impl fmt::Display for BorderStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        write!(f, "<{}>", rows.join(","))
    }
}
