use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// Skew Young diagram `outer / inner` in English notation: row 1 on top,
/// column 1 on the left, both 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns of row `i` occupied by the diagram, as `start..=end`.
    pub fn row_span(&self, i: usize) -> (u32, u32) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    pub fn row_length(&self, i: usize) -> u32 {
        self.outer.part(i) - self.inner.part(i)
    }

    /// `lambda'_j - mu'_j` for columns `j = 1..=lambda_1`.
    pub fn column_heights(&self) -> Vec<u32> {
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        (1..=oc.len()).map(|j| oc.part(j) - ic.part(j)).collect()
    }

    pub fn contains_box(&self, row: usize, col: u32) -> bool {
        row >= 1 && col > self.inner.part(row) && col <= self.outer.part(row)
    }

    /// All boxes as `(row, col)`, row by row, left to right.
    pub fn boxes(&self) -> Vec<(usize, u32)> {
        (1..=self.rows())
            .flat_map(|i| {
                let (a, b) = self.row_span(i);
                (a..=b).map(move |j| (i, j))
            })
            .collect()
    }

    /// Largest column height, the "rank" of the diagram.
    pub fn max_column(&self) -> u32 {
        self.column_heights().into_iter().max().unwrap_or(0)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
