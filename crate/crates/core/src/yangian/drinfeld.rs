use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};

/// Drinfel'd polynomials `P_1, ..., P_{n-1}` of a `Y(sl_n)` module, stored
/// as root multisets. Roots are half-integers kept as integer counts of
/// halves, so `3` stands for `3/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldPolys {
    n: u32,
    roots: Vec<Vec<i64>>,
}

impl DrinfeldPolys {
    pub fn trivial(n: u32) -> Self {
        DrinfeldPolys {
            n,
            roots: vec![Vec::new(); n.saturating_sub(1) as usize],
        }
    }

    fn push(&mut self, i: u32, halves: i64) {
        let slot = &mut self.roots[i as usize - 1];
        let at = slot.partition_point(|&r| r <= halves);
        slot.insert(at, halves);
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Roots of `P_i` in halves, ascending. `i` is 1-based.
    pub fn roots(&self, i: u32) -> &[i64] {
        &self.roots[i as usize - 1]
    }

    pub fn is_trivial(&self) -> bool {
        self.roots.iter().all(Vec::is_empty)
    }

    /// Whether every `P_i` has roots forming one string with unit spacing.
    pub fn roots_form_strings(&self) -> bool {
        self.roots
            .iter()
            .all(|r| r.windows(2).all(|w| w[1] - w[0] == 2))
    }
}

fn fmt_half(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

impl fmt::Display for DrinfeldPolys {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, roots) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "P_{} = ", i + 1)?;
            if roots.is_empty() {
                write!(f, "1")?;
            }
            for &r in roots {
                match r.signum() {
                    0 => write!(f, "(u)")?,
                    1 => write!(f, "(u - {})", fmt_half(r))?,
                    _ => write!(f, "(u + {})", fmt_half(-r))?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for DrinfeldPolys {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DrinfeldPolys", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("P", &self.roots)?;
        st.end()
    }
}

/// Drinfel'd polynomials of the evaluation module of the `gl_n` irrep with
/// highest weight `lam`: `P_i` has the roots `(i-1)/2 + lam_i - j` for
/// `0 <= j < lam_i - lam_{i+1}`.
pub fn drinfeld_evaluation(lam: &Partition, n: u32) -> Result<DrinfeldPolys> {
    if lam.len() > n as usize {
        return Err(Error::Domain(format!("{lam:?} has more than {n} parts")));
    }
    let mut out = DrinfeldPolys::trivial(n);
    for i in 1..n {
        let (top, next) = (lam.part(i as usize) as i64, lam.part(i as usize + 1) as i64);
        for j in 0..top - next {
            out.push(i, (i as i64 - 1) + 2 * top - 2 * j);
        }
    }
    Ok(out)
}

/// Drinfel'd polynomials of the tame module labelled by a skew diagram: a
/// column `j` of height `h < n` contributes the root
/// `(lam'_j + mu'_j)/2 + j - 1/2` to `P_h`.
pub fn drinfeld_tame(shape: &SkewShape, n: u32) -> Result<DrinfeldPolys> {
    let outer = shape.outer().conjugate();
    let inner = shape.inner().conjugate();
    let mut out = DrinfeldPolys::trivial(n);
    for j in 1..=outer.len() {
        let (top, bottom) = (inner.part(j) as i64, outer.part(j) as i64);
        let height = (bottom - top) as u32;
        if height > n {
            return Err(Error::ColumnTooTall {
                row: top as usize + 1,
                col: j,
                height,
                n,
            });
        }
        if (1..n).contains(&height) {
            out.push(height, bottom + top + 2 * j as i64 - 1);
        }
    }
    Ok(out)
}
