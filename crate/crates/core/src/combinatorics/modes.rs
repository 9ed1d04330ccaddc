use super::{BorderStrip, Partition};
use crate::error::{Error, Result};

/// Strip built from a weakly increasing mode list: each new square sits on
/// top of the previous one when its mode repeats, and to the right of it
/// when the mode increases. Equal modes therefore stack into one column and
/// columns appear left to right in increasing mode order.
pub fn modes_to_strip(modes: &[u32], n: u32) -> Result<BorderStrip> {
    if modes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("modes must be weakly increasing".into()));
    }
    let Some(&top) = modes.last() else {
        return Ok(BorderStrip::empty(n));
    };
    let mut counts = vec![0u32; top as usize + 1];
    for &m in modes {
        counts[m as usize] += 1;
    }
    if let Some(gap) = counts.iter().position(|&c| c == 0) {
        return Err(Error::ModeGap(gap as u32));
    }
    // Columns are stored right to left.
    counts.reverse();
    let strip = BorderStrip::from_cols(&counts, n)?;

    let cols = strip.cols();
    let s = cols.len();
    let weighted: u64 = cols
        .iter()
        .enumerate()
        .map(|(i, &b)| (s - i - 1) as u64 * b as u64)
        .sum();
    let mode_sum: u64 = modes.iter().map(|&m| m as u64).sum();
    if strip.size() as usize != modes.len() || weighted != mode_sum {
        return Err(Error::Internal(format!(
            "mode construction broke its invariants for {modes:?}"
        )));
    }
    Ok(strip)
}

/// Border strip attached to an `sl_2` highest-weight label: a partition
/// with at most `spinons` parts together with the spinon number.
///
/// With `m_0 = spinons - l(lambda)` and `r - 1` the largest part, the rows
/// are `a_i = m_{i-1} + 2 - [i = 1] - [i = r]`.
pub fn sl2_partition_to_strip(lam: &Partition, spinons: u32) -> Result<BorderStrip> {
    if lam.len() > spinons as usize {
        return Err(Error::TooManyParts {
            parts: lam.len(),
            spinons,
        });
    }
    let m0 = spinons - lam.len() as u32;
    let mult = |i: u32| if i == 0 { m0 } else { lam.multiplicity(i) };
    let largest = lam.part(1);
    if lam.is_empty() && spinons == 0 {
        return Ok(BorderStrip::empty(2));
    }
    let r = largest + 1;
    let rows: Vec<u32> = (1..=r)
        .map(|i| mult(i - 1) + 2 - u32::from(i == 1) - u32::from(i == r))
        .collect();
    let strip = BorderStrip::from_rows(&rows, 2)?;

    if strip.size() != spinons + 2 * (r - 1) {
        return Err(Error::Internal(format!(
            "size of {strip} is not N + 2(r-1)"
        )));
    }
    let expected =
        num_rational::Rational64::new(4 * lam.size() as i64 + (spinons * spinons) as i64, 4);
    if strip.energy_rows() != expected {
        return Err(Error::Internal(format!(
            "energy of {strip} differs from |lambda| + N^2/4"
        )));
    }
    Ok(strip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mode_examples() {
        assert_eq!(modes_to_strip(&[0], 2).unwrap().rows(), &[1]);
        assert_eq!(modes_to_strip(&[0, 0, 1], 2).unwrap().cols(), vec![1, 2]);
        assert_eq!(modes_to_strip(&[0, 1, 2], 3).unwrap().cols(), vec![1, 1, 1]);
        assert_eq!(modes_to_strip(&[0, 2], 3), Err(Error::ModeGap(1)));
        assert_eq!(modes_to_strip(&[1], 3), Err(Error::ModeGap(0)));
        assert!(modes_to_strip(&[0, 0, 0], 2).is_err());
    }

    fn admissible_modes(len: usize, max_mult: u32) -> Vec<Vec<u32>> {
        // Compositions of len into parts <= max_mult give the column heights.
        fn go(rem: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rem == 0 {
                let modes = cur
                    .iter()
                    .enumerate()
                    .flat_map(|(v, &c)| std::iter::repeat_n(v as u32, c as usize));
                out.push(modes.collect());
                return;
            }
            for c in 1..=cap.min(rem as u32) {
                cur.push(c);
                go(rem - c as usize, cap, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(len, max_mult, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn mode_invariants_on_census() {
        for n in 2..=4 {
            for len in 0..=6 {
                for modes in admissible_modes(len, n) {
                    if modes.last().is_some_and(|&m| m > 4) {
                        continue;
                    }
                    modes_to_strip(&modes, n).unwrap();
                }
            }
        }
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(
            sl2_partition_to_strip(&Partition::empty(), 0).unwrap(),
            BorderStrip::empty(2)
        );
        let k = sl2_partition_to_strip(&p(&[1]), 1).unwrap();
        assert_eq!(k.rows(), &[1, 2]);
        assert_eq!(k.energy().unwrap(), Rational64::new(5, 4));
        let k = sl2_partition_to_strip(&Partition::empty(), 2).unwrap();
        assert_eq!(k.rows(), &[2]);
        assert_eq!(k.energy().unwrap(), Rational64::from_integer(1));
        let k = sl2_partition_to_strip(&p(&[2, 1]), 3).unwrap();
        assert_eq!(k.energy().unwrap(), Rational64::new(21, 4));
        assert!(sl2_partition_to_strip(&p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn sl2_energy_identity_on_census() {
        for size in 0..=6 {
            for lam in Partition::all_of(size) {
                for n in lam.len() as u32..=6 {
                    let k = sl2_partition_to_strip(&lam, n).unwrap();
                    assert!(k.is_reduced());
                }
            }
        }
    }
}
