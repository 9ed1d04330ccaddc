use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sl_n` weight in fundamental-weight coordinates `(m_1, ..., m_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightFW(pub Vec<i64>);

impl WeightFW {
    pub fn zero(n: u32) -> Self {
        WeightFW(vec![0; n as usize - 1])
    }

    /// The fundamental weight `Lambda_i` (`Lambda_0` is the zero weight).
    pub fn fundamental(n: u32, i: u32) -> Self {
        let mut w = Self::zero(n);
        if i > 0 {
            w.0[i as usize - 1] = 1;
        }
        w
    }

    /// From exponents `c_1..c_n` of `x^c`: `m_j = c_j - c_{j+1}`.
    pub fn from_exponents<T: Copy + Into<i64>>(c: &[T]) -> Self {
        WeightFW(c.windows(2).map(|p| p[0].into() - p[1].into()).collect())
    }

    pub fn rank(&self) -> u32 {
        self.0.len() as u32 + 1
    }

    /// `sum_i i m_i mod n`.
    pub fn class(&self) -> u32 {
        let n = self.rank() as i64;
        let s: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, m)| (i as i64 + 1) * m)
            .sum();
        s.rem_euclid(n) as u32
    }

    /// `(lambda, eps_i)` for `i = 1..=n`, using
    /// `(Lambda_j, eps_i) = [i <= j] - j/n`.
    pub fn epsilon_pairings(&self) -> Vec<Rational64> {
        let n = self.rank() as i64;
        let weighted: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(j, m)| (j as i64 + 1) * m)
            .sum();
        (1..=n as usize)
            .map(|i| {
                let above: i64 = self.0.iter().skip(i - 1).sum();
                Rational64::from_integer(above) - Rational64::new(weighted, n)
            })
            .collect()
    }
}

impl fmt::Display for WeightFW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(lambda, lambda) = sum_{i,j} m_i (min(i,j) - ij/n) m_j`.
pub fn weight_norm(w: &WeightFW) -> Rational64 {
    let n = w.rank() as i64;
    let mut acc = Rational64::from_integer(0);
    for (i, &a) in w.0.iter().enumerate() {
        for (j, &b) in w.0.iter().enumerate() {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            acc += Rational64::new(a * b * (i.min(j) * n - i * j), n);
        }
    }
    acc
}

/// Conformal dimension `k(n-k)/(2n)` of the level-1 highest weight `Lambda_k`.
pub fn conformal_dimension(n: u32, k: u32) -> Result<Rational64> {
    if n < 2 || k >= n {
        return Err(Error::Domain(format!(
            "need n >= 2 and 0 <= k < n, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(Rational64::new(k * (n - k), 2 * n))
}
