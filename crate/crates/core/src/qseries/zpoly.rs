use num_bigint::BigInt;

use super::{qbinomial, QSeries};
use crate::error::{Error, Result};

/// Polynomial in an auxiliary variable `z` with q-series coefficients,
/// truncated at `z^zdeg`. All coefficients share one `qmax` and offset 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPolyQ {
    zdeg: usize,
    coeffs: Vec<QSeries>,
}

impl ZPolyQ {
    pub fn zero(zdeg: usize, qmax: usize) -> Self {
        ZPolyQ {
            zdeg,
            coeffs: vec![QSeries::zero(qmax); zdeg + 1],
        }
    }

    pub fn one(zdeg: usize, qmax: usize) -> Self {
        let mut p = Self::zero(zdeg, qmax);
        p.coeffs[0] = QSeries::one(qmax);
        p
    }

    pub fn zdeg(&self) -> usize {
        self.zdeg
    }

    pub fn qmax(&self) -> usize {
        self.coeffs[0].qmax()
    }

    /// Coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> &QSeries {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.coeffs
    }

    fn set(&mut self, n: usize, c: QSeries) {
        if n <= self.zdeg {
            self.coeffs[n] = c;
        }
    }

    /// Changes the `z` truncation, padding with zero coefficients.
    pub fn resized(&self, zdeg: usize) -> Self {
        let mut out = Self::zero(zdeg, self.qmax());
        for (i, c) in self.coeffs.iter().enumerate().take(zdeg + 1) {
            out.coeffs[i] = c.clone();
        }
        out
    }

    /// Product truncated at the smaller `zdeg` and `qmax`.
    pub fn mul(&self, other: &Self) -> Self {
        let zdeg = self.zdeg.min(other.zdeg);
        let qmax = self.qmax().min(other.qmax());
        let mut out = Self::zero(zdeg, qmax);
        for i in 0..=zdeg {
            for j in 0..=(zdeg - i) {
                let t = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &t;
            }
        }
        out
    }

    /// Multiplies by `(1 + c z^step)` in place of a general product, used to
    /// build the Pochhammer factors directly.
    fn mul_binomial(&self, c: &QSeries, step: usize) -> Self {
        let mut out = self.clone();
        for i in (step..=self.zdeg).rev() {
            let t = &self.coeffs[i - step] * c;
            out.coeffs[i] = &out.coeffs[i] + &t;
        }
        out
    }
}

/// `(z;q)_N` from the closed expansion `sum_n (-z)^n q^{n(n-1)/2} [N, n]_q`.
pub fn pochhammer_z_expansion(n: i64, qmax: usize) -> Result<ZPolyQ> {
    if n < 0 {
        return Err(Error::Domain(format!("N must be >= 0, got {n}")));
    }
    let mut out = ZPolyQ::zero(n as usize, qmax);
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let shift = (j * (j - 1) / 2) as usize;
        let c = qbinomial(n, j, qmax)?
            .shift(shift)
            .scale(&BigInt::from(sign));
        out.set(j as usize, c);
    }
    Ok(out)
}

/// `(z;q)_N^{-1}` from `sum_n [N+n-1, n]_q z^n`, truncated at `z^zdeg`.
pub fn inv_pochhammer_z_expansion(n: i64, zdeg: usize, qmax: usize) -> Result<ZPolyQ> {
    if n < 0 || (n == 0 && zdeg > 0) {
        return Err(Error::Domain(format!(
            "inverse expansion needs N >= 1 (or zdeg = 0), got N={n}, zdeg={zdeg}"
        )));
    }
    if n == 0 {
        return Ok(ZPolyQ::one(0, qmax));
    }
    let mut out = ZPolyQ::zero(zdeg, qmax);
    for j in 0..=zdeg as i64 {
        out.set(j as usize, qbinomial(n + j - 1, j, qmax)?);
    }
    Ok(out)
}

/// `(z;q)_N` as the literal product `prod_{i<N} (1 - z q^i)`.
pub fn pochhammer_z_product(n: usize, qmax: usize) -> ZPolyQ {
    (0..n).fold(ZPolyQ::one(n, qmax), |acc, i| {
        acc.mul_binomial(&QSeries::monomial(i, BigInt::from(-1), qmax), 1)
    })
}

/// `(z;q)_N^{-1}` as the literal product of geometric series
/// `prod_{i<N} sum_j (z q^i)^j`, truncated at `z^zdeg`.
pub fn inv_pochhammer_z_product(n: usize, zdeg: usize, qmax: usize) -> ZPolyQ {
    (0..n).fold(ZPolyQ::one(zdeg, qmax), |acc, i| {
        let mut factor = ZPolyQ::zero(zdeg, qmax);
        for j in 0..=zdeg {
            factor.set(j, QSeries::monomial(i * j, BigInt::from(1), qmax));
        }
        acc.mul(&factor)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], qmax: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), qmax)
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(pochhammer_z_expansion(0, 3).unwrap(), ZPolyQ::one(0, 3));
        let p1 = pochhammer_z_expansion(1, 3).unwrap();
        assert_eq!(p1.coeffs(), &[s(&[1], 3), s(&[-1], 3)]);
        let p2 = pochhammer_z_expansion(2, 3).unwrap();
        assert_eq!(p2.coeffs(), &[s(&[1], 3), s(&[-1, -1], 3), s(&[0, 1], 3)]);
    }

    #[test]
    fn inverse_expansion_examples() {
        let g = inv_pochhammer_z_expansion(1, 5, 4).unwrap();
        assert!(g.coeffs().iter().all(|c| *c == QSeries::one(4)));
        let h = inv_pochhammer_z_expansion(2, 3, 4).unwrap();
        assert_eq!(h.coeff(1), &s(&[1, 1], 4));
        assert!(inv_pochhammer_z_expansion(0, 2, 4).is_err());
        let prod = pochhammer_z_expansion(3, 6)
            .unwrap()
            .resized(4)
            .mul(&inv_pochhammer_z_expansion(3, 4, 6).unwrap());
        assert_eq!(prod, ZPolyQ::one(4, 6));
    }

    #[test]
    fn products_match_expansions() {
        for n in 0..=6 {
            assert_eq!(
                pochhammer_z_product(n, 12),
                pochhammer_z_expansion(n as i64, 12).unwrap()
            );
        }
        for n in 1..=6 {
            assert_eq!(
                inv_pochhammer_z_product(n, 5, 12),
                inv_pochhammer_z_expansion(n as i64, 5, 12).unwrap()
            );
        }
    }
}
