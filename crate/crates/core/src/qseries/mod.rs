//! Truncated q-series with exact coefficients, and the standard q-objects
//! built from them.

mod identities;
mod series;
mod zpoly;

pub use identities::{
    durfee_check, durfee_sum, pochhammer_sum_check, pochhammer_sum_sides, z_product_check,
    PochhammerSumVariant,
};
pub use series::{aligned_difference, rational_str, QSeries};
pub use zpoly::{
    inv_pochhammer_z_expansion, inv_pochhammer_z_product, pochhammer_z_expansion,
    pochhammer_z_product, ZPolyQ,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `prod_{k>=1} (1 - q^k)^{-1}`: the partition generating function.
pub fn euler_inverse(qmax: usize) -> QSeries {
    inv_pochhammer(qmax, qmax)
}

/// `prod_{k>=1} (1 - q^k)`, exact through `q^qmax`.
pub fn euler(qmax: usize) -> QSeries {
    pochhammer(qmax as i64, qmax).expect("non-negative")
}

/// `(q;q)_N = prod_{k=1}^N (1 - q^k)` truncated at `qmax`.
pub fn pochhammer(n: i64, qmax: usize) -> Result<QSeries> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "pochhammer index must be >= 0, got {n}"
        )));
    }
    let mut c = vec![BigInt::zero(); qmax + 1];
    c[0] = BigInt::one();
    for k in 1..=(n as usize).min(qmax) {
        for j in (k..=qmax).rev() {
            let t = c[j - k].clone();
            c[j] -= t;
        }
    }
    Ok(QSeries::from_coeffs(c, qmax))
}

/// `1/(q;q)_N` truncated at `qmax`, built factor by factor as geometric
/// series, so no inversion is involved.
pub fn inv_pochhammer(n: usize, qmax: usize) -> QSeries {
    let mut c = vec![BigInt::zero(); qmax + 1];
    c[0] = BigInt::one();
    for k in 1..=n.min(qmax) {
        for j in k..=qmax {
            let t = c[j - k].clone();
            c[j] += t;
        }
    }
    QSeries::from_coeffs(c, qmax)
}

/// Table of `1/(q)_a` for `a = 0..=amax`, shared across one computation.
#[derive(Debug, Clone)]
pub struct InvPochhammerTable {
    table: Vec<QSeries>,
}

impl InvPochhammerTable {
    pub fn new(amax: usize, qmax: usize) -> Self {
        let mut table = Vec::with_capacity(amax + 1);
        let mut cur = QSeries::one(qmax);
        table.push(cur.clone());
        for a in 1..=amax {
            if a <= qmax {
                cur = cur.mul_with_offsets(&geometric(a, qmax));
            }
            table.push(cur.clone());
        }
        InvPochhammerTable { table }
    }

    /// `1/(q)_a`, or `None` for negative `a` (the reciprocal vanishes there).
    pub fn get(&self, a: i64) -> Option<&QSeries> {
        usize::try_from(a).ok().map(|a| &self.table[a])
    }
}

fn geometric(step: usize, qmax: usize) -> QSeries {
    QSeries::from_coeffs((0..=qmax).map(|i| i64::from(i % step == 0)), qmax)
}

/// Exact, untruncated coefficients of `(q;q)_N`.
pub(crate) fn pochhammer_poly(n: usize) -> Vec<BigInt> {
    let deg = n * (n + 1) / 2;
    pochhammer(n as i64, deg)
        .expect("non-negative")
        .coeffs()
        .to_vec()
}

/// Divides two polynomials over the integers, failing unless the remainder
/// vanishes. The divisor's leading coefficient must be a unit.
pub(crate) fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let trim = |p: &[BigInt]| {
        let mut v = p.to_vec();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    };
    let (mut rem, den) = (trim(num), trim(den));
    let lead = den
        .last()
        .ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
    if !(lead.is_one() || (-lead).is_one()) {
        return Err(Error::Domain(
            "divisor must have unit leading coefficient".into(),
        ));
    }
    if rem.len() < den.len() {
        return if rem.is_empty() {
            Ok(vec![])
        } else {
            Err(Error::InexactDivision)
        };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - den.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + den.len() - 1] * lead;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

/// Gaussian binomial `[N choose M]_q`, computed as an exact polynomial
/// quotient of Pochhammer symbols and then truncated.
pub fn qbinomial(n: i64, m: i64, qmax: usize) -> Result<QSeries> {
    if m < 0 || m > n {
        return Err(Error::Domain(format!(
            "q-binomial needs 0 <= M <= N, got N={n}, M={m}"
        )));
    }
    qmultinomial(&[m, n - m], qmax)
}

/// `(q)_{k_1+...+k_r} / prod (q)_{k_i}` by successive exact divisions.
pub fn qmultinomial(ks: &[i64], qmax: usize) -> Result<QSeries> {
    if let Some(k) = ks.iter().find(|&&k| k < 0) {
        return Err(Error::Domain(format!(
            "q-multinomial entries must be >= 0, got {k}"
        )));
    }
    let total: i64 = ks.iter().sum();
    let mut poly = pochhammer_poly(total as usize);
    for &k in ks {
        poly = poly_div_exact(&poly, &pochhammer_poly(k as usize))?;
    }
    Ok(QSeries::from_coeffs(poly, qmax))
}
