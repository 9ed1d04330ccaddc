use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{string_function_closed, WeightFW};
use crate::error::{Error, Result};
use crate::qseries::{InvPochhammerTable, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutForm {
    Multisum,
    Alternating,
}

/// Why an N-spinon cut came out as it did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CutStatus {
    /// All `A_i` are non-negative integers; the sum was evaluated.
    Regular { a: Vec<i64> },
    /// `N` is not congruent to `k`, so the cut vanishes.
    ClassMismatch,
    /// Some `A_i` is negative, so every term has a vanishing denominator.
    NegativeA { a: Vec<i64> },
    /// Some `A_i` is fractional although `N` is in the right class. This
    /// signals a weight outside class `k` and is reported, not hidden.
    NonIntegral { a: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinonCut {
    pub series: QSeries,
    pub status: CutStatus,
}

/// `A_i = N/n + (lambda, eps_i)` for `i = 1..=n`.
pub fn spinon_occupations(lam: &WeightFW, spinons: u64) -> Vec<Rational64> {
    let n = lam.rank() as i64;
    lam.epsilon_pairings()
        .into_iter()
        .map(|e| Rational64::new(spinons as i64, n) + e)
        .collect()
}

fn check_args(n: u32, k: u32, lam: &WeightFW) -> Result<()> {
    if n < 2 || k >= n {
        return Err(Error::Domain(format!(
            "need n >= 2 and 0 <= k < n, got n={n}, k={k}"
        )));
    }
    if lam.rank() != n {
        return Err(Error::Domain(format!(
            "weight {lam} has {} coordinates, expected {}",
            lam.0.len(),
            n - 1
        )));
    }
    Ok(())
}

/// The `N`-spinon contribution to the string function `c^{Lambda_k}_lambda`.
pub fn spinon_string_function(
    n: u32,
    k: u32,
    lam: &WeightFW,
    spinons: u64,
    form: CutForm,
    qmax: usize,
) -> Result<SpinonCut> {
    check_args(n, k, lam)?;
    let offset = super::weight_norm(lam) / 2;
    let zero = QSeries::zero(qmax).with_offset(offset);
    if spinons % n as u64 != k as u64 {
        return Ok(SpinonCut {
            series: zero,
            status: CutStatus::ClassMismatch,
        });
    }
    let occ = spinon_occupations(lam, spinons);
    if occ.iter().any(|a| !a.is_integer()) {
        let a = occ.iter().map(|a| a.to_string()).collect();
        return Ok(SpinonCut {
            series: zero,
            status: CutStatus::NonIntegral { a },
        });
    }
    let a: Vec<i64> = occ.iter().map(|a| a.to_integer()).collect();
    debug_assert_eq!(a.iter().sum::<i64>(), spinons as i64);
    if a.iter().any(|&x| x < 0) {
        return Ok(SpinonCut {
            series: zero,
            status: CutStatus::NegativeA { a },
        });
    }
    let table = InvPochhammerTable::new(spinons as usize, qmax);
    let body = match form {
        CutForm::Multisum => multisum(&a, &table, qmax),
        CutForm::Alternating => alternating(&a, &table, qmax),
    };
    Ok(SpinonCut {
        series: body.with_offset(offset),
        status: CutStatus::Regular { a },
    })
}

/// Nested sum over `m_1..m_{n-2}`. With `T_j = m_1 + ... + m_j` and
/// `S = T_{n-2}` the summand is
/// `q^{sum_j (A_j - T_{j-1}) m_j + (A_{n-1} - S)(A_n - S)}` over
/// `prod_j (q)_{A_j - T_{j-1}} (q)_{m_j} * (q)_{A_{n-1} - S} (q)_{A_n - S}`.
fn multisum(a: &[i64], table: &InvPochhammerTable, qmax: usize) -> QSeries {
    let inner = a.len() - 2;
    let cap = a[inner].min(a[inner + 1]);
    let mut acc = QSeries::zero(qmax);
    let mut ms = Vec::with_capacity(inner);
    multisum_rec(a, table, qmax, cap, 0, 0, &mut ms, &mut acc);
    acc
}

#[allow(clippy::too_many_arguments)]
fn multisum_rec(
    a: &[i64],
    table: &InvPochhammerTable,
    qmax: usize,
    cap: i64,
    partial: i64,
    exponent: i64,
    ms: &mut Vec<i64>,
    acc: &mut QSeries,
) {
    let inner = a.len() - 2;
    if exponent > qmax as i64 {
        return;
    }
    let j = ms.len();
    if j == inner {
        let (x, y) = (a[inner] - partial, a[inner + 1] - partial);
        let e = exponent + x * y;
        if e > qmax as i64 {
            return;
        }
        let mut term = table
            .get(x)
            .expect("bounded by cap")
            .mul_with_offsets(table.get(y).expect("bounded by cap"));
        for (l, &m) in ms.iter().enumerate() {
            let prior: i64 = ms[..l].iter().sum();
            term = term.mul_with_offsets(table.get(a[l] - prior).expect("checked on entry"));
            term = term.mul_with_offsets(table.get(m).expect("non-negative"));
        }
        *acc = &*acc + &term.shift(e as usize);
        return;
    }
    let slack = a[j] - partial;
    if slack < 0 {
        return;
    }
    for m in 0..=(cap - partial) {
        ms.push(m);
        multisum_rec(
            a,
            table,
            qmax,
            cap,
            partial + m,
            exponent + slack * m,
            ms,
            acc,
        );
        ms.pop();
    }
}

/// `sum_m (-1)^m q^{m(m-1)/2} / ((q)_m prod_i (q)_{A_i - m})`.
fn alternating(a: &[i64], table: &InvPochhammerTable, qmax: usize) -> QSeries {
    let top = *a.iter().min().expect("n >= 2");
    let mut acc = QSeries::zero(qmax);
    for m in 0..=top {
        let e = m * (m - 1) / 2;
        if e > qmax as i64 {
            break;
        }
        let mut term = table.get(m).expect("non-negative").clone();
        for &ai in a {
            term = term.mul_with_offsets(table.get(ai - m).expect("m <= min A"));
        }
        let sign = if m % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        acc = &acc + &term.shift(e as usize).scale(&sign);
    }
    acc
}

/// Largest spinon number whose cut can reach relative degree `qmax`.
///
/// Put `c = max(0, -min_i (lambda, eps_i))` and write `N = N' + n S` with
/// `S = m_1 + ... + m_{n-2}`. Each multisum exponent is at least
/// `(N'/n - c)_+^2 + S^2/2 - c S`, which gives `S <= c + sqrt(c^2 + 2 qmax)`
/// and `N' <= n (c + sqrt(qmax + c^2/2))`.
pub fn spinon_number_bound(lam: &WeightFW, qmax: usize) -> u64 {
    let n = lam.rank() as f64;
    let min_pair = lam
        .epsilon_pairings()
        .into_iter()
        .min()
        .unwrap_or_else(Rational64::zero);
    let c = if min_pair < Rational64::zero() {
        -(*min_pair.numer() as f64) / *min_pair.denom() as f64
    } else {
        0.0
    };
    let q = qmax as f64;
    let s_max = (c + (c * c + 2.0 * q).sqrt()).floor();
    let n_prime = (n * (c + (q + c * c / 2.0).sqrt())).floor();
    // A margin of n absorbs floating-point rounding in the square roots.
    (n_prime + n * s_max) as u64 + lam.rank() as u64
}

/// Outcome of summing the spinon cuts and comparing with the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutVerification {
    pub pass: bool,
    pub spinon_bound: u64,
    /// First relative exponent where the summed cuts and the closed form differ.
    pub first_difference: Option<usize>,
    /// First spinon number at which the multisum and alternating forms differ.
    pub form_mismatch: Option<u64>,
    pub anomalies: Vec<String>,
}

/// Checks `sum_N c^{Lambda_k, N}_lambda = c^{Lambda_k}_lambda` up to `qmax`,
/// and that the two forms of each cut agree.
pub fn verify_spinon_cut(n: u32, k: u32, lam: &WeightFW, qmax: usize) -> Result<CutVerification> {
    check_args(n, k, lam)?;
    if lam.class() != k {
        return Err(Error::Domain(format!("weight {lam} is not in class {k}")));
    }
    let bound = spinon_number_bound(lam, qmax);
    let closed = string_function_closed(n, lam, qmax);
    let mut total = QSeries::zero(qmax).with_offset(closed.offset());
    let mut form_mismatch = None;
    let mut anomalies = Vec::new();
    for spinons in (k as u64..=bound).step_by(n as usize) {
        let multi = spinon_string_function(n, k, lam, spinons, CutForm::Multisum, qmax)?;
        let alt = spinon_string_function(n, k, lam, spinons, CutForm::Alternating, qmax)?;
        if multi.series != alt.series && form_mismatch.is_none() {
            form_mismatch = Some(spinons);
        }
        if let CutStatus::NonIntegral { a } = &multi.status {
            anomalies.push(format!("N={spinons}: non-integral occupations {a:?}"));
        }
        total = &total + &multi.series;
    }
    let first_difference = total.first_difference(&closed);
    Ok(CutVerification {
        pass: first_difference.is_none() && form_mismatch.is_none() && anomalies.is_empty(),
        spinon_bound: bound,
        first_difference,
        form_mismatch,
        anomalies,
    })
}

/// Weights of class `k` whose norm exceeds `2 Delta_k` by at most `extra`,
/// i.e. `|lambda|^2/2 - Delta_k <= extra`.
pub fn small_norm_weights(n: u32, k: u32, extra: i64) -> Result<Vec<WeightFW>> {
    let delta = super::conformal_dimension(n, k)?;
    let limit = delta + Rational64::from_integer(extra);
    // Class-k weights are m_j = p_j - p_{j+1} for integer p with sum p = k,
    // and then |lambda|^2/2 - Delta_k = (sum p^2 - k)/2. Hence each
    // |p_j| <= sqrt(k + 2 extra).
    let reach = 2 * ((k as f64 + 2.0 * extra as f64).sqrt().floor() as i64) + 1;
    let mut out = Vec::new();
    let mut cur = vec![-reach; n as usize - 1];
    loop {
        let w = WeightFW(cur.clone());
        if w.class() == k && super::weight_norm(&w) / 2 <= limit {
            out.push(w);
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                return Ok(out);
            }
            if cur[i] < reach {
                cur[i] += 1;
                break;
            }
            cur[i] = -reach;
            i += 1;
        }
    }
}
