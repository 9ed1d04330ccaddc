use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power series in `q` truncated inclusively at `q^qmax`, times a global
/// factor `q^offset` with rational `offset`.
///
/// Arithmetic between series requires equal offsets (multiplication adds
/// them) and keeps the smaller truncation order, so every retained
/// coefficient of a result is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QSeries {
    qmax: usize,
    #[serde(with = "bigint_vec")]
    coeffs: Vec<BigInt>,
    #[serde(with = "rational_str")]
    offset: Rational64,
}

impl QSeries {
    pub fn zero(qmax: usize) -> Self {
        QSeries {
            qmax,
            coeffs: vec![BigInt::zero(); qmax + 1],
            offset: Rational64::zero(),
        }
    }

    pub fn one(qmax: usize) -> Self {
        Self::monomial(0, BigInt::one(), qmax)
    }

    /// `coeff * q^exp`; vanishes when `exp > qmax`.
    pub fn monomial(exp: usize, coeff: BigInt, qmax: usize) -> Self {
        let mut s = Self::zero(qmax);
        if exp <= qmax {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms beyond `qmax`.
    pub fn from_coeffs<I, T>(coeffs: I, qmax: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(qmax);
        for (i, c) in coeffs.into_iter().enumerate().take(qmax + 1) {
            s.coeffs[i] = c.into();
        }
        s
    }

    pub fn with_offset(mut self, offset: Rational64) -> Self {
        self.offset = offset;
        self
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn offset(&self) -> Rational64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^(offset + i)`; zero beyond the truncation.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowers the truncation order. Raising it would invent coefficients, so
    /// a larger `qmax` is clamped to the current one.
    pub fn truncate(&self, qmax: usize) -> Self {
        let qmax = qmax.min(self.qmax);
        QSeries {
            qmax,
            coeffs: self.coeffs[..=qmax].to_vec(),
            offset: self.offset,
        }
    }

    /// Multiplies by `q^k` for a non-negative integer `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.qmax).with_offset(self.offset);
        for i in 0..=self.qmax {
            if i + k > self.qmax {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSeries {
            qmax: self.qmax,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            offset: self.offset,
        }
    }

    /// Sum of the retained coefficients (the value at `q = 1` for polynomials
    /// whose degree does not exceed `qmax`).
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_offset(other)?;
        let qmax = self.qmax.min(other.qmax);
        let coeffs = (0..=qmax)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Ok(QSeries {
            qmax,
            coeffs,
            offset: self.offset,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_offset(other)?;
        let qmax = self.qmax.min(other.qmax);
        let coeffs = (0..=qmax)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Ok(QSeries {
            qmax,
            coeffs,
            offset: self.offset,
        })
    }

    /// Product; offsets must agree and the result carries their sum.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_offset(other)?;
        Ok(self.mul_unchecked(other, self.offset + other.offset))
    }

    /// Product of two series with arbitrary offsets. Offsets add; this is the
    /// one operation for which differing offsets are meaningful.
    pub fn mul_with_offsets(&self, other: &Self) -> Self {
        self.mul_unchecked(other, self.offset + other.offset)
    }

    fn mul_unchecked(&self, other: &Self, offset: Rational64) -> Self {
        let qmax = self.qmax.min(other.qmax);
        let mut coeffs = vec![BigInt::zero(); qmax + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(qmax + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(qmax + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries {
            qmax,
            coeffs,
            offset,
        }
    }

    /// Multiplicative inverse of a series with offset 0 and unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        if !self.offset.is_zero() {
            return Err(Error::Domain("inverse requires offset 0".into()));
        }
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::Domain("inverse requires constant term ±1".into()));
        }
        let mut inv = vec![BigInt::zero(); self.qmax + 1];
        inv[0] = c0.clone();
        for m in 1..=self.qmax {
            let mut acc = BigInt::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[m - j];
                }
            }
            // c0 = ±1 so dividing by c0 is multiplying by c0.
            inv[m] = -(acc * c0);
        }
        Ok(QSeries {
            qmax: self.qmax,
            coeffs: inv,
            offset: Rational64::zero(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::one(self.qmax);
        for _ in 0..e {
            acc = acc.mul_with_offsets(self);
        }
        acc
    }

    /// First exponent index (relative to the shared offset) at which two
    /// series differ within their common truncation window.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let qmax = self.qmax.min(other.qmax);
        (0..=qmax).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Nonzero terms as `(absolute exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Rational64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + Rational64::from_integer(i as i64), c))
    }

    /// Upper end of the exact window, as an absolute exponent.
    pub fn horizon(&self) -> Rational64 {
        self.offset + Rational64::from_integer(self.qmax as i64)
    }

    fn same_offset(&self, other: &Self) -> Result<()> {
        if self.offset == other.offset {
            Ok(())
        } else {
            Err(Error::OffsetMismatch {
                left: self.offset,
                right: other.offset,
            })
        }
    }
}

/// Compares two series whose offsets may differ, over the window of absolute
/// exponents where both are exact. Returns the smallest absolute exponent at
/// which they disagree.
pub fn aligned_difference(a: &QSeries, b: &QSeries) -> Option<Rational64> {
    let lo = a.offset.max(b.offset);
    let hi = a.horizon().min(b.horizon());
    let window = |s: &QSeries| -> Vec<(Rational64, BigInt)> {
        s.terms()
            .filter(|(e, _)| *e >= lo && *e <= hi)
            .map(|(e, c)| (e, c.clone()))
            .collect()
    };
    let (ta, tb) = (window(a), window(b));
    // Below the later offset one side is known-zero while the other may not be.
    let below = |s: &QSeries| s.terms().find(|(e, _)| *e < lo).map(|(e, _)| e);
    let early = match (below(a), below(b)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    if early.is_some() {
        return early;
    }
    let mut i = 0;
    loop {
        match (ta.get(i), tb.get(i)) {
            (None, None) => return None,
            (Some((e, _)), None) | (None, Some((e, _))) => return Some(*e),
            (Some((ea, ca)), Some((eb, cb))) => {
                if ea != eb {
                    return Some(*ea.min(eb));
                }
                if ca != cb {
                    return Some(*ea);
                }
            }
        }
        i += 1;
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &QSeries {
            type Output = QSeries;
            /// Panics when the offsets differ; use the `checked_*` form to
            /// handle that case.
            fn $method(self, rhs: &QSeries) -> QSeries {
                self.$checked(rhs)
                    .expect("QSeries operands must share an offset")
            }
        }
        impl $tr for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            qmax: self.qmax,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            offset: self.offset,
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.offset.is_zero() {
            write!(f, "q^({})*(", self.offset)?;
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.qmax + 1)?;
        if !self.offset.is_zero() {
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub(crate) mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|c| c.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Rationals serialize as `"p/q"` with an explicit denominator.
pub mod rational_str {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn format(r: &Rational64) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn parse(s: &str) -> Option<Rational64> {
        match s.split_once('/') {
            Some((p, q)) => {
                let q: i64 = q.trim().parse().ok()?;
                (q != 0).then_some(())?;
                Some(Rational64::new(p.trim().parse().ok()?, q))
            }
            None => Some(Rational64::from_integer(s.trim().parse().ok()?)),
        }
    }

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let raw = String::deserialize(d)?;
        parse(&raw).ok_or_else(|| serde::de::Error::custom(format!("bad rational {raw:?}")))
    }
}
