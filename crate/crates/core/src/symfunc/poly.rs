use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::qseries::QSeries;

/// Coefficient ring for [`Poly`].
pub trait Coefficient: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for QSeries {
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_with_offsets(other)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Polynomial in `nvars` commuting variables, as a sparse map from exponent
/// vectors to nonzero coefficients. Keys are ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

pub type SymPoly = Poly<BigInt>;
pub type QSymPoly = Poly<QSeries>;

impl<C: Coefficient> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    /// Lexicographically largest exponent vector.
    pub fn leading(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(cur) => {
                let sum = cur.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *cur = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Swaps variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Invariance under all adjacent transpositions, which generate the
    /// symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }
}

impl SymPoly {
    pub fn one(nvars: usize) -> Self {
        Self::constant(BigInt::one(), nvars)
    }

    /// Value at `x_1 = ... = x_n = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Aggregates monomials by fundamental-weight coordinates
    /// `c_j - c_{j+1}`, which identifies monomials differing by a power of
    /// `x_1 ... x_n`.
    pub fn weight_projection(&self) -> BTreeMap<Vec<i64>, BigInt> {
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let w: Vec<i64> = e.windows(2).map(|p| p[0] as i64 - p[1] as i64).collect();
            let slot = out.entry(w).or_default();
            *slot += c;
        }
        out.retain(|_, c| !Zero::is_zero(c));
        out
    }
}

#[derive(Serialize)]
struct TermJson<'a, C: Serialize> {
    exps: &'a [u32],
    coeff: &'a C,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let coeff = bigint_json(c);
            seq.serialize_element(&TermJson {
                exps: e,
                coeff: &coeff,
            })?;
        }
        seq.end()
    }
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub fn bigint_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(c.to_string()),
    }
}

/// `e_m` in `nvars` variables; zero for negative `m` or `m > nvars`.
pub fn elementary(m: i64, nvars: usize) -> SymPoly {
    let mut out = SymPoly::zero(nvars);
    if m < 0 || m as usize > nvars {
        return out;
    }
    fn choose(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut SymPoly) {
        if left == 0 {
            out.add_term(cur.clone(), BigInt::one());
            return;
        }
        for i in start..=(cur.len() - left) {
            cur[i] = 1;
            choose(i + 1, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    choose(0, m as usize, &mut vec![0; nvars], &mut out);
    out
}

/// `h_m` in `nvars` variables; zero for negative `m`.
pub fn complete(m: i64, nvars: usize) -> SymPoly {
    let mut out = SymPoly::zero(nvars);
    if m < 0 || (nvars == 0 && m > 0) {
        return out;
    }
    fn spread(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut SymPoly) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.add_term(cur.clone(), BigInt::one());
            cur[i] = 0;
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            spread(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        out.add_term(vec![], BigInt::one());
    } else {
        spread(0, m as u32, &mut vec![0; nvars], &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(&[u32], i64)]) -> SymPoly {
        let nvars = terms[0].0.len();
        let mut p = SymPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn basis_examples() {
        let x = poly(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        assert_eq!(elementary(1, 3), x);
        assert_eq!(complete(1, 3), x);
        assert!(elementary(3, 2).is_zero());
        assert_eq!(
            complete(2, 2),
            poly(&[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(complete(0, 2), SymPoly::one(2));
        assert_eq!(elementary(0, 2), SymPoly::one(2));
        assert!(complete(-1, 2).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = complete(2, 2);
        assert!(p.sub(&p).is_empty());
    }

    #[test]
    fn symmetric_detection() {
        assert!(complete(3, 3).is_symmetric());
        assert!(!poly(&[(&[1, 0], 1)]).is_symmetric());
    }

    #[test]
    fn json_is_sorted_records() {
        let js = serde_json::to_string(&complete(1, 2)).unwrap();
        assert_eq!(js, r#"[{"exps":[0,1],"coeff":1},{"exps":[1,0],"coeff":1}]"#);
    }

    #[test]
    fn projection_identifies_torus_powers() {
        let e2 = elementary(2, 2);
        assert_eq!(e2.weight_projection(), SymPoly::one(2).weight_projection());
    }
}
