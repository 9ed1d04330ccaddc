use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{conformal_dimension, WeightFW};
use crate::error::Result;
use crate::qseries::{rational_str, QSeries};
use crate::symfunc::bigint_json;

/// Character of a level-1 module `L(Lambda_k)`: for each weight, the
/// multiplicities at `q^(delta + d)` for `d = 0..=qmax`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    k: u32,
    delta: Rational64,
    qmax: usize,
    rows: BTreeMap<WeightFW, Vec<BigInt>>,
}

/// Where two tables first disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub weight: Vec<i64>,
    pub qdeg: usize,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {:?} at q-degree {}: {} vs {}",
            self.weight, self.qdeg, self.left, self.right
        )
    }
}

impl CharacterTable {
    pub fn new(n: u32, k: u32, qmax: usize) -> Result<Self> {
        let delta = conformal_dimension(n, k)?;
        Ok(CharacterTable {
            n,
            k,
            delta,
            qmax,
            rows: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn delta(&self) -> Rational64 {
        self.delta
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    /// Nonzero rows in weight order.
    pub fn rows(&self) -> impl Iterator<Item = (&WeightFW, &[BigInt])> {
        self.rows
            .iter()
            .filter(|(_, c)| c.iter().any(|x| !x.is_zero()))
            .map(|(w, c)| (w, c.as_slice()))
    }

    /// Nonzero entries as `(weight, relative degree, multiplicity)`.
    pub fn entries(&self) -> impl Iterator<Item = (&WeightFW, usize, &BigInt)> {
        self.rows.iter().flat_map(|(w, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(d, c)| (w, d, c))
        })
    }

    pub fn get(&self, weight: &WeightFW, qdeg: usize) -> BigInt {
        self.rows
            .get(weight)
            .and_then(|r| r.get(qdeg))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `coeff` at relative degree `qdeg`; degrees beyond `qmax` are
    /// dropped.
    pub fn add(&mut self, weight: WeightFW, qdeg: usize, coeff: &BigInt) {
        if qdeg > self.qmax || coeff.is_zero() {
            return;
        }
        let qmax = self.qmax;
        let row = self
            .rows
            .entry(weight)
            .or_insert_with(|| vec![BigInt::zero(); qmax + 1]);
        row[qdeg] += coeff;
    }

    /// Adds `q^shift * series` (series offset ignored) at `weight`.
    pub fn add_series(&mut self, weight: &WeightFW, shift: usize, series: &QSeries) {
        for (i, c) in series.coeffs().iter().enumerate() {
            if shift + i > self.qmax {
                break;
            }
            self.add(weight.clone(), shift + i, c);
        }
    }

    /// Row of `weight` as a series with offset `delta`.
    pub fn string_function(&self, weight: &WeightFW) -> QSeries {
        let coeffs = self
            .rows
            .get(weight)
            .cloned()
            .unwrap_or_else(|| vec![BigInt::zero(); self.qmax + 1]);
        QSeries::from_coeffs(coeffs, self.qmax).with_offset(self.delta)
    }

    /// The multiplicities at one relative degree.
    pub fn block(&self, qdeg: usize) -> BTreeMap<WeightFW, BigInt> {
        self.rows
            .iter()
            .filter_map(|(w, r)| {
                r.get(qdeg)
                    .filter(|c| !c.is_zero())
                    .map(|c| (w.clone(), c.clone()))
            })
            .collect()
    }

    /// First disagreement in `(weight, degree)` order, comparing over the
    /// common truncation. Tables with different `n`, `k` or `delta` disagree
    /// at the origin.
    pub fn first_difference(&self, other: &CharacterTable) -> Option<Discrepancy> {
        if (self.n, self.k, self.delta) != (other.n, other.k, other.delta) {
            return Some(Discrepancy {
                weight: vec![],
                qdeg: 0,
                left: format!("n={} k={} delta={}", self.n, self.k, self.delta),
                right: format!("n={} k={} delta={}", other.n, other.k, other.delta),
            });
        }
        let qmax = self.qmax.min(other.qmax);
        let weights: std::collections::BTreeSet<&WeightFW> =
            self.rows.keys().chain(other.rows.keys()).collect();
        for w in weights {
            for d in 0..=qmax {
                let (a, b) = (self.get(w, d), other.get(w, d));
                if a != b {
                    return Some(Discrepancy {
                        weight: w.0.clone(),
                        qdeg: d,
                        left: a.to_string(),
                        right: b.to_string(),
                    });
                }
            }
        }
        None
    }

    /// Violations of the structural invariants: weights outside class `k`
    /// or negative multiplicities.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (w, row) in self.rows() {
            if w.rank() != self.n || w.class() != self.k {
                out.push(format!(
                    "weight {w} is not in class {} of sl_{}",
                    self.k, self.n
                ));
            }
            if let Some((d, c)) = row.iter().enumerate().find(|(_, c)| c.is_negative()) {
                out.push(format!(
                    "negative multiplicity {c} at weight {w}, degree {d}"
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows()
            .map(|(w, c)| {
                serde_json::json!({
                    "weight": w.0,
                    "coeffs": c.iter().map(bigint_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "delta": rational_str::format(&self.delta),
            "qmax": self.qmax,
            "rows": rows,
        })
    }
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.qmax == other.qmax && self.first_difference(other).is_none()
    }
}

impl Eq for CharacterTable {}
