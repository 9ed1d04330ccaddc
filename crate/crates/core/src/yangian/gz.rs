use serde::Serialize;

use crate::affine::WeightFW;
use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::symfunc::Tableau;

/// Gel'fand-Zetlin scheme: a chain `mu = lambda^(0) ⊂ ... ⊂ lambda^(n) = lambda`
/// where consecutive rows interleave and `lambda^(m)` has at most `N + m`
/// parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GZScheme {
    base: u32,
    rows: Vec<Partition>,
}

fn interleaves(upper: &Partition, lower: &Partition) -> bool {
    let len = upper.len().max(lower.len());
    (1..=len).all(|i| upper.part(i) >= lower.part(i) && lower.part(i) >= upper.part(i + 1))
}

impl GZScheme {
    /// Validates interleaving and the length bounds.
    pub fn new(base: u32, rows: Vec<Partition>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Domain("a GZ scheme needs at least one row".into()));
        }
        for (m, row) in rows.iter().enumerate() {
            if row.len() > base as usize + m {
                return Err(Error::Domain(format!(
                    "row {m} of a GZ scheme has more than {} parts",
                    base as usize + m
                )));
            }
        }
        if let Some(m) = (1..rows.len()).find(|&m| !interleaves(&rows[m], &rows[m - 1])) {
            return Err(Error::Domain(format!(
                "rows {} and {m} of a GZ scheme do not interleave",
                m - 1
            )));
        }
        Ok(GZScheme { base, rows })
    }

    /// The `N` in the length bound `l(lambda^(m)) <= N + m`.
    pub fn base(&self) -> u32 {
        self.base
    }

    /// Number of interleaving steps, i.e. the rank `n`.
    pub fn rank(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.rows[self.rows.len() - 1].clone(), self.rows[0].clone())
            .expect("interleaving rows are nested")
    }

    /// Exponent vector `c_m = |lambda^(m)| - |lambda^(m-1)|`.
    pub fn content(&self) -> Vec<u32> {
        self.rows
            .windows(2)
            .map(|w| w[1].size() - w[0].size())
            .collect()
    }
}

/// All GZ schemes from `mu` up to `lam` in `n` steps with length base `N`.
pub fn gz_schemes(lam: &Partition, mu: &Partition, n: u32, base: u32) -> Result<Vec<GZScheme>> {
    if !lam.contains(mu) {
        return Err(Error::NotContained {
            outer: lam.parts().to_vec(),
            inner: mu.parts().to_vec(),
        });
    }
    if mu.len() > base as usize || lam.len() > (base + n) as usize {
        return Err(Error::Domain(format!(
            "length bounds violated: l(mu)={} > N={base} or l(lambda)={} > N+n={}",
            mu.len(),
            lam.len(),
            base + n
        )));
    }
    let mut chain = vec![lam.clone()];
    let mut out = Vec::new();
    descend(mu, n, base, &mut chain, &mut out);
    out.sort();
    Ok(out)
}

/// `chain` holds `lambda^(n), ..., lambda^(m)`; extends it downwards.
fn descend(mu: &Partition, n: u32, base: u32, chain: &mut Vec<Partition>, out: &mut Vec<GZScheme>) {
    let m = n as usize + 1 - chain.len();
    let upper = chain.last().expect("chain starts with lambda").clone();
    if m == 0 {
        let mut rows = chain.clone();
        rows.reverse();
        out.push(GZScheme { base, rows });
        return;
    }
    if m == 1 {
        if interleaves(&upper, mu) {
            chain.push(mu.clone());
            descend(mu, n, base, chain, out);
            chain.pop();
        }
        return;
    }
    let len = base as usize + m - 1;
    let mut row = vec![0u32; len];
    fill(mu, &upper, 0, &mut row, &mut |row| {
        let p = Partition::new(row.to_vec()).expect("interleaving rows are weakly decreasing");
        chain.push(p);
        descend(mu, n, base, chain, out);
        chain.pop();
    });
}

fn fill(
    mu: &Partition,
    upper: &Partition,
    i: usize,
    row: &mut [u32],
    visit: &mut impl FnMut(&[u32]),
) {
    if i == row.len() {
        visit(row);
        return;
    }
    let lo = upper.part(i + 2).max(mu.part(i + 1));
    let hi = upper.part(i + 1);
    for v in lo..=hi {
        row[i] = v;
        fill(mu, upper, i + 1, row, visit);
    }
}

/// Weight of a scheme in fundamental-weight coordinates.
pub fn gz_weight(s: &GZScheme) -> WeightFW {
    WeightFW::from_exponents(&s.content())
}

/// Tableau whose boxes in `lambda^(m) / lambda^(m-1)` hold the entry `m`.
pub fn gz_to_sst(s: &GZScheme) -> Tableau {
    let shape = s.shape();
    let rows = (1..=shape.rows())
        .map(|i| {
            let mut entries = Vec::with_capacity(shape.row_length(i) as usize);
            for m in 1..s.rows.len() {
                let grow = s.rows[m].part(i) - s.rows[m - 1].part(i);
                entries.extend(std::iter::repeat_n(m as u32, grow as usize));
            }
            entries
        })
        .collect();
    Tableau { shape, rows }
}

/// Inverse of [`gz_to_sst`]: `lambda^(m)_i` counts the inner boxes of row
/// `i` plus its entries not exceeding `m`.
pub fn sst_to_gz(t: &Tableau, n: u32, base: u32) -> Result<GZScheme> {
    if !t.is_semistandard(n) {
        return Err(Error::Domain(
            "tableau is not semistandard in the given alphabet".into(),
        ));
    }
    let inner = t.shape.inner();
    let rows = (0..=n)
        .map(|m| {
            let parts: Vec<u32> = (1..=t.shape.rows())
                .map(|i| inner.part(i) + t.rows[i - 1].iter().filter(|&&x| x <= m).count() as u32)
                .collect();
            Partition::new(parts)
        })
        .collect::<Result<Vec<_>>>()?;
    GZScheme::new(base, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{schur_skew, SchurMethod};
    use std::collections::BTreeMap;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_box() {
        let all = gz_schemes(&p(&[1]), &Partition::empty(), 2, 0).unwrap();
        assert_eq!(all.len(), 2);
        let mut weights: Vec<WeightFW> = all.iter().map(gz_weight).collect();
        weights.sort();
        assert_eq!(weights, vec![WeightFW(vec![-1]), WeightFW(vec![1])]);
        let mut entries: Vec<Vec<Vec<u32>>> = all.iter().map(|s| gz_to_sst(s).rows).collect();
        entries.sort();
        assert_eq!(entries, vec![vec![vec![1]], vec![vec![2]]]);
    }

    #[test]
    fn equal_shapes_give_one_scheme() {
        let lam = p(&[2, 1]);
        let all = gz_schemes(&lam, &lam, 3, 2).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(gz_weight(&all[0]), WeightFW::zero(3));
        assert!(gz_to_sst(&all[0]).rows.iter().all(Vec::is_empty));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gz_schemes(&p(&[1]), &p(&[2]), 2, 1).is_err());
        assert!(gz_schemes(&p(&[1, 1, 1]), &Partition::empty(), 2, 0).is_err());
        assert!(GZScheme::new(0, vec![p(&[]), p(&[2])]).is_ok());
        assert!(GZScheme::new(0, vec![p(&[]), p(&[1, 1])]).is_err());
        assert!(GZScheme::new(1, vec![p(&[1]), p(&[3, 2])]).is_err());
    }

    #[test]
    fn census_matches_skew_schur() {
        for size in 0..=5 {
            for lam in Partition::all_of(size) {
                for mu in lam.subpartitions() {
                    for n in 1..=3u32 {
                        for base in 0..=2u32 {
                            if mu.len() > base as usize || lam.len() > (base + n) as usize {
                                continue;
                            }
                            let schemes = gz_schemes(&lam, &mu, n, base).unwrap();
                            let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
                            for s in &schemes {
                                *counts.entry(s.content()).or_default() += 1;
                                let t = gz_to_sst(s);
                                assert!(t.is_semistandard(n));
                                assert_eq!(t.content(n as usize), s.content());
                                assert_eq!(&sst_to_gz(&t, n, base).unwrap(), s);
                            }
                            let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                            let schur = schur_skew(&shape, n as usize, SchurMethod::JacobiTrudiH);
                            let expect: BTreeMap<Vec<u32>, i64> = schur
                                .terms()
                                .map(|(e, c)| (e.clone(), i64::try_from(c).unwrap()))
                                .collect();
                            assert_eq!(counts, expect, "{lam:?}/{mu:?} n={n} N={base}");
                        }
                    }
                }
            }
        }
    }
}
