use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;

use super::poly::{complete, elementary, SymPoly};
use crate::combinatorics::{BorderStrip, Partition, SkewShape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurMethod {
    /// Determinant in the complete symmetric functions.
    JacobiTrudiH,
    /// Determinant in the elementary symmetric functions.
    JacobiTrudiE,
    /// Sum over semistandard tableaux.
    Tableaux,
}

impl SchurMethod {
    pub const ALL: [SchurMethod; 3] = [
        SchurMethod::JacobiTrudiH,
        SchurMethod::JacobiTrudiE,
        SchurMethod::Tableaux,
    ];
}

/// Filling of a skew shape. `rows[i]` holds the entries of row `i + 1`
/// from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Entry at 1-based `(row, col)`, if that box belongs to the shape.
    pub fn entry(&self, row: usize, col: u32) -> Option<u32> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        let start = self.shape.inner().part(row);
        Some(self.rows[row - 1][(col - start - 1) as usize])
    }

    /// Rows weakly increase to the right, columns strictly increase
    /// downwards, entries lie in `1..=nvars`.
    pub fn is_semistandard(&self, nvars: u32) -> bool {
        self.shape.boxes().into_iter().all(|(i, j)| {
            let x = self.entry(i, j).unwrap();
            let left_ok = self.entry(i, j.wrapping_sub(1)).is_none_or(|l| l <= x);
            let above_ok = i == 1 || self.entry(i - 1, j).is_none_or(|a| a < x);
            (1..=nvars).contains(&x) && left_ok && above_ok
        })
    }

    /// Number of occurrences of each entry `1..=nvars`.
    pub fn content(&self, nvars: usize) -> Vec<u32> {
        let mut c = vec![0u32; nvars];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }
}

/// Calls `visit` with every semistandard tableau of the shape with entries
/// in `1..=nvars`.
pub fn for_each_semistandard(shape: &SkewShape, nvars: u32, mut visit: impl FnMut(&Tableau)) {
    let boxes = shape.boxes();
    let mut t = Tableau {
        shape: shape.clone(),
        rows: (1..=shape.rows())
            .map(|i| vec![0; shape.row_length(i) as usize])
            .collect(),
    };
    fill(&boxes, 0, nvars, &mut t, &mut visit);
}

fn fill(
    boxes: &[(usize, u32)],
    idx: usize,
    nvars: u32,
    t: &mut Tableau,
    visit: &mut impl FnMut(&Tableau),
) {
    let Some(&(i, j)) = boxes.get(idx) else {
        visit(t);
        return;
    };
    let lo_left = t.entry(i, j.wrapping_sub(1)).unwrap_or(1);
    let lo_above = if i > 1 {
        t.entry(i - 1, j).map_or(1, |a| a + 1)
    } else {
        1
    };
    let start = t.shape.inner().part(i);
    let slot = (j - start - 1) as usize;
    for x in lo_left.max(lo_above)..=nvars {
        t.rows[i - 1][slot] = x;
        fill(boxes, idx + 1, nvars, t, visit);
    }
    t.rows[i - 1][slot] = 0;
}

pub fn semistandard_tableaux(shape: &SkewShape, nvars: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_semistandard(shape, nvars, |t| out.push(t.clone()));
    out
}

/// Skew Schur polynomial `s_{lambda/mu}(x_1..x_nvars)`.
pub fn schur_skew(shape: &SkewShape, nvars: usize, method: SchurMethod) -> SymPoly {
    match method {
        SchurMethod::JacobiTrudiH => {
            let (outer, inner) = (shape.outer(), shape.inner());
            jacobi_trudi(outer, inner, |m| complete(m, nvars), nvars)
        }
        SchurMethod::JacobiTrudiE => {
            let (outer, inner) = (shape.outer().conjugate(), shape.inner().conjugate());
            jacobi_trudi(&outer, &inner, |m| elementary(m, nvars), nvars)
        }
        SchurMethod::Tableaux => {
            let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for_each_semistandard(shape, nvars as u32, |t| {
                *counts.entry(t.content(nvars)).or_insert(0) += 1
            });
            let mut out = SymPoly::zero(nvars);
            for (e, c) in counts {
                out.add_term(e, BigInt::from(c));
            }
            out
        }
    }
}

/// `det(f(outer_i - inner_j - i + j))` of size `l(outer)`.
fn jacobi_trudi(
    outer: &Partition,
    inner: &Partition,
    f: impl Fn(i64) -> SymPoly,
    nvars: usize,
) -> SymPoly {
    let r = outer.len();
    let mut cache: HashMap<i64, SymPoly> = HashMap::new();
    let mut matrix: Vec<Vec<Option<SymPoly>>> = Vec::with_capacity(r);
    for i in 1..=r {
        let mut row = Vec::with_capacity(r);
        for j in 1..=r {
            let m = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
            let entry = cache.entry(m).or_insert_with(|| f(m)).clone();
            row.push((!entry.is_zero()).then_some(entry));
        }
        matrix.push(row);
    }
    determinant(&matrix, nvars)
}

/// Determinant by dynamic programming over sets of used columns.
fn determinant(matrix: &[Vec<Option<SymPoly>>], nvars: usize) -> SymPoly {
    let r = matrix.len();
    let mut layer: HashMap<u64, SymPoly> = HashMap::from([(0u64, SymPoly::one(nvars))]);
    for row in matrix {
        let mut next: HashMap<u64, SymPoly> = HashMap::new();
        for (mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                let Some(entry) = entry else { continue };
                if mask & (1 << j) != 0 {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = acc.mul(entry);
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let slot = next
                    .entry(mask | (1 << j))
                    .or_insert_with(|| SymPoly::zero(nvars));
                *slot = slot.add(&term);
            }
        }
        layer = next;
    }
    let full = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    layer.remove(&full).unwrap_or_else(|| SymPoly::zero(nvars))
}

/// Expansion of `s_{lambda/mu}` in ordinary Schur polynomials, found by
/// repeatedly removing the lexicographically leading monomial. Uses
/// `|lambda/mu|` variables so the Schur polynomials involved stay linearly
/// independent.
pub fn littlewood_richardson(shape: &SkewShape) -> Result<BTreeMap<Partition, BigInt>> {
    let nvars = shape.size() as usize;
    let mut rest = schur_skew(shape, nvars, SchurMethod::JacobiTrudiH);
    let mut out = BTreeMap::new();
    while let Some((exps, c)) = rest.leading() {
        let c = c.clone();
        if c.is_negative() {
            return Err(Error::Internal(format!(
                "negative coefficient {c} at {exps:?} in LR expansion"
            )));
        }
        let nu = Partition::new(exps.clone()).map_err(|_| {
            Error::Internal(format!("leading exponent {exps:?} is not a partition"))
        })?;
        let s_nu = schur_skew(
            &SkewShape::straight(nu.clone()),
            nvars,
            SchurMethod::JacobiTrudiH,
        );
        rest = rest.sub(&s_nu.scale(&c));
        out.insert(nu, c);
    }
    Ok(out)
}

/// Two-variable product form of a strip's Schur polynomial:
/// `h_{a_1-1} h_{a_2-2} ... h_{a_{r-1}-2} h_{a_r-1}` for `r >= 2`. A single
/// row is just `h_{a_1}`.
///
/// The product agrees with the skew Schur polynomial only up to a power of
/// `x_1 x_2`, i.e. after [`SymPoly::weight_projection`]; each row boundary
/// removes one factor `x_1 x_2`.
pub fn sl2_strip_product(rows: &[u32]) -> Result<SymPoly> {
    let r = rows.len();
    if rows.contains(&0) {
        return Err(Error::Domain("rows must be non-empty".into()));
    }
    if r > 2 && rows[1..r - 1].iter().any(|&a| a < 2) {
        return Err(Error::Domain(
            "middle rows need at least two boxes for an n = 2 strip".into(),
        ));
    }
    match r {
        0 => Ok(SymPoly::one(2)),
        1 => {
            let strip = BorderStrip::from_rows(rows, 2)?;
            Ok(schur_skew(&strip.shape(), 2, SchurMethod::JacobiTrudiH))
        }
        _ => {
            let mut acc = complete(rows[0] as i64 - 1, 2);
            for &a in &rows[1..r - 1] {
                acc = acc.mul(&complete(a as i64 - 2, 2));
            }
            Ok(acc.mul(&complete(rows[r - 1] as i64 - 1, 2)))
        }
    }
}

/// Whether appending a full column of height `n` on the left of the strip
/// with columns `cols` leaves its Schur polynomial unchanged once monomials
/// are identified modulo `x_1 ... x_nvars = 1`.
pub fn stabilization_check(cols: &[u32], n: u32, nvars: usize) -> Result<bool> {
    let base = BorderStrip::from_cols(cols, n)?;
    let longer = base.stabilized();
    let s = |k: &BorderStrip| {
        schur_skew(&k.shape(), nvars, SchurMethod::JacobiTrudiH).weight_projection()
    };
    Ok(s(&base) == s(&longer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn skew(o: &[u32], i: &[u32]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn small_examples() {
        for m in SchurMethod::ALL {
            assert_eq!(schur_skew(&skew(&[1], &[]), 3, m), complete(1, 3));
            assert_eq!(schur_skew(&skew(&[1, 1, 1], &[]), 4, m), elementary(3, 4));
            assert_eq!(schur_skew(&skew(&[3], &[]), 3, m), complete(3, 3));
            let h1 = complete(1, 2);
            assert_eq!(schur_skew(&skew(&[2, 1], &[1]), 2, m), h1.mul(&h1), "{m:?}");
        }
    }

    #[test]
    fn tableau_counts_match_hook_content_dimensions() {
        // dim of the GL_3 irrep (2,1) is 8; of GL_2 irrep (2) is 3.
        assert_eq!(semistandard_tableaux(&skew(&[2, 1], &[]), 3).len(), 8);
        assert_eq!(semistandard_tableaux(&skew(&[2], &[]), 2).len(), 3);
        assert!(semistandard_tableaux(&skew(&[2, 1], &[]), 3)
            .iter()
            .all(|t| t.is_semistandard(3)));
    }

    #[test]
    fn methods_agree_on_small_census() {
        for size in 0..=5 {
            for outer in Partition::all_of(size) {
                for inner in outer.subpartitions() {
                    let shape = SkewShape::new(outer.clone(), inner).unwrap();
                    for nvars in 1..=3 {
                        let h = schur_skew(&shape, nvars, SchurMethod::JacobiTrudiH);
                        assert_eq!(
                            h,
                            schur_skew(&shape, nvars, SchurMethod::JacobiTrudiE),
                            "{shape} n={nvars}"
                        );
                        assert_eq!(
                            h,
                            schur_skew(&shape, nvars, SchurMethod::Tableaux),
                            "{shape} n={nvars}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        let one = BigInt::from(1);
        assert_eq!(
            littlewood_richardson(&skew(&[3, 1], &[])).unwrap(),
            BTreeMap::from([(p(&[3, 1]), one.clone())])
        );
        assert_eq!(
            littlewood_richardson(&skew(&[2, 1], &[1])).unwrap(),
            BTreeMap::from([(p(&[2]), one.clone()), (p(&[1, 1]), one.clone())])
        );
        assert_eq!(
            littlewood_richardson(&skew(&[2, 2], &[1])).unwrap(),
            BTreeMap::from([(p(&[2, 1]), one)])
        );
    }

    #[test]
    fn sl2_products() {
        let h = |m| complete(m, 2);
        assert_eq!(sl2_strip_product(&[2]).unwrap(), h(2));
        assert_eq!(sl2_strip_product(&[2, 2]).unwrap(), h(1).mul(&h(1)));
        assert_eq!(sl2_strip_product(&[1, 2]).unwrap(), h(1));
        // The raw skew Schur polynomial of <1,2> carries an extra x_1 x_2.
        let raw = schur_skew(
            &BorderStrip::from_rows(&[1, 2], 2).unwrap().shape(),
            2,
            SchurMethod::Tableaux,
        );
        assert_eq!(raw, h(1).mul(&elementary(2, 2)));
        assert!(sl2_strip_product(&[1, 1, 1]).is_err());
        for rows in [&[3, 2, 2][..], &[1, 3, 1], &[2, 4, 2, 1]] {
            let strip = BorderStrip::from_rows(rows, 2).unwrap();
            assert_eq!(
                sl2_strip_product(rows).unwrap().weight_projection(),
                schur_skew(&strip.shape(), 2, SchurMethod::Tableaux).weight_projection()
            );
        }
    }

    #[test]
    fn two_variable_rewrite() {
        for a in 1..=6i64 {
            for b in 1..=6i64 {
                let lhs = complete(a, 2).mul(&complete(b, 2)).sub(&complete(a + b, 2));
                let rhs = complete(a - 1, 2).mul(&complete(b - 1, 2));
                assert_eq!(lhs, rhs.mul(&elementary(2, 2)), "a={a} b={b}");
                assert_eq!(lhs.weight_projection(), rhs.weight_projection());
            }
        }
    }

    #[test]
    fn stabilization_examples() {
        assert!(stabilization_check(&[1], 2, 2).unwrap());
        assert!(stabilization_check(&[], 2, 2).unwrap());
        assert!(stabilization_check(&[1, 1], 3, 3).unwrap());
        // Without the torus identification the raw polynomials differ.
        let raw = |cols: &[u32]| {
            schur_skew(
                &BorderStrip::from_cols(cols, 2).unwrap().shape(),
                2,
                SchurMethod::Tableaux,
            )
        };
        assert_ne!(raw(&[1]), raw(&[1, 2]));
    }

    proptest! {
        #[test]
        fn skew_schur_is_symmetric(parts in prop::collection::vec(0u32..5, 0..4), cut in prop::collection::vec(0u32..5, 0..4), nvars in 1usize..5) {
            let mut outer = parts.clone();
            outer.sort_unstable_by(|a, b| b.cmp(a));
            let mut inner: Vec<u32> = cut.iter().zip(&outer).map(|(c, o)| (*c).min(*o)).collect();
            inner.sort_unstable_by(|a, b| b.cmp(a));
            let (outer, inner) = (Partition::new(outer).unwrap(), Partition::new(inner).unwrap());
            prop_assume!(outer.contains(&inner));
            let shape = SkewShape::new(outer, inner).unwrap();
            prop_assert!(schur_skew(&shape, nvars, SchurMethod::Tableaux).is_symmetric());
        }
    }
}
