use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{drinfeld_tame, DrinfeldPolys};
use crate::affine::{CharacterTable, WeightFW};
use crate::combinatorics::{
    enumerate_border_strips, sl2_partition_to_strip, BorderStrip, Partition,
};
use crate::error::{Error, Result};
use crate::symfunc::{complete, schur_skew, SchurMethod, SymPoly};

/// Largest strip size that can have energy at most `delta + qmax`.
///
/// A reduced strip of size `S` has `E >= S/n - (n-1)/(2n)`; the bound is
/// checked on every strip that is actually used.
pub fn strip_size_bound(n: u32, delta: Rational64, qmax: usize) -> u32 {
    let n64 = n as i64;
    let cap = Rational64::from_integer(n64) * (delta + Rational64::from_integer(qmax as i64))
        + Rational64::new(n64 - 1, 2);
    cap.floor().to_integer() as u32
}

fn energy_floor(n: u32, size: u32) -> Rational64 {
    Rational64::new(2 * size as i64 - (n as i64 - 1), 2 * n as i64)
}

fn add_projection(table: &mut CharacterTable, qdeg: usize, poly: &SymPoly) {
    for (w, c) in poly.weight_projection() {
        table.add(WeightFW(w), qdeg, &c);
    }
}

/// Character of `L(Lambda_k)` as `sum q^{E(kappa)} s_kappa` over reduced
/// border strips `kappa` with `|kappa| = k mod n`.
pub fn yangian_decomposition(n: u32, k: u32, qmax: usize) -> Result<CharacterTable> {
    let mut table = CharacterTable::new(n, k, qmax)?;
    let delta = table.delta();
    let cutoff = delta + Rational64::from_integer(qmax as i64);
    let top = strip_size_bound(n, delta, qmax);

    let mut strips = Vec::new();
    for size in (k..=top).step_by(n as usize) {
        for strip in enumerate_border_strips(n, size, true) {
            let e = strip.energy()?;
            if e < energy_floor(n, size) {
                return Err(Error::Internal(format!(
                    "strip {strip} has energy {e} below the size bound"
                )));
            }
            if e <= cutoff {
                strips.push((strip, e));
            }
        }
    }

    let terms: Vec<(usize, SymPoly)> = strips
        .par_iter()
        .map(|(strip, e)| {
            let rel = e - delta;
            if !rel.is_integer() || rel < Rational64::zero() {
                return Err(Error::Internal(format!(
                    "strip {strip} has energy {e}, not in Delta_{k} + Z>=0"
                )));
            }
            let s = schur_skew(&strip.shape(), n as usize, SchurMethod::Tableaux);
            Ok((rel.to_integer() as usize, s))
        })
        .collect::<Result<_>>()?;
    for (qdeg, s) in &terms {
        add_projection(&mut table, *qdeg, s);
    }
    Ok(table)
}

/// `prod_{i >= 0} h_{m_i}` in two variables with `m_0 = N - l(lambda)`.
fn sl2_yangian_character(lam: &Partition, spinons: u32) -> SymPoly {
    let m0 = spinons - lam.len() as u32;
    let mut acc = complete(m0 as i64, 2);
    for &m in lam.multiplicities().values() {
        acc = acc.mul(&complete(m as i64, 2));
    }
    acc
}

/// Character of `L(Lambda_k)` for `sl_2` as a sum over `Y(sl_2)` highest
/// weights `(lambda, N)` with `l(lambda) <= N` and `N = k mod 2`, each with
/// weight `q^{N^2/4 + |lambda|}`.
pub fn sl2_yangian_decomposition(k: u32, qmax: usize) -> Result<CharacterTable> {
    let mut table = CharacterTable::new(2, k, qmax)?;
    let q = qmax as u64;
    let mut spinons = k;
    while (spinons as u64).pow(2) - k as u64 <= 4 * q {
        let base = ((spinons as u64).pow(2) - k as u64) / 4;
        for size in 0..=(q - base) as u32 {
            for lam in Partition::all_of_bounded(size, spinons as usize) {
                add_projection(
                    &mut table,
                    (base + size as u64) as usize,
                    &sl2_yangian_character(&lam, spinons),
                );
            }
        }
        spinons += 2;
    }
    Ok(table)
}

/// One `Y(sl_2)` highest-weight module inside the level-1 module, together
/// with its border-strip image.
#[derive(Clone, Debug, Serialize)]
pub struct HwModule {
    pub label: Partition,
    pub spinons: u32,
    #[serde(with = "crate::qseries::rational_str")]
    pub energy: Rational64,
    pub character: SymPoly,
    pub strip: BorderStrip,
    pub drinfeld: DrinfeldPolys,
}

impl HwModule {
    /// Disagreements between the label-side and strip-side data.
    pub fn mismatches(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let e = self.strip.energy()?;
        if e != self.energy {
            out.push(format!(
                "energy {} from the label, {e} from the strip",
                self.energy
            ));
        }
        let s = schur_skew(&self.strip.shape(), 2, SchurMethod::JacobiTrudiH);
        if s.weight_projection() != self.character.weight_projection() {
            out.push(format!(
                "character of {} differs from s of strip {}",
                self.label, self.strip
            ));
        }
        let dim: BigInt = self.character.eval_ones();
        if dim != s.eval_ones() {
            out.push(format!(
                "dimension {dim} differs from strip dimension {}",
                s.eval_ones()
            ));
        }
        Ok(out)
    }
}

/// Label-side and strip-side data of the `(lambda, N)` module.
pub fn hw_module_table(lam: &Partition, spinons: u32) -> Result<HwModule> {
    if lam.len() > spinons as usize {
        return Err(Error::TooManyParts {
            parts: lam.len(),
            spinons,
        });
    }
    let energy = Rational64::from_integer(lam.size() as i64)
        + Rational64::new((spinons * spinons) as i64, 4);
    let strip = sl2_partition_to_strip(lam, spinons)?;
    let drinfeld = drinfeld_tame(&strip.shape(), 2)?;
    Ok(HwModule {
        label: lam.clone(),
        spinons,
        energy,
        character: sl2_yangian_character(lam, spinons),
        strip,
        drinfeld,
    })
}
