//! The `sl_2` fermionic character formulas and the spinon basis.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{CharacterTable, WeightFW};
use crate::error::{Error, Result};
use crate::qseries::InvPochhammerTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FermionicForm {
    /// Two quasi-particles attached to the roots.
    Root,
    /// Two quasi-particles attached to the weights of the doublet.
    Spinon,
}

fn check_k(k: u32) -> Result<()> {
    if k > 1 {
        return Err(Error::Domain(format!(
            "sl_2 level-1 modules have k in {{0,1}}, got {k}"
        )));
    }
    Ok(())
}

/// Level-1 `sl_2` character from one of the two fermionic sums.
pub fn sl2_fermionic_character(k: u32, form: FermionicForm, qmax: usize) -> Result<CharacterTable> {
    check_k(k)?;
    let mut table = CharacterTable::new(2, k, qmax)?;
    let q = qmax as i64;
    let k = k as i64;
    match form {
        FermionicForm::Root => {
            // m1^2 - m1 m2 + m2^2 + k(m1 - m2) >= 3M^2/4 - M for M = max(m1, m2).
            let mut cap = 0i64;
            while 3 * cap * cap - 4 * cap <= 4 * q {
                cap += 1;
            }
            let inv = InvPochhammerTable::new(cap as usize, qmax);
            for m1 in 0..cap {
                for m2 in 0..cap {
                    let e = m1 * m1 - m1 * m2 + m2 * m2 + k * (m1 - m2);
                    assert!(e >= 0, "root-form exponent {e} is negative");
                    if e > q {
                        continue;
                    }
                    let series = inv.get(m1).unwrap().mul_with_offsets(inv.get(m2).unwrap());
                    table.add_series(&WeightFW(vec![2 * (m1 - m2) + k]), e as usize, &series);
                }
            }
        }
        FermionicForm::Spinon => {
            let mut cap = 0i64;
            while cap * cap - k <= 4 * q {
                cap += 1;
            }
            let inv = InvPochhammerTable::new(cap as usize, qmax);
            for total in (k..cap).step_by(2) {
                let e = (total * total - k) / 4;
                for m1 in 0..=total {
                    let m2 = total - m1;
                    let series = inv.get(m1).unwrap().mul_with_offsets(inv.get(m2).unwrap());
                    table.add_series(&WeightFW(vec![m1 - m2]), e as usize, &series);
                }
            }
        }
    }
    Ok(table)
}

/// A basis vector of the `sl_2` spinon Fock space: `M1` spinons of one
/// polarization and `M2` of the other, each with a weakly increasing list of
/// non-negative modes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinonState {
    pub modes1: Vec<u32>,
    pub modes2: Vec<u32>,
}

impl SpinonState {
    pub fn new(modes1: Vec<u32>, modes2: Vec<u32>) -> Result<Self> {
        for modes in [&modes1, &modes2] {
            if modes.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Domain(format!(
                    "modes {modes:?} are not weakly increasing"
                )));
            }
        }
        Ok(SpinonState { modes1, modes2 })
    }

    pub fn m1(&self) -> usize {
        self.modes1.len()
    }

    pub fn m2(&self) -> usize {
        self.modes2.len()
    }

    pub fn weight(&self) -> WeightFW {
        WeightFW(vec![self.m1() as i64 - self.m2() as i64])
    }

    /// `4 L_0`, kept integral: `(M1 + M2)^2 + 4 (sum of modes)`.
    pub fn energy_times_four(&self) -> u64 {
        let m = (self.m1() + self.m2()) as u64;
        let modes: u64 = self
            .modes1
            .iter()
            .chain(&self.modes2)
            .map(|&x| x as u64)
            .sum();
        m * m + 4 * modes
    }
}

/// Calls `visit` on every spinon state in `L(Lambda_k)` whose energy is at
/// most `Delta_k + qmax`.
pub fn for_each_spinon_state(
    k: u32,
    qmax: usize,
    mut visit: impl FnMut(&SpinonState),
) -> Result<()> {
    check_k(k)?;
    let q = qmax as u64;
    let k = k as u64;
    let mut total = k;
    while total * total - k <= 4 * q {
        let residual = (4 * q + k - total * total) / 4;
        for m1 in 0..=total as usize {
            let m2 = total as usize - m1;
            let mut first = Vec::with_capacity(m1);
            mode_lists(m1, 0, residual, &mut first, &mut |a, used| {
                let mut second = Vec::with_capacity(m2);
                mode_lists(m2, 0, residual - used, &mut second, &mut |b, _| {
                    visit(&SpinonState {
                        modes1: a.to_vec(),
                        modes2: b.to_vec(),
                    });
                });
            });
        }
        total += 2;
    }
    Ok(())
}

/// Weakly increasing lists of `len` values, each at least `floor`, whose sum
/// is at most `budget`. The callback receives the list and its sum.
fn mode_lists(
    len: usize,
    floor: u32,
    budget: u64,
    cur: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32], u64),
) {
    if cur.len() == len {
        let used = cur.iter().map(|&x| x as u64).sum();
        visit(cur, used);
        return;
    }
    let used: u64 = cur.iter().map(|&x| x as u64).sum();
    let remaining = (len - cur.len()) as u64;
    let mut v = floor;
    // Every later entry is at least v.
    while used + remaining * v as u64 <= budget {
        cur.push(v);
        mode_lists(len, v, budget, cur, visit);
        cur.pop();
        v += 1;
    }
}

/// Character of `L(Lambda_k)` built by counting spinon basis vectors.
pub fn sl2_spinon_enumeration(k: u32, qmax: usize) -> Result<CharacterTable> {
    let mut table = CharacterTable::new(2, k, qmax)?;
    let one = BigInt::one();
    for_each_spinon_state(k, qmax, |s| {
        let rel = s.energy_times_four() - k as u64;
        debug_assert_eq!(rel % 4, 0);
        table.add(s.weight(), (rel / 4) as usize, &one);
    })?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::bosonic_character;

    #[test]
    fn ground_rows() {
        for form in [FermionicForm::Root, FermionicForm::Spinon] {
            let t = sl2_fermionic_character(0, form, 0).unwrap();
            assert_eq!(t.rows().count(), 1);
            assert_eq!(t.get(&WeightFW(vec![0]), 0), BigInt::one());
        }
        let t = sl2_fermionic_character(0, FermionicForm::Spinon, 1).unwrap();
        let b = t.block(1);
        for w in [-2, 0, 2] {
            assert!(b.contains_key(&WeightFW(vec![w])));
        }
    }

    #[test]
    fn all_four_tables_agree() {
        for k in 0..=1 {
            let bos = bosonic_character(2, k, 8).unwrap();
            assert_eq!(
                sl2_fermionic_character(k, FermionicForm::Root, 8)
                    .unwrap()
                    .first_difference(&bos),
                None
            );
            assert_eq!(
                sl2_fermionic_character(k, FermionicForm::Spinon, 8)
                    .unwrap()
                    .first_difference(&bos),
                None
            );
            assert_eq!(
                sl2_spinon_enumeration(k, 8).unwrap().first_difference(&bos),
                None
            );
        }
    }

    #[test]
    fn low_lying_states() {
        let mut states = Vec::new();
        for_each_spinon_state(0, 0, |s| states.push(s.clone())).unwrap();
        assert_eq!(states, vec![SpinonState::new(vec![], vec![]).unwrap()]);

        let mut states = Vec::new();
        for_each_spinon_state(1, 0, |s| states.push(s.weight())).unwrap();
        states.sort();
        assert_eq!(states, vec![WeightFW(vec![-1]), WeightFW(vec![1])]);

        let mut at_one = Vec::new();
        for_each_spinon_state(0, 1, |s| {
            if s.energy_times_four() == 4 {
                at_one.push((
                    s.m1(),
                    s.m2(),
                    s.modes1.iter().chain(&s.modes2).all(|&m| m == 0),
                ));
            }
        })
        .unwrap();
        at_one.sort();
        assert_eq!(at_one, vec![(0, 2, true), (1, 1, true), (2, 0, true)]);
    }

    #[test]
    fn rejects_decreasing_modes() {
        assert!(SpinonState::new(vec![2, 1], vec![]).is_err());
        assert!(sl2_spinon_enumeration(2, 1).is_err());
    }
}
