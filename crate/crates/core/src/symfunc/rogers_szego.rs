use num_bigint::BigInt;

use super::poly::QSymPoly;
use crate::qseries::{inv_pochhammer, qmultinomial, QSeries};

/// Calls `visit` with every composition of `total` into `parts` non-negative
/// entries.
fn for_each_composition(total: u32, parts: usize, visit: &mut impl FnMut(&[u32])) {
    fn go(rem: u32, cur: &mut Vec<u32>, parts: usize, visit: &mut impl FnMut(&[u32])) {
        if cur.len() + 1 == parts {
            cur.push(rem);
            visit(cur);
            cur.pop();
            return;
        }
        for a in (0..=rem).rev() {
            cur.push(a);
            go(rem - a, cur, parts, visit);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    go(total, &mut Vec::with_capacity(parts), parts, visit);
}

/// Rogers-Szego polynomial `H_N(x_1..x_nvars; q)`: every composition of `N`
/// weighted by its q-multinomial.
pub fn rogers_szego(total: u32, nvars: usize, qmax: usize) -> QSymPoly {
    let mut out = QSymPoly::zero(nvars);
    for_each_composition(total, nvars, &mut |c| {
        let ks: Vec<i64> = c.iter().map(|&k| k as i64).collect();
        out.add_term(
            c.to_vec(),
            qmultinomial(&ks, qmax).expect("non-negative parts"),
        );
    });
    out
}

/// Compares `sum_N H_N t^N / (q)_N` with `prod_i (t x_i; q)_inf^{-1}` through
/// `t^D`, where `D = min(nmax, tdeg)`. Since every `t` comes with one `x`,
/// the `t`-degree equals the total `x`-degree and is not tracked separately.
///
/// The right side is expanded as the literal product over `j = 0..=qmax` of
/// geometric series in `x_i q^j`; factors with `j > qmax` are `1` at this
/// truncation.
pub fn rs_generating_check(nmax: u32, nvars: usize, tdeg: u32, qmax: usize) -> bool {
    let (lhs, rhs) = rs_generating_sides(nmax, nvars, tdeg, qmax);
    lhs == rhs
}

pub fn rs_generating_sides(
    nmax: u32,
    nvars: usize,
    tdeg: u32,
    qmax: usize,
) -> (QSymPoly, QSymPoly) {
    let top = nmax.min(tdeg);
    let mut lhs = QSymPoly::zero(nvars);
    for big_n in 0..=top {
        let weight = inv_pochhammer(big_n as usize, qmax);
        lhs = lhs.add(&rogers_szego(big_n, nvars, qmax).scale(&weight));
    }

    // One variable: coefficients of x^a in prod_j 1/(1 - x q^j), a <= top.
    let mut single: Vec<QSeries> = (0..=top)
        .map(|a| QSeries::from_coeffs([i64::from(a == 0)], qmax))
        .collect();
    for j in 0..=qmax {
        let mut next = vec![QSeries::zero(qmax); top as usize + 1];
        for (a, c) in single.iter().enumerate() {
            for b in 0..=(top as usize - a) {
                let step = QSeries::monomial(j * b, BigInt::from(1), qmax);
                next[a + b] = &next[a + b] + &(c * &step);
            }
        }
        single = next;
    }
    let mut rhs = QSymPoly::zero(nvars);
    for total in 0..=top {
        for_each_composition(total, nvars, &mut |c| {
            let coeff = c
                .iter()
                .fold(QSeries::one(qmax), |acc, &a| &acc * &single[a as usize]);
            rhs.add_term(c.to_vec(), coeff);
        });
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::poly::{complete, SymPoly};

    #[test]
    fn low_degree_examples() {
        assert_eq!(
            rogers_szego(0, 3, 4),
            QSymPoly::constant(QSeries::one(4), 3)
        );
        let h1 = complete(1, 3).map_coeffs(|c| QSeries::from_coeffs([c.clone()], 4));
        assert_eq!(rogers_szego(1, 3, 4), h1);
        let h2 = rogers_szego(2, 2, 4);
        assert_eq!(h2.coeff(&[1, 1]), Some(&QSeries::from_coeffs([1, 1], 4)));
        assert_eq!(h2.coeff(&[2, 0]), Some(&QSeries::one(4)));
        assert_eq!(h2.len(), 3);
    }

    #[test]
    fn q_equal_one_gives_power_of_the_sum() {
        for total in 0..=6 {
            for nvars in 1..=3 {
                // Full polynomial degree is at most C(total, 2), so a
                // truncation of 15 keeps every coefficient.
                let at_one = rogers_szego(total, nvars, 15).map_coeffs(|c| c.coeff_sum());
                let power =
                    (0..total).fold(SymPoly::one(nvars), |acc, _| acc.mul(&complete(1, nvars)));
                assert_eq!(at_one, power, "N={total} nvars={nvars}");
            }
        }
    }

    #[test]
    fn generating_function_examples() {
        assert!(rs_generating_check(0, 2, 0, 4));
        assert!(rs_generating_check(2, 2, 2, 4));
        assert!(rs_generating_check(4, 3, 4, 4));
    }

    #[test]
    fn generating_check_detects_missing_terms() {
        let (mut lhs, rhs) = rs_generating_sides(2, 2, 2, 4);
        lhs.add_term(vec![1, 1], QSeries::one(4));
        assert_ne!(lhs, rhs);
    }
}
