use super::{
    euler_inverse, inv_pochhammer_z_expansion, inv_pochhammer_z_product, pochhammer_z_expansion,
    pochhammer_z_product, InvPochhammerTable, QSeries, ZPolyQ,
};

/// `sum_{a-b=m} q^{ab} / ((q)_a (q)_b)` truncated at `qmax`.
///
/// With `b = a - m` the exponent `ab` is increasing in `a` over the admissible
/// range, so the loop stops at the first term with `ab > qmax`; every later
/// term lies entirely beyond the truncation.
pub fn durfee_sum(m: i64, qmax: usize) -> QSeries {
    let start = m.max(0);
    let mut amax = start;
    while amax * (amax - m) <= qmax as i64 {
        amax += 1;
    }
    let inv = InvPochhammerTable::new((amax + m.abs()) as usize, qmax);
    let mut acc = QSeries::zero(qmax);
    for a in start..amax {
        let b = a - m;
        let term = inv.get(a).unwrap().mul_with_offsets(inv.get(b).unwrap());
        acc = &acc + &term.shift((a * b) as usize);
    }
    acc
}

/// Durfee-square identity: the sum above equals the partition function.
pub fn durfee_check(m: i64, qmax: usize) -> bool {
    durfee_sum(m, qmax) == euler_inverse(qmax)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochhammerSumVariant {
    /// Alternating sum against `q^{MN} / ((q)_M (q)_N)`.
    Alternating,
    /// Positive sum against `1 / ((q)_M (q)_N)`.
    Positive,
}

/// Both sides of the two-variant identity, as `(lhs, rhs)`.
pub fn pochhammer_sum_sides(
    m_cap: usize,
    n_cap: usize,
    variant: PochhammerSumVariant,
    qmax: usize,
) -> (QSeries, QSeries) {
    let inv = InvPochhammerTable::new(m_cap.max(n_cap), qmax);
    let recip = |a: usize| inv.get(a as i64).unwrap();
    let mut lhs = QSeries::zero(qmax);
    for m in 0..=m_cap.min(n_cap) {
        let denom = recip(m_cap - m)
            .mul_with_offsets(recip(n_cap - m))
            .mul_with_offsets(recip(m));
        let term = match variant {
            PochhammerSumVariant::Alternating => {
                let t = denom.shift(m * (m.saturating_sub(1)) / 2);
                if m % 2 == 1 {
                    -&t
                } else {
                    t
                }
            }
            PochhammerSumVariant::Positive => denom.shift((m_cap - m) * (n_cap - m)),
        };
        lhs = &lhs + &term;
    }
    let base = recip(m_cap).mul_with_offsets(recip(n_cap));
    let rhs = match variant {
        PochhammerSumVariant::Alternating => base.shift(m_cap * n_cap),
        PochhammerSumVariant::Positive => base,
    };
    (lhs, rhs)
}

pub fn pochhammer_sum_check(
    m: usize,
    n: usize,
    variant: PochhammerSumVariant,
    qmax: usize,
) -> bool {
    let (lhs, rhs) = pochhammer_sum_sides(m, n, variant, qmax);
    lhs == rhs
}

/// Checks both z-expansions of the Pochhammer symbol against literal
/// products, and that the two expansions are mutually inverse.
pub fn z_product_check(n: usize, zdeg: usize, qmax: usize) -> bool {
    let Ok(direct) = pochhammer_z_expansion(n as i64, qmax) else {
        return false;
    };
    if direct != pochhammer_z_product(n, qmax) {
        return false;
    }
    if n == 0 {
        return true;
    }
    let Ok(inverse) = inv_pochhammer_z_expansion(n as i64, zdeg, qmax) else {
        return false;
    };
    inverse == inv_pochhammer_z_product(n, zdeg, qmax)
        && direct.resized(zdeg).mul(&inverse) == ZPolyQ::one(zdeg, qmax)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn durfee_examples() {
        assert_eq!(durfee_sum(0, 3), QSeries::from_coeffs([1, 1, 2, 3], 3));
        assert!(durfee_check(0, 3));
        assert!(durfee_check(1, 3));
        assert_eq!(durfee_sum(4, 12), durfee_sum(-4, 12));
    }

    #[test]
    fn d3_examples() {
        for v in [
            PochhammerSumVariant::Alternating,
            PochhammerSumVariant::Positive,
        ] {
            assert!(pochhammer_sum_check(0, 0, v, 5));
        }
        let (lhs, rhs) = pochhammer_sum_sides(1, 1, PochhammerSumVariant::Alternating, 4);
        assert_eq!(lhs, QSeries::from_coeffs([0, 1, 2, 3, 4], 4));
        assert_eq!(lhs, rhs);
        assert!(pochhammer_sum_check(
            2,
            1,
            PochhammerSumVariant::Positive,
            4
        ));
    }

    #[test]
    fn d3_detects_a_wrong_right_side() {
        let (lhs, _) = pochhammer_sum_sides(2, 2, PochhammerSumVariant::Positive, 6);
        let (_, rhs_i) = pochhammer_sum_sides(2, 2, PochhammerSumVariant::Alternating, 6);
        assert_ne!(lhs, rhs_i);
    }

    #[test]
    fn z_products_small() {
        for n in 0..=5 {
            assert!(z_product_check(n, 6, 10), "N={n}");
        }
    }
}
