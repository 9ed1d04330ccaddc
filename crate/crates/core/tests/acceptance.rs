//! End-to-end acceptance run. Each criterion is checked at exact equality
//! and reported on its own line; the process exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Signed;

use spinon_core::affine::{
    bosonic_character, sl2_fermionic_character, sl2_spinon_enumeration, small_norm_weights,
    spinon_string_function, verify_spinon_cut, CutForm, FermionicForm, WeightFW,
};
use spinon_core::combinatorics::rapidity_energy::{discover_convention, DiscoveryOutcome};
use spinon_core::combinatorics::{
    enumerate_border_strips, modes_to_strip, Motif, Partition, RapiditySeq, SkewShape,
};
use spinon_core::qseries::{
    durfee_check, pochhammer_sum_check, z_product_check, PochhammerSumVariant,
};
use spinon_core::symfunc::{littlewood_richardson, rs_generating_check, schur_skew, SchurMethod};
use spinon_core::yangian::{
    drinfeld_evaluation, drinfeld_tame, gz_schemes, gz_to_sst, hw_module_table,
    sl2_yangian_decomposition, sst_to_gz, yangian_decomposition,
};

type Outcome = Result<String, String>;

/// `(id, name, budget in seconds, check)`.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q_identities() -> Outcome {
    for m in -10..=10 {
        ensure(durfee_check(m, 30), || format!("Durfee sum at m={m}"))?;
    }
    for variant in [
        PochhammerSumVariant::Alternating,
        PochhammerSumVariant::Positive,
    ] {
        for big_m in 0..=10 {
            for big_n in 0..=10 {
                ensure(pochhammer_sum_check(big_m, big_n, variant, 20), || {
                    format!("{variant:?} at M={big_m}, N={big_n}")
                })?;
            }
        }
    }
    for big_n in 1..=8 {
        ensure(z_product_check(big_n, big_n + 2, 20), || {
            format!("z-expansions at N={big_n}")
        })?;
    }
    for nvars in 1..=3 {
        ensure(rs_generating_check(4, nvars, 4, 4), || {
            format!("Rogers-Szego generating function, nvars={nvars}")
        })?;
    }
    Ok("21 Durfee sums, 242 Pochhammer sums, 8 z-products, 3 generating functions".into())
}

fn schur_kernel() -> Outcome {
    let mut shapes = 0;
    for size in 0..=6 {
        for lam in Partition::all_of(size) {
            for mu in lam.subpartitions() {
                let shape = SkewShape::new(lam.clone(), mu.clone()).map_err(|e| e.to_string())?;
                shapes += 1;
                for nvars in 1..=4 {
                    let h = schur_skew(&shape, nvars, SchurMethod::JacobiTrudiH);
                    let e = schur_skew(&shape, nvars, SchurMethod::JacobiTrudiE);
                    let t = schur_skew(&shape, nvars, SchurMethod::Tableaux);
                    ensure(h == e && e == t, || format!("{shape} in {nvars} variables"))?;
                }
                let lr = littlewood_richardson(&shape).map_err(|e| e.to_string())?;
                ensure(lr.values().all(|c| !c.is_negative()), || {
                    format!("negative LR coefficient in {shape}")
                })?;
                for nvars in 1..=4 {
                    let dim = schur_skew(&shape, nvars, SchurMethod::Tableaux).eval_ones();
                    let sum: BigInt = lr
                        .iter()
                        .map(|(nu, c)| {
                            c * schur_skew(
                                &SkewShape::straight(nu.clone()),
                                nvars,
                                SchurMethod::Tableaux,
                            )
                            .eval_ones()
                        })
                        .sum();
                    ensure(dim == sum, || {
                        format!("LR dimension of {shape} in {nvars} variables")
                    })?;
                }
            }
        }
    }
    Ok(format!("{shapes} skew shapes"))
}

fn spinon_cuts() -> Outcome {
    let mut weights = 0;
    for n in 2..=4u32 {
        for k in 0..n {
            for lam in small_norm_weights(n, k, 2).map_err(|e| e.to_string())? {
                weights += 1;
                let v = verify_spinon_cut(n, k, &lam, 8).map_err(|e| e.to_string())?;
                ensure(v.pass, || format!("n={n} k={k} lambda={lam}: {v:?}"))?;
                for spinons in (k as u64..=v.spinon_bound).step_by(n as usize) {
                    let a = spinon_string_function(n, k, &lam, spinons, CutForm::Multisum, 8)
                        .map_err(|e| e.to_string())?;
                    let b = spinon_string_function(n, k, &lam, spinons, CutForm::Alternating, 8)
                        .map_err(|e| e.to_string())?;
                    ensure(a == b, || {
                        format!("forms differ at n={n} k={k} lambda={lam} N={spinons}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{weights} weights"))
}

fn sl2_four_way() -> Outcome {
    for k in 0..=1 {
        let bos = bosonic_character(2, k, 10).map_err(|e| e.to_string())?;
        let tables = [
            ("root", sl2_fermionic_character(k, FermionicForm::Root, 10)),
            (
                "spinon",
                sl2_fermionic_character(k, FermionicForm::Spinon, 10),
            ),
            ("enumeration", sl2_spinon_enumeration(k, 10)),
        ];
        for (name, t) in tables {
            let t = t.map_err(|e| e.to_string())?;
            if let Some(d) = bos.first_difference(&t) {
                return Err(format!("k={k}, bosonic vs {name}: {d}"));
            }
        }
    }
    Ok("k = 0, 1 at qmax 10".into())
}

fn strip_decomposition() -> Outcome {
    let runs: [(u32, &[u32], usize); 3] = [(2, &[0, 1], 8), (3, &[0, 1, 2], 5), (4, &[0, 1], 3)];
    for (n, ks, qmax) in runs {
        for &k in ks {
            let bos = bosonic_character(n, k, qmax).map_err(|e| e.to_string())?;
            let dec = yangian_decomposition(n, k, qmax).map_err(|e| e.to_string())?;
            if let Some(d) = bos.first_difference(&dec) {
                return Err(format!("n={n} k={k}: {d}"));
            }
        }
    }
    let vac = yangian_decomposition(3, 0, 1).map_err(|e| e.to_string())?;
    let adjoint = schur_skew(
        &SkewShape::straight(Partition::new(vec![2, 1]).unwrap()),
        3,
        SchurMethod::Tableaux,
    );
    let block: BTreeMap<Vec<i64>, BigInt> =
        vac.block(1).into_iter().map(|(w, c)| (w.0, c)).collect();
    ensure(block == adjoint.weight_projection(), || {
        "n=3 k=0 q^1 block is not s_(2,1)".into()
    })?;
    ensure(block.values().sum::<BigInt>() == BigInt::from(8), || {
        "n=3 k=0 q^1 block does not have 8 states".into()
    })?;
    let fund = yangian_decomposition(3, 1, 0).map_err(|e| e.to_string())?;
    ensure(fund.delta() == Rational64::new(1, 3), || {
        "n=3 k=1 offset".into()
    })?;
    let expected: BTreeMap<WeightFW, BigInt> = [vec![1, 0], vec![-1, 1], vec![0, -1]]
        .into_iter()
        .map(|w| (WeightFW(w), BigInt::from(1)))
        .collect();
    ensure(fund.block(0) == expected, || {
        format!("n=3 k=1 ground block {:?}", fund.block(0))
    })?;
    Ok("7 tables plus both anchors".into())
}

fn sl2_yangian() -> Outcome {
    for k in 0..=1 {
        let bos = bosonic_character(2, k, 8).map_err(|e| e.to_string())?;
        let dec = sl2_yangian_decomposition(k, 8).map_err(|e| e.to_string())?;
        if let Some(d) = bos.first_difference(&dec) {
            return Err(format!("k={k}: {d}"));
        }
    }
    let mut terms = 0;
    for size in 0..=5 {
        for lam in Partition::all_of(size) {
            for spinons in lam.len() as u32..=lam.len() as u32 + 5 {
                let m = hw_module_table(&lam, spinons).map_err(|e| e.to_string())?;
                let bad = m.mismatches().map_err(|e| e.to_string())?;
                ensure(bad.is_empty(), || {
                    format!("(lambda={lam}, N={spinons}): {bad:?}")
                })?;
                terms += 1;
            }
        }
    }
    Ok(format!("{terms} (lambda, N) terms"))
}

fn bijection_census() -> Outcome {
    let mut strips = 0;
    for n in [2u32, 3] {
        for size in 0..=6 {
            for strip in enumerate_border_strips(n, size, true) {
                strips += 1;
                let seq = RapiditySeq::from_strip(&strip).map_err(|e| e.to_string())?;
                ensure(seq.to_strip() == strip, || {
                    format!("rapidity round trip of {strip}")
                })?;
                let motif = Motif::from_rapidities(&seq);
                ensure(motif.to_rapidities() == seq, || {
                    format!("motif round trip of {strip}")
                })?;
                ensure(motif.to_strip() == strip, || {
                    format!("square construction on {strip}")
                })?;
            }
        }
    }
    let mut lists = 0;
    for len in 0..=6usize {
        // Gapless weakly increasing lists are determined by where the value
        // steps up, so enumerate step masks.
        for mask in 0u32..(1 << len.saturating_sub(1)) {
            let mut modes = vec![0u32; len];
            for i in 1..len {
                modes[i] = modes[i - 1] + ((mask >> (i - 1)) & 1);
            }
            let n = len.max(2) as u32;
            let strip = modes_to_strip(&modes, n).map_err(|e| e.to_string())?;
            let cols = strip.cols();
            let s = cols.len();
            let weighted: u64 = cols
                .iter()
                .enumerate()
                .map(|(i, &b)| (s - 1 - i) as u64 * b as u64)
                .sum();
            ensure(strip.size() as usize == len, || {
                format!("size of modes_to_strip({modes:?})")
            })?;
            ensure(
                weighted == modes.iter().map(|&m| m as u64).sum::<u64>(),
                || format!("column sum of {modes:?}"),
            )?;
            lists += 1;
        }
    }
    Ok(format!("{strips} strips, {lists} mode lists"))
}

fn gz_and_drinfeld() -> Outcome {
    let mut schemes = 0;
    for size in 0..=5 {
        for lam in Partition::all_of(size) {
            for mu in lam.subpartitions() {
                for n in 1..=3u32 {
                    for base in mu.len() as u32..=2 {
                        if lam.len() > (base + n) as usize {
                            continue;
                        }
                        let all = gz_schemes(&lam, &mu, n, base).map_err(|e| e.to_string())?;
                        let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
                        for s in &all {
                            *counts.entry(s.content()).or_default() += 1;
                            let t = gz_to_sst(s);
                            ensure(
                                t.is_semistandard(n) && t.content(n as usize) == s.content(),
                                || format!("tableau of {s:?}"),
                            )?;
                            let back = sst_to_gz(&t, n, base).map_err(|e| e.to_string())?;
                            ensure(&back == s, || format!("round trip of {s:?}"))?;
                        }
                        schemes += all.len();
                        let shape =
                            SkewShape::new(lam.clone(), mu.clone()).map_err(|e| e.to_string())?;
                        let schur: BTreeMap<Vec<u32>, BigInt> =
                            schur_skew(&shape, n as usize, SchurMethod::Tableaux)
                                .terms()
                                .map(|(e, c)| (e.clone(), c.clone()))
                                .collect();
                        ensure(counts == schur, || {
                            format!("GZ counts for {shape}, n={n}, N={base}")
                        })?;
                    }
                }
            }
        }
    }
    for n in 2..=4u32 {
        for size in 0..=6 {
            for lam in Partition::all_of_bounded(size, n as usize) {
                let eval = drinfeld_evaluation(&lam, n).map_err(|e| e.to_string())?;
                ensure(eval.roots_form_strings(), || format!("roots of {lam}"))?;
                let tame = drinfeld_tame(&SkewShape::straight(lam.clone()), n)
                    .map_err(|e| e.to_string())?;
                ensure(tame == eval, || {
                    format!("tame vs evaluation for {lam}, n={n}")
                })?;
            }
        }
    }
    Ok(format!("{schemes} schemes"))
}

fn rapidity_energy() -> Outcome {
    let report = discover_convention(&[2, 3], 6).map_err(|e| e.to_string())?;
    let tally: Vec<String> = report
        .conventions
        .iter()
        .map(|c| format!("{:?} {}/{}", c.alignment, c.matched, c.total))
        .collect();
    match report.outcome {
        DiscoveryOutcome::Found { alignment } => Ok(format!(
            "{alignment:?} reproduces the energy ({})",
            tally.join(", ")
        )),
        DiscoveryOutcome::Mismatch => {
            let json = serde_json::to_string(&report).map_err(|e| e.to_string())?;
            Ok(format!("no single convention; report {json}"))
        }
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "q-series identities", 30, q_identities),
        (2, "Schur kernel", 60, schur_kernel),
        (3, "spinon cuts of the string functions", 60, spinon_cuts),
        (4, "sl2 four-way character equality", 30, sl2_four_way),
        (5, "border-strip decomposition", 120, strip_decomposition),
        (6, "sl2 Yangian decomposition", 30, sl2_yangian),
        (7, "bijection census", 10, bijection_census),
        (
            8,
            "GZ schemes and Drinfel'd polynomials",
            30,
            gz_and_drinfeld,
        ),
        (9, "rapidity energy convention", 60, rapidity_energy),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {budget} s budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {id} ({name}) in {:.2} s: {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
