//! Verification suites: each suite is a list of named, independent cases
//! that check one identity at fixed parameters and report where it fails.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{
    bosonic_character, sl2_fermionic_character, sl2_spinon_enumeration, small_norm_weights,
    verify_spinon_cut, CharacterTable, FermionicForm,
};
use crate::combinatorics::rapidity_energy::{discover_convention, DiscoveryOutcome};
use crate::combinatorics::{
    enumerate_border_strips, modes_to_strip, Motif, Partition, RapiditySeq, SkewShape,
};
use crate::error::{Error, Result};
use crate::qseries::{
    durfee_sum, euler_inverse, pochhammer_sum_sides, z_product_check, PochhammerSumVariant,
};
use crate::symfunc::{littlewood_richardson, rs_generating_sides, schur_skew, SchurMethod};
use crate::yangian::{
    drinfeld_evaluation, drinfeld_tame, gz_schemes, gz_to_sst, hw_module_table,
    sl2_yangian_decomposition, sst_to_gz, yangian_decomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Qids,
    Schur,
    Bijections,
    SpinonCut,
    Sl2,
    Decomposition,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Qids,
        Suite::Schur,
        Suite::Bijections,
        Suite::SpinonCut,
        Suite::Sl2,
        Suite::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qids => "qids",
            Suite::Schur => "schur",
            Suite::Bijections => "bijections",
            Suite::SpinonCut => "spinon-cut",
            Suite::Sl2 => "sl2",
            Suite::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Preset bounds. `Desk` covers the full acceptance ranges; `Quick` is a
/// small smoke-test slice of every suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Profile {
    #[default]
    Desk,
    Quick,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Profile::Desk),
            "quick" => Ok(Profile::Quick),
            _ => Err(Error::Parse(format!("unknown profile {s:?}"))),
        }
    }
}

/// Profile plus optional overrides. `n` and `k` restrict the rank and class
/// where a suite ranges over them; `qmax` replaces the profile truncation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Plan {
    pub profile: Profile,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub qmax: Option<usize>,
}

impl Plan {
    fn q(&self, desk: usize, quick: usize) -> usize {
        self.qmax.unwrap_or(match self.profile {
            Profile::Desk => desk,
            Profile::Quick => quick,
        })
    }

    fn pick<T>(&self, desk: T, quick: T) -> T {
        match self.profile {
            Profile::Desk => desk,
            Profile::Quick => quick,
        }
    }

    fn wants_n(&self, n: u32) -> bool {
        self.n.is_none_or(|m| m == n)
    }

    fn wants_k(&self, k: u32) -> bool {
        self.k.is_none_or(|m| m == k)
    }
}

type Check = Box<dyn Fn() -> Result<Option<String>> + Send + Sync>;

/// A single identity instance. The check returns `None` on success and a
/// locus describing the first disagreement otherwise.
pub struct Case {
    pub id: String,
    pub params: Value,
    check: Check,
}

impl Case {
    pub fn new(
        id: impl Into<String>,
        params: Value,
        check: impl Fn() -> Result<Option<String>> + Send + Sync + 'static,
    ) -> Self {
        Case {
            id: id.into(),
            params,
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> CaseRecord {
        let start = Instant::now();
        let outcome = (self.check)();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let locus = match outcome {
            Ok(locus) => locus,
            Err(e) => Some(format!("error: {e}")),
        };
        CaseRecord {
            id: self.id.clone(),
            params: self.params.clone(),
            pass: locus.is_none(),
            locus,
            elapsed_ms,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub params: Value,
    pub pass: bool,
    pub locus: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub pass: bool,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

fn table_locus(left: &CharacterTable, right: &CharacterTable) -> Option<String> {
    left.first_difference(right).map(|d| d.to_string())
}

fn qids_cases(plan: &Plan) -> Vec<Case> {
    let mut out = Vec::new();
    let durfee_q = plan.q(30, 12);
    let reach = plan.pick(10i64, 4);
    for m in -reach..=reach {
        out.push(Case::new(
            format!("qids/durfee/m={m:+03}"),
            json!({"m": m, "qmax": durfee_q}),
            move || {
                let lhs = durfee_sum(m, durfee_q);
                Ok(lhs
                    .first_difference(&euler_inverse(durfee_q))
                    .map(|d| format!("q^{d}")))
            },
        ));
    }
    let d3_q = plan.q(20, 8);
    let cap = plan.pick(10usize, 4);
    for (variant, tag) in [
        (PochhammerSumVariant::Alternating, "alternating"),
        (PochhammerSumVariant::Positive, "positive"),
    ] {
        for big_m in 0..=cap {
            for big_n in 0..=cap {
                let id = format!("qids/pochhammer-sum-{tag}/M={big_m:02}/N={big_n:02}");
                out.push(Case::new(
                    id,
                    json!({"variant": tag, "M": big_m, "N": big_n, "qmax": d3_q}),
                    move || {
                        let (lhs, rhs) = pochhammer_sum_sides(big_m, big_n, variant, d3_q);
                        Ok(lhs.first_difference(&rhs).map(|d| format!("q^{d}")))
                    },
                ));
            }
        }
    }
    let z_q = plan.q(20, 8);
    for big_n in 1..=plan.pick(8usize, 4) {
        let zdeg = big_n + 2;
        out.push(Case::new(
            format!("qids/z-product/N={big_n:02}"),
            json!({"N": big_n, "zdeg": zdeg, "qmax": z_q}),
            move || {
                Ok((!z_product_check(big_n, zdeg, z_q))
                    .then(|| "expansion disagrees with the product".to_string()))
            },
        ));
    }
    let rs_q = plan.q(4, 3);
    let nmax = plan.pick(4u32, 3);
    for nvars in 1..=3usize {
        out.push(Case::new(
            format!("qids/rogers-szego/nvars={nvars}"),
            json!({"Nmax": nmax, "nvars": nvars, "qmax": rs_q}),
            move || {
                let (lhs, rhs) = rs_generating_sides(nmax, nvars, nmax, rs_q);
                if lhs == rhs {
                    return Ok(None);
                }
                let diff = lhs.sub(&rhs);
                Ok(Some(match diff.leading() {
                    Some((e, c)) => format!("monomial {e:?} differs by {c}"),
                    None => "sides differ".into(),
                }))
            },
        ));
    }
    out
}

fn schur_cases(plan: &Plan) -> Vec<Case> {
    let top = plan.pick(6u32, 4);
    let nv = plan.pick(4usize, 3);
    let mut out = Vec::new();
    for size in 0..=top {
        for lam in Partition::all_of(size) {
            let id = format!(
                "schur/outer={}",
                lam.parts()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(".")
            );
            let params = json!({"outer": lam.parts(), "max_nvars": nv});
            out.push(Case::new(id, params, move || {
                for mu in lam.subpartitions() {
                    let shape = SkewShape::new(lam.clone(), mu.clone())?;
                    for nvars in 1..=nv {
                        let polys: Vec<_> = SchurMethod::ALL
                            .iter()
                            .map(|&m| schur_skew(&shape, nvars, m))
                            .collect();
                        if polys[0] != polys[1] || polys[0] != polys[2] {
                            return Ok(Some(format!(
                                "{lam}/{mu}, nvars={nvars}: methods disagree"
                            )));
                        }
                    }
                    let lr = littlewood_richardson(&shape)?;
                    if let Some((nu, c)) = lr.iter().find(|(_, c)| c.is_negative()) {
                        return Ok(Some(format!(
                            "{lam}/{mu}: negative LR coefficient {c} at {nu}"
                        )));
                    }
                    for nvars in 1..=nv {
                        let dim = schur_skew(&shape, nvars, SchurMethod::JacobiTrudiH).eval_ones();
                        let mut sum = BigInt::zero();
                        for (nu, c) in &lr {
                            sum += c * schur_skew(
                                &SkewShape::straight(nu.clone()),
                                nvars,
                                SchurMethod::JacobiTrudiH,
                            )
                            .eval_ones();
                        }
                        if sum != dim {
                            return Ok(Some(format!(
                                "{lam}/{mu}, nvars={nvars}: LR dimension {sum} vs {dim}"
                            )));
                        }
                    }
                }
                Ok(None)
            }));
        }
    }
    out
}

fn bijection_cases(plan: &Plan) -> Vec<Case> {
    let top = plan.pick(6u32, 4);
    let mut out = Vec::new();
    for n in [2u32, 3] {
        if !plan.wants_n(n) {
            continue;
        }
        out.push(Case::new(
            format!("bijections/strips/n={n}"),
            json!({"n": n, "max_size": top}),
            move || {
                for size in 0..=top {
                    for strip in enumerate_border_strips(n, size, true) {
                        let seq = RapiditySeq::from_strip(&strip)?;
                        if seq.to_strip() != strip {
                            return Ok(Some(format!(
                                "strip {strip}: rapidity round trip gives {}",
                                seq.to_strip()
                            )));
                        }
                        let reparsed = RapiditySeq::parse(&seq.to_string(), n)?;
                        if reparsed != seq {
                            return Ok(Some(format!(
                                "rapidities {seq} do not survive their text form"
                            )));
                        }
                        let motif = Motif::from_rapidities(&seq);
                        if motif.to_rapidities() != seq {
                            return Ok(Some(format!(
                                "strip {strip}: motif {motif} does not return to {seq}"
                            )));
                        }
                        if motif.to_strip() != strip {
                            return Ok(Some(format!(
                                "strip {strip}: square construction on {motif} gives {}",
                                motif.to_strip()
                            )));
                        }
                        if Motif::parse(&motif.to_string(), n)? != motif {
                            return Ok(Some(format!(
                                "motif {motif} does not survive its text form"
                            )));
                        }
                    }
                }
                Ok(None)
            },
        ));
    }
    let max_len = top as usize;
    out.push(Case::new("bijections/modes", json!({"max_len": max_len, "max_mode": 4}), move || {
        for n in 2..=4u32 {
            for len in 0..=max_len {
                let mut bad = None;
                for_each_gapless(len, 4, &mut |modes| {
                    if bad.is_some() {
                        return;
                    }
                    let tallest = modes.chunk_by(|a, b| a == b).map(<[u32]>::len).max().unwrap_or(0);
                    match modes_to_strip(modes, n) {
                        Ok(strip) => {
                            let cols = strip.cols();
                            let s = cols.len();
                            let weighted: u64 = cols.iter().enumerate().map(|(i, &b)| (s - 1 - i) as u64 * b as u64).sum();
                            let sum: u64 = modes.iter().map(|&m| m as u64).sum();
                            if strip.size() as usize != len || weighted != sum {
                                bad = Some(format!("modes {modes:?}, n={n}: strip {strip} breaks |k| = M or the column sum"));
                            }
                        }
                        Err(_) if tallest > n as usize => {}
                        Err(e) => bad = Some(format!("modes {modes:?}, n={n}: {e}")),
                    }
                });
                if bad.is_some() {
                    return Ok(bad);
                }
            }
        }
        Ok(None)
    }));
    out.push(Case::new(
        "bijections/rapidity-energy",
        json!({"ranks": [2, 3], "max_size": top}),
        move || {
            let report = discover_convention(&[2, 3], top)?;
            // Either outcome is an answer; the case only fails if no report forms.
            match report.outcome {
                DiscoveryOutcome::Found { .. } | DiscoveryOutcome::Mismatch => Ok(None),
            }
        },
    ));
    out
}

/// Weakly increasing lists of length `len` that use every value from 0 to
/// their maximum, with the maximum at most `top`.
fn for_each_gapless(len: usize, top: u32, visit: &mut impl FnMut(&[u32])) {
    fn rec(len: usize, top: u32, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if cur.len() == len {
            visit(cur);
            return;
        }
        let last = cur.last().copied();
        let options: &[u32] = &match last {
            None => vec![0],
            Some(v) if v < top => vec![v, v + 1],
            Some(v) => vec![v],
        };
        for &v in options {
            cur.push(v);
            rec(len, top, cur, visit);
            cur.pop();
        }
    }
    rec(len, top, &mut Vec::with_capacity(len), visit);
}

fn spinon_cut_cases(plan: &Plan) -> Vec<Case> {
    let qmax = plan.q(8, 4);
    let extra = plan.pick(2i64, 1);
    let mut out = Vec::new();
    for n in 2..=4u32 {
        for k in (0..n).filter(|&k| plan.wants_n(n) && plan.wants_k(k)) {
            let weights = small_norm_weights(n, k, extra).expect("n, k in range");
            for lam in weights {
                let id = format!("spinon-cut/n={n}/k={k}/lambda={lam}");
                let params = json!({"n": n, "k": k, "lambda": lam.0, "qmax": qmax});
                out.push(Case::new(id, params, move || {
                    let v = verify_spinon_cut(n, k, &lam, qmax)?;
                    Ok((!v.pass).then(|| {
                        let mut parts = Vec::new();
                        if let Some(d) = v.first_difference {
                            parts.push(format!(
                                "summed cuts differ from the closed form at relative q^{d}"
                            ));
                        }
                        if let Some(big_n) = v.form_mismatch {
                            parts.push(format!(
                                "multisum and alternating forms differ at N={big_n}"
                            ));
                        }
                        parts.extend(v.anomalies);
                        parts.join("; ")
                    }))
                }));
            }
        }
    }
    out
}

fn sl2_cases(plan: &Plan) -> Vec<Case> {
    let qmax = plan.q(10, 5);
    (0..=1u32)
        .filter(|&k| plan.wants_k(k) && plan.wants_n(2))
        .map(|k| {
            Case::new(
                format!("sl2/four-way/k={k}"),
                json!({"k": k, "qmax": qmax}),
                move || {
                    let bos = bosonic_character(2, k, qmax)?;
                    let others = [
                        (
                            "fermionic-root",
                            sl2_fermionic_character(k, FermionicForm::Root, qmax)?,
                        ),
                        (
                            "fermionic-spinon",
                            sl2_fermionic_character(k, FermionicForm::Spinon, qmax)?,
                        ),
                        ("spinon-enum", sl2_spinon_enumeration(k, qmax)?),
                    ];
                    for (name, t) in &others {
                        if let Some(locus) = table_locus(&bos, t) {
                            return Ok(Some(format!("bosonic vs {name}: {locus}")));
                        }
                    }
                    Ok(None)
                },
            )
        })
        .collect()
}

fn decomposition_cases(plan: &Plan) -> Vec<Case> {
    let mut out = Vec::new();
    let grid: Vec<(u32, Vec<u32>, usize, usize)> = vec![
        (2, vec![0, 1], 8, 4),
        (3, vec![0, 1, 2], 5, 3),
        (4, vec![0, 1], 3, 2),
    ];
    for (n, ks, desk, quick) in grid {
        if !plan.wants_n(n) {
            continue;
        }
        let qmax = plan.q(desk, quick);
        for k in ks.into_iter().filter(|&k| plan.wants_k(k)) {
            if k >= n {
                continue;
            }
            let id = format!("decomposition/strips/n={n}/k={k}");
            out.push(Case::new(
                id,
                json!({"n": n, "k": k, "qmax": qmax}),
                move || {
                    Ok(table_locus(
                        &bosonic_character(n, k, qmax)?,
                        &yangian_decomposition(n, k, qmax)?,
                    ))
                },
            ));
        }
    }
    if plan.wants_n(2) {
        let qmax = plan.q(8, 4);
        for k in (0..=1u32).filter(|&k| plan.wants_k(k)) {
            out.push(Case::new(
                format!("decomposition/sl2-yangian/k={k}"),
                json!({"k": k, "qmax": qmax}),
                move || {
                    Ok(table_locus(
                        &bosonic_character(2, k, qmax)?,
                        &sl2_yangian_decomposition(k, qmax)?,
                    ))
                },
            ));
        }
        let top = plan.pick(5u32, 3);
        out.push(Case::new(
            "decomposition/hw-modules",
            json!({"max_size": top, "max_spinons": top}),
            move || {
                for size in 0..=top {
                    for lam in Partition::all_of(size) {
                        for spinons in lam.len() as u32..=top {
                            let m = hw_module_table(&lam, spinons)?;
                            if let Some(msg) = m.mismatches()?.into_iter().next() {
                                return Ok(Some(format!("(lambda={lam}, N={spinons}): {msg}")));
                            }
                        }
                    }
                }
                Ok(None)
            },
        ));
    }
    let top = plan.pick(5u32, 3);
    out.push(Case::new(
        "decomposition/gz-schemes",
        json!({"max_size": top, "max_n": 3, "max_base": 2}),
        move || {
            for size in 0..=top {
                for lam in Partition::all_of(size) {
                    for mu in lam.subpartitions() {
                        for n in 1..=3u32 {
                            for base in 0..=2u32 {
                                if mu.len() > base as usize || lam.len() > (base + n) as usize {
                                    continue;
                                }
                                if let Some(msg) = gz_census_case(&lam, &mu, n, base)? {
                                    return Ok(Some(msg));
                                }
                            }
                        }
                    }
                }
            }
            Ok(None)
        },
    ));
    let top = plan.pick(6u32, 4);
    out.push(Case::new(
        "decomposition/drinfeld",
        json!({"max_size": top, "max_n": 4}),
        move || {
            for n in 2..=4u32 {
                for size in 0..=top {
                    for lam in Partition::all_of_bounded(size, n as usize) {
                        let eval = drinfeld_evaluation(&lam, n)?;
                        if !eval.roots_form_strings() {
                            return Ok(Some(format!(
                                "{lam}, n={n}: roots {eval} are not unit strings"
                            )));
                        }
                        let tame = drinfeld_tame(&SkewShape::straight(lam.clone()), n)?;
                        if tame != eval {
                            return Ok(Some(format!(
                                "{lam}, n={n}: tame {tame} vs evaluation {eval}"
                            )));
                        }
                    }
                }
            }
            Ok(None)
        },
    ));
    out
}

fn gz_census_case(lam: &Partition, mu: &Partition, n: u32, base: u32) -> Result<Option<String>> {
    use std::collections::BTreeMap;
    let schemes = gz_schemes(lam, mu, n, base)?;
    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for s in &schemes {
        *counts.entry(s.content()).or_default() += 1;
        let t = gz_to_sst(s);
        if !t.is_semistandard(n) || t.content(n as usize) != s.content() {
            return Ok(Some(format!(
                "{lam}/{mu}, n={n}: tableau of a scheme is not a weight-preserving SST"
            )));
        }
        if &sst_to_gz(&t, n, base)? != s {
            return Ok(Some(format!(
                "{lam}/{mu}, n={n}: tableau does not return to its scheme"
            )));
        }
    }
    let schur = schur_skew(
        &SkewShape::new(lam.clone(), mu.clone())?,
        n as usize,
        SchurMethod::JacobiTrudiH,
    );
    let expect: BTreeMap<Vec<u32>, BigInt> =
        schur.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    if counts != expect {
        let at = expect
            .keys()
            .chain(counts.keys())
            .find(|e| counts.get(*e) != expect.get(*e))
            .cloned()
            .unwrap_or_default();
        return Ok(Some(format!(
            "{lam}/{mu}, n={n}, N={base}: scheme count differs at content {at:?}"
        )));
    }
    Ok(None)
}

/// All cases of one suite under a plan.
pub fn suite_cases(suite: Suite, plan: &Plan) -> Vec<Case> {
    match suite {
        Suite::Qids => qids_cases(plan),
        Suite::Schur => schur_cases(plan),
        Suite::Bijections => bijection_cases(plan),
        Suite::SpinonCut => spinon_cut_cases(plan),
        Suite::Sl2 => sl2_cases(plan),
        Suite::Decomposition => decomposition_cases(plan),
    }
}

/// Runs the cases of `suites` on at most `jobs` threads and assembles one
/// report named `label`, with cases sorted by id.
pub fn run_suites(
    label: &str,
    suites: &[Suite],
    plan: &Plan,
    jobs: usize,
) -> Result<VerificationReport> {
    let cases: Vec<Case> = suites.iter().flat_map(|&s| suite_cases(s, plan)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let mut records: Vec<CaseRecord> = pool.install(|| cases.par_iter().map(Case::run).collect());
    records.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerificationReport {
        suite: label.to_string(),
        pass: records.iter().all(|r| r.pass),
        cases: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_case_carries_a_locus() {
        let case = Case::new("x", json!({}), || Ok(Some("q^3".into())));
        let r = case.run();
        assert!(!r.pass);
        assert_eq!(r.locus.as_deref(), Some("q^3"));
        let case = Case::new("y", json!({}), || Err(Error::Domain("bad".into())));
        assert!(case.run().locus.unwrap().starts_with("error:"));
    }

    #[test]
    fn quick_profile_passes() {
        let plan = Plan {
            profile: Profile::Quick,
            ..Plan::default()
        };
        let report = run_suites("all", &Suite::ALL, &plan, 2).unwrap();
        let failures: Vec<_> = report.failures().map(|c| (&c.id, &c.locus)).collect();
        assert!(failures.is_empty(), "{failures:?}");
        let ids: Vec<&String> = report.cases.iter().map(|c| &c.id).collect();
        assert!(ids.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn gapless_lists() {
        let mut seen = Vec::new();
        for_each_gapless(3, 4, &mut |m| seen.push(m.to_vec()));
        assert_eq!(
            seen,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }
}
