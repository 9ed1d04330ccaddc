//! Experimental: the strip energy expressed through rapidities as
//! `Delta_k - sum_i (m_i - m_i^vac)`.
//!
//! How the entries of a sequence are paired with those of the class-`k`
//! vacuum is not fixed a priori. A sequence of a strip with `|k| >= n` has
//! `t > 0` fewer members than the vacuum below any large bound, so the
//! literal index pairing diverges. Several pairings are offered and
//! [`discover_convention`] tests them against the strip energy.

use num_rational::Rational64;
use serde::Serialize;

use super::{enumerate_border_strips, BorderStrip, RapiditySeq};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alignment {
    /// Pair `m_i` with `m_i^vac`.
    Literal,
    /// Pair `m_i` with `m_{i+t}^vac` so that the tails coincide, ignoring the
    /// unpaired leading vacuum entries.
    TailAligned,
    /// Prepend `t` zero rapidities to the sequence, then pair literally.
    ZeroPadded,
}

impl Alignment {
    pub const ALL: [Alignment; 3] = [
        Alignment::Literal,
        Alignment::TailAligned,
        Alignment::ZeroPadded,
    ];
}

/// Excess of vacuum members over sequence members below a bound where both
/// follow the same periodic tail.
pub fn vacuum_lag(seq: &RapiditySeq) -> i64 {
    let bound = seq.cutoff() + seq.n() as u64;
    let vac = RapiditySeq::vacuum(seq.n(), seq.class()).expect("class is in range");
    vac.count_upto(bound) as i64 - seq.count_upto(bound) as i64
}

pub fn rapidity_energy(seq: &RapiditySeq, alignment: Alignment) -> Result<Rational64> {
    let (n, k) = (seq.n() as i64, seq.class() as i64);
    let delta = Rational64::new(k * (n - k), 2 * n);
    let vac = RapiditySeq::vacuum(seq.n(), seq.class())?;
    let t = vacuum_lag(seq);
    let bound = seq.cutoff() + seq.n() as u64;
    let mine: Vec<i64> = seq
        .iter()
        .take_while(|&m| m <= bound)
        .map(|m| m as i64)
        .collect();
    let theirs: Vec<i64> = vac
        .iter()
        .take_while(|&m| m <= bound)
        .map(|m| m as i64)
        .collect();

    let deviation: i64 = match alignment {
        Alignment::Literal => {
            if t != 0 {
                return Err(Error::DivergentPairing(format!(
                    "sequence lags the vacuum by {t} entries; literal pairing grows without bound"
                )));
            }
            mine.iter().zip(&theirs).map(|(a, b)| a - b).sum()
        }
        Alignment::TailAligned => {
            let shift = t.unsigned_abs() as usize;
            if t >= 0 {
                mine.iter().zip(&theirs[shift..]).map(|(a, b)| a - b).sum()
            } else {
                mine[shift..].iter().zip(&theirs).map(|(a, b)| a - b).sum()
            }
        }
        Alignment::ZeroPadded => {
            if t < 0 {
                return Err(Error::DivergentPairing(format!(
                    "sequence leads the vacuum by {} entries; no zero padding applies",
                    -t
                )));
            }
            let padded = std::iter::repeat_n(0, t as usize).chain(mine.iter().copied());
            padded.zip(&theirs).map(|(a, b)| a - b).sum()
        }
    };
    Ok(delta - Rational64::from_integer(deviation))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyMismatch {
    pub n: u32,
    pub rows: Vec<u32>,
    pub lag: i64,
    #[serde(serialize_with = "ser_rational")]
    pub expected: Rational64,
    #[serde(serialize_with = "ser_opt_rational")]
    pub got: Option<Rational64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionResult {
    pub alignment: Alignment,
    pub matched: usize,
    pub total: usize,
    /// At most a handful of examples are retained.
    pub mismatches: Vec<EnergyMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum DiscoveryOutcome {
    Found { alignment: Alignment },
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscoveryReport {
    pub ranks: Vec<u32>,
    pub max_size: u32,
    pub strips: usize,
    pub conventions: Vec<ConventionResult>,
    #[serde(flatten)]
    pub outcome: DiscoveryOutcome,
}

const KEPT_MISMATCHES: usize = 8;

/// Evaluates every alignment on all reduced strips of the given ranks up to
/// `max_size` boxes, against the strip energy.
pub fn discover_convention(ranks: &[u32], max_size: u32) -> Result<DiscoveryReport> {
    let mut census = Vec::new();
    for &n in ranks {
        for size in 0..=max_size {
            census.extend(enumerate_border_strips(n, size, true));
        }
    }
    let mut conventions = Vec::new();
    for alignment in Alignment::ALL {
        let mut result = ConventionResult {
            alignment,
            matched: 0,
            total: census.len(),
            mismatches: vec![],
        };
        for strip in &census {
            let seq = RapiditySeq::from_strip(strip)?;
            let expected = strip.energy()?;
            let got = rapidity_energy(&seq, alignment);
            if got.as_ref() == Ok(&expected) {
                result.matched += 1;
            } else if result.mismatches.len() < KEPT_MISMATCHES {
                result.mismatches.push(EnergyMismatch {
                    n: strip.n(),
                    rows: strip.rows().to_vec(),
                    lag: vacuum_lag(&seq),
                    expected,
                    got: got.as_ref().ok().copied(),
                    error: got.err().map(|e| e.to_string()),
                });
            }
        }
        conventions.push(result);
    }
    let winners: Vec<Alignment> = conventions
        .iter()
        .filter(|c| c.matched == c.total)
        .map(|c| c.alignment)
        .collect();
    let outcome = match winners[..] {
        [alignment] => DiscoveryOutcome::Found { alignment },
        _ => DiscoveryOutcome::Mismatch,
    };
    Ok(DiscoveryReport {
        ranks: ranks.to_vec(),
        max_size,
        strips: census.len(),
        conventions,
        outcome,
    })
}

fn ser_rational<S: serde::Serializer>(
    r: &Rational64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::qseries::rational_str::format(r))
}

fn ser_opt_rational<S: serde::Serializer>(
    r: &Option<Rational64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ser_rational(r, s),
        None => s.serialize_none(),
    }
}

/// Convenience for a strip: energy through its rapidity sequence.
pub fn strip_rapidity_energy(strip: &BorderStrip, alignment: Alignment) -> Result<Rational64> {
    rapidity_energy(&RapiditySeq::from_strip(strip)?, alignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacua_have_energy_delta() {
        assert_eq!(
            rapidity_energy(&RapiditySeq::vacuum(2, 0).unwrap(), Alignment::Literal).unwrap(),
            Rational64::from_integer(0)
        );
        assert_eq!(
            rapidity_energy(&RapiditySeq::vacuum(2, 1).unwrap(), Alignment::Literal).unwrap(),
            Rational64::new(1, 4)
        );
    }

    #[test]
    fn literal_pairing_examples() {
        let seq = RapiditySeq::parse("1,4|1", 2).unwrap();
        assert_eq!(
            rapidity_energy(&seq, Alignment::Literal).unwrap(),
            Rational64::new(5, 4)
        );
        let two = BorderStrip::from_rows(&[2], 2).unwrap();
        assert!(matches!(
            strip_rapidity_energy(&two, Alignment::Literal),
            Err(Error::DivergentPairing(_))
        ));
        assert_eq!(
            strip_rapidity_energy(&two, Alignment::TailAligned).unwrap(),
            Rational64::from_integer(0)
        );
        assert_eq!(
            strip_rapidity_energy(&two, Alignment::ZeroPadded).unwrap(),
            Rational64::from_integer(1)
        );
    }

    #[test]
    fn discovery_reports_an_outcome() {
        let report = discover_convention(&[2, 3], 6).unwrap();
        assert_eq!(report.conventions.len(), Alignment::ALL.len());
        let json = serde_json::to_value(&report).unwrap();
        assert!(json.get("outcome").is_some());
    }
}
