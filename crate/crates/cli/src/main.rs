use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spinon_core::affine::{
    bosonic_character, sl2_fermionic_character, sl2_spinon_enumeration, CharacterTable,
    FermionicForm,
};
use spinon_core::combinatorics::{
    modes_to_strip, sl2_partition_to_strip, BorderStrip, Motif, Partition, RapiditySeq,
};
use spinon_core::qseries::rational_str;
use spinon_core::verify::{run_suites, Case, Plan, Profile, Suite, VerificationReport};
use spinon_core::yangian::{sl2_yangian_decomposition, yangian_decomposition};

#[derive(Parser)]
#[command(
    name = "spinon",
    version,
    about = "Level-1 affine sl_n characters, Yangian decompositions and their verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a character table.
    Char {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long)]
        qmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites; exits 1 if any case fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Desk)]
        profile: ProfileArg,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long, env = "SPINON_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Append one case that always fails, to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Translate between strip encodings.
    Bijection {
        #[arg(long, value_enum)]
        from: From,
        #[arg(long, value_enum)]
        to: To,
        /// Rank; the sl2-partition encoding always uses 2.
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Strip `<rows>` or `[cols]`, motif `0110|`, rapidities `1,4|1`,
        /// modes `0,0,1`, or sl2 label `parts;N`.
        payload: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bosonic,
    FermionicRoot,
    FermionicSpinon,
    SpinonEnum,
    Yangian,
    Sl2Yangian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Qids,
    Schur,
    Bijections,
    SpinonCut,
    Sl2,
    Decomposition,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Desk,
    Quick,
}

#[derive(Clone, Copy, ValueEnum)]
enum From {
    Strip,
    Motif,
    Rapidity,
    Modes,
    Sl2Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum To {
    Strip,
    Motif,
    Rapidity,
}

/// Failures that map to an exit code. Usage errors name the offending flag.
enum Failure {
    Usage(String),
    Runtime(String),
}

type Outcome = Result<(String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Char {
            kind,
            n,
            k,
            qmax,
            format,
        } => cmd_char(kind, n, k, qmax, format),
        Command::Verify {
            suite,
            n,
            k,
            qmax,
            profile,
            jobs,
            format,
            inject_fault,
        } => cmd_verify(
            suite,
            Plan {
                profile: profile.into(),
                n,
                k,
                qmax,
            },
            jobs,
            format,
            inject_fault,
        ),
        Command::Bijection {
            from,
            to,
            n,
            format,
            payload,
        } => cmd_bijection(from, to, n, format, &payload),
    };
    match outcome {
        Ok((text, pass)) => {
            let mut out = io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn cmd_char(kind: Kind, n: u32, k: u32, qmax: usize, format: Format) -> Outcome {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    if k >= n {
        return Err(usage(format!("--k must be below --n = {n}, got {k}")));
    }
    let sl2_only = !matches!(kind, Kind::Bosonic | Kind::Yangian);
    if sl2_only && n != 2 {
        return Err(usage(format!(
            "--n must be 2 for --kind {}, got {n}",
            kind_name(kind)
        )));
    }
    let table = match kind {
        Kind::Bosonic => bosonic_character(n, k, qmax),
        Kind::FermionicRoot => sl2_fermionic_character(k, FermionicForm::Root, qmax),
        Kind::FermionicSpinon => sl2_fermionic_character(k, FermionicForm::Spinon, qmax),
        Kind::SpinonEnum => sl2_spinon_enumeration(k, qmax),
        Kind::Yangian => yangian_decomposition(n, k, qmax),
        Kind::Sl2Yangian => sl2_yangian_decomposition(k, qmax),
    }
    .map_err(|e| Failure::Runtime(e.to_string()))?;
    let text = match format {
        Format::Json => json_text(&table.to_json()),
        Format::Csv => table_csv(&table)?,
        Format::Pretty => table_pretty(&table),
    };
    Ok((text, true))
}

fn kind_name(kind: Kind) -> String {
    kind.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, Failure> {
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Runtime(e.to_string()))
}

fn table_csv(table: &CharacterTable) -> Result<String, Failure> {
    let mut w = csv_writer();
    let mut header: Vec<String> = (1..table.n()).map(|i| format!("m{i}")).collect();
    header.extend(["qdegree".into(), "coeff".into()]);
    w.write_record(&header)
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    for (weight, d, c) in table.entries() {
        let mut rec: Vec<String> = weight.0.iter().map(i64::to_string).collect();
        rec.push(d.to_string());
        rec.push(c.to_string());
        w.write_record(&rec)
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    finish_csv(w)
}

fn table_pretty(table: &CharacterTable) -> String {
    let mut out = format!(
        "L(Lambda_{}) of affine sl_{} at level 1, degrees relative to q^{}, through q^{}\n",
        table.k(),
        table.n(),
        rational_str::format(&table.delta()),
        table.qmax()
    );
    let mut grid: Vec<Vec<String>> = vec![std::iter::once("weight".to_string())
        .chain((0..=table.qmax()).map(|d| format!("q^{d}")))
        .collect()];
    for (w, coeffs) in table.rows() {
        grid.push(
            std::iter::once(w.to_string())
                .chain(coeffs.iter().map(|c| c.to_string()))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|j| grid.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j == 0 {
                    format!("{c:<w$}", w = widths[j])
                } else {
                    format!("{c:>w$}", w = widths[j])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

impl std::convert::From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Desk => Profile::Desk,
            ProfileArg::Quick => Profile::Quick,
        }
    }
}

fn cmd_verify(
    suite: SuiteArg,
    plan: Plan,
    jobs: Option<usize>,
    format: Format,
    inject_fault: bool,
) -> Outcome {
    let Plan { n, k, qmax, .. } = plan;
    if let Some(n) = n.filter(|&n| n < 2) {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    if let (Some(k), Some(n)) = (k, n) {
        if k >= n {
            return Err(usage(format!("--k must be below --n = {n}, got {k}")));
        }
    }
    if qmax == Some(0) {
        return Err(usage("--qmax must be positive"));
    }
    if jobs == Some(0) {
        return Err(usage("--jobs must be positive"));
    }
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(usize::from)
            .unwrap_or(1)
    });
    let (label, suites): (&str, Vec<Suite>) = match suite {
        SuiteArg::Qids => ("qids", vec![Suite::Qids]),
        SuiteArg::Schur => ("schur", vec![Suite::Schur]),
        SuiteArg::Bijections => ("bijections", vec![Suite::Bijections]),
        SuiteArg::SpinonCut => ("spinon-cut", vec![Suite::SpinonCut]),
        SuiteArg::Sl2 => ("sl2", vec![Suite::Sl2]),
        SuiteArg::Decomposition => ("decomposition", vec![Suite::Decomposition]),
        SuiteArg::All => ("all", Suite::ALL.to_vec()),
    };
    let mut report =
        run_suites(label, &suites, &plan, jobs).map_err(|e| Failure::Runtime(e.to_string()))?;
    if inject_fault {
        let probe = Case::new("probe/injected-fault", json!({}), || {
            Ok(Some("injected fault".into()))
        });
        report.cases.push(probe.run());
        report.cases.sort_by(|a, b| a.id.cmp(&b.id));
        report.pass = false;
    }
    if report.cases.is_empty() {
        return Err(usage(format!(
            "no cases of suite {label} match the given --n/--k"
        )));
    }
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&report).expect("reports serialize")),
        Format::Csv => report_csv(&report)?,
        Format::Pretty => report_pretty(&report),
    };
    Ok((text, report.pass))
}

fn report_csv(report: &VerificationReport) -> Result<String, Failure> {
    let mut w = csv_writer();
    let err = |e: csv::Error| Failure::Runtime(e.to_string());
    w.write_record(["id", "pass", "elapsed_ms", "locus"])
        .map_err(err)?;
    for c in &report.cases {
        w.write_record([
            c.id.as_str(),
            if c.pass { "true" } else { "false" },
            &c.elapsed_ms.to_string(),
            c.locus.as_deref().unwrap_or(""),
        ])
        .map_err(err)?;
    }
    finish_csv(w)
}

fn report_pretty(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.cases {
        let status = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} ({} ms)", c.id, c.elapsed_ms));
        if let Some(locus) = &c.locus {
            out.push_str(&format!(": {locus}"));
        }
        out.push('\n');
    }
    let failed = report.failures().count();
    out.push_str(&format!(
        "{}: {} cases, {failed} failed\n",
        report.suite,
        report.cases.len()
    ));
    out
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| usage(format!("{what}: {t:?} is not a non-negative integer")))
        })
        .collect()
}

fn parse_strip(text: &str, n: u32) -> Result<BorderStrip, Failure> {
    let t = text.trim();
    let bad = |e: spinon_core::Error| usage(format!("payload {t:?}: {e}"));
    if let Some(body) = t.strip_prefix('<').and_then(|b| b.strip_suffix('>')) {
        BorderStrip::from_rows(&parse_list(body, "strip rows")?, n).map_err(bad)
    } else if let Some(body) = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        BorderStrip::from_cols(&parse_list(body, "strip columns")?, n).map_err(bad)
    } else {
        Err(usage(format!(
            "payload {t:?}: a strip is written <rows> or [cols]"
        )))
    }
}

fn cmd_bijection(from: From, to: To, n: u32, format: Format, payload: &str) -> Outcome {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    if format == Format::Csv {
        return Err(usage("--format csv is not available for bijection"));
    }
    let bad = |e: spinon_core::Error| usage(format!("payload {payload:?}: {e}"));
    let strip = match from {
        From::Strip => parse_strip(payload, n)?,
        From::Motif => Motif::parse(payload, n).map_err(bad)?.to_strip(),
        From::Rapidity => RapiditySeq::parse(payload, n).map_err(bad)?.to_strip(),
        From::Modes => modes_to_strip(&parse_list(payload, "modes")?, n).map_err(bad)?,
        From::Sl2Partition => {
            if n != 2 {
                return Err(usage(format!(
                    "--n must be 2 for --from sl2-partition, got {n}"
                )));
            }
            let (parts, spinons) = payload.split_once(';').ok_or_else(|| {
                usage(format!(
                    "payload {payload:?}: an sl2 label is written parts;N"
                ))
            })?;
            let spinons: u32 = spinons
                .trim()
                .parse()
                .map_err(|_| usage(format!("payload {payload:?}: bad spinon number")))?;
            let lam = Partition::new(parse_list(parts, "partition")?).map_err(bad)?;
            sl2_partition_to_strip(&lam, spinons).map_err(bad)?
        }
    };
    let energy = strip
        .energy()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    let (image_text, image_json) = match to {
        To::Strip => (
            format!("{strip} = {}", cols_text(&strip)),
            serde_json::to_value(&strip).expect("strips serialize"),
        ),
        To::Rapidity => {
            let seq = RapiditySeq::from_strip(&strip).map_err(bad)?;
            (seq.to_string(), json!(seq.to_string()))
        }
        To::Motif => {
            let motif = Motif::from_rapidities(&RapiditySeq::from_strip(&strip).map_err(bad)?);
            (motif.to_string(), json!(motif.to_string()))
        }
    };
    let energy = rational_str::format(&energy);
    let text = match format {
        Format::Json => json_text(&json!({
            "from": from.to_possible_value().map(|v| v.get_name().to_string()),
            "to": to.to_possible_value().map(|v| v.get_name().to_string()),
            "n": n,
            "image": image_json,
            "strip": strip.to_string(),
            "energy": energy,
        })),
        _ => format!("{image_text}\nenergy {energy}\n"),
    };
    Ok((text, true))
}

fn cols_text(strip: &BorderStrip) -> String {
    let cols: Vec<String> = strip.cols().iter().map(u32::to_string).collect();
    format!("[{}]", cols.join(","))
}
