//! Command implementations behind the `gbott` binary.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use gbott_core::sweep::{self, lemma1_sweep, sw_swap_sweep, verify_cohomology_theorem};
use gbott_core::{
    classify, classify_with_oracle, counterexample_pair, total_sw_class, ClassificationVerdict, RingPresentation,
    Strategy,
};

pub const CSV_HEADER: &str =
    "a,b,q,q_prime,h,k,cohomology_isomorphic,diffeomorphic,homotopy_equivalent";

#[derive(Debug, Parser)]
#[command(name = "gbott", version, about = "Classify M(q) = P(qγ ⊕ (b-q)1) over RP^(a-1) up to Z/2-cohomology, diffeomorphism and homotopy")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Also run the brute-force ring isomorphism search.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// verify: also sweep the nonvanishing-powers check and SW swap symmetry.
    #[arg(long, global = true)]
    pub extended: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a single pair M(q), M(q').
    Classify {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        q: u64,
        #[arg(long = "q-prime")]
        q_prime: u64,
    },
    /// All pairs 0 <= q <= q' <= b.
    Table {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Constructed counterexamples to rigidity for every (a, b) in range.
    Counterexamples {
        #[arg(long = "a-max")]
        a_max: u64,
        #[arg(long = "b-max")]
        b_max: u64,
    },
    /// Check the oracle against the congruence criterion on a grid.
    Verify {
        #[arg(long = "a-max", default_value_t = 6)]
        a_max: u32,
        #[arg(long = "b-max", default_value_t = 7)]
        b_max: u32,
        /// Restrict to one shape, e.g. `a=10,b=17`.
        #[arg(long, value_parser = parse_shape)]
        only: Option<(u32, u32)>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Total Stiefel-Whitney class of M(q).
    Sw {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        q: u32,
    },
}

fn parse_shape(s: &str) -> Result<(u32, u32), String> {
    let (mut a, mut b) = (None, None);
    for part in s.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: u32 = value.trim().parse().map_err(|e| format!("`{value}`: {e}"))?;
        match key.trim() {
            "a" => a = Some(value),
            "b" => b = Some(value),
            other => return Err(format!("unknown key `{other}`")),
        }
    }
    match (a, b) {
        (Some(a), Some(b)) if a >= 1 && b >= 1 => Ok((a, b)),
        _ => Err("need a=<n>,b=<n> with both >= 1".into()),
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gbott_core::Error> for CliError {
    fn from(e: gbott_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

/// Whether the run confirmed everything it checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Verified => 0,
            Outcome::Mismatch => 1,
        }
    }
}

/// One classification verdict as emitted on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub a: u64,
    pub b: u64,
    pub q: u64,
    pub q_prime: u64,
    pub h: u32,
    pub k: u64,
    pub cohomology_isomorphic: bool,
    pub diffeomorphic: bool,
    pub homotopy_equivalent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_isomorphic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&ClassificationVerdict> for OutputRecord {
    fn from(v: &ClassificationVerdict) -> Self {
        OutputRecord {
            a: v.a,
            b: v.b,
            q: v.q,
            q_prime: v.q_prime,
            h: v.h,
            k: v.k,
            cohomology_isomorphic: v.cohomology_isomorphic,
            diffeomorphic: v.diffeomorphic,
            homotopy_equivalent: v.homotopy_equivalent,
            oracle_isomorphic: v.oracle_isomorphic(),
            witness: v.oracle_witness().map(|w| w.to_string()),
        }
    }
}

#[derive(Serialize)]
struct CsvRow {
    a: u64,
    b: u64,
    q: u64,
    q_prime: u64,
    h: u32,
    k: u64,
    cohomology_isomorphic: bool,
    diffeomorphic: bool,
    homotopy_equivalent: bool,
}

impl From<&OutputRecord> for CsvRow {
    fn from(r: &OutputRecord) -> Self {
        CsvRow {
            a: r.a,
            b: r.b,
            q: r.q,
            q_prime: r.q_prime,
            h: r.h,
            k: r.k,
            cohomology_isomorphic: r.cohomology_isomorphic,
            diffeomorphic: r.diffeomorphic,
            homotopy_equivalent: r.homotopy_equivalent,
        }
    }
}

pub fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            // the header is written by hand so it is emitted for empty output too
            writeln!(out, "{CSV_HEADER}")?;
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            for r in records {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(records)?)?;
        }
        Format::Text => write_text_table(out, records)?,
    }
    Ok(())
}

fn write_text_table(out: &mut dyn Write, records: &[OutputRecord]) -> io::Result<()> {
    let with_oracle = records.iter().any(|r| r.oracle_isomorphic.is_some());
    let mut header: Vec<&str> = vec!["a", "b", "q", "q'", "h", "k", "H*-iso", "diffeo", "homotopy"];
    if with_oracle {
        header.extend(["oracle", "witness"]);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.a.to_string(),
                r.b.to_string(),
                r.q.to_string(),
                r.q_prime.to_string(),
                r.h.to_string(),
                r.k.to_string(),
                yes_no(r.cohomology_isomorphic),
                yes_no(r.diffeomorphic),
                yes_no(r.homotopy_equivalent),
            ];
            if with_oracle {
                row.push(r.oracle_isomorphic.map_or("-".into(), yes_no));
                row.push(r.witness.clone().unwrap_or_else(|| "-".into()));
            }
            row
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:>w$}", w = widths[c]);
        }
        s
    };
    writeln!(out, "{}", line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>()))?;
    for row in &rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwRecord {
    pub a: u32,
    pub b: u32,
    pub q: u32,
    /// Monomials of the total Stiefel-Whitney class, highest degree first.
    pub sw_class: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub a_max: u32,
    pub b_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub only: Option<(u32, u32)>,
    pub cases: usize,
    pub isomorphic_cases: usize,
    pub mismatches: usize,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma1_failures: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sw_swap_failures: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub mismatch_records: Vec<OutputRecord>,
    /// With `--only` on a shape where rigidity fails: the constructed pair
    /// with its oracle verdict.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<OutputRecord>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
            && self.counterexample.as_ref().is_none_or(|c| c.oracle_isomorphic == Some(true))
            && self.lemma1_failures.unwrap_or(0) == 0
            && self.sw_swap_failures.unwrap_or(0) == 0
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let common = &cli.common;
    match cli.command {
        Command::Classify { a, b, q, q_prime } => {
            let v = if common.oracle {
                classify_with_oracle(a, b, q, q_prime)?
            } else {
                classify(a, b, q, q_prime)?
            };
            write_records(out, &[OutputRecord::from(&v)], common.format)?;
            Ok(if v.oracle_agrees() { Outcome::Verified } else { Outcome::Mismatch })
        }
        Command::Table { a, b } => {
            let verdicts = if common.oracle {
                let pairs: Vec<(u64, u64)> = (0..=b).flat_map(|q| (q..=b).map(move |qp| (q, qp))).collect();
                sweep::map_ordered(pairs, Strategy::default(), |&(q, qp)| classify_with_oracle(a, b, q, qp))
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                sweep::table(a, b)?
            };
            let records: Vec<OutputRecord> = verdicts.iter().map(OutputRecord::from).collect();
            write_records(out, &records, common.format)?;
            Ok(if verdicts.iter().all(|v| v.oracle_agrees()) {
                Outcome::Verified
            } else {
                Outcome::Mismatch
            })
        }
        Command::Counterexamples { a_max, b_max } => {
            if a_max == 0 || b_max == 0 {
                return Err(CliError::Usage("--a-max and --b-max must be at least 1".into()));
            }
            let verdicts = sweep::counterexamples(a_max, b_max)?;
            let records: Vec<OutputRecord> = verdicts.iter().map(OutputRecord::from).collect();
            write_records(out, &records, common.format)?;
            let valid = verdicts.iter().all(|v| v.breaks_rigidity());
            Ok(if valid { Outcome::Verified } else { Outcome::Mismatch })
        }
        Command::Verify { a_max, b_max, only, sequential } => {
            if a_max == 0 || b_max == 0 {
                return Err(CliError::Usage("--a-max and --b-max must be at least 1".into()));
            }
            let strategy = if sequential { Strategy::Sequential } else { Strategy::default() };
            let started = Instant::now();
            let report = verify_cohomology_theorem(a_max, b_max, only, strategy)?;
            let (lemma1_failures, sw_swap_failures) = if common.extended {
                let (am, bm) = only.unwrap_or((a_max, b_max));
                (
                    Some(lemma1_sweep(am, bm, strategy).len()),
                    Some(sw_swap_sweep(am, bm, strategy).len()),
                )
            } else {
                (None, None)
            };
            let counterexample = match only {
                Some((a, b)) => counterexample_pair(a as u64, b as u64)?
                    .map(|(q, qp)| classify_with_oracle(a as u64, b as u64, q, qp))
                    .transpose()?
                    .map(|v| OutputRecord::from(&v)),
                None => None,
            };
            let summary = VerifySummary {
                a_max,
                b_max,
                only,
                cases: report.cases,
                isomorphic_cases: report.isomorphic_cases,
                mismatches: report.mismatches.len(),
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
                lemma1_failures,
                sw_swap_failures,
                mismatch_records: report.mismatches.iter().map(OutputRecord::from).collect(),
                counterexample,
            };
            write_verify(out, &summary, common.format)?;
            Ok(if summary.passed() { Outcome::Verified } else { Outcome::Mismatch })
        }
        Command::Sw { a, b, q } => {
            let pres = RingPresentation::new(a, b, q)?;
            let w = total_sw_class(&pres);
            let record = SwRecord {
                a,
                b,
                q,
                sw_class: w.to_string().split(" + ").map(str::to_string).collect(),
            };
            match common.format {
                Format::Text => writeln!(out, "w(M({q})) over RP^{} with b={b}: {w}", a - 1)?,
                Format::Csv => {
                    writeln!(out, "a,b,q,sw_class")?;
                    writeln!(out, "{a},{b},{q},{}", record.sw_class.join(" + "))?;
                }
                Format::Jsonl => writeln!(out, "{}", serde_json::to_string(&record)?)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?,
            }
            Ok(Outcome::Verified)
        }
    }
}

fn write_verify(out: &mut dyn Write, s: &VerifySummary, format: Format) -> Result<(), CliError> {
    match format {
        Format::Text => {
            match s.only {
                Some((a, b)) => writeln!(out, "shape a={a}, b={b}")?,
                None => writeln!(out, "grid 1 <= a <= {}, 1 <= b <= {}", s.a_max, s.b_max)?,
            }
            writeln!(out, "cases={} isomorphic={}", s.cases, s.isomorphic_cases)?;
            writeln!(out, "mismatches={}", s.mismatches)?;
            if let Some(n) = s.lemma1_failures {
                writeln!(out, "lemma1_failures={n}")?;
            }
            if let Some(n) = s.sw_swap_failures {
                writeln!(out, "sw_swap_failures={n}")?;
            }
            if let Some(c) = &s.counterexample {
                writeln!(
                    out,
                    "counterexample q={} q'={}: oracle_isomorphic={} witness={} diffeomorphic={}",
                    c.q,
                    c.q_prime,
                    c.oracle_isomorphic.unwrap_or(false),
                    c.witness.as_deref().unwrap_or("-"),
                    c.diffeomorphic
                )?;
            }
            writeln!(out, "elapsed_ms={:.1}", s.elapsed_ms)?;
            if !s.mismatch_records.is_empty() {
                write_text_table(out, &s.mismatch_records)?;
            }
        }
        Format::Csv => {
            writeln!(out, "cases,isomorphic_cases,mismatches,elapsed_ms")?;
            writeln!(out, "{},{},{},{:.1}", s.cases, s.isomorphic_cases, s.mismatches, s.elapsed_ms)?;
        }
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(s)?)?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(s)?)?,
    }
    Ok(())
}
