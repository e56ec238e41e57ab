//! `pretzel-obstruct`: classify pretzel knots, dump correction terms, sweep
//! parameter ranges.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use pretzel_core::knot::{normalize, PretzelKnot};
use pretzel_core::report::{self, ReportRecord, SCHEMA_VERSION};
use pretzel_core::{classify, Error, PlumbingGraph};
use rayon::prelude::*;
use serde::Serialize;

const EXIT_INTERNAL: u8 = 1;
const EXIT_INVALID_KNOT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_LIMITS: u8 = 4;

#[derive(Parser)]
#[command(name = "pretzel-obstruct", version, about = "Unknotting number one obstructions for pretzel knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify P(p,q,r).
    #[command(allow_negative_numbers = true)]
    Classify {
        p: i64,
        q: i64,
        r: i64,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print correction terms in label order.
    #[command(group(ArgGroup::new("target").required(true).args(["pretzel", "plumbing", "lens"])))]
    Dinv {
        /// Double branched cover of P(k,-k,2m).
        #[arg(long, num_args = 2, value_names = ["K", "M"])]
        pretzel: Option<Vec<i64>>,
        /// Plumbing file (`v <i> <weight>` / `e <i> <j>` lines, 1-based).
        #[arg(long, value_name = "FILE")]
        plumbing: Option<PathBuf>,
        /// Lens space L(D,2).
        #[arg(long, value_name = "D")]
        lens: Option<i64>,
        /// Multiply every value by N.
        #[arg(long, value_name = "N")]
        scale: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Classify every knot in a parameter box, deduplicated up to symmetry.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long, default_value_t = 1)]
        pmin: i64,
        #[arg(long, default_value_t = 9)]
        pmax: i64,
        #[arg(long, default_value_t = -9)]
        qmin: i64,
        #[arg(long, default_value_t = -1)]
        qmax: i64,
        #[arg(long, default_value_t = 2)]
        rmin: i64,
        #[arg(long, default_value_t = 6)]
        rmax: i64,
        /// Only even r.
        #[arg(long)]
        r_even: bool,
        /// Largest allowed |bound|.
        #[arg(long, default_value_t = 15)]
        limit: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidKnot(_) => EXIT_INVALID_KNOT,
            Error::Unsupported(_)
            | Error::NotNegativeDefinite
            | Error::InvalidGraph(_)
            | Error::Parse { .. }
            | Error::ContinuedFraction { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_INTERNAL,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed pipe on stdout is not an error
        let code = if e.kind() == io::ErrorKind::BrokenPipe { 0 } else { EXIT_INTERNAL };
        Failure { code, msg: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        match e.io_error_kind() {
            Some(kind) => io::Error::from(kind).into(),
            None => Failure { code: EXIT_INTERNAL, msg: e.to_string() },
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => e.into(),
            other => Failure { code: EXIT_INTERNAL, msg: format!("{other:?}") },
        }
    }
}

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: T,
}

fn versioned<T: Serialize>(body: T) -> Versioned<T> {
    Versioned { schema: SCHEMA_VERSION, body }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("PRETZEL_OBSTRUCT_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| Failure {
        code: EXIT_LIMITS,
        msg: format!("PRETZEL_OBSTRUCT_THREADS must be a positive integer, got {v:?}"),
    })?;
    if n == 0 {
        return Err(Failure { code: EXIT_LIMITS, msg: "PRETZEL_OBSTRUCT_THREADS must be positive".into() });
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure { code: EXIT_INTERNAL, msg: e.to_string() })
}

fn cmd_classify(p: i64, q: i64, r: i64, json: bool, out: &mut impl Write) -> Result<(), Failure> {
    let knot = PretzelKnot::new(p, q, r)?;
    let record = ReportRecord::from_report(&classify(&knot)?);
    if json {
        serde_json::to_writer_pretty(&mut *out, &versioned(&record))?;
        writeln!(out)?;
    } else {
        write!(out, "{}", record.to_text())?;
    }
    Ok(())
}

fn cmd_dinv(
    pretzel: Option<Vec<i64>>,
    plumbing: Option<PathBuf>,
    lens: Option<i64>,
    scale: Option<i64>,
    json: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let rep = if let Some(v) = pretzel {
        report::dinv_pretzel(v[0], v[1], scale)?
    } else if let Some(path) = plumbing {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure { code: EXIT_INTERNAL, msg: format!("{}: {e}", path.display()) })?;
        report::dinv_plumbing(&PlumbingGraph::parse(&text)?, scale)?
    } else if let Some(d) = lens {
        report::dinv_lens(d, scale)?
    } else {
        unreachable!("clap enforces one target");
    };
    if json {
        serde_json::to_writer_pretty(&mut *out, &versioned(&rep))?;
        writeln!(out)?;
    } else {
        write!(out, "{}", rep.to_text())?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    (pmin, pmax): (i64, i64),
    (qmin, qmax): (i64, i64),
    (rmin, rmax): (i64, i64),
    r_even: bool,
    limit: i64,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let bounds = [pmin, pmax, qmin, qmax, rmin, rmax];
    if let Some(b) = bounds.iter().find(|b| b.abs() > limit) {
        return Err(Failure { code: EXIT_LIMITS, msg: format!("bound {b} exceeds the limit {limit}") });
    }
    if pmin > pmax || qmin > qmax || rmin > rmax {
        return Err(Failure { code: EXIT_LIMITS, msg: "empty range".into() });
    }
    let mut knots = BTreeSet::new();
    for p in pmin..=pmax {
        for q in qmin..=qmax {
            for r in rmin..=rmax {
                if r_even && r % 2 != 0 {
                    continue;
                }
                if let Ok(k) = PretzelKnot::new(p, q, r) {
                    knots.insert(normalize(&k).0);
                }
            }
        }
    }
    let knots: Vec<PretzelKnot> = knots.into_iter().collect();
    let records: Vec<ReportRecord> =
        knots.par_iter().map(|k| classify(k).map(|rep| ReportRecord::from_report(&rep))).collect::<Result<_, _>>()?;
    let summary = report::summarize(&records);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(report::CSV_HEADER)?;
            for rec in &records {
                w.write_record(rec.csv_row())?;
            }
            w.flush()?;
            drop(w);
            for (v, n) in &summary {
                writeln!(out, "# {v}: {n}")?;
            }
            writeln!(out, "# total: {}", records.len())?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Sweep<'a> {
                records: &'a [ReportRecord],
                summary: std::collections::BTreeMap<String, usize>,
                total: usize,
            }
            let summary = summary.iter().map(|(v, n)| (v.to_string(), *n)).collect();
            let body = Sweep { records: &records, summary, total: records.len() };
            serde_json::to_writer_pretty(&mut *out, &versioned(body))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Classify { p, q, r, json } => cmd_classify(p, q, r, json, &mut out),
        Command::Dinv { pretzel, plumbing, lens, scale, json } => {
            cmd_dinv(pretzel, plumbing, lens, scale, json, &mut out)
        }
        Command::Sweep { pmin, pmax, qmin, qmax, rmin, rmax, r_even, limit, format } => {
            cmd_sweep((pmin, pmax), (qmin, qmax), (rmin, rmax), r_even, limit, format, &mut out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pretzel-obstruct: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
