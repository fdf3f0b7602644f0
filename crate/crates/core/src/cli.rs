//! Command-line front end.
//!
//! Exit codes: 0 when every requested verification passes, 1 when any
//! identity has a coefficient mismatch, 2 for usage or configuration errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::builders::{scan, Params, SeriesSpec, SERIES_NAMES};
use crate::divisor::sigma_sieve;
use crate::error::{Error, Result};
use crate::format::{self, CoeffRecord};
use crate::verify::{
    find_case, registry, verify_cases, verify_with, ReportRecord, VerifyOptions, VerifyReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "qlambert",
    version,
    about = "Verify double Lambert series identities exactly"
)]
pub struct CliConfig {
    /// Truncation order: coefficients of q^0 .. q^(order-1) are computed.
    #[arg(long, global = true, env = "QLAMBERT_ORDER", default_value_t = 256)]
    pub order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    /// Series or identity parameter, e.g. `--param a=3`. Repeatable.
    #[arg(long = "param", short = 'p', global = true, value_name = "KEY=VALUE")]
    pub params: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List registered identities.
    List,
    /// Verify one identity (`--id`) or the whole registry (`--all`).
    Verify {
        /// Identity id, or a family name such as `telescope` with `-p r=.. -p s=..`.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        /// Verify every registered identity.
        #[arg(long)]
        all: bool,
        /// Add 1 to the right-hand coefficient at this exponent (harness self-test).
        #[arg(long, value_name = "E")]
        perturb: Option<usize>,
    },
    /// Print a single coefficient of a named series.
    Coeff {
        /// Series name, e.g. `base-double`, or `f` with `-p a=2`.
        #[arg(long)]
        series: String,
        #[arg(long = "e", value_name = "EXPONENT")]
        exponent: usize,
    },
    /// Print a coefficient table: a named series, or `sigmaK` for a divisor-sum table.
    Table {
        #[arg(long)]
        series: String,
        /// Largest index printed (defaults to order - 1).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Tabulate sigma_k(N) next to weighted double Lambert candidates.
    Scan {
        #[arg(long)]
        k: u32,
    },
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

pub fn run(cfg: &CliConfig) -> u8 {
    let mut buf = Vec::new();
    let code = match execute(cfg, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &buf),
        None => io::stdout().write_all(&buf),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn io_err(e: io::Error) -> Error {
    Error::Config(format!("output: {e}"))
}

/// Runs the command, writing its output to `out`.
pub fn execute(cfg: &CliConfig, out: &mut Vec<u8>) -> Result<u8> {
    if cfg.order < 2 {
        return Err(Error::Config(format!(
            "--order must be at least 2, got {}",
            cfg.order
        )));
    }
    let params = Params::parse(&cfg.params)?;
    match &cfg.command {
        Command::List => list(cfg.format, out).map_err(io_err).map(|_| EXIT_OK),
        Command::Verify { id, all, perturb } => {
            let cases = match (id, all) {
                (_, true) => registry(),
                (Some(id), false) => vec![find_case(id, &params)?],
                (None, false) => return Err(Error::Config("verify needs --id or --all".into())),
            };
            let opts = VerifyOptions {
                perturb_rhs: *perturb,
                ..Default::default()
            };
            let results: Vec<Result<VerifyReport>> = if perturb.is_some() {
                cases
                    .iter()
                    .map(|c| verify_with(c, cfg.order, &opts))
                    .collect()
            } else {
                verify_cases(&cases, cfg.order)
            };
            let ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
            write_reports(cfg.format, &ids, &results, *all, out).map_err(io_err)?;
            if results.iter().any(|r| r.is_err()) {
                Ok(EXIT_USAGE)
            } else if results.iter().all(|r| r.as_ref().is_ok_and(|r| r.pass)) {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Coeff { series, exponent } => {
            let spec = SeriesSpec::parse(series, &params)?;
            let s = spec.build(cfg.order)?;
            let c = s.coeff(*exponent)?;
            let rows = [CoeffRecord::new(*exponent, c)];
            match cfg.format {
                Format::Plain => writeln!(out, "{c}"),
                Format::Json => writeln!(out, "{}", json!({"e": exponent, "c": c.to_string()})),
                Format::Csv => format::write_csv(&mut *out, &rows),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Table { series, limit } => {
            let rows = table_rows(series, *limit, cfg.order, &params)?;
            match cfg.format {
                Format::Plain => format::write_plain(&mut *out, &rows),
                Format::Json => format::write_json(&mut *out, &rows),
                Format::Csv => format::write_csv(&mut *out, &rows),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Scan { k } => {
            let report = scan(*k, cfg.order)?;
            write_scan(cfg.format, &report, out).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

fn table_rows(
    name: &str,
    limit: Option<usize>,
    order: usize,
    params: &Params,
) -> Result<Vec<CoeffRecord>> {
    if let Some(k) = name
        .strip_prefix("sigma")
        .and_then(|k| k.parse::<u32>().ok())
    {
        let table = sigma_sieve(k, limit.unwrap_or(order - 1));
        return Ok(format::records(table.iter()));
    }
    let spec = match SeriesSpec::parse(name, params) {
        Err(Error::UnknownId(_)) => {
            let known: Vec<&str> = SERIES_NAMES.iter().map(|(n, _)| *n).collect();
            return Err(Error::UnknownId(format!(
                "{name} (known: sigmaK, {})",
                known.join(", ")
            )));
        }
        other => other?,
    };
    let order = limit.map_or(order, |l| l + 1);
    let s = spec.build(order)?;
    Ok(format::records(s.coeffs().iter().enumerate()))
}

fn list(fmt: Format, out: &mut Vec<u8>) -> io::Result<()> {
    let reg = registry();
    match fmt {
        Format::Plain => {
            for c in &reg {
                writeln!(out, "{:<22} {:<20} {}", c.id, c.mode.to_string(), c.anchor)?;
            }
        }
        Format::Json => {
            let items: Vec<_> = reg
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "description": c.description,
                        "mode": c.mode.to_string(),
                        "lhs": c.lhs.to_string(),
                        "anchor": c.anchor,
                    })
                })
                .collect();
            serde_json::to_writer(&mut *out, &items)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["id", "mode", "description", "anchor"])?;
            for c in &reg {
                w.write_record([&c.id, &c.mode.to_string(), &c.description, &c.anchor])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_reports(
    fmt: Format,
    ids: &[&str],
    results: &[Result<VerifyReport>],
    as_list: bool,
    out: &mut Vec<u8>,
) -> io::Result<()> {
    match fmt {
        Format::Plain => {
            for (id, r) in ids.iter().zip(results) {
                match r {
                    Ok(r) => {
                        let ms = r.elapsed.as_secs_f64() * 1e3;
                        match &r.first_mismatch {
                            None => writeln!(
                                out,
                                "PASS {} order={} checked={} ({ms:.1} ms)",
                                r.id, r.order, r.terms
                            )?,
                            Some(m) => writeln!(
                                out,
                                "FAIL {} order={} first mismatch at q^{}: lhs={} rhs={} ({ms:.1} ms)",
                                r.id, r.order, m.exponent, m.lhs, m.rhs
                            )?,
                        }
                    }
                    Err(e) => writeln!(out, "ERROR {id}: {e}")?,
                }
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = ids
                .iter()
                .zip(results)
                .map(|(id, r)| match r {
                    Ok(r) => serde_json::to_value(ReportRecord::from(r)).expect("serializable"),
                    Err(e) => json!({"id": id, "error": e.to_string()}),
                })
                .collect();
            if as_list {
                serde_json::to_writer(&mut *out, &values)?;
            } else {
                serde_json::to_writer(&mut *out, &values[0])?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "id",
                "order",
                "pass",
                "e",
                "lhs",
                "rhs",
                "terms",
                "elapsed_ms",
                "error",
            ])?;
            for (id, r) in ids.iter().zip(results) {
                match r {
                    Ok(r) => {
                        let rec = ReportRecord::from(r);
                        let (e, l, rr) = match &rec.first_mismatch {
                            Some(m) => (m.e.to_string(), m.lhs.clone(), m.rhs.clone()),
                            None => Default::default(),
                        };
                        w.write_record([
                            rec.id,
                            rec.order.to_string(),
                            rec.pass.to_string(),
                            e,
                            l,
                            rr,
                            rec.terms.to_string(),
                            format!("{:.3}", rec.elapsed_ms),
                            String::new(),
                        ])?;
                    }
                    Err(err) => {
                        let blank = String::new();
                        w.write_record([
                            id.to_string(),
                            blank.clone(),
                            blank.clone(),
                            blank.clone(),
                            blank.clone(),
                            blank.clone(),
                            blank.clone(),
                            blank,
                            err.to_string(),
                        ])?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_scan(
    fmt: Format,
    report: &crate::builders::ScanReport,
    out: &mut Vec<u8>,
) -> io::Result<()> {
    let names: Vec<&str> = report.candidates.iter().map(|c| c.name.as_str()).collect();
    let target_name = format!("sigma_{}(e/2)", report.k);
    match fmt {
        Format::Plain => {
            write!(out, "{:>6} {:>16}", "e", target_name)?;
            for n in &names {
                write!(out, " {n:>16}")?;
            }
            writeln!(out)?;
            for row in report.rows() {
                write!(out, "{:>6} {:>16}", row.exponent, row.target.to_string())?;
                for v in &row.values {
                    write!(out, " {:>16}", v.to_string())?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = report
                .rows()
                .map(|r| {
                    json!({
                        "e": r.exponent,
                        "target": r.target.to_string(),
                        "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "k": report.k,
                "order": report.order,
                "candidates": names,
                "rows": rows,
            });
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["exponent".to_string(), target_name];
            header.extend(names.iter().map(|n| n.to_string()));
            w.write_record(&header)?;
            for row in report.rows() {
                let mut rec = vec![row.exponent.to_string(), row.target.to_string()];
                rec.extend(row.values.iter().map(|v| v.to_string()));
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
