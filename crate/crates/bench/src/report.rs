//! CSV and markdown rendering of experiment rows.

use std::fmt::Write as _;
use std::io;

use num_bigint::BigInt;
use num_traits::Signed;
use spectrum_core::{Rational, Strategy};

use crate::config::StdMode;
use crate::experiment::{ExperimentRow, Parameter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

pub const CSV_HEADER: &str = "n,p,param,strategy,avg,std,bound,gap_pct";

/// Rounds to one decimal, halves away from zero, without going through f64.
pub fn round1(value: &Rational) -> String {
    let tenths = (value * Rational::from_integer(BigInt::from(10))).round().to_integer();
    let abs = tenths.abs();
    let (whole, frac) = (&abs / 10, &abs % 10);
    let sign = if tenths.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

fn round1_f64(value: f64) -> String {
    format!("{value:.1}")
}

fn opt<T>(value: Option<T>, show: impl Fn(T) -> String) -> String {
    value.map(show).unwrap_or_else(|| "NA".to_string())
}

fn column_label(strategy: Strategy, parameter: &Parameter) -> &'static str {
    match (strategy, parameter) {
        (Strategy::Dsatur, Parameter::Colors(_)) => "TSC-DSATUR",
        (Strategy::Dsatur, Parameter::ThresholdFraction(_)) => "CSC-DSATUR",
        (Strategy::Random, _) => "Random",
        (Strategy::Harmony, _) => "Harmony",
        (Strategy::Balanced, _) => "Balanced",
        (Strategy::Exhaustive, _) => "Exact",
    }
}

/// Renders `rows`; CSV has one line per (row, strategy).
pub fn emit_report(rows: &[ExperimentRow], format: ReportFormat, std_mode: StdMode) -> String {
    match format {
        ReportFormat::Csv => csv(rows),
        ReportFormat::Markdown => markdown(rows, std_mode),
    }
}

/// Writes the rendered report to `sink`.
pub fn write_report(
    rows: &[ExperimentRow],
    format: ReportFormat,
    std_mode: StdMode,
    sink: &mut impl io::Write,
) -> io::Result<()> {
    sink.write_all(emit_report(rows, format, std_mode).as_bytes())?;
    sink.flush()
}

fn csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        for s in &row.stats {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.category.n,
                row.category.p.text,
                row.parameter,
                s.strategy,
                opt(s.avg.as_ref(), round1),
                opt(s.std, round1_f64),
                round1(&row.bound),
                opt(row.gap_pct.as_ref(), round1),
            );
        }
    }
    out
}

fn markdown(rows: &[ExperimentRow], std_mode: StdMode) -> String {
    let mut out = String::new();
    let std_note = match std_mode {
        StdMode::Pooled => "sample standard deviation pooled over every graph × repetition run of a category",
        StdMode::PerGraphMean => "mean over graphs of the per-graph sample standard deviation across repetitions",
    };
    let _ = writeln!(out, "_std: {std_note}. Bound: mean of the per-graph bounds. Best average in bold._");

    let mut start = 0;
    while start < rows.len() {
        let parameter = &rows[start].parameter;
        let end = rows[start..]
            .iter()
            .position(|r| &r.parameter != parameter)
            .map_or(rows.len(), |offset| start + offset);
        let block = &rows[start..end];
        start = end;

        let title = match parameter {
            Parameter::Colors(k) => format!("Maximum vertex interference, threshold problem, k = {k}"),
            Parameter::ThresholdFraction(f) => format!("Number of colors, chromatic problem, t = {}·np", f.text),
        };
        let _ = writeln!(out, "\n### {title}\n");
        let strategies: Vec<Strategy> = block[0].stats.iter().map(|s| s.strategy).collect();
        let mut header = String::from("| n | p | Bound |");
        let mut rule = String::from("|---|---|---:|");
        for &s in &strategies {
            let label = column_label(s, parameter);
            let _ = write!(header, " {label} avg | {label} std |");
            rule.push_str("---:|---:|");
        }
        header.push_str(" Gap (%) |");
        rule.push_str("---:|");
        let _ = writeln!(out, "{header}\n{rule}");

        let mut flagged = false;
        for (i, row) in block.iter().enumerate() {
            let first_of_n = i == 0 || block[i - 1].category.n != row.category.n;
            let n = if first_of_n { row.category.n.to_string() } else { String::new() };
            let _ = write!(out, "| {n} | {} | {} |", row.category.p.text, round1(&row.bound));
            let best = row.best().and_then(|b| b.avg.clone());
            for s in &row.stats {
                let mut avg = opt(s.avg.as_ref(), round1);
                if s.avg.is_some() && s.avg.as_ref().map(round1) == best.as_ref().map(round1) {
                    avg = format!("**{avg}**");
                }
                if s.strategy == Strategy::Random && row.random_exceeds_bound {
                    avg.push_str(" †");
                    flagged = true;
                }
                if s.failures > 0 {
                    let _ = write!(avg, " ({} failed)", s.failures);
                }
                let _ = write!(out, " {avg} | {} |", opt(s.std, round1_f64));
            }
            let _ = writeln!(out, " {} |", opt(row.gap_pct.as_ref(), round1));
        }
        if flagged {
            let _ = writeln!(out, "\n† random average above the bound.");
        }
    }
    out
}

/// `(np, best average)` points for trend plots, one line per row.
pub fn emit_series(rows: &[ExperimentRow]) -> String {
    let mut out = String::from("param,n,p,np,best_strategy,best_avg\n");
    for row in rows {
        let np = row.category.expected_degree();
        let (strategy, avg) = match row.best() {
            Some(best) => (best.strategy.to_string(), opt(best.avg.as_ref(), round1)),
            None => ("NA".to_string(), "NA".to_string()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{strategy},{avg}",
            row.parameter,
            row.category.n,
            row.category.p.text,
            round1(&np),
        );
    }
    out
}
