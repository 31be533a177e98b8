use clutters::{Error, Result};

use crate::report::VerificationReport;

/// The checked-in expectations: one line per pinned run,
/// `theorem-id n d verdict population`. Populations were frozen from the
/// first verified runs of these jobs; they are regression values, not
/// hand-written numbers.
pub const EXPECTATIONS: &str = include_str!("../data/expectations.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub id: String,
    pub n: u8,
    pub d: u8,
    pub verdict: String,
    pub population: u64,
}

pub fn parse_expectations(text: &str) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::input(format!(
                "expectations line {}: want 5 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let parse_err =
            |what: &str| Error::input(format!("expectations line {}: bad {what}", lineno + 1));
        out.push(Expectation {
            id: fields[0].to_string(),
            n: fields[1].parse().map_err(|_| parse_err("n"))?,
            d: fields[2].parse().map_err(|_| parse_err("d"))?,
            verdict: fields[3].to_string(),
            population: fields[4].parse().map_err(|_| parse_err("population"))?,
        });
    }
    Ok(out)
}

pub fn builtin_expectations() -> Vec<Expectation> {
    parse_expectations(EXPECTATIONS).expect("checked-in expectations parse")
}

/// Find the pinned record for a report, if one exists.
pub fn lookup(expectations: &[Expectation], report: &VerificationReport) -> Option<Expectation> {
    expectations
        .iter()
        .find(|e| e.id == report.id && e.n == report.n && e.d == report.d)
        .cloned()
}

/// Compare a report against its pinned record. `None` when nothing is
/// pinned for this (id, n, d).
pub fn check(expectations: &[Expectation], report: &VerificationReport) -> Option<Result<()>> {
    let expected = lookup(expectations, report)?;
    if expected.verdict == report.verdict && expected.population == report.population {
        Some(Ok(()))
    } else {
        Some(Err(Error::input(format!(
            "regression: expected verdict {} population {}, got verdict {} population {}",
            expected.verdict, expected.population, report.verdict, report.population
        ))))
    }
}

/// Render a report as an expectations line.
pub fn to_line(report: &VerificationReport) -> String {
    format!(
        "{} {} {} {} {}",
        report.id, report.n, report.d, report.verdict, report.population
    )
}
