use clutters::{Clutter, Error, FaceSet, Result};
use serde::{Deserialize, Serialize};

/// Version tag of the structured report format.
pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Cap on counterexamples listed in a report; the total count is always
/// reported. Truncation keeps the earliest instances in enumeration order,
/// so reports do not depend on shard or worker counts.
pub const COUNTEREXAMPLE_LIST_CAP: usize = 64;

/// A replayable counterexample: the instance in record form plus what went
/// wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardSpan {
    pub shard: u32,
    pub start: u64,
    pub end: u64,
}

/// The deterministic result of one verification or hunt run. Wall time is
/// deliberately not part of the structured document; repeated runs at any
/// worker count serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format_version: u32,
    /// "verify" or "hunt".
    pub kind: String,
    /// Theorem id or hunt property.
    pub id: String,
    pub n: u8,
    pub d: u8,
    /// Instances enumerated.
    pub swept: u64,
    /// Instances satisfying the hypothesis (the pinned regression count).
    pub population: u64,
    /// "pass" or "fail".
    pub verdict: String,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub shard_map: Vec<ShardSpan>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    /// Human-readable rendering; one block per report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} {} (n={}, d={}): {}\n",
            self.kind, self.id, self.n, self.d, self.verdict
        ));
        out.push_str(&format!(
            "  swept {} instances, {} satisfied the hypothesis\n",
            self.swept, self.population
        ));
        if self.counterexample_count > 0 {
            out.push_str(&format!(
                "  {} counterexample(s), listing {}:\n",
                self.counterexample_count,
                self.counterexamples.len()
            ));
            for ce in &self.counterexamples {
                out.push_str(&format!("    {} -- {}\n", ce.instance, ce.detail));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}

/// One-line record form of a clutter, replayable through `clutter_from_record`
/// and through the CLI file format (0-based labels).
pub fn clutter_to_record(clutter: &Clutter) -> String {
    let circuits = clutter
        .circuits()
        .iter()
        .map(|c| {
            c.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ");
    format!(
        "n={} d={} circuits[{}]",
        clutter.n(),
        clutter.dim(),
        circuits
    )
}

pub fn clutter_from_record(record: &str) -> Result<Clutter> {
    let parse = || -> Option<Clutter> {
        let rest = record.trim();
        let rest = rest.strip_prefix("n=")?;
        let (n, rest) = rest.split_once(' ')?;
        let rest = rest.trim().strip_prefix("d=")?;
        let (d, rest) = rest.split_once(' ')?;
        let body = rest.trim().strip_prefix("circuits[")?.strip_suffix(']')?;
        let n: u8 = n.parse().ok()?;
        let d: u8 = d.parse().ok()?;
        let mut circuits = Vec::new();
        for chunk in body.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let vs: Option<Vec<u8>> = chunk
                .split_whitespace()
                .map(|t| t.parse::<u8>().ok())
                .collect();
            circuits.push(FaceSet::from_vertices(vs?));
        }
        Clutter::new(n, d, circuits).ok()
    };
    parse().ok_or_else(|| Error::input(format!("malformed clutter record: {record}")))
}
