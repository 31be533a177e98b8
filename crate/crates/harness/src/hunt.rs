use rayon::prelude::*;

use clutters::{
    chordality, find_linear_quotients, has_linear_resolution_z2, is_linear_quotient_order,
    ChordalityMode, Clutter, Error, Result, SquarefreeIdeal,
};

use crate::enumerate::{circuit_universe, shard_range, sweep_range, Dedup, EnumerationTask};
use crate::jobs::JobParams;
use crate::report::{
    clutter_to_record, Counterexample, ShardSpan, VerificationReport, COUNTEREXAMPLE_LIST_CAP,
    REPORT_FORMAT_VERSION,
};

pub const HUNT_PROPERTIES: &[&str] = &["lq-implies-chordal", "greedy-confluence"];

/// Exhaustively search the bounds for counterexamples to an open property.
/// Any hit is re-verified through independent routes before being reported;
/// a hit makes the verdict "fail" and is flagged in the notes.
pub fn counterexample_search(property: &str, params: &JobParams) -> Result<VerificationReport> {
    match property {
        "lq-implies-chordal" => lq_implies_chordal(params),
        "greedy-confluence" => greedy_confluence(params),
        other => Err(Error::input(format!(
            "unknown hunt property {other:?}; known: {}",
            HUNT_PROPERTIES.join(", ")
        ))),
    }
}

struct HuntShard {
    span: ShardSpan,
    swept: u64,
    population: u64,
    indeterminate: u64,
    hits: Vec<Counterexample>,
    hit_count: u64,
}

fn hunt_sweep(
    id: &str,
    params: &JobParams,
    per: impl Fn(&Clutter) -> HuntOutcome + Sync,
) -> Result<VerificationReport> {
    let task = EnumerationTask {
        n: params.n,
        d: params.d,
        dedup: Dedup::None,
        shards: params.shards.max(1),
    };
    let bits = task.validate()?;
    let universe = circuit_universe(params.n, params.d);
    let total = 1u64 << bits;
    let shards = params.shards.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.workers.max(1))
        .build()
        .map_err(|e| Error::input(format!("thread pool: {e}")))?;
    let outs: Vec<HuntShard> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|k| {
                let range = shard_range(total, k, shards);
                let mut out = HuntShard {
                    span: ShardSpan {
                        shard: k,
                        start: range.start,
                        end: range.end,
                    },
                    swept: 0,
                    population: 0,
                    indeterminate: 0,
                    hits: Vec::new(),
                    hit_count: 0,
                };
                sweep_range(params.n, params.d, &universe, range, Dedup::None, |_, c| {
                    out.swept += 1;
                    match per(c) {
                        HuntOutcome::Skip => {}
                        HuntOutcome::Indeterminate => out.indeterminate += 1,
                        HuntOutcome::Holds => out.population += 1,
                        HuntOutcome::Hit(detail) => {
                            out.population += 1;
                            out.hit_count += 1;
                            if out.hits.len() < COUNTEREXAMPLE_LIST_CAP {
                                out.hits.push(Counterexample {
                                    instance: clutter_to_record(c),
                                    detail,
                                });
                            }
                        }
                    }
                });
                out
            })
            .collect()
    });
    let mut report = VerificationReport {
        format_version: REPORT_FORMAT_VERSION,
        kind: "hunt".into(),
        id: id.into(),
        n: params.n,
        d: params.d,
        swept: 0,
        population: 0,
        verdict: "pass".into(),
        counterexample_count: 0,
        counterexamples: Vec::new(),
        notes: Vec::new(),
        shard_map: Vec::new(),
    };
    let mut indeterminate = 0u64;
    for out in outs {
        report.swept += out.swept;
        report.population += out.population;
        report.counterexample_count += out.hit_count;
        indeterminate += out.indeterminate;
        for hit in out.hits {
            if report.counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                report.counterexamples.push(hit);
            }
        }
        report.shard_map.push(out.span);
    }
    if report.counterexample_count > 0 {
        report.verdict = "fail".into();
        report.notes.push(format!(
            "COUNTEREXAMPLE: {} hit(s) survived re-verification; this contradicts the hunted property",
            report.counterexample_count
        ));
    }
    if indeterminate > 0 {
        report.notes.push(format!(
            "{indeterminate} instance(s) above the linear-quotients search cap could not be decided"
        ));
    }
    Ok(report)
}

enum HuntOutcome {
    Skip,
    /// Hypothesis undecidable within caps.
    Indeterminate,
    Holds,
    Hit(String),
}

/// The open question: does a linear-quotients complement ideal force
/// chordality? Hits are triple-checked: the order is re-validated, the
/// exhaustive chordality search is re-run, and the GF(2) resolution oracle
/// is consulted for the report.
fn lq_implies_chordal(params: &JobParams) -> Result<VerificationReport> {
    hunt_sweep("lq-implies-chordal", params, |c| {
        let ideal = SquarefreeIdeal::complement_ideal(c);
        let order = match find_linear_quotients(&ideal) {
            Ok(Some(order)) => order,
            Ok(None) => return HuntOutcome::Skip,
            Err(Error::Capacity(_)) => {
                // LQ implies a linear resolution; the oracle can still rule
                // the hypothesis out
                if has_linear_resolution_z2(c) {
                    return HuntOutcome::Indeterminate;
                }
                return HuntOutcome::Skip;
            }
            Err(e) => return HuntOutcome::Hit(format!("search error: {e}")),
        };
        let chordal = match chordality(c, ChordalityMode::Exhaustive) {
            Ok(cert) => cert.chordal,
            Err(e) => return HuntOutcome::Hit(format!("chordality error: {e}")),
        };
        if chordal {
            return HuntOutcome::Holds;
        }
        // triple verification
        let order_ok = is_linear_quotient_order(&ideal, &order).unwrap_or(false);
        let rerun = chordality(c, ChordalityMode::Exhaustive)
            .map(|cert| cert.chordal)
            .unwrap_or(true);
        if !order_ok || rerun {
            return HuntOutcome::Holds; // re-verification dissolved the hit
        }
        let linres = has_linear_resolution_z2(c);
        HuntOutcome::Hit(format!(
            "I(complement) has linear quotients (order {order:?}) but the clutter is not chordal; \
             GF(2) linear resolution = {linres}"
        ))
    })
}

/// Instances where greedy SMS deletion sticks although some other order
/// empties the clutter. Any hit is a research-interest event.
fn greedy_confluence(params: &JobParams) -> Result<VerificationReport> {
    hunt_sweep("greedy-confluence", params, |c| {
        let greedy = match chordality(c, ChordalityMode::Greedy) {
            Ok(cert) => cert,
            Err(e) => return HuntOutcome::Hit(format!("greedy error: {e}")),
        };
        if greedy.chordal {
            return HuntOutcome::Skip;
        }
        match chordality(c, ChordalityMode::Exhaustive) {
            Ok(cert) if cert.chordal => HuntOutcome::Hit(format!(
                "greedy sticks but the order {:?} empties the clutter",
                cert.sequence
            )),
            Ok(_) => HuntOutcome::Holds,
            Err(e) => HuntOutcome::Hit(format!("exhaustive error: {e}")),
        }
    })
}
