use rayon::prelude::*;

use clutters::{
    boundary_decomposition, chordality, combinations, free_ms_set, has_sms, is_cf_cycle,
    is_cf_tree, is_ci_cycle, is_cohen_macaulay_z2, is_linear_quotient_order, is_polymatroidal,
    is_shedding_vertex_of, is_squarefree_stable, is_vertex_decomposable, minimal_vertex_covers,
    replay_deletion_sequence, simplicial_ms_set, simplicial_ms_set_prime,
    sms_from_vertex_cover_structure, ChordalityMode, Clutter, Error, FaceSet, Result,
    SimplicialComplex, SquarefreeIdeal,
};

use crate::enumerate::{circuit_universe, shard_range, sweep_range, Dedup, EnumerationTask};
use crate::report::{
    clutter_to_record, Counterexample, ShardSpan, VerificationReport, COUNTEREXAMPLE_LIST_CAP,
    REPORT_FORMAT_VERSION,
};

/// Fixed default shard count. Worker count only sizes the thread pool, so
/// structured reports are bit-identical at any worker count.
pub const DEFAULT_SHARDS: u32 = 16;

/// Default circuit cap for jobs that enumerate subclutters per instance.
pub const DEFAULT_CIRCUIT_CAP: usize = 12;

/// Cap on the sequence space of the linear-quotients equivalence job.
pub const SEQUENCE_CAP: u64 = 1_000_000;

pub const THEOREM_IDS: &[&str] = &[
    "cor-low-n",
    "remark-3-10",
    "sqf-stable-chordal",
    "polymatroidal-sms",
    "lq-sms-equivalence",
    "ci-chain",
    "cycle-size-bound",
    "deg2-c1",
    "boundary-decomposition",
    "vdec-chordal-tree",
    "dual-equivalence",
    "trees-have-leaf-equiv",
    "vertex-cover-sms",
];

#[derive(Debug, Clone)]
pub struct JobParams {
    pub n: u8,
    pub d: u8,
    pub shards: u32,
    pub workers: usize,
    /// lq-sms-equivalence: maximum sequence length (default: all of E).
    pub max_len: Option<usize>,
    /// deg2-c1: per-instance circuit cap before the C1 enumeration is
    /// skipped (default 12).
    pub circuit_cap: Option<usize>,
}

impl JobParams {
    pub fn new(n: u8, d: u8) -> Self {
        JobParams {
            n,
            d,
            shards: DEFAULT_SHARDS,
            workers: 1,
            max_len: None,
            circuit_cap: None,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// Dispatch a named theorem-verification job.
pub fn verify(id: &str, params: &JobParams) -> Result<VerificationReport> {
    match id {
        "cor-low-n" => cor_low_n(params),
        "remark-3-10" => remark_3_10(params),
        "sqf-stable-chordal" => sqf_stable_chordal(params),
        "polymatroidal-sms" => polymatroidal_sms(params),
        "lq-sms-equivalence" => lq_sms_equivalence(params),
        "ci-chain" => ci_chain(params),
        "cycle-size-bound" => cycle_size_bound(params),
        "deg2-c1" => deg2_c1(params),
        "boundary-decomposition" => boundary_decomposition_job(params),
        "vdec-chordal-tree" => vdec_chordal_tree(params),
        "dual-equivalence" => dual_equivalence(params),
        "trees-have-leaf-equiv" => trees_have_leaf_equiv(params),
        "vertex-cover-sms" => vertex_cover_sms(params),
        other => Err(Error::input(format!(
            "unknown theorem id {other:?}; known ids: {}",
            THEOREM_IDS.join(", ")
        ))),
    }
}

/// Per-instance outcome inside a sweep.
enum Instance {
    /// Hypothesis not satisfied.
    Skip,
    /// Hypothesis satisfied but the check was skipped for capacity.
    CapacitySkip,
    Pass,
    Fail(String),
}

struct ShardOut {
    span: ShardSpan,
    swept: u64,
    population: u64,
    failures: u64,
    capacity_skips: u64,
    counterexamples: Vec<Counterexample>,
}

/// Run a per-clutter check over the full enumeration, sharded. Shards are
/// processed in parallel and merged in order, so the output is independent
/// of the worker count.
fn sweep_job(
    kind: &str,
    id: &str,
    params: &JobParams,
    per: impl Fn(&Clutter) -> Instance + Sync,
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
    let outs: Vec<ShardOut> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|k| {
                let range = shard_range(total, k, shards);
                let mut out = ShardOut {
                    span: ShardSpan {
                        shard: k,
                        start: range.start,
                        end: range.end,
                    },
                    swept: 0,
                    population: 0,
                    failures: 0,
                    capacity_skips: 0,
                    counterexamples: Vec::new(),
                };
                sweep_range(params.n, params.d, &universe, range, Dedup::None, |_, c| {
                    out.swept += 1;
                    match per(c) {
                        Instance::Skip => {}
                        Instance::CapacitySkip => {
                            out.population += 1;
                            out.capacity_skips += 1;
                        }
                        Instance::Pass => out.population += 1,
                        Instance::Fail(detail) => {
                            out.population += 1;
                            out.failures += 1;
                            if out.counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                                out.counterexamples.push(Counterexample {
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
        kind: kind.into(),
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
    let mut capacity_skips = 0u64;
    for out in outs {
        report.swept += out.swept;
        report.population += out.population;
        report.counterexample_count += out.failures;
        capacity_skips += out.capacity_skips;
        for ce in out.counterexamples {
            if report.counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                report.counterexamples.push(ce);
            }
        }
        report.shard_map.push(out.span);
    }
    if report.counterexample_count > 0 {
        report.verdict = "fail".into();
    }
    if capacity_skips > 0 {
        report.notes.push(format!(
            "{capacity_skips} instance(s) skipped at the capacity cap"
        ));
    }
    Ok(report)
}

fn exhaustive_chordal(c: &Clutter) -> Result<bool> {
    Ok(chordality(c, ChordalityMode::Exhaustive)?.chordal)
}

/// Every nonempty CF-tree has a free MS and is chordal (with the witness
/// replayed).
fn cor_low_n(params: &JobParams) -> Result<VerificationReport> {
    sweep_job("verify", "cor-low-n", params, |c| {
        if c.is_empty() || !is_cf_tree(c) {
            return Instance::Skip;
        }
        if free_ms_set(c).is_empty() {
            return Instance::Fail("CF-tree without a free MS".into());
        }
        match chordality(c, ChordalityMode::Exhaustive) {
            Ok(cert) if cert.chordal && replay_deletion_sequence(c, &cert.sequence) => {
                Instance::Pass
            }
            Ok(cert) if cert.chordal => Instance::Fail("certificate failed replay".into()),
            Ok(_) => Instance::Fail("CF-tree that is not chordal".into()),
            Err(e) => Instance::Fail(format!("chordality error: {e}")),
        }
    })
}

/// Chordal clutters have GF(2) linear resolutions.
fn remark_3_10(params: &JobParams) -> Result<VerificationReport> {
    sweep_job(
        "verify",
        "remark-3-10",
        params,
        |c| match exhaustive_chordal(c) {
            Ok(false) => Instance::Skip,
            Ok(true) => {
                if clutters::has_linear_resolution_z2(c) {
                    Instance::Pass
                } else {
                    Instance::Fail("chordal but no GF(2) linear resolution".into())
                }
            }
            Err(e) => Instance::Fail(format!("chordality error: {e}")),
        },
    )
}

/// The minimum-extension MS the squarefree-stable argument deletes.
fn stable_recipe_ms(c: &Clutter) -> FaceSet {
    let mut e = FaceSet::EMPTY;
    for _ in 0..c.dim() {
        let next = (0..c.n())
            .find(|&v| !e.contains(v) && c.circuits().iter().any(|f| e.insert(v).is_subset_of(*f)))
            .expect("nonempty clutter extends");
        e = e.insert(next);
    }
    e
}

/// Squarefree stable complement ideals force chordality, and the proof's own
/// deletion recipe works step by step.
fn sqf_stable_chordal(params: &JobParams) -> Result<VerificationReport> {
    sweep_job("verify", "sqf-stable-chordal", params, |c| {
        if !is_squarefree_stable(&SquarefreeIdeal::complement_ideal(c)) {
            return Instance::Skip;
        }
        let mut cur = c.clone();
        while !cur.is_empty() {
            let e = stable_recipe_ms(&cur);
            if !simplicial_ms_set(&cur).contains(&e) {
                return Instance::Fail(format!("recipe MS {e:?} is not simplicial"));
            }
            cur = cur.remove(e);
            if !is_squarefree_stable(&SquarefreeIdeal::complement_ideal(&cur)) {
                return Instance::Fail("stability lost after a recipe deletion".into());
            }
        }
        match exhaustive_chordal(c) {
            Ok(true) => Instance::Pass,
            Ok(false) => Instance::Fail("stable complement but not chordal".into()),
            Err(e) => Instance::Fail(format!("chordality error: {e}")),
        }
    })
}

/// Polymatroidal complement ideals force a simplicial MS.
fn polymatroidal_sms(params: &JobParams) -> Result<VerificationReport> {
    sweep_job("verify", "polymatroidal-sms", params, |c| {
        if c.is_empty() {
            return Instance::Skip;
        }
        match is_polymatroidal(&SquarefreeIdeal::complement_ideal(c)) {
            Ok(false) => Instance::Skip,
            Ok(true) => {
                if has_sms(c) {
                    Instance::Pass
                } else {
                    Instance::Fail("polymatroidal complement but no simplicial MS".into())
                }
            }
            Err(e) => Instance::Fail(format!("{e}")),
        }
    })
}

/// On the complete d-clutter, SMS'-deletion sequences coincide with valid
/// linear-quotient orders, compared as sets of sequences.
fn lq_sms_equivalence(params: &JobParams) -> Result<VerificationReport> {
    let subsets: Vec<FaceSet> = combinations(params.n, params.d as u32).collect();
    let max_len = params.max_len.unwrap_or(subsets.len()).min(subsets.len());
    // sequence count: sum of falling factorials
    let mut count = 0u64;
    let mut partial = 1u64;
    for k in 0..max_len {
        partial = partial.saturating_mul((subsets.len() - k) as u64);
        count = count.saturating_add(partial);
        if count > SEQUENCE_CAP {
            return Err(Error::capacity(format!(
                "sequence space exceeds the cap of {SEQUENCE_CAP}"
            )));
        }
    }
    let complete = Clutter::complete(params.n, params.d);
    let mut sms_side: Vec<Vec<FaceSet>> = Vec::new();
    let mut lq_side: Vec<Vec<FaceSet>> = Vec::new();
    let mut swept = 0u64;
    // enumerate all sequences; test both predicates independently
    fn extend_all(
        prefix: &[FaceSet],
        subsets: &[FaceSet],
        max_len: usize,
        out: &mut Vec<Vec<FaceSet>>,
    ) {
        if prefix.len() >= max_len {
            return;
        }
        for &e in subsets {
            if prefix.contains(&e) {
                continue;
            }
            let mut next = prefix.to_vec();
            next.push(e);
            out.push(next.clone());
            extend_all(&next, subsets, max_len, out);
        }
    }
    let mut all_sequences = Vec::new();
    extend_all(&[], &subsets, max_len, &mut all_sequences);
    for seq in &all_sequences {
        swept += 1;
        // (a) SMS' chain on the complete clutter
        let mut cur = complete.clone();
        let mut chain_ok = true;
        for &e in seq {
            if !simplicial_ms_set_prime(&cur).contains(&e) {
                chain_ok = false;
                break;
            }
            cur = cur.remove(e);
        }
        if chain_ok {
            sms_side.push(seq.clone());
        }
        // (b) linear-quotients order for the generated ideal
        let ideal = SquarefreeIdeal::from_supports(params.n, seq.clone());
        let order: Vec<usize> = seq
            .iter()
            .map(|e| ideal.generators().binary_search(e).expect("distinct"))
            .collect();
        if is_linear_quotient_order(&ideal, &order)? {
            lq_side.push(seq.clone());
        }
    }
    sms_side.sort();
    lq_side.sort();
    let mut counterexamples = Vec::new();
    let mut mismatches = 0u64;
    for seq in sms_side
        .iter()
        .filter(|s| lq_side.binary_search(s).is_err())
    {
        mismatches += 1;
        if counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
            counterexamples.push(Counterexample {
                instance: format!("{seq:?}"),
                detail: "SMS'-valid sequence that is not a linear-quotients order".into(),
            });
        }
    }
    for seq in lq_side
        .iter()
        .filter(|s| sms_side.binary_search(s).is_err())
    {
        mismatches += 1;
        if counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
            counterexamples.push(Counterexample {
                instance: format!("{seq:?}"),
                detail: "linear-quotients order whose SMS' chain breaks".into(),
            });
        }
    }
    Ok(VerificationReport {
        format_version: REPORT_FORMAT_VERSION,
        kind: "verify".into(),
        id: "lq-sms-equivalence".into(),
        n: params.n,
        d: params.d,
        swept,
        population: sms_side.len() as u64,
        verdict: if mismatches == 0 { "pass" } else { "fail" }.into(),
        counterexample_count: mismatches,
        counterexamples,
        notes: vec![format!(
            "sequences up to length {max_len}; {} satisfy both sides",
            sms_side.len()
        )],
        shard_map: vec![ShardSpan {
            shard: 0,
            start: 0,
            end: swept,
        }],
    })
}

/// No induced non-complete C2-cycle implies chordal implies no induced
/// non-complete C3-cycle.
fn ci_chain(params: &JobParams) -> Result<VerificationReport> {
    sweep_job("verify", "ci-chain", params, |c| {
        let no_c2 = match clutters::has_induced_noncomplete_ci_cycle(c, clutters::CycleClass::C2) {
            Ok(found) => !found,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        let no_c3 = match clutters::has_induced_noncomplete_ci_cycle(c, clutters::CycleClass::C3) {
            Ok(found) => !found,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        let chordal = match exhaustive_chordal(c) {
            Ok(b) => b,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        if no_c2 && !chordal {
            return Instance::Fail("no induced non-complete C2-cycle, yet not chordal".into());
        }
        if chordal && !no_c3 {
            return Instance::Fail("chordal, yet an induced non-complete C3-cycle exists".into());
        }
        Instance::Pass
    })
}

/// Every CF-cycle has at least d+2 circuits and d+2 supported vertices.
fn cycle_size_bound(params: &JobParams) -> Result<VerificationReport> {
    let need = params.d as u64 + 2;
    sweep_job("verify", "cycle-size-bound", params, move |c| {
        if !is_cf_cycle(c) {
            return Instance::Skip;
        }
        if (c.len() as u64) < need {
            return Instance::Fail(format!("CF-cycle with only {} circuits", c.len()));
        }
        if (c.support().card() as u64) < need {
            return Instance::Fail(format!(
                "CF-cycle supported on only {} vertices",
                c.support().card()
            ));
        }
        Instance::Pass
    })
}

/// Strongly connected clutters with all MS degrees exactly two are C1-cycles.
fn deg2_c1(params: &JobParams) -> Result<VerificationReport> {
    let cap = params.circuit_cap.unwrap_or(DEFAULT_CIRCUIT_CAP);
    sweep_job("verify", "deg2-c1", params, move |c| {
        if c.is_empty() {
            return Instance::Skip;
        }
        let all_deg_2 = c
            .maximal_subcircuits()
            .into_iter()
            .all(|e| c.ms_degree(e) == Ok(2));
        if !all_deg_2 || !c.is_strongly_connected() {
            return Instance::Skip;
        }
        if c.len() > cap {
            return Instance::CapacitySkip;
        }
        match is_ci_cycle(c, 1) {
            Ok(true) => Instance::Pass,
            Ok(false) => Instance::Fail("degree-2 strongly connected but not a C1-cycle".into()),
            Err(e) => Instance::Fail(format!("{e}")),
        }
    })
}

/// Nonempty boundaries decompose into CF-cycles.
fn boundary_decomposition_job(params: &JobParams) -> Result<VerificationReport> {
    if params.d == 0 {
        return Err(Error::input("boundary decomposition needs d >= 1"));
    }
    sweep_job(
        "verify",
        "boundary-decomposition",
        params,
        |c| match boundary_decomposition(c) {
            Err(e) => Instance::Fail(format!("{e}")),
            Ok((boundary, components)) => {
                if boundary.is_empty() {
                    return Instance::Skip;
                }
                if components.iter().all(is_cf_cycle) {
                    Instance::Pass
                } else {
                    Instance::Fail("a boundary component is not a CF-cycle".into())
                }
            }
        },
    )
}

/// Vertex decomposable facet complexes are CF-trees and chordal; shedding
/// vertices admit free MSs whose deletion preserves the structure; deleting
/// the shedding vertex matches the complex deletion.
fn vdec_chordal_tree(params: &JobParams) -> Result<VerificationReport> {
    sweep_job("verify", "vdec-chordal-tree", params, |c| {
        if c.is_empty() {
            return Instance::Skip;
        }
        let complex = c.facet_complex();
        let (vdec, witness) = match is_vertex_decomposable(&complex) {
            Ok(r) => r,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        if !vdec {
            return Instance::Skip;
        }
        if !is_cf_tree(c) {
            return Instance::Fail("vertex decomposable but not a CF-tree".into());
        }
        match exhaustive_chordal(c) {
            Ok(true) => {}
            Ok(false) => return Instance::Fail("vertex decomposable but not chordal".into()),
            Err(e) => return Instance::Fail(format!("{e}")),
        }
        // shedding-vertex consequences
        let Some(witness) = witness else {
            return Instance::Fail("missing shedding sequence".into());
        };
        if complex.is_simplex() {
            return Instance::Pass;
        }
        let Some(&v) = witness.first() else {
            return Instance::Fail("empty shedding sequence for a non-simplex".into());
        };
        // facets of the complex deletion match C - v when C - v is nonempty
        let c_minus_v = c.remove_vertex(v);
        if !c_minus_v.is_empty() {
            let deleted = complex.delete_vertex(v);
            if deleted.facets() != c_minus_v.circuits() {
                return Instance::Fail(format!(
                    "facets of the vertex deletion differ from C - {v}"
                ));
            }
        }
        // a free MS through v whose deletion is again vertex decomposable
        // with the same shedding vertex, or reaches C - v at once
        let candidates: Vec<FaceSet> = free_ms_set(c)
            .into_iter()
            .filter(|e| e.contains(v))
            .collect();
        if candidates.is_empty() {
            return Instance::Fail(format!("no free MS through the shedding vertex {v}"));
        }
        let ok = candidates.iter().any(|&e| {
            let residual = c.remove(e);
            if residual == c_minus_v {
                return true;
            }
            let rc = residual.facet_complex();
            matches!(is_vertex_decomposable(&rc), Ok((true, _))) && is_shedding_vertex_of(&rc, v)
        });
        if ok {
            Instance::Pass
        } else {
            Instance::Fail(format!(
                "no free MS through {v} preserves vertex decomposability"
            ))
        }
    })
}

/// The Alexander-duality equivalence: all CF-trees on [n] chordal iff every
/// qualifying Cohen-Macaulay complex restricts almost-completely somewhere.
fn dual_equivalence(params: &JobParams) -> Result<VerificationReport> {
    let n = params.n;
    let d = params.d;
    if n < d + 2 {
        return Err(Error::input("dual equivalence needs n >= d + 2"));
    }
    let d_prime = n - d - 2;

    // left side: sweep all clutters
    let task = EnumerationTask::new(n, d);
    let bits = task.validate()?;
    let universe = circuit_universe(n, d);
    let mut lhs_violations: Vec<Counterexample> = Vec::new();
    let mut cf_trees = 0u64;
    let mut swept = 0u64;
    sweep_range(n, d, &universe, 0..1u64 << bits, Dedup::None, |_, c| {
        swept += 1;
        if c.is_empty() || !is_cf_tree(c) {
            return;
        }
        cf_trees += 1;
        let chordal = chordality(c, ChordalityMode::Exhaustive)
            .map(|cert| cert.chordal)
            .unwrap_or(false);
        if !chordal && lhs_violations.len() < COUNTEREXAMPLE_LIST_CAP {
            lhs_violations.push(Counterexample {
                instance: clutter_to_record(c),
                detail: "CF-tree that is not chordal".into(),
            });
        }
    });
    let lhs_holds = lhs_violations.is_empty();

    // right side: d'-dimensional, (d'-1)-complete, non-complete complexes
    let tops: Vec<FaceSet> = combinations(n, d_prime as u32 + 1).collect();
    if tops.len() > 20 {
        return Err(Error::capacity(format!(
            "dual equivalence would enumerate 2^{} complexes",
            tops.len()
        )));
    }
    let lower: Vec<FaceSet> = combinations(n, d_prime as u32).collect();
    // cheap enough to also cross-check the boundary-solvability condition
    // against Cohen-Macaulayness on every complex
    let check_3b = clutters::binomial(n as u64, d_prime as u64) <= 12;
    let mut candidates = 0u64;
    let mut rhs_violations: Vec<Counterexample> = Vec::new();
    let mut route_disagreements: Vec<Counterexample> = Vec::new();
    for mask in 1u64..(1u64 << tops.len()) - 1 {
        let chosen: Vec<FaceSet> = tops
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &f)| f)
            .collect();
        let mut facets = chosen.clone();
        for &low in &lower {
            if !chosen.iter().any(|t| low.is_subset_of(*t)) {
                facets.push(low);
            }
        }
        let complex = SimplicialComplex::from_facets(n, facets);
        let cm = is_cohen_macaulay_z2(&complex);
        if check_3b {
            // every cycle of the right dimension on the ground set of each
            // small-face link must bound a family of link facets exactly
            // when the complex is Cohen-Macaulay
            let by_boundaries = cycles_bound_in_links(&complex, n, d_prime);
            if cm != by_boundaries && route_disagreements.len() < COUNTEREXAMPLE_LIST_CAP {
                route_disagreements.push(Counterexample {
                    instance: format!("complex facets {:?}", complex.facets()),
                    detail: format!(
                        "Reisner route says CM = {cm}, boundary-solvability route says {by_boundaries}"
                    ),
                });
            }
        }
        if !cm {
            continue;
        }
        candidates += 1;
        let found = combinations(n, d_prime as u32 + 2).any(|l| {
            let missing = l
                .k_subsets(d_prime as u32 + 1)
                .filter(|s| !complex.is_face(*s))
                .count();
            missing == 1
        });
        if !found && rhs_violations.len() < COUNTEREXAMPLE_LIST_CAP {
            rhs_violations.push(Counterexample {
                instance: format!("complex facets {:?}", complex.facets()),
                detail: "CM complex with no almost-complete restriction".into(),
            });
        }
    }
    let rhs_holds = rhs_violations.is_empty();

    let equivalent = lhs_holds == rhs_holds;
    let routes_agree = route_disagreements.is_empty();
    let verdict = equivalent && routes_agree;
    let mut counterexamples = if equivalent {
        vec![]
    } else {
        let mut v = lhs_violations;
        v.extend(rhs_violations);
        v
    };
    counterexamples.extend(route_disagreements);
    let counterexample_count = counterexamples.len() as u64;
    counterexamples.truncate(COUNTEREXAMPLE_LIST_CAP);
    Ok(VerificationReport {
        format_version: REPORT_FORMAT_VERSION,
        kind: "verify".into(),
        id: "dual-equivalence".into(),
        n,
        d,
        swept,
        population: candidates,
        verdict: if verdict { "pass" } else { "fail" }.into(),
        counterexample_count,
        counterexamples,
        notes: vec![
            format!("left side (every nonempty CF-tree chordal): {lhs_holds}"),
            format!("right side (every CM candidate restricts almost-completely): {rhs_holds}"),
            format!("{cf_trees} nonempty CF-trees among {swept} clutters"),
            if check_3b {
                "Cohen-Macaulayness cross-checked against boundary solvability on every complex"
                    .to_string()
            } else {
                "boundary-solvability cross-check skipped at this size".to_string()
            },
        ],
        shard_map: vec![ShardSpan {
            shard: 0,
            start: 0,
            end: swept,
        }],
    })
}

/// Condition (3)(b) of the duality theorem: for every face F below the top
/// two dimensions, every CF-cycle of dimension (dim link F - 1) on the
/// remaining ground set bounds a family of facets of the link.
fn cycles_bound_in_links(complex: &SimplicialComplex, n: u8, d_prime: u8) -> bool {
    let full = FaceSet::full(n);
    for size in 0..d_prime {
        for f in combinations(n, size as u32) {
            if !complex.is_face(f) {
                continue;
            }
            let link = complex.link(f).expect("face of the complex");
            let ground = full.minus(f);
            let k_faces: Vec<FaceSet> = ground.k_subsets(d_prime as u32 - size as u32).collect();
            debug_assert!(k_faces.len() <= 12);
            for mask in 1u64..1 << k_faces.len() {
                let family: Vec<FaceSet> = k_faces
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                let as_clutter =
                    Clutter::from_sorted_unchecked(n, d_prime - size - 1, family.clone());
                if !is_cf_cycle(&as_clutter) {
                    continue;
                }
                match clutters::is_boundary_of_facets(&link, &family) {
                    Ok(true) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// The three statements of the free-MS corollary rise and fall together.
fn trees_have_leaf_equiv(params: &JobParams) -> Result<VerificationReport> {
    let task = EnumerationTask::new(params.n, params.d);
    let bits = task.validate()?;
    let universe = circuit_universe(params.n, params.d);
    let mut s1_viol = 0u64; // CF-tree not chordal
    let mut s2_viol = 0u64; // CF-tree without free MS
    let mut s3_viol = 0u64; // min degree >= 2 without CF-cycle
    let mut cf_trees = 0u64;
    let mut swept = 0u64;
    let mut counterexamples = Vec::new();
    sweep_range(
        params.n,
        params.d,
        &universe,
        0..1u64 << bits,
        Dedup::None,
        |_, c| {
            swept += 1;
            if c.is_empty() {
                return;
            }
            let tree = is_cf_tree(c);
            if tree {
                cf_trees += 1;
                let chordal = chordality(c, ChordalityMode::Exhaustive)
                    .map(|cert| cert.chordal)
                    .unwrap_or(false);
                if !chordal {
                    s1_viol += 1;
                    if counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                        counterexamples.push(Counterexample {
                            instance: clutter_to_record(c),
                            detail: "CF-tree that is not chordal".into(),
                        });
                    }
                }
                if free_ms_set(c).is_empty() {
                    s2_viol += 1;
                    if counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                        counterexamples.push(Counterexample {
                            instance: clutter_to_record(c),
                            detail: "CF-tree without a free MS".into(),
                        });
                    }
                }
            }
            let min_deg_ge_2 = c
                .maximal_subcircuits()
                .into_iter()
                .all(|e| c.ms_degree(e).unwrap_or(0) >= 2);
            if min_deg_ge_2 && tree {
                // a clutter with all MS degrees >= 2 must contain a CF-cycle
                s3_viol += 1;
                if counterexamples.len() < COUNTEREXAMPLE_LIST_CAP {
                    counterexamples.push(Counterexample {
                        instance: clutter_to_record(c),
                        detail: "all MS degrees >= 2 yet no CF-cycle".into(),
                    });
                }
            }
        },
    );
    let statements = [s1_viol == 0, s2_viol == 0, s3_viol == 0];
    let equivalent = statements.iter().all(|&s| s == statements[0]);
    Ok(VerificationReport {
        format_version: REPORT_FORMAT_VERSION,
        kind: "verify".into(),
        id: "trees-have-leaf-equiv".into(),
        n: params.n,
        d: params.d,
        swept,
        population: cf_trees,
        verdict: if equivalent { "pass" } else { "fail" }.into(),
        counterexample_count: if equivalent {
            0
        } else {
            s1_viol + s2_viol + s3_viol
        },
        counterexamples: if equivalent { vec![] } else { counterexamples },
        notes: vec![format!(
            "statement truth values: chordal {}, free-MS {}, cycle-forcing {}",
            statements[0], statements[1], statements[2]
        )],
        shard_map: vec![ShardSpan {
            shard: 0,
            start: 0,
            end: swept,
        }],
    })
}

/// Unmixed cover ideals with strongly connected independent-set clutters
/// yield a verified simplicial MS through the constructive recipe.
fn vertex_cover_sms(params: &JobParams) -> Result<VerificationReport> {
    if params.d != 1 {
        return Err(Error::input("vertex-cover-sms sweeps graphs; pass d = 1"));
    }
    sweep_job("verify", "vertex-cover-sms", params, |g| {
        let covers = match minimal_vertex_covers(g) {
            Ok(c) => c,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        let Some(&first) = covers.first() else {
            return Instance::Skip;
        };
        let size = first.card();
        if size == 0 || covers.iter().any(|c| c.card() != size) {
            return Instance::Skip; // edgeless or not unmixed
        }
        let cover_clutter = match Clutter::new(g.n(), size as u8 - 1, covers) {
            Ok(c) => c,
            Err(e) => return Instance::Fail(format!("{e}")),
        };
        let c = cover_clutter.complement();
        if c.is_empty() {
            return Instance::Skip;
        }
        match sms_from_vertex_cover_structure(&c) {
            Ok(e) => {
                if simplicial_ms_set(&c).contains(&e) {
                    Instance::Pass
                } else {
                    Instance::Fail(format!("recipe returned non-simplicial {e:?}"))
                }
            }
            Err(Error::Input(_)) => Instance::Skip, // preconditions fail (e.g. not strongly connected)
            Err(e) => Instance::Fail(format!("{e}")),
        }
    })
}
