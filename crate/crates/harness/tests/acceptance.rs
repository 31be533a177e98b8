//! The acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime against the stated budget. Run with
//! `cargo test -p clutters-harness --test acceptance -- --nocapture`
//! to see the lines.

use std::time::{Duration, Instant};

use clutters::{
    chordality, combinations, find_linear_quotients, has_linear_resolution_z2, is_cf_cycle,
    is_cf_tree, is_ci_cycle, is_polymatroidal, is_squarefree_stable, replay_deletion_sequence,
    simplicial_ms_set, ChordalityMode, Clutter, FaceSet, SquarefreeIdeal,
};
use clutters_harness::{fixtures, verify, JobParams};

fn fs(vs: &[u8]) -> FaceSet {
    FaceSet::from_vertices(vs.iter().copied())
}

fn finish(criterion: &str, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    println!(
        "criterion {criterion}: PASS ({} ms, budget {} s) -- {detail}",
        elapsed.as_millis(),
        budget.as_secs()
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {} ms",
        elapsed.as_millis()
    );
}

fn run_verify(id: &str, n: u8, d: u8, workers: usize) -> clutters_harness::VerificationReport {
    let params = JobParams::new(n, d).with_workers(workers);
    let report = verify(id, &params).expect("job runs");
    assert!(
        report.passed(),
        "verify {id} (n={n}, d={d}) failed:\n{}",
        report.to_text()
    );
    let pinned = clutters_harness::expectations::check(
        &clutters_harness::expectations::builtin_expectations(),
        &report,
    );
    if let Some(result) = pinned {
        result.expect("report matches its pinned expectation");
    }
    report
}

#[test]
fn criterion_01_pm_fixture_matrix() {
    let started = Instant::now();
    let c = fixtures::pm_example();
    let mut expected = vec![
        fs(&[0, 3]),
        fs(&[0, 4]),
        fs(&[1, 3]),
        fs(&[1, 4]),
        fs(&[2, 3]),
        fs(&[2, 4]),
    ];
    expected.sort_unstable();
    assert_eq!(simplicial_ms_set(&c), expected);

    let cert = chordality(&c, ChordalityMode::Exhaustive).unwrap();
    assert!(cert.chordal);
    assert!(replay_deletion_sequence(&c, &cert.sequence));
    // an alternative hand-checkable sequence replays as well
    assert!(replay_deletion_sequence(
        &c,
        &[fs(&[0, 3]), fs(&[2, 3]), fs(&[1, 3])]
    ));

    let ideal = SquarefreeIdeal::complement_ideal(&c);
    assert!(is_polymatroidal(&ideal).unwrap());
    assert!(is_squarefree_stable(&ideal));
    assert!(find_linear_quotients(&ideal).unwrap().is_some());
    finish(
        "01",
        started,
        Duration::from_secs(1),
        "pm fixture: SMS set, chordality witness, ideal predicates",
    );
}

#[test]
fn criterion_02_c3_not_c2_fixture() {
    let started = Instant::now();
    let c = fixtures::example_c3_not_c2();
    assert!(simplicial_ms_set(&c).is_empty());
    assert!(is_ci_cycle(&c, 3).unwrap());
    assert!(!is_ci_cycle(&c, 2).unwrap());
    let witness = c.remove(fs(&[1, 2]));
    assert!(!witness.is_empty());
    assert!(simplicial_ms_set(&witness).is_empty());
    finish(
        "02",
        started,
        Duration::from_secs(1),
        "c3-not-c2 fixture: SMS empty, C3 yes, C2 no with witness",
    );
}

#[test]
fn criterion_03_octahedron_suite() {
    let started = Instant::now();
    let oct = fixtures::octahedron();
    assert!(is_cf_cycle(&oct));
    assert!(is_ci_cycle(&oct, 1).unwrap());
    assert!(simplicial_ms_set(&oct).is_empty());

    let plus_triangle = fixtures::octahedron_plus_triangle();
    // no vertex-induced non-complete Ci-cycle for any class
    let support = plus_triangle.support().to_vec();
    for bits in 0u64..1 << support.len() {
        let keep = FaceSet::from_vertices(
            support
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        let sub = plus_triangle.induced_by_vertices(keep);
        if sub.is_empty() || sub.is_complete_on_support() {
            continue;
        }
        for i in 1..=3u8 {
            assert!(
                !is_ci_cycle(&sub, i).unwrap(),
                "vertex-induced non-complete C{i}-cycle found: {sub:?}"
            );
        }
    }
    assert!(!has_linear_resolution_z2(&plus_triangle));
    assert!(
        !chordality(&plus_triangle, ChordalityMode::Exhaustive)
            .unwrap()
            .chordal
    );

    let plus_star = fixtures::octahedron_plus_edge_star();
    assert!(
        chordality(&plus_star, ChordalityMode::Exhaustive)
            .unwrap()
            .chordal
    );
    assert!(has_linear_resolution_z2(&plus_star));
    finish(
        "03",
        started,
        Duration::from_secs(5),
        "octahedron suite: cycle flags, induced-cycle absence, GF(2) resolutions",
    );
}

#[test]
fn criterion_04_remark_3_10_exhaustive() {
    let started = Instant::now();
    let a = run_verify("remark-3-10", 5, 2, 4);
    assert_eq!(a.swept, 1024);
    let b = run_verify("remark-3-10", 6, 3, 4);
    assert_eq!(b.swept, 32768);
    finish(
        "04",
        started,
        Duration::from_secs(60),
        "chordal implies GF(2) linear resolution over (5,2) and (6,3)",
    );
}

#[test]
fn criterion_05_cor_low_n_exhaustive() {
    let started = Instant::now();
    let a = run_verify("cor-low-n", 5, 2, 4);
    assert_eq!(a.swept, 1024);
    let b = run_verify("cor-low-n", 6, 3, 4);
    assert_eq!(b.swept, 32768);
    finish(
        "05",
        started,
        Duration::from_secs(60),
        "every CF-tree on (5,2) and (6,3) has a free MS and is chordal",
    );
}

#[test]
fn criterion_06_ideal_theorem_chain() {
    let started = Instant::now();
    run_verify("sqf-stable-chordal", 5, 2, 4);
    run_verify("polymatroidal-sms", 5, 2, 4);
    run_verify("ci-chain", 5, 2, 4);
    finish(
        "06",
        started,
        Duration::from_secs(120),
        "squarefree-stable, polymatroidal and ci-chain theorems on (5,2)",
    );
}

#[test]
fn criterion_07_cycle_size_bound_n6() {
    // single-worker budget
    let started = Instant::now();
    let single = run_verify("cycle-size-bound", 6, 2, 1);
    assert_eq!(single.swept, 1 << 20);
    finish(
        "07a",
        started,
        Duration::from_secs(600),
        "every CF-cycle in 2^20 clutters has at least 4 circuits and 4 vertices (1 worker)",
    );
    // multi-worker budget
    let started = Instant::now();
    let eight = run_verify("cycle-size-bound", 6, 2, 8);
    finish(
        "07b",
        started,
        Duration::from_secs(120),
        "the same sweep with 8 workers",
    );
    assert_eq!(single, eight);
}

/// Greedy simplicial-vertex elimination: an independent chordal-graph oracle.
fn chordal_by_peo(n: u8, edges: &[FaceSet]) -> bool {
    let mut adj = vec![FaceSet::EMPTY; n as usize];
    for e in edges {
        let vs = e.to_vec();
        adj[vs[0] as usize] = adj[vs[0] as usize].insert(vs[1]);
        adj[vs[1] as usize] = adj[vs[1] as usize].insert(vs[0]);
    }
    let mut alive = FaceSet::full(n);
    loop {
        if alive
            .iter()
            .all(|v| adj[v as usize].intersect(alive).is_empty())
        {
            return true;
        }
        let mut progressed = false;
        for v in alive.iter() {
            let nb = adj[v as usize].intersect(alive);
            if nb
                .iter()
                .all(|u| nb.remove(u).is_subset_of(adj[u as usize]))
            {
                alive = alive.remove(v);
                progressed = true;
                break;
            }
        }
        if !progressed {
            return false;
        }
    }
}

/// Connected with all supported degrees exactly two.
fn is_graph_cycle(g: &Clutter) -> bool {
    !g.is_empty()
        && g.support()
            .iter()
            .all(|v| g.circuits().iter().filter(|e| e.contains(v)).count() == 2)
        && g.is_strongly_connected()
}

#[test]
fn criterion_08_d1_ground_truth() {
    let started = Instant::now();
    for n in 1..=6u8 {
        let universe: Vec<FaceSet> = combinations(n, 2).collect();
        for bits in 0u64..1 << universe.len() {
            let circuits: Vec<FaceSet> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Clutter::from_sorted_unchecked(n, 1, circuits);
            let sms_chordal = chordality(&g, ChordalityMode::Exhaustive).unwrap().chordal;
            assert_eq!(
                sms_chordal,
                chordal_by_peo(n, g.circuits()),
                "chordality disagreement on {g:?}"
            );
            let cycle = is_graph_cycle(&g);
            for i in 1..=3u8 {
                assert_eq!(
                    is_ci_cycle(&g, i).unwrap(),
                    cycle,
                    "C{i} disagreement on {g:?}"
                );
            }
        }
    }
    finish(
        "08",
        started,
        Duration::from_secs(60),
        "d=1 ground truth on all graphs with n <= 6: PEO chordality and graph cycles",
    );
}

#[test]
fn criterion_09_cf_tree_oracle_equivalence() {
    let started = Instant::now();
    let brute_force_tree = |c: &Clutter| -> bool {
        let m = c.len();
        (1u64..1 << m).all(|mask| {
            let sub: Vec<FaceSet> = c
                .circuits()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            !is_cf_cycle(&Clutter::from_sorted_unchecked(c.n(), c.dim(), sub))
        })
    };

    // all of (5,2)
    let universe: Vec<FaceSet> = combinations(5, 3).collect();
    for bits in 0u64..1 << 10 {
        let circuits: Vec<FaceSet> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &f)| f)
            .collect();
        let c = Clutter::from_sorted_unchecked(5, 2, circuits);
        assert_eq!(is_cf_tree(&c), brute_force_tree(&c), "on {c:?}");
    }

    // a deterministic stride sample of (6,2) restricted to <= 12 circuits
    let universe: Vec<FaceSet> = combinations(6, 3).collect();
    let mut sampled = 0u32;
    let mut index = 0u64;
    while index < 1 << 20 {
        if index.count_ones() <= 12 {
            let circuits: Vec<FaceSet> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| index >> i & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            let c = Clutter::from_sorted_unchecked(6, 2, circuits);
            assert_eq!(is_cf_tree(&c), brute_force_tree(&c), "on {c:?}");
            sampled += 1;
        }
        index += 1009; // fixed prime stride
    }
    assert!(sampled > 500, "sample unexpectedly small: {sampled}");
    finish(
        "09",
        started,
        Duration::from_secs(120),
        "GF(2) kernel CF-tree test matches brute-force subclutter search",
    );
}

#[test]
fn criterion_10_lq_sms_sequence_sets() {
    let started = Instant::now();
    let report = run_verify("lq-sms-equivalence", 4, 1, 1);
    // all 64 nonempty sequences of distinct singletons qualify on both sides
    assert_eq!(report.swept, 64);
    assert_eq!(report.population, 64);
    finish(
        "10",
        started,
        Duration::from_secs(10),
        "SMS'-deletion sequences equal linear-quotient orders on the complete 1-clutter of [4]",
    );
}

#[test]
fn criterion_11_determinism_across_workers() {
    let started = Instant::now();
    let runs: &[(&str, u8, u8)] = &[
        ("remark-3-10", 5, 2),
        ("cor-low-n", 5, 2),
        ("sqf-stable-chordal", 5, 2),
        ("polymatroidal-sms", 5, 2),
        ("ci-chain", 5, 2),
        ("cycle-size-bound", 6, 2),
        ("lq-sms-equivalence", 4, 1),
        ("deg2-c1", 5, 2),
        ("boundary-decomposition", 5, 2),
        ("vdec-chordal-tree", 5, 2),
        ("dual-equivalence", 5, 2),
        ("trees-have-leaf-equiv", 5, 2),
        ("vertex-cover-sms", 5, 1),
    ];
    for &(id, n, d) in runs {
        let one = verify(id, &JobParams::new(n, d).with_workers(1)).unwrap();
        let four = verify(id, &JobParams::new(n, d).with_workers(4)).unwrap();
        let again = verify(id, &JobParams::new(n, d).with_workers(4)).unwrap();
        assert_eq!(one.to_json(), four.to_json(), "worker variance in {id}");
        assert_eq!(four.to_json(), again.to_json(), "run variance in {id}");
    }
    // hunts too
    for property in ["lq-implies-chordal", "greedy-confluence"] {
        let one = clutters_harness::counterexample_search(
            property,
            &JobParams::new(5, 2).with_workers(1),
        )
        .unwrap();
        let four = clutters_harness::counterexample_search(
            property,
            &JobParams::new(5, 2).with_workers(4),
        )
        .unwrap();
        assert_eq!(
            one.to_json(),
            four.to_json(),
            "worker variance in {property}"
        );
        assert!(one.passed(), "unexpected hits:\n{}", one.to_text());
    }
    finish(
        "11",
        started,
        Duration::from_secs(600),
        "bit-identical structured reports at any worker count",
    );
}

#[test]
fn counterexample_hunts_at_stated_bounds() {
    // lq-implies-chordal at (5,2) and (4,1): completion with zero hits is the
    // reportable outcome; a hit would be loud, never swallowed
    for (n, d) in [(5u8, 2u8), (4, 1)] {
        let report = clutters_harness::counterexample_search(
            "lq-implies-chordal",
            &JobParams::new(n, d).with_workers(4),
        )
        .unwrap();
        assert!(
            report.passed(),
            "LQ => chordal has a counterexample at ({n},{d}):\n{}",
            report.to_text()
        );
        assert_eq!(report.counterexample_count, 0);
    }
    let confluence = clutters_harness::counterexample_search(
        "greedy-confluence",
        &JobParams::new(5, 2).with_workers(4),
    )
    .unwrap();
    assert!(
        confluence.passed(),
        "greedy/exhaustive divergence:\n{}",
        confluence.to_text()
    );
}
