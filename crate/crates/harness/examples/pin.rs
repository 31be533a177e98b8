//! Regenerate the expectations file content: runs every pinned job and hunt
//! at its recorded bounds and prints one line per run. Expect a few minutes
//! single-core; timings land on stderr.

use clutters_harness::{counterexample_search, expectations, jobs, JobParams};

fn main() {
    let verify_runs: &[(&str, u8, u8)] = &[
        ("cor-low-n", 5, 2),
        ("cor-low-n", 6, 3),
        ("cor-low-n", 6, 2),
        ("remark-3-10", 5, 2),
        ("remark-3-10", 6, 3),
        ("remark-3-10", 4, 1),
        ("remark-3-10", 5, 1),
        ("remark-3-10", 6, 1),
        ("remark-3-10", 6, 2),
        ("sqf-stable-chordal", 5, 2),
        ("polymatroidal-sms", 5, 2),
        ("lq-sms-equivalence", 4, 1),
        ("ci-chain", 5, 2),
        ("cycle-size-bound", 5, 2),
        ("cycle-size-bound", 6, 2),
        ("deg2-c1", 5, 2),
        ("deg2-c1", 6, 2),
        ("boundary-decomposition", 5, 2),
        ("vdec-chordal-tree", 5, 2),
        ("vdec-chordal-tree", 5, 1),
        ("dual-equivalence", 5, 2),
        ("dual-equivalence", 6, 3),
        ("trees-have-leaf-equiv", 5, 2),
        ("trees-have-leaf-equiv", 6, 2),
        ("vertex-cover-sms", 5, 1),
        ("vertex-cover-sms", 6, 1),
    ];
    let hunt_runs: &[(&str, u8, u8)] = &[
        ("lq-implies-chordal", 4, 1),
        ("lq-implies-chordal", 5, 2),
        ("lq-implies-chordal", 6, 2),
        ("greedy-confluence", 4, 1),
        ("greedy-confluence", 5, 2),
        ("greedy-confluence", 6, 2),
    ];
    let workers: usize = std::thread::available_parallelism().map_or(1, |p| p.get());
    for &(id, n, d) in verify_runs {
        let params = JobParams::new(n, d).with_workers(workers);
        let started = std::time::Instant::now();
        match jobs::verify(id, &params) {
            Ok(report) => {
                eprintln!(
                    "# verify {} ({} ms, swept {})",
                    id,
                    started.elapsed().as_millis(),
                    report.swept
                );
                println!("{}", expectations::to_line(&report));
                if !report.passed() {
                    eprintln!("FAILED:\n{}", report.to_text());
                }
            }
            Err(e) => eprintln!("# verify {id} n={n} d={d} error: {e}"),
        }
    }
    for &(property, n, d) in hunt_runs {
        let params = JobParams::new(n, d).with_workers(workers);
        let started = std::time::Instant::now();
        match counterexample_search(property, &params) {
            Ok(report) => {
                eprintln!(
                    "# hunt {} ({} ms, swept {})",
                    property,
                    started.elapsed().as_millis(),
                    report.swept
                );
                println!("{}", expectations::to_line(&report));
                if !report.passed() {
                    eprintln!("HITS:\n{}", report.to_text());
                }
            }
            Err(e) => eprintln!("# hunt {property} n={n} d={d} error: {e}"),
        }
    }
}
