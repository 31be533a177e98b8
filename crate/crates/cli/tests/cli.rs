//! End-to-end tests over the compiled binary: exit codes, the file grammar,
//! the JSON envelope round trip, and worker-count determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use clutters::{
    chordality, free_ms_set, has_linear_resolution_z2, is_cf_cycle, is_cf_tree,
    replay_deletion_sequence, simplicial_ms_set, ChordalityMode, Clutter, FaceSet, LabelMap,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clutters"))
}

fn write_file(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("clutters-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn pm_file() -> PathBuf {
    write_file("pm.clutter", "n=5 d=2\n1 4 5\n2 4 5\n3 4 5\n")
}

fn octpp_file() -> PathBuf {
    write_file(
        "octpp.clutter",
        "n=6 d=2\n1 3 4\n2 3 4\n1 4 5\n2 4 5\n1 5 6\n2 5 6\n1 3 6\n2 3 6\n3 4 5\n",
    )
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn predicate_exit_codes() {
    let pm = pm_file();
    let octpp = octpp_file();
    assert_eq!(exit_code(&run(&["chordal", pm.to_str().unwrap()])), 0);
    assert_eq!(exit_code(&run(&["chordal", octpp.to_str().unwrap()])), 1);
    assert_eq!(exit_code(&run(&["linres", octpp.to_str().unwrap()])), 1);
    assert_eq!(exit_code(&run(&["linres", pm.to_str().unwrap()])), 0);
    assert_eq!(
        exit_code(&run(&[
            "ideal",
            "--check",
            "polymatroidal",
            pm.to_str().unwrap()
        ])),
        0
    );

    // input errors
    let bad = write_file("bad.clutter", "n=5 d=2\n1 4\n");
    assert_eq!(exit_code(&run(&["chordal", bad.to_str().unwrap()])), 2);
    assert_eq!(exit_code(&run(&["chordal", "/nonexistent/file"])), 2);

    // capacity errors
    assert_eq!(
        exit_code(&run(&["verify", "remark-3-10", "--n", "7", "--d", "2"])),
        3
    );
    // unknown theorem ids are input errors
    assert_eq!(
        exit_code(&run(&["verify", "no-such-theorem", "--n", "4", "--d", "1"])),
        2
    );
}

#[test]
fn chordal_witness_replays() {
    let pm = pm_file();
    let out = run(&["--json", "chordal", pm.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let seq = doc["witnesses"]["chordal_sequence"].as_array().unwrap();
    let labels = LabelMap::one_based(5);
    let faces: Vec<FaceSet> = seq
        .iter()
        .map(|f| {
            let vs: Vec<u32> = f
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap() as u32)
                .collect();
            labels.set_to_internal(&vs).unwrap()
        })
        .collect();
    let clutter = Clutter::new(
        5,
        2,
        vec![
            labels.set_to_internal(&[1, 4, 5]).unwrap(),
            labels.set_to_internal(&[2, 4, 5]).unwrap(),
            labels.set_to_internal(&[3, 4, 5]).unwrap(),
        ],
    )
    .unwrap();
    assert!(replay_deletion_sequence(&clutter, &faces));
}

#[test]
fn analyze_json_round_trips_through_the_library() {
    let pm = pm_file();
    let out = run(&["--json", "analyze", pm.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();

    // rebuild the clutter from the reported external labels
    let n = doc["clutter"]["n"].as_u64().unwrap() as u8;
    let d = doc["clutter"]["d"].as_u64().unwrap() as u8;
    let circuit_labels: Vec<Vec<u32>> = doc["clutter"]["circuits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c.as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap() as u32)
                .collect()
        })
        .collect();
    let all_labels: Vec<u32> = circuit_labels.iter().flatten().copied().collect();
    let labels = LabelMap::new(all_labels).unwrap();
    let circuits: Vec<FaceSet> = circuit_labels
        .iter()
        .map(|c| labels.set_to_internal(c).unwrap())
        .collect();
    let clutter = Clutter::new(n, d, circuits).unwrap();

    // recompute every reported verdict
    let v = &doc["verdicts"];
    assert_eq!(v["circuit_count"].as_u64().unwrap() as usize, clutter.len());
    assert_eq!(
        v["ms_count"].as_u64().unwrap() as usize,
        clutter.maximal_subcircuits().len()
    );
    assert_eq!(
        v["sms_count"].as_u64().unwrap() as usize,
        simplicial_ms_set(&clutter).len()
    );
    assert_eq!(
        v["free_ms_count"].as_u64().unwrap() as usize,
        free_ms_set(&clutter).len()
    );
    assert_eq!(
        v["chordal"].as_bool().unwrap(),
        chordality(&clutter, ChordalityMode::Exhaustive)
            .unwrap()
            .chordal
    );
    assert_eq!(v["cf_cycle"].as_bool().unwrap(), is_cf_cycle(&clutter));
    assert_eq!(v["cf_tree"].as_bool().unwrap(), is_cf_tree(&clutter));
    assert_eq!(
        v["linear_resolution_z2"].as_bool().unwrap(),
        has_linear_resolution_z2(&clutter)
    );
}

#[test]
fn dual_output_reparses() {
    let pm = pm_file();
    let out = run(&["dual", pm.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n=5 d=1\n"));
    let dual_file = write_file("pm-dual.clutter", &text);
    let reparse = run(&["analyze", dual_file.to_str().unwrap()]);
    assert_eq!(exit_code(&reparse), 0);
}

#[test]
fn cycles_witness_for_the_non_c2_cycle() {
    // all 3-subsets of {0..5} except 012 and 345, 0-based labels
    let mut content = String::from("n=6 d=2\n");
    for a in 0u8..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                if (a, b, c) == (0, 1, 2) || (a, b, c) == (3, 4, 5) {
                    continue;
                }
                content.push_str(&format!("{a} {b} {c}\n"));
            }
        }
    }
    let file = write_file("ex16.clutter", &content);
    let out = run(&["--json", "cycles", "--ci", "2", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verdicts"]["c2_cycle"].as_bool(), Some(false));
    assert_eq!(
        doc["witnesses"]["ci_witness"]["kind"].as_str(),
        Some("subclutter-without-sms")
    );
    // the witness subclutter replays to an empty SMS set
    let labels = LabelMap::identity(6);
    let circuits: Vec<FaceSet> = doc["witnesses"]["ci_witness"]["circuits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let vs: Vec<u32> = c
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap() as u32)
                .collect();
            labels.set_to_internal(&vs).unwrap()
        })
        .collect();
    let witness = Clutter::new(6, 2, circuits).unwrap();
    assert!(simplicial_ms_set(&witness).is_empty());

    let out = run(&["cycles", "--ci", "3", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_json_is_worker_count_invariant() {
    let a = run(&[
        "--json",
        "verify",
        "cycle-size-bound",
        "--n",
        "5",
        "--d",
        "2",
        "--workers",
        "1",
    ]);
    let b = run(&[
        "--json",
        "verify",
        "cycle-size-bound",
        "--n",
        "5",
        "--d",
        "2",
        "--workers",
        "4",
    ]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn hunt_reports_zero_hits_at_small_bounds() {
    let out = run(&["hunt", "lq-implies-chordal", "--n", "4", "--d", "1"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass"));
}
