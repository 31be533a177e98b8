mod file;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use clutters::{
    boundary_decomposition, chordality, ci_cycle_outcome, classify_cycles,
    extend_order_to_complete, find_linear_quotients, free_ms_set, has_linear_resolution_z2,
    is_cf_cycle, is_cf_tree, is_cohen_macaulay_z2, is_polymatroidal, is_squarefree_stable,
    is_squarefree_strongly_stable, is_vertex_decomposable, reduced_homology_ranks,
    simplicial_ms_set, ChordalityMode, CiOutcome, CycleClass, Error, LabelMap, SquarefreeIdeal,
};
use clutters_harness::{counterexample_search, expectations, verify, JobParams};

use file::{format_clutter_file, parse_clutter_file, ClutterFile};
use report::{faces_to_external, CiWitnessDoc, ClutterDoc, InputStamp, ReportEnvelope};

const EXIT_HOLDS: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Decide and certify hypergraph chordality, cycles, and the squarefree
/// monomial ideal predicates they correspond to.
///
/// Predicate subcommands exit 0 when the property holds and 1 when it fails;
/// 2 flags an input error, 3 a capacity cap.
#[derive(Parser)]
#[command(name = "clutters", version)]
struct Cli {
    /// Emit the machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ModeArg {
    Greedy,
    #[default]
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealCheck {
    Lq,
    Stable,
    StronglyStable,
    Polymatroidal,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum IdealSource {
    /// I of the d-complement of the clutter (the usual object of study).
    #[default]
    Complement,
    /// I of the circuits themselves.
    Circuits,
}

#[derive(Subcommand)]
enum Command {
    /// Full verdict matrix for one clutter file.
    Analyze { file: PathBuf },
    /// Is the clutter chordal (SMS deletion sequence)?
    Chordal {
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        file: PathBuf,
    },
    /// Cycle classification; with --ci N, the Ci-cycle predicate.
    Cycles {
        #[arg(long)]
        ci: Option<u8>,
        file: PathBuf,
    },
    /// Squarefree-ideal predicates of the circuit or complement ideal.
    Ideal {
        #[arg(long, value_enum)]
        check: IdealCheck,
        #[arg(long, value_enum, default_value_t)]
        of: IdealSource,
        /// Test against the reversed vertex order.
        #[arg(long)]
        reverse: bool,
        file: PathBuf,
    },
    /// Reduced GF(2) Betti numbers of the facet complex.
    Homology { file: PathBuf },
    /// Is the facet complex GF(2) Cohen-Macaulay?
    Cm { file: PathBuf },
    /// Does I(complement) have a GF(2) linear resolution (Eagon-Reiner)?
    Linres { file: PathBuf },
    /// Is the facet complex vertex decomposable?
    Vdec { file: PathBuf },
    /// Print the Alexander dual clutter in the file grammar.
    Dual { file: PathBuf },
    /// Print the boundary clutter and its CF-cycle decomposition.
    Boundary { file: PathBuf },
    /// Run a named theorem-verification job over an exhaustive sweep.
    Verify {
        id: String,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        d: u8,
        #[arg(long)]
        shards: Option<u32>,
        #[arg(long)]
        workers: Option<usize>,
        /// lq-sms-equivalence: maximum sequence length.
        #[arg(long)]
        max_len: Option<usize>,
        /// deg2-c1: per-instance circuit cap.
        #[arg(long)]
        circuit_cap: Option<usize>,
        /// Print the expectations line for pinning instead of the report.
        #[arg(long)]
        pin_line: bool,
    },
    /// Exhaustively hunt for counterexamples to an open property.
    Hunt {
        property: String,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        d: u8,
        #[arg(long)]
        shards: Option<u32>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Capacity(_) => ExitCode::from(EXIT_CAPACITY),
                Error::TheoremViolation(_) => {
                    eprintln!(
                        "THEOREM VIOLATION: this input contradicts a proved statement; please report it"
                    );
                    ExitCode::from(EXIT_FAILS)
                }
                Error::Input(_) => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}

fn default_workers() -> usize {
    std::env::var("CLUTTERS_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

fn load(path: &Path) -> Result<(ClutterFile, InputStamp), Error> {
    let bytes =
        std::fs::read(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let digest: String = hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::input(format!("{}: not valid UTF-8", path.display())))?;
    let parsed = parse_clutter_file(&text)?;
    Ok((
        parsed,
        InputStamp {
            path: path.display().to_string(),
            sha256: digest,
        },
    ))
}

fn command_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let started = Instant::now();
    let code = dispatch(cli)?;
    eprintln!("completed in {} ms", started.elapsed().as_millis());
    Ok(code)
}

fn dispatch(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Analyze { file } => analyze(cli, file),
        Command::Chordal { mode, file } => chordal_cmd(cli, *mode, file),
        Command::Cycles { ci, file } => cycles_cmd(cli, *ci, file),
        Command::Ideal {
            check,
            of,
            reverse,
            file,
        } => ideal_cmd(cli, *check, *of, *reverse, file),
        Command::Homology { file } => homology_cmd(cli, file),
        Command::Cm { file } => cm_cmd(cli, file),
        Command::Linres { file } => linres_cmd(cli, file),
        Command::Vdec { file } => vdec_cmd(cli, file),
        Command::Dual { file } => dual_cmd(cli, file),
        Command::Boundary { file } => boundary_cmd(cli, file),
        Command::Verify {
            id,
            n,
            d,
            shards,
            workers,
            max_len,
            circuit_cap,
            pin_line,
        } => {
            let mut params =
                JobParams::new(*n, *d).with_workers(workers.unwrap_or_else(default_workers));
            if let Some(s) = shards {
                params.shards = (*s).max(1);
            }
            params.max_len = *max_len;
            params.circuit_cap = *circuit_cap;
            let report = verify(id, &params)?;
            match expectations::check(&expectations::builtin_expectations(), &report) {
                Some(Ok(())) => eprintln!("matches the pinned expectation"),
                Some(Err(e)) => eprintln!("EXPECTATION MISMATCH: {e}"),
                None => {}
            }
            if *pin_line {
                println!("{}", expectations::to_line(&report));
            } else if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.passed() {
                EXIT_HOLDS
            } else {
                EXIT_FAILS
            })
        }
        Command::Hunt {
            property,
            n,
            d,
            shards,
            workers,
        } => {
            let mut params =
                JobParams::new(*n, *d).with_workers(workers.unwrap_or_else(default_workers));
            if let Some(s) = shards {
                params.shards = (*s).max(1);
            }
            let report = counterexample_search(property, &params)?;
            match expectations::check(&expectations::builtin_expectations(), &report) {
                Some(Ok(())) => eprintln!("matches the pinned expectation"),
                Some(Err(e)) => eprintln!("EXPECTATION MISMATCH: {e}"),
                None => {}
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.passed() {
                EXIT_HOLDS
            } else {
                EXIT_FAILS
            })
        }
    }
}

fn emit(cli: &Cli, envelope: &ReportEnvelope, human: &str) {
    if cli.json {
        println!("{}", envelope.to_json());
    } else {
        print!("{human}");
    }
}

fn render_faces(labels: &LabelMap, faces: &[clutters::FaceSet]) -> String {
    faces
        .iter()
        .map(|&f| labels.format_set(f))
        .collect::<Vec<_>>()
        .join(", ")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    let mut human = String::new();

    let ms = clutter.maximal_subcircuits();
    let sms = simplicial_ms_set(&clutter);
    let free = free_ms_set(&clutter);
    env.verdicts.circuit_count = Some(clutter.len());
    env.verdicts.ms_count = Some(ms.len());
    env.verdicts.sms_count = Some(sms.len());
    env.verdicts.free_ms_count = Some(free.len());
    env.verdicts.strongly_connected = Some(clutter.is_strongly_connected());
    env.verdicts.complete_on_support = Some(clutter.is_complete_on_support());
    human.push_str(&format!(
        "circuits: {}  MS: {}  SMS: {}  free: {}\n",
        clutter.len(),
        ms.len(),
        sms.len(),
        free.len()
    ));

    let cert = chordality(&clutter, ChordalityMode::Exhaustive)?;
    env.verdicts.chordal = Some(cert.chordal);
    if cert.chordal {
        env.witnesses.chordal_sequence = Some(faces_to_external(&labels, &cert.sequence));
        env.replay.push(
            "delete the chordal_sequence faces in order; every step is simplicial and the residue empties"
                .into(),
        );
        human.push_str(&format!(
            "chordal: yes  witness: {}\n",
            render_faces(&labels, &cert.sequence)
        ));
    } else {
        let witness = cert.stuck_witness.expect("non-chordal certificate");
        env.witnesses.stuck_subclutter = Some(faces_to_external(&labels, witness.circuits()));
        human.push_str("chordal: no  (stuck subclutter recorded)\n");
    }

    env.verdicts.cf_cycle = Some(is_cf_cycle(&clutter));
    env.verdicts.cf_tree = Some(is_cf_tree(&clutter));
    human.push_str(&format!(
        "cf-cycle: {}  cf-tree: {}\n",
        yesno(env.verdicts.cf_cycle.unwrap()),
        yesno(env.verdicts.cf_tree.unwrap())
    ));

    match classify_cycles(&clutter) {
        Ok(class) => {
            let (_, c1, c2, c3) = class.flags();
            env.verdicts.c1_cycle = Some(c1);
            env.verdicts.c2_cycle = Some(c2);
            env.verdicts.c3_cycle = Some(c3);
            human.push_str(&format!(
                "c1-cycle: {}  c2-cycle: {}  c3-cycle: {}\n",
                yesno(c1),
                yesno(c2),
                yesno(c3)
            ));
        }
        Err(Error::Capacity(msg)) => {
            env.notes.push(format!("ci-cycle flags skipped: {msg}"));
            human.push_str("ci-cycles: skipped (capacity)\n");
        }
        Err(e) => return Err(e),
    }

    env.verdicts.linear_resolution_z2 = Some(has_linear_resolution_z2(&clutter));
    human.push_str(&format!(
        "linear resolution over GF(2): {}\n",
        yesno(env.verdicts.linear_resolution_z2.unwrap())
    ));

    let ideal = SquarefreeIdeal::complement_ideal(&clutter);
    env.verdicts.complement_stable = Some(is_squarefree_stable(&ideal));
    env.verdicts.complement_strongly_stable = Some(is_squarefree_strongly_stable(&ideal));
    env.verdicts.complement_polymatroidal = Some(is_polymatroidal(&ideal)?);
    match find_linear_quotients(&ideal) {
        Ok(order) => {
            env.verdicts.complement_linear_quotients = Some(order.is_some());
            if let Some(order) = order {
                let faces: Vec<_> = order.iter().map(|&i| ideal.generators()[i]).collect();
                env.witnesses.lq_order = Some(faces_to_external(&labels, &faces));
            }
        }
        Err(Error::Capacity(msg)) => {
            env.notes.push(format!("linear quotients skipped: {msg}"));
        }
        Err(e) => return Err(e),
    }
    human.push_str(&format!(
        "I(complement): polymatroidal {}  stable {}  strongly stable {}  linear quotients {}\n",
        yesno(env.verdicts.complement_polymatroidal.unwrap()),
        yesno(env.verdicts.complement_stable.unwrap()),
        yesno(env.verdicts.complement_strongly_stable.unwrap()),
        env.verdicts
            .complement_linear_quotients
            .map_or("skipped".to_string(), |b| yesno(b).to_string()),
    ));

    if !clutter.is_empty() {
        let complex = clutter.facet_complex();
        env.verdicts.cohen_macaulay_z2 = Some(is_cohen_macaulay_z2(&complex));
        let (vdec, shedding) = is_vertex_decomposable(&complex)?;
        env.verdicts.vertex_decomposable = Some(vdec);
        if let Some(shedding) = shedding {
            env.witnesses.shedding_sequence = Some(
                shedding
                    .iter()
                    .map(|&v| labels.to_external(v))
                    .collect::<Result<_, _>>()?,
            );
        }
        let ranks = reduced_homology_ranks(&complex)?;
        let mut betti = vec![ranks.minus_one];
        betti.extend(&ranks.ranks);
        env.verdicts.betti_numbers = Some(betti);
        env.verdicts.betti_offset = Some(-1);
        human.push_str(&format!(
            "facet complex: CM/GF(2) {}  vertex decomposable {}  reduced Betti (from -1): {:?}\n",
            yesno(env.verdicts.cohen_macaulay_z2.unwrap()),
            yesno(vdec),
            env.verdicts.betti_numbers.as_ref().unwrap()
        ));
    }

    env.replay
        .push("feed the clutter block back through `analyze --json` to reproduce".into());
    emit(cli, &env, &human);
    Ok(EXIT_HOLDS)
}

fn chordal_cmd(cli: &Cli, mode: ModeArg, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let mode = match mode {
        ModeArg::Greedy => ChordalityMode::Greedy,
        ModeArg::Exhaustive => ChordalityMode::Exhaustive,
    };
    let cert = chordality(&clutter, mode)?;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    env.verdicts.chordal = Some(cert.chordal);
    let human;
    if cert.chordal {
        env.witnesses.chordal_sequence = Some(faces_to_external(&labels, &cert.sequence));
        human = format!(
            "chordal: yes  witness: {}\n",
            render_faces(&labels, &cert.sequence)
        );
    } else {
        let witness = cert.stuck_witness.expect("non-chordal certificate");
        env.witnesses.stuck_subclutter = Some(faces_to_external(&labels, witness.circuits()));
        human = format!(
            "chordal: no  stuck subclutter ({} circuits) has empty SMS\n",
            witness.len()
        );
    }
    emit(cli, &env, &human);
    Ok(if cert.chordal { EXIT_HOLDS } else { EXIT_FAILS })
}

fn cycles_cmd(cli: &Cli, ci: Option<u8>, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    match ci {
        None => {
            let class = classify_cycles(&clutter)?;
            let (cf, c1, c2, c3) = class.flags();
            env.verdicts.cf_cycle = Some(cf);
            env.verdicts.c1_cycle = Some(c1);
            env.verdicts.c2_cycle = Some(c2);
            env.verdicts.c3_cycle = Some(c3);
            env.verdicts.complete_on_support = Some(class.complete_with_support_d_plus_2);
            let human = format!(
                "cf-cycle: {}  c1: {}  c2: {}  c3: {}  complete(d+2): {}\n",
                yesno(cf),
                yesno(c1),
                yesno(c2),
                yesno(c3),
                yesno(class.complete_with_support_d_plus_2)
            );
            emit(cli, &env, &human);
            Ok(EXIT_HOLDS)
        }
        Some(i) => {
            let outcome = ci_cycle_outcome(&clutter, CycleClass::from_index(i)?)?;
            let is_cycle = outcome.is_cycle();
            match i {
                1 => env.verdicts.c1_cycle = Some(is_cycle),
                2 => env.verdicts.c2_cycle = Some(is_cycle),
                _ => env.verdicts.c3_cycle = Some(is_cycle),
            }
            let human = match &outcome {
                CiOutcome::Empty => {
                    env.witnesses.ci_witness = Some(CiWitnessDoc {
                        kind: "empty".into(),
                        circuits: None,
                        removed: None,
                        sms: None,
                    });
                    format!("c{i}-cycle: no (empty clutter)\n")
                }
                CiOutcome::CompleteCycle => {
                    env.witnesses.ci_witness = Some(CiWitnessDoc {
                        kind: "complete-with-support-d-plus-2".into(),
                        circuits: None,
                        removed: None,
                        sms: None,
                    });
                    format!("c{i}-cycle: yes (complete clutter on d+2 vertices)\n")
                }
                CiOutcome::Cycle => format!("c{i}-cycle: yes\n"),
                CiOutcome::HasSms(e) => {
                    env.witnesses.ci_witness = Some(CiWitnessDoc {
                        kind: "has-sms".into(),
                        circuits: None,
                        removed: None,
                        sms: Some(labels.set_to_external(*e)?),
                    });
                    format!(
                        "c{i}-cycle: no  witness: {} is a simplicial MS\n",
                        labels.format_set(*e)
                    )
                }
                CiOutcome::SubclutterWithoutSms { circuits, removed } => {
                    env.witnesses.ci_witness = Some(CiWitnessDoc {
                        kind: "subclutter-without-sms".into(),
                        circuits: Some(faces_to_external(&labels, circuits)),
                        removed: removed.as_ref().map(|r| faces_to_external(&labels, r)),
                        sms: None,
                    });
                    let removed_text = removed.as_ref().map_or(String::new(), |r| {
                        format!(" = C - {{{}}}", render_faces(&labels, r))
                    });
                    format!(
                        "c{i}-cycle: no  witness: SMS(subclutter{removed_text}) = empty ({} circuits)\n",
                        circuits.len()
                    )
                }
            };
            emit(cli, &env, &human);
            Ok(if is_cycle { EXIT_HOLDS } else { EXIT_FAILS })
        }
    }
}

fn ideal_cmd(
    cli: &Cli,
    check: IdealCheck,
    of: IdealSource,
    reverse: bool,
    path: &Path,
) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let mut ideal = match of {
        IdealSource::Complement => SquarefreeIdeal::complement_ideal(&clutter),
        IdealSource::Circuits => SquarefreeIdeal::circuit_ideal(&clutter),
    };
    if reverse {
        ideal = ideal.reversed();
    }
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    if reverse {
        env.notes
            .push("the ideal was relabeled against the reverse vertex order".into());
    }
    let complement = matches!(of, IdealSource::Complement);
    let (holds, what) = match check {
        IdealCheck::Stable => (is_squarefree_stable(&ideal), "squarefree stable"),
        IdealCheck::StronglyStable => (
            is_squarefree_strongly_stable(&ideal),
            "squarefree strongly stable",
        ),
        IdealCheck::Polymatroidal => (is_polymatroidal(&ideal)?, "polymatroidal"),
        IdealCheck::Lq => {
            let order = find_linear_quotients(&ideal)?;
            let found = order.is_some();
            if let Some(order) = order {
                let faces: Vec<_> = order.iter().map(|&i| ideal.generators()[i]).collect();
                if !reverse {
                    env.witnesses.lq_order = Some(faces_to_external(&labels, &faces));
                    if let Ok(ext) = extend_order_to_complete(&ideal, &order) {
                        env.notes.push(format!(
                            "order extends to the complete ideal ({} generators)",
                            ext.len()
                        ));
                    }
                }
            }
            (found, "linear quotients")
        }
    };
    match check {
        IdealCheck::Stable => {
            if complement {
                env.verdicts.complement_stable = Some(holds)
            } else {
                env.verdicts.ideal_stable = Some(holds)
            }
        }
        IdealCheck::StronglyStable => {
            if complement {
                env.verdicts.complement_strongly_stable = Some(holds)
            } else {
                env.verdicts.ideal_strongly_stable = Some(holds)
            }
        }
        IdealCheck::Polymatroidal => {
            if complement {
                env.verdicts.complement_polymatroidal = Some(holds)
            } else {
                env.verdicts.ideal_polymatroidal = Some(holds)
            }
        }
        IdealCheck::Lq => {
            if complement {
                env.verdicts.complement_linear_quotients = Some(holds)
            } else {
                env.verdicts.ideal_linear_quotients = Some(holds)
            }
        }
    }
    let source = if complement {
        "I(complement)"
    } else {
        "I(circuits)"
    };
    let human = format!("{source} {what}: {}\n", yesno(holds));
    emit(cli, &env, &human);
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn homology_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let ranks = reduced_homology_ranks(&clutter.facet_complex())?;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    let mut betti = vec![ranks.minus_one];
    betti.extend(&ranks.ranks);
    env.verdicts.betti_numbers = Some(betti.clone());
    env.verdicts.betti_offset = Some(-1);
    let human = betti
        .iter()
        .enumerate()
        .map(|(i, b)| format!("H~_{}: {b}", i as i32 - 1))
        .collect::<Vec<_>>()
        .join("  ")
        + "\n";
    emit(cli, &env, &human);
    Ok(EXIT_HOLDS)
}

fn cm_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let holds = is_cohen_macaulay_z2(&clutter.facet_complex());
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    env.verdicts.cohen_macaulay_z2 = Some(holds);
    emit(
        cli,
        &env,
        &format!("Cohen-Macaulay over GF(2): {}\n", yesno(holds)),
    );
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn linres_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let holds = has_linear_resolution_z2(&clutter);
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    env.verdicts.linear_resolution_z2 = Some(holds);
    emit(
        cli,
        &env,
        &format!(
            "I(complement) has a GF(2) linear resolution: {}\n",
            yesno(holds)
        ),
    );
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn vdec_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let (holds, shedding) = is_vertex_decomposable(&clutter.facet_complex())?;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    env.verdicts.vertex_decomposable = Some(holds);
    let mut human = format!("vertex decomposable: {}\n", yesno(holds));
    if let Some(shedding) = shedding {
        let external: Vec<u32> = shedding
            .iter()
            .map(|&v| labels.to_external(v))
            .collect::<Result<_, _>>()?;
        human.push_str(&format!(
            "shedding sequence: {}\n",
            external
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
        env.witnesses.shedding_sequence = Some(external);
    }
    emit(cli, &env, &human);
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn dual_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let dual = clutter.alexander_dual()?;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &dual));
    env.notes
        .push("the clutter block holds the Alexander dual of the input".into());
    let human = format_clutter_file(&labels, &dual);
    emit(cli, &env, &human);
    Ok(EXIT_HOLDS)
}

fn boundary_cmd(cli: &Cli, path: &Path) -> Result<u8, Error> {
    let (parsed, stamp) = load(path)?;
    let ClutterFile { labels, clutter } = parsed;
    let (boundary, components) = boundary_decomposition(&clutter)?;
    let mut env = ReportEnvelope::new(command_echo(), stamp);
    env.clutter = Some(ClutterDoc::new(&labels, &clutter));
    env.witnesses.boundary_components = Some(
        components
            .iter()
            .map(|c| faces_to_external(&labels, c.circuits()))
            .collect(),
    );
    let mut human = format!(
        "boundary: {} odd-degree MS(s) in {} CF-cycle component(s)\n",
        boundary.len(),
        components.len()
    );
    for comp in &components {
        human.push_str(&format!(
            "  component: {}\n",
            render_faces(&labels, comp.circuits())
        ));
    }
    emit(cli, &env, &human);
    Ok(EXIT_HOLDS)
}
