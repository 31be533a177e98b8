use std::collections::HashSet;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::faceset::{combinations, FaceSet};

/// Simplicial maximal subcircuits: the MSs whose closed neighborhood is a
/// clique.
pub fn simplicial_ms_set(clutter: &Clutter) -> Vec<FaceSet> {
    clutter
        .maximal_subcircuits()
        .into_iter()
        .filter(|&e| clutter.is_clique(clutter.neighborhood_unchecked(e)))
        .collect()
}

/// The SMS' variant: every d-subset of the ground set whose closed
/// neighborhood is a clique, whether it lies in a circuit or not. Degree-0
/// subsets qualify automatically (their neighborhood is themselves).
pub fn simplicial_ms_set_prime(clutter: &Clutter) -> Vec<FaceSet> {
    combinations(clutter.n(), clutter.dim() as u32)
        .filter(|&e| clutter.is_clique(clutter.neighborhood_unchecked(e)))
        .collect()
}

/// True iff some MS is simplicial; early-exit form for sweeps.
pub fn has_sms(clutter: &Clutter) -> bool {
    let mut seen: Vec<FaceSet> = Vec::with_capacity(clutter.len() * (clutter.dim() as usize + 1));
    for &c in clutter.circuits() {
        for e in c.drop_one() {
            if seen.contains(&e) {
                continue;
            }
            seen.push(e);
            if clutter.is_clique(clutter.neighborhood_unchecked(e)) {
                return true;
            }
        }
    }
    false
}

/// Free maximal subcircuits: degree exactly one. Every free MS is simplicial.
pub fn free_ms_set(clutter: &Clutter) -> Vec<FaceSet> {
    clutter
        .maximal_subcircuits()
        .into_iter()
        .filter(|&e| clutter.degree_unchecked(e) == 1)
        .collect()
}

pub fn has_free_ms(clutter: &Clutter) -> bool {
    let mut seen: Vec<FaceSet> = Vec::new();
    for &c in clutter.circuits() {
        for e in c.drop_one() {
            if seen.contains(&e) {
                continue;
            }
            seen.push(e);
            if clutter.degree_unchecked(e) == 1 {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalityMode {
    /// Delete the canonically least SMS at every step, no backtracking.
    Greedy,
    /// Backtrack over SMS choices with memoization on the residual circuit
    /// set; not-chordal only when every deletion path sticks.
    Exhaustive,
}

/// Outcome of the SMS-deletion game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalityCertificate {
    pub chordal: bool,
    /// When chordal: e_i is simplicial in C - e_1 - .. - e_{i-1} and the
    /// final residue is empty. Replayable via `replay_deletion_sequence`.
    pub sequence: Vec<FaceSet>,
    /// When not chordal: a nonempty subclutter with empty SMS reached by SMS
    /// deletions.
    pub stuck_witness: Option<Clutter>,
}

/// Decide chordality by SMS deletions. The empty clutter is chordal.
///
/// Greedy mode is a fast path that may in principle stick where some other
/// deletion order succeeds; exhaustive mode is the authority. Exhaustive
/// search keys its memo on the residual circuit set, so inputs are capped at
/// 128 circuits.
pub fn chordality(clutter: &Clutter, mode: ChordalityMode) -> Result<ChordalityCertificate> {
    match mode {
        ChordalityMode::Greedy => Ok(chordality_greedy(clutter)),
        ChordalityMode::Exhaustive => chordality_exhaustive(clutter),
    }
}

fn chordality_greedy(clutter: &Clutter) -> ChordalityCertificate {
    let mut cur = clutter.clone();
    let mut sequence = Vec::new();
    loop {
        if cur.is_empty() {
            return ChordalityCertificate {
                chordal: true,
                sequence,
                stuck_witness: None,
            };
        }
        let sms = simplicial_ms_set(&cur);
        match sms.first() {
            None => {
                return ChordalityCertificate {
                    chordal: false,
                    sequence: Vec::new(),
                    stuck_witness: Some(cur),
                }
            }
            Some(&e) => {
                sequence.push(e);
                cur = cur.remove(e);
            }
        }
    }
}

fn chordality_exhaustive(clutter: &Clutter) -> Result<ChordalityCertificate> {
    let m = clutter.len();
    if m > 128 {
        return Err(Error::capacity(format!(
            "exhaustive chordality supports at most 128 circuits, got {m}"
        )));
    }
    let full: u128 = if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };
    let mut failed: HashSet<u128> = HashSet::new();
    let mut sequence: Vec<FaceSet> = Vec::new();
    let mut stuck: Option<u128> = None;

    fn residual(clutter: &Clutter, mask: u128) -> Clutter {
        let circuits: Vec<FaceSet> = clutter
            .circuits()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        Clutter::from_sorted_unchecked(clutter.n(), clutter.dim(), circuits)
    }

    fn dfs(
        clutter: &Clutter,
        mask: u128,
        failed: &mut HashSet<u128>,
        sequence: &mut Vec<FaceSet>,
        stuck: &mut Option<u128>,
    ) -> bool {
        if mask == 0 {
            return true;
        }
        if failed.contains(&mask) {
            return false;
        }
        let cur = residual(clutter, mask);
        let sms = simplicial_ms_set(&cur);
        if sms.is_empty() {
            if stuck.is_none() {
                *stuck = Some(mask);
            }
            failed.insert(mask);
            return false;
        }
        for e in sms {
            let mut child = mask;
            for (i, &c) in clutter.circuits().iter().enumerate() {
                if mask >> i & 1 == 1 && e.is_subset_of(c) {
                    child &= !(1u128 << i);
                }
            }
            sequence.push(e);
            if dfs(clutter, child, failed, sequence, stuck) {
                return true;
            }
            sequence.pop();
        }
        failed.insert(mask);
        false
    }

    let chordal = dfs(clutter, full, &mut failed, &mut sequence, &mut stuck);
    Ok(if chordal {
        ChordalityCertificate {
            chordal: true,
            sequence,
            stuck_witness: None,
        }
    } else {
        ChordalityCertificate {
            chordal: false,
            sequence: Vec::new(),
            stuck_witness: stuck.map(|mask| residual(clutter, mask)),
        }
    })
}

/// Re-verify a deletion sequence: every step must be simplicial in the
/// residual clutter and the final residue must be empty.
pub fn replay_deletion_sequence(clutter: &Clutter, sequence: &[FaceSet]) -> bool {
    let mut cur = clutter.clone();
    for &e in sequence {
        if !simplicial_ms_set(&cur).contains(&e) {
            return false;
        }
        cur = cur.remove(e);
    }
    cur.is_empty()
}
