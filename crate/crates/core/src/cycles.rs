use crate::chordality::{has_sms, simplicial_ms_set};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::gf2::GF2Matrix;

/// Caps for the subclutter enumerations behind the Ci-cycle predicates.
pub const C1_CIRCUIT_CAP: usize = 22;
pub const C2_MS_CAP: usize = 22;
pub const C3_SUPPORT_CAP: u32 = 22;

/// A CF-cycle is a nonempty, strongly connected clutter in which every
/// maximal subcircuit has even degree.
pub fn is_cf_cycle(clutter: &Clutter) -> bool {
    if clutter.is_empty() {
        return false;
    }
    clutter
        .maximal_subcircuits()
        .into_iter()
        .all(|e| clutter.degree_unchecked(e).is_multiple_of(2))
        && clutter.is_strongly_connected()
}

/// A CF-tree contains no CF-cycle. Computed through the GF(2) kernel of the
/// top boundary map of ⟨C⟩: indicator vectors of all-even-degree subfamilies
/// are exactly the kernel elements, and any nonzero one decomposes into
/// CF-cycles. The empty clutter counts as a CF-tree.
pub fn is_cf_tree(clutter: &Clutter) -> bool {
    top_boundary_matrix(clutter).kernel_is_trivial()
}

/// The matrix of ∂_d on ⟨C⟩: columns are circuits, rows their d-subsets.
pub fn top_boundary_matrix(clutter: &Clutter) -> GF2Matrix {
    let ms = clutter.maximal_subcircuits();
    let mut m = GF2Matrix::zero(ms.len(), clutter.len());
    for (col, &c) in clutter.circuits().iter().enumerate() {
        for e in c.drop_one() {
            let row = ms.binary_search(&e).expect("MS of a circuit");
            m.set(row, col, true);
        }
    }
    m
}

/// The boundary ∂(C): odd-degree maximal subcircuits, as a (d-1)-clutter,
/// together with its strong components, each verified to be a CF-cycle.
pub fn boundary_decomposition(clutter: &Clutter) -> Result<(Clutter, Vec<Clutter>)> {
    if clutter.dim() == 0 {
        return Err(Error::input(
            "the boundary of a 0-dimensional clutter would have dimension -1",
        ));
    }
    let odd: Vec<FaceSet> = clutter
        .maximal_subcircuits()
        .into_iter()
        .filter(|&e| clutter.degree_unchecked(e) % 2 == 1)
        .collect();
    let boundary = Clutter::new(clutter.n(), clutter.dim() - 1, odd)?;
    let components: Vec<Clutter> = boundary
        .strong_components()
        .iter()
        .map(|idx| boundary.subclutter(idx))
        .collect();
    for comp in &components {
        if !is_cf_cycle(comp) {
            return Err(Error::TheoremViolation(format!(
                "boundary component {:?} of {:?} is not a CF-cycle",
                comp, clutter
            )));
        }
    }
    Ok((boundary, components))
}

/// Which class of proper subclutters a Ci-cycle quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    /// i = 1: all subclutters.
    C1,
    /// i = 2: subclutters induced by subsets of MS(C).
    C2,
    /// i = 3: subclutters induced by vertex subsets.
    C3,
}

impl CycleClass {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(CycleClass::C1),
            2 => Ok(CycleClass::C2),
            3 => Ok(CycleClass::C3),
            _ => Err(Error::input(format!(
                "cycle class must be 1, 2 or 3, got {i}"
            ))),
        }
    }
}

/// Why a clutter is, or is not, a Ci-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CiOutcome {
    /// The empty clutter is no cycle of any kind.
    Empty,
    /// Complete with support of size d+2.
    CompleteCycle,
    /// SMS(C) = ∅ and every proper nonempty subclutter of the class has an
    /// SMS.
    Cycle,
    /// SMS(C) is nonempty (and C is not the complete d+2 case): the listed
    /// MS witnesses it.
    HasSms(FaceSet),
    /// A proper nonempty subclutter of the class with empty SMS; `removed`
    /// describes how it was induced (deleted MSs for C2, deleted vertices for
    /// C3, absent for C1).
    SubclutterWithoutSms {
        circuits: Vec<FaceSet>,
        removed: Option<Vec<FaceSet>>,
    },
}

impl CiOutcome {
    pub fn is_cycle(&self) -> bool {
        matches!(self, CiOutcome::CompleteCycle | CiOutcome::Cycle)
    }
}

/// The Ci-cycle predicate with witness. A clutter is a Ci-cycle when it is
/// complete on a (d+2)-vertex support, or has no SMS while every proper
/// nonempty subclutter of the class has one. Subclutter properness compares
/// circuit sets.
pub fn ci_cycle_outcome(clutter: &Clutter, class: CycleClass) -> Result<CiOutcome> {
    if clutter.is_empty() {
        return Ok(CiOutcome::Empty);
    }
    if clutter.support().card() == clutter.dim() as u32 + 2 && clutter.is_complete_on_support() {
        return Ok(CiOutcome::CompleteCycle);
    }
    if let Some(&e) = simplicial_ms_set(clutter).first() {
        return Ok(CiOutcome::HasSms(e));
    }
    match class {
        CycleClass::C1 => {
            let m = clutter.len();
            if m > C1_CIRCUIT_CAP {
                return Err(Error::capacity(format!(
                    "C1-cycle enumeration over 2^{m} subclutters exceeds the cap of {C1_CIRCUIT_CAP} circuits"
                )));
            }
            for mask in 1u64..(1u64 << m) - 1 {
                let circuits: Vec<FaceSet> = clutter
                    .circuits()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                let sub = Clutter::from_sorted_unchecked(clutter.n(), clutter.dim(), circuits);
                if !has_sms(&sub) {
                    return Ok(CiOutcome::SubclutterWithoutSms {
                        circuits: sub.circuits().to_vec(),
                        removed: None,
                    });
                }
            }
            Ok(CiOutcome::Cycle)
        }
        CycleClass::C2 => {
            let ms = clutter.maximal_subcircuits();
            if ms.len() > C2_MS_CAP {
                return Err(Error::capacity(format!(
                    "C2-cycle enumeration over subsets of {} MSs exceeds the cap of {C2_MS_CAP}",
                    ms.len()
                )));
            }
            // Precompute which MSs each circuit uses; induced subclutters are
            // exactly the results of deleting MS subsets.
            let circuit_ms: Vec<u64> = clutter
                .circuits()
                .iter()
                .map(|c| {
                    let mut bits = 0u64;
                    for e in c.drop_one() {
                        bits |= 1 << ms.binary_search(&e).expect("MS of a circuit");
                    }
                    bits
                })
                .collect();
            for deleted in masks_by_weight(ms.len()) {
                if deleted == 0 {
                    continue;
                }
                let circuits: Vec<FaceSet> = clutter
                    .circuits()
                    .iter()
                    .zip(&circuit_ms)
                    .filter(|(_, &bits)| bits & deleted == 0)
                    .map(|(&c, _)| c)
                    .collect();
                if circuits.is_empty() || circuits.len() == clutter.len() {
                    continue;
                }
                let sub = Clutter::from_sorted_unchecked(clutter.n(), clutter.dim(), circuits);
                if !has_sms(&sub) {
                    let removed: Vec<FaceSet> = ms
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| deleted >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    return Ok(CiOutcome::SubclutterWithoutSms {
                        circuits: sub.circuits().to_vec(),
                        removed: Some(removed),
                    });
                }
            }
            Ok(CiOutcome::Cycle)
        }
        CycleClass::C3 => {
            let support = clutter.support();
            if support.card() > C3_SUPPORT_CAP {
                return Err(Error::capacity(format!(
                    "C3-cycle enumeration over subsets of {} vertices exceeds the cap of {C3_SUPPORT_CAP}",
                    support.card()
                )));
            }
            let verts = support.to_vec();
            for deleted in masks_by_weight(verts.len()) {
                if deleted == 0 {
                    continue;
                }
                let removed: Vec<u8> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| deleted >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let keep = removed.iter().fold(support, |acc, &v| acc.remove(v));
                let sub = clutter.induced_by_vertices(keep);
                if sub.is_empty() || sub.len() == clutter.len() {
                    continue;
                }
                if !has_sms(&sub) {
                    return Ok(CiOutcome::SubclutterWithoutSms {
                        circuits: sub.circuits().to_vec(),
                        removed: Some(removed.iter().map(|&v| FaceSet::singleton(v)).collect()),
                    });
                }
            }
            Ok(CiOutcome::Cycle)
        }
    }
}

pub fn is_ci_cycle(clutter: &Clutter, i: u8) -> Result<bool> {
    Ok(ci_cycle_outcome(clutter, CycleClass::from_index(i)?)?.is_cycle())
}

/// Masks over `bits` positions ordered by popcount, then numerically. Small
/// deletions come first, so witnesses read naturally.
fn masks_by_weight(bits: usize) -> impl Iterator<Item = u64> {
    let mut masks: Vec<u64> = (0..1u64 << bits).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks.into_iter()
}

/// Does some nonempty induced subclutter of the given kind (including the
/// clutter itself) have empty SMS? Equivalently: does the clutter contain an
/// induced non-complete Ci-cycle of that kind. Complete clutters always have
/// an SMS, and a minimal empty-SMS induced subclutter is a Ci-cycle.
pub fn has_induced_noncomplete_ci_cycle(clutter: &Clutter, class: CycleClass) -> Result<bool> {
    match class {
        CycleClass::C1 => Err(Error::input(
            "induced-cycle detection is defined for the MS and vertex classes",
        )),
        CycleClass::C2 => {
            let ms = clutter.maximal_subcircuits();
            if ms.len() > C2_MS_CAP {
                return Err(Error::capacity(format!(
                    "enumeration over subsets of {} MSs exceeds the cap of {C2_MS_CAP}",
                    ms.len()
                )));
            }
            let circuit_ms: Vec<u64> = clutter
                .circuits()
                .iter()
                .map(|c| {
                    let mut bits = 0u64;
                    for e in c.drop_one() {
                        bits |= 1 << ms.binary_search(&e).expect("MS of a circuit");
                    }
                    bits
                })
                .collect();
            for deleted in 0..1u64 << ms.len() {
                let circuits: Vec<FaceSet> = clutter
                    .circuits()
                    .iter()
                    .zip(&circuit_ms)
                    .filter(|(_, &bits)| bits & deleted == 0)
                    .map(|(&c, _)| c)
                    .collect();
                if circuits.is_empty() {
                    continue;
                }
                let sub = Clutter::from_sorted_unchecked(clutter.n(), clutter.dim(), circuits);
                if !has_sms(&sub) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        CycleClass::C3 => {
            let verts = clutter.support().to_vec();
            if verts.len() as u32 > C3_SUPPORT_CAP {
                return Err(Error::capacity(format!(
                    "enumeration over subsets of {} vertices exceeds the cap of {C3_SUPPORT_CAP}",
                    verts.len()
                )));
            }
            for kept in 0..1u64 << verts.len() {
                let keep = FaceSet::from_vertices(
                    verts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| kept >> i & 1 == 1)
                        .map(|(_, &v)| v),
                );
                let sub = clutter.induced_by_vertices(keep);
                if !sub.is_empty() && !has_sms(&sub) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Full cycle classification of one clutter, with witnesses for the false
/// Ci flags when SMS(C) is empty.
#[derive(Debug, Clone)]
pub struct CycleClassification {
    pub cf_cycle: bool,
    pub complete_with_support_d_plus_2: bool,
    pub c1: CiOutcome,
    pub c2: CiOutcome,
    pub c3: CiOutcome,
}

impl CycleClassification {
    pub fn flags(&self) -> (bool, bool, bool, bool) {
        (
            self.cf_cycle,
            self.c1.is_cycle(),
            self.c2.is_cycle(),
            self.c3.is_cycle(),
        )
    }
}

pub fn classify_cycles(clutter: &Clutter) -> Result<CycleClassification> {
    let c1 = ci_cycle_outcome(clutter, CycleClass::C1)?;
    let c2 = ci_cycle_outcome(clutter, CycleClass::C2)?;
    let c3 = ci_cycle_outcome(clutter, CycleClass::C3)?;
    let classification = CycleClassification {
        cf_cycle: is_cf_cycle(clutter),
        complete_with_support_d_plus_2: !clutter.is_empty()
            && clutter.support().card() == clutter.dim() as u32 + 2
            && clutter.is_complete_on_support(),
        c1,
        c2,
        c3,
    };
    // C1 => C2 => C3
    let (_, f1, f2, f3) = classification.flags();
    debug_assert!(!f1 || f2);
    debug_assert!(!f2 || f3);
    Ok(classification)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faceset::combinations;

    fn fs(vs: &[u8]) -> FaceSet {
        FaceSet::from_vertices(vs.iter().copied())
    }

    fn clutter(n: u8, d: u8, circuits: &[&[u8]]) -> Clutter {
        Clutter::new(n, d, circuits.iter().map(|c| fs(c)).collect()).unwrap()
    }

    fn octahedron() -> Clutter {
        clutter(
            6,
            2,
            &[
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 3, 4],
                &[1, 3, 4],
                &[0, 4, 5],
                &[1, 4, 5],
                &[0, 2, 5],
                &[1, 2, 5],
            ],
        )
    }

    fn tetrahedron_boundary() -> Clutter {
        Clutter::complete(4, 2)
    }

    fn pm_example() -> Clutter {
        clutter(5, 2, &[&[0, 3, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn cf_cycle_examples() {
        assert!(is_cf_cycle(&tetrahedron_boundary()));
        assert!(is_cf_cycle(&octahedron()));
        assert!(!is_cf_cycle(&pm_example())); // deg(14) = 1 is odd
        assert!(!is_cf_cycle(&Clutter::empty(4, 2)));
        // even degrees but two components
        let c = clutter(
            6,
            1,
            &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]],
        );
        assert!(!is_cf_cycle(&c));
    }

    #[test]
    fn cf_tree_examples() {
        assert!(is_cf_tree(&clutter(3, 2, &[&[0, 1, 2]])));
        assert!(!is_cf_tree(&octahedron()));
        assert!(is_cf_tree(&pm_example()));
        assert!(is_cf_tree(&Clutter::empty(5, 2)));
    }

    #[test]
    fn cf_tree_matches_brute_force_on_small_clutters() {
        let all: Vec<FaceSet> = combinations(5, 3).collect();
        for bits in 0u32..1 << 10 {
            let circuits: Vec<FaceSet> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            let c = Clutter::from_sorted_unchecked(5, 2, circuits);
            let m = c.len();
            let brute = (1u32..1 << m).all(|mask| {
                let sub: Vec<FaceSet> = c
                    .circuits()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &f)| f)
                    .collect();
                !is_cf_cycle(&Clutter::from_sorted_unchecked(5, 2, sub))
            });
            assert_eq!(is_cf_tree(&c), brute, "disagreement on {c:?}");
        }
    }

    #[test]
    fn boundary_examples() {
        let (boundary, comps) = boundary_decomposition(&pm_example()).unwrap();
        assert_eq!(boundary.len(), 7);
        assert_eq!(comps.len(), 1);
        assert!(is_cf_cycle(&comps[0]));

        let (boundary, comps) = boundary_decomposition(&tetrahedron_boundary()).unwrap();
        assert!(boundary.is_empty());
        assert!(comps.is_empty());

        let (boundary, _) = boundary_decomposition(&clutter(3, 2, &[&[0, 1, 2]])).unwrap();
        assert_eq!(boundary.len(), 3);

        assert!(boundary_decomposition(&clutter(3, 0, &[&[0]])).is_err());
    }

    #[test]
    fn ci_cycle_examples() {
        // complete on d+2 vertices: every class
        for i in 1..=3 {
            assert!(is_ci_cycle(&tetrahedron_boundary(), i).unwrap());
        }

        // octahedron: C1-cycle
        assert!(is_ci_cycle(&octahedron(), 1).unwrap());

        // all 3-subsets of [6] minus two disjoint triples: C3 yes, C2 no
        let missing = [fs(&[0, 1, 2]), fs(&[3, 4, 5])];
        let circuits: Vec<FaceSet> = combinations(6, 3)
            .filter(|c| !missing.contains(c))
            .collect();
        let ex = Clutter::new(6, 2, circuits).unwrap();
        assert!(is_ci_cycle(&ex, 3).unwrap());
        assert!(!is_ci_cycle(&ex, 2).unwrap());
        match ci_cycle_outcome(&ex, CycleClass::C2).unwrap() {
            CiOutcome::SubclutterWithoutSms { removed, circuits } => {
                // a single deleted MS leaves a subclutter without SMS; the
                // witness replays
                let removed = removed.unwrap();
                assert_eq!(removed.len(), 1);
                let sub = ex.remove(removed[0]);
                assert_eq!(sub.circuits(), circuits);
                assert!(!has_sms(&sub));
            }
            other => panic!("expected a subclutter witness, got {other:?}"),
        }
        // a second valid witness: SMS(C - {1,2}) = ∅
        assert!(!has_sms(&ex.remove(fs(&[1, 2]))));

        assert!(!is_ci_cycle(&Clutter::empty(4, 1), 1).unwrap());
        assert!(!is_ci_cycle(&pm_example(), 1).unwrap());
    }

    #[test]
    fn induced_cycle_detection_examples() {
        // octahedron ∪ {135,235,345,356} (0-based: the four triangles through
        // the edge {2,4}): removing MS {2,4} induces the octahedron
        let mut circuits = octahedron().circuits().to_vec();
        for extra in [&[0, 2, 4][..], &[1, 2, 4], &[2, 3, 4], &[2, 4, 5]] {
            circuits.push(fs(extra));
        }
        let c = Clutter::new(6, 2, circuits).unwrap();
        assert!(has_induced_noncomplete_ci_cycle(&c, CycleClass::C2).unwrap());

        // octahedron ∪ {345}: every nonempty vertex-induced subclutter has a
        // free MS
        let mut circuits = octahedron().circuits().to_vec();
        circuits.push(fs(&[2, 3, 4]));
        let c = Clutter::new(6, 2, circuits).unwrap();
        assert!(!has_induced_noncomplete_ci_cycle(&c, CycleClass::C3).unwrap());

        let single = clutter(3, 2, &[&[0, 1, 2]]);
        assert!(!has_induced_noncomplete_ci_cycle(&single, CycleClass::C2).unwrap());
        assert!(!has_induced_noncomplete_ci_cycle(&single, CycleClass::C3).unwrap());
    }

    #[test]
    fn d1_ci_cycles_are_graph_cycles() {
        // graph cycles C4, C5 and the triangle; and some non-cycles
        let c4 = clutter(4, 1, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let c5 = clutter(5, 1, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let k3 = clutter(3, 1, &[&[0, 1], &[0, 2], &[1, 2]]);
        for c in [&c4, &c5, &k3] {
            for i in 1..=3 {
                assert!(is_ci_cycle(c, i).unwrap(), "{c:?} class {i}");
            }
        }
        let path = clutter(3, 1, &[&[0, 1], &[1, 2]]);
        let k4 = Clutter::complete(4, 1);
        for c in [&path, &k4] {
            for i in 1..=3 {
                assert!(!is_ci_cycle(c, i).unwrap(), "{c:?} class {i}");
            }
        }
    }

    #[test]
    fn c1_capacity_cap_is_reported() {
        // three octahedra on disjoint vertex sets: 24 circuits, no SMS
        let mut circuits = Vec::new();
        for block in 0..3u8 {
            let offset = block * 6;
            for &t in octahedron().circuits() {
                circuits.push(FaceSet::from_vertices(t.iter().map(|v| v + offset)));
            }
        }
        let c = Clutter::new(18, 2, circuits).unwrap();
        assert!(!has_sms(&c));
        assert!(matches!(
            is_ci_cycle(&c, 1),
            Err(crate::error::Error::Capacity(_))
        ));
        assert!(is_ci_cycle(&c, 4).is_err());
    }

    #[test]
    fn classification_flags_obey_implications() {
        let class = classify_cycles(&octahedron()).unwrap();
        let (cf, c1, c2, c3) = class.flags();
        assert!(cf && c1 && c2 && c3);
        assert!(!class.complete_with_support_d_plus_2);

        let class = classify_cycles(&tetrahedron_boundary()).unwrap();
        assert!(class.complete_with_support_d_plus_2);
    }
}
