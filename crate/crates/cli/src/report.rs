use serde::{Deserialize, Serialize};

use clutters::{Clutter, FaceSet, LabelMap};

pub const ENVELOPE_FORMAT_VERSION: u32 = 1;

/// The machine-readable result document. Deterministic: no wall-clock or
/// host-dependent content; timing goes to stderr.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub format_version: u32,
    /// Echo of the subcommand and arguments.
    pub command: Vec<String>,
    pub input: InputStamp,
    pub clutter: Option<ClutterDoc>,
    pub verdicts: Verdicts,
    pub witnesses: Witnesses,
    /// How to re-check the verdicts by hand.
    pub replay: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputStamp {
    pub path: String,
    pub sha256: String,
}

/// The parsed clutter in external labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClutterDoc {
    pub n: u8,
    pub d: u8,
    pub circuits: Vec<Vec<u32>>,
}

impl ClutterDoc {
    pub fn new(labels: &LabelMap, clutter: &Clutter) -> Self {
        ClutterDoc {
            n: clutter.n(),
            d: clutter.dim(),
            circuits: clutter
                .circuits()
                .iter()
                .map(|&c| labels.set_to_external(c).expect("labels cover the clutter"))
                .collect(),
        }
    }
}

/// Every verdict the analyze command can emit; predicate subcommands fill
/// only their own field. Capacity-skipped entries stay None with a note.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Verdicts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuit_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sms_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_ms_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strongly_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_on_support: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cf_cycle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cf_tree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1_cycle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2_cycle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c3_cycle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_resolution_z2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_polymatroidal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_strongly_stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_linear_quotients: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_polymatroidal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_strongly_stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_linear_quotients: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohen_macaulay_z2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_decomposable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_numbers: Option<Vec<usize>>,
    /// Index of the first Betti entry; -1 for the augmentation rank.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_offset: Option<i32>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Witnesses {
    /// SMS deletion sequence certifying chordality, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal_sequence: Option<Vec<Vec<u32>>>,
    /// A reachable nonempty subclutter with empty SMS, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stuck_subclutter: Option<Vec<Vec<u32>>>,
    /// Witness for a failed Ci-cycle test: the offending subclutter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_witness: Option<CiWitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shedding_sequence: Option<Vec<u32>>,
    /// A linear-quotients order as a generator list, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lq_order: Option<Vec<Vec<u32>>>,
    /// The boundary clutter and its CF-cycle components, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_components: Option<Vec<Vec<Vec<u32>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CiWitnessDoc {
    pub kind: String,
    /// For subclutter witnesses: the circuits, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<u32>>>,
    /// What was removed to induce it (MSs or vertices), external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<Vec<u32>>>,
    /// For the has-SMS case: the simplicial MS, external labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sms: Option<Vec<u32>>,
}

pub fn faces_to_external(labels: &LabelMap, faces: &[FaceSet]) -> Vec<Vec<u32>> {
    faces
        .iter()
        .map(|&f| labels.set_to_external(f).expect("labels cover the face"))
        .collect()
}

impl ReportEnvelope {
    pub fn new(command: Vec<String>, input: InputStamp) -> Self {
        ReportEnvelope {
            format_version: ENVELOPE_FORMAT_VERSION,
            command,
            input,
            clutter: None,
            verdicts: Verdicts::default(),
            witnesses: Witnesses::default(),
            replay: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serialization is infallible")
    }
}
