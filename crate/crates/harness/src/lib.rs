//! Exhaustive enumeration of small clutters with deterministic sharding,
//! named theorem-verification jobs, and the counterexample hunts for the
//! open questions. Reports are plain data with a stable serialization:
//! repeated runs at any worker count are bit-identical.

pub mod canonical;
pub mod enumerate;
pub mod expectations;
pub mod fixtures;
pub mod hunt;
pub mod jobs;
pub mod report;

pub use canonical::canonical_form;
pub use enumerate::{enumerate_clutters, Dedup, EnumerationTask};
pub use hunt::{counterexample_search, HUNT_PROPERTIES};
pub use jobs::{verify, JobParams, DEFAULT_SHARDS, THEOREM_IDS};
pub use report::{clutter_from_record, clutter_to_record, Counterexample, VerificationReport};
