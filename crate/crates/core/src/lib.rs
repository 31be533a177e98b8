//! Uniform clutters and their cycle and chordality structure, the squarefree
//! monomial ideal predicates they correspond to, and GF(2) simplicial
//! homology.
//!
//! Everything is exact combinatorics on bit-packed vertex sets (ground sets
//! of up to 63 vertices). All values are immutable after construction and all
//! operations are pure functions, so they can be shared freely across
//! threads.

pub mod chordality;
pub mod clutter;
pub mod complex;
pub mod cycles;
pub mod error;
pub mod faceset;
pub mod gf2;
pub mod homology;
pub mod ideal;
pub mod labels;
pub mod wchordal;

pub use chordality::{
    chordality, free_ms_set, has_free_ms, has_sms, replay_deletion_sequence, simplicial_ms_set,
    simplicial_ms_set_prime, ChordalityCertificate, ChordalityMode,
};
pub use clutter::Clutter;
pub use complex::SimplicialComplex;
pub use cycles::{
    boundary_decomposition, ci_cycle_outcome, classify_cycles, has_induced_noncomplete_ci_cycle,
    is_cf_cycle, is_cf_tree, is_ci_cycle, top_boundary_matrix, CiOutcome, CycleClass,
    CycleClassification,
};
pub use error::{Error, Result};
pub use faceset::{binomial, combinations, FaceSet, MAX_VERTICES};
pub use gf2::GF2Matrix;
pub use homology::{
    boundary_matrix, canonical_facet_list, has_linear_resolution_z2, is_boundary_of_facets,
    is_cohen_macaulay_z2, is_shedding_vertex_of, is_vertex_decomposable, reduced_homology_ranks,
    ChainComplexZ2, HomologyRanks,
};
pub use ideal::{
    extend_order_to_complete, find_linear_quotients, is_linear_quotient_order, is_polymatroidal,
    is_squarefree_stable, is_squarefree_strongly_stable, maximal_independent_sets,
    minimal_vertex_covers, sms_from_vertex_cover_structure, vertex_cover_ideal, QuotientOrder,
    SquarefreeIdeal,
};
pub use labels::LabelMap;
pub use wchordal::{is_w_chordal, NonUniformClutter};
