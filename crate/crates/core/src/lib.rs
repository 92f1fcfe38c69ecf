//! Verification workbench for matching extendability and factor-criticality
//! of 1-planar drawings.
//!
//! The crate decides n-extendability and k-factor-criticality of simple
//! graphs, models 1-planar drawings and their associated plane graphs,
//! constructs optimal 1-planar drawings over 3-connected quadrangulations,
//! hunts for barrier cycles and non-extendable matchings, and audits the
//! exact rational charge bookkeeping that rules out 5-extendability.
//!
//! Everything is deterministic: sweeps run in lexicographic order, reported
//! witnesses are always the lexicographically first failure, and embeddings
//! of 3-connected graphs are canonical up to reflection.

pub mod builder;
pub mod discharge;
pub mod drawing;
pub mod embed;
pub mod format;
pub mod graph;
pub mod matching;

pub use builder::{
    barrier_cycle_search, classify_3matching, generate_quadrangulation,
    optimal_from_quadrangulation, q_of, three_matching_witness, BarrierCycle, BuilderError,
    QuadFamily, Quadrangulation, ThreeMatchingClass,
};
pub use discharge::{
    apply_rules, claims_audit, initial_charge, negative_report, non5ext_certificate,
    ChargeAssignment, DischargeError, Non5ExtCertificate,
};
pub use drawing::{
    alternation_check, build_associated, face_profile, lemma_2_2_scan, validate_drawing,
    AssociatedPlaneGraph, DrawingError, OnePlanarDrawing, ValidityReport,
};
pub use format::{parse_drawing, serialize_drawing, ParseError};
pub use graph::{
    components_with_parity, induced_neighborhood, vertex_connectivity, Graph, GraphError,
    Matching, VertexSet,
};
pub use matching::{
    count_perfect_matchings, criticality_upper_bound, dean_certificate, enumerate_n_matchings,
    has_perfect_matching, is_k_factor_critical, is_n_extendable, maximum_matching,
    CriticalityVerdict, DeanCertificate, ExtendabilityVerdict, MatchingError,
};
