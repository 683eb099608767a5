//! Cycle oracles and the constructive finders for 3-cycles and
//! `(n-1)`-cycles.

pub mod bypass;
pub mod certificate;
pub mod insertion;
pub mod long_cycle;
pub mod oracle;
pub mod triangle;
pub mod two_way;

pub use bypass::{find_bypass, minimum_gap_bypass, Bypass};
pub use certificate::{CycleCertificate, FinderError, Outcome, PreconditionError, ProofMode};
pub use insertion::{insert_path, multi_insert, Host, InsertionError};
pub use long_cycle::{
    classify_external_vertex, find_n_minus_1_cycle, lemma8_structure_check, ExternalVertexClass,
    Lemma8Error, Lemma8Outcome,
};
pub use oracle::{
    cycle_spectrum, cycles_of_length, hamiltonian_cycle, has_cycle_of_length,
    has_cycle_of_length_dp, is_pancyclic, longest_nonhamiltonian_cycle,
};
pub use triangle::{find_3_cycle, find_triangle};
pub use two_way::{degree_sum_bound_check, longest_two_way_path, DegreeSumBound, TwoWayPath};
