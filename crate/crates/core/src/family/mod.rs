//! Structured digraph classes: locally semicomplete digraphs, round
//! digraphs and decompositions, and the exceptional families.

pub mod decomposition;
pub mod exceptional;
pub mod generators;
pub mod local;
pub mod round;

pub use decomposition::{compose, round_decomposition, CompositionError, RoundDecomposition};
pub use exceptional::{as_pure_cycle, is_exceptional_db, is_exceptional_dl, FamilyKind, FamilyLabel};
pub use generators::{
    gen_bicomplete, gen_complete, gen_cycle, gen_round_local_tournament_random,
    gen_strong_semicomplete_random, gen_tournament_random, shuffle_labels,
};
pub use local::{
    is_local_tournament, is_locally_in_semicomplete, is_locally_out_semicomplete, is_lsd,
    is_semicomplete,
};
pub use round::{find_round_labeling, is_round_labeling};
