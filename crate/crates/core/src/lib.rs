//! Cycle structure of digraphs under degree conditions on nonadjacent
//! dominated and dominating pairs.
//!
//! * [`digraph`]: bit-packed digraphs with degree and reachability queries.
//! * [`conditions`]: dominated/dominating pairs and the degree conditions.
//! * [`family`]: local tournaments, round decompositions, exceptional families.
//! * [`cycles`]: brute-force cycle oracles and constructive cycle finders.
//! * [`harness`]: enumeration, sampling and verification reports.
//! * [`io`]: adjacency text, digraph6 and DOT.

pub mod conditions;
pub mod cycles;
pub mod digraph;
pub mod family;
pub mod harness;
pub mod io;
pub mod vertex_set;

pub use conditions::{
    conjecture1_condition_holds, special_pairs, theorem1_condition_holds, ConditionVerdict,
    PairKind, PairWitness,
};
pub use digraph::{Digraph, GraphError, VertexCycle, VertexPath};
pub use family::{FamilyKind, FamilyLabel, RoundDecomposition};
pub use vertex_set::{Vertex, VertexSet, MAX_ORDER};
