//! Enumeration, sampling and verification reports.

pub mod canonical;
pub mod enumerate;
pub mod report;
pub mod sample;
pub mod verify;

pub use canonical::{canonical_form, canonical_key, isomorphism_class_representatives};
pub use enumerate::{
    enumerate_digraphs, extend_by_vertex, Dedup, EnumerationError, EnumerationSpec, Filter, IsoCover, Shard,
};
pub use report::{PartialReport, Totals, VerificationReport};
pub use sample::{sample_digraph, sample_digraphs, SampleError, SampleSpec};
pub use verify::{evaluate, verify, verify_orders, Coverage, Target, VerifyError, VerifyOptions};
