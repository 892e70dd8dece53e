//! Pop-stack sorting and the pattern theory that characterizes it.
//!
//! A deterministic pop stack sorts by repeated passes, each reversing every
//! maximal decreasing block of its input. This crate provides:
//!
//! - the passes themselves, block decompositions, pass-by-pass traces, and
//!   sortability tests ([`sort`]);
//! - permutations, reduction, and classical pattern containment with
//!   occurrence search ([`perm`]);
//! - barred patterns and two-set avoidance, where occurrences of forbidden
//!   patterns are excused when they extend to a saving pattern
//!   ([`avoidance`]);
//! - construction, reduction, and exhaustive verification of finite
//!   (forbidden, saving) pairs characterizing k-pass sortability
//!   ([`characterize`]);
//! - lexicographic enumeration with an explicit budget ([`enumerate`]) and
//!   the pair-file and CSV formats used by the `popstack` binary
//!   ([`pairfile`]).
//!
//! Entry points for a first look: [`sort_trace`], [`two_contains`],
//! [`characterize::construct_pair`], and the `examples/` directory.

pub mod avoidance;
pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod pairfile;
pub mod perm;
pub mod sort;

pub use avoidance::{
    avoids_all, barred_avoids, two_avoids, two_contains, two_contains_any, Av2Cache, AvoidancePair,
    BarredPattern, TwoContainmentWitness,
};
pub use error::{Error, Result};
pub use perm::{
    contains, has_occurrence_containing, is_order_isomorphic, occurrences, occurrences_containing,
    subpermutation_at, Occurrence, Permutation,
};
pub use sort::{
    is_k_sortable, min_passes, pop_pass, pop_pass_k, sort_trace, sort_trace_bounded,
    unsortability_certificate, BlockDecomposition, SortTrace,
};
