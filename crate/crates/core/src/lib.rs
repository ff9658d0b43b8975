//! Finite-stage simulations from the theory of relatively c.e. reals.
//!
//! - [`rightmost`]: the rightmost path through a finite tree together with
//!   an enumeration witness that the complement of the path is enumeration
//!   reducible to the path.
//! - [`generic`]: the pairing code `j` of a real, witness removal, the
//!   danger set of an enumeration operator and finite-extension forcing.
//!
//! Everything works on finite binary strings; infinite reals appear only
//! through their initial segments.

pub mod bits;
pub mod enum_op;
pub mod generic;
pub mod pairing;
pub mod rightmost;
pub mod tree;

pub use bits::{string_to_set, BinaryString, FiniteNatSet, ParseBitsError};
pub use enum_op::{
    evaluate, verify_e_witness, EnumAxiom, EnumOperator, FailureKind, WitnessFailure,
    WitnessReport,
};
pub use pairing::{
    decode_pair, decode_pair_wide, encode_pair, encode_pair_wide, PairCode, PairOverflow,
};
pub use rightmost::{
    rightmost_construct, rightmost_oracle, ConstructError, RightmostReport, RightmostRun,
    RightmostTrace, TraceStage, WitnessSet,
};
pub use tree::{validate_tree, GenKind, GenSpec, PrefixTree, TreeError, TreeSpec, TreeSpecError, TreeViolation};
