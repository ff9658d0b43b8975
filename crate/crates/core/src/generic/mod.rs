//! Coding a real by the pairing, the danger set, witness removal and
//! finite-extension forcing.

pub mod coding;
pub mod demo;
pub mod fixpoint;
pub mod forcing;

pub use coding::{danger_member, j_map, recover_x};
pub use demo::{stage_candidates, theorem3_demo, DemoError, Theorem3Certificate};
pub use fixpoint::{
    fixpoint_remove_witnesses, iterate_witness_removal, FixpointError, FixpointReport,
    FixpointRun, FixpointStage, FixpointTrace,
};
pub use forcing::{
    avoidance_check, force_meet_or_avoid, Avoidance, Decision, ForceRun, LogEntry, Requirement,
    ScanCap, ScanError, StringSet, DEFAULT_SCAN_CAP,
};
