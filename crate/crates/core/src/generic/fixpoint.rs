//! Witness removal: put `p` into a string without changing its `j`-code.
//!
//! Stage 1 sets bit `p`. Every later stage sets bit `⟨b,a⟩` for each `b`
//! that changed in the stage before, which cancels the code bits that the
//! earlier change would otherwise switch on. Codes exceed their first
//! coordinate, so the least changed index strictly increases and the
//! iteration stops within `|σ0|` changing stages. Bits only go from 0 to 1.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{BinaryString, FiniteNatSet};
use crate::generic::coding::j_map;
use crate::pairing::{codes_with_first, decode_pair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixpointStage {
    pub i: usize,
    pub sigma: BinaryString,
    pub changed: FiniteNatSet,
}

/// Stages `1..=k`; stage `k` is the first with nothing changed.
pub type FixpointTrace = Vec<FixpointStage>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointRun {
    pub sigma: BinaryString,
    pub trace: FixpointTrace,
}

impl FixpointRun {
    /// Number of stages that changed at least one bit.
    pub fn changing_stages(&self) -> usize {
        self.trace.iter().filter(|s| !s.changed.is_empty()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointError {
    #[error("p = {p} is outside a string of length {len}")]
    OutOfRange { p: usize, len: usize },
    #[error("position {p} is already 1")]
    AlreadySet { p: usize },
    /// `p = ⟨n,m⟩` carries a 1 in `j(σ0)`; setting it would destroy that bit.
    #[error("j(sigma0) has a 1 at p = {p} = <{n},{m}>; setting p would clear it")]
    WouldClearCodeBit { p: usize, n: usize, m: usize },
}

/// Runs the stage rule without the `σ0(p) = 0` and `j(σ0)(p) = 0` checks.
pub fn iterate_witness_removal(
    sigma0: &BinaryString,
    p: usize,
) -> Result<FixpointRun, FixpointError> {
    let len = sigma0.len();
    if p >= len {
        return Err(FixpointError::OutOfRange { p, len });
    }

    let mut sigma = sigma0.clone();
    let mut changed = FiniteNatSet::new();
    if !sigma.bit(p) {
        sigma.set(p, true);
        changed.insert(p);
    }
    let mut trace = vec![FixpointStage {
        i: 1,
        sigma: sigma.clone(),
        changed: changed.clone(),
    }];

    while !changed.is_empty() {
        let mut next = FiniteNatSet::new();
        for b in changed.iter() {
            for code in codes_with_first(b, len) {
                if !sigma.bit(code) {
                    sigma.set(code, true);
                    next.insert(code);
                }
            }
        }
        changed = next;
        trace.push(FixpointStage {
            i: trace.len() + 1,
            sigma: sigma.clone(),
            changed: changed.clone(),
        });
    }

    Ok(FixpointRun { sigma, trace })
}

/// Returns `σ ⊇ σ0` with `σ(p) = 1` and `j(σ) = j(σ0)`.
///
/// Requires `p < |σ0|`, `σ0(p) = 0` and `j(σ0)(p) = 0`.
pub fn fixpoint_remove_witnesses(
    sigma0: &BinaryString,
    p: usize,
) -> Result<FixpointRun, FixpointError> {
    let len = sigma0.len();
    if p >= len {
        return Err(FixpointError::OutOfRange { p, len });
    }
    if sigma0.bit(p) {
        return Err(FixpointError::AlreadySet { p });
    }
    if j_map(sigma0).bit(p) {
        let (n, m) = decode_pair(p).expect("j is 0 at position 0");
        return Err(FixpointError::WouldClearCodeBit { p, n, m });
    }
    iterate_witness_removal(sigma0, p)
}

/// JSON report for one fixpoint run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixpointReport {
    pub sigma0: BinaryString,
    pub p: usize,
    pub sigma: BinaryString,
    pub j_preserved: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<FixpointTrace>,
}

impl FixpointReport {
    pub fn from_run(sigma0: &BinaryString, p: usize, run: FixpointRun, with_trace: bool) -> Self {
        Self {
            sigma0: sigma0.clone(),
            p,
            j_preserved: j_map(&run.sigma) == j_map(sigma0),
            sigma: run.sigma,
            trace: with_trace.then_some(run.trace),
        }
    }
}
