//! Finite-extension forcing against a finite list of requirements, and the
//! exhaustive check that no extension of a string enters a danger set.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BinaryString;
use crate::enum_op::EnumOperator;
use crate::generic::coding::danger_member;

/// Default cap on the number of candidate strings an exhaustive scan may
/// visit, expressed as the `2^(t - l)` bound.
pub const DEFAULT_SCAN_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanCap(pub u64);

impl Default for ScanCap {
    fn default() -> Self {
        ScanCap(DEFAULT_SCAN_CAP)
    }
}

impl ScanCap {
    /// Fails if `2^free_bits` exceeds the cap.
    pub fn admit(self, free_bits: usize) -> Result<(), ScanError> {
        let fits = u32::try_from(free_bits)
            .ok()
            .and_then(|b| 1u64.checked_shl(b))
            .is_some_and(|n| n <= self.0);
        if fits {
            Ok(())
        } else {
            Err(ScanError::BudgetExceeded {
                free_bits,
                cap: self.0,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("scanning 2^{free_bits} extensions exceeds the cap of {cap}")]
    BudgetExceeded { free_bits: usize, cap: u64 },
    #[error("need l <= |base| <= t, got l = {l}, |base| = {len}, t = {t}")]
    BadBounds { l: usize, len: usize, t: usize },
    #[error("requirement {id} has member {member:?} longer than the bound {bound}")]
    MemberTooLong {
        id: usize,
        member: String,
        bound: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Avoidance {
    Holds,
    Counterexample { tau: BinaryString, witness: usize },
}

/// Scans every `τ ⊒ base ↾ l` with `|τ| ≤ t` in shortlex order and returns
/// the first one in the danger set of `op`, if any.
pub fn avoidance_check(
    base: &BinaryString,
    l: usize,
    t: usize,
    op: &EnumOperator,
    cap: ScanCap,
) -> Result<Avoidance, ScanError> {
    if !(l <= base.len() && base.len() <= t) {
        return Err(ScanError::BadBounds {
            l,
            len: base.len(),
            t,
        });
    }
    cap.admit(t - l)?;
    if op.is_empty() {
        return Ok(Avoidance::Holds);
    }
    let stem = base.restrict(l);
    let found = stem.extensions_upto(t).find_map(|tau| {
        danger_member(&tau, op).map(|witness| Avoidance::Counterexample { tau, witness })
    });
    Ok(found.unwrap_or(Avoidance::Holds))
}

/// A desk-scale Σ₁ set of strings: listed explicitly, or the danger set of
/// an operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StringSet {
    Members(BTreeSet<BinaryString>),
    Danger(EnumOperator),
}

impl StringSet {
    pub fn contains(&self, s: &BinaryString) -> bool {
        match self {
            StringSet::Members(m) => m.contains(s),
            StringSet::Danger(op) => danger_member(s, op).is_some(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Requirement {
    pub id: usize,
    #[serde(flatten)]
    pub set: StringSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Decision {
    Met { via: BinaryString },
    AvoidedWithinBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogEntry {
    pub id: usize,
    #[serde(flatten)]
    pub decision: Decision,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForceRun {
    pub sigma: BinaryString,
    pub log: Vec<LogEntry>,
}

fn least_meeting_extension(
    sigma: &BinaryString,
    set: &StringSet,
    t: usize,
    cap: ScanCap,
) -> Result<Option<BinaryString>, ScanError> {
    match set {
        StringSet::Members(members) => Ok(members
            .iter()
            .filter(|m| m.len() <= t && sigma.is_prefix_of(m))
            .min_by(|a, b| a.shortlex_cmp(b))
            .cloned()),
        StringSet::Danger(op) => {
            cap.admit(t - sigma.len())?;
            Ok(sigma
                .extensions_upto(t)
                .find(|tau| danger_member(tau, op).is_some()))
        }
    }
}

/// Meets each requirement (in id order) by the shortest, then
/// lexicographically least, extension of length at most `t` that lies in
/// it, or records that none exists. The result is padded with zeros to
/// length `t`.
pub fn force_meet_or_avoid(
    requirements: &[Requirement],
    t: usize,
    cap: ScanCap,
) -> Result<ForceRun, ScanError> {
    for r in requirements {
        if let StringSet::Members(members) = &r.set {
            if let Some(long) = members.iter().find(|m| m.len() > t) {
                return Err(ScanError::MemberTooLong {
                    id: r.id,
                    member: long.to_string(),
                    bound: t,
                });
            }
        }
    }

    let mut ordered: Vec<&Requirement> = requirements.iter().collect();
    ordered.sort_by_key(|r| r.id);

    let mut sigma = BinaryString::empty();
    let mut log = Vec::with_capacity(ordered.len());
    for r in ordered {
        let decision = match least_meeting_extension(&sigma, &r.set, t, cap)? {
            Some(tau) => {
                sigma = tau.clone();
                Decision::Met { via: tau }
            }
            None => Decision::AvoidedWithinBound,
        };
        log.push(LogEntry { id: r.id, decision });
    }

    Ok(ForceRun {
        sigma: sigma.padded(t),
        log,
    })
}
