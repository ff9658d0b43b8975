//! Finite re-enactment of the argument that a 1-generic cannot avoid the
//! danger set above any level when its complement has an element
//! enumerated from its own code.
//!
//! Given `σX` of length `t`, a level `l` and an operator `W`, pick the least
//! `p > l` outside `σX` that `W` enumerates from `j(σX)`, then add `p` by
//! witness removal. The result `τ` extends `σX ↾ l`, has the same code as
//! `σX`, and lies in the danger set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{BinaryString, FiniteNatSet};
use crate::enum_op::{evaluate, EnumOperator};
use crate::generic::coding::{danger_member, j_map};
use crate::generic::fixpoint::fixpoint_remove_witnesses;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Theorem3Certificate {
    pub l: usize,
    pub t: usize,
    pub p: usize,
    pub sigma0: BinaryString,
    pub tau: BinaryString,
    pub danger_witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DemoError {
    #[error("level {l} exceeds the string length {len}")]
    LevelTooLarge { l: usize, len: usize },
    /// No usable `p` at this length; the caller may retry with a longer string.
    #[error("no candidate p > {l} below t = {t} (stage set Z_t = {z_t})")]
    NoCandidate {
        t: usize,
        l: usize,
        z_t: FiniteNatSet,
    },
    #[error("constructed certificate failed re-verification: {}", .0.join("; "))]
    Rejected(Vec<String>),
}

/// `W^{j(σX)} \ σX`, the stage-`t` approximation of the complement subset.
pub fn stage_candidates(sigma_x: &BinaryString, op: &EnumOperator) -> FiniteNatSet {
    evaluate(op, &j_map(sigma_x).to_set()).difference(&sigma_x.to_set())
}

pub fn theorem3_demo(
    sigma_x: &BinaryString,
    l: usize,
    op: &EnumOperator,
) -> Result<Theorem3Certificate, DemoError> {
    let t = sigma_x.len();
    if l > t {
        return Err(DemoError::LevelTooLarge { l, len: t });
    }
    let z_t = stage_candidates(sigma_x, op);
    let code = j_map(sigma_x);
    let Some(p) = z_t.iter().find(|&p| p > l && p < t && !code.bit(p)) else {
        return Err(DemoError::NoCandidate { t, l, z_t });
    };

    let run = fixpoint_remove_witnesses(sigma_x, p)
        .map_err(|e| DemoError::Rejected(vec![e.to_string()]))?;
    let tau = run.sigma;
    let Some(danger_witness) = danger_member(&tau, op) else {
        return Err(DemoError::Rejected(vec![format!(
            "tau {tau} is not in the danger set"
        )]));
    };

    let cert = Theorem3Certificate {
        l,
        t,
        p,
        sigma0: sigma_x.clone(),
        tau,
        danger_witness,
    };
    let problems = cert.problems(op);
    if problems.is_empty() {
        Ok(cert)
    } else {
        Err(DemoError::Rejected(problems))
    }
}

impl Theorem3Certificate {
    /// Recomputes every field constraint; empty means the certificate holds.
    pub fn problems(&self, op: &EnumOperator) -> Vec<String> {
        let mut out = Vec::new();
        if self.sigma0.len() != self.t {
            out.push(format!("|sigma0| = {} but t = {}", self.sigma0.len(), self.t));
        }
        if self.tau.len() != self.t {
            out.push(format!("|tau| = {} but t = {}", self.tau.len(), self.t));
        }
        if self.l > self.t {
            out.push(format!("l = {} exceeds t = {}", self.l, self.t));
        }
        if self.p <= self.l {
            out.push(format!("p = {} is not above l = {}", self.p, self.l));
        }
        if !self.sigma0.restrict(self.l).is_prefix_of(&self.tau) {
            out.push("tau does not extend sigma0 restricted to l".into());
        }
        if self.tau.get(self.p) != Some(true) {
            out.push(format!("tau({}) is not 1", self.p));
        }
        if j_map(&self.tau) != j_map(&self.sigma0) {
            out.push("j(tau) differs from j(sigma0)".into());
        }
        match danger_member(&self.tau, op) {
            Some(n) if n == self.danger_witness => {}
            Some(n) => out.push(format!(
                "least danger witness is {n}, not {}",
                self.danger_witness
            )),
            None => out.push("tau is not in the danger set".into()),
        }
        out
    }

    pub fn verify(&self, op: &EnumOperator) -> bool {
        self.problems(op).is_empty()
    }
}
