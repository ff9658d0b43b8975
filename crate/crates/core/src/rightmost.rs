//! Rightmost path through a finite tree, with an enumeration witness for
//! the complement of the path.
//!
//! Starting from the empty string, each stage either extends the current
//! string by 1, or backtracks: it finds the greatest `l` such that
//! position `l` can move strictly left (`l = |X_s|`, or `X_s(l) = 1`) and
//! `(X_s ↾ l)⌢0` is in the tree. A backtrack sets `X_{s+1} = (X_s ↾ l)⌢0`
//! and appends the axiom `(l, {n < l : X_s(n) = 1})` to the witness set.
//! The search for `l` counts as a single stage. The walk halts once the
//! current string reaches the tree depth.
//!
//! The witness set read as an enumeration operator enumerates exactly the
//! zero positions of the final path from the path itself.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{BinaryString, FiniteNatSet};
use crate::enum_op::{verify_e_witness, EnumAxiom, EnumOperator};
use crate::tree::PrefixTree;

/// Append-only list of witness axioms `(l, E)` in stage order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessSet {
    entries: Vec<EnumAxiom>,
}

impl WitnessSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn append(&mut self, l: usize, e: FiniteNatSet) {
        self.entries.push(EnumAxiom::new(l, e));
    }

    pub fn entries(&self) -> &[EnumAxiom] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_operator(&self) -> EnumOperator {
        EnumOperator::from_axioms(self.entries.iter().cloned())
    }

    /// The operator with entry `index` left out.
    pub fn operator_without(&self, index: usize) -> EnumOperator {
        EnumOperator::from_axioms(
            self.entries
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != index)
                .map(|(_, a)| a.clone()),
        )
    }
}

impl FromIterator<EnumAxiom> for WitnessSet {
    fn from_iter<I: IntoIterator<Item = EnumAxiom>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStage {
    pub s: usize,
    #[serde(rename = "X")]
    pub x: BinaryString,
    /// The witness axiom added at this stage, present exactly on backtracks.
    pub appended: Option<EnumAxiom>,
}

pub type RightmostTrace = Vec<TraceStage>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightmostRun {
    pub x: BinaryString,
    pub witness: WitnessSet,
    pub trace: RightmostTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("no backtrack target from {:?} at stage {stage}", current.to_string())]
    Stuck {
        stage: usize,
        current: BinaryString,
        trace: RightmostTrace,
    },
}

/// The greatest `l` at which `x` can move strictly left inside `tree`.
fn backtrack_target(tree: &PrefixTree, x: &BinaryString) -> Option<usize> {
    (0..=x.len())
        .rev()
        .filter(|&l| l == x.len() || x.bit(l))
        .find(|&l| tree.contains(&x.restrict(l).extended(false)))
}

pub fn rightmost_construct(tree: &PrefixTree) -> Result<RightmostRun, ConstructError> {
    let mut x = BinaryString::empty();
    let mut witness = WitnessSet::new();
    let mut trace = vec![TraceStage {
        s: 0,
        x: x.clone(),
        appended: None,
    }];

    while x.len() < tree.depth() {
        let stage = trace.len();
        let up = x.extended(true);
        let appended = if tree.contains(&up) {
            x = up;
            None
        } else {
            let Some(l) = backtrack_target(tree, &x) else {
                return Err(ConstructError::Stuck {
                    stage,
                    current: x,
                    trace,
                });
            };
            let e: FiniteNatSet = x.restrict(l).ones_positions().collect();
            witness.append(l, e.clone());
            x = x.restrict(l).extended(false);
            Some(EnumAxiom::new(l, e))
        };
        trace.push(TraceStage {
            s: stage,
            x: x.clone(),
            appended,
        });
    }

    Ok(RightmostRun { x, witness, trace })
}

/// Lexicographically greatest depth-length string all of whose prefixes
/// are in the tree, found by scanning every string of that length from
/// the top down.
pub fn rightmost_oracle(tree: &PrefixTree) -> BinaryString {
    let depth = tree.depth();
    BinaryString::all_of_len(depth)
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .find(|s| tree.contains(s) && s.proper_prefixes().all(|p| tree.contains(&p)))
        .expect("validated trees have a node at full depth")
}

/// JSON report for one run of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RightmostReport {
    #[serde(rename = "X")]
    pub x: BinaryString,
    #[serde(rename = "C")]
    pub c: WitnessSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<RightmostTrace>,
    pub oracle_agrees: bool,
    pub witness_holds: bool,
}

impl RightmostReport {
    pub fn from_run(tree: &PrefixTree, run: RightmostRun, with_trace: bool) -> Self {
        let oracle_agrees = rightmost_oracle(tree) == run.x;
        let witness_holds = verify_e_witness(&run.witness.to_operator(), &run.x).holds;
        Self {
            x: run.x,
            c: run.witness,
            trace: with_trace.then_some(run.trace),
            oracle_agrees,
            witness_holds,
        }
    }
}
