//! Enumeration operators given by finitely many axioms `(n, E)`.
//!
//! An operator enumerates `n` from an oracle `B` when some axiom `(n, E)`
//! has `E ⊆ B`. A finite axiom list stands in for a stage of a c.e. set of
//! axioms, which keeps evaluation decidable.

use serde::{Deserialize, Deserializer, Serialize};

use crate::bits::{BinaryString, FiniteNatSet};

/// A single axiom `(target, condition)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, FiniteNatSet)", into = "(usize, FiniteNatSet)")]
pub struct EnumAxiom {
    pub target: usize,
    pub condition: FiniteNatSet,
}

impl EnumAxiom {
    pub fn new(target: usize, condition: impl Into<FiniteNatSet>) -> Self {
        Self {
            target,
            condition: condition.into(),
        }
    }

    pub fn fires(&self, oracle: &FiniteNatSet) -> bool {
        self.condition.is_subset(oracle)
    }
}

impl From<(usize, FiniteNatSet)> for EnumAxiom {
    fn from((target, condition): (usize, FiniteNatSet)) -> Self {
        Self { target, condition }
    }
}

impl From<EnumAxiom> for (usize, FiniteNatSet) {
    fn from(a: EnumAxiom) -> Self {
        (a.target, a.condition)
    }
}

/// A finite enumeration operator. Repeated axioms are dropped on insertion;
/// the first occurrence keeps its position.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumOperator {
    axioms: Vec<EnumAxiom>,
}

impl EnumOperator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_axioms(axioms: impl IntoIterator<Item = EnumAxiom>) -> Self {
        let mut op = Self::new();
        for a in axioms {
            op.add(a);
        }
        op
    }

    /// Adds an axiom; returns false if it was already present.
    pub fn add(&mut self, axiom: EnumAxiom) -> bool {
        if self.axioms.contains(&axiom) {
            return false;
        }
        self.axioms.push(axiom);
        true
    }

    pub fn axioms(&self) -> &[EnumAxiom] {
        &self.axioms
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    /// Does some axiom for `n` fire on `oracle`?
    pub fn enumerates(&self, n: usize, oracle: &FiniteNatSet) -> bool {
        self.axioms
            .iter()
            .any(|a| a.target == n && a.fires(oracle))
    }

    pub fn evaluate(&self, oracle: &FiniteNatSet) -> FiniteNatSet {
        evaluate(self, oracle)
    }
}

impl<'de> Deserialize<'de> for EnumOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            axioms: Vec<EnumAxiom>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(Self::from_axioms(raw.axioms))
    }
}

/// `{n : some (n, E) in op with E ⊆ oracle}`.
pub fn evaluate(op: &EnumOperator, oracle: &FiniteNatSet) -> FiniteNatSet {
    op.axioms
        .iter()
        .filter(|a| a.fires(oracle))
        .map(|a| a.target)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// `X(m) = 0` but no axiom for `m` fires on `X`.
    MissingAxiom,
    /// `X(m) = 1` yet an axiom for `m` fires on `X`.
    FalsePositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFailure {
    pub m: usize,
    pub kind: FailureKind,
}

/// Outcome of [`verify_e_witness`]. Only positions below `|X|` are checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub holds: bool,
    pub failures: Vec<WitnessFailure>,
}

/// Checks, for every `m < |X|`, that `X(m) = 0` exactly when some axiom
/// `(m, E)` of `c` has `E ⊆ X`.
pub fn verify_e_witness(c: &EnumOperator, x: &BinaryString) -> WitnessReport {
    let oracle = x.to_set();
    let enumerated = evaluate(c, &oracle);
    let failures: Vec<WitnessFailure> = (0..x.len())
        .filter_map(|m| {
            let kind = match (x.bit(m), enumerated.contains(m)) {
                (false, false) => FailureKind::MissingAxiom,
                (true, true) => FailureKind::FalsePositive,
                _ => return None,
            };
            Some(WitnessFailure { m, kind })
        })
        .collect();
    WitnessReport {
        holds: failures.is_empty(),
        failures,
    }
}
