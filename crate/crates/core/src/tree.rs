//! Finite prefix-closed trees of binary strings.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BinaryString;

/// Largest depth the generators will expand; `complete` at this depth has
/// about two million nodes.
pub const MAX_GENERATED_DEPTH: usize = 20;

/// A finite tree: prefix-closed, contains the empty string, no node longer
/// than `depth`, and at least one node of length exactly `depth`.
///
/// Nodes without a depth-`depth` descendant (dead ends) are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixTree {
    depth: usize,
    nodes: BTreeSet<BinaryString>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TreeViolation {
    /// Nodes whose parent is missing from the tree.
    NotPrefixClosed { orphans: Vec<BinaryString> },
    /// Nodes longer than the declared depth.
    Overlong { nodes: Vec<BinaryString> },
    /// No node of length `depth`.
    EmptyClass { depth: usize },
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[BinaryString]| {
            v.iter()
                .map(|s| format!("{s:?}", s = s.to_string()))
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Self::NotPrefixClosed { orphans } => {
                write!(f, "not prefix-closed (orphans: {})", list(orphans))
            }
            Self::Overlong { nodes } => write!(f, "nodes longer than depth: {}", list(nodes)),
            Self::EmptyClass { depth } => write!(f, "no node of length {depth}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub struct TreeError {
    pub violations: Vec<TreeViolation>,
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid tree: ")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn validate_tree(
    depth: usize,
    nodes: impl IntoIterator<Item = BinaryString>,
) -> Result<PrefixTree, TreeError> {
    let nodes: BTreeSet<BinaryString> = nodes.into_iter().collect();
    let mut violations = Vec::new();

    // Parent presence for every node implies closure under all prefixes.
    let orphans: Vec<BinaryString> = nodes
        .iter()
        .filter(|s| !s.is_empty() && !nodes.contains(&s.restrict(s.len() - 1)))
        .cloned()
        .collect();
    if !orphans.is_empty() {
        violations.push(TreeViolation::NotPrefixClosed { orphans });
    }
    let overlong: Vec<BinaryString> = nodes.iter().filter(|s| s.len() > depth).cloned().collect();
    if !overlong.is_empty() {
        violations.push(TreeViolation::Overlong { nodes: overlong });
    }
    if !nodes.iter().any(|s| s.len() == depth) {
        violations.push(TreeViolation::EmptyClass { depth });
    }

    if violations.is_empty() {
        Ok(PrefixTree { depth, nodes })
    } else {
        Err(TreeError { violations })
    }
}

impl PrefixTree {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn contains(&self, s: &BinaryString) -> bool {
        self.nodes.contains(s)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &BinaryString> {
        self.nodes.iter()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Is every node of length below `depth` extendible to length `depth`?
    pub fn is_dead_end_free(&self) -> bool {
        self.nodes
            .iter()
            .filter(|s| s.len() < self.depth)
            .all(|s| self.contains(&s.extended(false)) || self.contains(&s.extended(true)))
    }

    /// The full binary tree of the given depth.
    pub fn complete(depth: usize) -> PrefixTree {
        let nodes = (0..=depth).flat_map(BinaryString::all_of_len).collect();
        PrefixTree { depth, nodes }
    }

    /// The prefix closure of `leaves`, with depth set by the longest leaf.
    pub fn closure_of<'a>(leaves: impl IntoIterator<Item = &'a BinaryString>) -> Result<PrefixTree, TreeError> {
        let mut nodes = BTreeSet::new();
        nodes.insert(BinaryString::empty());
        let mut depth = 0;
        for leaf in leaves {
            depth = depth.max(leaf.len());
            nodes.extend(leaf.proper_prefixes());
            nodes.insert(leaf.clone());
        }
        validate_tree(depth, nodes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Complete,
    SinglePath,
    Random,
}

/// Input form of a tree: explicit nodes, or a seeded generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeSpec {
    Explicit(ExplicitTree),
    Generated(GenSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitTree {
    pub depth: usize,
    pub nodes: Vec<BinaryString>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub gen: GenKind,
    pub depth: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_density")]
    pub density: f64,
}

fn default_density() -> f64 {
    0.5
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeSpecError {
    #[error("density {0} is outside (0, 1]")]
    BadDensity(f64),
    #[error("generator depth {0} exceeds the limit of {MAX_GENERATED_DEPTH}")]
    DepthTooLarge(usize),
    #[error(transparent)]
    Invalid(#[from] TreeError),
}

impl TreeSpec {
    pub fn build(&self) -> Result<PrefixTree, TreeSpecError> {
        match self {
            TreeSpec::Explicit(t) => Ok(validate_tree(t.depth, t.nodes.iter().cloned())?),
            TreeSpec::Generated(g) => g.build(),
        }
    }
}

impl GenSpec {
    pub fn build(&self) -> Result<PrefixTree, TreeSpecError> {
        if self.depth > MAX_GENERATED_DEPTH {
            return Err(TreeSpecError::DepthTooLarge(self.depth));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(TreeSpecError::BadDensity(self.density));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        match self.gen {
            GenKind::Complete => Ok(PrefixTree::complete(self.depth)),
            GenKind::SinglePath => {
                let path = BinaryString::from_bits((0..self.depth).map(|_| rng.gen()).collect());
                Ok(PrefixTree::closure_of([&path])?)
            }
            GenKind::Random => {
                let mut nodes = BTreeSet::new();
                nodes.insert(BinaryString::empty());
                for len in 1..=self.depth {
                    for s in BinaryString::all_of_len(len) {
                        if rng.gen_bool(self.density) {
                            insert_with_prefixes(&mut nodes, s);
                        }
                    }
                }
                Ok(validate_tree(self.depth, nodes)?)
            }
        }
    }
}

/// Inserts `s` and walks up its prefixes until one is already present.
fn insert_with_prefixes(nodes: &mut BTreeSet<BinaryString>, s: BinaryString) {
    let mut cur = s;
    while !nodes.contains(&cur) {
        let parent = cur.restrict(cur.len().saturating_sub(1));
        let at_root = cur.is_empty();
        nodes.insert(cur);
        if at_root {
            break;
        }
        cur = parent;
    }
}
