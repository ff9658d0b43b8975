//! The coding map `j`, recovery of `X` from its code, and the danger set.

use crate::bits::{BinaryString, FiniteNatSet};
use crate::enum_op::{evaluate, EnumOperator};
use crate::pairing::decode_pair;

/// `j(σ)`: bit `⟨n,m⟩` is 1 iff `σ(n) = 1` and `σ(⟨n,m⟩) = 0`. Same length
/// as `σ`; codes at or past `|σ|` are dropped, and position 0 (not a code)
/// is always 0.
///
/// Applied to `X ↾ t` this is the length-`t` approximation of
/// `Y = {⟨n,m⟩ : n ∈ X, ⟨n,m⟩ ∉ X}`.
pub fn j_map(sigma: &BinaryString) -> BinaryString {
    let bits = (0..sigma.len())
        .map(|q| match decode_pair(q) {
            Some((n, _)) => sigma.bit(n) && !sigma.bit(q),
            None => false,
        })
        .collect();
    BinaryString::from_bits(bits)
}

/// `{n : ⟨n,m⟩ < |y| and y(⟨n,m⟩) = 1 for some m}`.
pub fn recover_x(y: &BinaryString) -> FiniteNatSet {
    y.ones_positions()
        .filter_map(decode_pair)
        .map(|(n, _)| n)
        .collect()
}

/// Membership of `σ` in the danger set `{σ : ∃n. σ(n) = 1 and n ∈ W^{j(σ)}}`
/// for the finite operator `op`. Returns the least witness `n`.
pub fn danger_member(sigma: &BinaryString, op: &EnumOperator) -> Option<usize> {
    if op.is_empty() {
        return None;
    }
    evaluate(op, &j_map(sigma).to_set())
        .into_iter()
        .find(|&n| sigma.bit(n))
}
