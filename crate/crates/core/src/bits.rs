//! Finite binary strings and finite sets of naturals.
//!
//! A [`BinaryString`] is an initial segment of a real: position 0 is the
//! leftmost bit. Its text form is ASCII `0`/`1` with no separators, which is
//! also how it serializes. A [`FiniteNatSet`] serializes as a sorted JSON
//! array.

use std::cmp::Ordering;
use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid character {found:?} at offset {offset} in binary string")]
pub struct ParseBitsError {
    pub offset: usize,
    pub found: char,
}

/// A finite binary string.
///
/// `Ord` is lexicographic with `0 < 1`, and a proper prefix sorts before
/// its extensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString {
    bits: Vec<bool>,
}

impl BinaryString {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn ones(len: usize) -> Self {
        Self {
            bits: vec![true; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The string of length `len` whose bit `i` is bit `len - 1 - i` of
    /// `value`, so that numeric order on `value` matches lexicographic order.
    pub fn from_index(value: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        let bits = (0..len).map(|i| (value >> (len - 1 - i)) & 1 == 1).collect();
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Bit at `i`, or `None` past the end.
    pub fn get(&self, i: usize) -> Option<bool> {
        self.bits.get(i).copied()
    }

    /// Bit at `i`, reading positions past the end as 0.
    pub fn bit(&self, i: usize) -> bool {
        self.get(i).unwrap_or(false)
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn push(&mut self, value: bool) {
        self.bits.push(value);
    }

    /// `self` followed by one more bit.
    pub fn extended(&self, value: bool) -> Self {
        let mut out = self.clone();
        out.push(value);
        out
    }

    /// The initial segment of length `len` (the whole string if shorter).
    pub fn restrict(&self, len: usize) -> Self {
        Self {
            bits: self.bits[..len.min(self.len())].to_vec(),
        }
    }

    /// `self ⊑ other`.
    pub fn is_prefix_of(&self, other: &BinaryString) -> bool {
        self.len() <= other.len() && other.bits[..self.len()] == self.bits[..]
    }

    /// Every proper prefix, shortest first, starting with the empty string.
    pub fn proper_prefixes(&self) -> impl Iterator<Item = BinaryString> + '_ {
        (0..self.len()).map(move |l| self.restrict(l))
    }

    /// Pads with zeros up to `len`; longer strings are returned unchanged.
    pub fn padded(&self, len: usize) -> Self {
        let mut out = self.clone();
        if out.len() < len {
            out.bits.resize(len, false);
        }
        out
    }

    /// Positions holding a 1, i.e. the string read as a finite set.
    pub fn to_set(&self) -> FiniteNatSet {
        self.ones_positions().collect()
    }

    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    /// Orders first by length, then lexicographically.
    pub fn shortlex_cmp(&self, other: &BinaryString) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }

    /// Every string of length exactly `len`, in lexicographic order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = BinaryString> {
        assert!(len < 64, "string length {len} too large to enumerate");
        (0..1u64 << len).map(move |v| BinaryString::from_index(v, len))
    }

    /// Every extension of `self` of length at most `max_len`, shortest
    /// first and lexicographically within a length. `self` is included.
    pub fn extensions_upto(&self, max_len: usize) -> impl Iterator<Item = BinaryString> + '_ {
        (self.len()..=max_len).flat_map(move |len| {
            BinaryString::all_of_len(len - self.len()).map(move |tail| {
                let mut s = self.clone();
                s.bits.extend_from_slice(&tail.bits);
                s
            })
        })
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for BinaryString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(offset, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(ParseBitsError { offset, found }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_bits)
    }
}

impl Serialize for BinaryString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set of naturals, always kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteNatSet(BTreeSet<usize>);

impl FiniteNatSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, n: usize) -> bool {
        self.0.insert(n)
    }

    pub fn remove(&mut self, n: usize) -> bool {
        self.0.remove(&n)
    }

    pub fn contains(&self, n: usize) -> bool {
        self.0.contains(&n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &FiniteNatSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn least(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn greatest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn difference(&self, other: &FiniteNatSet) -> FiniteNatSet {
        self.0.difference(&other.0).copied().collect()
    }
}

impl FromIterator<usize> for FiniteNatSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for FiniteNatSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl IntoIterator for FiniteNatSet {
    type Item = usize;
    type IntoIter = btree_set::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for FiniteNatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

/// The set-view of a string: `{n < |σ| : σ(n) = 1}`.
pub fn string_to_set(sigma: &BinaryString) -> FiniteNatSet {
    sigma.to_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BinaryString {
        s.parse().unwrap()
    }

    #[test]
    fn set_view_examples() {
        assert_eq!(string_to_set(&bs("1010")), FiniteNatSet::from([0, 2]));
        assert_eq!(string_to_set(&bs("0000")), FiniteNatSet::new());
        assert_eq!(string_to_set(&bs("")), FiniteNatSet::new());
    }

    #[test]
    fn text_form() {
        assert_eq!(bs("0110").to_string(), "0110");
        assert_eq!(bs("").to_string(), "");
        let err = "01x".parse::<BinaryString>().unwrap_err();
        assert_eq!(err, ParseBitsError { offset: 2, found: 'x' });
    }

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&bs("101")).unwrap(), r#""101""#);
        assert_eq!(
            serde_json::to_string(&FiniteNatSet::from([3, 1, 2, 1])).unwrap(),
            "[1,2,3]"
        );
        assert!(serde_json::from_str::<BinaryString>(r#""012""#).is_err());
    }

    #[test]
    fn prefix_relation() {
        assert!(bs("").is_prefix_of(&bs("01")));
        assert!(bs("01").is_prefix_of(&bs("011")));
        assert!(!bs("01").is_prefix_of(&bs("00")));
        assert!(!bs("011").is_prefix_of(&bs("01")));
    }

    #[test]
    fn ordering_puts_one_above_zero() {
        assert!(bs("10") > bs("01"));
        assert!(bs("0") < bs("01"));
        assert_eq!(bs("1").shortlex_cmp(&bs("00")), Ordering::Less);
    }

    #[test]
    fn extension_enumeration_is_shortlex() {
        let exts: Vec<String> = bs("1").extensions_upto(3).map(|s| s.to_string()).collect();
        assert_eq!(exts, ["1", "10", "11", "100", "101", "110", "111"]);
        assert_eq!(bs("11").extensions_upto(1).count(), 0);
    }

    proptest! {
        #[test]
        fn set_view_is_monotone(pairs in proptest::collection::vec((any::<bool>(), any::<bool>()), 0..32)) {
            // Build σ ≤ τ bitwise.
            let lo = BinaryString::from_bits(pairs.iter().map(|&(a, b)| a && b).collect());
            let hi = BinaryString::from_bits(pairs.iter().map(|&(a, _)| a).collect());
            prop_assert!(string_to_set(&lo).is_subset(&string_to_set(&hi)));
        }

        #[test]
        fn text_roundtrip(bits in proptest::collection::vec(any::<bool>(), 0..64)) {
            let s = BinaryString::from_bits(bits);
            prop_assert_eq!(s.to_string().parse::<BinaryString>().unwrap(), s);
        }
    }
}
