//! The pairing `⟨n, m⟩ = 2ⁿ(2m + 1)`.
//!
//! Every code exceeds its first coordinate, and 0 is the only natural that
//! is not a code. String positions only ever need host-sized codes; the
//! `*_wide` variants compute the same pairing without a size limit.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("pair ({n}, {m}) does not fit in the host integer range")]
pub struct PairOverflow {
    pub n: usize,
    pub m: usize,
}

/// A decoded pair together with its code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairCode {
    pub code: usize,
    pub n: usize,
    pub m: usize,
}

impl PairCode {
    pub fn new(n: usize, m: usize) -> Result<Self, PairOverflow> {
        encode_pair(n, m).map(|code| Self { code, n, m })
    }

    pub fn from_code(code: usize) -> Option<Self> {
        decode_pair(code).map(|(n, m)| Self { code, n, m })
    }
}

pub fn encode_pair(n: usize, m: usize) -> Result<usize, PairOverflow> {
    let overflow = PairOverflow { n, m };
    let odd = m
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(overflow)?;
    let shift = u32::try_from(n).map_err(|_| overflow)?;
    // checked_shl only rejects shift >= BITS; lost high bits need a separate check.
    if shift >= usize::BITS || odd.leading_zeros() < shift {
        return Err(overflow);
    }
    Ok(odd << shift)
}

/// Inverse of [`encode_pair`]; `None` for 0.
pub fn decode_pair(code: usize) -> Option<(usize, usize)> {
    if code == 0 {
        return None;
    }
    let n = code.trailing_zeros() as usize;
    let m = ((code >> n) - 1) / 2;
    Some((n, m))
}

pub fn encode_pair_wide(n: u64, m: &BigUint) -> BigUint {
    (m * 2u32 + 1u32) << n
}

pub fn decode_pair_wide(code: &BigUint) -> Option<(u64, BigUint)> {
    let n = code.trailing_zeros()?;
    let m = ((code >> n) - 1u32) / 2u32;
    Some((n, m))
}

/// All codes below `limit` whose first coordinate is `n`, ascending.
pub fn codes_with_first(n: usize, limit: usize) -> impl Iterator<Item = usize> {
    (0..)
        .map_while(move |m| encode_pair(n, m).ok())
        .take_while(move |&code| code < limit)
}
