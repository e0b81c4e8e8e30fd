//! Integer tuples: totals, counts of unit parts, conjugate partitions and
//! (weak) majorization.
//!
//! An [`IntTuple`] keeps the entries in the order the caller supplied them,
//! together with a cached non-increasing view. Every order-insensitive
//! quantity (conjugates, majorization) is computed from the sorted view.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseTupleError {
    #[error("empty tuple")]
    Empty,
    #[error("invalid part `{0}`")]
    InvalidPart(String),
    #[error("zero part `{0}` is not allowed in a size tuple")]
    ZeroPart(String),
    #[error("tuple `{0}` is too long")]
    TooLong(String),
}

/// A finite sequence of non-negative integers.
#[derive(Clone, Default)]
pub struct IntTuple {
    parts: Vec<u32>,
    sorted: Vec<u32>,
}

impl IntTuple {
    pub fn new(parts: Vec<u32>) -> Self {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        IntTuple { parts, sorted }
    }

    pub fn empty() -> Self {
        IntTuple::default()
    }

    /// `(value^count)`.
    pub fn repeat(value: u32, count: usize) -> Self {
        IntTuple::new(vec![value; count])
    }

    /// The standard basis vector `e_index` of the given length.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut parts = vec![0; len];
        parts[index] = 1;
        IntTuple::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Non-increasing rearrangement of the parts.
    pub fn sorted(&self) -> &[u32] {
        &self.sorted
    }

    pub fn sorted_tuple(&self) -> IntTuple {
        IntTuple {
            parts: self.sorted.clone(),
            sorted: self.sorted.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.parts[i]
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    /// Number of parts equal to exactly 1.
    pub fn iota(&self) -> usize {
        self.parts.iter().filter(|&&x| x == 1).count()
    }

    /// The conjugate partition `(x*_1, ..., x*_max)`.
    pub fn conjugate(&self) -> IntTuple {
        let largest = self.sorted.first().copied().unwrap_or(0);
        IntTuple::new((1..=largest).map(|j| self.conjugate_at(j)).collect())
    }

    /// `x*_j`, the number of parts that are at least `j`. Zero beyond the
    /// largest part.
    pub fn conjugate_at(&self, j: u32) -> u32 {
        assert!(j >= 1, "conjugate index starts at 1");
        // sorted is non-increasing, so the parts >= j form a prefix
        self.sorted.partition_point(|&x| x >= j) as u32
    }

    /// `sum_{j=1}^{upto} x*_j`, which equals `sum_i min(x_i, upto)`.
    pub fn conjugate_prefix_sum(&self, upto: u32) -> u64 {
        self.parts.iter().map(|&x| u64::from(x.min(upto))).sum()
    }

    pub fn min_part(&self) -> Option<u32> {
        self.sorted.last().copied()
    }

    pub fn max_part(&self) -> Option<u32> {
        self.sorted.first().copied()
    }

    /// Entrywise `self >= other` in the caller's order. Lengths must agree.
    pub fn dominates(&self, other: &IntTuple) -> bool {
        self.len() == other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// Entrywise `self >= (value^len)`.
    pub fn all_at_least(&self, value: u32) -> bool {
        self.parts.iter().all(|&x| x >= value)
    }

    /// Entrywise difference; `None` if some entry would go negative or the
    /// lengths differ.
    pub fn checked_sub(&self, other: &IntTuple) -> Option<IntTuple> {
        if self.len() != other.len() {
            return None;
        }
        self.parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(IntTuple::new)
    }

    /// Entrywise sum. Lengths must agree.
    pub fn add(&self, other: &IntTuple) -> IntTuple {
        assert_eq!(self.len(), other.len(), "tuple lengths differ");
        IntTuple::new(self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect())
    }

    /// Indices that sort the tuple non-increasingly; ties keep input order.
    pub fn sorting_permutation(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.parts[b].cmp(&self.parts[a]));
        idx
    }

    /// Parse a size tuple: positive integers, with optional `a^b` shorthand.
    pub fn parse_sizes(text: &str) -> Result<IntTuple, ParseTupleError> {
        parse_tuple(text, false)
    }

    /// Parse a tuple that may contain zero parts.
    pub fn parse_with_zeros(text: &str) -> Result<IntTuple, ParseTupleError> {
        parse_tuple(text, true)
    }

    /// Compact rendering using the exponent shorthand, e.g. `3,2,1^5`.
    pub fn to_shorthand(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            if j - i > 1 {
                out.push(format!("{}^{}", v, j - i));
            } else {
                out.push(v.to_string());
            }
            i = j;
        }
        out.join(",")
    }
}

const MAX_PARTS: usize = 1 << 16;

fn parse_tuple(text: &str, allow_zero: bool) -> Result<IntTuple, ParseTupleError> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.trim().is_empty() {
        return Err(ParseTupleError::Empty);
    }
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (token, "1"),
        };
        let value: u32 = base
            .parse()
            .map_err(|_| ParseTupleError::InvalidPart(token.to_string()))?;
        let count: usize = exp
            .parse()
            .map_err(|_| ParseTupleError::InvalidPart(token.to_string()))?;
        if value == 0 && !allow_zero {
            return Err(ParseTupleError::ZeroPart(token.to_string()));
        }
        if count == 0 {
            return Err(ParseTupleError::InvalidPart(token.to_string()));
        }
        if parts.len() + count > MAX_PARTS {
            return Err(ParseTupleError::TooLong(text.to_string()));
        }
        parts.extend(std::iter::repeat_n(value, count));
    }
    Ok(IntTuple::new(parts))
}

impl FromStr for IntTuple {
    type Err = ParseTupleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntTuple::parse_sizes(s)
    }
}

impl From<Vec<u32>> for IntTuple {
    fn from(parts: Vec<u32>) -> Self {
        IntTuple::new(parts)
    }
}

impl From<&[u32]> for IntTuple {
    fn from(parts: &[u32]) -> Self {
        IntTuple::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for IntTuple {
    fn from(parts: [u32; N]) -> Self {
        IntTuple::new(parts.to_vec())
    }
}

impl PartialEq for IntTuple {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for IntTuple {}

impl std::hash::Hash for IntTuple {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for IntTuple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntTuple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Debug for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl Serialize for IntTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<u32>::deserialize(deserializer).map(IntTuple::new)
    }
}

pub fn total(x: &IntTuple) -> u64 {
    x.total()
}

pub fn iota(x: &IntTuple) -> usize {
    x.iota()
}

pub fn conjugate(x: &IntTuple) -> IntTuple {
    x.conjugate()
}

pub fn conjugate_at(x: &IntTuple, j: u32) -> u32 {
    x.conjugate_at(j)
}

/// `x ⪯_w y`: every prefix sum of sorted `x` is at most the matching prefix
/// sum of sorted `y`, the shorter tuple padded with zeros.
pub fn weakly_majorized(x: &IntTuple, y: &IntTuple) -> bool {
    let (xs, ys) = (x.sorted(), y.sorted());
    let len = xs.len().max(ys.len());
    let (mut sx, mut sy) = (0u64, 0u64);
    for i in 0..len {
        sx += u64::from(xs.get(i).copied().unwrap_or(0));
        sy += u64::from(ys.get(i).copied().unwrap_or(0));
        if sx > sy {
            return false;
        }
    }
    true
}

/// `x ⪯ y`: weak majorization with equal totals.
pub fn majorized(x: &IntTuple, y: &IntTuple) -> bool {
    x.total() == y.total() && weakly_majorized(x, y)
}

/// All partitions of `total` into at most `max_len` parts, each non-increasing,
/// in lexicographically increasing order.
pub fn partitions(total: u32, max_len: usize) -> Vec<IntTuple> {
    fn rec(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<IntTuple>) {
        if rest == 0 {
            out.push(IntTuple::new(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for part in 1..=cap.min(rest) {
            cur.push(part);
            rec(rest - part, part, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    rec(total, total, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `total` into exactly `len` parts.
pub fn partitions_exact(total: u32, len: usize) -> Vec<IntTuple> {
    partitions(total, len)
        .into_iter()
        .filter(|p| p.len() == len)
        .collect()
}
