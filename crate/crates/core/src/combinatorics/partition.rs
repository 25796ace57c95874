//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombinatoricsError;

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` without reordering them.
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(CombinatoricsError::NonPositivePart { position: pos });
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::NotWeaklyDecreasing { position: pos + 1 });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Sorts `parts` into weakly decreasing order and drops zeros.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `(self, 1^extra)`: appends `extra` parts equal to 1.
    pub fn pad_with_ones(&self, extra: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, extra));
        Partition { parts }
    }

    /// Multiplicity of each part size: entry `i` counts parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            mult[p - 1] += 1;
        }
        mult
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatoricsError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Parses comma-separated positive integers, e.g. `"4,2,1"`.
///
/// The empty string (after trimming) is the empty partition. Unsorted input
/// is rejected rather than sorted.
pub fn parse_partition(text: &str) -> Result<Partition, CombinatoricsError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for (position, token) in text.split(',').enumerate() {
        let token = token.trim();
        if token.is_empty() {
            return Err(CombinatoricsError::EmptyToken { position });
        }
        let value: i64 = token.parse().map_err(|_| CombinatoricsError::BadToken {
            token: token.to_string(),
        })?;
        if value <= 0 {
            return Err(CombinatoricsError::NonPositivePart { position });
        }
        parts.push(value as usize);
    }
    Partition::new(parts)
}

/// All partitions of `n` in reverse lexicographic order, starting with `(n)`
/// and ending with `(1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
