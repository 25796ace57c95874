//! Partitions, permutations, and colored permutations.

mod colored;
mod notation;
mod partition;
mod permutation;

use thiserror::Error;

pub use colored::{enumerate_colored, ColoredPermutation, ColoredSpace};
pub use notation::{parse_colored, parse_permutation};
pub use partition::{parse_partition, partitions_of, Partition};
pub use permutation::{canonical_permutation, permutations, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("empty token at position {position}")]
    EmptyToken { position: usize },
    #[error("part at position {position} is not a positive integer")]
    NonPositivePart { position: usize },
    #[error("parts are not weakly decreasing at position {position}")]
    NotWeaklyDecreasing { position: usize },
    #[error("cannot parse {token:?} as an integer")]
    BadToken { token: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("color {color} out of range{}", .m.map(|m| format!(" 1..={m}")).unwrap_or_default())]
    ColorOutOfRange { color: u32, m: Option<usize> },
    #[error("color is not constant on the cycle through {point}")]
    ColorNotConstantOnCycle { point: usize },
    #[error("bad cycle notation {text:?}: {reason}")]
    Notation { text: String, reason: String },
}
