//! Exact computation of normalized symmetric-group characters on shapes
//! made of stacked rectangles, and of the colored-permutation polynomial
//! conjectured to give them.
//!
//! * [`combinatorics`]: partitions, permutations (composed left to right),
//!   and permutations with colored cycles.
//! * [`characters`]: Murnaghan–Nakayama characters, tableau counts, and
//!   normalized characters.
//! * [`polyalg`]: polynomials in `p_1..p_m, q_1..q_m` with rational
//!   coefficients, expansions at `x = ∞`, and the extraction formula for
//!   `F_k`.
//! * [`conjecture`]: shapes, `G_μ`, interpolation of `F_μ`, and the
//!   verification campaigns.

pub mod characters;
pub mod combinatorics;
pub mod conjecture;
pub mod polyalg;

pub use characters::{f_lambda, falling_factorial, mn_character, normalized_character};
pub use combinatorics::{ColoredPermutation, Partition, Permutation};
pub use conjecture::{RectangleUnionShape, VerificationReport};
pub use polyalg::MultiPoly;
