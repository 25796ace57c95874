//! Irreducible characters of the symmetric group.
//!
//! `χ^λ(ν)` is computed by the Murnaghan–Nakayama rule: remove a border
//! strip of length `ν₁` from `λ` in every possible way, weight each by
//! `(-1)^(rows spanned - 1)`, and recurse on the rest of `ν`. Strips of the
//! largest remaining cycle length are removed first; once only 1-cycles
//! remain the value is `f^shape`, which the hook-length formula gives
//! directly.
//!
//! Border strips are located through the beta-set of the shape: with `ℓ`
//! parts, `β_i = λ_i + ℓ - i`. Removing a strip of length `r` moves one bead
//! from `b` to the free position `b - r`, and the strip's height equals the
//! number of beads strictly between the two positions.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::{partitions_of, Partition};

/// Largest size accepted by [`syt_count_bruteforce`].
pub const BRUTEFORCE_MAX_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("|lambda| = {lambda} but |nu| = {nu}")]
    SizeMismatch { lambda: usize, nu: usize },
    #[error("shape of size {size} is too large for brute force (limit {limit})")]
    SizeTooLarge { size: usize, limit: usize },
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: usize, n: usize },
}

/// `(n)_k = n (n-1) ... (n-k+1)`; equals 1 when `k = 0`.
pub fn falling_factorial(n: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length
/// formula.
pub fn f_lambda(lambda: &Partition) -> BigInt {
    hook_length_count(lambda.parts())
}

fn hook_length_count(parts: &[usize]) -> BigInt {
    let n: usize = parts.iter().sum();
    let mut column_heights = vec![0usize; parts.first().copied().unwrap_or(0)];
    for &p in parts {
        for h in &mut column_heights[..p] {
            *h += 1;
        }
    }
    let mut hooks = BigInt::one();
    for (row, &len) in parts.iter().enumerate() {
        for (col, &height) in column_heights[..len].iter().enumerate() {
            let arm = len - col - 1;
            let leg = height - row - 1;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(n) / hooks
}

/// Counts standard Young tableaux by placing `1, 2, ..., n` one cell at a
/// time, each into an addable corner of the shape filled so far.
pub fn syt_count_bruteforce(lambda: &Partition) -> Result<BigInt, CharacterError> {
    let size = lambda.size();
    if size > BRUTEFORCE_MAX_SIZE {
        return Err(CharacterError::SizeTooLarge {
            size,
            limit: BRUTEFORCE_MAX_SIZE,
        });
    }
    let target = lambda.parts();
    let mut filled = vec![0usize; target.len()];
    Ok(BigInt::from(place_next(target, &mut filled, size)))
}

fn place_next(target: &[usize], filled: &mut [usize], remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for row in 0..target.len() {
        let fits_row = filled[row] < target[row];
        let fits_column = row == 0 || filled[row - 1] > filled[row];
        if fits_row && fits_column {
            filled[row] += 1;
            total += place_next(target, filled, remaining - 1);
            filled[row] -= 1;
        }
    }
    total
}

type MemoKey = (Vec<usize>, Vec<usize>);

thread_local! {
    static MN_CACHE: RefCell<HashMap<MemoKey, BigInt>> = RefCell::new(HashMap::new());
}

/// Drops the calling thread's character memo table.
pub fn clear_character_cache() {
    MN_CACHE.with(|c| c.borrow_mut().clear());
}

/// `χ^λ(ν)` by the Murnaghan–Nakayama rule.
///
/// The memo table is per thread, so concurrent callers never contend.
pub fn mn_character(lambda: &Partition, nu: &Partition) -> Result<BigInt, CharacterError> {
    if lambda.size() != nu.size() {
        return Err(CharacterError::SizeMismatch {
            lambda: lambda.size(),
            nu: nu.size(),
        });
    }
    Ok(mn_recurse(lambda.parts(), nu.parts()))
}

fn mn_recurse(shape: &[usize], cycles: &[usize]) -> BigInt {
    // only fixed points left: the dimension of the remaining shape
    if cycles.iter().all(|&c| c == 1) {
        return hook_length_count(shape);
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let strip = cycles[0];
    let rest = &cycles[1..];
    let mut total = BigInt::zero();
    for (smaller, height) in remove_border_strips(shape, strip) {
        let value = mn_recurse(&smaller, rest);
        if height % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total.clone()));
    total
}

/// All shapes obtained by removing a border strip of length `r`, each with
/// the strip's height (rows spanned minus one).
pub(crate) fn remove_border_strips(shape: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = shape.len();
    // beta numbers, strictly decreasing
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

/// Order of the centralizer of a permutation of cycle type `nu`:
/// `∏ i^{m_i} m_i!`.
pub fn z_mu(nu: &Partition) -> BigInt {
    nu.multiplicities()
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &mult)| {
            acc * BigInt::from(i + 1).pow(mult as u32) * factorial(mult)
        })
}

/// One failed column-orthogonality entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityViolation {
    pub mu: Partition,
    pub nu: Partition,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub class_pairs: usize,
    pub violations: Vec<OrthogonalityViolation>,
    /// `Σ_λ (f^λ)²`.
    pub dimension_square_sum: BigInt,
    pub passed: bool,
}

/// Checks `Σ_λ χ^λ(μ) χ^λ(ν) = δ_{μν} z_μ` for every pair of classes and
/// `Σ_λ (f^λ)² = n!`. The table has `p(n)²` entries, so keep `n` small
/// (`n ≤ 8` runs in milliseconds).
pub fn orthogonality_check(n: usize) -> OrthogonalityReport {
    let shapes = partitions_of(n);
    let table: Vec<Vec<BigInt>> = shapes
        .iter()
        .map(|lambda| {
            shapes
                .iter()
                .map(|nu| mn_character(lambda, nu).expect("same size"))
                .collect()
        })
        .collect();
    let mut violations = Vec::new();
    for (a, mu) in shapes.iter().enumerate() {
        for (b, nu) in shapes.iter().enumerate() {
            let actual: BigInt = table.iter().map(|row| &row[a] * &row[b]).sum();
            let expected = if a == b { z_mu(mu) } else { BigInt::zero() };
            if actual != expected {
                violations.push(OrthogonalityViolation {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    expected,
                    actual,
                });
            }
        }
    }
    let dimension_square_sum: BigInt = shapes.iter().map(|l| f_lambda(l).pow(2)).sum();
    let passed = violations.is_empty() && dimension_square_sum == factorial(n);
    OrthogonalityReport {
        n,
        class_pairs: shapes.len() * shapes.len(),
        violations,
        dimension_square_sum,
        passed,
    }
}

/// `(n)_k χ^λ(μ, 1^{n-k}) / f^λ` as an exact rational, where `n = |λ|` and
/// `k = |μ|`.
pub fn normalized_character(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BigRational, CharacterError> {
    let n = lambda.size();
    let k = mu.size();
    if k > n {
        return Err(CharacterError::KExceedsN { k, n });
    }
    let nu = mu.pad_with_ones(n - k);
    let chi = mn_character(lambda, &nu)?;
    let numerator = falling_factorial(n as i64, k) * chi;
    Ok(BigRational::new(numerator, f_lambda(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{parse_partition, permutations};

    fn part(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 5), BigInt::zero());
        assert_eq!(falling_factorial(0, 1), BigInt::zero());
        assert_eq!(falling_factorial(7, 0), BigInt::one());
        assert_eq!(falling_factorial(3, 2), BigInt::from(6));
        assert_eq!(falling_factorial(-2, 2), BigInt::from(6));
    }

    #[test]
    fn dimensions() {
        assert_eq!(f_lambda(&part("2,2")), BigInt::from(2));
        assert_eq!(f_lambda(&part("2,1")), BigInt::from(2));
        assert_eq!(f_lambda(&part("6")), BigInt::one());
        assert_eq!(f_lambda(&Partition::empty()), BigInt::one());
        assert_eq!(syt_count_bruteforce(&part("2,2")).unwrap(), BigInt::from(2));
        assert_eq!(syt_count_bruteforce(&part("1,1,1")).unwrap(), BigInt::one());
        assert_eq!(syt_count_bruteforce(&part("3,2")).unwrap(), BigInt::from(5));
        assert!(matches!(
            syt_count_bruteforce(&Partition::ones(13)),
            Err(CharacterError::SizeTooLarge { size: 13, .. })
        ));
    }

    #[test]
    fn hook_length_matches_bruteforce() {
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    f_lambda(&lambda),
                    syt_count_bruteforce(&lambda).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(
            mn_character(&part("2,2"), &part("2,1,1")).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            mn_character(&part("2,2"), &part("1,1,1,1")).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(mn_character(&part("3"), &part("3")).unwrap(), BigInt::one());
        assert_eq!(
            mn_character(&Partition::empty(), &Partition::empty()).unwrap(),
            BigInt::one()
        );
        assert!(matches!(
            mn_character(&part("2"), &part("1")),
            Err(CharacterError::SizeMismatch { lambda: 2, nu: 1 })
        ));
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for nu in partitions_of(n) {
                assert_eq!(
                    mn_character(&part(&n.to_string()), &nu).unwrap(),
                    BigInt::one()
                );
                let sign = if (n - nu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&Partition::ones(n), &nu).unwrap(),
                    BigInt::from(sign)
                );
            }
        }
    }

    #[test]
    fn sign_character_agrees_with_cycle_parity() {
        for u in permutations(5) {
            let nu = u.cycle_type();
            let parity = (5 - u.num_cycles()) % 2;
            let expected = if parity == 0 { 1 } else { -1 };
            assert_eq!(
                mn_character(&Partition::ones(5), &nu).unwrap(),
                BigInt::from(expected)
            );
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    mn_character(&lambda, &Partition::ones(n)).unwrap(),
                    f_lambda(&lambda)
                );
            }
        }
    }

    /// (3,2,1) has exactly two 3-hooks, at cells (1,2) and (2,1), both
    /// spanning two rows; it has no 2-hooks.
    #[test]
    fn border_strip_enumeration() {
        let mut got = remove_border_strips(&[3, 2, 1], 3);
        got.sort();
        assert_eq!(got, vec![(vec![1, 1, 1], 1), (vec![3], 1)]);
        assert!(remove_border_strips(&[3, 2, 1], 2).is_empty());
        let mut ones = remove_border_strips(&[2, 2], 1);
        ones.sort();
        assert_eq!(ones, vec![(vec![2, 1], 0)]);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(z_mu(&part("2,1")), BigInt::from(2));
        assert_eq!(z_mu(&Partition::ones(5)), BigInt::from(120));
        assert_eq!(z_mu(&part("3")), BigInt::from(3));
        assert_eq!(z_mu(&part("2,2,1")), BigInt::from(8));
    }

    #[test]
    fn orthogonality() {
        for n in 1..=8 {
            let report = orthogonality_check(n);
            assert!(report.passed, "n = {n}: {:?}", report.violations);
        }
        assert_eq!(orthogonality_check(4).class_pairs, 25);
        assert_eq!(
            orthogonality_check(6).dimension_square_sum,
            BigInt::from(720)
        );
    }

    #[test]
    fn normalized_values() {
        let two = part("2");
        assert_eq!(
            normalized_character(&part("2,2"), &two).unwrap(),
            BigRational::zero()
        );
        for lambda in partitions_of(6) {
            assert_eq!(
                normalized_character(&lambda, &part("1")).unwrap(),
                BigRational::from_integer(BigInt::from(6))
            );
        }
        for k in 1..=5 {
            assert_eq!(
                normalized_character(&part("5"), &part(&k.to_string())).unwrap(),
                BigRational::from_integer(falling_factorial(5, k))
            );
        }
        assert!(matches!(
            normalized_character(&part("2"), &part("3")),
            Err(CharacterError::KExceedsN { k: 3, n: 2 })
        ));
    }

    #[test]
    fn normalized_identity_class_and_integrality() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                for k in 1..=n.min(4) {
                    assert_eq!(
                        normalized_character(&lambda, &Partition::ones(k)).unwrap(),
                        BigRational::from_integer(falling_factorial(n as i64, k))
                    );
                    for mu in partitions_of(k) {
                        let v = normalized_character(&lambda, &mu).unwrap();
                        assert!(v.is_integer(), "{lambda} {mu}: {v}");
                    }
                }
            }
        }
    }
}
