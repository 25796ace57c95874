//! `F_k` for the single-cycle class as a coefficient extraction:
//!
//! ```text
//! F_k(p; q) = -(1/k) [x^{-1}]  (x)_k ∏_i (x - (q_i + p_i + ... + p_m))_k
//!                              ---------------------------------------
//!                                ∏_i (x - (q_i + p_{i+1} + ... + p_m))_k
//! ```
//!
//! expanded in descending powers of `x`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{extract_xinv, linear_falling_factorial, series_divide, MultiPoly, PolyError, XPoly};

/// `p_from + p_{from+1} + ... + p_m` (zero when `from > m`).
fn p_tail(m: usize, from: usize) -> MultiPoly {
    (from..=m).fold(MultiPoly::zero(m), |acc, j| &acc + &MultiPoly::p(m, j))
}

/// Builds the numerator and denominator of the rational function in `x`.
pub fn formula9_parts(k: usize, m: usize) -> (XPoly, XPoly) {
    let mut num = linear_falling_factorial(&MultiPoly::zero(m), k);
    let mut den = XPoly::one(m);
    for i in 1..=m {
        let q = MultiPoly::q(m, i);
        let up = &q + &p_tail(m, i);
        let down = &q + &p_tail(m, i + 1);
        num = num
            .checked_mul(&linear_falling_factorial(&up, k))
            .expect("same variable space");
        den = den
            .checked_mul(&linear_falling_factorial(&down, k))
            .expect("same variable space");
    }
    (num, den)
}

/// `F_k(p_1..p_m; q_1..q_m)` by coefficient extraction at `x = ∞`.
///
/// Fails with [`PolyError::NonIntegerCoefficient`] if the result is not an
/// integer polynomial, which can only mean an arithmetic bug.
pub fn formula9_fk(k: usize, m: usize) -> Result<MultiPoly, PolyError> {
    assert!(k >= 1 && m >= 1, "formula9_fk needs k >= 1 and m >= 1");
    let (num, den) = formula9_parts(k, m);
    let series = series_divide(&num, &den, -1)?;
    let residue = extract_xinv(&series)?;
    let fk = residue.scale(&-BigRational::new(BigInt::from(1), BigInt::from(k as u64)));
    if let Some((mono, c)) = fk.terms().find(|(_, c)| !c.is_integer()) {
        return Err(PolyError::NonIntegerCoefficient {
            exponents: mono.exponents().to_vec(),
            coefficient: c.to_string(),
        });
    }
    Ok(fk)
}
