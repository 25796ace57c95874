//! Polynomials in an auxiliary variable `x` with [`MultiPoly`] coefficients,
//! and their quotients expanded in descending powers of `x`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::{MultiPoly, PolyError};

/// `Σ_d c_d x^d` with `c_d` in the `p, q` polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    m: usize,
    /// `coeffs[d]` multiplies `x^d`; no trailing zeros.
    coeffs: Vec<MultiPoly>,
}

impl XPoly {
    pub fn from_coeffs(m: usize, coeffs: Vec<MultiPoly>) -> Result<Self, PolyError> {
        if let Some(bad) = coeffs.iter().find(|c| c.m() != m) {
            return Err(PolyError::VarspaceMismatch {
                left: m,
                right: bad.m(),
            });
        }
        let mut poly = XPoly { m, coeffs };
        poly.trim();
        Ok(poly)
    }

    pub fn constant(c: MultiPoly) -> Self {
        let m = c.m();
        XPoly::from_coeffs(m, vec![c]).unwrap()
    }

    pub fn one(m: usize) -> Self {
        Self::constant(MultiPoly::one(m))
    }

    /// `x - shift`.
    pub fn x_minus(shift: &MultiPoly) -> Self {
        let m = shift.m();
        XPoly::from_coeffs(m, vec![-shift, MultiPoly::one(m)]).unwrap()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(MultiPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree in `x`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: usize) -> MultiPoly {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.m))
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn checked_mul(&self, other: &XPoly) -> Result<XPoly, PolyError> {
        if self.m != other.m {
            return Err(PolyError::VarspaceMismatch {
                left: self.m,
                right: other.m,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(XPoly {
                m: self.m,
                coeffs: Vec::new(),
            });
        }
        let mut coeffs = vec![MultiPoly::zero(self.m); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPoly::from_coeffs(self.m, coeffs)
    }
}

/// `∏_{j=0}^{k-1} (x - shift - j)`, i.e. the falling factorial
/// `(x - shift)_k` expanded in powers of `x`.
///
/// `shift` is expected to have total degree at most 1.
pub fn linear_falling_factorial(shift: &MultiPoly, k: usize) -> XPoly {
    debug_assert!(shift.total_degree().unwrap_or(0) <= 1);
    let m = shift.m();
    let mut out = XPoly::one(m);
    for j in 0..k {
        let factor = XPoly::x_minus(&(shift + &MultiPoly::from_int(m, j as i64)));
        out = out.checked_mul(&factor).expect("same variable space");
    }
    out
}

/// A truncated expansion `Σ_{e ≥ order} c_e x^e` in descending powers of `x`.
/// Coefficients of exponents below `order` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesAtInfinity {
    m: usize,
    order: i64,
    coeffs: BTreeMap<i64, MultiPoly>,
}

impl SeriesAtInfinity {
    /// A polynomial viewed as a series, retained down to `order`.
    pub fn from_xpoly(poly: &XPoly, order: i64) -> Self {
        let coeffs = poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(d, c)| *d as i64 >= order && !c.is_zero())
            .map(|(d, c)| (d as i64, c.clone()))
            .collect();
        SeriesAtInfinity {
            m: poly.m(),
            order,
            coeffs,
        }
    }

    /// Lowest retained exponent.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^e`, or `None` when `e` lies below the truncation.
    pub fn coeff(&self, e: i64) -> Option<MultiPoly> {
        (e >= self.order).then(|| {
            self.coeffs
                .get(&e)
                .cloned()
                .unwrap_or_else(|| MultiPoly::zero(self.m))
        })
    }

    /// Nonzero retained terms, highest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &MultiPoly)> {
        self.coeffs.iter().rev().map(|(&e, c)| (e, c))
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Product with a polynomial, truncated at the same order. Exact for
    /// every retained exponent because the polynomial has no negative powers.
    pub fn mul_xpoly(&self, poly: &XPoly) -> SeriesAtInfinity {
        let mut coeffs: BTreeMap<i64, MultiPoly> = BTreeMap::new();
        for (&e, c) in &self.coeffs {
            for (d, a) in poly.coeffs().iter().enumerate() {
                let target = e + d as i64;
                let entry = coeffs
                    .entry(target)
                    .or_insert_with(|| MultiPoly::zero(self.m));
                *entry = &*entry + &(c * a);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SeriesAtInfinity {
            m: self.m,
            order: self.order,
            coeffs,
        }
    }
}

/// Expands `num / den` in descending powers of `x`, keeping exponents down
/// to `order`.
///
/// The leading coefficient of `den` must be a nonzero constant (the
/// denominators built here are monic).
pub fn series_divide(num: &XPoly, den: &XPoly, order: i64) -> Result<SeriesAtInfinity, PolyError> {
    if num.m() != den.m() {
        return Err(PolyError::VarspaceMismatch {
            left: num.m(),
            right: den.m(),
        });
    }
    let m = num.m();
    let den_degree = den.degree().ok_or(PolyError::NonMonicDenominator)? as i64;
    let lead = &den.coeffs()[den_degree as usize];
    if lead.len() != 1 || lead.total_degree() != Some(0) {
        return Err(PolyError::NonMonicDenominator);
    }
    let lead_inv = BigRational::one() / lead.constant_term();

    let mut remainder: BTreeMap<i64, MultiPoly> = num
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (d as i64, c.clone()))
        .collect();
    let mut coeffs = BTreeMap::new();
    let top = num.degree().map_or(order - 1, |d| d as i64 - den_degree);
    let mut e = top;
    while e >= order {
        if let Some(r) = remainder.remove(&(e + den_degree)) {
            let c = r.scale(&lead_inv);
            for (d, a) in den.coeffs().iter().enumerate().take(den_degree as usize) {
                if a.is_zero() {
                    continue;
                }
                let slot = e + d as i64;
                let updated = match remainder.remove(&slot) {
                    Some(old) => &old - &(&c * a),
                    None => -&(&c * a),
                };
                if !updated.is_zero() {
                    remainder.insert(slot, updated);
                }
            }
            coeffs.insert(e, c);
        }
        e -= 1;
    }
    Ok(SeriesAtInfinity { m, order, coeffs })
}

/// The coefficient of `x^{-1}`.
pub fn extract_xinv(series: &SeriesAtInfinity) -> Result<MultiPoly, PolyError> {
    series.coeff(-1).ok_or(PolyError::TruncationTooShallow {
        order: series.order(),
    })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(c))
    }

    fn x_poly(m: usize, coeffs: &[MultiPoly]) -> XPoly {
        XPoly::from_coeffs(m, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn falling_factorials_in_x() {
        let zero = MultiPoly::zero(1);
        let ff2 = linear_falling_factorial(&zero, 2);
        assert_eq!(
            ff2,
            x_poly(
                1,
                &[
                    MultiPoly::zero(1),
                    MultiPoly::from_int(1, -1),
                    MultiPoly::one(1)
                ]
            )
        );
        assert_eq!(linear_falling_factorial(&zero, 0), XPoly::one(1));
        let shift = &MultiPoly::q(1, 1) + &MultiPoly::p(1, 1);
        assert_eq!(linear_falling_factorial(&shift, 1), XPoly::x_minus(&shift));
    }

    /// x(x - q - p)/(x - q) = x - p - pq/x - pq²/x² - ...
    #[test]
    fn hand_expansion() {
        let (p, q) = (MultiPoly::p(1, 1), MultiPoly::q(1, 1));
        let x = XPoly::x_minus(&MultiPoly::zero(1));
        let num = x.checked_mul(&XPoly::x_minus(&(&q + &p))).unwrap();
        let den = XPoly::x_minus(&q);
        let s = series_divide(&num, &den, -2).unwrap();
        assert_eq!(s.coeff(1).unwrap(), MultiPoly::one(1));
        assert_eq!(s.coeff(0).unwrap(), -&p);
        assert_eq!(s.coeff(-1).unwrap(), -&(&p * &q));
        assert_eq!(s.coeff(-2).unwrap(), -&(&p * &q.pow(2)));
        assert_eq!(s.coeff(-3), None);
        assert_eq!(extract_xinv(&s).unwrap(), -&(&p * &q));
    }

    #[test]
    fn division_edge_cases() {
        let m = 1;
        let p = MultiPoly::p(m, 1);
        let poly = x_poly(m, &[p.clone(), MultiPoly::one(m), p.clone()]);
        let s = series_divide(&poly, &XPoly::one(m), -1).unwrap();
        assert_eq!(s, SeriesAtInfinity::from_xpoly(&poly, -1));
        assert!(extract_xinv(&s).unwrap().is_zero());

        let x2_minus_x = linear_falling_factorial(&MultiPoly::zero(m), 2);
        let x = XPoly::x_minus(&MultiPoly::zero(m));
        let s = series_divide(&x2_minus_x, &x, 0).unwrap();
        assert_eq!(s.terms().count(), 2);
        assert_eq!(s.coeff(1).unwrap(), MultiPoly::one(m));
        assert_eq!(s.coeff(0).unwrap(), MultiPoly::from_int(m, -1));
        assert!(matches!(
            extract_xinv(&s),
            Err(PolyError::TruncationTooShallow { order: 0 })
        ));

        let not_monic = x_poly(m, &[MultiPoly::one(m), p.clone()]);
        assert!(matches!(
            series_divide(&x, &not_monic, -1),
            Err(PolyError::NonMonicDenominator)
        ));
        let two_x = x_poly(m, &[MultiPoly::zero(m), MultiPoly::from_int(m, 2)]);
        let half = series_divide(&x, &two_x, -3).unwrap();
        assert_eq!(
            half.coeff(0).unwrap(),
            MultiPoly::constant(m, BigRational::new(1.into(), 2.into()))
        );
        assert!(half.coeff(-1).unwrap().is_zero());
    }

    #[test]
    fn explicit_xinv_term() {
        // 1/x expanded is exactly x^{-1}
        let m = 1;
        let c = &MultiPoly::q(m, 1) * &MultiPoly::from_int(m, 3);
        let s = series_divide(
            &XPoly::constant(c.clone()),
            &XPoly::x_minus(&MultiPoly::zero(m)),
            -1,
        )
        .unwrap();
        assert_eq!(extract_xinv(&s).unwrap(), c);
    }

    fn small_xpoly(max_degree: usize) -> impl Strategy<Value = XPoly> {
        prop::collection::vec(
            prop::collection::vec((prop::collection::vec(0u32..2, 2), -3i64..4), 0..3),
            1..=max_degree + 1,
        )
        .prop_map(|coeffs| {
            let coeffs = coeffs
                .into_iter()
                .map(|terms| {
                    MultiPoly::from_terms(1, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
                })
                .collect();
            XPoly::from_coeffs(1, coeffs).unwrap()
        })
    }

    proptest! {
        /// (num / den) * den reproduces num at every retained exponent.
        #[test]
        fn division_round_trip(
            num in small_xpoly(4),
            low in small_xpoly(2),
            order in -4i64..0,
        ) {
            // make the denominator monic of degree deg(low) + 1
            let mut coeffs = low.coeffs().to_vec();
            coeffs.push(MultiPoly::one(1));
            let den = XPoly::from_coeffs(1, coeffs).unwrap();
            let quotient = series_divide(&num, &den, order).unwrap();
            let back = quotient.mul_xpoly(&den);
            let den_degree = den.degree().unwrap() as i64;
            // exponents >= order + deg(den) only depend on retained quotient terms
            for e in (order + den_degree)..=(num.degree().unwrap_or(0) as i64) {
                let expected = if e >= 0 { num.coeff(e as usize) } else { MultiPoly::zero(1) };
                prop_assert_eq!(back.coeff(e).unwrap(), expected, "exponent {}", e);
            }
        }
    }
}
