//! Sparse multivariate polynomials over the rationals in the variables
//! `p_1..p_m, q_1..q_m`.
//!
//! Variables are addressed by index: `p_i` is index `i - 1` and `q_i` is
//! index `m + i - 1`. Names only appear when rendering.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Exponent vector of length `2m`, ordered `(p_1..p_m, q_1..q_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// A polynomial in `p_1..p_m, q_1..q_m` with exact rational coefficients.
///
/// Zero coefficients are never stored, so equal polynomials have identical
/// term maps and `==` is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    m: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(m: usize) -> Self {
        MultiPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: BigRational) -> Self {
        let mut poly = Self::zero(m);
        poly.add_term(Monomial::one(2 * m), c);
        poly
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, BigRational::one())
    }

    pub fn from_int(m: usize, c: i64) -> Self {
        Self::constant(m, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable with the given index in `0..2m`.
    pub fn variable(m: usize, index: usize) -> Result<Self, PolyError> {
        if index >= 2 * m {
            return Err(PolyError::BadIndex {
                index,
                nvars: 2 * m,
            });
        }
        let mut exps = vec![0; 2 * m];
        exps[index] = 1;
        let mut poly = Self::zero(m);
        poly.add_term(Monomial(exps), BigRational::one());
        Ok(poly)
    }

    /// `p_i` for `1 <= i <= m`.
    pub fn p(m: usize, i: usize) -> Self {
        assert!((1..=m).contains(&i), "p_{i} outside 1..={m}");
        Self::variable(m, i - 1).unwrap()
    }

    /// `q_i` for `1 <= i <= m`.
    pub fn q(m: usize, i: usize) -> Self {
        assert!((1..=m).contains(&i), "q_{i} outside 1..={m}");
        Self::variable(m, m + i - 1).unwrap()
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut poly = Self::zero(m);
        for (exps, c) in terms {
            if exps.len() != 2 * m {
                return Err(PolyError::LengthMismatch {
                    expected: 2 * m,
                    got: exps.len(),
                });
            }
            poly.add_term(Monomial(exps), c);
        }
        Ok(poly)
    }

    /// Number of colors `m`; the polynomial has `2m` variables.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        2 * self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.nvars()])
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_space(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.m != other.m {
            return Err(PolyError::VarspaceMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_space(other)?;
        let mut out = MultiPoly::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.m);
        }
        MultiPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, a)| (mono.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.m);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact value at `point`, which lists the `2m` variable values in index
    /// order.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::LengthMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(mono.exponents()) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// [`Self::eval`] at an integer point.
    pub fn eval_int(&self, point: &[i64]) -> Result<BigRational, PolyError> {
        let point: Vec<BigRational> = point
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        self.eval(&point)
    }

    /// Replaces every variable `i` by `images[i]`. The images may live in a
    /// different variable space; the result lives in theirs.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::LengthMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(first) => first.m,
            None => self.m,
        };
        if let Some(bad) = images.iter().find(|img| img.m != target) {
            return Err(PolyError::VarspaceMismatch {
                left: target,
                right: bad.m,
            });
        }
        // powers are cached per variable
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(target), img.clone()])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (mono, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (var, &e) in mono.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[var].len() <= e {
                    let next = &powers[var][powers[var].len() - 1] * &images[var];
                    powers[var].push(next);
                }
                if e > 0 {
                    term = &term * &powers[var][e];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Replaces variable `var` by `replacement`, leaving the others alone.
    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_space(replacement)?;
        if var >= self.nvars() {
            return Err(PolyError::BadIndex {
                index: var,
                nvars: self.nvars(),
            });
        }
        let images: Vec<MultiPoly> = (0..self.nvars())
            .map(|i| {
                if i == var {
                    replacement.clone()
                } else {
                    MultiPoly::variable(self.m, i).unwrap()
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Replaces each `q_i` by `-q_i`.
    pub fn negate_q(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let q_degree: u32 = mono.exponents()[self.m..].iter().sum();
                let c = if q_degree % 2 == 1 { -c } else { c.clone() };
                (mono.clone(), c)
            })
            .collect();
        MultiPoly { m: self.m, terms }
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn integer_terms(&self) -> Option<Vec<(Vec<u32>, BigInt)>> {
        self.terms
            .iter()
            .map(|(mono, c)| c.is_integer().then(|| (mono.0.clone(), c.to_integer())))
            .collect()
    }

    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    /// Panics if the variable spaces differ; see [`MultiPoly::checked_add`].
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("variable space mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("variable space mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("variable space mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), -c))
                .collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}
