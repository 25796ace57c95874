//! Text and JSON renderings of [`MultiPoly`].
//!
//! Text terms are ordered by total degree (descending), then by degree in
//! the `p` variables (descending), then by exponent vector in descending
//! lexicographic order. For example
//! `-p1^2*q1 - 2*p1*p2*q2 - p2^2*q2 + p1*q1^2 + p2*q2^2`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, PolyError};

pub fn variable_name(m: usize, index: usize) -> String {
    if index < m {
        format!("p{}", index + 1)
    } else {
        format!("q{}", index - m + 1)
    }
}

fn render_order(m: usize, a: &Monomial, b: &Monomial) -> Ordering {
    let p_degree = |x: &Monomial| x.exponents()[..m].iter().sum::<u32>();
    b.total_degree()
        .cmp(&a.total_degree())
        .then_with(|| p_degree(b).cmp(&p_degree(a)))
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// Terms in rendering order.
pub fn ordered_terms(poly: &MultiPoly) -> Vec<(&Monomial, &BigRational)> {
    let mut terms: Vec<_> = poly.terms().collect();
    terms.sort_by(|a, b| render_order(poly.m(), a.0, b.0));
    terms
}

fn monomial_text(m: usize, mono: &Monomial) -> String {
    let factors: Vec<String> = mono
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = variable_name(m, i);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    factors.join("*")
}

fn rational_text(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = ordered_terms(self);
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let vars = monomial_text(self.m(), mono);
            if vars.is_empty() {
                write!(f, "{}", rational_text(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{}*{vars}", rational_text(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// One term of the structured rendering. The coefficient is a decimal
/// string (`"-2"`, or `"1/2"` when fractional) so that big integers survive
/// any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

/// Structured rendering of a polynomial, terms in rendering order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub m: usize,
    pub variables: Vec<String>,
    pub terms: Vec<TermRecord>,
}

impl From<&MultiPoly> for PolyRecord {
    fn from(poly: &MultiPoly) -> Self {
        let m = poly.m();
        PolyRecord {
            m,
            variables: (0..2 * m).map(|i| variable_name(m, i)).collect(),
            terms: ordered_terms(poly)
                .into_iter()
                .map(|(mono, c)| TermRecord {
                    exponents: mono.exponents().to_vec(),
                    coefficient: rational_text(c),
                })
                .collect(),
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::BadCoefficient {
        text: text.to_string(),
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            text.trim().parse().map_err(|_| bad())?,
        )),
    }
}

impl TryFrom<PolyRecord> for MultiPoly {
    type Error = PolyError;

    fn try_from(record: PolyRecord) -> Result<Self, PolyError> {
        let terms = record
            .terms
            .into_iter()
            .map(|t| Ok((t.exponents, parse_rational(&t.coefficient)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        MultiPoly::from_terms(record.m, terms)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRecord::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let record = PolyRecord::deserialize(deserializer)?;
        MultiPoly::try_from(record).map_err(serde::de::Error::custom)
    }
}
