//! The colored-pair generating polynomial `G_μ` and the two sides of the
//! identities it enters.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{ConjectureError, RectangleUnionShape};
use crate::characters::normalized_character;
use crate::combinatorics::{canonical_permutation, ColoredSpace, Partition};
use crate::polyalg::MultiPoly;

/// Exponent vector `(κ(α), κ(β))` to number of pairs.
fn pair_counts(mu: &Partition, m: usize) -> HashMap<Vec<u32>, u64> {
    let w = canonical_permutation(mu);
    let space = ColoredSpace::new(mu.size(), m);
    (0..space.len())
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<u32>, u64>, index| {
            let alpha = space.get(index).expect("index in range");
            let beta = alpha.multiply_unchecked(&w);
            let mut kappa = vec![0usize; 2 * m];
            alpha.add_kappa(&mut kappa[..m]);
            beta.add_kappa(&mut kappa[m..]);
            *acc.entry(kappa.into_iter().map(|e| e as u32).collect())
                .or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, count) in b {
                *a.entry(key).or_default() += count;
            }
            a
        })
}

/// `G_μ(p, q) = Σ p^κ(α) q^κ(β)` over all colored `α` with `β = α w_μ`.
pub fn g_mu(mu: &Partition, m: usize) -> MultiPoly {
    assert!(mu.size() >= 1 && m >= 1, "g_mu needs |mu| >= 1 and m >= 1");
    let terms = pair_counts(mu, m)
        .into_iter()
        .map(|(exps, count)| (exps, BigRational::from_integer(BigInt::from(count))));
    MultiPoly::from_terms(m, terms).expect("exponent vectors have length 2m")
}

/// `(-1)^k G_μ(p, -q)`, the conjectured polynomial form of `F_μ`.
pub fn conjectured_f(mu: &Partition, m: usize) -> MultiPoly {
    let signed = g_mu(mu, m).negate_q();
    if mu.size() % 2 == 1 {
        -signed
    } else {
        signed
    }
}

/// The normalized character of the shape at the class `(μ, 1^{n-k})`.
pub fn f_numeric(
    shape: &RectangleUnionShape,
    mu: &Partition,
) -> Result<BigRational, ConjectureError> {
    let (n, k) = (shape.size(), mu.size());
    if n < k {
        return Err(ConjectureError::ShapeTooSmall { n, k });
    }
    Ok(normalized_character(&shape.to_partition(), mu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::falling_factorial;
    use crate::combinatorics::{parse_partition, partitions_of};

    fn part(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn poly(m: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            m,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigRational::from_integer(BigInt::from(*c)))),
        )
        .unwrap()
    }

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(c))
    }

    #[test]
    fn six_pair_table() {
        let g = g_mu(&part("2"), 2);
        let table = poly(
            2,
            &[
                (&[2, 0, 1, 0], 1),
                (&[1, 1, 0, 1], 2),
                (&[0, 2, 0, 1], 1),
                (&[1, 0, 2, 0], 1),
                (&[0, 1, 0, 2], 1),
            ],
        );
        assert_eq!(g, table);
        assert_eq!(
            conjectured_f(&part("2"), 2).to_string(),
            "-p1^2*q1 - 2*p1*p2*q2 - p2^2*q2 + p1*q1^2 + p2*q2^2"
        );
    }

    #[test]
    fn single_box_class() {
        for m in 1..=4 {
            let expected = (1..=m).fold(MultiPoly::zero(m), |acc, i| {
                &acc + &(&MultiPoly::p(m, i) * &MultiPoly::q(m, i))
            });
            assert_eq!(g_mu(&part("1"), m), expected);
            assert_eq!(
                conjectured_f(&part("1"), m),
                expected.negate_q().scale(&int(-1))
            );
        }
        assert_eq!(conjectured_f(&part("1"), 1).to_string(), "p1*q1");
    }

    #[test]
    fn one_color() {
        assert_eq!(g_mu(&part("2"), 1).to_string(), "p1^2*q1 + p1*q1^2");
        assert_eq!(
            conjectured_f(&part("2"), 1).to_string(),
            "-p1^2*q1 + p1*q1^2"
        );
    }

    #[test]
    fn coefficient_sums() {
        for k in 1..=5 {
            for m in 1..=3 {
                for mu in partitions_of(k) {
                    let g = g_mu(&mu, m);
                    assert!(g.has_nonnegative_coefficients());
                    assert_eq!(
                        g.coefficient_sum(),
                        BigRational::from_integer(falling_factorial((k + m - 1) as i64, k))
                    );
                }
            }
        }
    }

    #[test]
    fn numeric_side() {
        let square = RectangleUnionShape::new(vec![2], vec![2]).unwrap();
        assert_eq!(f_numeric(&square, &part("2")).unwrap(), int(0));
        assert_eq!(f_numeric(&square, &part("1")).unwrap(), int(4));
        let row = RectangleUnionShape::new(vec![1], vec![5]).unwrap();
        for k in 1..=5 {
            assert_eq!(
                f_numeric(&row, &part(&k.to_string())).unwrap(),
                BigRational::from_integer(falling_factorial(5, k))
            );
        }
        assert!(matches!(
            f_numeric(&square, &part("3,2")),
            Err(ConjectureError::ShapeTooSmall { n: 4, k: 5 })
        ));
    }

    #[test]
    fn numeric_side_ignores_description() {
        let mu = part("2,1");
        let a = RectangleUnionShape::new(vec![2], vec![3]).unwrap();
        let b = RectangleUnionShape::new(vec![1, 1], vec![3, 3]).unwrap();
        let c = RectangleUnionShape::new(vec![2, 4], vec![3, 0]).unwrap();
        let va = f_numeric(&a, &mu).unwrap();
        assert_eq!(f_numeric(&b, &mu).unwrap(), va);
        assert_eq!(f_numeric(&c, &mu).unwrap(), va);
    }
}
