//! Reconstruction of `F_μ` as a polynomial from character values.
//!
//! `F_μ` has degree at most `k = |μ|` in each variable, so it is determined
//! by its values on a tensor grid of `k + 1` nodes per variable. Heights use
//! the nodes `1..=k+1`. Widths use disjoint blocks `B_i..=B_i + k` with
//! `B_m = k` and `B_i = B_{i+1} + k + 1`, which keeps the widths strictly
//! decreasing and the shape size at least `k` everywhere on the grid.
//!
//! The grid values are converted to monomial coefficients one axis at a time:
//! Newton divided differences along the axis, then expansion of the Newton
//! basis. Both steps are linear along a single axis, so the axes can be
//! processed in any order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{f_numeric, ConjectureError, RectangleUnionShape};
use crate::combinatorics::Partition;
use crate::polyalg::MultiPoly;

/// Largest grid [`interpolate_f`] will evaluate.
pub const MAX_GRID_POINTS: usize = 50_000;

/// Nodes per variable, in index order `p_1..p_m, q_1..q_m`.
pub fn interpolation_nodes(k: usize, m: usize) -> Vec<Vec<usize>> {
    let heights: Vec<usize> = (1..=k + 1).collect();
    let mut nodes = vec![heights; m];
    for i in 0..m {
        let base = k + (m - 1 - i) * (k + 1);
        nodes.push((base..=base + k).collect());
    }
    nodes
}

pub fn grid_size(k: usize, m: usize) -> Option<usize> {
    (k + 1).checked_pow(2 * m as u32)
}

/// Reconstructs `F_μ(p_1..p_m; q_1..q_m)` from normalized character values.
///
/// The result is checked for integer coefficients and against the
/// characters at a few shapes off the grid.
pub fn interpolate_f(mu: &Partition, m: usize) -> Result<MultiPoly, ConjectureError> {
    let k = mu.size();
    assert!(k >= 1 && m >= 1, "interpolate_f needs |mu| >= 1 and m >= 1");
    let points =
        grid_size(k, m)
            .filter(|&n| n <= MAX_GRID_POINTS)
            .ok_or(ConjectureError::GridTooLarge {
                k,
                m,
                limit: MAX_GRID_POINTS,
            })?;
    let nodes = interpolation_nodes(k, m);
    let nvars = 2 * m;
    let side = k + 1;

    // row-major: variable 0 is the slowest index
    let values: Vec<BigRational> = (0..points)
        .into_par_iter()
        .map(|flat| {
            let idx = unflatten(flat, side, nvars);
            let p = (0..m).map(|v| nodes[v][idx[v]]).collect();
            let q = (m..nvars).map(|v| nodes[v][idx[v]]).collect();
            let shape = RectangleUnionShape::new(p, q).expect("grid widths decrease");
            f_numeric(&shape, mu)
        })
        .collect::<Result<_, _>>()?;

    let mut coeffs = values;
    for (axis, axis_nodes) in nodes.iter().enumerate() {
        let stride = side.pow((nvars - 1 - axis) as u32);
        let nodes: Vec<BigRational> = axis_nodes.iter().map(|&x| int(x as i64)).collect();
        for start in line_starts(side, nvars, axis) {
            let line: Vec<BigRational> = (0..side)
                .map(|j| coeffs[start + j * stride].clone())
                .collect();
            let mono = newton_to_monomial(&divided_differences(&line, &nodes), &nodes);
            for (j, c) in mono.into_iter().enumerate() {
                coeffs[start + j * stride] = c;
            }
        }
    }

    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(flat, c)| {
            let exps = unflatten(flat, side, nvars)
                .into_iter()
                .map(|e| e as u32)
                .collect();
            (exps, c)
        });
    let poly = MultiPoly::from_terms(m, terms).expect("exponent vectors have length 2m");
    if let Some((mono, c)) = poly.terms().find(|(_, c)| !c.is_integer()) {
        return Err(ConjectureError::NonIntegerCoefficient {
            exponents: mono.exponents().to_vec(),
            coefficient: c.to_string(),
        });
    }
    check_off_grid(&poly, mu, &nodes)?;
    Ok(poly)
}

/// Compares against the characters at shapes just outside the grid, which a
/// polynomial of higher degree than assumed would fail.
fn check_off_grid(
    poly: &MultiPoly,
    mu: &Partition,
    nodes: &[Vec<usize>],
) -> Result<(), ConjectureError> {
    let m = poly.m();
    let k = mu.size();
    let probes = [
        (
            vec![k + 2; m],
            nodes[m..]
                .iter()
                .map(|n| n[n.len() - 1] + 1)
                .collect::<Vec<_>>(),
        ),
        (
            (1..=m).collect(),
            nodes[m..].iter().map(|n| n[0] + 1).collect(),
        ),
    ];
    for (p, q) in probes {
        let shape = RectangleUnionShape::new(p, q)?;
        let expected = f_numeric(&shape, mu)?;
        let got = poly.eval_int(&shape.point())?;
        if got != expected {
            return Err(ConjectureError::InterpolationCheck {
                shape: shape.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
    Ok(())
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn unflatten(mut flat: usize, side: usize, nvars: usize) -> Vec<usize> {
    let mut idx = vec![0; nvars];
    for slot in idx.iter_mut().rev() {
        *slot = flat % side;
        flat /= side;
    }
    idx
}

/// Flat offsets of every line parallel to `axis`.
fn line_starts(side: usize, nvars: usize, axis: usize) -> impl Iterator<Item = usize> {
    let total = side.pow(nvars as u32);
    let stride = side.pow((nvars - 1 - axis) as u32);
    (0..total).filter(move |flat| (flat / stride).is_multiple_of(side))
}

/// Newton coefficients `c_j` with `f(x) = Σ c_j ∏_{i<j} (x - x_i)`.
pub(crate) fn divided_differences(
    values: &[BigRational],
    nodes: &[BigRational],
) -> Vec<BigRational> {
    let mut c = values.to_vec();
    for j in 1..c.len() {
        for i in (j..c.len()).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&nodes[i] - &nodes[i - j]);
        }
    }
    c
}

/// Expands a Newton-form polynomial into ascending monomial coefficients.
pub(crate) fn newton_to_monomial(
    newton: &[BigRational],
    nodes: &[BigRational],
) -> Vec<BigRational> {
    let n = newton.len();
    let mut poly = vec![BigRational::zero(); n];
    for j in (0..n).rev() {
        // poly <- poly * (x - x_j) + c_j
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if poly[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &poly[d];
            }
            next[d] -= &poly[d] * &nodes[j];
        }
        next[0] += &newton[j];
        poly = next;
    }
    poly
}
