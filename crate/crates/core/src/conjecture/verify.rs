//! Verification campaigns. Each returns a [`VerificationReport`]; cases are
//! evaluated in parallel and reported in a fixed order.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::{params, ReportBuilder};
use super::{
    conjectured_f, f_numeric, g_mu, grid_size, interpolate_f, shape_grid, RectangleUnionShape,
    VerificationReport,
};
use crate::characters::{
    f_lambda, factorial, falling_factorial, orthogonality_check, syt_count_bruteforce,
};
use crate::combinatorics::{partitions_of, Partition};
use crate::polyalg::{formula9_fk, MultiPoly};

/// Interpolation grids at most this large are included in
/// [`verify_prop1_specialization`].
pub const PROP1_INTERPOLATION_BUDGET: usize = 1_000;

fn class_list(k_max: usize) -> Vec<Partition> {
    (1..=k_max).flat_map(partitions_of).collect()
}

fn int(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

type Outcome = (String, Value, String, String);

/// Compares `F_numeric` with a polynomial at every shape with `n ≥ k`.
fn pointwise(poly: &MultiPoly, mu: &Partition, shapes: &[RectangleUnionShape]) -> Vec<Outcome> {
    shapes
        .par_iter()
        .filter(|s| s.size() >= mu.size())
        .map(|shape| {
            let expected = f_numeric(shape, mu).expect("n >= k on the grid");
            let actual = poly.eval_int(&shape.point()).expect("point has 2m entries");
            (
                format!("k={} mu={} shape={}", mu.size(), mu, shape),
                json!({"mu": mu, "p": shape.p(), "q": shape.q()}),
                expected.to_string(),
                actual.to_string(),
            )
        })
        .collect()
}

/// `F_μ(p; q) = (-1)^k Σ_{u w_μ = v} p^κ(u) (-q)^κ(v)` on every `p × q`
/// rectangle with `p, q ≤ dim_max` and `pq ≥ k`, for all `μ ⊢ k ≤ k_max`.
pub fn verify_theorem1(k_max: usize, dim_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "theorem1",
        params([("kmax", json!(k_max)), ("dim", json!(dim_max))]),
    );
    let rectangles = shape_grid(1, dim_max);
    for mu in class_list(k_max) {
        let poly = conjectured_f(&mu, 1);
        report.absorb(pointwise(&poly, &mu, &rectangles));
    }
    report.finish()
}

/// Pointwise check of `F_μ = (-1)^k G_μ(p, -q)` on all shapes with `m`
/// rectangles, heights in `1..=dim_max`, weakly decreasing widths in
/// `1..=dim_max`, and `n ≥ k`, for all `μ ⊢ k ≤ k_max`.
pub fn verify_conjecture(k_max: usize, m: usize, dim_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "conjecture",
        params([
            ("kmax", json!(k_max)),
            ("m", json!(m)),
            ("dim", json!(dim_max)),
        ]),
    );
    let shapes = shape_grid(m, dim_max);
    for mu in class_list(k_max) {
        let poly = conjectured_f(&mu, m);
        report.absorb(pointwise(&poly, &mu, &shapes));
    }
    report.finish()
}

/// Polynomial-level comparison of `(-1)^k G_μ(p, -q)` against `F_μ`
/// reconstructed by interpolation, for all `μ ⊢ k ≤ k_max`.
pub fn verify_conjecture_polynomial(k_max: usize, m: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "conjecture-polynomial",
        params([("kmax", json!(k_max)), ("m", json!(m))]),
    );
    let classes = class_list(k_max);
    let outcomes: Vec<Outcome> = classes
        .iter()
        .map(|mu| {
            let interpolated = match interpolate_f(mu, m) {
                Ok(p) => p.to_string(),
                Err(e) => format!("error: {e}"),
            };
            (
                format!("k={} mu={}", mu.size(), mu),
                json!({"mu": mu, "m": m}),
                interpolated,
                conjectured_f(mu, m).to_string(),
            )
        })
        .collect();
    report.absorb(outcomes);
    report.finish()
}

/// `(-1)^k F_μ(1..1; -1..-1) = (k+m-1)_k`, read off as the coefficient sum
/// of `G_μ`, and where the grid is small enough also from the interpolated
/// `F_μ`.
pub fn verify_prop1_specialization(k_max: usize, m_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "prop1",
        params([("kmax", json!(k_max)), ("mmax", json!(m_max))]),
    );
    for m in 1..=m_max {
        for mu in class_list(k_max) {
            let k = mu.size();
            let expected = int(falling_factorial((k + m - 1) as i64, k));
            let ones = vec![1i64; 2 * m];
            let g_value = g_mu(&mu, m).eval_int(&ones).expect("2m entries");
            report.details.insert(
                format!("k={k},m={m}"),
                json!(expected.to_integer().to_string()),
            );
            report.check(
                format!("k={k} m={m} mu={mu} route=g"),
                json!({"mu": mu, "m": m}),
                &expected,
                &g_value,
            );
            if grid_size(k, m).is_some_and(|n| n <= PROP1_INTERPOLATION_BUDGET) {
                let point: Vec<i64> = (0..2 * m).map(|i| if i < m { 1 } else { -1 }).collect();
                let sign = int(BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
                let value = interpolate_f(&mu, m)
                    .map(|f| (f.eval_int(&point).expect("2m entries") * sign).to_string())
                    .unwrap_or_else(|e| format!("error: {e}"));
                report.check(
                    format!("k={k} m={m} mu={mu} route=interpolation"),
                    json!({"mu": mu, "m": m}),
                    &expected.to_string(),
                    &value,
                );
            }
        }
    }
    report.finish()
}

/// Embeds `G_μ` in `m - 1` colors into `m` colors by
/// `p_i ↦ p_i + p_{i+1}` and shifting the later variables up by one.
fn merged_images(m: usize, i: usize) -> Vec<MultiPoly> {
    let mut images = Vec::with_capacity(2 * (m - 1));
    for j in 1..m {
        images.push(match j.cmp(&i) {
            std::cmp::Ordering::Less => MultiPoly::p(m, j),
            std::cmp::Ordering::Equal => &MultiPoly::p(m, i) + &MultiPoly::p(m, i + 1),
            std::cmp::Ordering::Greater => MultiPoly::p(m, j + 1),
        });
    }
    for j in 1..m {
        images.push(if j <= i {
            MultiPoly::q(m, j)
        } else {
            MultiPoly::q(m, j + 1)
        });
    }
    images
}

/// The two sides of the merge identity for `q_{i+1} = q_i`:
/// `(G_μ with q_{i+1} := q_i, G_μ in m-1 colors with p_i merged)`.
pub fn reduction_sides(mu: &Partition, m: usize, i: usize) -> (MultiPoly, MultiPoly) {
    assert!(1 <= i && i < m, "merge index {i} outside 1..{m}");
    let g = g_mu(mu, m);
    let left = g
        .substitute(m + i, &MultiPoly::q(m, i))
        .expect("index in range");
    let right = g_mu(mu, m - 1)
        .compose(&merged_images(m, i))
        .expect("images match variable count");
    (left, right)
}

/// The merge identity for one `(μ, m, i)`.
pub fn verify_reduction(mu: &Partition, m: usize, i: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "reduction",
        params([("mu", json!(mu)), ("m", json!(m)), ("i", json!(i))]),
    );
    let (left, right) = reduction_sides(mu, m, i);
    report.check(
        format!("k={} m={m} i={i} mu={mu}", mu.size()),
        json!({"mu": mu, "m": m, "i": i}),
        &right.to_string(),
        &left.to_string(),
    );
    report.finish()
}

/// The merge identity for all `μ ⊢ k ≤ k_max`, `2 ≤ m ≤ m_max`, and every
/// merge index.
pub fn verify_reductions(k_max: usize, m_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "reduction",
        params([("kmax", json!(k_max)), ("mmax", json!(m_max))]),
    );
    let mut jobs = Vec::new();
    for m in 2..=m_max {
        for mu in class_list(k_max) {
            for i in 1..m {
                jobs.push((mu.clone(), m, i));
            }
        }
    }
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|(mu, m, i)| {
            let (left, right) = reduction_sides(mu, *m, *i);
            (
                format!("k={} m={m} i={i} mu={mu}", mu.size()),
                json!({"mu": mu, "m": m, "i": i}),
                right.to_string(),
                left.to_string(),
            )
        })
        .collect();
    report.absorb(outcomes);
    report.finish()
}

/// The extraction formula for `F_k`: as a polynomial against the
/// one-color pair sum for `k ≤ k_max_poly`, and pointwise against the
/// characters on the `m`-rectangle grid of side `dim_max` for
/// `k ≤ k_max_grid`.
pub fn verify_formula9(
    k_max_poly: usize,
    k_max_grid: usize,
    m: usize,
    dim_max: usize,
) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "formula9",
        params([
            ("kmax_poly", json!(k_max_poly)),
            ("kmax_grid", json!(k_max_grid)),
            ("m", json!(m)),
            ("dim", json!(dim_max)),
        ]),
    );
    for k in 1..=k_max_poly {
        let mu = Partition::new(vec![k]).expect("single part");
        let actual = formula9_fk(k, 1)
            .map(|f| f.to_string())
            .unwrap_or_else(|e| format!("error: {e}"));
        report.check(
            format!("k={k} m=1 polynomial"),
            json!({"k": k, "m": 1}),
            &conjectured_f(&mu, 1).to_string(),
            &actual,
        );
    }
    let shapes = shape_grid(m, dim_max);
    for k in 1..=k_max_grid {
        let mu = Partition::new(vec![k]).expect("single part");
        match formula9_fk(k, m) {
            Ok(fk) => report.absorb(pointwise(&fk, &mu, &shapes)),
            Err(e) => report.check(
                format!("k={k} m={m} polynomial"),
                json!({"k": k, "m": m}),
                &"integer polynomial".to_string(),
                &format!("error: {e}"),
            ),
        }
    }
    report.finish()
}

/// Character-table oracles: column orthogonality and `Σ (f^λ)² = n!` for
/// `n ≤ n_orthogonality`; hook-length count against brute-force tableau
/// enumeration for `n ≤ n_tableaux`.
pub fn verify_oracles(n_orthogonality: usize, n_tableaux: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "oracles",
        params([
            ("n_orthogonality", json!(n_orthogonality)),
            ("n_tableaux", json!(n_tableaux)),
        ]),
    );
    for n in 1..=n_orthogonality {
        let table = orthogonality_check(n);
        report.cases += table.class_pairs as u64;
        for v in table.violations {
            report.mismatches.push(super::Mismatch {
                case: format!("orthogonality n={n} mu={} nu={}", v.mu, v.nu),
                inputs: json!({"mu": v.mu, "nu": v.nu}),
                expected: v.expected.to_string(),
                actual: v.actual.to_string(),
            });
        }
        report.check(
            format!("dimension-squares n={n}"),
            json!({"n": n}),
            &factorial(n),
            &table.dimension_square_sum,
        );
    }
    for n in 0..=n_tableaux {
        for lambda in partitions_of(n) {
            let brute = syt_count_bruteforce(&lambda)
                .map(|c| c.to_string())
                .unwrap_or_else(|e| format!("error: {e}"));
            report.check(
                format!("tableaux n={n} lambda={lambda}"),
                json!({"lambda": lambda}),
                &brute,
                &f_lambda(&lambda).to_string(),
            );
        }
    }
    report.finish()
}

/// Structure of `G_μ`: coefficient sum `(k+m-1)_k`, and every monomial of
/// total degree at most `k + ℓ(μ)` with the same parity.
pub fn verify_g_structure(k_max: usize, m_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "g-structure",
        params([("kmax", json!(k_max)), ("mmax", json!(m_max))]),
    );
    for m in 1..=m_max {
        for mu in class_list(k_max) {
            let k = mu.size();
            let g = g_mu(&mu, m);
            let bound = (k + mu.len()) as u32;
            report.check(
                format!("k={k} m={m} mu={mu} coefficient-sum"),
                json!({"mu": mu, "m": m}),
                &int(falling_factorial((k + m - 1) as i64, k)),
                &g.coefficient_sum(),
            );
            let bad_degrees: Vec<u32> = g
                .terms()
                .map(|(mono, _)| mono.total_degree())
                .filter(|&d| d > bound || d % 2 != bound % 2)
                .collect();
            report.check(
                format!("k={k} m={m} mu={mu} degrees"),
                json!({"mu": mu, "m": m}),
                &format!("all <= {bound} with parity {}", bound % 2),
                &if bad_degrees.is_empty() {
                    format!("all <= {bound} with parity {}", bound % 2)
                } else {
                    format!("offending degrees {bad_degrees:?}")
                },
            );
            report.check(
                format!("k={k} m={m} mu={mu} nonnegative"),
                json!({"mu": mu, "m": m}),
                &true,
                &g.has_nonnegative_coefficients(),
            );
        }
    }
    report.finish()
}
