//! Shapes built by stacking rectangles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ConjectureError;
use crate::combinatorics::Partition;

/// `m` rectangles of `p_i` rows and `q_i` columns stacked top to bottom,
/// with `q_1 ≥ q_2 ≥ … ≥ q_m`. Zero heights or widths are allowed and
/// contribute no rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectangleUnionShape {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl RectangleUnionShape {
    pub fn new(p: Vec<usize>, q: Vec<usize>) -> Result<Self, ConjectureError> {
        if p.len() != q.len() {
            return Err(ConjectureError::LengthMismatch {
                p: p.len(),
                q: q.len(),
            });
        }
        if let Some(i) = q.windows(2).position(|w| w[0] < w[1]) {
            return Err(ConjectureError::QNotWeaklyDecreasing { position: i + 1 });
        }
        Ok(RectangleUnionShape { p, q })
    }

    /// Rectangle heights.
    pub fn p(&self) -> &[usize] {
        &self.p
    }

    /// Rectangle widths.
    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn m(&self) -> usize {
        self.p.len()
    }

    /// Number of cells, `Σ p_i q_i`.
    pub fn size(&self) -> usize {
        self.p.iter().zip(&self.q).map(|(a, b)| a * b).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .p
            .iter()
            .zip(&self.q)
            .filter(|(_, &w)| w > 0)
            .flat_map(|(&h, &w)| std::iter::repeat_n(w, h))
            .collect();
        Partition::new(parts).expect("widths are weakly decreasing")
    }

    /// Evaluation point `(p_1..p_m, q_1..q_m)`.
    pub fn point(&self) -> Vec<i64> {
        self.p.iter().chain(&self.q).map(|&x| x as i64).collect()
    }
}

/// Same as [`RectangleUnionShape::to_partition`].
pub fn shape_to_partition(shape: &RectangleUnionShape) -> Partition {
    shape.to_partition()
}

impl fmt::Display for RectangleUnionShape {
    /// `p1xq1,p2xq2,...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (h, w)) in self.p.iter().zip(&self.q).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}x{w}")?;
        }
        Ok(())
    }
}

impl FromStr for RectangleUnionShape {
    type Err = ConjectureError;

    /// Parses `p1xq1,p2xq2,...`, e.g. `2x3,1x1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConjectureError::BadShapeText {
            text: s.to_string(),
        };
        let mut p = Vec::new();
        let mut q = Vec::new();
        for block in s.split(',') {
            let (h, w) = block.trim().split_once(['x', 'X']).ok_or_else(bad)?;
            p.push(h.trim().parse().map_err(|_| bad())?);
            q.push(w.trim().parse().map_err(|_| bad())?);
        }
        RectangleUnionShape::new(p, q)
    }
}

/// Every shape with `m` rectangles, heights in `1..=dim`, and weakly
/// decreasing widths in `1..=dim`, in lexicographic order of `(q, p)`.
pub fn shape_grid(m: usize, dim: usize) -> Vec<RectangleUnionShape> {
    let mut widths = Vec::new();
    decreasing_tuples(m, dim, &mut Vec::new(), &mut widths);
    widths.reverse();
    let heights = all_tuples(m, dim);
    let mut out = Vec::with_capacity(widths.len() * heights.len());
    for q in &widths {
        for p in &heights {
            out.push(RectangleUnionShape {
                p: p.clone(),
                q: q.clone(),
            });
        }
    }
    out
}

fn decreasing_tuples(len: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == len {
        out.push(current.clone());
        return;
    }
    for v in (1..=max).rev() {
        current.push(v);
        decreasing_tuples(len, v, current, out);
        current.pop();
    }
}

fn all_tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}
