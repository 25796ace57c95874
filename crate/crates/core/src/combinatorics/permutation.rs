//! Permutations of `{1..k}` and their cycle structure.
//!
//! Products are taken **left to right**: `u.compose(&v)` is the permutation
//! `w` with `w(i) = v(u(i))`, i.e. apply `u` first and then `v`. Every
//! colored product in the crate inherits this convention.

use std::fmt;

use super::{CombinatoricsError, Partition};

/// A bijection on `{1..k}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-based image list `[w(1), .., w(k)]`.
    pub fn from_images(images: &[usize]) -> Result<Self, CombinatoricsError> {
        let zero_based: Vec<usize> = images
            .iter()
            .map(|&i| i.checked_sub(1).ok_or(CombinatoricsError::NotAPermutation))
            .collect::<Result<_, _>>()?;
        Self::from_zero_based(zero_based)
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(CombinatoricsError::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `k` from 1-based disjoint cycles.
    /// Elements not mentioned are fixed.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self, CombinatoricsError> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a == 0 || a > k || seen[a - 1] {
                    return Err(CombinatoricsError::NotAPermutation);
                }
                seen[a - 1] = true;
                let b = cycle[(pos + 1) % cycle.len()];
                if b == 0 || b > k {
                    return Err(CombinatoricsError::NotAPermutation);
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right product: the result maps `i` to `v(u(i))` where `u = self`.
    pub fn compose(&self, v: &Permutation) -> Result<Permutation, CombinatoricsError> {
        if self.degree() != v.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: self.degree(),
                right: v.degree(),
            });
        }
        Ok(self.compose_unchecked(v))
    }

    pub(crate) fn compose_unchecked(&self, v: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| v.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &w) in self.images.iter().enumerate() {
            images[w] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles, 1-based, each starting at its smallest element and
    /// listed by increasing smallest element. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a + 1);
                a = self.images[a];
            }
            out.push(cycle);
        }
        out
    }

    /// For each 0-based point, the index of its cycle in [`Self::cycles`] order.
    pub(crate) fn cycle_labels(&self) -> (Vec<usize>, usize) {
        let n = self.images.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut a = start;
            while label[a] == usize::MAX {
                label[a] = count;
                a = self.images[a];
            }
            count += 1;
        }
        (label, count)
    }

    /// Number of cycles, κ.
    pub fn num_cycles(&self) -> usize {
        self.cycle_labels().1
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_multiset(self.cycles().iter().map(Vec::len).collect())
    }

    /// Advances to the next permutation in lexicographic image order.
    /// Returns `false` (leaving `self` unchanged) at the last one.
    pub(crate) fn advance(&mut self) -> bool {
        let v = &mut self.images;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] > v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] < v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points, e.g. `(1,4,2,6)(3,7)(5,8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write_cycle(f, &cycle)?;
        }
        Ok(())
    }
}

pub(crate) fn write_cycle(f: &mut fmt::Formatter<'_>, cycle: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, a) in cycle.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    write!(f, ")")
}

/// All permutations of `{1..k}` in lexicographic order of their image lists.
pub fn permutations(k: usize) -> Vec<Permutation> {
    let mut current = Permutation::identity(k);
    let mut out = vec![current.clone()];
    while current.advance() {
        out.push(current.clone());
    }
    out
}

/// The permutation `(1..μ₁)(μ₁+1..μ₁+μ₂)…` of cycle type `mu`.
pub fn canonical_permutation(mu: &Partition) -> Permutation {
    let k = mu.size();
    let mut images = Vec::with_capacity(k);
    let mut start = 0;
    for &part in mu.parts() {
        for offset in 0..part {
            images.push(start + (offset + 1) % part);
        }
        start += part;
    }
    Permutation { images }
}
