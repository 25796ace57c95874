//! Permutations whose cycles carry colors from `{1..m}`.

use std::fmt;
use std::ops::Range;

use super::permutation::write_cycle;
use super::{permutations, CombinatoricsError, Permutation};

/// A permutation `u` of `{1..k}` together with a coloring of its cycles.
///
/// Colors are stored per point and are constant along each cycle of `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    perm: Permutation,
    colors: Vec<u32>,
}

impl ColoredPermutation {
    /// `colors[i]` is the color of the 1-based point `i + 1`.
    pub fn new(perm: Permutation, colors: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if colors.len() != perm.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: perm.degree(),
                right: colors.len(),
            });
        }
        if colors.contains(&0) {
            return Err(CombinatoricsError::ColorOutOfRange { color: 0, m: None });
        }
        for (i, &image) in perm.zero_based().iter().enumerate() {
            if colors[i] != colors[image] {
                return Err(CombinatoricsError::ColorNotConstantOnCycle { point: i + 1 });
            }
        }
        Ok(ColoredPermutation { perm, colors })
    }

    /// Colors one entry per cycle, in [`Permutation::cycles`] order.
    pub fn from_cycle_colors(
        perm: Permutation,
        cycle_colors: &[u32],
    ) -> Result<Self, CombinatoricsError> {
        let (labels, count) = perm.cycle_labels();
        if cycle_colors.len() != count {
            return Err(CombinatoricsError::DegreeMismatch {
                left: count,
                right: cycle_colors.len(),
            });
        }
        let colors = labels.iter().map(|&c| cycle_colors[c]).collect();
        Self::new(perm, colors)
    }

    /// Every cycle colored `color`.
    pub fn uniform(perm: Permutation, color: u32) -> Self {
        let colors = vec![color; perm.degree()];
        ColoredPermutation { perm, colors }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// Color of the cycle containing the 1-based point `i`.
    pub fn color_of(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// The product `αv`: the underlying permutation is `u·v` (left to right)
    /// and each new cycle takes the largest color among the cycles of `u`
    /// that it meets.
    pub fn multiply(&self, v: &Permutation) -> Result<ColoredPermutation, CombinatoricsError> {
        if self.degree() != v.degree() {
            return Err(CombinatoricsError::DegreeMismatch {
                left: self.degree(),
                right: v.degree(),
            });
        }
        Ok(self.multiply_unchecked(v))
    }

    pub(crate) fn multiply_unchecked(&self, v: &Permutation) -> ColoredPermutation {
        let w = self.perm.compose_unchecked(v);
        let (labels, count) = w.cycle_labels();
        // colors[a] is already the color of the u-cycle through a
        let mut cycle_max = vec![0u32; count];
        for (a, &label) in labels.iter().enumerate() {
            cycle_max[label] = cycle_max[label].max(self.colors[a]);
        }
        let colors = labels.iter().map(|&l| cycle_max[l]).collect();
        ColoredPermutation { perm: w, colors }
    }

    /// `κ_i`: the number of cycles colored `i`, for `i = 1..m`.
    pub fn kappa_vector(&self, m: usize) -> Result<Vec<usize>, CombinatoricsError> {
        let max = self.max_color();
        if max as usize > m {
            return Err(CombinatoricsError::ColorOutOfRange {
                color: max,
                m: Some(m),
            });
        }
        let mut kappa = vec![0; m];
        self.add_kappa(&mut kappa);
        Ok(kappa)
    }

    /// Adds the cycle counts per color into `kappa` (index `color - 1`).
    pub(crate) fn add_kappa(&self, kappa: &mut [usize]) {
        let (labels, count) = self.perm.cycle_labels();
        let mut done = vec![false; count];
        for (a, &label) in labels.iter().enumerate() {
            if !done[label] {
                done[label] = true;
                kappa[self.colors[a] as usize - 1] += 1;
            }
        }
    }
}

impl fmt::Display for ColoredPermutation {
    /// Cycle notation with a `^color` suffix on each cycle, e.g. `(1,2)^2(3)^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.perm.cycles() {
            write_cycle(f, &cycle)?;
            write!(f, "^{}", self.colors[cycle[0] - 1])?;
        }
        Ok(())
    }
}

/// The set of colored permutations of degree `k` with colors in `{1..m}`,
/// addressable by index so that consumers can split the range.
///
/// Order: permutations in lexicographic image order; for each, the colorings
/// in mixed-radix order over its cycles sorted by smallest element, with the
/// last cycle varying fastest.
#[derive(Clone, Debug)]
pub struct ColoredSpace {
    k: usize,
    m: usize,
    perms: Vec<Permutation>,
    offsets: Vec<usize>,
}

impl ColoredSpace {
    pub fn new(k: usize, m: usize) -> Self {
        let perms = permutations(k);
        let mut offsets = Vec::with_capacity(perms.len() + 1);
        let mut total = 0usize;
        offsets.push(0);
        for p in &perms {
            total += m.pow(p.num_cycles() as u32);
            offsets.push(total);
        }
        ColoredSpace {
            k,
            m,
            perms,
            offsets,
        }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The underlying (uncolored) permutations, in enumeration order.
    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    /// The element at position `index` in enumeration order.
    pub fn get(&self, index: usize) -> Option<ColoredPermutation> {
        if index >= self.len() {
            return None;
        }
        let slot = self.offsets.partition_point(|&o| o <= index) - 1;
        Some(self.coloring(slot, index - self.offsets[slot]))
    }

    fn coloring(&self, slot: usize, mut code: usize) -> ColoredPermutation {
        let perm = &self.perms[slot];
        let (labels, count) = perm.cycle_labels();
        let mut cycle_colors = vec![0u32; count];
        for c in (0..count).rev() {
            cycle_colors[c] = (code % self.m) as u32 + 1;
            code /= self.m;
        }
        let colors = labels.iter().map(|&l| cycle_colors[l]).collect();
        ColoredPermutation {
            perm: perm.clone(),
            colors,
        }
    }

    /// Iterates over the elements with positions in `range`.
    pub fn range(&self, range: Range<usize>) -> impl Iterator<Item = ColoredPermutation> + '_ {
        let end = range.end.min(self.len());
        (range.start..end).map(move |i| self.get(i).unwrap())
    }

    pub fn iter(&self) -> impl Iterator<Item = ColoredPermutation> + '_ {
        (0..self.perms.len()).flat_map(move |slot| {
            let count = self.offsets[slot + 1] - self.offsets[slot];
            (0..count).map(move |code| self.coloring(slot, code))
        })
    }
}

/// Every element of the colored permutation set of degree `k` with `m` colors,
/// exactly once, in [`ColoredSpace`] order.
pub fn enumerate_colored(k: usize, m: usize) -> Vec<ColoredPermutation> {
    ColoredSpace::new(k, m).iter().collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::combinatorics::parse_colored;

    fn falling(n: usize, k: usize) -> usize {
        (0..k).map(|j| n - j).product()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_colored(2, 2).len(), 6);
        assert_eq!(enumerate_colored(2, 1).len(), 2);
        assert_eq!(enumerate_colored(3, 2).len(), 24);
        for k in 1..=6 {
            for m in 1..=3 {
                let all = enumerate_colored(k, m);
                assert_eq!(all.len(), falling(k + m - 1, k), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn enumeration_is_distinct_and_valid() {
        for k in 1..=4 {
            for m in 1..=3 {
                let all = enumerate_colored(k, m);
                let set: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                for a in &all {
                    assert!(a.max_color() as usize <= m);
                    assert!(ColoredPermutation::new(a.perm().clone(), a.colors().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn indexed_access_matches_iteration() {
        let space = ColoredSpace::new(4, 3);
        let all: Vec<_> = space.iter().collect();
        for (i, a) in all.iter().enumerate() {
            assert_eq!(space.get(i).as_ref(), Some(a));
        }
        assert!(space.get(all.len()).is_none());
        let split: Vec<_> = space
            .range(0..50)
            .chain(space.range(50..space.len()))
            .collect();
        assert_eq!(split, all);
    }

    #[test]
    fn enumeration_order_example() {
        let got: Vec<String> = enumerate_colored(2, 2)
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(
            got,
            vec![
                "(1)^1(2)^1",
                "(1)^1(2)^2",
                "(1)^2(2)^1",
                "(1)^2(2)^2",
                "(1,2)^1",
                "(1,2)^2"
            ]
        );
    }

    #[test]
    fn worked_colored_product() {
        let alpha = parse_colored("(1,2,3)^1(4,5)^2(6,7)^3(8)^2").unwrap();
        let v = Permutation::from_cycles(8, &[vec![1, 7], vec![2, 4, 8, 5], vec![3, 6]]).unwrap();
        let beta = alpha.multiply(&v).unwrap();
        assert_eq!(beta.to_string(), "(1,4,2,6)^3(3,7)^3(5,8)^2");
        assert_eq!(beta.kappa_vector(3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn product_is_not_an_action() {
        let alpha = parse_colored("(1)^2(2)^1").unwrap();
        let t = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        let left = alpha.multiply(&t).unwrap().multiply(&t).unwrap();
        let right = alpha.multiply(&t.compose(&t).unwrap()).unwrap();
        assert_eq!(left.to_string(), "(1)^2(2)^2");
        assert_eq!(right.to_string(), "(1)^2(2)^1");
        assert_eq!(alpha.kappa_vector(2).unwrap(), vec![1, 1]);
    }

    #[test]
    fn identity_leaves_colors_alone() {
        for a in enumerate_colored(4, 3) {
            assert_eq!(a.multiply(&Permutation::identity(4)).unwrap(), a);
        }
    }

    #[test]
    fn kappa_examples_and_errors() {
        let id = ColoredPermutation::uniform(Permutation::identity(4), 1);
        assert_eq!(id.kappa_vector(3).unwrap(), vec![4, 0, 0]);
        let a = parse_colored("(1,2)^3").unwrap();
        assert!(matches!(
            a.kappa_vector(2),
            Err(CombinatoricsError::ColorOutOfRange {
                color: 3,
                m: Some(2)
            })
        ));
    }

    #[test]
    fn constancy_is_enforced() {
        let p = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert!(matches!(
            ColoredPermutation::new(p.clone(), vec![1, 2, 1]),
            Err(CombinatoricsError::ColorNotConstantOnCycle { .. })
        ));
        assert!(ColoredPermutation::new(p.clone(), vec![2, 2, 1]).is_ok());
        assert!(ColoredPermutation::new(p, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn max_property_by_brute_force() {
        for k in 1..=5 {
            let perms = permutations(k);
            for m in 1..=3 {
                for alpha in enumerate_colored(k, m) {
                    for v in perms.iter().step_by(7) {
                        let beta = alpha.multiply(v).unwrap();
                        let w = alpha.perm().compose(v).unwrap();
                        assert_eq!(beta.perm(), &w);
                        for tau in w.cycles() {
                            let expected = tau.iter().map(|&a| alpha.color_of(a)).max().unwrap();
                            for &a in &tau {
                                assert_eq!(beta.color_of(a), expected);
                            }
                        }
                    }
                }
            }
        }
    }
}
