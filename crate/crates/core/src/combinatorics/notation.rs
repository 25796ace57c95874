//! Cycle-notation text: `(1,2,3)(4,5)` for permutations and
//! `(1,2,3)^1(4,5)^2` for colored permutations.

use std::str::FromStr;

use super::{ColoredPermutation, CombinatoricsError, Permutation};

struct Cycle {
    points: Vec<usize>,
    color: Option<u32>,
}

fn notation_error(text: &str, reason: impl Into<String>) -> CombinatoricsError {
    CombinatoricsError::Notation {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn parse_number<T: FromStr>(digits: &str, text: &str) -> Result<T, CombinatoricsError> {
    digits
        .trim()
        .parse()
        .map_err(|_| notation_error(text, format!("bad number {digits:?}")))
}

fn parse_cycles(text: &str) -> Result<Vec<Cycle>, CombinatoricsError> {
    let mut rest = text.trim();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| notation_error(text, "expected '('"))?;
        let close = body
            .find(')')
            .ok_or_else(|| notation_error(text, "unclosed cycle"))?;
        let points = body[..close]
            .split(',')
            .map(|t| parse_number::<usize>(t, text))
            .collect::<Result<Vec<_>, _>>()?;
        if points.contains(&0) {
            return Err(notation_error(text, "points are numbered from 1"));
        }
        rest = body[close + 1..].trim_start();
        let mut color = None;
        if let Some(after) = rest.strip_prefix('^') {
            let end = after
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(after.len());
            color = Some(parse_number::<u32>(&after[..end], text)?);
            rest = after[end..].trim_start();
        }
        cycles.push(Cycle { points, color });
    }
    Ok(cycles)
}

/// Parses uncolored cycle notation. The degree is the largest point
/// mentioned unless `degree` is given; unmentioned points are fixed.
pub fn parse_permutation(
    text: &str,
    degree: Option<usize>,
) -> Result<Permutation, CombinatoricsError> {
    let cycles = parse_cycles(text)?;
    if cycles.iter().any(|c| c.color.is_some()) {
        return Err(notation_error(text, "unexpected color suffix"));
    }
    let largest = cycles
        .iter()
        .flat_map(|c| c.points.iter().copied())
        .max()
        .unwrap_or(0);
    let k = degree.unwrap_or(largest);
    let points: Vec<Vec<usize>> = cycles.into_iter().map(|c| c.points).collect();
    Permutation::from_cycles(k, &points)
}

/// Parses colored cycle notation. Every point `1..=k` must appear, and every
/// cycle needs a `^color` suffix.
pub fn parse_colored(text: &str) -> Result<ColoredPermutation, CombinatoricsError> {
    let cycles = parse_cycles(text)?;
    let k: usize = cycles.iter().map(|c| c.points.len()).sum();
    let mut colors = vec![0u32; k];
    let mut point_lists = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        let color = cycle
            .color
            .ok_or_else(|| notation_error(text, "cycle without color suffix"))?;
        for &a in &cycle.points {
            if a > k {
                return Err(notation_error(
                    text,
                    format!("point {a} exceeds degree {k}"),
                ));
            }
            colors[a - 1] = color;
        }
        point_lists.push(cycle.points);
    }
    let perm = Permutation::from_cycles(k, &point_lists)?;
    ColoredPermutation::new(perm, colors)
}

impl FromStr for Permutation {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_permutation(s, None)
    }
}

impl FromStr for ColoredPermutation {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_colored(s)
    }
}
