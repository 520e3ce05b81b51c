//! Improper good triangles: which hexagon sides collapse, and which collapse
//! patterns are realized by good triangles.

use std::fmt;

use num_traits::Zero;

use crate::error::{Result, TropError};
use crate::geom::Point2;
use crate::plane::{Chart, ProjPoint};
use crate::scalar::{rat, Rational};
use crate::triangle::hexagon::{hexagon_with_labels, triangle_from_lengths};
use crate::triangle::{classify, Labeling, TriangleClass};

/// Set of hexagon sides (1..=6) of lattice length zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CollapsePattern(u8);

/// Side pairs whose collapse merges two labeled vertices: `{1,2}` gives
/// `a = b`, `{3,4}` gives `b = c`, `{5,6}` gives `c = a`.
pub const MERGING_PAIRS: [(u8, u8, char, char); 3] = [(1, 2, 'a', 'b'), (3, 4, 'b', 'c'), (5, 6, 'c', 'a')];

impl CollapsePattern {
    pub const EMPTY: CollapsePattern = CollapsePattern(0);

    pub fn from_sides(sides: &[u8]) -> Result<CollapsePattern> {
        let mut bits = 0u8;
        for &s in sides {
            if !(1..=6).contains(&s) {
                return Err(TropError::InvalidParams(format!("side index {s} outside 1..=6")));
            }
            bits |= 1 << (s - 1);
        }
        Ok(CollapsePattern(bits))
    }

    fn from_bits(bits: u8) -> CollapsePattern {
        CollapsePattern(bits & 0b11_1111)
    }

    /// Sides `j` whose endpoints `six[j-1]`, `six[j]` coincide.
    pub fn of_labeled(six: &[ProjPoint; 6]) -> CollapsePattern {
        let bits = (0..6).filter(|&j| six[j] == six[(j + 1) % 6]).fold(0u8, |acc, j| acc | 1 << j);
        CollapsePattern(bits)
    }

    /// Pattern of zero entries in a length tuple.
    pub fn of_lengths(lengths: &[Rational; 6]) -> CollapsePattern {
        let bits = (0..6).filter(|&j| lengths[j].is_zero()).fold(0u8, |acc, j| acc | 1 << j);
        CollapsePattern(bits)
    }

    pub fn contains(&self, side: u8) -> bool {
        (1..=6).contains(&side) && self.0 & (1 << (side - 1)) != 0
    }

    pub fn sides(&self) -> Vec<u8> {
        (1..=6).filter(|&s| self.contains(s)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// The first pair of collapsed sides that identifies two of `a, b, c`.
    pub fn merges_vertices(&self) -> Option<(u8, u8, char, char)> {
        MERGING_PAIRS.into_iter().find(|(s, t, _, _)| self.contains(*s) && self.contains(*t))
    }

    /// Smallest superset closed under the length relations
    /// `l_j + l_{j+1} = l_{j+3} + l_{j+4}` on nonnegative lengths: two
    /// consecutive zero sides force the opposite two to vanish.
    pub fn forced_closure(&self) -> CollapsePattern {
        let mut bits = self.0;
        loop {
            let mut next = bits;
            for j in 0..6 {
                let pair = (1u8 << j) | (1 << ((j + 1) % 6));
                if bits & pair == pair {
                    next |= (1 << ((j + 3) % 6)) | (1 << ((j + 4) % 6));
                }
            }
            if next == bits {
                return CollapsePattern(bits);
            }
            bits = next;
        }
    }

    /// Size of the symmetric difference.
    pub fn distance(&self, other: &CollapsePattern) -> u32 {
        (self.0 ^ other.0).count_ones()
    }
}

impl fmt::Display for CollapsePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sides().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Collapsed sides of a good triangle in the given labeling; empty for
/// transversal triangles.
pub fn collapse_pattern(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<CollapsePattern> {
    match classify(a, b, c) {
        TriangleClass::Transversal { .. } => Ok(CollapsePattern::EMPTY),
        TriangleClass::GoodImproper { pattern } => Ok(pattern),
        other => Err(TropError::NotGood(other.to_string())),
    }
}

/// A realized collapse pattern with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImproperType {
    pub pattern: CollapsePattern,
    pub lengths: [Rational; 6],
    pub triangle: [ProjPoint; 3],
}

/// Why a candidate pattern is not realized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The length relations force `closure` to vanish, which contains the
    /// sides `merged` and so identifies two labeled vertices.
    ForcedMerge {
        closure: CollapsePattern,
        merged: (u8, u8),
        vertices: (char, char),
    },
    /// Lengths exist but the walked triangle is not good with this pattern.
    NotGood { lengths: Box<[Rational; 6]>, class: String },
    /// No nonnegative lengths with exactly this zero set were found.
    NoLengths,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::ForcedMerge {
                closure,
                merged,
                vertices,
            } => write!(
                f,
                "forced zero set {closure} collapses sides {} and {}, merging {} and {}",
                merged.0, merged.1, vertices.0, vertices.1
            ),
            Rejection::NotGood { lengths, class } => {
                let l: Vec<String> = lengths.iter().map(ToString::to_string).collect();
                write!(f, "witness lengths ({}) classify as {class}", l.join(","))
            }
            Rejection::NoLengths => f.write_str("no lengths with this zero set"),
        }
    }
}

/// Result of the exhaustive search over nonempty collapse patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImproperCensus {
    pub accepted: Vec<ImproperType>,
    pub rejected: Vec<(CollapsePattern, Rejection)>,
    /// Indices into `accepted` of patterns differing in exactly one side.
    pub edges: Vec<(usize, usize)>,
    /// Number of types asserted in the literature.
    pub claimed_count: usize,
}

impl ImproperCensus {
    pub fn count(&self) -> usize {
        self.accepted.len()
    }

    pub fn find(&self, pattern: &CollapsePattern) -> Option<&ImproperType> {
        self.accepted.iter().find(|t| t.pattern == *pattern)
    }

    /// Accepted patterns with exactly one neighbour in the graph.
    pub fn leaves(&self) -> Vec<CollapsePattern> {
        (0..self.accepted.len())
            .filter(|&i| self.edges.iter().filter(|(s, t)| *s == i || *t == i).count() == 1)
            .map(|i| self.accepted[i].pattern)
            .collect()
    }
}

/// Lengths `(l1, l2, l3, l1+l2-l5, l5, l2+l3-l5)` with entries from a small
/// grid, first in enumeration order whose zero set is exactly `pattern`.
fn lengths_with_zero_set(pattern: &CollapsePattern) -> Option<[Rational; 6]> {
    let range = 0..=3i64;
    for l1 in range.clone() {
        for l2 in range.clone() {
            for l3 in range.clone() {
                for l5 in range.clone() {
                    let l = [l1, l2, l3, l1 + l2 - l5, l5, l2 + l3 - l5];
                    if l.iter().any(|x| *x < 0) {
                        continue;
                    }
                    let lengths = l.map(rat);
                    if CollapsePattern::of_lengths(&lengths) == *pattern {
                        return Some(lengths);
                    }
                }
            }
        }
    }
    None
}

/// Check one candidate: length feasibility, then goodness of the walked triangle
/// and agreement of its collapse pattern and hexagon lengths.
pub fn realize(pattern: &CollapsePattern) -> std::result::Result<ImproperType, Rejection> {
    let closure = pattern.forced_closure();
    if let Some((s, t, u, v)) = closure.merges_vertices() {
        return Err(Rejection::ForcedMerge {
            closure,
            merged: (s, t),
            vertices: (u, v),
        });
    }
    let lengths = lengths_with_zero_set(pattern).ok_or(Rejection::NoLengths)?;
    let triangle = triangle_from_lengths(&lengths, &Point2::ints(0, 0));
    let [a, b, c] = &triangle;
    let class = classify(a, b, c);
    let agrees = match &class {
        TriangleClass::GoodImproper { pattern: got } if got == pattern => {
            hexagon_with_labels(a, b, c, Labeling::IDENTITY, Chart::Z).is_ok_and(|h| h.lengths == lengths)
        }
        _ => false,
    };
    if agrees {
        Ok(ImproperType {
            pattern: *pattern,
            lengths,
            triangle,
        })
    } else {
        Err(Rejection::NotGood {
            lengths: Box::new(lengths),
            class: class.to_string(),
        })
    }
}

/// Try every nonempty subset of the six sides.
pub fn enumerate_improper_types() -> ImproperCensus {
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for bits in 1u8..64 {
        let pattern = CollapsePattern::from_bits(bits);
        match realize(&pattern) {
            Ok(t) => accepted.push(t),
            Err(r) => rejected.push((pattern, r)),
        }
    }
    accepted.sort_by_key(|t: &ImproperType| (t.pattern.len(), t.pattern.sides()));
    let mut edges = Vec::new();
    for i in 0..accepted.len() {
        for j in i + 1..accepted.len() {
            if accepted[i].pattern.distance(&accepted[j].pattern) == 1 {
                edges.push((i, j));
            }
        }
    }
    ImproperCensus {
        accepted,
        rejected,
        edges,
        claimed_count: 14,
    }
}
