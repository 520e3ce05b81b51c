//! The six strict inequalities characterizing transversal triangles, in affine
//! and projective form, and the search over the six labelings of a triple.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, TropError};
use crate::geom::Point2;
use crate::plane::ProjPoint;
use crate::scalar::Rational;

/// Assignment of three inputs to the labels `a, b, c`: label `k` takes input `self.0[k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(pub [usize; 3]);

impl Labeling {
    pub const IDENTITY: Labeling = Labeling([0, 1, 2]);

    /// All six labelings in lexicographic order.
    pub const ALL: [Labeling; 6] = [
        Labeling([0, 1, 2]),
        Labeling([0, 2, 1]),
        Labeling([1, 0, 2]),
        Labeling([1, 2, 0]),
        Labeling([2, 0, 1]),
        Labeling([2, 1, 0]),
    ];

    pub fn apply<T: Clone>(&self, inputs: &[T; 3]) -> [T; 3] {
        self.0.map(|i| inputs[i].clone())
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "a=#{} b=#{} c=#{}", a + 1, b + 1, c + 1)
    }
}

/// Outcome of each inequality `lhs < rhs`: `Less` holds strictly, `Equal` is a
/// tie, `Greater` is violated.
pub type InequalityPattern = [Ordering; 6];

fn d(p: &Point2) -> Rational {
    &p.x - &p.y
}

/// `a1<b1, b1<c1, a2<c2, c2<b2, b1-b2<a1-a2, a1-a2<c1-c2` for labeled `(a, b, c)`.
pub fn affine_inequalities(a: &Point2, b: &Point2, c: &Point2) -> InequalityPattern {
    [
        a.x.cmp(&b.x),
        b.x.cmp(&c.x),
        a.y.cmp(&c.y),
        c.y.cmp(&b.y),
        d(b).cmp(&d(a)),
        d(a).cmp(&d(c)),
    ]
}

/// The projective form, evaluated on any representatives of `a, b, c`:
/// `b1-b2<a1-a2<c1-c2`, `a2-a3<c2-c3<b2-b3`, `c3-c1<b3-b1<a3-a1`.
pub fn projective_inequalities(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> InequalityPattern {
    let diff = |p: &[Rational; 3], i: usize, j: usize| &p[i] - &p[j];
    [
        diff(b, 0, 1).cmp(&diff(a, 0, 1)),
        diff(a, 0, 1).cmp(&diff(c, 0, 1)),
        diff(a, 1, 2).cmp(&diff(c, 1, 2)),
        diff(c, 1, 2).cmp(&diff(b, 1, 2)),
        diff(c, 2, 0).cmp(&diff(b, 2, 0)),
        diff(b, 2, 0).cmp(&diff(a, 2, 0)),
    ]
}

/// Number of inequalities that do not hold strictly.
pub fn strict_violations(pattern: &InequalityPattern) -> usize {
    pattern.iter().filter(|o| **o != Ordering::Less).count()
}

fn distinct<T: PartialEq>(p: &[T; 3]) -> Result<()> {
    if p[0] == p[1] || p[1] == p[2] || p[0] == p[2] {
        Err(TropError::RepeatedPoints)
    } else {
        Ok(())
    }
}

/// The labeling of three classical points satisfying all six affine
/// inequalities, with the labeled triple; absent when none does.
pub fn thm1_relabel(p: &Point2, q: &Point2, r: &Point2) -> Result<Option<(Labeling, [Point2; 3])>> {
    let inputs = [p.clone(), q.clone(), r.clone()];
    distinct(&inputs)?;
    Ok(Labeling::ALL.iter().find_map(|l| {
        let [a, b, c] = l.apply(&inputs);
        (strict_violations(&affine_inequalities(&a, &b, &c)) == 0).then_some((*l, [a, b, c]))
    }))
}

/// The labeling satisfying the six projective inequalities, if any.
pub fn thm2_check(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<Option<Labeling>> {
    let inputs = [a.require_interior()?, b.require_interior()?, c.require_interior()?];
    distinct(&[a, b, c])?;
    Ok(Labeling::ALL.iter().copied().find(|l| {
        let [a, b, c] = l.apply(&inputs);
        strict_violations(&projective_inequalities(&a, &b, &c)) == 0
    }))
}

/// Labeling with the fewest strictly-failing affine inequalities; ties go to
/// the lexicographically first labeling.
pub fn best_labeling(p: &Point2, q: &Point2, r: &Point2) -> (Labeling, usize) {
    let inputs = [p.clone(), q.clone(), r.clone()];
    Labeling::ALL
        .iter()
        .map(|l| {
            let [a, b, c] = l.apply(&inputs);
            (*l, strict_violations(&affine_inequalities(&a, &b, &c)))
        })
        .min_by_key(|(l, v)| (*v, *l))
        .expect("six labelings")
}
