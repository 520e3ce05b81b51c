//! Exact planar geometry on rational points: convex polygons, areas and clipping.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::scalar::{rat, Rational};

/// A point of the classical plane with rational coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point2::new(rat(x), rat(y))
    }

    pub fn origin() -> Self {
        Point2::ints(0, 0)
    }
}

impl Add for &Point2 {
    type Output = Point2;
    fn add(self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &Point2 {
    type Output = Point2;
    fn sub(self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Neg for &Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// `(b - a) x (c - a)`: positive for a left turn.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let u = b - a;
    let v = c - a;
    &u.x * &v.y - &u.y * &v.x
}

/// Shoelace signed area, positive for counterclockwise vertex order.
pub fn signed_area(poly: &[Point2]) -> Rational {
    let n = poly.len();
    if n < 3 {
        return Rational::zero();
    }
    let twice: Rational = (0..n)
        .map(|i| {
            let p = &poly[i];
            let q = &poly[(i + 1) % n];
            &p.x * &q.y - &q.x * &p.y
        })
        .fold(Rational::zero(), |acc, t| acc + t);
    twice / rat(2)
}

pub fn area(poly: &[Point2]) -> Rational {
    signed_area(poly).abs()
}

/// Drop consecutive duplicates (cyclically).
pub fn dedup_cyclic(poly: &[Point2]) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(poly.len());
    for p in poly {
        if out.last() != Some(p) {
            out.push(p.clone());
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Closed containment test for a convex polygon given in either orientation.
/// Zero-length edges are ignored.
pub fn in_convex_polygon(poly: &[Point2], p: &Point2) -> bool {
    let poly = dedup_cyclic(poly);
    match poly.len() {
        0 => false,
        1 => poly[0] == *p,
        2 => on_segment(&poly[0], &poly[1], p),
        n => {
            let ccw = signed_area(&poly).is_positive();
            (0..n).all(|i| {
                let o = orient(&poly[i], &poly[(i + 1) % n], p);
                if ccw {
                    !o.is_negative()
                } else {
                    !o.is_positive()
                }
            })
        }
    }
}

/// `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let within = |lo: &Rational, hi: &Rational, v: &Rational| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

/// Sutherland-Hodgman clipping of `subject` by the convex polygon `clip`.
///
/// Half-planes are closed, so polygons that only touch produce a degenerate
/// (zero-area) result describing the contact set.
pub fn clip_convex(subject: &[Point2], clip: &[Point2]) -> Vec<Point2> {
    let clip = dedup_cyclic(clip);
    let ccw = signed_area(&clip).is_positive();
    let inside = |a: &Point2, b: &Point2, p: &Point2| {
        let o = orient(a, b, p);
        if ccw {
            !o.is_negative()
        } else {
            !o.is_positive()
        }
    };
    let mut output: Vec<Point2> = subject.to_vec();
    let n = clip.len();
    for i in 0..n {
        if output.is_empty() {
            break;
        }
        let a = &clip[i];
        let b = &clip[(i + 1) % n];
        let input = std::mem::take(&mut output);
        let m = input.len();
        for j in 0..m {
            let cur = &input[j];
            let prev = &input[(j + m - 1) % m];
            let cur_in = inside(a, b, cur);
            let prev_in = inside(a, b, prev);
            if cur_in {
                if !prev_in {
                    output.push(line_intersection(prev, cur, a, b));
                }
                output.push(cur.clone());
            } else if prev_in {
                output.push(line_intersection(prev, cur, a, b));
            }
        }
        output = dedup_cyclic(&output);
    }
    output
}

/// Intersection of segment `p q` with the supporting line of `a b`.
/// Callers guarantee `p` and `q` lie on strictly different sides or one on the line.
fn line_intersection(p: &Point2, q: &Point2, a: &Point2, b: &Point2) -> Point2 {
    let op = orient(a, b, p);
    let oq = orient(a, b, q);
    let t = &op / &(&op - &oq);
    let d = q - p;
    Point2::new(&p.x + &t * &d.x, &p.y + &t * &d.y)
}

/// Contact between two convex polygons with disjoint interiors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    Point(Point2),
    Segment(Point2, Point2),
    /// The interiors overlap with the given positive area.
    Overlap(Rational),
}

/// Classify how two convex polygons meet.
pub fn contact(p: &[Point2], q: &[Point2]) -> Contact {
    let inter = clip_convex(p, q);
    let a = area(&inter);
    if a.is_positive() {
        return Contact::Overlap(a);
    }
    let mut pts = inter;
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 => Contact::Disjoint,
        1 => Contact::Point(pts.pop().unwrap()),
        _ => {
            // Collinear: the extremes along the sorted order are the endpoints.
            let first = pts.first().unwrap().clone();
            let last = pts.last().unwrap().clone();
            Contact::Segment(first, last)
        }
    }
}
