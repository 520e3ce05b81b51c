//! Tropical triangles in the plane.
//!
//! A triple of interior points is *good* when the stable intersections of its
//! sides give back the vertices, and *proper* when the vertices and the three
//! side vertices `-(a(x)b), -(b(x)c), -(c(x)a)` are six distinct points. Good and
//! proper triangles are exactly the transversal ones, which are characterized
//! by six strict inequalities (see [`labeling`]) and correspond to classical
//! hexagons with sides of slope `inf, 1, 0` (see [`hexagon`]).

pub mod hexagon;
pub mod improper;
pub mod labeling;
pub mod span;

use std::fmt;

use crate::error::{Result, TropError};
use crate::plane::{collinear, cross_product, points_transversal, ProjPoint};

pub use hexagon::{hexagon_of, params_complete, triangle_from_params, HexParams, Hexagon};
pub use improper::{collapse_pattern, enumerate_improper_types, CollapsePattern, ImproperCensus};
pub use labeling::{best_labeling, thm1_relabel, thm2_check, Labeling};
pub use span::{independent, span_membership, SpanResult};

/// Classification of an arbitrary triple of projective points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleClass {
    /// Good and proper; `relabeling` satisfies the six strict inequalities.
    Transversal { relabeling: Labeling },
    /// Good but not proper; the pattern is read in the input labeling.
    GoodImproper { pattern: CollapsePattern },
    NotGood,
    Collinear,
    /// Two inputs coincide or an input is a boundary point.
    DegeneratePair,
}

impl TriangleClass {
    pub fn name(&self) -> &'static str {
        match self {
            TriangleClass::Transversal { .. } => "Transversal",
            TriangleClass::GoodImproper { .. } => "GoodImproper",
            TriangleClass::NotGood => "NotGood",
            TriangleClass::Collinear => "Collinear",
            TriangleClass::DegeneratePair => "DegeneratePair",
        }
    }

    pub fn is_good(&self) -> bool {
        matches!(self, TriangleClass::Transversal { .. } | TriangleClass::GoodImproper { .. })
    }
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleClass::GoodImproper { pattern } => write!(f, "GoodImproper {pattern}"),
            other => f.write_str(other.name()),
        }
    }
}

/// The six points `a, -(a(x)b), b, -(b(x)c), c, -(c(x)a)` in the given labeling.
pub fn six_points(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<[ProjPoint; 6]> {
    Ok([
        a.clone(),
        cross_product(a, b)?.neg()?,
        b.clone(),
        cross_product(b, c)?.neg()?,
        c.clone(),
        cross_product(c, a)?.neg()?,
    ])
}

/// `(c(x)a)(x)(a(x)b)`, the stable intersection of the sides through `a`.
pub fn corner(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<ProjPoint> {
    cross_product(&cross_product(c, a)?, &cross_product(a, b)?)
}

fn check_triple(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<()> {
    for p in [a, b, c] {
        p.require_interior()?;
    }
    if a == b || b == c || a == c {
        return Err(TropError::RepeatedPoints);
    }
    Ok(())
}

/// Stable intersections of the sides return the vertices.
pub fn is_good(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<bool> {
    check_triple(a, b, c)?;
    if collinear(a, b, c)? {
        return Err(TropError::Collinear);
    }
    Ok(corner(a, b, c)? == *a && corner(b, c, a)? == *b && corner(c, a, b)? == *c)
}

/// The vertices and the side vertices are six distinct points.
pub fn is_proper(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<bool> {
    check_triple(a, b, c)?;
    let six = six_points(a, b, c)?;
    Ok((0..6).all(|i| (i + 1..6).all(|j| six[i] != six[j])))
}

/// Direct check: vertices pairwise transversal and sides pairwise transversal.
pub fn is_pairwise_transversal(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<bool> {
    check_triple(a, b, c)?;
    for (p, q) in [(a, b), (b, c), (c, a)] {
        if !points_transversal(p, q)? {
            return Ok(false);
        }
    }
    let sides = [cross_product(a, b)?, cross_product(b, c)?, cross_product(c, a)?];
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        if sides[i] == sides[j] || !points_transversal(&sides[i], &sides[j])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Total classification of a triple.
pub fn classify(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> TriangleClass {
    if check_triple(a, b, c).is_err() {
        return TriangleClass::DegeneratePair;
    }
    if collinear(a, b, c).expect("checked triple") {
        return TriangleClass::Collinear;
    }
    let good = is_good(a, b, c).expect("checked triple");
    let proper = is_proper(a, b, c).expect("checked triple");
    match (good, proper) {
        (true, true) => {
            let relabeling = thm2_check(a, b, c)
                .expect("checked triple")
                .expect("good and proper triangles satisfy the six inequalities");
            assert!(
                is_pairwise_transversal(a, b, c).expect("checked triple"),
                "good and proper triangle {a} {b} {c} must be pairwise transversal"
            );
            TriangleClass::Transversal { relabeling }
        }
        (true, false) => TriangleClass::GoodImproper {
            pattern: CollapsePattern::of_labeled(&six_points(a, b, c).expect("interior triple")),
        },
        (false, _) => TriangleClass::NotGood,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TropScalar;

    fn p(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    fn ex1() -> [ProjPoint; 3] {
        [p([-1, 1, 0]), p([0, 0, 0]), p([-1, 2, 0])]
    }

    fn sample_triangle() -> [ProjPoint; 3] {
        [p([-3, -1, 0]), p([0, 0, 0]), p([-1, 2, 0])]
    }

    #[test]
    fn goodness_examples() {
        let [a, b, c] = sample_triangle();
        assert_eq!(is_good(&a, &b, &c), Ok(true));
        let [a, b, c] = ex1();
        assert_eq!(is_good(&a, &b, &c), Ok(false));
        assert_eq!(corner(&b, &c, &a).unwrap(), p([2, 3, 2]));
        assert_eq!(is_good(&p([0, 0, 0]), &p([1, 1, 0]), &p([0, 1, 0])), Ok(true));
        assert_eq!(
            is_good(&p([-5, 0, 0]), &p([0, -7, 0]), &p([0, 0, 0])),
            Err(TropError::Collinear)
        );
    }

    #[test]
    fn properness_examples() {
        let [a, b, c] = sample_triangle();
        assert_eq!(is_proper(&a, &b, &c), Ok(true));
        assert_eq!(is_proper(&p([0, 0, 0]), &p([1, 1, 0]), &p([0, 1, 0])), Ok(false));
        let [a, b, c] = ex1();
        assert_eq!(is_proper(&a, &b, &c), Ok(false));
        assert_eq!(cross_product(&c, &a).unwrap().neg().unwrap(), c);
        let boundary = ProjPoint::new([TropScalar::NegInf, TropScalar::int(0), TropScalar::int(0)]).unwrap();
        assert!(matches!(is_proper(&boundary, &b, &c), Err(TropError::BoundaryPoint(_))));
    }

    #[test]
    fn classify_examples() {
        let [a, b, c] = sample_triangle();
        assert_eq!(
            classify(&a, &b, &c),
            TriangleClass::Transversal {
                relabeling: Labeling([0, 2, 1])
            }
        );
        let [a, b, c] = ex1();
        assert_eq!(classify(&a, &b, &c), TriangleClass::NotGood);
        assert_eq!(
            classify(&p([0, 0, 0]), &p([1, 1, 0]), &p([0, 1, 0])),
            TriangleClass::GoodImproper {
                pattern: CollapsePattern::from_sides(&[1, 3, 5]).unwrap()
            }
        );
        assert_eq!(
            classify(&p([0, 0, 0]), &p([1, 1, 0]), &p([1, 0, 0])).name(),
            "GoodImproper"
        );
        assert_eq!(classify(&p([-5, 0, 0]), &p([0, -7, 0]), &p([0, 0, 0])), TriangleClass::Collinear);
        assert_eq!(classify(&a, &a, &c), TriangleClass::DegeneratePair);
        let boundary = ProjPoint::new([TropScalar::NegInf, TropScalar::int(0), TropScalar::int(0)]).unwrap();
        assert_eq!(classify(&boundary, &b, &c), TriangleClass::DegeneratePair);
    }

    #[test]
    fn pairwise_transversal_examples() {
        let [a, b, c] = sample_triangle();
        assert_eq!(is_pairwise_transversal(&a, &b, &c), Ok(true));
        let [a, b, c] = ex1();
        assert_eq!(is_pairwise_transversal(&a, &b, &c), Ok(false));
    }
}
