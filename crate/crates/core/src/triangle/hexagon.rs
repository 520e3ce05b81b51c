//! The classical hexagon of a good triangle and the lattice-length parameter space.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Result, TropError};
use crate::geom::{signed_area, Point2};
use crate::plane::{chart_embed, AffinePoint, Chart, ProjPoint};
use crate::scalar::{abs, Rational};
use crate::triangle::{classify, six_points, Labeling, TriangleClass};

/// Hexagon with vertices `a, -(a(x)b), b, -(b(x)c), c, -(c(x)a)` in some chart.
///
/// Side `j` (1-based) joins vertex `j` to vertex `j + 1` cyclically. For a
/// transversal triangle in its six-inequality labeling the hexagon is listed
/// clockwise and, in the chart `Z = 0`, its sides have slopes `inf, 1, 0, inf, 1, 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hexagon {
    pub chart: Chart,
    pub labeling: Labeling,
    pub vertices: [Point2; 6],
    pub lengths: [Rational; 6],
}

impl Hexagon {
    /// Build from six vertices; every side must run along `(0,1)`, `(1,1)` or `(1,0)`.
    pub fn from_vertices(chart: Chart, labeling: Labeling, vertices: [Point2; 6]) -> Result<Hexagon> {
        let mut lengths: [Rational; 6] = Default::default();
        for j in 0..6 {
            lengths[j] = lattice_length(&vertices[j], &vertices[(j + 1) % 6]).ok_or_else(|| {
                TropError::InvalidParams(format!(
                    "side {} from {} to {} is not along a lattice direction (0,1), (1,1), (1,0)",
                    j + 1,
                    vertices[j],
                    vertices[(j + 1) % 6]
                ))
            })?;
        }
        Ok(Hexagon {
            chart,
            labeling,
            vertices,
            lengths,
        })
    }

    /// `l_j + l_{j+1} = l_{j+3} + l_{j+4}` for every `j`.
    pub fn closes(&self) -> bool {
        let l = &self.lengths;
        (0..6).all(|j| &l[j] + &l[(j + 1) % 6] == &l[(j + 3) % 6] + &l[(j + 4) % 6])
    }

    /// Vertices with repeated neighbours removed.
    pub fn polygon(&self) -> Vec<Point2> {
        crate::geom::dedup_cyclic(&self.vertices)
    }

    pub fn area(&self) -> Rational {
        signed_area(&self.vertices).abs()
    }

    pub fn is_clockwise(&self) -> bool {
        signed_area(&self.vertices).is_negative()
    }

    /// Sides of zero length, 1-based.
    pub fn collapsed_sides(&self) -> Vec<u8> {
        (0..6).filter(|&j| self.lengths[j].is_zero()).map(|j| j as u8 + 1).collect()
    }

    /// Labeled triangle vertices `a, b, c` (vertices 1, 3, 5).
    pub fn triangle_vertices(&self) -> [&Point2; 3] {
        [&self.vertices[0], &self.vertices[2], &self.vertices[4]]
    }

    pub fn translated(&self, t: &Point2) -> Hexagon {
        Hexagon {
            chart: self.chart,
            labeling: self.labeling,
            vertices: self.vertices.clone().map(|v| &v + t),
            lengths: self.lengths.clone(),
        }
    }
}

/// Lattice length of a segment along a primitive direction `(0,1)`, `(1,1)` or `(1,0)`.
pub fn lattice_length(p: &Point2, q: &Point2) -> Option<Rational> {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    if dx.is_zero() {
        Some(abs(&dy))
    } else if dy.is_zero() || dx == dy {
        Some(abs(&dx))
    } else {
        None
    }
}

/// Hexagon of the labeled triple `(a, b, c)` without any relabeling.
pub fn hexagon_with_labels(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    labeling: Labeling,
    chart: Chart,
) -> Result<Hexagon> {
    let six = six_points(a, b, c)?;
    let vertices = six.map(|p| p.to_point2(chart).expect("interior points"));
    Hexagon::from_vertices(chart, labeling, vertices)
}

/// Hexagon of a good triangle.
///
/// Transversal triples are relabeled to satisfy the six strict inequalities, so
/// their hexagon is clockwise with all lengths positive. Improper triples keep
/// the input labeling, matching the collapse pattern reported by [`classify`].
pub fn hexagon_of(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, chart: Chart) -> Result<Hexagon> {
    let inputs = [a.clone(), b.clone(), c.clone()];
    let labeling = match classify(a, b, c) {
        TriangleClass::Transversal { relabeling } => relabeling,
        TriangleClass::GoodImproper { .. } => Labeling::IDENTITY,
        other => return Err(TropError::NotGood(other.to_string())),
    };
    let [a, b, c] = labeling.apply(&inputs);
    hexagon_with_labels(&a, &b, &c, labeling, chart)
}

/// Six positive lattice lengths of a transversal triangle's hexagon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexParams {
    lengths: [Rational; 6],
}

impl HexParams {
    /// Validate positivity and the closure relations `l1+l2 = l4+l5`, `l2+l3 = l5+l6`.
    pub fn new(lengths: [Rational; 6]) -> Result<HexParams> {
        if let Some(j) = lengths.iter().position(|l| !l.is_positive()) {
            return Err(TropError::InvalidParams(format!("l{} = {} is not positive", j + 1, lengths[j])));
        }
        let l = &lengths;
        if &l[0] + &l[1] != &l[3] + &l[4] {
            return Err(TropError::InvalidParams("l1 + l2 != l4 + l5".into()));
        }
        if &l[1] + &l[2] != &l[4] + &l[5] {
            return Err(TropError::InvalidParams("l2 + l3 != l5 + l6".into()));
        }
        Ok(HexParams { lengths })
    }

    pub fn from_ints(l: [i64; 6]) -> Result<HexParams> {
        HexParams::new(l.map(crate::scalar::rat))
    }

    pub fn lengths(&self) -> &[Rational; 6] {
        &self.lengths
    }

    /// `l1 = l4`, `l2 = l5`, `l3 = l6`.
    pub fn is_centrally_symmetric(&self) -> bool {
        let l = &self.lengths;
        l[0] == l[3] && l[1] == l[4] && l[2] == l[5]
    }

    /// Equality up to adding a common constant to all six lengths.
    pub fn projectively_equal(&self, other: &HexParams) -> bool {
        let shift = &other.lengths[0] - &self.lengths[0];
        self.lengths.iter().zip(&other.lengths).all(|(x, y)| y - x == shift)
    }
}

impl fmt::Display for HexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Complete `l1, l2, l3, l5` to a parameter tuple: `l4 = l1+l2-l5`, `l6 = l2+l3-l5`.
pub fn params_complete(l1: &Rational, l2: &Rational, l3: &Rational, l5: &Rational) -> Result<HexParams> {
    for (name, v) in [("l1", l1), ("l2", l2), ("l3", l3), ("l5", l5)] {
        if !v.is_positive() {
            return Err(TropError::InvalidParams(format!("{name} = {v} is not positive")));
        }
    }
    let bound = std::cmp::min(l1 + l2, l2 + l3);
    if *l5 >= bound {
        return Err(TropError::InvalidParams(format!(
            "l5 = {l5} must be below min(l1+l2, l2+l3) = {bound}"
        )));
    }
    HexParams::new([
        l1.clone(),
        l2.clone(),
        l3.clone(),
        l1 + l2 - l5,
        l5.clone(),
        l2 + l3 - l5,
    ])
}

/// Clockwise walk from `base`: up `l1`, diagonal `l2`, right `l3`, down `l4`,
/// back diagonal `l5`, left `l6`. Zero lengths are allowed.
pub fn walk(lengths: &[Rational; 6], base: &Point2) -> [Point2; 6] {
    let z = Rational::zero();
    let steps = [
        (z.clone(), lengths[0].clone()),
        (lengths[1].clone(), lengths[1].clone()),
        (lengths[2].clone(), z.clone()),
        (z.clone(), -lengths[3].clone()),
        (-lengths[4].clone(), -lengths[4].clone()),
    ];
    let mut out: [Point2; 6] = Default::default();
    out[0] = base.clone();
    for (i, (dx, dy)) in steps.into_iter().enumerate() {
        out[i + 1] = &out[i] + &Point2::new(dx, dy);
    }
    out
}

/// Triangle whose hexagon has the given lengths, with vertex `a` at `base`.
///
/// `base` is read in `chart`; the walk itself happens in `Z = 0`, so the
/// lattice lengths come back unchanged in any chart.
pub fn triangle_from_params(params: &HexParams, base: &AffinePoint, chart: Chart) -> Result<[ProjPoint; 3]> {
    let base = chart_embed(chart, base);
    let base_z = base
        .to_point2(Chart::Z)
        .ok_or_else(|| TropError::BoundaryPoint(base.to_string()))?;
    Ok(triangle_from_lengths(params.lengths(), &base_z))
}

/// Vertices 1, 3, 5 of the walk, as projective points.
pub fn triangle_from_lengths(lengths: &[Rational; 6], base: &Point2) -> [ProjPoint; 3] {
    let w = walk(lengths, base);
    [
        ProjPoint::from_point2(&w[0]),
        ProjPoint::from_point2(&w[2]),
        ProjPoint::from_point2(&w[4]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use crate::triangle::labeling::thm1_relabel;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::ints(x, y)
    }

    fn p(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    fn ints(v: [i64; 6]) -> [Rational; 6] {
        v.map(rat)
    }

    #[test]
    fn transversal_hexagon_lengths() {
        let h = hexagon_of(&p([-3, -1, 0]), &p([0, 0, 0]), &p([-1, 2, 0]), Chart::Z).unwrap();
        assert_eq!(
            h.vertices,
            [pt(-3, -1), pt(-3, 0), pt(-1, 2), pt(0, 2), pt(0, 0), pt(-1, -1)]
        );
        assert_eq!(h.lengths, ints([1, 2, 1, 2, 1, 2]));
        assert!(h.is_clockwise());
        assert!(h.closes());
        // The closed-form side vertices in the six-inequality labeling.
        let (_, [a, b, c]) = thm1_relabel(&pt(-3, -1), &pt(0, 0), &pt(-1, 2)).unwrap().unwrap();
        assert_eq!(h.vertices[1], Point2::new(a.x.clone(), &a.x + &b.y - &b.x));
        assert_eq!(h.vertices[3], Point2::new(c.x.clone(), b.y.clone()));
        assert_eq!(h.vertices[5], Point2::new(&a.y + &c.x - &c.y, a.y.clone()));
    }

    #[test]
    fn lengths_do_not_depend_on_chart() {
        let z = hexagon_of(&p([-3, -1, 0]), &p([0, 0, 0]), &p([-1, 2, 0]), Chart::Z).unwrap();
        for chart in [Chart::X, Chart::Y] {
            let h = hexagon_of(&p([-3, -1, 0]), &p([0, 0, 0]), &p([-1, 2, 0]), chart).unwrap();
            assert_eq!(h.lengths, z.lengths);
            assert_eq!(h.area(), z.area());
        }
    }

    #[test]
    fn improper_hexagon_keeps_input_labels() {
        let h = hexagon_of(&p([0, 0, 0]), &p([1, 1, 0]), &p([0, 1, 0]), Chart::Z).unwrap();
        assert_eq!(h.collapsed_sides(), vec![1, 3, 5]);
        assert_eq!(h.lengths, ints([0, 1, 0, 1, 0, 1]));
        assert!(h.closes());
        assert!(matches!(
            hexagon_of(&p([-1, 1, 0]), &p([0, 0, 0]), &p([-1, 2, 0]), Chart::Z),
            Err(TropError::NotGood(_))
        ));
    }

    #[test]
    fn completion_examples() {
        let done = params_complete(&rat(1), &rat(2), &rat(1), &rat(1)).unwrap();
        assert_eq!(done.lengths(), &ints([1, 2, 1, 2, 1, 2]));
        assert!(params_complete(&rat(1), &rat(1), &rat(1), &rat(3)).is_err());
        assert!(params_complete(&rat(1), &rat(1), &rat(1), &rat(2)).is_err());
        let regular = params_complete(&rat(1), &rat(1), &rat(1), &rat(1)).unwrap();
        assert_eq!(regular.lengths(), &ints([1, 1, 1, 1, 1, 1]));
        assert!(params_complete(&rat(0), &rat(1), &rat(1), &rat(1)).is_err());
        assert!(params_complete(&rat(1), &rat(-1), &rat(1), &rat(1)).is_err());
    }

    #[test]
    fn validation_rejects_broken_relations() {
        assert!(HexParams::from_ints([1, 2, 1, 2, 1, 2]).is_ok());
        assert!(HexParams::from_ints([1, 2, 1, 2, 2, 2]).is_err());
        assert!(HexParams::from_ints([1, 1, 1, 1, 1, 0]).is_err());
    }

    #[test]
    fn projective_class_equality() {
        let a = HexParams::from_ints([1, 2, 1, 2, 1, 2]).unwrap();
        let b = HexParams::from_ints([4, 5, 4, 5, 4, 5]).unwrap();
        let c = HexParams::from_ints([1, 1, 1, 1, 1, 1]).unwrap();
        assert!(a.projectively_equal(&b));
        assert!(!a.projectively_equal(&c));
    }

    #[test]
    fn from_params_examples() {
        let params = HexParams::from_ints([1, 2, 1, 2, 1, 2]).unwrap();
        let tri = triangle_from_params(&params, &AffinePoint::ints(-3, -1), Chart::Z).unwrap();
        assert_eq!(tri, [p([-3, -1, 0]), p([-1, 2, 0]), p([0, 0, 0])]);
        let unit = HexParams::from_ints([1, 1, 1, 1, 1, 1]).unwrap();
        let tri = triangle_from_params(&unit, &AffinePoint::ints(0, 0), Chart::Z).unwrap();
        assert_eq!(tri, [p([0, 0, 0]), p([1, 2, 0]), p([2, 1, 0])]);
        let [a, b, c] = &tri;
        assert!(matches!(classify(a, b, c), TriangleClass::Transversal { .. }));
    }

    #[test]
    fn walk_closes() {
        let w = walk(&ints([1, 2, 1, 2, 1, 2]), &pt(-3, -1));
        let back = &w[5] - &Point2::new(rat(2), rat(0));
        assert_eq!(back, pt(-3, -1));
    }

    fn valid_params() -> impl Strategy<Value = HexParams> {
        (1i64..12, 1i64..12, 1i64..12, 1i64..24, 1i64..4).prop_filter_map("l5 bound", |(l1, l2, l3, l5, d)| {
            params_complete(&ratio(l1, d), &ratio(l2, d), &ratio(l3, d), &ratio(l5, 2 * d)).ok()
        })
    }

    proptest! {
        #[test]
        fn params_round_trip(params in valid_params(), bx in -10i64..10, by in -10i64..10) {
            for chart in Chart::ALL {
                let [a, b, c] = triangle_from_params(&params, &AffinePoint::ints(bx, by), chart).unwrap();
                let transversal = matches!(classify(&a, &b, &c), TriangleClass::Transversal { .. });
                prop_assert!(transversal);
                let h = hexagon_of(&a, &b, &c, chart).unwrap();
                prop_assert_eq!(&h.lengths, params.lengths());
                prop_assert!(h.closes());
            }
        }
    }
}
