use std::fmt;

use crate::error::{Result, TropError};
use crate::geom::Point2;
use crate::matrix::{Permanent, TropMatrix, DEFAULT_MAX_DET_N};
use crate::plane::point::{canonicalize, AffinePoint, Chart, ProjPoint};
use crate::scalar::{Rational, TropScalar};

/// Largest number of hyperplanes accepted by [`cramer_intersection`] by default.
pub const DEFAULT_MAX_CRAMER_N: usize = DEFAULT_MAX_DET_N - 1;

/// The tropical line `max(a1 + X, a2 + Y, a3 + Z)`, all coefficients finite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropLine {
    coeffs: ProjPoint,
}

/// Direction of one of the three rays of a tropical line in an affine chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RayDirection {
    West,
    South,
    NorthEast,
}

impl RayDirection {
    pub const ALL: [RayDirection; 3] = [RayDirection::West, RayDirection::South, RayDirection::NorthEast];

    /// Integer direction vector.
    pub fn vector(self) -> (i64, i64) {
        match self {
            RayDirection::West => (-1, 0),
            RayDirection::South => (0, -1),
            RayDirection::NorthEast => (1, 1),
        }
    }
}

/// Shape of a tropical line in one affine chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGeometry {
    pub chart: Chart,
    pub vertex: Point2,
    pub rays: [RayDirection; 3],
    /// Ends of the West and South rays, on the chart boundary.
    pub boundary_points: [AffinePoint; 2],
    /// The one projective point of the line not visible in this chart.
    pub missing_point: ProjPoint,
}

impl TropLine {
    pub fn new(coeffs: ProjPoint) -> Result<Self> {
        if !coeffs.is_interior() {
            return Err(TropError::NonFiniteLine);
        }
        Ok(TropLine { coeffs })
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        TropLine {
            coeffs: ProjPoint::from_ints(c),
        }
    }

    pub fn coeffs(&self) -> &ProjPoint {
        &self.coeffs
    }

    fn finite(&self) -> [Rational; 3] {
        self.coeffs.finite_coords().expect("line coefficients are finite")
    }

    /// The point where all three terms tie: `-coeffs`.
    pub fn vertex(&self) -> ProjPoint {
        self.coeffs.neg().expect("line coefficients are finite")
    }

    pub fn geometry(&self, chart: Chart) -> LineGeometry {
        let c = self.finite();
        let k = chart.slot();
        let [u, v] = chart.free_slots();
        let vx = &c[k] - &c[u];
        let vy = &c[k] - &c[v];
        let boundary_points = [
            AffinePoint::new(TropScalar::NegInf, TropScalar::Finite(vy.clone())),
            AffinePoint::new(TropScalar::Finite(vx.clone()), TropScalar::NegInf),
        ];
        let mut missing = c.clone().map(|x| TropScalar::Finite(-x));
        missing[k] = TropScalar::NegInf;
        LineGeometry {
            chart,
            vertex: Point2::new(vx, vy),
            rays: RayDirection::ALL,
            boundary_points,
            missing_point: ProjPoint::new(missing).expect("two finite slots"),
        }
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        incident(q, self)
    }

    /// Unique intersection point (no shared ray).
    pub fn is_transversal_to(&self, other: &TropLine) -> Result<bool> {
        if self == other {
            return Err(TropError::EqualLines);
        }
        points_transversal(&self.coeffs, &other.coeffs)
    }
}

impl fmt::Display for TropLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coeffs.fmt(f)
    }
}

fn max2(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a
    } else {
        b
    }
}

fn cross_raw(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        max2(&a[1] + &b[2], &b[1] + &a[2]),
        max2(&a[0] + &b[2], &b[0] + &a[2]),
        max2(&a[0] + &b[1], &b[0] + &a[1]),
    ]
}

/// Tropical cross-product `a (x) b`.
pub fn cross_product(a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint> {
    let a = a.require_interior()?;
    let b = b.require_interior()?;
    Ok(ProjPoint::from_rationals(cross_raw(&a, &b)))
}

/// Stable join of two distinct interior points: the line with coefficients `a (x) b`.
pub fn stable_join(a: &ProjPoint, b: &ProjPoint) -> Result<TropLine> {
    let coeffs = cross_product(a, b)?;
    if a == b {
        return Err(TropError::RepeatedPoints);
    }
    TropLine::new(coeffs)
}

/// Stable intersection of two distinct lines.
pub fn stable_intersection(l: &TropLine, m: &TropLine) -> Result<ProjPoint> {
    if l == m {
        return Err(TropError::EqualLines);
    }
    cross_product(&l.coeffs, &m.coeffs)
}

/// The maximum of `q_i + l_i` is finite and attained at least twice.
pub fn incident(q: &ProjPoint, l: &TropLine) -> bool {
    let terms: Vec<TropScalar> = q
        .coords()
        .iter()
        .zip(l.coeffs.coords())
        .map(|(x, y)| x.odot(y))
        .collect();
    let max = terms.iter().max().expect("three terms");
    max.is_finite() && terms.iter().filter(|t| *t == max).count() >= 2
}

/// Exactly one tropical line passes through `a` and `b`.
///
/// By duality the same predicate applied to coefficient vectors decides
/// whether two lines meet in a single point.
pub fn points_transversal(a: &ProjPoint, b: &ProjPoint) -> Result<bool> {
    let ab = cross_product(a, b)?;
    if a == b {
        return Err(TropError::RepeatedPoints);
    }
    Ok(ab != a.neg()? && ab != b.neg()?)
}

/// Coordinate matrix with one point per row.
pub fn coordinate_matrix(points: &[&ProjPoint]) -> TropMatrix {
    TropMatrix::from_rows(points.iter().map(|p| p.coords().to_vec()).collect())
        .expect("rows of length three")
}

/// Three distinct interior points lie on a common tropical line.
pub fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<bool> {
    for p in [a, b, c] {
        p.require_interior()?;
    }
    if a == b || b == c || a == c {
        return Err(TropError::RepeatedPoints);
    }
    let det = coordinate_matrix(&[a, b, c]).trop_det()?;
    Ok(!det.regular)
}

/// Stable intersection of `n` hyperplanes in projective `n`-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CramerPoint {
    /// Canonical representative (maximum coordinate `0`) of `[|A^1|, ..., |A^{n+1}|]`.
    pub coords: Vec<TropScalar>,
    /// Every minor `A^j` is tropically regular, so the plain intersection is this point.
    pub stable_equals_plain: bool,
    pub minors: Vec<Permanent>,
}

/// Tropical Cramer's rule with the default bound.
pub fn cramer_intersection(a: &TropMatrix) -> Result<CramerPoint> {
    cramer_intersection_bounded(a, DEFAULT_MAX_CRAMER_N)
}

pub fn cramer_intersection_bounded(a: &TropMatrix, max_n: usize) -> Result<CramerPoint> {
    let n = a.rows();
    if a.cols() != n + 1 {
        return Err(TropError::ShapeMismatch { rows: n, cols: a.cols() });
    }
    if n > max_n {
        return Err(TropError::DimensionTooLarge { n, max: max_n });
    }
    if (0..n).any(|r| a.row(r).iter().any(|v| !v.is_finite())) {
        return Err(TropError::NonFiniteEntry);
    }
    let minors = (0..=n)
        .map(|j| a.without_column(j).trop_det_bounded(max_n))
        .collect::<Result<Vec<_>>>()?;
    let mut coords: Vec<TropScalar> = minors.iter().map(|p| p.value.clone()).collect();
    canonicalize(&mut coords)?;
    let stable_equals_plain = minors.iter().all(|p| p.regular);
    Ok(CramerPoint {
        coords,
        stable_equals_plain,
        minors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::point::chart_embed;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn p(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    #[test]
    fn cross_product_examples() {
        assert_eq!(cross_product(&p([-1, 1, 0]), &p([0, 0, 0])).unwrap(), p([1, 0, 1]));
        assert_eq!(cross_product(&p([0, 0, 0]), &p([-1, 2, 0])).unwrap(), p([2, 0, 2]));
        assert_eq!(cross_product(&p([-1, 1, 0]), &p([-1, 1, 0])).unwrap(), p([1, -1, 0]));
        let boundary = ProjPoint::new([TropScalar::int(0), TropScalar::NegInf, TropScalar::int(0)]).unwrap();
        assert!(matches!(cross_product(&boundary, &p([0, 0, 0])), Err(TropError::BoundaryPoint(_))));
    }

    #[test]
    fn join_examples() {
        let l = stable_join(&p([-1, 1, 0]), &p([0, 0, 0])).unwrap();
        assert_eq!(l.coeffs(), &p([1, 0, 1]));
        assert_eq!(l.geometry(Chart::Z).vertex, Point2::ints(0, 1));
        assert_eq!(l.vertex(), p([-1, 0, -1]));
        let degenerate = stable_join(&p([0, 0, 0]), &p([0, -5, 0])).unwrap();
        assert_eq!(degenerate.coeffs(), &p([0, 0, 0]));
        assert_eq!(stable_join(&p([1, 2, 3]), &p([1, 2, 3])), Err(TropError::RepeatedPoints));
    }

    #[test]
    fn intersection_examples() {
        let l = TropLine::from_ints([0, 0, 0]);
        let m = TropLine::from_ints([1, 0, 1]);
        assert_eq!(stable_intersection(&l, &m).unwrap(), p([0, 0, 0]));
        let m2 = TropLine::from_ints([2, 0, 2]);
        assert_eq!(stable_intersection(&m, &m2).unwrap(), p([2, 3, 2]));
        assert_eq!(stable_intersection(&m2, &m).unwrap(), p([2, 3, 2]));
        assert_eq!(stable_intersection(&m, &m), Err(TropError::EqualLines));
    }

    #[test]
    fn incidence_examples() {
        let l = TropLine::from_ints([0, 0, 0]);
        assert!(incident(&l.vertex(), &l));
        assert!(incident(&p([0, -5, 0]), &l));
        assert!(!incident(&p([3, 1, 0]), &l));
        let l2 = TropLine::from_ints([1, 2, 3]);
        assert!(incident(&l2.vertex(), &l2));
        // The missing point at infinity still satisfies the linear form.
        assert!(incident(&l2.geometry(Chart::Z).missing_point, &l2));
    }

    #[test]
    fn line_geometry_examples() {
        let g = TropLine::from_ints([1, 2, 3]).geometry(Chart::Z);
        assert_eq!(g.vertex, Point2::ints(2, 1));
        assert_eq!(
            g.boundary_points,
            [
                AffinePoint::new(TropScalar::NegInf, TropScalar::int(1)),
                AffinePoint::new(TropScalar::int(2), TropScalar::NegInf)
            ]
        );
        let g0 = TropLine::from_ints([0, 0, 0]).geometry(Chart::Z);
        assert_eq!(g0.vertex, Point2::ints(0, 0));
        assert_eq!(
            g0.missing_point,
            ProjPoint::new([TropScalar::int(0), TropScalar::int(0), TropScalar::NegInf]).unwrap()
        );
        let g1 = TropLine::from_ints([1, 0, 1]).geometry(Chart::Z);
        assert_eq!(
            g1.missing_point,
            ProjPoint::new([TropScalar::int(-1), TropScalar::int(0), TropScalar::NegInf]).unwrap()
        );
        assert_eq!(g1.rays, RayDirection::ALL);
        // In every chart the vertex is the projective vertex seen through that chart.
        let l = TropLine::from_ints([4, -1, 7]);
        for chart in Chart::ALL {
            let g = l.geometry(chart);
            assert_eq!(Some(g.vertex), l.vertex().to_point2(chart));
            assert!(incident(&chart_embed(chart, &g.boundary_points[0]), &l));
            assert!(incident(&chart_embed(chart, &g.boundary_points[1]), &l));
        }
    }

    #[test]
    fn transversality_examples() {
        assert_eq!(points_transversal(&p([-1, 1, 0]), &p([0, 0, 0])), Ok(true));
        assert_eq!(points_transversal(&p([0, 0, 0]), &p([1, 0, 1])), Ok(false));
        assert_eq!(points_transversal(&p([0, 0, 0]), &p([5, 5, 0])), Ok(false));
        assert_eq!(points_transversal(&p([0, 0, 0]), &p([0, 0, 0])), Err(TropError::RepeatedPoints));
    }

    #[test]
    fn collinearity_examples() {
        assert_eq!(collinear(&p([-5, 0, 0]), &p([0, -7, 0]), &p([0, 0, 0])), Ok(true));
        assert_eq!(collinear(&p([-1, 1, 0]), &p([0, 0, 0]), &p([-1, 2, 0])), Ok(false));
        assert_eq!(collinear(&p([0, 0, 0]), &p([3, 9, 0]), &p([2, 1, 0])), Ok(false));
        assert_eq!(
            collinear(&p([0, 0, 0]), &p([0, 0, 0]), &p([2, 1, 0])),
            Err(TropError::RepeatedPoints)
        );
    }

    #[test]
    fn cramer_two_lines() {
        let a = TropMatrix::from_ints(&[[1, 0, 1], [2, 0, 2]]).unwrap();
        let r = cramer_intersection(&a).unwrap();
        assert_eq!(ProjPoint::new(r.coords.clone().try_into().unwrap()).unwrap(), p([2, 3, 2]));
        let b = TropMatrix::from_ints(&[[0, 0, 0], [1, 0, 1]]).unwrap();
        let r = cramer_intersection(&b).unwrap();
        assert!(!r.stable_equals_plain);
        assert!(!r.minors[1].regular);
        assert_eq!(r.minors[1].value, TropScalar::int(1));
    }

    #[test]
    fn cramer_errors() {
        let square = TropMatrix::from_ints(&[[1, 0], [2, 0]]).unwrap();
        assert_eq!(
            cramer_intersection(&square),
            Err(TropError::ShapeMismatch { rows: 2, cols: 2 })
        );
        let inf = TropMatrix::from_rows(vec![vec![TropScalar::NegInf, TropScalar::int(0)]]).unwrap();
        assert_eq!(cramer_intersection(&inf), Err(TropError::NonFiniteEntry));
        let big = TropMatrix::new(8, 9, vec![TropScalar::zero(); 72]).unwrap();
        assert_eq!(
            cramer_intersection(&big),
            Err(TropError::DimensionTooLarge { n: 8, max: 7 })
        );
    }

    fn interior() -> impl Strategy<Value = ProjPoint> {
        (-8i64..8, -8i64..8, 1i64..3).prop_map(|(x, y, d)| {
            ProjPoint::from_rationals([crate::scalar::ratio(x, d), crate::scalar::ratio(y, d), rat(0)])
        })
    }

    proptest! {
        #[test]
        fn cross_product_is_symmetric(a in interior(), b in interior()) {
            prop_assert_eq!(cross_product(&a, &b).unwrap(), cross_product(&b, &a).unwrap());
        }

        #[test]
        fn self_cross_is_negation(a in interior()) {
            prop_assert_eq!(cross_product(&a, &a).unwrap(), a.neg().unwrap());
        }

        #[test]
        fn incidence_duality(a in interior(), b in interior()) {
            let la = TropLine::new(a.clone()).unwrap();
            let lb = TropLine::new(b.clone()).unwrap();
            prop_assert_eq!(incident(&b, &la), incident(&a, &lb));
        }

        #[test]
        fn intersection_lies_on_both(a in interior(), b in interior()) {
            prop_assume!(a != b);
            let l = TropLine::new(a).unwrap();
            let m = TropLine::new(b).unwrap();
            let x = stable_intersection(&l, &m).unwrap();
            prop_assert!(incident(&x, &l));
            prop_assert!(incident(&x, &m));
        }

        #[test]
        fn non_transversal_iff_classical_slope(a in interior(), b in interior()) {
            prop_assume!(a != b);
            let pa = a.to_point2(Chart::Z).unwrap();
            let pb = b.to_point2(Chart::Z).unwrap();
            let aligned = pa.x == pb.x || pa.y == pb.y || &pa.x - &pa.y == &pb.x - &pb.y;
            prop_assert_eq!(points_transversal(&a, &b).unwrap(), !aligned);
        }

        #[test]
        fn transversal_iff_cross_coordinates_regular(a in interior(), b in interior()) {
            prop_assume!(a != b);
            let m = coordinate_matrix(&[&a, &b]);
            let all_regular = (0..3).all(|j| m.without_column(j).trop_det().unwrap().regular);
            prop_assert_eq!(points_transversal(&a, &b).unwrap(), all_regular);
        }

        #[test]
        fn cramer_matches_cross_product(a in interior(), b in interior()) {
            let m = coordinate_matrix(&[&a, &b]);
            let r = cramer_intersection(&m).unwrap();
            let point = ProjPoint::new(r.coords.try_into().unwrap()).unwrap();
            prop_assert_eq!(point, cross_product(&a, &b).unwrap());
        }
    }
}
