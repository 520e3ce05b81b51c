use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TropError};
use crate::geom::Point2;
use crate::scalar::{Rational, TropScalar};

/// One of the three affine charts covering the projective plane.
///
/// `X` is the chart `X = 0` (the map `(y, z) -> [0, y, z]`), and so on; the
/// chart fixes the slot that receives the `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Chart {
    X,
    Y,
    #[default]
    Z,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::X, Chart::Y, Chart::Z];

    /// Chart from its 1-based index: `1 -> X`, `2 -> Y`, `3 -> Z`.
    pub fn from_index(k: u8) -> Result<Chart> {
        match k {
            1 => Ok(Chart::X),
            2 => Ok(Chart::Y),
            3 => Ok(Chart::Z),
            _ => Err(TropError::InvalidChart(k)),
        }
    }

    /// Zero-based coordinate slot fixed to `0` by this chart.
    pub fn slot(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// The two remaining slots, in increasing order.
    pub fn free_slots(self) -> [usize; 2] {
        match self {
            Chart::X => [1, 2],
            Chart::Y => [0, 2],
            Chart::Z => [0, 1],
        }
    }
}

impl FromStr for Chart {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Chart> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" | "1" => Ok(Chart::X),
            "y" | "2" => Ok(Chart::Y),
            "z" | "3" => Ok(Chart::Z),
            _ => Err(TropError::Parse {
                what: "chart",
                input: s.to_string(),
            }),
        }
    }
}

/// A point of the tropical affine plane; either coordinate may be `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    pub x: TropScalar,
    pub y: TropScalar,
}

impl AffinePoint {
    pub fn new(x: TropScalar, y: TropScalar) -> Self {
        AffinePoint { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        AffinePoint::new(TropScalar::int(x), TropScalar::int(y))
    }

    pub fn is_interior(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_point2(&self) -> Option<Point2> {
        Some(Point2::new(self.x.as_finite()?.clone(), self.y.as_finite()?.clone()))
    }
}

impl From<&Point2> for AffinePoint {
    fn from(p: &Point2) -> Self {
        AffinePoint::new(TropScalar::Finite(p.x.clone()), TropScalar::Finite(p.y.clone()))
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for AffinePoint {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_tuple(s, '(', ')', "affine point")?;
        match <[TropScalar; 2]>::try_from(values) {
            Ok([x, y]) => Ok(AffinePoint::new(x, y)),
            Err(_) => Err(TropError::Parse {
                what: "affine point",
                input: s.to_string(),
            }),
        }
    }
}

/// A point of the tropical projective plane, stored with maximum coordinate `0`.
///
/// Because the representative is canonical, derived equality and hashing are
/// projective equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [TropScalar; 3],
}

/// Subtract the maximum coordinate from every finite coordinate.
pub fn canonicalize(coords: &mut [TropScalar]) -> Result<()> {
    let max = coords.iter().max().cloned().ok_or(TropError::AllNegInf)?;
    let TropScalar::Finite(m) = max else {
        return Err(TropError::AllNegInf);
    };
    let shift = -m;
    for c in coords.iter_mut() {
        *c = c.shift(&shift);
    }
    Ok(())
}

impl ProjPoint {
    pub fn new(mut coords: [TropScalar; 3]) -> Result<Self> {
        canonicalize(&mut coords)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        ProjPoint::new(c.map(TropScalar::int)).expect("finite coordinates")
    }

    pub fn from_rationals(c: [Rational; 3]) -> Self {
        ProjPoint::new(c.map(TropScalar::Finite)).expect("finite coordinates")
    }

    /// Embed a classical point through the chart `Z = 0`.
    pub fn from_point2(p: &Point2) -> Self {
        ProjPoint::from_rationals([p.x.clone(), p.y.clone(), Rational::from_integer(0.into())])
    }

    pub fn coords(&self) -> &[TropScalar; 3] {
        &self.coords
    }

    pub fn is_interior(&self) -> bool {
        self.coords.iter().all(TropScalar::is_finite)
    }

    pub fn finite_coords(&self) -> Option<[Rational; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.as_finite()?.clone(), b.as_finite()?.clone(), c.as_finite()?.clone()])
    }

    pub(crate) fn require_interior(&self) -> Result<[Rational; 3]> {
        self.finite_coords()
            .ok_or_else(|| TropError::BoundaryPoint(self.to_string()))
    }

    /// Coordinatewise negation; defined for interior points only.
    pub fn neg(&self) -> Result<ProjPoint> {
        let [a, b, c] = self.require_interior()?;
        Ok(ProjPoint::from_rationals([-a, -b, -c]))
    }

    /// Normalized affine coordinates in `chart`, absent when that slot is `-inf`.
    pub fn in_chart(&self, chart: Chart) -> Option<AffinePoint> {
        let TropScalar::Finite(pivot) = &self.coords[chart.slot()] else {
            return None;
        };
        let shift = -pivot.clone();
        let [u, v] = chart.free_slots();
        Some(AffinePoint::new(self.coords[u].shift(&shift), self.coords[v].shift(&shift)))
    }

    /// Classical coordinates in `chart`; requires an interior point.
    pub fn to_point2(&self, chart: Chart) -> Option<Point2> {
        self.in_chart(chart)?.to_point2()
    }
}

/// `j_k`: insert `0` into the slot of `chart`.
pub fn chart_embed(chart: Chart, p: &AffinePoint) -> ProjPoint {
    let mut coords = [TropScalar::zero(), TropScalar::zero(), TropScalar::zero()];
    let [u, v] = chart.free_slots();
    coords[u] = p.x.clone();
    coords[v] = p.y.clone();
    ProjPoint::new(coords).expect("chart slot is finite")
}

/// Normalized affine coordinates of `q` in `chart`, if any.
pub fn chart_extract(chart: Chart, q: &ProjPoint) -> Option<AffinePoint> {
    q.in_chart(chart)
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "[{a},{b},{c}]")
    }
}

impl FromStr for ProjPoint {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_tuple(s, '[', ']', "projective point")?;
        match <[TropScalar; 3]>::try_from(values) {
            Ok(c) => ProjPoint::new(c),
            Err(_) => Err(TropError::Parse {
                what: "projective point",
                input: s.to_string(),
            }),
        }
    }
}

/// Parse a delimited, comma-separated list of scalars.
pub fn parse_tuple(s: &str, open: char, close: char, what: &'static str) -> Result<Vec<TropScalar>> {
    let err = || TropError::Parse {
        what,
        input: s.to_string(),
    };
    let inner = s
        .trim()
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(err)?;
    inner
        .split(',')
        .map(|t| t.parse::<TropScalar>().map_err(|_| err()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn s(n: i64) -> TropScalar {
        TropScalar::int(n)
    }

    #[test]
    fn embed_fills_the_chart_slot() {
        let p = AffinePoint::ints(4, -2);
        assert_eq!(chart_embed(Chart::Z, &p).to_string(), "[0,-6,-4]");
        assert_eq!(chart_embed(Chart::Z, &p), ProjPoint::from_ints([4, -2, 0]));
        assert_eq!(chart_embed(Chart::X, &p), ProjPoint::from_ints([0, 4, -2]));
        assert_eq!(chart_embed(Chart::Y, &p), ProjPoint::from_ints([4, 0, -2]));
    }

    #[test]
    fn extract_missing_in_chart() {
        let q = ProjPoint::new([s(-1), s(-2), TropScalar::NegInf]).unwrap();
        assert_eq!(chart_extract(Chart::Z, &q), None);
        assert_eq!(chart_extract(Chart::X, &q), Some(AffinePoint::new(s(-1), TropScalar::NegInf)));
        let r = ProjPoint::from_ints([3, 5, 1]);
        assert_eq!(chart_extract(Chart::Z, &r), Some(AffinePoint::ints(2, 4)));
        assert_eq!(chart_extract(Chart::Y, &r), Some(AffinePoint::ints(-2, -4)));
    }

    #[test]
    fn chart_indices() {
        assert_eq!(Chart::from_index(1), Ok(Chart::X));
        assert_eq!(Chart::from_index(3), Ok(Chart::Z));
        assert_eq!(Chart::from_index(0), Err(TropError::InvalidChart(0)));
        assert_eq!(Chart::from_index(4), Err(TropError::InvalidChart(4)));
    }

    #[test]
    fn interior_and_boundary() {
        assert!(ProjPoint::from_ints([-1, 1, 0]).is_interior());
        assert!(!ProjPoint::new([s(-1), TropScalar::NegInf, s(-3)]).unwrap().is_interior());
        assert!(!AffinePoint::new(TropScalar::NegInf, TropScalar::NegInf).is_interior());
        assert_eq!(
            ProjPoint::new([TropScalar::NegInf, TropScalar::NegInf, TropScalar::NegInf]),
            Err(TropError::AllNegInf)
        );
    }

    #[test]
    fn projective_equality_is_shift_invariant() {
        assert_eq!(ProjPoint::from_ints([1, 1, 1]), ProjPoint::from_ints([0, 0, 0]));
        assert_eq!(
            ProjPoint::from_rationals([ratio(1, 2), ratio(3, 2), ratio(-1, 2)]),
            ProjPoint::from_ints([-1, 0, -2])
        );
    }

    #[test]
    fn parse_and_print() {
        let p: ProjPoint = " [ -1, 1/2 , 0 ] ".parse().unwrap();
        assert_eq!(p.to_string(), "[-3/2,0,-1/2]");
        let q: ProjPoint = "[-inf,2,0]".parse().unwrap();
        assert_eq!(q.to_string(), "[-inf,0,-2]");
        let a: AffinePoint = "(-3,-1)".parse().unwrap();
        assert_eq!(a, AffinePoint::ints(-3, -1));
        assert!("[1,2]".parse::<ProjPoint>().is_err());
        assert!("(1,2,3)".parse::<AffinePoint>().is_err());
        assert!("1,2,3".parse::<ProjPoint>().is_err());
    }
}
