//! Tilings of a rectangle by translates of one transversal-triangle hexagon,
//! and an exact validator for arbitrary families of cells.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Result, TropError};
use crate::geom::{area, clip_convex, contact, Contact, Point2};
use crate::plane::{chart_embed, AffinePoint, Chart, ProjPoint};
use crate::scalar::{parse_rational, rat, Rational};
use crate::triangle::hexagon::{triangle_from_lengths, walk};
use crate::triangle::{classify, hexagon_of, HexParams, Hexagon, TriangleClass};

/// Closed axis-parallel rectangle `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Region {
    x_min: Rational,
    x_max: Rational,
    y_min: Rational,
    y_max: Rational,
}

impl Region {
    pub fn new(x_min: Rational, x_max: Rational, y_min: Rational, y_max: Rational) -> Result<Region> {
        if x_min >= x_max || y_min >= y_max {
            return Err(TropError::EmptyRegion);
        }
        Ok(Region {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    pub fn from_ints(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Result<Region> {
        Region::new(rat(x_min), rat(x_max), rat(y_min), rat(y_max))
    }

    pub fn x_min(&self) -> &Rational {
        &self.x_min
    }

    pub fn x_max(&self) -> &Rational {
        &self.x_max
    }

    pub fn y_min(&self) -> &Rational {
        &self.y_min
    }

    pub fn y_max(&self) -> &Rational {
        &self.y_max
    }

    pub fn width(&self) -> Rational {
        &self.x_max - &self.x_min
    }

    pub fn height(&self) -> Rational {
        &self.y_max - &self.y_min
    }

    pub fn area(&self) -> Rational {
        self.width() * self.height()
    }

    pub fn lower_left(&self) -> Point2 {
        Point2::new(self.x_min.clone(), self.y_min.clone())
    }

    /// Corners counterclockwise from the lower left.
    pub fn corners(&self) -> [Point2; 4] {
        [
            Point2::new(self.x_min.clone(), self.y_min.clone()),
            Point2::new(self.x_max.clone(), self.y_min.clone()),
            Point2::new(self.x_max.clone(), self.y_max.clone()),
            Point2::new(self.x_min.clone(), self.y_max.clone()),
        ]
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }

    /// Membership in `[x_min, x_max) x [y_min, y_max)`.
    pub fn contains_half_open(&self, p: &Point2) -> bool {
        self.x_min <= p.x && p.x < self.x_max && self.y_min <= p.y && p.y < self.y_max
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x_min, self.x_max, self.y_min, self.y_max)
    }
}

/// `x_min,x_max,y_min,y_max`.
impl FromStr for Region {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Region> {
        let parts: Vec<&str> = s.split(',').collect();
        let [x0, x1, y0, y1] = parts.as_slice() else {
            return Err(TropError::Parse {
                what: "region",
                input: s.to_string(),
            });
        };
        Region::new(
            parse_rational(x0)?,
            parse_rational(x1)?,
            parse_rational(y0)?,
            parse_rational(y1)?,
        )
    }
}

/// One translate of the base hexagon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileCell {
    /// Coefficients of the translation on `(lattice_u, lattice_v)`.
    pub index: (i64, i64),
    pub hexagon: Hexagon,
    pub triangle: [ProjPoint; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub params: HexParams,
    pub region: Region,
    pub lattice_u: Point2,
    pub lattice_v: Point2,
    pub cells: Vec<TileCell>,
}

impl Tiling {
    /// `(hexagon, triangle)` pairs in the form taken by [`validate_tiling`].
    pub fn pairs(&self) -> Vec<(Hexagon, [ProjPoint; 3])> {
        self.cells.iter().map(|c| (c.hexagon.clone(), c.triangle.clone())).collect()
    }

    /// Cells whose centre lies in the half-open region. The centres form a
    /// translate of the lattice, so for a region tiled by fundamental
    /// parallelograms this counts `region area / hexagon area`.
    pub fn owned_cells(&self) -> Vec<&TileCell> {
        self.cells
            .iter()
            .filter(|c| self.region.contains_half_open(&centre(&c.hexagon.vertices)))
            .collect()
    }

    /// Cells contained in the region.
    pub fn interior_cells(&self) -> Vec<&TileCell> {
        self.cells
            .iter()
            .filter(|c| c.hexagon.vertices.iter().all(|v| self.region.contains(v)))
            .collect()
    }

    pub fn cell(&self, index: (i64, i64)) -> Option<&TileCell> {
        self.cells.iter().find(|c| c.index == index)
    }
}

/// Vertex average, the centre of a centrally symmetric hexagon.
pub fn centre(vertices: &[Point2; 6]) -> Point2 {
    let six = rat(6);
    let sx: Rational = vertices.iter().map(|v| v.x.clone()).sum();
    let sy: Rational = vertices.iter().map(|v| v.y.clone()).sum();
    Point2::new(sx / &six, sy / six)
}

fn bbox(points: &[Point2]) -> (Rational, Rational, Rational, Rational) {
    let xs = points.iter().map(|p| &p.x);
    let ys = points.iter().map(|p| &p.y);
    (
        xs.clone().min().expect("nonempty").clone(),
        xs.max().expect("nonempty").clone(),
        ys.clone().min().expect("nonempty").clone(),
        ys.max().expect("nonempty").clone(),
    )
}

fn translate_triangle(tri: &[Point2; 3], t: &Point2) -> [ProjPoint; 3] {
    tri.clone().map(|p| ProjPoint::from_point2(&(&p + t)))
}

/// Translation tiling by the hexagon of `params`, with vertex `a` of the base
/// cell at the lower-left corner of `region`. Lattice vectors are `u = c - a`
/// and `v = b - a` of the base triangle. Every translate meeting the region in
/// positive area is emitted, ordered by index.
pub fn generate_tiling(params: &HexParams, region: &Region) -> Result<Tiling> {
    if !params.is_centrally_symmetric() {
        return Err(TropError::NonSymmetricParams);
    }
    let base = region.lower_left();
    let hex = walk(params.lengths(), &base);
    let tri = [hex[0].clone(), hex[2].clone(), hex[4].clone()];
    let u = &tri[2] - &tri[0];
    let v = &tri[1] - &tri[0];

    // Translations t with (hexagon + t) meeting the region lie in this box.
    let (hx0, hx1, hy0, hy1) = bbox(&hex);
    let box_corners = [
        Point2::new(&region.x_min - &hx1, &region.y_min - &hy1),
        Point2::new(&region.x_max - &hx0, &region.y_min - &hy1),
        Point2::new(&region.x_max - &hx0, &region.y_max - &hy0),
        Point2::new(&region.x_min - &hx1, &region.y_max - &hy0),
    ];
    let det = &u.x * &v.y - &u.y * &v.x;
    let coeffs: Vec<(Rational, Rational)> = box_corners
        .iter()
        .map(|t| ((&t.x * &v.y - &t.y * &v.x) / &det, (&u.x * &t.y - &u.y * &t.x) / &det))
        .collect();
    let to_i64 = |q: Rational| q.to_integer().to_i64().expect("index range fits in i64");
    let i_lo = to_i64(coeffs.iter().map(|c| c.0.floor()).min().expect("four corners"));
    let i_hi = to_i64(coeffs.iter().map(|c| c.0.ceil()).max().expect("four corners"));
    let j_lo = to_i64(coeffs.iter().map(|c| c.1.floor()).min().expect("four corners"));
    let j_hi = to_i64(coeffs.iter().map(|c| c.1.ceil()).max().expect("four corners"));

    let rect = region.corners();
    let mut cells = Vec::new();
    for i in i_lo..=i_hi {
        for j in j_lo..=j_hi {
            let t = Point2::new(rat(i) * &u.x + rat(j) * &v.x, rat(i) * &u.y + rat(j) * &v.y);
            let moved: Vec<Point2> = hex.iter().map(|p| p + &t).collect();
            if !area(&clip_convex(&moved, &rect)).is_positive() {
                continue;
            }
            let triangle = translate_triangle(&tri, &t);
            let [a, b, c] = &triangle;
            let hexagon = hexagon_of(a, b, c, Chart::Z)?;
            cells.push(TileCell {
                index: (i, j),
                hexagon,
                triangle,
            });
        }
    }
    Ok(Tiling {
        params: params.clone(),
        region: region.clone(),
        lattice_u: u,
        lattice_v: v,
        cells,
    })
}

/// Outcome of [`validate_tiling`]; each flag is one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingReport {
    pub cell_count: usize,
    /// (i) every triangle is transversal.
    pub all_transversal: bool,
    /// (ii) hexagon interiors are pairwise disjoint.
    pub interiors_disjoint: bool,
    /// (iii) every contact is empty, a point, or one full common side.
    pub contacts_valid: bool,
    /// (iv) clipped areas add up to the region area.
    pub area_conserved: bool,
    /// (v) side-sharing triangles share exactly one vertex, an endpoint of the side.
    pub shared_vertex_valid: bool,
    pub covered_area: Rational,
    pub region_area: Rational,
    pub side_sharing_pairs: usize,
    pub point_contacts: usize,
    /// Human-readable description of each failure.
    pub failures: Vec<String>,
}

impl TilingReport {
    pub fn passed(&self) -> bool {
        self.all_transversal
            && self.interiors_disjoint
            && self.contacts_valid
            && self.area_conserved
            && self.shared_vertex_valid
    }
}

fn is_full_side(h: &Hexagon, p: &Point2, q: &Point2) -> bool {
    (0..6).any(|k| {
        let s = &h.vertices[k];
        let e = &h.vertices[(k + 1) % 6];
        !h.lengths[k].is_zero() && ((s == p && e == q) || (s == q && e == p))
    })
}

/// Check a family of `(hexagon, triangle)` cells against the region.
///
/// A cell is malformed when its hexagon is not the hexagon of its own
/// triangle, or when the cells use different charts.
pub fn validate_tiling(cells: &[(Hexagon, [ProjPoint; 3])], region: &Region) -> Result<TilingReport> {
    let Some((first, _)) = cells.first() else {
        return Err(TropError::MalformedCell {
            index: 0,
            reason: "no cells".into(),
        });
    };
    let chart = first.chart;
    let mut failures = Vec::new();

    let mut all_transversal = true;
    for (index, (hex, [a, b, c])) in cells.iter().enumerate() {
        if hex.chart != chart {
            return Err(TropError::MalformedCell {
                index,
                reason: format!("chart {:?} differs from {:?}", hex.chart, chart),
            });
        }
        match classify(a, b, c) {
            TriangleClass::Transversal { .. } => {
                let own = hexagon_of(a, b, c, chart)?;
                if own.vertices != hex.vertices {
                    return Err(TropError::MalformedCell {
                        index,
                        reason: "hexagon is not the hexagon of the triangle".into(),
                    });
                }
            }
            other => {
                all_transversal = false;
                failures.push(format!("(i) cell {index}: triangle is {other}"));
            }
        }
    }

    let polys: Vec<Vec<Point2>> = cells.iter().map(|(h, _)| h.polygon()).collect();
    let boxes: Vec<_> = polys.iter().map(|p| bbox(p)).collect();
    let mut interiors_disjoint = true;
    let mut contacts_valid = true;
    let mut shared_vertex_valid = true;
    let mut side_sharing_pairs = 0;
    let mut point_contacts = 0;
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let (bi, bj) = (&boxes[i], &boxes[j]);
            if bi.1 < bj.0 || bj.1 < bi.0 || bi.3 < bj.2 || bj.3 < bi.2 {
                continue;
            }
            match contact(&polys[i], &polys[j]) {
                Contact::Disjoint => {}
                Contact::Point(_) => point_contacts += 1,
                Contact::Overlap(a) => {
                    interiors_disjoint = false;
                    failures.push(format!("(ii) cells {i} and {j} overlap in area {a}"));
                }
                Contact::Segment(p, q) => {
                    let (hi, ti) = &cells[i];
                    let (hj, tj) = &cells[j];
                    if !(is_full_side(hi, &p, &q) && is_full_side(hj, &p, &q)) {
                        contacts_valid = false;
                        failures.push(format!("(iii) cells {i} and {j} meet in {p}-{q}, not a full common side"));
                        continue;
                    }
                    side_sharing_pairs += 1;
                    let ends = [
                        chart_embed(chart, &AffinePoint::from(&p)),
                        chart_embed(chart, &AffinePoint::from(&q)),
                    ];
                    let common: Vec<&ProjPoint> = ti.iter().filter(|x| tj.contains(x)).collect();
                    if common.len() != 1 || !ends.contains(common[0]) {
                        shared_vertex_valid = false;
                        failures.push(format!(
                            "(v) cells {i} and {j} share side {p}-{q} but {} triangle vertices",
                            common.len()
                        ));
                    }
                }
            }
        }
    }

    let rect = region.corners();
    let covered_area: Rational = polys.iter().map(|p| area(&clip_convex(p, &rect))).sum();
    let region_area = region.area();
    let area_conserved = covered_area == region_area;
    if !area_conserved {
        failures.push(format!("(iv) clipped area {covered_area} differs from region area {region_area}"));
    }

    Ok(TilingReport {
        cell_count: cells.len(),
        all_transversal,
        interiors_disjoint,
        contacts_valid,
        area_conserved,
        shared_vertex_valid,
        covered_area,
        region_area,
        side_sharing_pairs,
        point_contacts,
        failures,
    })
}

/// Base triangle of `params` with vertex `a` at `base`, in chart `Z = 0`.
pub fn base_triangle(params: &HexParams, base: &Point2) -> [ProjPoint; 3] {
    triangle_from_lengths(params.lengths(), base)
}
