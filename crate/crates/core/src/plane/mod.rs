//! Points and lines of the tropical plane.
//!
//! Projective points are stored canonically (maximum coordinate `0`). Stable
//! join and stable intersection are both the tropical cross-product, which is
//! also the two-line case of the tropical Cramer rule.

mod line;
mod point;

pub use line::{
    collinear, coordinate_matrix, cramer_intersection, cramer_intersection_bounded, cross_product, incident,
    points_transversal, stable_intersection, stable_join, CramerPoint, LineGeometry, RayDirection, TropLine,
    DEFAULT_MAX_CRAMER_N,
};
pub use point::{canonicalize, chart_embed, chart_extract, parse_tuple, AffinePoint, Chart, ProjPoint};
