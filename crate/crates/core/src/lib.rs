//! Exact max-plus geometry of the plane.
//!
//! Everything here is computed over exact rationals with an explicit `-inf`
//! element; there is no floating point in the kernel.
//!
//! - [`scalar`], [`matrix`], [`poly`]: the semifield, permanents, polynomials.
//! - [`plane`]: charts, projective points, lines, cross-products, Cramer's rule.
//! - [`triangle`]: transversal triangles, their hexagons and parameter space,
//!   tropical span and the improper good triangles.
//! - [`tess`]: tilings of a rectangle by translated triangle hexagons.

pub mod error;
pub mod geom;
pub mod matrix;
pub mod plane;
pub mod poly;
pub mod scalar;
pub mod tess;
pub mod triangle;

pub use error::{Result, TropError};
pub use geom::Point2;
pub use matrix::{Permanent, TropMatrix};
pub use plane::{AffinePoint, Chart, ProjPoint, TropLine};
pub use scalar::{Rational, TropScalar};
