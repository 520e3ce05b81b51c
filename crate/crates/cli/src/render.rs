//! Deterministic SVG output for points, tropical lines, hexagons and tilings.
//!
//! All geometry stays exact until the final pixel coordinate is printed; the
//! same scene always produces the same bytes.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_traits::{Signed, ToPrimitive, Zero};
use tropigeo_core::scalar::rat;
use tropigeo_core::tess::Region;
use tropigeo_core::{Chart, Point2, Rational, TropLine};

/// Longest canvas side in pixels, without padding.
const CANVAS: i64 = 600;
const PAD: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Point { label: String, at: Point2 },
    Line { label: String, line: TropLine },
    Polygon { label: String, vertices: Vec<Point2> },
    Tiling { label: String, cells: Vec<Vec<Point2>> },
}

impl Element {
    pub fn label(&self) -> &str {
        match self {
            Element::Point { label, .. }
            | Element::Line { label, .. }
            | Element::Polygon { label, .. }
            | Element::Tiling { label, .. } => label,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Style {
    pub point_fill: String,
    pub line_stroke: String,
    pub polygon_fill: String,
    pub polygon_stroke: String,
    pub tile_fill: String,
    pub tile_stroke: String,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            point_fill: "#000000".into(),
            line_stroke: "#1f5fa8".into(),
            polygon_fill: "#f2c14e".into(),
            polygon_stroke: "#7a4e00".into(),
            tile_fill: "#cfe3c5".into(),
            tile_stroke: "#2e5e2a".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SceneError {
    DuplicateLabel(String),
    EmptyLabel,
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneError::DuplicateLabel(l) => write!(f, "label {l:?} is used twice"),
            SceneError::EmptyLabel => f.write_str("scene labels must be nonempty"),
        }
    }
}

impl std::error::Error for SceneError {}

/// Drawable items over an explicit viewport, read in one chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    viewport: Region,
    chart: Chart,
    elements: Vec<Element>,
    labels: BTreeSet<String>,
    pub style: Style,
}

impl Scene {
    pub fn new(viewport: Region, chart: Chart) -> Scene {
        Scene {
            viewport,
            chart,
            elements: Vec::new(),
            labels: BTreeSet::new(),
            style: Style::default(),
        }
    }

    pub fn add(&mut self, element: Element) -> Result<(), SceneError> {
        let label = element.label().to_string();
        if label.is_empty() {
            return Err(SceneError::EmptyLabel);
        }
        if !self.labels.insert(label.clone()) {
            return Err(SceneError::DuplicateLabel(label));
        }
        self.elements.push(element);
        Ok(())
    }

    pub fn viewport(&self) -> &Region {
        &self.viewport
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }
}

/// Maps the viewport onto the canvas with the y-axis pointing up.
struct Transform {
    scale: Rational,
    x_min: Rational,
    y_max: Rational,
    width: Rational,
    height: Rational,
}

impl Transform {
    fn new(viewport: &Region) -> Transform {
        let scale = rat(CANVAS) / std::cmp::max(viewport.width(), viewport.height());
        Transform {
            width: viewport.width() * &scale + rat(2 * PAD),
            height: viewport.height() * &scale + rat(2 * PAD),
            scale,
            x_min: viewport.x_min().clone(),
            y_max: viewport.y_max().clone(),
        }
    }

    fn apply(&self, p: &Point2) -> (Rational, Rational) {
        (
            (&p.x - &self.x_min) * &self.scale + rat(PAD),
            (&self.y_max - &p.y) * &self.scale + rat(PAD),
        )
    }

    fn coords(&self, p: &Point2) -> String {
        let (x, y) = self.apply(p);
        format!("{},{}", num(&x), num(&y))
    }
}

/// Fixed three-decimal rendering, without trailing zeros.
fn num(q: &Rational) -> String {
    let scaled = (q * rat(1000)).round().to_integer().to_i64().expect("coordinate fits in i64");
    let sign = if scaled < 0 { "-" } else { "" };
    let a = scaled.unsigned_abs();
    let (int, frac) = (a / 1000, a % 1000);
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        let digits = format!("{frac:03}");
        format!("{sign}{int}.{}", digits.trim_end_matches('0'))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Liang-Barsky clip of the ray `origin + t * dir`, `t >= 0`, to the viewport.
pub fn clip_ray(origin: &Point2, dir: (i64, i64), viewport: &Region) -> Option<(Point2, Point2)> {
    let (dx, dy) = (rat(dir.0), rat(dir.1));
    let mut t0 = Rational::zero();
    let mut t1: Option<Rational> = None;
    let checks = [
        (-&dx, &origin.x - viewport.x_min()),
        (dx.clone(), viewport.x_max() - &origin.x),
        (-&dy, &origin.y - viewport.y_min()),
        (dy.clone(), viewport.y_max() - &origin.y),
    ];
    for (p, q) in checks {
        if p.is_zero() {
            if q.is_negative() {
                return None;
            }
            continue;
        }
        let r = &q / &p;
        if p.is_negative() {
            if r > t0 {
                t0 = r;
            }
        } else if t1.as_ref().is_none_or(|t| r < *t) {
            t1 = Some(r);
        }
    }
    let t1 = t1.expect("every ray direction is nonzero");
    if t0 > t1 {
        return None;
    }
    let at = |t: &Rational| Point2::new(&origin.x + t * &dx, &origin.y + t * &dy);
    Some((at(&t0), at(&t1)))
}

fn polygon_path(t: &Transform, vertices: &[Point2]) -> String {
    let mut d = String::new();
    for (i, v) in vertices.iter().enumerate() {
        let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, t.coords(v));
    }
    d.push('Z');
    d
}

/// Serialize a scene to an SVG 1.1 document.
pub fn render(scene: &Scene) -> String {
    let t = Transform::new(&scene.viewport);
    let s = &scene.style;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(&t.width),
        h = num(&t.height)
    );
    let _ = writeln!(
        out,
        r##"<rect class="viewport" x="{p}" y="{p}" width="{w}" height="{h}" fill="none" stroke="#bbbbbb"/>"##,
        p = PAD,
        w = num(&(scene.viewport.width() * &t.scale)),
        h = num(&(scene.viewport.height() * &t.scale))
    );
    // Filled shapes first so that lines and points stay visible.
    for e in &scene.elements {
        match e {
            Element::Tiling { label, cells } => {
                let _ = writeln!(out, r#"<g class="tiling" id="{}">"#, escape(label));
                for (k, cell) in cells.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        r#"<path class="tile" data-cell="{k}" d="{}" fill="{}" stroke="{}"/>"#,
                        polygon_path(&t, cell),
                        s.tile_fill,
                        s.tile_stroke
                    );
                }
                let _ = writeln!(out, "</g>");
            }
            Element::Polygon { label, vertices } => {
                let _ = writeln!(
                    out,
                    r#"<path class="hexagon" id="{}" d="{}" fill="{}" fill-opacity="0.6" stroke="{}"/>"#,
                    escape(label),
                    polygon_path(&t, vertices),
                    s.polygon_fill,
                    s.polygon_stroke
                );
            }
            _ => {}
        }
    }
    for e in &scene.elements {
        if let Element::Line { label, line } = e {
            let geometry = line.geometry(scene.chart);
            let mut d = String::new();
            for ray in geometry.rays {
                if let Some((p, q)) = clip_ray(&geometry.vertex, ray.vector(), &scene.viewport) {
                    let _ = write!(d, "M{} L{} ", t.coords(&p), t.coords(&q));
                }
            }
            let _ = writeln!(
                out,
                r#"<path class="tropical-line" id="{}" d="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
                escape(label),
                d.trim_end(),
                s.line_stroke
            );
        }
    }
    for e in &scene.elements {
        if let Element::Point { label, at } = e {
            if !scene.viewport.contains(at) {
                continue;
            }
            let (x, y) = t.apply(at);
            let _ = writeln!(
                out,
                r#"<circle class="point" id="{}" cx="{}" cy="{}" r="4" fill="{}"/>"#,
                escape(label),
                num(&x),
                num(&y),
                s.point_fill
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
                num(&(x + rat(6))),
                num(&(y - rat(6))),
                escape(label)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
