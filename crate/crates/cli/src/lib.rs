//! Command-line front end for `tropigeo-core`.
//!
//! [`run`] parses arguments, calls the kernel and writes text, JSON or SVG.
//! Exit status: 0 success, 1 a boolean query answered false, 2 malformed
//! input, 3 input the geometry rejects.

pub mod render;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tropigeo_core::matrix::DEFAULT_MAX_DET_N;
use tropigeo_core::plane::{chart_embed, cross_product, incident, stable_intersection, stable_join};
use tropigeo_core::scalar::parse_rational;
use tropigeo_core::tess::{generate_tiling, validate_tiling, Region, Tiling};
use tropigeo_core::triangle::{
    classify, enumerate_improper_types, hexagon_of, independent, params_complete, span_membership,
    triangle_from_params, HexParams, Hexagon, Labeling, TriangleClass,
};
use tropigeo_core::{AffinePoint, Chart, Point2, ProjPoint, Rational, TropError, TropLine, TropMatrix, TropScalar};

use render::{Element, Scene};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable overriding the permanent dimension bound.
pub const MAX_N_VAR: &str = "TROPIGEO_MAX_N";
/// Hard ceiling for the override; brute force beyond this is impractical.
pub const MAX_N_CEILING: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "tropigeo", version, about = "Exact tropical plane geometry")]
struct Cli {
    /// Affine chart used to read and print points: x, y or z.
    #[arg(long, global = true, default_value = "z", value_parser = parse_chart)]
    chart: Chart,
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tropical determinant of an n x n matrix given as "r11,r12;r21,r22".
    Det {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Tropical cross-product of two points.
    Cross {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Stable join of two points.
    Join {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Stable intersection of two lines given by coefficient vectors.
    Meet {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Whether a point lies on a line.
    Incident {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        line: String,
    },
    /// Classify a triple of points.
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Hexagon of a good triangle.
    Hexagon {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Complete l1 l2 l3 l5 to six lengths, or validate six lengths.
    Params {
        #[arg(required = true, num_args = 1..)]
        lengths: Vec<String>,
    },
    /// Triangle whose hexagon has the given six lengths.
    FromParams {
        #[arg(required = true, num_args = 1..)]
        lengths: Vec<String>,
        /// Position of vertex a, as "(x,y)" in the chart.
        #[arg(long, default_value = "(0,0)", allow_hyphen_values = true)]
        base: String,
    },
    /// Whether a point is in the tropical span of two or three generators.
    Span {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(required = true, num_args = 2..=3)]
        generators: Vec<String>,
    },
    /// Whether up to four points are tropically independent.
    Independent {
        #[arg(required = true, num_args = 1..=4)]
        points: Vec<String>,
    },
    /// Enumerate collapse patterns of improper good triangles.
    ImproperTypes,
    /// Tile a rectangle with translates of a centrally symmetric hexagon.
    Tile {
        /// Six lengths "l1,...,l6".
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// "x_min,x_max,y_min,y_max".
        #[arg(long, allow_hyphen_values = true)]
        region: String,
    },
    /// Validate a tiling read from `tile --json` output, or a generated one.
    ValidateTile {
        /// JSON document produced by `tile --json`.
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        region: Option<String>,
    },
    /// Draw an SVG figure.
    Render {
        /// "x_min,x_max,y_min,y_max" in chart coordinates.
        #[arg(long, allow_hyphen_values = true)]
        viewport: String,
        /// Point to mark; repeatable.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Line coefficient vector; repeatable.
        #[arg(long = "line", allow_hyphen_values = true)]
        lines: Vec<String>,
        /// Good triangle "A;B;C": draws its hexagon, vertices and sides.
        #[arg(long, allow_hyphen_values = true)]
        triangle: Option<String>,
        /// Six lengths of a tiling hexagon; tiles the viewport.
        #[arg(long, allow_hyphen_values = true)]
        tile: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<TropError> for CliError {
    fn from(e: TropError) -> Self {
        match e {
            TropError::Parse { .. } | TropError::MalformedMatrix | TropError::InvalidChart(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;
type TilingCells = Vec<(Hexagon, [ProjPoint; 3])>;

/// What a command produced: text, the JSON value, and whether a boolean
/// query came out false.
struct Output {
    text: String,
    json: Value,
    falsy: bool,
}

impl Output {
    fn new(op: &str, inputs: Value, result: Value, witness: Value, text: String) -> Output {
        Output {
            text,
            json: json!({ "op": op, "inputs": inputs, "result": result, "witness": witness }),
            falsy: false,
        }
    }

    fn predicate(mut self, holds: bool) -> Output {
        self.falsy = !holds;
        self
    }
}

fn parse_chart(s: &str) -> std::result::Result<Chart, String> {
    s.parse::<Chart>().map_err(|e| e.to_string())
}

/// `[x,y,z]` projective, or `(x,y)` affine in `chart`.
fn parse_point(s: &str, chart: Chart) -> CliResult<ProjPoint> {
    if s.trim_start().starts_with('(') {
        let a: AffinePoint = s.parse()?;
        Ok(chart_embed(chart, &a))
    } else {
        Ok(s.parse::<ProjPoint>()?)
    }
}

fn parse_line(s: &str) -> CliResult<TropLine> {
    Ok(TropLine::new(s.parse::<ProjPoint>()?)?)
}

fn parse_matrix(s: &str) -> CliResult<TropMatrix> {
    let rows = s
        .split(';')
        .map(|r| r.split(',').map(|v| v.parse::<TropScalar>()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TropMatrix::from_rows(rows)?)
}

/// Lengths given as separate arguments, comma lists, or a "(..)" tuple.
fn parse_lengths(args: &[String]) -> CliResult<Vec<Rational>> {
    args.iter()
        .flat_map(|a| a.trim().trim_start_matches('(').trim_end_matches(')').split(',').map(str::to_string).collect::<Vec<_>>())
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_rational(&t).map_err(CliError::from))
        .collect()
}

fn parse_params(args: &[String]) -> CliResult<HexParams> {
    let l = parse_lengths(args)?;
    let arr: [Rational; 6] = l
        .try_into()
        .map_err(|v: Vec<Rational>| CliError::Usage(format!("expected six lengths, got {}", v.len())))?;
    Ok(HexParams::new(arr)?)
}

fn max_n() -> CliResult<usize> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{MAX_N_VAR} must be a positive integer, got {v:?}")))?;
            Ok(n.clamp(1, MAX_N_CEILING))
        }
        Err(_) => Ok(DEFAULT_MAX_DET_N),
    }
}

fn affine(p: &ProjPoint, chart: Chart) -> String {
    match p.in_chart(chart) {
        Some(a) => a.to_string(),
        None => p.to_string(),
    }
}

fn point_json(p: &Point2) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn lengths_text(l: &[Rational]) -> String {
    let parts: Vec<String> = l.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn lengths_json(l: &[Rational]) -> Value {
    Value::from(l.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn hexagon_json(h: &Hexagon) -> Value {
    json!({
        "chart": format!("{:?}", h.chart).to_lowercase(),
        "labeling": h.labeling.0.to_vec(),
        "vertices": h.vertices.iter().map(point_json).collect::<Vec<_>>(),
        "lengths": lengths_json(&h.lengths),
    })
}

fn triangle_strings(t: &[ProjPoint; 3]) -> Vec<String> {
    t.iter().map(ToString::to_string).collect()
}

fn class_json(class: &TriangleClass) -> Value {
    match class {
        TriangleClass::Transversal { relabeling } => json!({ "class": class.name(), "relabeling": relabeling.0.to_vec() }),
        TriangleClass::GoodImproper { pattern } => json!({ "class": class.name(), "pattern": pattern.sides() }),
        _ => json!({ "class": class.name() }),
    }
}

fn tiling_text(t: &Tiling, chart: Chart) -> String {
    let mut s = String::new();
    for c in &t.cells {
        let [a, b, cc] = &c.triangle;
        let _ = writeln!(
            s,
            "cell ({},{}) a={} b={} c={}",
            c.index.0,
            c.index.1,
            affine(a, chart),
            affine(b, chart),
            affine(cc, chart)
        );
    }
    let _ = write!(
        s,
        "cells={} owned={} lattice_u={} lattice_v={}",
        t.cells.len(),
        t.owned_cells().len(),
        t.lattice_u,
        t.lattice_v
    );
    s
}

fn tiling_json(t: &Tiling) -> Value {
    json!({
        "lattice_u": point_json(&t.lattice_u),
        "lattice_v": point_json(&t.lattice_v),
        "owned": t.owned_cells().len(),
        "cells": t.cells.iter().map(|c| json!({
            "index": [c.index.0, c.index.1],
            "triangle": triangle_strings(&c.triangle),
            "hexagon": hexagon_json(&c.hexagon),
        })).collect::<Vec<_>>(),
    })
}

/// Cells and region from a `tile --json` document.
fn read_tiling_document(doc: &Value) -> CliResult<(TilingCells, Region)> {
    let bad = |what: &str| CliError::Usage(format!("tiling document: {what}"));
    let region: Region = doc["inputs"]["region"]
        .as_str()
        .ok_or_else(|| bad("missing inputs.region"))?
        .parse()?;
    let cells = doc["result"]["cells"].as_array().ok_or_else(|| bad("missing result.cells"))?;
    let mut out = Vec::new();
    for cell in cells {
        let tri: Vec<ProjPoint> = cell["triangle"]
            .as_array()
            .ok_or_else(|| bad("cell without triangle"))?
            .iter()
            .map(|p| p.as_str().ok_or_else(|| bad("point is not a string")).and_then(|s| Ok(s.parse::<ProjPoint>()?)))
            .collect::<CliResult<_>>()?;
        let tri: [ProjPoint; 3] = tri.try_into().map_err(|_| bad("triangle needs three points"))?;
        let verts: Vec<Point2> = cell["hexagon"]["vertices"]
            .as_array()
            .ok_or_else(|| bad("cell without hexagon vertices"))?
            .iter()
            .map(|v| {
                let x = v[0].as_str().ok_or_else(|| bad("coordinate is not a string"))?;
                let y = v[1].as_str().ok_or_else(|| bad("coordinate is not a string"))?;
                Ok(Point2::new(parse_rational(x)?, parse_rational(y)?))
            })
            .collect::<CliResult<_>>()?;
        let verts: [Point2; 6] = verts.try_into().map_err(|_| bad("hexagon needs six vertices"))?;
        let chart = match cell["hexagon"]["chart"].as_str() {
            Some(c) => c.parse()?,
            None => Chart::Z,
        };
        let [a, b, c] = &tri;
        let labeling = hexagon_of(a, b, c, chart).map(|h| h.labeling).unwrap_or(Labeling::IDENTITY);
        out.push((Hexagon::from_vertices(chart, labeling, verts)?, tri));
    }
    Ok((out, region))
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let chart = cli.chart;
    let pt = |s: &str| parse_point(s, chart);
    Ok(match &cli.command {
        Command::Det { n, matrix } => {
            let m = parse_matrix(matrix)?;
            if m.rows() != *n || m.cols() != *n {
                return Err(CliError::Usage(format!("expected a {n}x{n} matrix, got {}x{}", m.rows(), m.cols())));
            }
            let p = m.trop_det_bounded(max_n()?)?;
            Output::new(
                "det",
                json!({ "n": n, "matrix": m.to_string() }),
                json!({ "value": p.value.to_string(), "regular": p.regular, "optimal_count": p.optimal_count }),
                Value::Null,
                format!("value={} regular={}", p.value, p.regular),
            )
        }
        Command::Cross { a, b } => {
            let (a, b) = (pt(a)?, pt(b)?);
            let r = cross_product(&a, &b)?;
            Output::new(
                "cross",
                json!([a.to_string(), b.to_string()]),
                json!(r.to_string()),
                Value::Null,
                r.to_string(),
            )
        }
        Command::Join { a, b } => {
            let (a, b) = (pt(a)?, pt(b)?);
            let l = stable_join(&a, &b)?;
            let v = l.vertex();
            Output::new(
                "join",
                json!([a.to_string(), b.to_string()]),
                json!({ "coefficients": l.to_string(), "vertex": v.to_string() }),
                Value::Null,
                format!("{} vertex={}", l, affine(&v, chart)),
            )
        }
        Command::Meet { l, m } => {
            let (l, m) = (parse_line(l)?, parse_line(m)?);
            let p = stable_intersection(&l, &m)?;
            Output::new(
                "meet",
                json!([l.to_string(), m.to_string()]),
                json!(p.to_string()),
                Value::Null,
                p.to_string(),
            )
        }
        Command::Incident { point, line } => {
            let (p, l) = (pt(point)?, parse_line(line)?);
            let on = incident(&p, &l);
            Output::new(
                "incident",
                json!({ "point": p.to_string(), "line": l.to_string() }),
                json!(on),
                Value::Null,
                on.to_string(),
            )
            .predicate(on)
        }
        Command::Classify { a, b, c } => {
            let inputs = [pt(a)?, pt(b)?, pt(c)?];
            let class = classify(&inputs[0], &inputs[1], &inputs[2]);
            let text = match &class {
                TriangleClass::Transversal { relabeling } => {
                    let [a, b, c] = relabeling.apply(&inputs);
                    format!(
                        "Transversal (a={} b={} c={})",
                        affine(&a, chart),
                        affine(&b, chart),
                        affine(&c, chart)
                    )
                }
                other => other.to_string(),
            };
            Output::new(
                "classify",
                json!(triangle_strings(&inputs)),
                class_json(&class),
                Value::Null,
                text,
            )
        }
        Command::Hexagon { a, b, c } => {
            let (a, b, c) = (pt(a)?, pt(b)?, pt(c)?);
            let h = hexagon_of(&a, &b, &c, chart)?;
            let verts: Vec<String> = h.vertices.iter().map(ToString::to_string).collect();
            Output::new(
                "hexagon",
                json!([a.to_string(), b.to_string(), c.to_string()]),
                hexagon_json(&h),
                Value::Null,
                format!("vertices={} lengths={}", verts.join(","), lengths_text(&h.lengths)),
            )
        }
        Command::Params { lengths } => {
            let l = parse_lengths(lengths)?;
            let p = match l.as_slice() {
                [l1, l2, l3, l5] => params_complete(l1, l2, l3, l5)?,
                [_, _, _, _, _, _] => HexParams::new(l.clone().try_into().expect("six lengths"))?,
                _ => return Err(CliError::Usage(format!("expected 4 or 6 lengths, got {}", l.len()))),
            };
            Output::new(
                "params",
                lengths_json(&l),
                json!({ "lengths": lengths_json(p.lengths()), "centrally_symmetric": p.is_centrally_symmetric() }),
                Value::Null,
                p.to_string(),
            )
        }
        Command::FromParams { lengths, base } => {
            let p = parse_params(lengths)?;
            let base: AffinePoint = base.parse()?;
            let t = triangle_from_params(&p, &base, chart)?;
            let [a, b, c] = &t;
            Output::new(
                "from-params",
                json!({ "lengths": lengths_json(p.lengths()), "base": base.to_string() }),
                json!(triangle_strings(&t)),
                Value::Null,
                format!("a={} b={} c={}", affine(a, chart), affine(b, chart), affine(c, chart)),
            )
        }
        Command::Span { point, generators } => {
            let u = pt(point)?;
            let gens = generators.iter().map(|g| pt(g)).collect::<CliResult<Vec<_>>>()?;
            let r = span_membership(&u, &gens)?;
            let witness = r.witness.as_ref().map(|w| lengths_json(w)).unwrap_or(Value::Null);
            let text = match &r.witness {
                Some(w) => format!("member witness={}", lengths_text(w)),
                None => "not member".to_string(),
            };
            Output::new(
                "span",
                json!({ "point": u.to_string(), "generators": gens.iter().map(ToString::to_string).collect::<Vec<_>>() }),
                json!(r.member),
                witness,
                text,
            )
            .predicate(r.member)
        }
        Command::Independent { points } => {
            let ps = points.iter().map(|p| pt(p)).collect::<CliResult<Vec<_>>>()?;
            let ind = independent(&ps)?;
            Output::new(
                "independent",
                json!(ps.iter().map(ToString::to_string).collect::<Vec<_>>()),
                json!(ind),
                Value::Null,
                ind.to_string(),
            )
            .predicate(ind)
        }
        Command::ImproperTypes => {
            let census = enumerate_improper_types();
            let mut text = String::new();
            for t in &census.accepted {
                let [a, b, c] = &t.triangle;
                let _ = writeln!(text, "{} lengths={} a={a} b={b} c={c}", t.pattern, lengths_text(&t.lengths));
            }
            for (p, why) in &census.rejected {
                let _ = writeln!(text, "rejected {p}: {why}");
            }
            let edges: Vec<String> = census
                .edges
                .iter()
                .map(|(i, j)| format!("{}-{}", census.accepted[*i].pattern, census.accepted[*j].pattern))
                .collect();
            let _ = writeln!(text, "edges {}", edges.join(" "));
            let _ = write!(text, "count={} claimed={}", census.count(), census.claimed_count);
            Output::new(
                "improper-types",
                Value::Null,
                json!({
                    "count": census.count(),
                    "claimed_count": census.claimed_count,
                    "accepted": census.accepted.iter().map(|t| json!({
                        "pattern": t.pattern.sides(),
                        "lengths": lengths_json(&t.lengths),
                        "triangle": triangle_strings(&t.triangle),
                    })).collect::<Vec<_>>(),
                    "rejected": census.rejected.iter().map(|(p, why)| json!({
                        "pattern": p.sides(),
                        "reason": why.to_string(),
                    })).collect::<Vec<_>>(),
                    "edges": census.edges.iter().map(|(i, j)| json!([
                        census.accepted[*i].pattern.sides(),
                        census.accepted[*j].pattern.sides(),
                    ])).collect::<Vec<_>>(),
                }),
                Value::Null,
                text,
            )
        }
        Command::Tile { params, region } => {
            let p = parse_params(std::slice::from_ref(params))?;
            let r: Region = region.parse()?;
            let t = generate_tiling(&p, &r)?;
            Output::new(
                "tile",
                json!({ "params": lengths_json(p.lengths()), "region": r.to_string() }),
                tiling_json(&t),
                Value::Null,
                tiling_text(&t, chart),
            )
        }
        Command::ValidateTile { input, params, region } => {
            let (cells, r) = match (input, params, region) {
                (Some(path), None, None) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let doc: Value = serde_json::from_str(&text)
                        .map_err(|e| CliError::Usage(format!("{} is not JSON: {e}", path.display())))?;
                    read_tiling_document(&doc)?
                }
                (None, Some(p), Some(r)) => {
                    let r: Region = r.parse()?;
                    let t = generate_tiling(&parse_params(std::slice::from_ref(p))?, &r)?;
                    (t.pairs(), r)
                }
                _ => return Err(CliError::Usage("give either a tiling file or --params with --region".into())),
            };
            let rep = validate_tiling(&cells, &r)?;
            let text = format!(
                "transversal={} disjoint={} contacts={} area={} shared_vertex={} covered={} region={} passed={}{}",
                rep.all_transversal,
                rep.interiors_disjoint,
                rep.contacts_valid,
                rep.area_conserved,
                rep.shared_vertex_valid,
                rep.covered_area,
                rep.region_area,
                rep.passed(),
                rep.failures.iter().map(|f| format!("\n{f}")).collect::<String>()
            );
            Output::new(
                "validate-tile",
                json!({ "cells": rep.cell_count, "region": r.to_string() }),
                json!({
                    "passed": rep.passed(),
                    "all_transversal": rep.all_transversal,
                    "interiors_disjoint": rep.interiors_disjoint,
                    "contacts_valid": rep.contacts_valid,
                    "area_conserved": rep.area_conserved,
                    "shared_vertex_valid": rep.shared_vertex_valid,
                    "covered_area": rep.covered_area.to_string(),
                    "region_area": rep.region_area.to_string(),
                    "side_sharing_pairs": rep.side_sharing_pairs,
                }),
                json!(rep.failures),
                text,
            )
            .predicate(rep.passed())
        }
        Command::Render {
            viewport,
            points,
            lines,
            triangle,
            tile,
        } => {
            let vp: Region = viewport.parse()?;
            let scene = build_scene(vp, chart, points, lines, triangle.as_deref(), tile.as_deref())?;
            let svg = render::render(&scene);
            Output {
                json: json!({ "op": "render", "inputs": { "viewport": viewport }, "result": svg, "witness": Value::Null }),
                text: svg,
                falsy: false,
            }
        }
    })
}

fn in_chart(p: &ProjPoint, chart: Chart) -> CliResult<Point2> {
    p.to_point2(chart)
        .ok_or_else(|| CliError::Domain(format!("{p} is not visible in chart {chart:?}")))
}

fn build_scene(
    viewport: Region,
    chart: Chart,
    points: &[String],
    lines: &[String],
    triangle: Option<&str>,
    tile: Option<&str>,
) -> CliResult<Scene> {
    let mut scene = Scene::new(viewport.clone(), chart);
    let add = |scene: &mut Scene, e: Element| scene.add(e).map_err(|e| CliError::Usage(e.to_string()));
    if let Some(text) = tile {
        let params = parse_params(&[text.to_string()])?;
        let t = generate_tiling(&params, &viewport)?;
        let cells = t.cells.iter().map(|c| c.hexagon.vertices.to_vec()).collect();
        add(&mut scene, Element::Tiling { label: "tiling".into(), cells })?;
    }
    if let Some(text) = triangle {
        let parts: Vec<&str> = text.split(';').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(CliError::Usage(format!("triangle must be \"A;B;C\", got {text:?}")));
        };
        let (a, b, c) = (parse_point(a, chart)?, parse_point(b, chart)?, parse_point(c, chart)?);
        let h = hexagon_of(&a, &b, &c, chart)?;
        add(&mut scene, Element::Polygon { label: "hexagon".into(), vertices: h.polygon() })?;
        let names = ["a", "b", "c"];
        let labeled = h.labeling.apply(&[a, b, c]);
        for (p, q) in [(0, 1), (1, 2), (2, 0)] {
            let side = stable_join(&labeled[p], &labeled[q])?;
            add(&mut scene, Element::Line { label: format!("side {}{}", names[p], names[q]), line: side })?;
        }
        for (name, p) in names.iter().zip(&labeled) {
            add(&mut scene, Element::Point { label: name.to_string(), at: in_chart(p, chart)? })?;
        }
    }
    for (k, l) in lines.iter().enumerate() {
        add(&mut scene, Element::Line { label: format!("line {}", k + 1), line: parse_line(l)? })?;
    }
    for (k, p) in points.iter().enumerate() {
        let q = parse_point(p, chart)?;
        add(&mut scene, Element::Point { label: format!("p{}", k + 1), at: in_chart(&q, chart)? })?;
    }
    Ok(scene)
}

/// Run the tool on `argv` (including the program name), writing normal output
/// to `stdout` unless `--out` is given and diagnostics to `stderr`.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            return e.code();
        }
    };
    let mut body = if cli.json {
        serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
    } else {
        out.text
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    if out.falsy {
        EXIT_FALSE
    } else {
        EXIT_OK
    }
}
