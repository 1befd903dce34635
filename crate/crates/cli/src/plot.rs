//! SVG figures. Coordinates are written in mathematical orientation (y up)
//! under a single `scale(1,-1)` group; numbers use a fixed number of
//! decimals so the output is byte-for-byte reproducible.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use tri_moduli::cevian::{division_points, t_pq, t_q, CevianParams};
use tri_moduli::classops::{rotate_class, scale_class};
use tri_moduli::geom2::apollonius_circle;
use tri_moduli::pompeiu::solve;
use tri_moduli::space3::{foci, similarity_circle};
use tri_moduli::{GeneralizedCircle, Pencil, PencilKind, Point, ShapeClass, Tolerance, Triangle};

use crate::error::{CliError, CliResult};
use crate::json::{object, optional_number, point, sides, triangle};

pub const FIGURES: [&str; 4] = ["pencil", "disc-orbit", "cevian", "circle3d"];

/// A rendered figure and a JSON summary of what it contains.
#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub svg: String,
    pub summary: Value,
}

fn f(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

struct Canvas {
    body: String,
    view: (f64, f64, f64, f64),
    marker: f64,
}

impl Canvas {
    /// `view` is `(xmin, ymin, width, height)` in mathematical coordinates.
    fn new(view: (f64, f64, f64, f64)) -> Self {
        Self {
            body: String::new(),
            marker: 0.012 * view.2.max(view.3),
            view,
        }
    }

    fn disc() -> Self {
        Self::new((-2.0, -2.0, 4.0, 4.0))
    }

    fn fitting(points: &[Point], margin: f64) -> Self {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let pad = margin * (hi.x - lo.x).max(hi.y - lo.y);
        Self::new((lo.x - pad, lo.y - pad, hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad))
    }

    fn circle(&mut self, class: &str, c: Point, r: f64) {
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            f(c.x),
            f(c.y),
            f(r)
        );
    }

    fn marker(&mut self, class: &str, c: Point) {
        let r = self.marker;
        self.circle(class, c, r);
    }

    fn line(&mut self, class: &str, a: Point, b: Point) {
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            f(a.x),
            f(a.y),
            f(b.x),
            f(b.y)
        );
    }

    fn polygon(&mut self, class: &str, pts: &[Point]) {
        let list: Vec<String> = pts.iter().map(|p| format!("{},{}", f(p.x), f(p.y))).collect();
        let _ = writeln!(self.body, r#"<polygon class="{class}" points="{}"/>"#, list.join(" "));
    }

    /// A circle or a line (as a long segment) drawn as one `<path>`.
    fn path(&mut self, class: &str, g: &GeneralizedCircle) {
        let d = match g {
            GeneralizedCircle::Circle(c) => {
                let (o, r) = (c.center(), c.radius());
                format!(
                    "M {} {} A {r} {r} 0 1 0 {} {} A {r} {r} 0 1 0 {} {} Z",
                    f(o.x + r),
                    f(o.y),
                    f(o.x - r),
                    f(o.y),
                    f(o.x + r),
                    f(o.y),
                    r = f(r)
                )
            }
            GeneralizedCircle::Line(l) => {
                let reach = 2.0 * (self.view.2 + self.view.3);
                let (a, b) = (
                    l.closest_to_origin() - l.direction() * reach,
                    l.closest_to_origin() + l.direction() * reach,
                );
                format!("M {} {} L {} {}", f(a.x), f(a.y), f(b.x), f(b.y))
            }
        };
        let _ = writeln!(self.body, r#"<path class="{class}" d="{d}"/>"#);
    }

    fn finish(self, title: &str) -> String {
        let (x, y, w, h) = self.view;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
            f(x),
            f(-(y + h)),
            f(w),
            f(h),
            (600.0 * h / w).round()
        );
        let _ = writeln!(s, "<title>{title}</title>");
        let _ = writeln!(
            s,
            "<style>* {{ vector-effect: non-scaling-stroke; stroke-width: 1.2; fill: none; stroke: black; }} \
             .elliptic {{ stroke: #1f4fbf; }} .marker, .focus, .point, .division {{ fill: black; stroke: none; }} \
             .boundary, .plane {{ stroke: #888; }} .orbit {{ stroke: #888; stroke-dasharray: 4 3; }} \
             .inner {{ fill: #1f4fbf33; stroke: #1f4fbf; }} .cevian {{ stroke: #666; }}</style>"
        );
        let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
        s.push_str(&self.body);
        s.push_str("</g>\n</svg>\n");
        s
    }
}

fn count_or(obj: &Map<String, Value>, field: &str, default: usize, max: usize) -> CliResult<usize> {
    match obj.get(field) {
        None => Ok(default),
        Some(v) => v
            .as_u64()
            .map(|n| n as usize)
            .filter(|n| (1..=max).contains(n))
            .ok_or_else(|| CliError::field(field, format!("expected an integer in 1..={max}"))),
    }
}

pub fn render(figure: &str, params: &Value) -> CliResult<Figure> {
    let empty = Map::new();
    let obj = match params {
        Value::Null => &empty,
        v => object(v, "params")?,
    };
    match figure {
        "pencil" => pencil(obj),
        "disc-orbit" => disc_orbit(obj),
        "cevian" => cevian(obj),
        "circle3d" => circle3d(obj),
        other => Err(CliError::input(
            "unknown_figure",
            format!("unknown figure \"{other}\" (expected one of {})", FIGURES.join(", ")),
        )),
    }
}

/// Hyperbolic members `k = e^{0.6 j}` and elliptic members through points
/// spaced along the bisector.
fn pencil(obj: &Map<String, Value>) -> CliResult<Figure> {
    let (f1, f2) = match obj.get("foci") {
        None => (Point::new(-1.0, 0.0), Point::new(1.0, 0.0)),
        Some(v) => match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => (point(a, "foci")?, point(b, "foci")?),
            _ => return Err(CliError::field("foci", "expected two points")),
        },
    };
    if f1.distance(f2) == 0.0 {
        return Err(CliError::field("foci", "foci coincide"));
    }
    let nh = count_or(obj, "hyperbolic", 5, 200)?;
    let ne = count_or(obj, "elliptic", 5, 200)?;
    let mut canvas = Canvas::disc();
    let half = f1.distance(f2) / 2.0;
    let mid = (f1 + f2) * 0.5;
    let across = (f2 - f1).perp() / (2.0 * half);
    for j in 0..nh {
        let k = (0.6 * (j as f64 - (nh - 1) as f64 / 2.0)).exp();
        canvas.path("hyperbolic", &apollonius_circle(f1, f2, k)?);
    }
    let elliptic = Pencil::new(PencilKind::Elliptic, f1, f2)?;
    for j in 0..ne {
        let h = half * (0.8 * (j as f64 - (ne - 1) as f64 / 2.0)).sinh();
        // the middle member is the line through the foci
        canvas.path("elliptic", &elliptic.member(mid + across * h, &Tolerance::default())?);
    }
    canvas.marker("focus", f1);
    canvas.marker("focus", f2);
    Ok(Figure {
        svg: canvas.finish("hyperbolic and elliptic pencils"),
        summary: json!({"figure": "pencil", "paths": nh + ne, "hyperbolic": nh, "elliptic": ne}),
    })
}

/// Orbit of a class under repeated `H_λ ∘ R_{2π/N}` in the Pompeiu disc.
fn disc_orbit(obj: &Map<String, Value>) -> CliResult<Figure> {
    let z = match obj.get("class").or_else(|| obj.get("pompeiu")) {
        Some(v) => point(v, "class")?,
        None => Point::new(0.2, 0.1),
    };
    let start = ShapeClass::from_pompeiu(z).map_err(|e| CliError::from(e).at("class"))?;
    let steps = count_or(obj, "steps", 12, 10_000)?;
    let lambda = optional_number(obj, "lambda")?.unwrap_or(0.0);
    let theta = std::f64::consts::TAU / steps as f64;
    let mut canvas = Canvas::disc();
    canvas.circle("boundary", Point::origin(), 1.0);
    if lambda == 0.0 && z.norm() > 0.0 {
        canvas.circle("orbit", Point::origin(), z.norm());
    }
    let mut c = start;
    let mut markers = 0;
    for _ in 0..steps {
        canvas.marker("marker", c.pompeiu());
        markers += 1;
        match scale_class(&rotate_class(&c, theta), lambda) {
            Ok(next) => c = next,
            Err(_) => break,
        }
    }
    Ok(Figure {
        svg: canvas.finish("orbit in the moduli disc"),
        summary: json!({"figure": "disc-orbit", "markers": markers, "radius": z.norm()}),
    })
}

fn cevian(obj: &Map<String, Value>) -> CliResult<Figure> {
    let t = match obj.get("triangle") {
        Some(v) => triangle(v, "triangle")?,
        None => Triangle::new(Point::new(0.2, 1.6), Point::new(-1.0, -0.6), Point::new(1.3, -0.4))?,
    };
    let q = optional_number(obj, "q")?.unwrap_or(0.3);
    let variant = obj.get("variant").and_then(Value::as_str).unwrap_or("routh");
    let p = match variant {
        "routh" => 1.0 - q,
        "tq" => 0.0,
        "tpq" => optional_number(obj, "p")?.ok_or_else(|| CliError::field("p", "variant tpq needs \"p\""))?,
        _ => {
            return Err(CliError::field(
                "variant",
                "variant must be \"tq\", \"routh\" or \"tpq\"",
            ))
        }
    };
    let params = CevianParams::new(p, q)?;
    let inner = if variant == "tq" {
        t_q(&t, q)?
    } else {
        t_pq(&t, &params)?
    };
    let verts = t.vertices();
    let ([a2, b2, c2], [a2p, b2p, c2p]) = division_points(&t, &params);
    let mut canvas = Canvas::fitting(&verts, 0.1);
    canvas.polygon("triangle", &verts);
    let mut segments = Vec::new();
    if variant != "tq" {
        for (from, to) in [(0, a2), (1, b2), (2, c2), (0, a2p), (1, b2p), (2, c2p)] {
            let seg = (verts[from], to);
            // Routh cevians coincide pairwise, up to rounding
            let scale = 1e-12 * verts[from].distance(to);
            if !segments
                .iter()
                .any(|(a, b): &(Point, Point)| *a == seg.0 && b.distance(seg.1) <= scale)
            {
                segments.push(seg);
            }
        }
    }
    for (a, b) in &segments {
        canvas.line("cevian", *a, *b);
    }
    canvas.polygon("inner", &inner.vertices());
    for d in [a2, b2, c2] {
        canvas.marker("division", d);
    }
    Ok(Figure {
        svg: canvas.finish("cevian construction"),
        summary: json!({"figure": "cevian", "variant": variant, "cevians": segments.len(), "innerTriangles": 1}),
    })
}

/// Side view in the vertical plane through `O` and `P`: horizontal axis
/// along `OP`, vertical axis `z`.
fn circle3d(obj: &Map<String, Value>) -> CliResult<Figure> {
    let s = match obj.get("sides") {
        Some(v) => sides(v, "sides")?,
        None => tri_moduli::SideLengths::new(1.0, 2f64.sqrt(), 1.0)?,
    };
    let c = similarity_circle(&s).map_err(|e| CliError::from(e).at("sides"))?;
    let sol = solve(&s)?;
    let (w, _) = foci(&c);
    let along = |x: f64, y: f64| x * w.x + y * w.y;
    let center = Point::new(along(c.center().x, c.center().y), 0.0);
    let p = Point::new(along(sol.p.x, sol.p.y), 0.0);
    let pp = sol.p_prime.map(|q| Point::new(along(q.x, q.y), 0.0)).unwrap_or(p);
    let r = c.radius();
    let extent = [
        Point::new(-1.0, -1.0),
        Point::new(1.0, 1.0),
        Point::new(center.x - r, -r),
        Point::new(center.x + r, r),
    ];
    let mut canvas = Canvas::fitting(&extent, 0.08);
    let (x0, w_view) = (canvas.view.0, canvas.view.2);
    canvas.line("plane", Point::new(x0, 0.0), Point::new(x0 + w_view, 0.0));
    canvas.circle("sphere", Point::origin(), 1.0);
    canvas.circle("similarity", center, r);
    for q in [p, pp, Point::new(1.0, 0.0), Point::new(-1.0, 0.0)] {
        canvas.marker("point", q);
    }
    Ok(Figure {
        svg: canvas.finish("similarity circle, side view"),
        summary: json!({"figure": "circle3d", "radius": r}),
    })
}
