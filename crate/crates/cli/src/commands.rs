//! One function per JSON command. Each takes the parsed request payload and
//! returns the `result` object of the response.

use serde_json::{json, Map, Value};
use tri_moduli::cevian::{equidivision_angle, routh, routh_angle, t_pq, t_q, theta_pq, CevianParams};
use tri_moduli::classops::{apply, decompose, move_vertex, rotate_class, scale_class, LogScale};
use tri_moduli::desitter::{intersection_angle, lift_circle, poncelet_separation};
use tri_moduli::pompeiu::{ratio_residual, solve};
use tri_moduli::scalar::{wrap_pi, wrap_two_pi};
use tri_moduli::shape::{phi, phi_of_sides, side_lengths, sigma, sigma_of_sides, ReferenceFrame};
use tri_moduli::space3::{foci, similarity_circle};
use tri_moduli::{
    Circle, Line, Orientation, OrientedCircle, PolarDecomposition, ShapeClass, SideLengths, Tolerance, Triangle,
};

use crate::error::{CliError, CliResult};
use crate::json::{number, object, optional_number, pt, pt3, required, required_number, sides, tri, triangle};

/// Settings shared by all commands.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub tol: Tolerance,
    /// Angles in and out are in degrees.
    pub degrees: bool,
}

impl Options {
    fn angle_in(&self, x: f64) -> f64 {
        if self.degrees {
            x.to_radians()
        } else {
            x
        }
    }

    fn angle_out(&self, x: f64) -> f64 {
        if self.degrees {
            x.to_degrees()
        } else {
            x
        }
    }
}

fn side_array(s: &SideLengths) -> Value {
    json!(s.as_array())
}

/// `sigma`, `phi`, `pompeiu` and the side ratios of a triangle or side triple.
pub fn shape(input: &Value, opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let (sigma, class, s) = match (obj.get("triangle"), obj.get("sides")) {
        (Some(t), None) => {
            let t = triangle(t, "triangle")?;
            (sigma(&t), phi(&t), side_lengths(&t))
        }
        (None, Some(s)) => {
            let s = sides(s, "sides")?;
            (sigma_of_sides(&s), phi_of_sides(&s), s)
        }
        _ => {
            return Err(CliError::field(
                "input",
                "give exactly one of \"triangle\" or \"sides\"",
            ))
        }
    };
    Ok(json!({
        "sigma": pt(sigma),
        "phi": pt(class.phi()),
        "pompeiu": pt(class.pompeiu()),
        "sides": side_array(&s),
        "sideRatios": [1.0, s.b() / s.a(), s.c() / s.a()],
        "equilateral": class.is_equilateral(&opts.tol),
    }))
}

/// Interior and exterior Pompeiu points by the Apollonius construction.
pub fn solve_sides(input: &Value, _opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let s = sides(required(obj, "sides")?, "sides")?;
    let sol = solve(&s)?;
    let distances = ReferenceFrame::standard().distances(sol.p);
    let mut out = json!({
        "P": pt(sol.p),
        "distances": distances,
        "ratioResidual": ratio_residual(sol.p, &s),
        "nearEquilateral": sol.near_equilateral,
    });
    if let Some(pp) = sol.p_prime {
        out["PPrime"] = pt(pp);
        out["PPrimeRatioResidual"] = json!(ratio_residual(pp, &s));
    }
    Ok(out)
}

/// A similarity class given as `triangle`, `sides`, `phi` or `pompeiu`.
fn class_of(obj: &Map<String, Value>, field: &str) -> CliResult<(ShapeClass, Option<Triangle>)> {
    let given: Vec<&str> = ["triangle", "sides", "phi", "pompeiu"]
        .into_iter()
        .filter(|k| obj.contains_key(*k))
        .collect();
    let [key] = given.as_slice() else {
        return Err(CliError::field(
            field,
            "give exactly one of \"triangle\", \"sides\", \"phi\" or \"pompeiu\"",
        ));
    };
    let v = &obj[*key];
    match *key {
        "triangle" => {
            let t = triangle(v, "triangle")?;
            Ok((phi(&t), Some(t)))
        }
        "sides" => Ok((phi_of_sides(&sides(v, "sides")?), None)),
        "phi" => Ok((
            ShapeClass::new(crate::json::point(v, "phi")?).map_err(|e| CliError::from(e).at("phi"))?,
            None,
        )),
        _ => Ok((
            ShapeClass::from_pompeiu(crate::json::point(v, "pompeiu")?).map_err(|e| CliError::from(e).at("pompeiu"))?,
            None,
        )),
    }
}

fn class_json(c: &ShapeClass) -> Value {
    json!({"phi": pt(c.phi()), "pompeiu": pt(c.pompeiu())})
}

fn decomposition_json(d: &PolarDecomposition, opts: &Options) -> Value {
    let lambda = match d.lambda {
        LogScale::Finite(l) => json!(l),
        LogScale::NegInfinity => json!("-inf"),
    };
    json!({"theta": opts.angle_out(d.theta), "lambda": lambda})
}

/// `H_λ ∘ R_θ` on a class; with `"mode": "vertex"` also the moved triangle;
/// with a `"target"` class, the decomposition `(θ, λ)` instead.
pub fn act(input: &Value, opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let (base, tri_in) = class_of(obj, "input")?;

    if let Some(target) = obj.get("target") {
        let (target, _) = class_of(object(target, "target")?, "target")?;
        let d = decompose(&target, &base)?;
        let reached = apply(&base, &d)?;
        let mut out = decomposition_json(&d, opts);
        out["reached"] = class_json(&reached);
        return Ok(out);
    }

    let theta = opts.angle_in(optional_number(obj, "theta")?.unwrap_or(0.0));
    let lambda = optional_number(obj, "lambda")?.unwrap_or(0.0);
    let mode = obj.get("mode").map(|m| m.as_str().unwrap_or("")).unwrap_or("class");
    let moved = scale_class(&rotate_class(&base, theta), lambda).map_err(|e| CliError::from(e).at("lambda"))?;
    let mut out = class_json(&moved);
    out["theta"] = json!(opts.angle_out(wrap_two_pi(theta)));
    out["lambda"] = json!(lambda);
    match mode {
        "class" => {}
        "vertex" => {
            let t = tri_in.ok_or_else(|| CliError::field("triangle", "vertex mode needs a triangle"))?;
            let t2 = move_vertex(&t, theta, lambda)?;
            out["triangle"] = tri(&t2);
            out["APrime"] = pt(t2.a());
        }
        _ => return Err(CliError::field("mode", "mode must be \"class\" or \"vertex\"")),
    }
    Ok(out)
}

/// `T_q`, Routh or `T_{p,q}` with predicted and measured disc rotation.
pub fn cevian(input: &Value, opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let t = triangle(required(obj, "triangle")?, "triangle")?;
    let q = required_number(obj, "q")?;
    let p = optional_number(obj, "p")?;
    let variant = match obj.get("variant") {
        Some(v) => v
            .as_str()
            .ok_or_else(|| CliError::field("variant", "expected a string"))?,
        None if p.is_some() => "tpq",
        None => "tq",
    };
    let (image, predicted) = match variant {
        "tq" => (t_q(&t, q)?, wrap_pi(equidivision_angle(q))),
        "routh" => (routh(&t, q)?, routh_angle(q)),
        "tpq" => {
            let p = p.ok_or_else(|| CliError::field("p", "variant tpq needs \"p\""))?;
            let params = CevianParams::new(p, q)?;
            (t_pq(&t, &params)?, theta_pq(p, q)?)
        }
        _ => {
            return Err(CliError::field(
                "variant",
                "variant must be \"tq\", \"routh\" or \"tpq\"",
            ))
        }
    };
    let (w0, w1) = (phi(&t).phi_complex(), phi(&image).phi_complex());
    let measured = if w0.norm() > opts.tol.abs {
        json!(opts.angle_out((w1 / w0).arg()))
    } else {
        Value::Null
    };
    Ok(json!({
        "variant": variant,
        "triangle": tri(&image),
        "thetaPredicted": opts.angle_out(predicted),
        "thetaMeasured": measured,
    }))
}

/// The similarity circle in space and its foci.
pub fn circle3d(input: &Value, _opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let s = sides(required(obj, "sides")?, "sides")?;
    let c = similarity_circle(&s).map_err(|e| CliError::from(e).at("sides"))?;
    let (w, w1) = foci(&c);
    Ok(json!({
        "center": pt3(c.center()),
        "radius": c.radius(),
        "planeNormal": pt3(c.plane_normal()),
        "W": pt3(w),
        "WPrime": pt3(w1),
    }))
}

fn oriented(v: &Value, field: &str) -> CliResult<OrientedCircle> {
    let obj = object(v, field)?;
    let orientation = match obj.get("orientation") {
        None => Orientation::Positive,
        Some(o) => {
            let s = o
                .as_i64()
                .ok_or_else(|| CliError::field(field, "orientation must be 1 or -1"))?;
            Orientation::from_sign(s as i8)
                .ok()
                .filter(|_| s.abs() == 1)
                .ok_or_else(|| CliError::field(field, "orientation must be 1 or -1"))?
        }
    };
    let with_field = |e: tri_moduli::Error| CliError::from(e).at(field);
    match (obj.get("center"), obj.get("normal")) {
        (Some(c), None) => {
            let circle = Circle::new(crate::json::point(c, field)?, number(required(obj, "radius")?, field)?)
                .map_err(with_field)?;
            Ok(OrientedCircle::new(circle, orientation))
        }
        (None, Some(n)) => {
            let line = Line::new(crate::json::point(n, field)?, number(required(obj, "offset")?, field)?)
                .map_err(with_field)?;
            Ok(OrientedCircle::new(line, orientation))
        }
        _ => Err(CliError::field(
            field,
            "a circle needs \"center\" and \"radius\", a line \"normal\" and \"offset\"",
        )),
    }
}

/// de Sitter lifts of one or two oriented circles and, for two, the
/// separation `λ` or the angle `θ` read off their inner product.
pub fn desitter(input: &Value, opts: &Options) -> CliResult<Value> {
    let obj = object(input, "input")?;
    let list = required(obj, "circles")?
        .as_array()
        .ok_or_else(|| CliError::field("circles", "expected an array of circles"))?;
    if list.is_empty() || list.len() > 2 {
        return Err(CliError::field("circles", "give one or two circles"));
    }
    let circles = list
        .iter()
        .enumerate()
        .map(|(i, v)| oriented(v, &format!("circles[{i}]")))
        .collect::<CliResult<Vec<_>>>()?;
    let lifts: Vec<_> = circles.iter().map(lift_circle).collect();
    let mut out = json!({
        "gammas": lifts.iter().map(|g| json!(g.gamma().as_array())).collect::<Vec<_>>(),
    });
    if let [c1, c2] = circles.as_slice() {
        let ip = lifts[0].inner(&lifts[1]);
        out["innerProduct"] = json!(ip);
        out["lambdaOrTheta"] = if ip > 1.0 || ip < -1.0 - opts.tol.rel {
            json!({"kind": "lambda", "value": poncelet_separation(c1, c2)?})
        } else {
            json!({"kind": "theta", "value": opts.angle_out(intersection_angle(c1, c2)?)})
        };
    }
    Ok(out)
}
