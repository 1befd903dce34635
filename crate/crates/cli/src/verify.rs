//! Randomized invariant suites.
//!
//! Case `i` of a suite draws from a ChaCha8 stream seeded with
//! `seed ^ salt` and positioned at stream `i`, so every case is
//! reproducible on its own and the report does not depend on how rayon
//! schedules the work. Results are reduced in case order.

use std::f64::consts::TAU;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tri_moduli::cevian::{t_pq, CevianParams};
use tri_moduli::classops::{move_vertex, omega_pair};
use tri_moduli::desitter::{apollonius_member, intersection_angle, lift_circle, poncelet_separation};
use tri_moduli::geom2::{circumcircle, intersect, invert_generalized};
use tri_moduli::pompeiu::solve;
use tri_moduli::shape::{phi, phi_of_sides, rho, ReferenceFrame};
use tri_moduli::space3::{foci, sample_circle, similarity_circle, sphere_invert};
use tri_moduli::{
    Circle, Intersection, Line, Orientation, OrientedCircle, Pencil, PencilKind, Point, Point3, SideLengths, Sphere,
    Tolerance, Triangle,
};

use crate::error::{CliError, CliResult};

pub const SUITES: [&str; 5] = ["thm35", "thm51", "pencils", "desitter", "space3"];

/// Residual per check; `None` when a check does not apply to the case.
type CaseResult = Result<Vec<Option<f64>>, String>;

struct Suite {
    name: &'static str,
    salt: u64,
    default_n: usize,
    checks: &'static [(&'static str, f64)],
    case: fn(&mut ChaCha8Rng) -> CaseResult,
}

const THM35: Suite = Suite {
    name: "thm35",
    salt: 0x3335,
    default_n: 1000,
    checks: &[
        ("construction vs i*conj(phi)", 1e-8),
        ("P' vs P/|P|^2 (relative)", 1e-8),
    ],
    case: thm35_case,
};

const THM51: Suite = Suite {
    name: "thm51",
    salt: 0x3531,
    default_n: 500,
    checks: &[("rotation angle", 1e-8), ("modulus", 1e-9)],
    case: thm51_case,
};

const PENCILS: Suite = Suite {
    name: "pencils",
    salt: 0x7065,
    default_n: 500,
    checks: &[
        ("rotated apex Apollonius ratio (relative)", 1e-9),
        ("dilated apex concyclicity (relative)", 1e-8),
        ("pencil orthogonality |cos|", 1e-8),
    ],
    case: pencils_case,
};

const DESITTER: Suite = Suite {
    name: "desitter",
    salt: 0x6473,
    default_n: 500,
    checks: &[
        ("lift norm", 1e-12),
        ("cosh law vs focus inversion", 1e-8),
        ("cos law vs tangents", 1e-8),
        ("pencil duality", 1e-9),
        ("geodesic additivity", 1e-8),
    ],
    case: desitter_case,
};

const SPACE3: Suite = Suite {
    name: "space3",
    salt: 0x7333,
    default_n: 100,
    checks: &[
        ("distance-ratio law (relative)", 1e-8),
        ("Apollonius foci (relative)", 1e-8),
        ("sphere inversion", 1e-8),
        ("reflection", 1e-8),
    ],
    case: space3_case,
};

fn suite(name: &str) -> Option<&'static Suite> {
    [&THM35, &THM51, &PENCILS, &DESITTER, &SPACE3]
        .into_iter()
        .find(|s| s.name == name)
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub name: String,
    pub tolerance: f64,
    pub worst_residual: f64,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub pass: usize,
    pub fail: usize,
    pub worst_residual: f64,
    pub checks: Vec<CheckReport>,
    /// First few case errors, `"case i: message"`.
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub seed: u64,
    pub pass: usize,
    pub fail: usize,
    pub worst_residual: f64,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.fail == 0
    }
}

/// Runs `name` (`all` or one suite) with `n` cases per suite (suite
/// defaults when `None`). `tol` replaces every check's tolerance.
pub fn run(name: &str, n: Option<usize>, seed: u64, tol: Option<f64>) -> CliResult<Report> {
    let suites: Vec<&Suite> = if name == "all" {
        SUITES.iter().filter_map(|s| suite(s)).collect()
    } else {
        vec![suite(name).ok_or_else(|| {
            CliError::input(
                "unknown_suite",
                format!("unknown suite \"{name}\" (expected all, {})", SUITES.join(", ")),
            )
        })?]
    };
    let reports: Vec<SuiteReport> = suites
        .into_iter()
        .map(|s| run_suite(s, n.unwrap_or(s.default_n), seed, tol))
        .collect();
    Ok(Report {
        seed,
        pass: reports.iter().map(|r| r.pass).sum(),
        fail: reports.iter().map(|r| r.fail).sum(),
        worst_residual: reports.iter().map(|r| r.worst_residual).fold(0.0, f64::max),
        suites: reports,
    })
}

fn run_suite(s: &Suite, n: usize, seed: u64, tol: Option<f64>) -> SuiteReport {
    let outcomes: Vec<CaseResult> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ s.salt);
            rng.set_stream(i as u64);
            (s.case)(&mut rng)
        })
        .collect();

    let mut checks: Vec<CheckReport> = s
        .checks
        .iter()
        .map(|(name, t)| CheckReport {
            name: (*name).into(),
            tolerance: tol.unwrap_or(*t),
            worst_residual: 0.0,
            fail: 0,
        })
        .collect();
    let (mut pass, mut fail) = (0, 0);
    let mut errors = Vec::new();
    for (i, outcome) in outcomes.iter().enumerate() {
        match outcome {
            Ok(residuals) => {
                let mut ok = true;
                for (check, r) in checks.iter_mut().zip(residuals) {
                    let Some(r) = *r else { continue };
                    // NaN fails and does not count towards the worst residual
                    if r.is_finite() {
                        check.worst_residual = check.worst_residual.max(r);
                    }
                    if r.is_nan() || r > check.tolerance {
                        check.fail += 1;
                        ok = false;
                    }
                }
                if ok {
                    pass += 1;
                } else {
                    fail += 1;
                }
            }
            Err(msg) => {
                fail += 1;
                if errors.len() < 10 {
                    errors.push(format!("case {i}: {msg}"));
                }
            }
        }
    }
    SuiteReport {
        suite: s.name.into(),
        n,
        pass,
        fail,
        worst_residual: checks.iter().map(|c| c.worst_residual).fold(0.0, f64::max),
        checks,
        errors,
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn random_sides(rng: &mut ChaCha8Rng) -> SideLengths {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(0.1..10.0));
        if let Ok(s) = SideLengths::new(v[0], v[1], v[2]) {
            return s;
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, r: f64) -> Point {
    Point::new(rng.random_range(-r..r), rng.random_range(-r..r))
}

/// Anticlockwise triangle whose class has modulus in `(lo, hi)`.
fn random_triangle(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Triangle {
    loop {
        let (a, b, c) = (random_point(rng, 5.0), random_point(rng, 5.0), random_point(rng, 5.0));
        if let Ok(t) = Triangle::orient(a, b, c) {
            let m = phi(&t).modulus();
            if m > lo && m < hi {
                return t;
            }
        }
    }
}

fn thm35_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let s = random_sides(rng);
    let sol = solve(&s).map_err(err)?;
    let z = phi_of_sides(&s).pompeiu();
    let exterior = sol
        .p_prime
        .map(|pp| pp.distance(sol.p / sol.p.norm_sqr()) / pp.norm().max(1.0));
    Ok(vec![Some(sol.p.distance(z)), exterior])
}

fn thm51_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let t = random_triangle(rng, 0.05, 0.95);
    loop {
        let (p, q): (f64, f64) = (rng.random_range(0.0..1.0), rng.random_range(0.0..1.0));
        // independent evaluation of the closed-form angle
        let r = rho::<f64>();
        let m = r * ((p - 1.0) * (2.0 * q - 1.0)) - Complex::new((q - 1.0) * (2.0 * p - 1.0), 0.0);
        if m.norm() <= 1e-3 {
            continue;
        }
        let Ok(params) = CevianParams::new(p, q) else { continue };
        let Ok(image) = t_pq(&t, &params) else { continue };
        let (w0, w1) = (phi(&t).phi_complex(), phi(&image).phi_complex());
        let measured = w1 / w0;
        let predicted = Complex::from_polar(1.0, 2.0 * m.arg());
        let angle = (measured / predicted).arg().abs();
        return Ok(vec![Some(angle), Some((w1.norm() - w0.norm()).abs())]);
    }
}

fn pencils_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let t = random_triangle(rng, 1e-2, 0.9);
    let om = omega_pair(&t);

    let theta = rng.random_range(0.0..TAU);
    let rotated = move_vertex(&t, theta, 0.0).map_err(err)?;
    let before = om.ratio(t.a());
    let drift = (om.ratio(rotated.a()) - before).abs() / before.max(1.0);

    let m = phi(&t).modulus();
    let lambda = rng.random_range(-3.0..(-m.ln() - 1e-3).min(1.0));
    let dilated = move_vertex(&t, 0.0, lambda).map_err(err)?;
    let concyclic = match circumcircle(om.omega, om.omega_bar, t.a()) {
        Ok(c) => (dilated.a().distance(c.center()) - c.radius()).abs() / c.radius(),
        // Ω, Ω̄, A collinear: the member is the line through them
        Err(_) => {
            let l = Line::through(om.omega, om.omega_bar).map_err(err)?;
            l.signed_distance(dilated.a()).abs() / om.omega.distance(om.omega_bar)
        }
    };

    let tol = Tolerance::default();
    let (w, wb) = (om.omega, om.omega_bar);
    let probe = |rng: &mut ChaCha8Rng| loop {
        let p = random_point(rng, 4.0);
        if p.distance(w) > 0.05 && p.distance(wb) > 0.05 {
            return p;
        }
    };
    let (a, b) = (probe(rng), probe(rng));
    let hyp = Pencil::new(PencilKind::Hyperbolic, w, wb)
        .map_err(err)?
        .member(a, &tol)
        .map_err(err)?;
    let ell = Pencil::new(PencilKind::Elliptic, w, wb)
        .map_err(err)?
        .member(b, &tol)
        .map_err(err)?;
    let orthogonality = match intersect(&hyp, &ell, &tol).map_err(err)? {
        Intersection::Pair(x, _) => Some(hyp.tangent_at(x).dot(ell.tangent_at(x)).abs()),
        other => return Err(format!("orthogonal members met in {} points", other.len())),
    };
    Ok(vec![Some(drift), Some(concyclic), orthogonality])
}

fn random_oriented(rng: &mut ChaCha8Rng) -> OrientedCircle {
    let o = if rng.random_bool(0.5) {
        Orientation::Positive
    } else {
        Orientation::Negative
    };
    if rng.random_bool(0.8) {
        let c = Circle::new(random_point(rng, 2.0), rng.random_range(0.25..4.0)).expect("positive radius");
        OrientedCircle::new(c, o)
    } else {
        let a = rng.random_range(0.0..TAU);
        let l = Line::new(Point::new(a.cos(), a.sin()), rng.random_range(-3.0..3.0)).expect("unit normal");
        OrientedCircle::new(l, o)
    }
}

fn desitter_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let g = lift_circle(&random_oriented(rng));
    let norm = (g.inner(&g) - 1.0).abs();

    let (f1, f2) = loop {
        let (a, b) = (random_point(rng, 2.0), random_point(rng, 2.0));
        if a.distance(b) > 0.1 {
            break (a, b);
        }
    };
    let mut ks: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.3f64..2.3).exp());
    ks.sort_by(f64::total_cmp);
    let members = ks
        .iter()
        .map(|k| apollonius_member(f1, f2, *k))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let sep = |i: usize, j: usize| poncelet_separation(&members[i], &members[j]).map_err(err);
    let (l01, l12, l02) = (sep(0, 1)?, sep(1, 2)?, sep(0, 2)?);
    let tol = Tolerance::default();
    let inv = Circle::new(f1, 1.0).map_err(err)?;
    let radius = |m: &OrientedCircle| {
        invert_generalized(&inv, &m.geo, &tol)
            .as_circle()
            .map(|c| c.radius())
            .ok_or_else(|| "focus inversion gave a line".to_string())
    };
    let cosh_law = (l01 - (radius(&members[0])? / radius(&members[1])?).ln().abs()).abs();
    let additivity = (l02 - l01 - l12).abs();

    let cos_law = loop {
        let (a, b) = (random_oriented(rng), random_oriented(rng));
        if let Ok(Intersection::Pair(x, y)) = intersect(&a.geo, &b.geo, &tol) {
            if x.distance(y) < 1e-3 {
                continue;
            }
            let (ta, tb) = (a.tangent_at(x), b.tangent_at(x));
            let expected = ta.cross(tb).atan2(ta.dot(tb)).abs();
            break (intersection_angle(&a, &b).map_err(err)? - expected).abs();
        }
    };

    let (w, wb) = (f1, f2);
    let probe = |rng: &mut ChaCha8Rng| loop {
        let p = random_point(rng, 3.0);
        if p.distance(w) > 0.05 && p.distance(wb) > 0.05 {
            return p;
        }
    };
    let (a, b) = (probe(rng), probe(rng));
    let hyp = Pencil::new(PencilKind::Hyperbolic, w, wb)
        .map_err(err)?
        .member(a, &tol)
        .map_err(err)?;
    let ell = Pencil::new(PencilKind::Elliptic, w, wb)
        .map_err(err)?
        .member(b, &tol)
        .map_err(err)?;
    let duality = lift_circle(&OrientedCircle::positive(hyp))
        .inner(&lift_circle(&OrientedCircle::positive(ell)))
        .abs();

    Ok(vec![
        Some(norm),
        Some(cosh_law),
        Some(cos_law),
        Some(duality),
        Some(additivity),
    ])
}

fn space3_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (s, c) = loop {
        let s = random_sides(rng);
        if let Ok(c) = similarity_circle(&s) {
            break (s, c);
        }
    };
    let verts = ReferenceFrame::standard().vertices().map(Point3::from_plane);
    let sides = s.as_array();
    let (w, w1) = foci(&c);
    let sigma = Sphere::unit();
    let (mut ratio, mut inversion, mut reflection) = (0.0f64, 0.0f64, 0.0f64);
    let mut apollonius = Vec::with_capacity(64);
    for i in 0..64 {
        let x = sample_circle(&c, i as f64 * TAU / 64.0);
        let d = verts.map(|v| x.distance(v));
        for k in 1..3 {
            let want = sides[k] / sides[0];
            ratio = ratio.max((d[k] / d[0] - want).abs() / want);
        }
        apollonius.push(x.distance(w) / x.distance(w1));
        inversion = inversion.max(c.distance_to(sphere_invert(&sigma, x).map_err(err)?) / c.radius().max(1.0));
        reflection = reflection.max(c.distance_to(x.reflect_z()));
    }
    let first = apollonius[0];
    let foci_drift = apollonius
        .iter()
        .map(|r| (r - first).abs() / first.max(1.0))
        .fold(0.0, f64::max);
    Ok(vec![Some(ratio), Some(foci_drift), Some(inversion), Some(reflection)])
}
