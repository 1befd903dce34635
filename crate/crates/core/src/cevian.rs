//! Equidivision, Routh and generalized cevian operations on triangles.
//!
//! * `T_q`: `A″ = qB + (1−q)C`, `B″ = qC + (1−q)A`, `C″ = qA + (1−q)B`.
//! * `T_{p,q}`: with `A″_p = (1−p)B + pC` (and cyclically), the new vertices
//!   are `AA″ ∩ BB″_p`, `BB″ ∩ CC″_p`, `CC″ ∩ AA″_p`.
//! * Routh, `T^R_q = T_{1−q, q}`.
//!
//! Each acts on the disc coordinate as a rotation
//! `w ↦ e^{iθ(p,q)} w` with `θ(p,q) = 2 arg{(p−1)(2q−1)ρ − (q−1)(2p−1)}`.
//! Angles here use the `(−π, π]` convention.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geom2::Point;
use crate::scalar::{wrap_pi, Real};
use crate::shape::{rho, Triangle};

/// Relative zero test for line-line crossings, against the squared
/// bounding-box diameter of the triangle.
pub const PARALLEL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CevianParams<T> {
    p: T,
    q: T,
}

impl<T: Real> CevianParams<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::Domain("cevian parameters must be finite"));
        }
        if p == T::half() && q == T::half() {
            return Err(Error::Degenerate("all cevians meet at the centroid"));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn q(&self) -> T {
        self.q
    }
}

fn lerp<T: Real>(u: Point<T>, v: Point<T>, s: T) -> Point<T> {
    // (1 − s)u + sv
    u * (T::one() - s) + v * s
}

/// The `q`-equidivision triangle `(A″, B″, C″)`.
pub fn t_q<T: Real>(t: &Triangle<T>, q: T) -> Result<Triangle<T>> {
    let [a, b, c] = t.vertices();
    Triangle::new(lerp(c, b, q), lerp(a, c, q), lerp(b, a, q))
}

/// `T^R_q = T_{1−q, q}`; undefined at `q = 1/2`.
pub fn routh<T: Real>(t: &Triangle<T>, q: T) -> Result<Triangle<T>> {
    if q == T::half() {
        return Err(Error::Domain("cevians concurrent at centroid"));
    }
    t_pq(t, &CevianParams::new(T::one() - q, q)?)
}

/// Points dividing the sides, `[A″, B″, C″]` and `[A″_p, B″_p, C″_p]`.
pub fn division_points<T: Real>(t: &Triangle<T>, params: &CevianParams<T>) -> ([Point<T>; 3], [Point<T>; 3]) {
    let [a, b, c] = t.vertices();
    let (p, q) = (params.p, params.q);
    (
        [lerp(c, b, q), lerp(a, c, q), lerp(b, a, q)],
        [lerp(b, c, p), lerp(c, a, p), lerp(a, b, p)],
    )
}

/// The triangle cut out by the cevians `AA″, BB″_p`, `BB″, CC″_p`,
/// `CC″, AA″_p`.
pub fn t_pq<T: Real>(t: &Triangle<T>, params: &CevianParams<T>) -> Result<Triangle<T>> {
    let [a, b, c] = t.vertices();
    let ([a2, b2, c2], [a2p, b2p, c2p]) = division_points(t, params);
    let diam2 = bounding_diameter_sqr(&[a, b, c]);
    let a1 = crossing(a, a2, b, b2p, diam2)?;
    let b1 = crossing(b, b2, c, c2p, diam2)?;
    let c1 = crossing(c, c2, a, a2p, diam2)?;
    Triangle::new(a1, b1, c1)
}

fn bounding_diameter_sqr<T: Real>(pts: &[Point<T>]) -> T {
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in pts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (hi - lo).norm_sqr()
}

/// Crossing of the lines `p1p2` and `p3p4`.
fn crossing<T: Real>(p1: Point<T>, p2: Point<T>, p3: Point<T>, p4: Point<T>, diam2: T) -> Result<Point<T>> {
    let d1 = p2 - p1;
    let d2 = p4 - p3;
    let det = d1.cross(d2);
    if !(det.abs() > T::lit(PARALLEL_EPS) * diam2) {
        return Err(Error::NoIntersection("cevians are parallel"));
    }
    let s = (p3 - p1).cross(d2) / det;
    Ok(p1 + d1 * s)
}

/// `θ(p, q) = 2 arg{(p−1)(2q−1)ρ − (q−1)(2p−1)}`, reduced to `(−π, π]`.
pub fn theta_pq<T: Real>(p: T, q: T) -> Result<T> {
    let m = rotation_factor(p, q);
    if !(m.norm() > T::epsilon()) {
        return Err(Error::Domain("degenerate parameters (1/2, 1/2)"));
    }
    Ok(wrap_pi(T::two() * m.arg()))
}

/// `(p−1)(2q−1)ρ − (q−1)(2p−1)`, the complex number whose doubled argument
/// is the rotation angle.
pub fn rotation_factor<T: Real>(p: T, q: T) -> Complex<T> {
    let one = T::one();
    let two = T::two();
    rho::<T>() * ((p - one) * (two * q - one)) - Complex::new((q - one) * (two * p - one), T::zero())
}

/// Rotation of `T_q`: `2 arctan(√3(2q − 1))`.
pub fn equidivision_angle<T: Real>(q: T) -> T {
    T::two() * (T::sqrt3() * (T::two() * q - T::one())).atan()
}

/// Rotation of `T^R_q`: `2 arctan(√3 q / (2 − q))`, reduced to `(−π, π]`.
pub fn routh_angle<T: Real>(q: T) -> T {
    // atan2 form stays finite at q = 2
    wrap_pi(T::two() * (T::sqrt3() * q).atan2(T::two() - q))
}

/// `q` such that `T_q` rotates by `theta`.
///
/// `T_q` reaches every angle in `(−π, π)`; `±π` would need `q = ∞`.
pub fn q_for_theta<T: Real>(theta: T) -> Result<T> {
    let half = wrap_pi(theta) * T::half();
    let (s, c) = half.sin_cos();
    if !(c.abs() > T::lit(1e-12)) {
        return Err(Error::Domain("not realizable by a single T_q"));
    }
    Ok((s / c / T::sqrt3() + T::one()) * T::half())
}

/// `q′` such that `T^R_{q′}` rotates by `theta`: the solution of
/// `√3 q′/(2 − q′) = tan(θ/2)`.
///
/// Every angle except `−2π/3` (which needs `q′ = ∞`) and `π/3` (which
/// needs the excluded `q′ = 1/2`) is realizable.
pub fn routh_q_for_theta<T: Real>(theta: T) -> Result<T> {
    let half = wrap_pi(theta) * T::half();
    let (s, c) = half.sin_cos();
    let den = T::sqrt3() * c + s;
    if !(den.abs() > T::lit(1e-12)) {
        return Err(Error::Domain("not realizable by a single Routh operation"));
    }
    let q = T::two() * s / den;
    if (q - T::half()).abs() <= T::lit(1e-12) {
        return Err(Error::Domain(
            "requires q' = 1/2, where the Routh operation is undefined",
        ));
    }
    Ok(q)
}
