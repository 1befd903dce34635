//! Planar inversive geometry: points, circles, lines, inversions,
//! intersections, circles of Apollonius and pencils.
//!
//! The plane is identified with the complex line; [`Point`] converts to and
//! from [`Complex`] for the modules that prefer complex arithmetic.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Real, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sqr(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }

    /// Rotation by +90°.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > T::zero() && n.is_finite()).then(|| self / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    #[inline]
    pub fn from_complex(z: Complex<T>) -> Self {
        Self::new(z.re, z.im)
    }

    /// Componentwise comparison with a length tolerance scaled by the larger norm.
    pub fn approx_eq(self, other: Self, tol: &Tolerance<T>) -> bool {
        let scale = self.norm().max(other.norm());
        tol.is_zero(self.distance(other), scale)
    }
}

impl<T: Real> From<Complex<T>> for Point<T> {
    fn from(z: Complex<T>) -> Self {
        Self::from_complex(z)
    }
}

impl<T: Real> From<Point<T>> for Complex<T> {
    fn from(p: Point<T>) -> Self {
        p.to_complex()
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<T: Real> Div<T> for Point<T> {
    type Output = Self;
    fn div(self, k: T) -> Self {
        Self::new(self.x / k, self.y / k)
    }
}

/// Circle Γ(center, radius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<T> {
    center: Point<T>,
    radius: T,
}

impl<T: Real> Circle<T> {
    pub fn new(center: Point<T>, radius: T) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= T::zero() {
            return Err(Error::Domain("circle radius must be positive and finite"));
        }
        Ok(Self { center, radius })
    }

    /// The unit circle about the origin.
    pub fn unit() -> Self {
        Self {
            center: Point::origin(),
            radius: T::one(),
        }
    }

    pub fn center(&self) -> Point<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    /// Point at angle `t` measured anticlockwise from the +x direction.
    pub fn point_at(&self, t: T) -> Point<T> {
        self.center + Point::new(t.cos(), t.sin()) * self.radius
    }
}

/// The line `normal · x = offset`, with `normal` of unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<T> {
    normal: Point<T>,
    offset: T,
}

impl<T: Real> Line<T> {
    /// Builds a line; `normal` is rescaled to unit length together with `offset`.
    pub fn new(normal: Point<T>, offset: T) -> Result<Self> {
        let n = normal.norm();
        if !(n > T::zero()) || !n.is_finite() || !offset.is_finite() {
            return Err(Error::Domain("line normal must be nonzero and finite"));
        }
        Ok(Self {
            normal: normal / n,
            offset: offset / n,
        })
    }

    /// The line through `p` and `q`, traveled from `p` to `q`; the normal
    /// points to the left of the direction of travel.
    pub fn through(p: Point<T>, q: Point<T>) -> Result<Self> {
        let dir = (q - p)
            .normalized()
            .ok_or(Error::Domain("line through coincident points"))?;
        let normal = dir.perp();
        Ok(Self {
            normal,
            offset: normal.dot(p),
        })
    }

    pub fn normal(&self) -> Point<T> {
        self.normal
    }

    pub fn offset(&self) -> T {
        self.offset
    }

    /// Direction of travel: the normal is on its left.
    pub fn direction(&self) -> Point<T> {
        Point::new(self.normal.y, -self.normal.x)
    }

    /// Signed distance, positive on the side the normal points to.
    pub fn signed_distance(&self, p: Point<T>) -> T {
        self.normal.dot(p) - self.offset
    }

    /// Foot of the perpendicular from the origin.
    pub fn closest_to_origin(&self) -> Point<T> {
        self.normal * self.offset
    }
}

/// A circle or a line (a circle through ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedCircle<T> {
    Circle(Circle<T>),
    Line(Line<T>),
}

impl<T: Real> From<Circle<T>> for GeneralizedCircle<T> {
    fn from(c: Circle<T>) -> Self {
        GeneralizedCircle::Circle(c)
    }
}

impl<T: Real> From<Line<T>> for GeneralizedCircle<T> {
    fn from(l: Line<T>) -> Self {
        GeneralizedCircle::Line(l)
    }
}

impl<T: Real> GeneralizedCircle<T> {
    pub fn as_circle(&self) -> Option<&Circle<T>> {
        match self {
            GeneralizedCircle::Circle(c) => Some(c),
            GeneralizedCircle::Line(_) => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line<T>> {
        match self {
            GeneralizedCircle::Line(l) => Some(l),
            GeneralizedCircle::Circle(_) => None,
        }
    }

    /// Signed distance to the locus: `|p - c| - r` for circles (negative
    /// inside) and the line's signed distance for lines.
    pub fn residual(&self, p: Point<T>) -> T {
        match self {
            GeneralizedCircle::Circle(c) => p.distance(c.center) - c.radius,
            GeneralizedCircle::Line(l) => l.signed_distance(p),
        }
    }

    pub fn contains(&self, p: Point<T>, tol: &Tolerance<T>) -> bool {
        let scale = match self {
            GeneralizedCircle::Circle(c) => c.radius,
            GeneralizedCircle::Line(l) => p.norm().max(l.offset.abs()),
        };
        tol.is_zero(self.residual(p), scale)
    }

    /// Unit tangent at a point of the locus, for anticlockwise circles and
    /// for lines traveled with the normal on the left.
    pub fn tangent_at(&self, p: Point<T>) -> Point<T> {
        match self {
            GeneralizedCircle::Circle(c) => ((p - c.center) / c.radius).perp(),
            GeneralizedCircle::Line(l) => l.direction(),
        }
    }
}

/// Inversion in `circle`: `η + r²(p − η)/|p − η|²`.
pub fn invert_point<T: Real>(circle: &Circle<T>, p: Point<T>) -> Result<Point<T>> {
    let d = p - circle.center;
    let d2 = d.norm_sqr();
    if d2 == T::zero() {
        return Err(Error::AtInfinity("image at infinity"));
    }
    let image = circle.center + d * (circle.radius * circle.radius / d2);
    if !image.is_finite() {
        return Err(Error::AtInfinity("image at infinity"));
    }
    Ok(image)
}

/// Image of a circle or line under inversion in `circle`.
///
/// Loci through the inversion center are exchanged with lines.
pub fn invert_generalized<T: Real>(
    circle: &Circle<T>,
    g: &GeneralizedCircle<T>,
    tol: &Tolerance<T>,
) -> GeneralizedCircle<T> {
    let eta = circle.center;
    let r2 = circle.radius * circle.radius;
    match g {
        GeneralizedCircle::Circle(c) => {
            let v = c.center - eta;
            let d = v.norm();
            if tol.is_zero(d - c.radius, c.radius) {
                // through the center: the antipode of η maps to the foot of the line
                let u = v / d;
                return GeneralizedCircle::Line(Line {
                    normal: u,
                    offset: u.dot(eta) + r2 / (T::two() * c.radius),
                });
            }
            let s = r2 / ((d - c.radius) * (d + c.radius));
            GeneralizedCircle::Circle(Circle {
                center: eta + v * s,
                radius: s.abs() * c.radius,
            })
        }
        GeneralizedCircle::Line(l) => {
            let delta = l.offset - l.normal.dot(eta);
            if tol.is_zero(delta, eta.norm().max(l.offset.abs())) {
                return GeneralizedCircle::Line(*l);
            }
            let half = r2 / (T::two() * delta);
            GeneralizedCircle::Circle(Circle {
                center: eta + l.normal * half,
                radius: half.abs(),
            })
        }
    }
}

/// Zero, one or two intersection points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intersection<T> {
    Empty,
    Single(Point<T>),
    /// Ordered by ascending y, then x.
    Pair(Point<T>, Point<T>),
}

impl<T: Real> Intersection<T> {
    pub fn points(&self) -> Vec<Point<T>> {
        match *self {
            Intersection::Empty => vec![],
            Intersection::Single(p) => vec![p],
            Intersection::Pair(p, q) => vec![p, q],
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Intersection::Empty => 0,
            Intersection::Single(_) => 1,
            Intersection::Pair(..) => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Intersection::Empty)
    }

    fn pair(p: Point<T>, q: Point<T>, tol: &Tolerance<T>) -> Self {
        match compare_yx(p, q, tol) {
            Ordering::Greater => Intersection::Pair(q, p),
            _ => Intersection::Pair(p, q),
        }
    }
}

fn compare_yx<T: Real>(p: Point<T>, q: Point<T>, tol: &Tolerance<T>) -> Ordering {
    let scale = p.norm().max(q.norm());
    let key = |a: T, b: T| {
        if tol.is_zero(a - b, scale) {
            Ordering::Equal
        } else if a < b {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    };
    key(p.y, q.y).then_with(|| key(p.x, q.x))
}

/// Intersection of two circles or lines.
///
/// A discriminant that vanishes within `tol` is reported as a single
/// tangency point.
pub fn intersect<T: Real>(
    g1: &GeneralizedCircle<T>,
    g2: &GeneralizedCircle<T>,
    tol: &Tolerance<T>,
) -> Result<Intersection<T>> {
    use GeneralizedCircle as G;
    match (g1, g2) {
        (G::Circle(c1), G::Circle(c2)) => intersect_circles(c1, c2, tol),
        (G::Circle(c), G::Line(l)) | (G::Line(l), G::Circle(c)) => Ok(intersect_circle_line(c, l, tol)),
        (G::Line(l1), G::Line(l2)) => intersect_lines(l1, l2, tol),
    }
}

fn intersect_circles<T: Real>(c1: &Circle<T>, c2: &Circle<T>, tol: &Tolerance<T>) -> Result<Intersection<T>> {
    let (r1, r2) = (c1.radius, c2.radius);
    let v = c2.center - c1.center;
    let d = v.norm();
    let scale = r1 + r2;
    if tol.is_zero(d, scale) {
        return if tol.eq(r1, r2) {
            Err(Error::Coincident)
        } else {
            Ok(Intersection::Empty)
        };
    }
    let u = v / d;
    let along = (d * d + r1 * r1 - r2 * r2) / (T::two() * d);
    let outer = d - scale;
    let inner = d - (r1 - r2).abs();
    if tol.is_zero(outer, scale) || tol.is_zero(inner, scale) {
        return Ok(Intersection::Single(c1.center + u * along));
    }
    if outer > T::zero() || inner < T::zero() {
        return Ok(Intersection::Empty);
    }
    // Heron form of the half chord keeps precision for shallow crossings.
    let heron = (d + r1 + r2) * (r1 + r2 - d) * (d - r1 + r2) * (d + r1 - r2);
    let h = heron.max(T::zero()).sqrt() / (T::two() * d);
    let foot = c1.center + u * along;
    let off = u.perp() * h;
    Ok(Intersection::pair(foot - off, foot + off, tol))
}

fn intersect_circle_line<T: Real>(c: &Circle<T>, l: &Line<T>, tol: &Tolerance<T>) -> Intersection<T> {
    let delta = l.signed_distance(c.center);
    let foot = c.center - l.normal * delta;
    let dist = delta.abs();
    if tol.is_zero(dist - c.radius, c.radius) {
        return Intersection::Single(foot);
    }
    if dist > c.radius {
        return Intersection::Empty;
    }
    let h = ((c.radius - dist) * (c.radius + dist)).sqrt();
    let off = l.direction() * h;
    Intersection::pair(foot - off, foot + off, tol)
}

fn intersect_lines<T: Real>(l1: &Line<T>, l2: &Line<T>, tol: &Tolerance<T>) -> Result<Intersection<T>> {
    let det = l1.normal.cross(l2.normal);
    if tol.is_zero(det, T::one()) {
        let same = if l1.normal.dot(l2.normal) > T::zero() {
            l1.offset - l2.offset
        } else {
            l1.offset + l2.offset
        };
        return if tol.is_zero(same, l1.offset.abs().max(l2.offset.abs())) {
            Err(Error::Coincident)
        } else {
            Ok(Intersection::Empty)
        };
    }
    let x = (l1.offset * l2.normal.y - l2.offset * l1.normal.y) / det;
    let y = (l1.normal.x * l2.offset - l2.normal.x * l1.offset) / det;
    Ok(Intersection::Single(Point::new(x, y)))
}

/// Circle of Apollonius `{P : |P − f1| / |P − f2| = k}`; the perpendicular
/// bisector of `f1 f2` when `k = 1`.
///
/// The bisector is oriented with its normal pointing from `f1` towards `f2`.
pub fn apollonius_circle<T: Real>(f1: Point<T>, f2: Point<T>, k: T) -> Result<GeneralizedCircle<T>> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::Domain("Apollonius ratio must be positive and finite"));
    }
    if f1 == f2 {
        return Err(Error::Domain("Apollonius foci coincide"));
    }
    if k == T::one() {
        let normal = (f2 - f1)
            .normalized()
            .ok_or(Error::Domain("Apollonius foci coincide"))?;
        let mid = (f1 + f2) * T::half();
        return Ok(GeneralizedCircle::Line(Line {
            normal,
            offset: normal.dot(mid),
        }));
    }
    let k2 = k * k;
    let denom = T::one() - k2;
    let center = (f1 - f2 * k2) / denom;
    let radius = k * f1.distance(f2) / denom.abs();
    Circle::new(center, radius).map(GeneralizedCircle::Circle)
}

/// Circle through three points.
pub fn circumcircle<T: Real>(a: Point<T>, b: Point<T>, c: Point<T>) -> Result<Circle<T>> {
    let ab = b - a;
    let ac = c - a;
    let det = T::two() * ab.cross(ac);
    let scale = ab.norm_sqr().max(ac.norm_sqr()).max((c - b).norm_sqr());
    if !(det.abs() > T::lit(T::DEGENERACY) * scale) {
        return Err(Error::Degenerate("points are collinear"));
    }
    let (ab2, ac2) = (ab.norm_sqr(), ac.norm_sqr());
    let rel = Point::new(ac.y * ab2 - ab.y * ac2, ab.x * ac2 - ac.x * ab2) / det;
    Circle::new(a + rel, rel.norm())
}

/// Whether `d` lies on the circle through `a`, `b`, `c`.
pub fn concyclic<T: Real>(a: Point<T>, b: Point<T>, c: Point<T>, d: Point<T>, tol: &Tolerance<T>) -> Result<bool> {
    let circle = circumcircle(a, b, c)?;
    Ok(tol.is_zero(d.distance(circle.center) - circle.radius, circle.radius))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PencilKind {
    /// Circles of Apollonius with limit points ω, ω̄.
    Hyperbolic,
    /// Circles through the base points ω, ω̄.
    Elliptic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pencil<T> {
    kind: PencilKind,
    omega: Point<T>,
    omega_bar: Point<T>,
}

impl<T: Real> Pencil<T> {
    pub fn new(kind: PencilKind, omega: Point<T>, omega_bar: Point<T>) -> Result<Self> {
        if omega == omega_bar {
            return Err(Error::Domain("pencil points coincide"));
        }
        Ok(Self { kind, omega, omega_bar })
    }

    pub fn kind(&self) -> PencilKind {
        self.kind
    }

    pub fn omega(&self) -> Point<T> {
        self.omega
    }

    pub fn omega_bar(&self) -> Point<T> {
        self.omega_bar
    }

    /// The member of the pencil passing through `through`.
    pub fn member(&self, through: Point<T>, tol: &Tolerance<T>) -> Result<GeneralizedCircle<T>> {
        let sep = self.omega.distance(self.omega_bar);
        let d1 = through.distance(self.omega);
        let d2 = through.distance(self.omega_bar);
        if tol.is_zero(d1, sep) || tol.is_zero(d2, sep) {
            return Err(Error::Domain("point coincides with a pencil point"));
        }
        match self.kind {
            PencilKind::Hyperbolic => {
                let k = if tol.eq(d1, d2) { T::one() } else { d1 / d2 };
                apollonius_circle(self.omega, self.omega_bar, k)
            }
            PencilKind::Elliptic => match circumcircle(self.omega, self.omega_bar, through) {
                Ok(c) => Ok(GeneralizedCircle::Circle(c)),
                Err(_) => Line::through(self.omega, self.omega_bar).map(GeneralizedCircle::Line),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type P = Point<f64>;

    fn p(x: f64, y: f64) -> P {
        Point::new(x, y)
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn circle(x: f64, y: f64, r: f64) -> Circle<f64> {
        Circle::new(p(x, y), r).unwrap()
    }

    fn assert_pt(a: P, b: P, eps: f64) {
        assert_abs_diff_eq!(a.x, b.x, epsilon = eps);
        assert_abs_diff_eq!(a.y, b.y, epsilon = eps);
    }

    #[test]
    fn invert_point_examples() {
        let unit = Circle::<f64>::unit();
        assert_pt(invert_point(&unit, p(2.0, 0.0)).unwrap(), p(0.5, 0.0), 1e-15);
        assert_pt(invert_point(&unit, p(0.6, 0.8)).unwrap(), p(0.6, 0.8), 1e-15);
        let c = circle(0.0, 1.0, 3f64.sqrt());
        // (0,-1.5) relative to the center, |d|² = 2.25, r² = 3: scale 4/3
        assert_pt(invert_point(&c, p(0.0, -0.5)).unwrap(), p(0.0, -1.0), 1e-15);
        assert_eq!(
            invert_point(&unit, P::origin()),
            Err(Error::AtInfinity("image at infinity"))
        );
    }

    #[test]
    fn invert_generalized_examples() {
        let unit = Circle::<f64>::unit();
        let line: GeneralizedCircle<f64> = Line::new(p(1.0, 0.0), 2.0).unwrap().into();
        let img = invert_generalized(&unit, &line, &tol());
        let c = img.as_circle().unwrap();
        assert_pt(c.center(), p(0.25, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 0.25, epsilon = 1e-15);

        let img = invert_generalized(&unit, &circle(3.0, 0.0, 1.0).into(), &tol());
        let c = img.as_circle().unwrap();
        assert_pt(c.center(), p(0.375, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 0.125, epsilon = 1e-15);

        let img = invert_generalized(&unit, &circle(0.0, 0.0, 2.0).into(), &tol());
        let c = img.as_circle().unwrap();
        assert_pt(c.center(), P::origin(), 1e-15);
        assert_abs_diff_eq!(c.radius(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn invert_generalized_through_center() {
        let unit = Circle::<f64>::unit();
        // circle through the origin, antipode (2,0) maps to (1/2, 0)
        let img = invert_generalized(&unit, &circle(1.0, 0.0, 1.0).into(), &tol());
        let l = img.as_line().unwrap();
        assert_pt(l.normal(), p(1.0, 0.0), 1e-15);
        assert_abs_diff_eq!(l.offset(), 0.5, epsilon = 1e-15);
        // and back
        let back = invert_generalized(&unit, &img, &tol());
        let c = back.as_circle().unwrap();
        assert_pt(c.center(), p(1.0, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 1.0, epsilon = 1e-15);
        // line through the center is fixed
        let diameter: GeneralizedCircle<f64> = Line::new(p(0.0, 1.0), 0.0).unwrap().into();
        assert_eq!(invert_generalized(&unit, &diameter, &tol()), diameter);
    }

    #[test]
    fn invert_generalized_matches_sampled_points() {
        let inv = circle(0.3, -0.2, 1.7);
        let shapes: [GeneralizedCircle<f64>; 3] = [
            circle(2.0, 1.0, 0.7).into(),
            circle(-1.0, 0.5, 3.0).into(),
            Line::new(p(0.6, 0.8), 1.5).unwrap().into(),
        ];
        for g in shapes {
            let img = invert_generalized(&inv, &g, &tol());
            for i in 0..12 {
                let t = i as f64 * 0.5;
                let q = match g {
                    GeneralizedCircle::Circle(c) => c.point_at(t),
                    GeneralizedCircle::Line(l) => l.closest_to_origin() + l.direction() * (t - 3.0),
                };
                let qi = invert_point(&inv, q).unwrap();
                assert!(img.residual(qi).abs() < 1e-12, "{:?}", img.residual(qi));
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let r = intersect(&circle(0.0, 0.0, 1.0).into(), &circle(1.0, 0.0, 1.0).into(), &tol()).unwrap();
        let h = 3f64.sqrt() / 2.0;
        match r {
            Intersection::Pair(a, b) => {
                assert_pt(a, p(0.5, -h), 1e-15);
                assert_pt(b, p(0.5, h), 1e-15);
            }
            other => panic!("{other:?}"),
        }
        let r = intersect(&circle(0.0, 0.0, 1.0).into(), &circle(3.0, 0.0, 1.0).into(), &tol()).unwrap();
        assert!(r.is_empty());
        let tangent = Line::new(p(1.0, 0.0), 1.0).unwrap();
        let r = intersect(&circle(0.0, 0.0, 1.0).into(), &tangent.into(), &tol()).unwrap();
        assert_eq!(r, Intersection::Single(p(1.0, 0.0)));
    }

    #[test]
    fn intersection_edge_cases() {
        let c: GeneralizedCircle<f64> = circle(1.0, 2.0, 3.0).into();
        assert_eq!(intersect(&c, &c, &tol()), Err(Error::Coincident));
        let l: GeneralizedCircle<f64> = Line::new(p(0.0, 2.0), 2.0).unwrap().into();
        let flipped: GeneralizedCircle<f64> = Line::new(p(0.0, -1.0), -1.0).unwrap().into();
        assert_eq!(intersect(&l, &flipped, &tol()), Err(Error::Coincident));
        let parallel: GeneralizedCircle<f64> = Line::new(p(0.0, 1.0), 3.0).unwrap().into();
        assert!(intersect(&l, &parallel, &tol()).unwrap().is_empty());
        let cross: GeneralizedCircle<f64> = Line::new(p(1.0, 1.0), 0.0).unwrap().into();
        assert_eq!(
            intersect(&l, &cross, &tol()).unwrap(),
            Intersection::Single(p(-1.0, 1.0))
        );
        // internal tangency
        let r = intersect(&circle(0.0, 0.0, 2.0).into(), &circle(1.0, 0.0, 1.0).into(), &tol()).unwrap();
        assert_eq!(r, Intersection::Single(p(2.0, 0.0)));
        // concentric, different radii
        let r = intersect(&circle(0.0, 0.0, 2.0).into(), &circle(0.0, 0.0, 1.0).into(), &tol()).unwrap();
        assert!(r.is_empty());
        // circle-line pair ordered by y then x
        let horizontal: GeneralizedCircle<f64> = Line::new(p(0.0, 1.0), 0.0).unwrap().into();
        match intersect(&horizontal, &circle(0.0, 0.0, 1.0).into(), &tol()).unwrap() {
            Intersection::Pair(a, b) => {
                assert_pt(a, p(-1.0, 0.0), 1e-15);
                assert_pt(b, p(1.0, 0.0), 1e-15);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn apollonius_examples() {
        let (f1, f2) = (p(-1.0, 0.0), p(1.0, 0.0));
        let bis = apollonius_circle(f1, f2, 1.0).unwrap();
        let l = bis.as_line().unwrap();
        assert_pt(l.normal(), p(1.0, 0.0), 0.0);
        assert_eq!(l.offset(), 0.0);

        let c = *apollonius_circle(f1, f2, 2.0).unwrap().as_circle().unwrap();
        assert_pt(c.center(), p(5.0 / 3.0, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 4.0 / 3.0, epsilon = 1e-15);

        let c = *apollonius_circle(f1, f2, 0.5).unwrap().as_circle().unwrap();
        assert_pt(c.center(), p(-5.0 / 3.0, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 4.0 / 3.0, epsilon = 1e-15);

        assert!(matches!(apollonius_circle(f1, f2, 0.0), Err(Error::Domain(_))));
        assert!(matches!(apollonius_circle(f1, f2, -2.0), Err(Error::Domain(_))));
        assert!(matches!(apollonius_circle(f1, f1, 2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn apollonius_point_set() {
        let (f1, f2) = (p(0.3, -1.2), p(2.5, 0.7));
        for k in [0.2, 0.9, 1.0, 1.1, 7.0] {
            let g = apollonius_circle(f1, f2, k).unwrap();
            for i in 0..20 {
                let t = i as f64 * 0.31;
                let q = match g {
                    GeneralizedCircle::Circle(c) => c.point_at(t),
                    GeneralizedCircle::Line(l) => l.closest_to_origin() + l.direction() * (t - 3.0),
                };
                let ratio = q.distance(f1) / q.distance(f2);
                assert!((ratio - k).abs() <= 1e-9 * k, "k={k} ratio={ratio}");
            }
        }
    }

    #[test]
    fn pencil_examples() {
        let (f1, f2) = (p(-1.0, 0.0), p(1.0, 0.0));
        let hyp = Pencil::new(PencilKind::Hyperbolic, f1, f2).unwrap();
        let c = *hyp.member(p(3.0, 0.0), &tol()).unwrap().as_circle().unwrap();
        assert_pt(c.center(), p(5.0 / 3.0, 0.0), 1e-15);
        assert_abs_diff_eq!(c.radius(), 4.0 / 3.0, epsilon = 1e-15);
        assert!(hyp.member(p(0.0, 5.0), &tol()).unwrap().as_line().is_some());

        let ell = Pencil::new(PencilKind::Elliptic, f1, f2).unwrap();
        let c = *ell.member(p(0.0, 1.0), &tol()).unwrap().as_circle().unwrap();
        assert_pt(c.center(), P::origin(), 1e-15);
        assert_abs_diff_eq!(c.radius(), 1.0, epsilon = 1e-15);

        let far = ell.member(p(0.0, 1e6), &tol()).unwrap();
        let c = far.as_circle().expect("large circle, not a line");
        assert!(c.radius() > 4e5);
        assert!(ell.member(p(5.0, 0.0), &tol()).unwrap().as_line().is_some());

        assert!(matches!(hyp.member(f1, &tol()), Err(Error::Domain(_))));
        assert!(matches!(ell.member(f2, &tol()), Err(Error::Domain(_))));
        assert!(Pencil::new(PencilKind::Elliptic, f1, f1).is_err());
    }

    #[test]
    fn concyclic_examples() {
        let t = tol();
        assert!(concyclic(p(1.0, 0.0), p(0.0, 1.0), p(-1.0, 0.0), p(0.0, -1.0), &t).unwrap());
        assert!(!concyclic(p(1.0, 0.0), p(0.0, 1.0), p(-1.0, 0.0), p(0.0, -1.001), &t).unwrap());
        assert!(concyclic(p(0.8, 0.6), p(1.0, 0.0), p(-1.0, 0.0), p(0.6, -0.8), &t).unwrap());
        assert!(matches!(
            concyclic(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), p(0.0, 1.0), &t),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn works_in_single_precision() {
        let unit = Circle::<f32>::unit();
        let q = invert_point(&unit, Point::new(2.0_f32, 0.0)).unwrap();
        assert!((q.x - 0.5).abs() < 1e-7);
        let t = Tolerance::<f32>::default();
        let r = intersect(
            &Circle::new(Point::new(0.0_f32, 0.0), 1.0).unwrap().into(),
            &Circle::new(Point::new(1.0_f32, 0.0), 1.0).unwrap().into(),
            &t,
        )
        .unwrap();
        assert_eq!(r.len(), 2);
    }
}
