//! The similarity circle in space.
//!
//! With the reference frame placed in the plane `z = 0`, the points `X` of
//! ℝ³ whose distances to `A₀, B₀, C₀` are proportional to `a : b : c` form a
//! circle. It stands vertically on the diameter `PP′` joining the two
//! planar Pompeiu points, is a circle of Apollonius for the two points
//! where its plane cuts the unit circle, and is mapped to itself both by
//! inversion in the unit sphere and by reflection in `z = 0`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::geom2::Point;
use crate::pompeiu::solve;
use crate::scalar::Real;
use crate::shape::SideLengths;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    /// Lifts a planar point into `z = 0`.
    pub fn from_plane(p: Point<T>) -> Self {
        Self::new(p.x, p.y, T::zero())
    }

    pub fn unit_z() -> Self {
        Self::new(T::zero(), T::zero(), T::one())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_sqr(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn distance(self, o: Self) -> T {
        (self - o).norm()
    }

    /// Mirror image in the plane `z = 0`.
    pub fn reflect_z(self) -> Self {
        Self::new(self.x, self.y, -self.z)
    }

    fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > T::zero()).then(|| self * (T::one() / n))
    }
}

impl<T: Real> Add for Point3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Point3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for Point3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for Point3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle3<T> {
    center: Point3<T>,
    radius: T,
    plane_normal: Point3<T>,
}

impl<T: Real> Circle3<T> {
    pub fn new(center: Point3<T>, radius: T, plane_normal: Point3<T>) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::Domain("circle radius must be positive and finite"));
        }
        let plane_normal = plane_normal
            .normalized()
            .ok_or(Error::Domain("circle plane normal must be nonzero"))?;
        Ok(Self {
            center,
            radius,
            plane_normal,
        })
    }

    pub fn center(&self) -> Point3<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn plane_normal(&self) -> Point3<T> {
        self.plane_normal
    }

    /// Orthonormal basis of the circle's plane. For a vertical plane the
    /// first vector is horizontal (`normal × ẑ`) and the second is `ẑ`.
    pub fn basis(&self) -> (Point3<T>, Point3<T>) {
        let n = self.plane_normal;
        let e1 = n
            .cross(Point3::unit_z())
            .normalized()
            .unwrap_or_else(|| Point3::new(T::one(), T::zero(), T::zero()));
        (e1, e1.cross(n))
    }

    /// Distance from `x` to the circle (as a curve).
    pub fn distance_to(&self, x: Point3<T>) -> T {
        let v = x - self.center;
        let off_plane = v.dot(self.plane_normal);
        let in_plane = (v - self.plane_normal * off_plane).norm();
        off_plane.hypot(in_plane - self.radius)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sphere<T> {
    pub center: Point3<T>,
    pub radius: T,
}

impl<T: Real> Sphere<T> {
    pub fn new(center: Point3<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::Domain("sphere radius must be positive and finite"));
        }
        Ok(Self { center, radius })
    }

    /// The sphere with the unit circle of `z = 0` as its equator.
    pub fn unit() -> Self {
        Self {
            center: Point3::default(),
            radius: T::one(),
        }
    }
}

/// The circle of all points of space realizing the class of `△(a, b, c)`.
pub fn similarity_circle<T: Real>(s: &SideLengths<T>) -> Result<Circle3<T>> {
    let sol = solve(s)?;
    let p_prime = sol.p_prime.ok_or(Error::Domain("locus degenerates (P′ at infinity)"))?;
    let p = sol.p;
    let dir = Point3::from_plane(p_prime)
        .normalized()
        .ok_or(Error::Domain("locus degenerates (P′ at infinity)"))?;
    // ẑ × OP: positive orientation against the direction of P
    let normal = Point3::unit_z().cross(dir);
    Circle3::new(
        Point3::from_plane((p + p_prime) * T::half()),
        p.distance(p_prime) * T::half(),
        normal,
    )
}

/// `(W, W′)`: where the plane of `c` cuts the unit circle, with `W` on the
/// side of `P`.
pub fn foci<T: Real>(c: &Circle3<T>) -> (Point3<T>, Point3<T>) {
    let (horizontal, _) = c.basis();
    (horizontal, -horizontal)
}

pub fn sphere_invert<T: Real>(s: &Sphere<T>, p: Point3<T>) -> Result<Point3<T>> {
    let v = p - s.center;
    let d2 = v.norm_sqr();
    if d2 == T::zero() {
        return Err(Error::AtInfinity("image at infinity"));
    }
    Ok(s.center + v * (s.radius * s.radius / d2))
}

/// Point at angle `t` on `c`, measured from the first basis vector towards
/// the second.
pub fn sample_circle<T: Real>(c: &Circle3<T>, t: T) -> Point3<T> {
    let (e1, e2) = c.basis();
    c.center + e1 * (c.radius * t.cos()) + e2 * (c.radius * t.sin())
}
