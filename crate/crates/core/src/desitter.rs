//! Circles as points of de Sitter space.
//!
//! Minkowski 4-space carries `⟨x, y⟩ = −x₀y₀ + x₁y₁ + x₂y₂ + x₃y₃`. A point
//! `p` of the plane lifts to the lightlike vector
//! `ψ(p) = ((1 + |p|²)/2, (1 − |p|²)/2, p.x, p.y)`, and an oriented circle
//! or line lifts to the unit spacelike vector `γ` whose orthogonal
//! complement cuts out exactly the lifts of its points. Inner products of
//! lifts are the Möbius invariants of pairs of circles: `cosh λ` for
//! disjoint ones (λ the geodesic separation) and `cos θ` for crossing ones.
//!
//! Orientation: `+1` is anticlockwise for circles and "normal on the left
//! of travel" for lines. With this choice `θ` is the angle between the
//! oriented tangents at a crossing.

use crate::error::{Error, Result};
use crate::geom2::{apollonius_circle, GeneralizedCircle, Point};
use crate::scalar::{Real, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MinkowskiVector<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
    pub x3: T,
}

impl<T: Real> MinkowskiVector<T> {
    pub fn new(x0: T, x1: T, x2: T, x3: T) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    fn zip(self, o: Self, f: impl Fn(T, T) -> T) -> Self {
        Self::new(f(self.x0, o.x0), f(self.x1, o.x1), f(self.x2, o.x2), f(self.x3, o.x3))
    }

    fn scaled(self, k: T) -> Self {
        Self::new(self.x0 * k, self.x1 * k, self.x2 * k, self.x3 * k)
    }
}

pub fn minkowski_inner<T: Real>(u: &MinkowskiVector<T>, v: &MinkowskiVector<T>) -> T {
    -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

/// A point of `Λ = {x : ⟨x, x⟩ = 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeSitterPoint<T> {
    gamma: MinkowskiVector<T>,
}

impl<T: Real> DeSitterPoint<T> {
    pub fn new(gamma: MinkowskiVector<T>, tol: &Tolerance<T>) -> Result<Self> {
        if !tol.eq(minkowski_inner(&gamma, &gamma), T::one()) {
            return Err(Error::Domain("vector is not on the de Sitter quadric"));
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> MinkowskiVector<T> {
        self.gamma
    }

    pub fn inner(&self, other: &Self) -> T {
        minkowski_inner(&self.gamma, &other.gamma)
    }

    /// `(⟨γ₁ − γ₂, γ₁ − γ₂⟩, ⟨γ₁ + γ₂, γ₁ + γ₂⟩)`, i.e. `2 ∓ 2⟨γ₁, γ₂⟩`
    /// without the cancellation of forming the inner product first.
    fn gaps(&self, other: &Self) -> (T, T) {
        let d = self.gamma.zip(other.gamma, |a, b| a - b);
        let s = self.gamma.zip(other.gamma, |a, b| a + b);
        (minkowski_inner(&d, &d), minkowski_inner(&s, &s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(s: i8) -> Result<Self> {
        match s {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            _ => Err(Error::Domain("orientation must be +1 or -1")),
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedCircle<T> {
    pub geo: GeneralizedCircle<T>,
    pub orientation: Orientation,
}

impl<T: Real> OrientedCircle<T> {
    pub fn new(geo: impl Into<GeneralizedCircle<T>>, orientation: Orientation) -> Self {
        Self {
            geo: geo.into(),
            orientation,
        }
    }

    pub fn positive(geo: impl Into<GeneralizedCircle<T>>) -> Self {
        Self::new(geo, Orientation::Positive)
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.geo, self.orientation.reversed())
    }

    /// Unit tangent at a point of the locus, following the orientation.
    pub fn tangent_at(&self, p: Point<T>) -> Point<T> {
        let t = self.geo.tangent_at(p);
        match self.orientation {
            Orientation::Positive => t,
            Orientation::Negative => -t,
        }
    }
}

pub fn lift_point<T: Real>(p: Point<T>) -> MinkowskiVector<T> {
    let n2 = p.norm_sqr();
    MinkowskiVector::new((T::one() + n2) * T::half(), (T::one() - n2) * T::half(), p.x, p.y)
}

pub fn lift_circle<T: Real>(c: &OrientedCircle<T>) -> DeSitterPoint<T> {
    let gamma = match c.geo {
        GeneralizedCircle::Circle(circle) => {
            let eta = circle.center();
            let r = circle.radius();
            // |η|² − r² as a product keeps small circles far out accurate
            let power = (eta.norm() - r) * (eta.norm() + r);
            MinkowskiVector::new(
                (T::one() + power) * T::half(),
                (T::one() - power) * T::half(),
                eta.x,
                eta.y,
            )
            .scaled(T::one() / r)
        }
        GeneralizedCircle::Line(line) => {
            let d = line.offset();
            let n = line.normal();
            MinkowskiVector::new(d, -d, n.x, n.y)
        }
    };
    let gamma = match c.orientation {
        Orientation::Positive => gamma,
        Orientation::Negative => gamma.scaled(-T::one()),
    };
    DeSitterPoint { gamma }
}

/// Geodesic distance `λ` between two disjoint oriented circles,
/// `⟨γ₁, γ₂⟩ = cosh λ`.
pub fn poncelet_separation<T: Real>(c1: &OrientedCircle<T>, c2: &OrientedCircle<T>) -> Result<T> {
    let (g1, g2) = (lift_circle(c1), lift_circle(c2));
    let ip = g1.inner(&g2);
    if ip < T::one() - T::lit(T::REL_TOL) {
        return Err(Error::Domain("circles intersect or orientations inconsistent"));
    }
    // cosh λ − 1 = −⟨γ₁ − γ₂, γ₁ − γ₂⟩ / 2
    let (dd, _) = g1.gaps(&g2);
    let t = (-dd * T::half()).max(T::zero());
    Ok((t + (t * (t + T::two())).sqrt()).ln_1p())
}

/// Angle `θ ∈ [0, π]` between two crossing oriented circles,
/// `⟨γ₁, γ₂⟩ = cos θ`.
pub fn intersection_angle<T: Real>(c1: &OrientedCircle<T>, c2: &OrientedCircle<T>) -> Result<T> {
    let (g1, g2) = (lift_circle(c1), lift_circle(c2));
    let ip = g1.inner(&g2);
    if ip.abs() > T::one() + T::lit(T::REL_TOL) {
        return Err(Error::Domain("disjoint"));
    }
    // |γ₁ − γ₂| = 2 sin(θ/2), |γ₁ + γ₂| = 2 cos(θ/2)
    let (dd, ss) = g1.gaps(&g2);
    Ok(T::two() * dd.max(T::zero()).sqrt().atan2(ss.max(T::zero()).sqrt()))
}

/// Incidence through the light cone: `⟨ψ(p), γ⟩ = 0`.
pub fn point_on_circle_test<T: Real>(p: Point<T>, c: &OrientedCircle<T>, tol: &Tolerance<T>) -> bool {
    let psi = lift_point(p).as_array();
    let gamma = lift_circle(c).gamma.as_array();
    let ip = minkowski_inner(&lift_point(p), &lift_circle(c).gamma);
    let scale = psi
        .iter()
        .zip(gamma.iter())
        .fold(T::zero(), |acc, (a, b)| acc + (*a * *b).abs());
    tol.is_zero(ip, scale)
}

/// The member `|x − f₁| / |x − f₂| = k` of the hyperbolic pencil with
/// limit points `f₁, f₂`, oriented so that all members lie on one geodesic
/// of `Λ`: anticlockwise around `f₁` (k < 1), clockwise around `f₂` (k > 1),
/// and the bisector traveled with `f₁` on its left.
pub fn apollonius_member<T: Real>(f1: Point<T>, f2: Point<T>, k: T) -> Result<OrientedCircle<T>> {
    let geo = apollonius_circle(f1, f2, k)?;
    let orientation = if k < T::one() {
        Orientation::Positive
    } else {
        Orientation::Negative
    };
    Ok(OrientedCircle::new(geo, orientation))
}
