//! Shape coordinates of labeled triangles.
//!
//! A similarity class (orientation and labels preserved) has three
//! coordinates here:
//!
//! * the shape function `σ = (A − B)/(C − B)` in the upper half plane,
//! * the disc coordinate `w = (σ − ρ)/(σ − ρ̄)` with `ρ = e^{iπ/3}`,
//! * the Pompeiu coordinate `z = i·w̄`: the point of the unit disc whose
//!   distances to the reference vertices `A₀, B₀, C₀` are proportional to
//!   the side lengths `a, b, c`.
//!
//! [`ShapeClass`] stores `w`; `z` is an exact involution of it (a
//! coordinate swap), so it is derived on demand.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geom2::Point;
use crate::scalar::{Real, Tolerance};

/// `ρ = e^{iπ/3}`.
pub fn rho<T: Real>() -> Complex<T> {
    Complex::new(T::half(), T::sqrt3() * T::half())
}

/// The fixed equilateral frame inscribed in the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceFrame<T> {
    pub a0: Point<T>,
    pub b0: Point<T>,
    pub c0: Point<T>,
}

impl<T: Real> ReferenceFrame<T> {
    /// `A₀ = i`, `B₀ = −e^{iπ/6}`, `C₀ = e^{−iπ/6}`.
    pub fn standard() -> Self {
        let h = T::sqrt3() * T::half();
        Self {
            a0: Point::new(T::zero(), T::one()),
            b0: Point::new(-h, -T::half()),
            c0: Point::new(h, -T::half()),
        }
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        [self.a0, self.b0, self.c0]
    }

    /// `(|p − A₀|, |p − B₀|, |p − C₀|)`.
    pub fn distances(&self, p: Point<T>) -> [T; 3] {
        [p.distance(self.a0), p.distance(self.b0), p.distance(self.c0)]
    }
}

/// A labeled, anticlockwise, nondegenerate triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<T> {
    a: Point<T>,
    b: Point<T>,
    c: Point<T>,
}

impl<T: Real> Triangle<T> {
    /// Rejects clockwise labelings with [`Error::Clockwise`] and triangles
    /// whose area is below `DEGENERACY × (longest side)²` with
    /// [`Error::Degenerate`].
    pub fn new(a: Point<T>, b: Point<T>, c: Point<T>) -> Result<Self> {
        let area = signed_area(a, b, c)?;
        if area < T::zero() {
            return Err(Error::Clockwise);
        }
        Ok(Self { a, b, c })
    }

    /// Like [`Triangle::new`], but swaps `B` and `C` when the input is clockwise.
    pub fn orient(a: Point<T>, b: Point<T>, c: Point<T>) -> Result<Self> {
        match Self::new(a, b, c) {
            Err(Error::Clockwise) => Self::new(a, c, b),
            other => other,
        }
    }

    pub fn a(&self) -> Point<T> {
        self.a
    }

    pub fn b(&self) -> Point<T> {
        self.b
    }

    pub fn c(&self) -> Point<T> {
        self.c
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        [self.a, self.b, self.c]
    }

    pub fn area(&self) -> T {
        (self.b - self.a).cross(self.c - self.a) * T::half()
    }

    /// Applies `p ↦ αp + β` to every vertex. `α` must be nonzero.
    pub fn map_similarity(&self, alpha: Complex<T>, beta: Complex<T>) -> Result<Self> {
        let f = |p: Point<T>| Point::from_complex(alpha * p.to_complex() + beta);
        Self::new(f(self.a), f(self.b), f(self.c))
    }

    /// `(B, C, A)`.
    pub fn relabel(&self) -> Self {
        Self {
            a: self.b,
            b: self.c,
            c: self.a,
        }
    }
}

fn signed_area<T: Real>(a: Point<T>, b: Point<T>, c: Point<T>) -> Result<T> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::Domain("vertices must be finite"));
    }
    let longest = a.distance(b).max(b.distance(c)).max(c.distance(a));
    let area = (b - a).cross(c - a) * T::half();
    if !(area.abs() > T::lit(T::DEGENERACY) * longest * longest) {
        return Err(Error::Degenerate("triangle has (near) zero area"));
    }
    Ok(area)
}

/// Side lengths `a = |B − C|`, `b = |C − A|`, `c = |A − B|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLengths<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Real> SideLengths<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let ok = |x: T| x > T::zero() && x.is_finite();
        if !(ok(a) && ok(b) && ok(c)) {
            return Err(Error::Domain("side lengths must be positive and finite"));
        }
        if !(a < b + c && b < c + a && c < a + b) {
            return Err(Error::TriangleInequality);
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    pub fn scaled(&self, k: T) -> Result<Self> {
        Self::new(self.a * k, self.b * k, self.c * k)
    }

    pub fn is_equilateral(&self, tol: &Tolerance<T>) -> bool {
        tol.eq(self.a, self.b) && tol.eq(self.b, self.c) && tol.eq(self.a, self.c)
    }

    /// `(a+b+c)(−a+b+c)(a−b+c)(a+b−c)`, i.e. `16·area²`, which also equals
    /// `−a⁴−b⁴−c⁴+2a²b²+2b²c²+2c²a²`. The factored form has no cancellation.
    pub fn heron_product(&self) -> T {
        let (a, b, c) = (self.a, self.b, self.c);
        (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    }
}

/// A similarity class, stored by its disc coordinate `w`, `|w| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeClass<T> {
    w: Complex<T>,
}

impl<T: Real> ShapeClass<T> {
    pub fn new(w: Point<T>) -> Result<Self> {
        Self::from_complex(w.to_complex())
    }

    pub fn from_complex(w: Complex<T>) -> Result<Self> {
        if !(w.norm_sqr() < T::one()) {
            return Err(Error::OutsideDisc);
        }
        Ok(Self { w })
    }

    /// Skips the disc check; for maps known to preserve `|w| < 1` up to rounding.
    pub(crate) fn from_complex_unchecked(w: Complex<T>) -> Self {
        Self { w }
    }

    /// The equilateral class, `w = 0`.
    pub fn equilateral() -> Self {
        Self {
            w: Complex::new(T::zero(), T::zero()),
        }
    }

    /// Class with Pompeiu coordinate `z`, i.e. `w = i·z̄`.
    pub fn from_pompeiu(z: Point<T>) -> Result<Self> {
        Self::new(pompeiu_swap(z))
    }

    pub fn phi(&self) -> Point<T> {
        Point::from_complex(self.w)
    }

    pub fn phi_complex(&self) -> Complex<T> {
        self.w
    }

    /// Pompeiu coordinate `z = i·w̄`.
    pub fn pompeiu(&self) -> Point<T> {
        pompeiu_swap(self.phi())
    }

    pub fn pompeiu_complex(&self) -> Complex<T> {
        self.pompeiu().to_complex()
    }

    pub fn modulus(&self) -> T {
        self.w.norm()
    }

    pub fn is_equilateral(&self, tol: &Tolerance<T>) -> bool {
        tol.is_zero(self.modulus(), T::one())
    }
}

/// `i·conj(x + iy) = y + ix`. Its own inverse.
#[inline]
fn pompeiu_swap<T: Real>(p: Point<T>) -> Point<T> {
    Point::new(p.y, p.x)
}

/// Shape function `σ = (A − B)/(C − B)`.
pub fn sigma<T: Real>(t: &Triangle<T>) -> Point<T> {
    let (a, b, c) = (t.a.to_complex(), t.b.to_complex(), t.c.to_complex());
    Point::from_complex((a - b) / (c - b))
}

/// `σ` of `△(a, b, c)` from the law of cosines and Heron's formula.
pub fn sigma_of_sides<T: Real>(s: &SideLengths<T>) -> Point<T> {
    let (a, b, c) = (s.a, s.b, s.c);
    let a2 = a * a;
    let x = (a2 + c * c - b * b) / (T::two() * a2);
    let y = s.heron_product().sqrt() / (T::two() * a2);
    Point::new(x, y)
}

/// `w = (σ − ρ)/(σ − ρ̄)`; requires `Im σ > 0`.
pub fn phi_from_sigma<T: Real>(s: Point<T>) -> Result<ShapeClass<T>> {
    if !(s.y > T::zero()) || !s.is_finite() {
        return Err(Error::Domain("shape function must lie in the upper half plane"));
    }
    let r = rho::<T>();
    let z = s.to_complex();
    ShapeClass::from_complex((z - r) / (z - r.conj()))
        .map_err(|_| Error::Degenerate("class at the boundary of the disc"))
}

/// `w = (A + ρ²B + ρ⁴C)/(A + ρ⁴B + ρ²C)`.
pub fn phi<T: Real>(t: &Triangle<T>) -> ShapeClass<T> {
    let r = rho::<T>();
    let (r2, r4) = (r * r, r * r * r * r);
    let (a, b, c) = (t.a.to_complex(), t.b.to_complex(), t.c.to_complex());
    let w = (a + r2 * b + r4 * c) / (a + r4 * b + r2 * c);
    // anticlockwise and nondegenerate: the ratio lies in the open disc
    ShapeClass { w }
}

/// `w` of `△(a, b, c)` in closed form:
/// `(−2a² + b² + c² + √3(b² − c²)i) / (a² + b² + c² + √3·√(16·area²))`.
pub fn phi_of_sides<T: Real>(s: &SideLengths<T>) -> ShapeClass<T> {
    let (a2, b2, c2) = (s.a * s.a, s.b * s.b, s.c * s.c);
    let r3 = T::sqrt3();
    let num = Complex::new(-T::two() * a2 + b2 + c2, r3 * (b2 - c2));
    let den = a2 + b2 + c2 + r3 * s.heron_product().sqrt();
    ShapeClass { w: num / den }
}

/// Pompeiu coordinate of a class.
pub fn pompeiu_coordinate<T: Real>(c: &ShapeClass<T>) -> Point<T> {
    c.pompeiu()
}

/// Class of the triangle with sides `(|p − A₀|, |p − B₀|, |p − C₀|)`,
/// computed from the distances.
pub fn class_from_point_by_distances<T: Real>(p: Point<T>) -> Result<ShapeClass<T>> {
    if !(p.norm_sqr() < T::one()) {
        return Err(Error::Domain(
            "point on or outside the unit circle gives a degenerate triple",
        ));
    }
    let [a, b, c] = ReferenceFrame::standard().distances(p);
    SideLengths::new(a, b, c).map(|s| phi_of_sides(&s))
}

/// Class whose Pompeiu coordinate is `p`, `|p| < 1`.
///
/// Returns `i·p̄`; debug builds also evaluate the distance construction and
/// check that both agree.
pub fn class_from_point<T: Real>(p: Point<T>) -> Result<ShapeClass<T>> {
    if !(p.norm_sqr() < T::one()) || !p.is_finite() {
        return Err(Error::Domain(
            "point on or outside the unit circle gives a degenerate triple",
        ));
    }
    let closed = ShapeClass::from_pompeiu(p)?;
    #[cfg(debug_assertions)]
    {
        let margin = T::one() - p.norm();
        if margin > T::lit(1e-3) {
            if let Ok(by_distances) = class_from_point_by_distances(p) {
                let gap = (by_distances.w - closed.w).norm();
                debug_assert!(
                    gap <= T::lit(1e-6),
                    "distance construction disagrees with i·conj(p): {gap}"
                );
            }
        }
    }
    Ok(closed)
}

pub fn side_lengths<T: Real>(t: &Triangle<T>) -> SideLengths<T> {
    SideLengths {
        a: t.b.distance(t.c),
        b: t.c.distance(t.a),
        c: t.a.distance(t.b),
    }
}
