//! Constructive Pompeiu points.
//!
//! Given side lengths `a, b, c`, the points `P` with
//! `|P − A₀| : |P − B₀| : |P − C₀| = a : b : c` lie on two circles of
//! Apollonius (foci `A₀, B₀` and `A₀, C₀`). Inversion in `Γ(A₀, √3)`, the
//! circle about `A₀` through `B₀` and `C₀`, turns them into the circles
//! `Γ(B₀, √3·b/a)` and `Γ(C₀, √3·c/a)`. Their two crossings, one below and
//! one above the line `B₀C₀`, invert back to the interior point `P` and the
//! exterior point `P′`.
//!
//! Nothing here uses the closed form `z = i·w̄`, so [`solve`] can serve as
//! an independent check of it.

use crate::error::{Error, Result};
use crate::geom2::{intersect, invert_point, Circle, Intersection, Point};
use crate::scalar::{Real, Tolerance};
use crate::shape::{ReferenceFrame, SideLengths};

/// `P′` closer than this to `A₀` before the final inversion is treated as ∞.
pub const NEAR_EQUILATERAL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PompeiuSolution<T> {
    /// Interior point, `|p| < 1`.
    pub p: Point<T>,
    /// Exterior point; `None` when it is at infinity (equilateral input).
    pub p_prime: Option<Point<T>>,
    /// Set when `p_prime` was dropped because the construction put it
    /// within [`NEAR_EQUILATERAL`] of infinity.
    pub near_equilateral: bool,
}

/// Finds the interior and exterior Pompeiu points of `△(a, b, c)`.
pub fn solve<T: Real>(s: &SideLengths<T>) -> Result<PompeiuSolution<T>> {
    let frame = ReferenceFrame::<T>::standard();
    let r3 = T::sqrt3();
    let inversion = Circle::new(frame.a0, r3)?;
    let image_b = Circle::new(frame.b0, r3 * s.b() / s.a())?;
    let image_c = Circle::new(frame.c0, r3 * s.c() / s.a())?;

    // strict triangle inequalities make the two image circles cross
    let exact = Tolerance::new(T::zero(), T::zero());
    let (q1, q2) = match intersect(&image_b.into(), &image_c.into(), &exact)? {
        Intersection::Pair(q1, q2) => (q1, q2),
        other => {
            return Err(Error::Internal(format!(
                "image circles meet in {} point(s) for valid side lengths",
                other.len()
            )))
        }
    };
    let line_y = -T::half();
    let (below, above) = match (q1.y < line_y, q2.y < line_y) {
        (true, false) => (q1, q2),
        (false, true) => (q2, q1),
        _ => {
            return Err(Error::Internal(
                "image crossings are not separated by the line B0C0".into(),
            ))
        }
    };

    let p = invert_point(&inversion, below)?;
    if !(p.norm_sqr() < T::one()) {
        return Err(Error::Internal("interior Pompeiu point left the unit disc".into()));
    }
    let near_equilateral = above.distance(frame.a0) < T::lit(NEAR_EQUILATERAL);
    let p_prime = if near_equilateral {
        None
    } else {
        Some(invert_point(&inversion, above)?)
    };
    Ok(PompeiuSolution {
        p,
        p_prime,
        near_equilateral,
    })
}

/// Inversion of an interior point in the unit circle, `p / |p|²`.
pub fn exterior_from_interior<T: Real>(p: Point<T>) -> Result<Point<T>> {
    let n2 = p.norm_sqr();
    if n2 == T::zero() {
        return Err(Error::AtInfinity("exterior point at infinity"));
    }
    if !(n2 < T::one()) {
        return Err(Error::Domain("point must lie in the open unit disc"));
    }
    Ok(p / n2)
}

/// How far the distances from `p` to `A₀, B₀, C₀` are from being
/// proportional to `a : b : c`: the largest componentwise gap between the
/// two triples after normalizing each to unit length.
pub fn ratio_residual<T: Real>(p: Point<T>, s: &SideLengths<T>) -> T {
    let d = ReferenceFrame::<T>::standard().distances(p);
    let sides = s.as_array();
    let dn = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    let sn = (sides[0] * sides[0] + sides[1] * sides[1] + sides[2] * sides[2]).sqrt();
    (0..3)
        .map(|i| (d[i] / dn - sides[i] / sn).abs())
        .fold(T::zero(), T::max)
}
