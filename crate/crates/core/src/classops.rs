//! Rotation `R_θ` and homothety `H_λ` of the Pompeiu disc, and their
//! realization by moving one vertex of a triangle with the opposite edge
//! fixed.
//!
//! Both actions are defined on the Pompeiu coordinate `z`:
//! `R_θ: z ↦ e^{iθ}z`, `H_λ: z ↦ e^λ z`. Angles returned across the API are
//! normalized to `[0, 2π)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geom2::{intersect, Circle, Intersection, Point};
use crate::scalar::{wrap_two_pi, Real, Tolerance};
use crate::shape::{phi, rho, ReferenceFrame, ShapeClass, Triangle};

/// `R_θ`. Never leaves the disc.
pub fn rotate_class<T: Real>(c: &ShapeClass<T>, theta: T) -> ShapeClass<T> {
    // z ↦ e^{iθ}z is w ↦ e^{-iθ}w for w = i·z̄
    let w = c.phi_complex() * Complex::from_polar(T::one(), -theta);
    ShapeClass::from_complex_unchecked(w)
}

/// `H_λ`. Fails when `e^λ·|z| ≥ 1`.
pub fn scale_class<T: Real>(c: &ShapeClass<T>, lambda: T) -> Result<ShapeClass<T>> {
    let w = c.phi_complex() * lambda.exp();
    ShapeClass::from_complex(w).map_err(|_| Error::Domain("leaves moduli disc (degenerate limit)"))
}

/// Logarithmic scale of a decomposition; `NegInfinity` stands for the
/// equilateral target, where the modulus is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogScale<T> {
    Finite(T),
    NegInfinity,
}

impl<T: Real> LogScale<T> {
    pub fn finite(&self) -> Option<T> {
        match *self {
            LogScale::Finite(x) => Some(x),
            LogScale::NegInfinity => None,
        }
    }
}

/// `target = H_λ(R_θ(base))` with `θ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarDecomposition<T> {
    pub theta: T,
    pub lambda: LogScale<T>,
}

/// Unique `(θ, λ)` with `H_λ(R_θ(base)) = target`. `base` must not be
/// equilateral.
pub fn decompose<T: Real>(target: &ShapeClass<T>, base: &ShapeClass<T>) -> Result<PolarDecomposition<T>> {
    let zb = base.pompeiu_complex();
    if zb.norm_sqr() == T::zero() {
        return Err(Error::Domain("base class must not be equilateral"));
    }
    let zt = target.pompeiu_complex();
    if zt.norm_sqr() == T::zero() {
        return Ok(PolarDecomposition {
            theta: T::zero(),
            lambda: LogScale::NegInfinity,
        });
    }
    let q = zt / zb;
    Ok(PolarDecomposition {
        theta: wrap_two_pi(q.arg()),
        lambda: LogScale::Finite(zt.norm().ln() - zb.norm().ln()),
    })
}

/// `H_λ(R_θ(base))`.
pub fn apply<T: Real>(base: &ShapeClass<T>, d: &PolarDecomposition<T>) -> Result<ShapeClass<T>> {
    match d.lambda {
        LogScale::NegInfinity => Ok(ShapeClass::equilateral()),
        LogScale::Finite(l) => scale_class(&rotate_class(base, d.theta), l),
    }
}

/// Apexes of the two equilateral triangles on the edge `BC`:
/// `Ω_A = B + ρ(C − B)` and `Ω̄_A = B + ρ̄(C − B)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaPair<T> {
    pub omega: Point<T>,
    pub omega_bar: Point<T>,
}

impl<T: Real> OmegaPair<T> {
    pub fn from_edge(b: Point<T>, c: Point<T>) -> Result<Self> {
        if b == c {
            return Err(Error::Degenerate("edge endpoints coincide"));
        }
        let r = rho::<T>();
        let (bz, cz) = (b.to_complex(), c.to_complex());
        Ok(Self {
            omega: Point::from_complex(bz + r * (cz - bz)),
            omega_bar: Point::from_complex(bz + r.conj() * (cz - bz)),
        })
    }

    /// `|p − Ω_A| / |p − Ω̄_A|`.
    pub fn ratio(&self, p: Point<T>) -> T {
        p.distance(self.omega) / p.distance(self.omega_bar)
    }
}

pub fn omega_pair<T: Real>(t: &Triangle<T>) -> OmegaPair<T> {
    OmegaPair::from_edge(t.b(), t.c()).expect("valid triangle has distinct B, C")
}

/// Keeps `B` and `C` and moves `A` so that the class becomes
/// `H_λ(R_θ([ABC]))`.
///
/// The new side ratios come from the Pompeiu point of the target class;
/// `A′` is then the crossing of `Γ(C, b′)` and `Γ(B, c′)` that keeps the
/// labeling anticlockwise.
pub fn move_vertex<T: Real>(t: &Triangle<T>, theta: T, lambda: T) -> Result<Triangle<T>> {
    let target = scale_class(&rotate_class(&phi(t), theta), lambda)?;
    let [da, db, dc] = ReferenceFrame::<T>::standard().distances(target.pompeiu());
    let (b, c) = (t.b(), t.c());
    let a = b.distance(c);
    let around_c = Circle::new(c, a * db / da)?;
    let around_b = Circle::new(b, a * dc / da)?;
    let (p, q) = match intersect(&around_c.into(), &around_b.into(), &Tolerance::default())? {
        Intersection::Pair(p, q) => (p, q),
        _ => return Err(Error::Degenerate("target class is degenerate")),
    };
    let anticlockwise = |x: Point<T>| (b - x).cross(c - x) > T::zero();
    let apex = match (anticlockwise(p), anticlockwise(q)) {
        (true, false) => p,
        (false, true) => q,
        _ => return Err(Error::Degenerate("no unique anticlockwise apex")),
    };
    Triangle::new(apex, b, c)
}

/// `σ ∘ φ_P⁻¹: z ↦ (ρ̄u − ρ)/(u − 1)` with `u = i·z̄`.
pub fn sigma_from_pompeiu<T: Real>(z: Point<T>) -> Result<Point<T>> {
    if !(z.norm_sqr() < T::one()) {
        return Err(Error::Domain("point must lie in the open unit disc"));
    }
    let u = Complex::new(z.y, z.x);
    let r = rho::<T>();
    Ok(Point::from_complex(
        (r.conj() * u - r) / (u - Complex::new(T::one(), T::zero())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2::concyclic;
    use crate::shape::{side_lengths, sigma_of_sides, SideLengths};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    type P = Point<f64>;

    fn p(x: f64, y: f64) -> P {
        Point::new(x, y)
    }

    fn assert_pt(a: P, b: P, eps: f64) {
        assert_abs_diff_eq!(a.x, b.x, epsilon = eps);
        assert_abs_diff_eq!(a.y, b.y, epsilon = eps);
    }

    fn from_z(z: P) -> ShapeClass<f64> {
        ShapeClass::from_pompeiu(z).unwrap()
    }

    fn polar(r: f64, t: f64) -> P {
        p(r * t.cos(), r * t.sin())
    }

    fn right_isoceles() -> Triangle<f64> {
        Triangle::new(p(0.0, 1.0), p(0.0, 0.0), p(1.0, 0.0)).unwrap()
    }

    #[test]
    fn rotate_examples() {
        let eq = ShapeClass::<f64>::equilateral();
        assert_eq!(rotate_class(&eq, 1.234).phi(), P::origin());
        let k = 2.0 - 3f64.sqrt();
        let c = from_z(polar(k, PI / 6.0));
        let r = rotate_class(&c, PI / 3.0);
        assert_pt(r.pompeiu(), p(0.0, 0.2679491924311228), 1e-15);
        let full = rotate_class(&c, 2.0 * PI);
        assert_pt(full.pompeiu(), c.pompeiu(), 1e-16);
    }

    #[test]
    fn scale_examples() {
        let c = from_z(p(0.2, 0.1));
        assert_eq!(scale_class(&c, 0.0).unwrap(), c);
        let half = from_z(p(0.5, 0.0));
        assert_eq!(
            scale_class(&half, 2f64.ln()),
            Err(Error::Domain("leaves moduli disc (degenerate limit)"))
        );
        let c = from_z(p(0.2, 0.0));
        assert_pt(scale_class(&c, 2f64.ln()).unwrap().pompeiu(), p(0.4, 0.0), 1e-15);
    }

    #[test]
    fn decompose_examples() {
        let base = from_z(p(0.3, -0.1));
        let d = decompose(&base, &base).unwrap();
        assert_eq!(d.theta, 0.0);
        assert_eq!(d.lambda, LogScale::Finite(0.0));

        let k = 2.0 - 3f64.sqrt();
        let d = decompose(&from_z(polar(k, PI / 2.0)), &from_z(polar(k, PI / 6.0))).unwrap();
        assert_abs_diff_eq!(d.theta, PI / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.lambda.finite().unwrap(), 0.0, epsilon = 1e-14);

        let d = decompose(&ShapeClass::equilateral(), &from_z(p(0.2, 0.0))).unwrap();
        assert_eq!(d.theta, 0.0);
        assert_eq!(d.lambda, LogScale::NegInfinity);
        assert_eq!(apply(&from_z(p(0.2, 0.0)), &d).unwrap(), ShapeClass::equilateral());

        assert!(decompose(&base, &ShapeClass::equilateral()).is_err());
        // negative angles are reported in [0, 2π)
        let d = decompose(&from_z(p(0.0, -0.4)), &from_z(p(0.2, 0.0))).unwrap();
        assert_abs_diff_eq!(d.theta, 1.5 * PI, epsilon = 1e-14);
        assert_abs_diff_eq!(d.lambda.finite().unwrap(), 2f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn omega_pair_examples() {
        let h = 3f64.sqrt() / 2.0;
        let o = OmegaPair::from_edge(p(0.0, 0.0), p(1.0, 0.0)).unwrap();
        assert_pt(o.omega, p(0.5, h), 1e-15);
        assert_pt(o.omega_bar, p(0.5, -h), 1e-15);
        let o = OmegaPair::from_edge(p(0.0, 0.0), p(0.0, 2.0)).unwrap();
        assert_pt(o.omega, p(-2.0 * h, 1.0), 1e-15);
        assert_pt(o.omega_bar, p(2.0 * h, 1.0), 1e-15);
        assert!(OmegaPair::from_edge(p(1.0, 1.0), p(1.0, 1.0)).is_err());
    }

    #[test]
    fn omega_pair_triangles_are_equilateral() {
        let t = Triangle::new(p(0.2, 2.0), p(-1.0, 0.3), p(1.4, -0.2)).unwrap();
        let o = omega_pair(&t);
        let side = t.b().distance(t.c());
        for len in [
            o.omega.distance(t.b()),
            o.omega.distance(t.c()),
            o.omega_bar.distance(t.b()),
            o.omega_bar.distance(t.c()),
        ] {
            assert!((len - side).abs() < 1e-12 * side);
        }
        // △Ω_A B C and △Ω̄_A C B are anticlockwise
        assert!(Triangle::new(o.omega, t.b(), t.c()).is_ok());
        assert!(Triangle::new(o.omega_bar, t.c(), t.b()).is_ok());
    }

    #[test]
    fn move_vertex_examples() {
        let t = right_isoceles();
        assert_pt(move_vertex(&t, 0.0, 0.0).unwrap().a(), t.a(), 1e-14);

        let eq = Triangle::new(p(0.5, 3f64.sqrt() / 2.0), p(0.0, 0.0), p(1.0, 0.0)).unwrap();
        assert_pt(move_vertex(&eq, 2.1, 0.0).unwrap().a(), eq.a(), 1e-14);

        let moved = move_vertex(&t, PI, 0.0).unwrap();
        assert_pt(moved.a(), p(0.8, 0.6), 1e-14);
        assert_eq!((moved.b(), moved.c()), (t.b(), t.c()));
        // b²/a² = 2/5
        let s = side_lengths(&moved);
        assert_abs_diff_eq!(s.b() * s.b() / (s.a() * s.a()), 0.4, epsilon = 1e-14);
        let o = omega_pair(&t);
        assert_abs_diff_eq!(o.ratio(moved.a()), o.ratio(t.a()), epsilon = 1e-14);

        assert!(matches!(move_vertex(&t, 0.0, 5.0), Err(Error::Domain(_))));
    }

    #[test]
    fn move_vertex_matches_sigma_route() {
        // independent route: A′ = B + σ′(C − B) with σ′ from the target class
        let t = Triangle::new(p(0.3, 1.7), p(-0.5, 0.1), p(1.2, -0.3)).unwrap();
        for (theta, lambda) in [(0.4, 0.0), (2.5, -0.3), (0.0, 0.2), (5.9, -1.0)] {
            let moved = move_vertex(&t, theta, lambda).unwrap();
            let target = scale_class(&rotate_class(&phi(&t), theta), lambda).unwrap();
            let s = sigma_from_pompeiu(target.pompeiu()).unwrap().to_complex();
            let (b, c) = (t.b().to_complex(), t.c().to_complex());
            let apex = Point::from_complex(b + s * (c - b));
            assert_pt(moved.a(), apex, 1e-12);
        }
    }

    #[test]
    fn vertex_motion_follows_pencils() {
        let t = Triangle::new(p(0.3, 1.7), p(-0.5, 0.1), p(1.2, -0.3)).unwrap();
        let o = omega_pair(&t);
        for theta in [0.3, 1.0, 2.0, 4.0] {
            let moved = move_vertex(&t, theta, 0.0).unwrap();
            assert!((o.ratio(moved.a()) - o.ratio(t.a())).abs() < 1e-12);
        }
        let tol = Tolerance::default();
        for lambda in [-2.0, -0.5, 0.3] {
            let moved = move_vertex(&t, 0.0, lambda).unwrap();
            assert!(concyclic(o.omega, o.omega_bar, t.a(), moved.a(), &tol).unwrap());
        }
    }

    #[test]
    fn sigma_from_pompeiu_examples() {
        assert_pt(
            sigma_from_pompeiu(P::origin()).unwrap(),
            p(0.5, 3f64.sqrt() / 2.0),
            1e-15,
        );
        let k = 2.0 - 3f64.sqrt();
        assert_pt(sigma_from_pompeiu(polar(k, PI / 6.0)).unwrap(), p(0.0, 1.0), 1e-15);
        let frame = ReferenceFrame::<f64>::standard();
        for z in [p(0.3, -0.4), p(-0.7, 0.1), p(0.05, 0.9)] {
            let [a, b, c] = frame.distances(z);
            let s = SideLengths::new(a, b, c).unwrap();
            assert_pt(sigma_from_pompeiu(z).unwrap(), sigma_of_sides(&s), 1e-12);
        }
        assert!(sigma_from_pompeiu(p(1.0, 0.0)).is_err());
        let near = sigma_from_pompeiu(p(1.0 - 1e-6, 0.0)).unwrap();
        assert!(near.y.abs() < 1e-3);
    }
}
