//! Two coordinates on the moduli space of triangle similarity classes.
//!
//! A class is a point of the open unit disc in two ways: through the shape
//! map `φ` (a Möbius image of the classical shape function
//! `σ = (A − B)/(C − B)`), and through the Pompeiu point `z` whose
//! distances to a fixed equilateral frame are proportional to the sides.
//! The two are related by `z = i·w̄`. Around them sit the rotation and
//! dilation actions on the disc, the vertex-moving pencils, cevian
//! operations, the similarity circle in space, and the de Sitter picture of
//! circle pencils.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the root re-exports
//! fix `f64`.

// `!(x > y)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cevian;
pub mod classops;
pub mod desitter;
pub mod error;
pub mod geom2;
pub mod pompeiu;
pub mod scalar;
pub mod shape;
pub mod space3;

pub use error::{Error, Result};
pub use geom2::{Intersection, PencilKind};
pub use scalar::Real;

pub type Point = geom2::Point<f64>;
pub type Circle = geom2::Circle<f64>;
pub type Line = geom2::Line<f64>;
pub type GeneralizedCircle = geom2::GeneralizedCircle<f64>;
pub type Pencil = geom2::Pencil<f64>;
pub type Tolerance = scalar::Tolerance<f64>;
pub type Triangle = shape::Triangle<f64>;
pub type SideLengths = shape::SideLengths<f64>;
pub type ShapeClass = shape::ShapeClass<f64>;
pub type ReferenceFrame = shape::ReferenceFrame<f64>;
pub type PompeiuSolution = pompeiu::PompeiuSolution<f64>;
pub type PolarDecomposition = classops::PolarDecomposition<f64>;
pub type LogScale = classops::LogScale<f64>;
pub type OmegaPair = classops::OmegaPair<f64>;
pub type CevianParams = cevian::CevianParams<f64>;
pub type Point3 = space3::Point3<f64>;
pub type Circle3 = space3::Circle3<f64>;
pub type Sphere = space3::Sphere<f64>;
pub type MinkowskiVector = desitter::MinkowskiVector<f64>;
pub type DeSitterPoint = desitter::DeSitterPoint<f64>;
pub type OrientedCircle = desitter::OrientedCircle<f64>;
pub use desitter::Orientation;
