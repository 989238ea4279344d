//! Exact rational convex geometry: boundary-pair classification,
//! starshaped kernels, extreme points and hull reconstruction.
//!
//! Everything is generic over [`scalar::Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision rationals.

pub mod error;
pub mod geometry;
pub mod linalg;
pub mod linprog;
pub mod polyhedra;
pub mod regions2d;
pub mod scalar;
pub mod schema;
pub mod theorems;

pub use error::{GeomError, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Point = geometry::Point<Rational>;
pub type Vector = geometry::Vector<Rational>;
pub type Segment = geometry::Segment<Rational>;
pub type Matrix = linalg::Matrix<Rational>;
pub type LinearProgram = linprog::LinearProgram<Rational>;
pub type Constraint = linprog::Constraint<Rational>;
pub type LpOutcome = linprog::LpOutcome<Rational>;
pub type Halfspace = polyhedra::Halfspace<Rational>;
pub type HPolyhedron = polyhedra::HPolyhedron<Rational>;
pub type VPolytope = polyhedra::VPolytope<Rational>;
pub type Ray = polyhedra::Ray<Rational>;
pub type SimplePolygon = regions2d::SimplePolygon<Rational>;
pub type Region2 = regions2d::Region2<Rational>;
pub type SegmentPartition = regions2d::SegmentPartition<Rational>;
pub type Epigraph1D = theorems::Epigraph1D<Rational>;
pub type Geometry = schema::Geometry<Rational>;
pub type Instance = theorems::Instance<Rational>;

pub use polyhedra::PointLocation;
pub use regions2d::PairClass;
