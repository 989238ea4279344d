//! Named instances used throughout the tests and the CLI examples.

use crate::geometry::Point;
use crate::polyhedra::HPolyhedron;
use crate::regions2d::{Region2, SimplePolygon};
use crate::scalar::Scalar;

use super::Epigraph1D;

/// `{y >= |x|}`.
pub fn cone<T: Scalar>() -> HPolyhedron<T> {
    HPolyhedron::from_ints(2, &[(&[1, -1], 0), (&[-1, -1], 0)]).expect("valid")
}

/// `{y >= 0}`.
pub fn halfspace<T: Scalar>() -> HPolyhedron<T> {
    HPolyhedron::from_ints(2, &[(&[0, -1], 0)]).expect("valid")
}

/// `{0 <= y <= 1}`.
pub fn slab<T: Scalar>() -> HPolyhedron<T> {
    HPolyhedron::from_ints(2, &[(&[0, -1], 0), (&[0, 1], 1)]).expect("valid")
}

pub fn unit_square<T: Scalar>() -> HPolyhedron<T> {
    HPolyhedron::cube(2, T::zero(), T::one())
}

/// The segment `[(0,0), (1,0)]` as a polyhedron with empty interior.
pub fn segment<T: Scalar>() -> HPolyhedron<T> {
    HPolyhedron::from_ints(2, &[(&[0, 1], 0), (&[0, -1], 0), (&[-1, 0], 0), (&[1, 0], 1)]).expect("valid")
}

pub fn square_polygon<T: Scalar>() -> SimplePolygon<T> {
    SimplePolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).expect("valid")
}

pub fn l_polygon<T: Scalar>() -> SimplePolygon<T> {
    SimplePolygon::from_ints(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).expect("valid")
}

pub fn z_polygon<T: Scalar>() -> SimplePolygon<T> {
    SimplePolygon::from_ints(&[
        (0, 0),
        (3, 0),
        (3, 1),
        (2, 1),
        (2, 2),
        (3, 2),
        (3, 3),
        (0, 3),
        (0, 2),
        (1, 2),
        (1, 1),
        (0, 1),
    ])
    .expect("valid")
}

pub fn unit_disk<T: Scalar>() -> Region2<T> {
    Region2::disk(Point::origin(2), T::one()).expect("valid")
}

pub fn unit_disk_complement<T: Scalar>() -> Region2<T> {
    Region2::disk_complement(Point::origin(2), T::one()).expect("valid")
}

pub fn parabola<T: Scalar>() -> Epigraph1D<T> {
    Epigraph1D::parabola()
}
