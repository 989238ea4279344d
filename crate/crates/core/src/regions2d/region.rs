use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::geometry::{Point, Vector};
use crate::polyhedra::PointLocation;
use crate::scalar::Scalar;

use super::polygon::{segments_intersect, SimplePolygon};

/// A possibly non-convex planar set with exact point location.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Region2<T> {
    /// Closed polygon minus the open interiors of its holes.
    Polygon { outer: SimplePolygon<T>, holes: Vec<SimplePolygon<T>> },
    /// Closed disk.
    Disk { center: Point<T>, radius: T },
    /// Open complement of the closed disk.
    DiskComplement { center: Point<T>, radius: T },
    /// `(0,1)² ∪ {(0,0), (1,0), (0,1), (1,1)}`: neither open nor closed.
    PointedOpenBox,
}

/// Result of locating a point: topological position plus set membership.
/// The two differ only for the non-closed variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Located {
    pub location: PointLocation,
    pub member: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    Polygon,
    Disk,
    DiskComplement,
    PointedOpenBox,
}

impl<T: Scalar> Region2<T> {
    pub fn polygon(outer: SimplePolygon<T>) -> Self {
        Region2::Polygon { outer, holes: Vec::new() }
    }

    /// Holes must be pairwise disjoint and lie strictly inside `outer`.
    pub fn polygon_with_holes(outer: SimplePolygon<T>, holes: Vec<SimplePolygon<T>>) -> Result<Self> {
        for (i, h) in holes.iter().enumerate() {
            if h.vertices().iter().any(|v| outer.locate(v) != PointLocation::Interior) {
                return Err(GeomError::InvalidRegion(format!("hole {i} is not strictly inside the outer polygon")));
            }
            if edges_cross(&outer, h) {
                return Err(GeomError::InvalidRegion(format!("hole {i} touches the outer polygon")));
            }
            for (j, g) in holes.iter().enumerate().skip(i + 1) {
                let nested = h.vertices().iter().any(|v| g.locate(v) != PointLocation::Exterior)
                    || g.vertices().iter().any(|v| h.locate(v) != PointLocation::Exterior);
                if nested || edges_cross(h, g) {
                    return Err(GeomError::InvalidRegion(format!("holes {i} and {j} overlap")));
                }
            }
        }
        Ok(Region2::Polygon { outer, holes })
    }

    pub fn disk(center: Point<T>, radius: T) -> Result<Self> {
        center.check_dim(2)?;
        if !radius.is_positive() {
            return Err(GeomError::InvalidRegion("disk radius must be positive".into()));
        }
        Ok(Region2::Disk { center, radius })
    }

    pub fn disk_complement(center: Point<T>, radius: T) -> Result<Self> {
        match Self::disk(center, radius)? {
            Region2::Disk { center, radius } => Ok(Region2::DiskComplement { center, radius }),
            _ => unreachable!(),
        }
    }

    pub fn kind(&self) -> RegionKind {
        match self {
            Region2::Polygon { .. } => RegionKind::Polygon,
            Region2::Disk { .. } => RegionKind::Disk,
            Region2::DiskComplement { .. } => RegionKind::DiskComplement,
            Region2::PointedOpenBox => RegionKind::PointedOpenBox,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Region2::Polygon { .. } | Region2::Disk { .. })
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self, Region2::DiskComplement { .. })
    }

    /// Whether the set is convex, decided structurally: a simple polygon by
    /// its turns, disks always, and the rest never.
    pub fn is_convex(&self) -> bool {
        match self {
            Region2::Polygon { outer, holes } => holes.is_empty() && outer.convexity_oracle(),
            Region2::Disk { .. } => true,
            Region2::DiskComplement { .. } | Region2::PointedOpenBox => false,
        }
    }

    pub fn locate(&self, x: &Point<T>) -> Result<Located> {
        x.check_dim(2)?;
        Ok(match self {
            Region2::Polygon { outer, holes } => {
                let location = match outer.locate(x) {
                    PointLocation::Interior => holes
                        .iter()
                        .map(|h| h.locate(x))
                        .find(|l| *l != PointLocation::Exterior)
                        .map_or(PointLocation::Interior, |l| match l {
                            PointLocation::Boundary => PointLocation::Boundary,
                            _ => PointLocation::Exterior,
                        }),
                    other => other,
                };
                Located { location, member: location != PointLocation::Exterior }
            }
            Region2::Disk { center, radius } => {
                let s = circle_power(center, radius, x);
                let location = if s.is_negative() {
                    PointLocation::Interior
                } else if s.is_zero() {
                    PointLocation::Boundary
                } else {
                    PointLocation::Exterior
                };
                Located { location, member: !s.is_positive() }
            }
            Region2::DiskComplement { center, radius } => {
                let s = circle_power(center, radius, x);
                let location = if s.is_positive() {
                    PointLocation::Interior
                } else if s.is_zero() {
                    PointLocation::Boundary
                } else {
                    PointLocation::Exterior
                };
                Located { location, member: s.is_positive() }
            }
            Region2::PointedOpenBox => {
                let (zero, one) = (T::zero(), T::one());
                let inside = |v: &T| zero < *v && *v < one;
                let closed = |v: &T| zero <= *v && *v <= one;
                if inside(x.x()) && inside(x.y()) {
                    Located { location: PointLocation::Interior, member: true }
                } else if closed(x.x()) && closed(x.y()) {
                    let corner = !inside(x.x()) && !inside(x.y());
                    Located { location: PointLocation::Boundary, member: corner }
                } else {
                    Located { location: PointLocation::Exterior, member: false }
                }
            }
        })
    }

    /// Straight boundary edges (polygon edges, or the unit square for the
    /// pointed box); empty for the disk variants.
    pub(crate) fn boundary_edges(&self) -> Vec<(Point<T>, Point<T>)> {
        match self {
            Region2::Polygon { outer, holes } => std::iter::once(outer)
                .chain(holes)
                .flat_map(|p| p.edges().map(|(a, b)| (a.clone(), b.clone())))
                .collect(),
            Region2::PointedOpenBox => {
                let c = unit_square_corners::<T>();
                (0..4).map(|i| (c[i].clone(), c[(i + 1) % 4].clone())).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Boundary vertices: polygon and hole vertices, or the box corners.
    pub fn boundary_vertices(&self) -> Vec<Point<T>> {
        match self {
            Region2::Polygon { outer, holes } => {
                std::iter::once(outer).chain(holes).flat_map(|p| p.vertices().iter().cloned()).collect()
            }
            Region2::PointedOpenBox => unit_square_corners::<T>().to_vec(),
            _ => Vec::new(),
        }
    }

    /// A bounding box `(min, max)` for display and sampling; unbounded
    /// variants report the box of their defining circle.
    pub fn bounds(&self) -> (Point<T>, Point<T>) {
        match self {
            Region2::Polygon { outer, .. } => outer.bounds(),
            Region2::Disk { center, radius } | Region2::DiskComplement { center, radius } => {
                let r = Vector::xy(radius.clone(), radius.clone());
                (center.offset(&r, &-T::one()), center + &r)
            }
            Region2::PointedOpenBox => (Point::origin(2), Point::xy(T::one(), T::one())),
        }
    }
}

pub(crate) fn unit_square_corners<T: Scalar>() -> [Point<T>; 4] {
    [
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[1, 1]),
        Point::from_ints(&[0, 1]),
    ]
}

/// `|x - c|² - r²`.
pub(crate) fn circle_power<T: Scalar>(c: &Point<T>, r: &T, x: &Point<T>) -> T {
    let d = x - c;
    d.dot(&d) - r.clone() * r.clone()
}

/// A point of the circle from the tangent-half-angle parameter `t`:
/// `c + r ((1 - t²) / (1 + t²), 2t / (1 + t²))`.
pub fn circle_point<T: Scalar>(c: &Point<T>, r: &T, t: &T) -> Point<T> {
    let t2 = t.clone() * t.clone();
    let den = T::one() + t2.clone();
    let x = (T::one() - t2) / den.clone();
    let y = T::int(2) * t.clone() / den;
    Point::xy(c.x().clone() + r.clone() * x, c.y().clone() + r.clone() * y)
}

fn edges_cross<T: Scalar>(p: &SimplePolygon<T>, q: &SimplePolygon<T>) -> bool {
    p.edges().any(|(a, b)| q.edges().any(|(c, d)| segments_intersect(a, b, c, d)))
}
