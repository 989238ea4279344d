use crate::error::{GeomError, Result};
use crate::geometry::{cross3, Point, Vector};
use crate::polyhedra::{HPolyhedron, Halfspace, PointLocation};
use crate::scalar::Scalar;

/// A simple polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplePolygon<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> SimplePolygon<T> {
    /// Validates the vertex cycle. Clockwise input is reversed; collinear
    /// consecutive vertices, repeated vertices and self-intersections are
    /// rejected.
    pub fn new(mut vertices: Vec<Point<T>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::InvalidPolygon(format!("{} vertices, need at least 3", vertices.len())));
        }
        for v in &vertices {
            v.check_dim(2)?;
        }
        let area2 = signed_area2(&vertices);
        if area2.is_zero() {
            return Err(GeomError::InvalidPolygon("zero signed area".into()));
        }
        if area2.is_negative() {
            vertices[1..].reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if cross3(a, b, c).is_zero() {
                return Err(GeomError::InvalidPolygon(format!("vertices {a}, {b}, {c} are collinear")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                let (c, d) = (&vertices[j], &vertices[(j + 1) % n]);
                if segments_intersect(a, b, c, d) {
                    return Err(GeomError::InvalidPolygon(format!("edges {a}-{b} and {c}-{d} intersect")));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::from_ints(&[x, y])).collect())
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Twice the (positive) area.
    pub fn area2(&self) -> T {
        signed_area2(&self.vertices)
    }

    pub fn edge_midpoints(&self) -> Vec<Point<T>> {
        self.edges().map(|(a, b)| a.midpoint(b)).collect()
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounds(&self) -> (Point<T>, Point<T>) {
        let xs = self.vertices.iter().map(|v| v.x());
        let ys = self.vertices.iter().map(|v| v.y());
        let (minx, maxx) = (xs.clone().min().unwrap().clone(), xs.max().unwrap().clone());
        let (miny, maxy) = (ys.clone().min().unwrap().clone(), ys.max().unwrap().clone());
        (Point::xy(minx, miny), Point::xy(maxx, maxy))
    }

    /// Exact point location by an on-edge test followed by winding number.
    pub fn locate(&self, x: &Point<T>) -> PointLocation {
        let mut winding = 0i32;
        for (a, b) in self.edges() {
            let turn = cross3(a, b, x);
            if turn.is_zero() && in_box(a, b, x) {
                return PointLocation::Boundary;
            }
            if a.y() <= x.y() {
                if b.y() > x.y() && turn.is_positive() {
                    winding += 1;
                }
            } else if b.y() <= x.y() && turn.is_negative() {
                winding -= 1;
            }
        }
        if winding != 0 {
            PointLocation::Interior
        } else {
            PointLocation::Exterior
        }
    }

    /// Classical convexity test: every turn has the same sign.
    pub fn convexity_oracle(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| cross3(&self.vertices[i], &self.vertices[(i + 1) % n], &self.vertices[(i + 2) % n]).is_positive())
    }

    /// Reflex vertices (interior angle above π).
    pub fn reflex_vertices(&self) -> Vec<&Point<T>> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&i| cross3(&self.vertices[(i + n - 1) % n], &self.vertices[i], &self.vertices[(i + 1) % n]).is_negative())
            .map(|i| &self.vertices[i])
            .collect()
    }

    /// The intersection of the inner halfplanes of every edge. Empty exactly
    /// when the polygon is not starshaped.
    pub fn kernel(&self) -> HPolyhedron<T> {
        let hs = self
            .edges()
            .map(|(a, b)| {
                let d = b - a;
                // left of a->b:  dy*x - dx*y <= dy*ax - dx*ay
                let normal = Vector::xy(d[1].clone(), -d[0].clone());
                let offset = normal.dot_point(a);
                Halfspace::new(normal, offset).expect("edges have non-zero length")
            })
            .collect();
        HPolyhedron::new(2, hs).expect("planar halfspaces")
    }

    pub fn is_starshaped(&self) -> bool {
        !self.kernel().is_empty().expect("planar kernel program is well-formed")
    }

    /// The polygon as the H-polyhedron of its edges; only meaningful when
    /// convex.
    pub fn as_hpolyhedron(&self) -> Option<HPolyhedron<T>> {
        self.convexity_oracle().then(|| self.kernel())
    }
}

pub(crate) fn signed_area2<T: Scalar>(vs: &[Point<T>]) -> T {
    let n = vs.len();
    (0..n).fold(T::zero(), |acc, i| {
        let (a, b) = (&vs[i], &vs[(i + 1) % n]);
        acc + a.x().clone() * b.y().clone() - b.x().clone() * a.y().clone()
    })
}

/// `x` within the bounding box of `[a, b]`.
pub(crate) fn in_box<T: Scalar>(a: &Point<T>, b: &Point<T>, x: &Point<T>) -> bool {
    let within = |p: &T, q: &T, v: &T| (p.min(q)) <= v && v <= (p.max(q));
    within(a.x(), b.x(), x.x()) && within(a.y(), b.y(), x.y())
}

/// Whether closed segments `[a, b]` and `[c, d]` share a point.
pub(crate) fn segments_intersect<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>, d: &Point<T>) -> bool {
    let sign = |v: T| if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
    let d1 = sign(cross3(c, d, a));
    let d2 = sign(cross3(c, d, b));
    let d3 = sign(cross3(a, b, c));
    let d4 = sign(cross3(a, b, d));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && in_box(c, d, a))
        || (d2 == 0 && in_box(c, d, b))
        || (d3 == 0 && in_box(a, b, c))
        || (d4 == 0 && in_box(a, b, d))
}
