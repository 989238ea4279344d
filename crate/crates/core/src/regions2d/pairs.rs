use serde::Serialize;

use crate::error::{GeomError, Result};
use num_traits::{FromPrimitive, Num, Signed};

use crate::geometry::{cross3, Point, Segment};
use crate::polyhedra::PointLocation;
use crate::scalar::Scalar;

use super::polygon::SimplePolygon;
use super::region::{circle_point, unit_square_corners, Region2};
use super::PairClass;

/// Which finite set of boundary pairs to probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeStrategy<T> {
    /// All pairs of boundary vertices (box corners for the pointed box).
    Vertices,
    /// All pairs among boundary vertices and edge midpoints.
    VerticesAndMidpoints,
    /// `m` rational circle points, plus the point opposite the
    /// parametrization's base.
    CircleSamples(usize),
    /// An explicit list.
    Pairs(Vec<(Point<T>, Point<T>)>),
}

impl<T> ProbeStrategy<T> {
    /// The default for a region: midpoints for polygons, 16 circle points for
    /// disks and corners for the pointed box.
    pub fn default_for(region: &Region2<T>) -> Self {
        match region {
            Region2::Polygon { .. } => ProbeStrategy::VerticesAndMidpoints,
            Region2::Disk { .. } | Region2::DiskComplement { .. } => ProbeStrategy::CircleSamples(16),
            Region2::PointedOpenBox => ProbeStrategy::Vertices,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct PairWitness<T> {
    pub p: Point<T>,
    pub q: Point<T>,
    pub class: PairClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct ConvexityVerdict<T> {
    pub convex: bool,
    pub probed_pairs: usize,
    pub witness: Option<PairWitness<T>>,
}

impl<T: Scalar> Region2<T> {
    pub fn classify_pair(&self, p: &Point<T>, q: &Point<T>) -> Result<PairClass> {
        for x in [p, q] {
            if self.locate(x)?.location != PointLocation::Boundary {
                return Err(GeomError::NotOnBoundary(x.to_string()));
            }
        }
        if p == q {
            return Err(GeomError::DegenerateSegment);
        }
        let part = self.partition_segment(&Segment::open(p.clone(), q.clone()))?;
        Ok(if part.all_location(PointLocation::Boundary) {
            PairClass::Flat
        } else if part.all_location(PointLocation::Interior) {
            PairClass::Hyperbolic
        } else if part.all_location(PointLocation::Exterior) {
            PairClass::Elliptic
        } else {
            PairClass::Mixed
        })
    }

    /// The boundary points probed by a strategy, in a fixed order.
    pub fn probe_points(&self, strategy: &ProbeStrategy<T>) -> Vec<Point<T>> {
        let mut pts = match (self, strategy) {
            (Region2::Disk { center, radius } | Region2::DiskComplement { center, radius }, ProbeStrategy::CircleSamples(m)) => {
                circle_samples(center, radius, *m)
            }
            (Region2::Disk { center, radius } | Region2::DiskComplement { center, radius }, _) => {
                circle_samples(center, radius, 16)
            }
            (Region2::PointedOpenBox, ProbeStrategy::VerticesAndMidpoints) => {
                let c = unit_square_corners::<T>();
                let mids: Vec<_> = (0..4).map(|i| c[i].midpoint(&c[(i + 1) % 4])).collect();
                c.into_iter().chain(mids).collect()
            }
            (Region2::Polygon { .. }, ProbeStrategy::VerticesAndMidpoints) => {
                let mids: Vec<_> = self.boundary_edges().iter().map(|(a, b)| a.midpoint(b)).collect();
                self.boundary_vertices().into_iter().chain(mids).collect()
            }
            _ => self.boundary_vertices(),
        };
        let mut seen = std::collections::HashSet::new();
        pts.retain(|p| seen.insert(p.clone()));
        pts
    }

    /// Decides convexity from the classes of probed boundary pairs: convex
    /// unless some pair is Elliptic or Mixed. The witness is the first
    /// Elliptic pair if any, otherwise the first Mixed one.
    pub fn is_convex_by_pairs(&self, strategy: &ProbeStrategy<T>) -> Result<ConvexityVerdict<T>> {
        let pairs: Vec<(Point<T>, Point<T>)> = match strategy {
            ProbeStrategy::Pairs(list) => list.clone(),
            _ => {
                let pts = self.probe_points(strategy);
                let mut out = Vec::new();
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        out.push((pts[i].clone(), pts[j].clone()));
                    }
                }
                out
            }
        };
        let mut mixed = None;
        for (p, q) in &pairs {
            match self.classify_pair(p, q)? {
                PairClass::Elliptic => {
                    let witness = PairWitness { p: p.clone(), q: q.clone(), class: PairClass::Elliptic };
                    return Ok(ConvexityVerdict { convex: false, probed_pairs: pairs.len(), witness: Some(witness) });
                }
                PairClass::Mixed if mixed.is_none() => {
                    mixed = Some(PairWitness { p: p.clone(), q: q.clone(), class: PairClass::Mixed });
                }
                _ => {}
            }
        }
        Ok(ConvexityVerdict { convex: mixed.is_none(), probed_pairs: pairs.len(), witness: mixed })
    }

    /// Whether the closed segment `[p, q]` lies in the set.
    pub fn sees(&self, p: &Point<T>, q: &Point<T>) -> Result<bool> {
        for x in [p, q] {
            if !self.locate(x)?.member {
                return Err(GeomError::NotMember(x.to_string()));
            }
        }
        if p == q {
            return Ok(true);
        }
        if let Region2::Polygon { .. } = self {
            return self.polygon_segment_inside(p, q);
        }
        Ok(self.partition_segment(&Segment::closed(p.clone(), q.clone()))?.all_members())
    }

    /// Division-free test for polygons: no edge is crossed transversally and
    /// each gap between the boundary vertices on `pq` has a member midpoint.
    fn polygon_segment_inside(&self, p: &Point<T>, q: &Point<T>) -> Result<bool> {
        let d = q - p;
        let dd = d.dot(&d);
        let opposite = |x: &T, y: &T| (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive());
        let mut stops = Vec::new();
        for (a, b) in self.boundary_edges() {
            let (sa, sb) = (cross3(p, q, &a), cross3(p, q, &b));
            if sa.is_zero() {
                let s = (&a - p).dot(&d);
                if s.is_positive() && s < dd {
                    stops.push(s);
                }
            }
            if opposite(&sa, &sb) && opposite(&cross3(&a, &b, p), &cross3(&a, &b, q)) {
                return Ok(false);
            }
        }
        stops.sort();
        stops.dedup();
        let mut prev = T::zero();
        for s in stops.into_iter().chain(std::iter::once(dd.clone())) {
            let mid = p.offset(&d, &((prev + s.clone()) / (T::int(2) * dd.clone())));
            if !self.locate(&mid)?.member {
                return Ok(false);
            }
            prev = s;
        }
        Ok(true)
    }
}

/// `m` points from the tangent-half-angle map at `t = (2k - m) * 4 / m`
/// and the point `c - (r, 0)` that the map never reaches.
pub fn circle_samples<T: Scalar>(c: &Point<T>, r: &T, m: usize) -> Vec<Point<T>> {
    let m = m.max(1) as i64;
    let mut pts: Vec<Point<T>> = (0..m).map(|k| circle_point(c, r, &T::ratio((2 * k - m) * 4, m))).collect();
    pts.push(Point::xy(c.x().clone() - r.clone(), c.y().clone()));
    pts
}

impl<T: Scalar> SimplePolygon<T> {
    /// Visibility oracle for the kernel: `x` sees every vertex and the edge
    /// points at parameters `k / m`, `0 < k < m`.
    pub fn kernel_contains_by_visibility(&self, x: &Point<T>, m: usize) -> Result<bool> {
        if m == 0 {
            return Err(GeomError::InvalidSampling("edge sample density must be positive".into()));
        }
        let region = Region2::polygon(self.clone());
        let located = region.locate(x)?;
        if !located.member {
            return Err(GeomError::NotMember(x.to_string()));
        }
        let sight = Sight::new(self.vertices(), x, located.location == PointLocation::Interior, m as i64);
        let n = self.len();
        for i in 0..n {
            for k in 0..m as i64 {
                let visible = match sight.quick(i, k, m as i64) {
                    Some(v) => v,
                    None => {
                        let target = self.vertices()[i].lerp(&self.vertices()[(i + 1) % n], &T::ratio(k, m as i64));
                        region.sees(x, &target)?
                    }
                };
                if !visible {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

const SMALL_COORD: i128 = 1 << 40;
const SMALL_DENSITY: i64 = 1 << 20;

/// Sight lines over machine integers when the scaled coordinates are small
/// enough that no product overflows, otherwise over the scalar itself.
enum Sight<T> {
    Small(SightLines<i128>),
    Exact(SightLines<T>),
}

impl<T: Scalar> Sight<T> {
    fn new(vertices: &[Point<T>], x: &Point<T>, interior: bool, m: i64) -> Self {
        let exact = || {
            let w = vertices.iter().map(|v| v - x).map(|d| [d.x().clone(), d.y().clone()]).collect();
            Sight::Exact(SightLines::new(w, interior))
        };
        if m >= SMALL_DENSITY {
            return exact();
        }
        match scaled_offsets(vertices, x) {
            Some(w) => Sight::Small(SightLines::new(w, interior)),
            None => exact(),
        }
    }

    fn quick(&self, i: usize, k: i64, m: i64) -> Option<bool> {
        match self {
            Sight::Small(s) => s.quick(i, k, m),
            Sight::Exact(s) => s.quick(i, k, m),
        }
    }
}

/// `(v - x) * L` as integers, `L` the common denominator.
fn scaled_offsets<T: Scalar>(vertices: &[Point<T>], x: &Point<T>) -> Option<Vec<[i128; 2]>> {
    use num_integer::Integer;
    let parts = |p: &Point<T>| -> Option<[(i128, i128); 2]> {
        let (a, b) = (p.x().small_parts()?, p.y().small_parts()?);
        Some([(a.0 as i128, a.1 as i128), (b.0 as i128, b.1 as i128)])
    };
    let origin = parts(x)?;
    let pts = vertices.iter().map(parts).collect::<Option<Vec<_>>>()?;
    let mut l: i128 = 1;
    for (_, d) in pts.iter().chain(std::iter::once(&origin)).flatten() {
        l = l.lcm(d);
        if l > SMALL_COORD {
            return None;
        }
    }
    let scale = |(n, d): (i128, i128)| n.checked_mul(l / d);
    let (ox, oy) = (scale(origin[0])?, scale(origin[1])?);
    pts.iter()
        .map(|[px, py]| {
            let w = [scale(*px)?.checked_sub(ox)?, scale(*py)?.checked_sub(oy)?];
            (w[0].abs() < SMALL_COORD && w[1].abs() < SMALL_COORD).then_some(w)
        })
        .collect()
}

/// Sight lines from a fixed point `x` to edge points
/// `v_i + (k/m)(v_{i+1} - v_i)`, given `w_j = v_j - x` up to a positive
/// factor, with `cross(w_j, w_{j+1})` precomputed.
struct SightLines<R> {
    w: Vec<[R; 2]>,
    edge_side: Vec<R>,
    interior: bool,
}

fn cross<R: Clone + Num>(a: &[R; 2], b: &[R; 2]) -> R {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

fn dot<R: Clone + Num>(a: &[R; 2], b: &[R; 2]) -> R {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

impl<R: Clone + Ord + Signed + FromPrimitive> SightLines<R> {
    fn new(w: Vec<[R; 2]>, interior: bool) -> Self {
        let n = w.len();
        let edge_side = (0..n).map(|j| cross(&w[j], &w[(j + 1) % n])).collect();
        Self { w, edge_side, interior }
    }

    /// `Some(visible)` when decided without locating points: a transversal
    /// edge crossing blocks, and from an interior point a sight line that
    /// meets no vertex stays inside. `None` otherwise.
    fn quick(&self, i: usize, k: i64, m: i64) -> Option<bool> {
        let n = self.w.len();
        let int = |v: i64| R::from_i64(v).expect("small integers fit");
        let (a, b) = (&self.w[i], &self.w[(i + 1) % n]);
        let (ca, cb) = (int(m - k), int(k));
        let u = [
            ca.clone() * a[0].clone() + cb.clone() * b[0].clone(),
            ca * a[1].clone() + cb * b[1].clone(),
        ];
        let uu = dot(&u, &u);
        let sides: Vec<R> = self.w.iter().map(|wj| cross(&u, wj)).collect();
        let opposite = |a: &R, b: &R| (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive());
        let mut touches = false;
        for j in 0..n {
            let (sa, sb) = (&sides[j], &sides[(j + 1) % n]);
            if sa.is_zero() {
                let s = dot(&self.w[j], &u);
                touches |= s.is_positive() && s < uu;
            }
            if opposite(sa, sb) {
                let x_side = self.edge_side[j].clone();
                let t_side = x_side.clone() * int(m) + sa.clone() - sb.clone();
                if opposite(&x_side, &t_side) {
                    return Some(false);
                }
            }
        }
        (self.interior && !touches).then_some(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions2d::polygon::fixtures::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn p(x: i64, y: i64) -> Point<Q> {
        Point::from_ints(&[x, y])
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point<Q> {
        Point::xy(Q::ratio(x.0, x.1), Q::ratio(y.0, y.1))
    }

    #[test]
    fn pair_classes_on_square_and_l() {
        let sq = Region2::polygon(unit_square::<Q>());
        assert_eq!(sq.classify_pair(&p(0, 0), &p(1, 0)).unwrap(), PairClass::Flat);
        assert_eq!(sq.classify_pair(&p(0, 0), &p(1, 1)).unwrap(), PairClass::Hyperbolic);
        let l = Region2::polygon(l_polygon::<Q>());
        assert_eq!(l.classify_pair(&p(1, 2), &p(2, 1)).unwrap(), PairClass::Elliptic);
        assert_eq!(l.classify_pair(&p(0, 2), &p(2, 0)).unwrap(), PairClass::Mixed);
    }

    #[test]
    fn pair_preconditions() {
        let sq = Region2::polygon(unit_square::<Q>());
        assert!(matches!(sq.classify_pair(&pt((1, 2), (1, 2)), &p(0, 0)), Err(GeomError::NotOnBoundary(_))));
        assert!(matches!(sq.classify_pair(&p(0, 0), &p(0, 0)), Err(GeomError::DegenerateSegment)));
    }

    #[test]
    fn convexity_by_pairs_examples() {
        let sq = Region2::polygon(unit_square::<Q>());
        let v = sq.is_convex_by_pairs(&ProbeStrategy::VerticesAndMidpoints).unwrap();
        assert!(v.convex && v.witness.is_none());
        let l = Region2::polygon(l_polygon::<Q>());
        let v = l.is_convex_by_pairs(&ProbeStrategy::VerticesAndMidpoints).unwrap();
        let w = v.witness.unwrap();
        assert!(!v.convex);
        assert_eq!((w.p, w.q, w.class), (p(2, 1), p(1, 2), PairClass::Elliptic));
    }

    #[test]
    fn pointed_box_corner_pairs_are_not_violations() {
        let b = Region2::<Q>::PointedOpenBox;
        for (a, c) in [((0, 0), (1, 1)), ((1, 0), (0, 1))] {
            assert_eq!(b.classify_pair(&p(a.0, a.1), &p(c.0, c.1)).unwrap(), PairClass::Hyperbolic);
        }
        for (a, c) in [((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (0, 1)), ((0, 1), (0, 0))] {
            assert_eq!(b.classify_pair(&p(a.0, a.1), &p(c.0, c.1)).unwrap(), PairClass::Flat);
        }
        let v = b.is_convex_by_pairs(&ProbeStrategy::Vertices).unwrap();
        assert!(v.convex);
        assert!(!b.is_convex());
    }

    #[test]
    fn disk_pairs_are_hyperbolic_and_complement_pairs_elliptic() {
        let c = p(1, -2);
        let r = Q::ratio(5, 3);
        let disk = Region2::disk(c.clone(), r.clone()).unwrap();
        let comp = Region2::disk_complement(c.clone(), r.clone()).unwrap();
        let pts = circle_samples(&c, &r, 12);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                assert_eq!(disk.classify_pair(&pts[i], &pts[j]).unwrap(), PairClass::Hyperbolic);
                assert_eq!(comp.classify_pair(&pts[i], &pts[j]).unwrap(), PairClass::Elliptic);
            }
        }
        assert!(disk.is_convex_by_pairs(&ProbeStrategy::CircleSamples(12)).unwrap().convex);
        assert!(!comp.is_convex_by_pairs(&ProbeStrategy::CircleSamples(12)).unwrap().convex);
    }

    #[test]
    fn visibility_examples() {
        let sq = Region2::polygon(unit_square::<Q>());
        assert!(sq.sees(&pt((1, 2), (1, 2)), &p(0, 0)).unwrap());
        let l = Region2::polygon(l_polygon::<Q>());
        // grazes the reflex corner (1,1) without leaving the set
        assert!(l.sees(&pt((3, 2), (1, 2)), &pt((1, 2), (3, 2))).unwrap());
        assert!(!l.sees(&pt((3, 2), (1, 2)), &pt((1, 2), (7, 4))).unwrap());
        assert!(matches!(l.sees(&p(2, 2), &p(0, 0)), Err(GeomError::NotMember(_))));
        let b = Region2::<Q>::PointedOpenBox;
        assert!(!b.sees(&p(0, 0), &p(1, 0)).unwrap());
        assert!(b.sees(&p(0, 0), &p(1, 1)).unwrap());
    }

    #[test]
    fn kernel_visibility_examples() {
        let l = l_polygon::<Q>();
        assert!(l.kernel_contains_by_visibility(&pt((1, 2), (1, 2)), 8).unwrap());
        assert!(!l.kernel_contains_by_visibility(&pt((3, 2), (1, 2)), 8).unwrap());
        let t = triangle::<Q>();
        assert!(t.kernel_contains_by_visibility(&p(1, 1), 8).unwrap());
        assert!(t.kernel_contains_by_visibility(&p(0, 0), 8).unwrap());
    }

    fn l_member() -> impl Strategy<Value = Point<Q>> {
        (0i64..=32, 0i64..=32)
            .prop_filter("inside the L", |(x, y)| *x <= 16 || *y <= 16)
            .prop_map(|(x, y)| Point::xy(Q::ratio(x, 16), Q::ratio(y, 16)))
    }

    proptest! {
        #[test]
        fn classify_pair_is_symmetric(i in 0usize..12, j in 0usize..12) {
            prop_assume!(i != j);
            for region in [Region2::polygon(z_polygon::<Q>()), Region2::polygon(l_polygon::<Q>())] {
                let pts = region.probe_points(&ProbeStrategy::VerticesAndMidpoints);
                let (a, b) = (&pts[i % pts.len()], &pts[j % pts.len()]);
                prop_assume!(a != b);
                prop_assert_eq!(region.classify_pair(a, b).unwrap(), region.classify_pair(b, a).unwrap());
            }
        }

        #[test]
        fn polygon_sees_matches_partition(x in l_member(), y in l_member()) {
            prop_assume!(x != y);
            for region in [Region2::polygon(l_polygon::<Q>()), Region2::polygon(z_polygon::<Q>())] {
                if region.locate(&x).unwrap().member && region.locate(&y).unwrap().member {
                    let seg = Segment::closed(x.clone(), y.clone());
                    prop_assert_eq!(region.sees(&x, &y).unwrap(), region.partition_segment(&seg).unwrap().all_members());
                }
            }
        }

        #[test]
        fn quick_sight_lines_agree_with_sees(x in l_member(), i in 0usize..6, k in 0i64..8) {
            let l = l_polygon::<Q>();
            let region = Region2::polygon(l.clone());
            let found = region.locate(&x).unwrap();
            prop_assume!(found.member);
            let interior = found.location == PointLocation::Interior;
            let target = l.vertices()[i].lerp(&l.vertices()[(i + 1) % 6], &Q::ratio(k, 8));
            prop_assume!(target != x);
            let small = Sight::new(l.vertices(), &x, interior, 8);
            prop_assert!(matches!(small, Sight::Small(_)));
            let w = l.vertices().iter().map(|v| v - &x).map(|d| [d.x().clone(), d.y().clone()]).collect();
            let exact = Sight::<Q>::Exact(SightLines::new(w, interior));
            let truth = region.sees(&x, &target).unwrap();
            for sight in [small, exact] {
                if let Some(v) = sight.quick(i, k, 8) {
                    prop_assert_eq!(v, truth);
                }
            }
        }

        #[test]
        fn kernel_membership_matches_visibility(x in l_member()) {
            let l = l_polygon::<Q>();
            let expected = l.kernel().contains(&x);
            prop_assert_eq!(l.kernel_contains_by_visibility(&x, 8).unwrap(), expected);
            prop_assert_eq!(l.kernel_contains_by_visibility(&x, 2).unwrap(), expected);
        }
    }
}
