use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::geometry::{cross2, Point, Segment};
use crate::polyhedra::PointLocation;
use crate::scalar::Scalar;

use super::region::{Located, Region2};

/// A breakpoint of the segment parameter: either an exact rational, or an
/// irrational crossing isolated strictly inside `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cut<T> {
    Exact(T),
    Bracketed { lo: T, hi: T },
}

impl<T: Scalar> Cut<T> {
    fn lower(&self) -> &T {
        match self {
            Cut::Exact(t) => t,
            Cut::Bracketed { lo, .. } => lo,
        }
    }

    fn upper(&self) -> &T {
        match self {
            Cut::Exact(t) => t,
            Cut::Bracketed { hi, .. } => hi,
        }
    }
}

/// One maximal piece of the open segment carrying a single location.
/// A point piece has `start == end` and includes both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece<T> {
    pub start: Cut<T>,
    pub end: Cut<T>,
    pub includes_start: bool,
    pub includes_end: bool,
    pub location: PointLocation,
    pub member: bool,
    /// A parameter strictly inside the piece where the location was checked;
    /// `None` for bracketed point pieces.
    pub sample: Option<T>,
}

impl<T: Scalar> Piece<T> {
    pub fn is_point(&self) -> bool {
        self.start == self.end
    }
}

/// Exact decomposition of the open segment `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentPartition<T> {
    pieces: Vec<Piece<T>>,
}

impl<T: Scalar> SegmentPartition<T> {
    pub fn pieces(&self) -> &[Piece<T>] {
        &self.pieces
    }

    pub fn all_location(&self, location: PointLocation) -> bool {
        self.pieces.iter().all(|p| p.location == location)
    }

    pub fn all_members(&self) -> bool {
        self.pieces.iter().all(|p| p.member)
    }

    /// The location at an arbitrary parameter in `(0, 1)`.
    pub fn location_at(&self, t: &T) -> Option<PointLocation> {
        self.pieces.iter().find(|p| piece_contains(p, t)).map(|p| p.location)
    }
}

fn piece_contains<T: Scalar>(p: &Piece<T>, t: &T) -> bool {
    match (&p.start, &p.end) {
        // the crossing is irrational, so no rational parameter hits it
        (Cut::Bracketed { .. }, _) if p.is_point() => false,
        _ => {
            let after = if p.includes_start { p.start.upper() <= t } else { p.start.upper() < t };
            let before = if p.includes_end { t <= p.end.lower() } else { t < p.end.lower() };
            after && before
        }
    }
}

#[derive(Debug, Serialize)]
struct PieceView {
    from: String,
    to: String,
    point: bool,
    location: PointLocation,
    member: bool,
}

impl<T: Scalar> Serialize for SegmentPartition<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fmt = |c: &Cut<T>| match c {
            Cut::Exact(t) => t.to_string(),
            Cut::Bracketed { lo, hi } => format!("({lo}, {hi})"),
        };
        let views: Vec<PieceView> = self
            .pieces
            .iter()
            .map(|p| PieceView {
                from: fmt(&p.start),
                to: fmt(&p.end),
                point: p.is_point(),
                location: p.location,
                member: p.member,
            })
            .collect();
        views.serialize(s)
    }
}

impl<T: Scalar> Region2<T> {
    /// Splits the open segment at every crossing with the region boundary
    /// and locates each piece.
    pub fn partition_segment(&self, seg: &Segment<T>) -> Result<SegmentPartition<T>> {
        seg.a.check_dim(2)?;
        seg.b.check_dim(2)?;
        if seg.is_degenerate() {
            return Err(GeomError::DegenerateSegment);
        }
        let mut cuts = match self {
            Region2::Disk { center, radius } | Region2::DiskComplement { center, radius } => {
                circle_cuts(&seg.a, &seg.b, center, radius)
            }
            _ => edge_cuts(&seg.a, &seg.b, &self.boundary_edges()),
        };
        cuts.sort_by(|x, y| x.lower().cmp(y.lower()));
        cuts.dedup();

        let mut pieces: Vec<Piece<T>> = Vec::with_capacity(2 * cuts.len() + 1);
        let mut prev = Cut::Exact(T::zero());
        for cut in cuts.into_iter().chain(std::iter::once(Cut::Exact(T::one()))) {
            let sample = T::midpoint(prev.upper(), cut.lower());
            let found = self.locate(&seg.at(&sample))?;
            push_merged(&mut pieces, Piece {
                start: prev.clone(),
                end: cut.clone(),
                includes_start: false,
                includes_end: false,
                location: found.location,
                member: found.member,
                sample: Some(sample),
            });
            if cut.lower() == &T::one() {
                break;
            }
            let found = match &cut {
                Cut::Exact(t) => self.locate(&seg.at(t))?,
                Cut::Bracketed { .. } => Located {
                    location: PointLocation::Boundary,
                    member: matches!(self, Region2::Disk { .. }),
                },
            };
            let sample = match &cut {
                Cut::Exact(t) => Some(t.clone()),
                Cut::Bracketed { .. } => None,
            };
            push_merged(&mut pieces, Piece {
                start: cut.clone(),
                end: cut.clone(),
                includes_start: true,
                includes_end: true,
                location: found.location,
                member: found.member,
                sample,
            });
            prev = cut;
        }
        Ok(SegmentPartition { pieces })
    }
}

fn push_merged<T: Scalar>(pieces: &mut Vec<Piece<T>>, next: Piece<T>) {
    if let Some(last) = pieces.last_mut() {
        if last.location == next.location && last.member == next.member {
            last.end = next.end;
            last.includes_end = next.includes_end;
            return;
        }
    }
    pieces.push(next);
}

/// Parameters in `(0, 1)` where `a + t (b - a)` meets one of the edges.
fn edge_cuts<T: Scalar>(a: &Point<T>, b: &Point<T>, edges: &[(Point<T>, Point<T>)]) -> Vec<Cut<T>> {
    let d = b - a;
    let dd = d.dot(&d);
    let inside = |t: &T| t.is_positive() && *t < T::one();
    let mut out = Vec::new();
    for (e0, e1) in edges {
        let e = e1 - e0;
        let w = e0 - a;
        let denom = cross2(&d, &e);
        if denom.is_zero() {
            if !cross2(&w, &d).is_zero() {
                continue;
            }
            for v in [e0, e1] {
                let t = (v - a).dot(&d) / dd.clone();
                if inside(&t) {
                    out.push(Cut::Exact(t));
                }
            }
        } else {
            let t = cross2(&w, &e) / denom.clone();
            let u = cross2(&w, &d) / denom;
            if !u.is_negative() && u <= T::one() && inside(&t) {
                out.push(Cut::Exact(t));
            }
        }
    }
    out
}

/// Roots in `(0, 1)` of `|a + t d - c|² = r²`, exact when rational and
/// otherwise bracketed by bisection.
fn circle_cuts<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>, r: &T) -> Vec<Cut<T>> {
    let d = b - a;
    let w = a - c;
    let qa = d.dot(&d);
    let qb = T::int(2) * d.dot(&w);
    let qc = w.dot(&w) - r.clone() * r.clone();
    let disc = qb.clone() * qb.clone() - T::int(4) * qa.clone() * qc.clone();
    if disc.is_negative() {
        return Vec::new();
    }
    let two_a = T::int(2) * qa.clone();
    let inside = |t: &T| t.is_positive() && *t < T::one();
    if let Some(root) = disc.exact_sqrt() {
        let mut ts = vec![(-qb.clone() - root.clone()) / two_a.clone()];
        if !root.is_zero() {
            ts.push((-qb + root) / two_a);
        }
        return ts.into_iter().filter(inside).map(Cut::Exact).collect();
    }
    let f = |t: &T| (qa.clone() * t.clone() + qb.clone()) * t.clone() + qc.clone();
    let tm = -qb.clone() / two_a;
    let mut out = Vec::new();
    for dir in [-T::one(), T::one()] {
        let mut step = T::one();
        let mut far = tm.clone() + dir.clone() * step.clone();
        while !f(&far).is_positive() {
            step = step * T::int(2);
            far = tm.clone() + dir.clone() * step.clone();
        }
        // f(near) < 0 < f(far); the root never equals 0, 1, or tm.
        let mut near = tm.clone();
        loop {
            let (lo, hi) = if near < far { (&near, &far) } else { (&far, &near) };
            let settled = *lo != tm && *hi != tm && straddles_none(lo, hi);
            if settled {
                break;
            }
            let mid = T::midpoint(&near, &far);
            if f(&mid).is_negative() {
                near = mid;
            } else {
                far = mid;
            }
        }
        let (lo, hi) = if near < far { (near, far) } else { (far, near) };
        if !lo.is_negative() && hi <= T::one() && inside(&lo) {
            out.push(Cut::Bracketed { lo, hi });
        }
    }
    out
}

fn straddles_none<T: Scalar>(lo: &T, hi: &T) -> bool {
    let outside = |v: T| !(*lo <= v && v <= *hi);
    outside(T::zero()) && outside(T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions2d::polygon::fixtures::*;
    use num_rational::BigRational;
    use num_traits::Signed;
    use proptest::prelude::*;

    type Q = BigRational;

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point<Q> {
        Point::xy(Q::ratio(x.0, x.1), Q::ratio(y.0, y.1))
    }

    fn summary(p: &SegmentPartition<Q>) -> Vec<(bool, PointLocation)> {
        p.pieces().iter().map(|x| (x.is_point(), x.location)).collect()
    }

    #[test]
    fn square_entry_segment() {
        let r = Region2::polygon(unit_square::<Q>());
        let seg = Segment::closed(pt((-1, 2), (1, 2)), pt((1, 2), (1, 2)));
        let p = r.partition_segment(&seg).unwrap();
        use PointLocation::*;
        assert_eq!(summary(&p), vec![(false, Exterior), (true, Boundary), (false, Interior)]);
        assert_eq!(p.pieces()[1].start, Cut::Exact(Q::half()));
    }

    #[test]
    fn square_edge_is_one_boundary_piece() {
        let r = Region2::polygon(unit_square::<Q>());
        let p = r.partition_segment(&Segment::closed(Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0]))).unwrap();
        assert_eq!(p.pieces().len(), 1);
        assert_eq!(p.pieces()[0].location, PointLocation::Boundary);
    }

    #[test]
    fn disk_chord_is_interior() {
        let r = Region2::disk(Point::<Q>::origin(2), Q::int(1)).unwrap();
        let p = r.partition_segment(&Segment::closed(Point::from_ints(&[-1, 0]), Point::from_ints(&[1, 0]))).unwrap();
        assert_eq!(summary(&p), vec![(false, PointLocation::Interior)]);
    }

    #[test]
    fn irrational_circle_crossings_are_bracketed() {
        let r = Region2::disk(Point::<Q>::origin(2), Q::int(1)).unwrap();
        // crosses the circle at x = ±1/√2 on the line y = x
        let p = r.partition_segment(&Segment::closed(Point::from_ints(&[-1, -1]), Point::from_ints(&[1, 1]))).unwrap();
        use PointLocation::*;
        assert_eq!(
            summary(&p),
            vec![(false, Exterior), (true, Boundary), (false, Interior), (true, Boundary), (false, Exterior)]
        );
        for piece in p.pieces().iter().filter(|x| x.is_point()) {
            let Cut::Bracketed { lo, hi } = &piece.start else { panic!("expected bracket") };
            let f = |t: &Q| {
                let x = Q::int(2) * t.clone() - Q::int(1);
                Q::int(2) * x.clone() * x - Q::int(1)
            };
            assert!(f(lo).signum() * f(hi).signum() == -Q::int(1));
        }
    }

    #[test]
    fn l_polygon_notch_pairs() {
        let r = Region2::polygon(l_polygon::<Q>());
        let elliptic = r.partition_segment(&Segment::closed(Point::from_ints(&[1, 2]), Point::from_ints(&[2, 1]))).unwrap();
        assert!(elliptic.all_location(PointLocation::Exterior));
        let mixed = r.partition_segment(&Segment::closed(Point::from_ints(&[0, 2]), Point::from_ints(&[2, 0]))).unwrap();
        use PointLocation::*;
        assert_eq!(summary(&mixed), vec![(false, Interior), (true, Boundary), (false, Interior)]);
    }

    #[test]
    fn degenerate_segment_rejected() {
        let r = Region2::polygon(unit_square::<Q>());
        let a = Point::<Q>::from_ints(&[0, 0]);
        assert!(matches!(r.partition_segment(&Segment::closed(a.clone(), a)), Err(GeomError::DegenerateSegment)));
    }

    fn small() -> impl Strategy<Value = Q> {
        (-24i64..=24, 1i64..=8).prop_map(|(n, d)| Q::ratio(n, d))
    }

    proptest! {
        #[test]
        fn pieces_agree_with_brute_force(ax in small(), ay in small(), bx in small(), by in small(), k in 1i64..40) {
            let seg = Segment::closed(Point::xy(ax, ay), Point::xy(bx, by));
            prop_assume!(!seg.is_degenerate());
            let t = Q::ratio(k, 40);
            for region in [
                Region2::polygon(z_polygon::<Q>()),
                Region2::disk(Point::from_ints(&[1, 1]), Q::ratio(3, 2)).unwrap(),
                Region2::PointedOpenBox,
            ] {
                let part = region.partition_segment(&seg).unwrap();
                let direct = region.locate(&seg.at(&t)).unwrap().location;
                if let Some(found) = part.location_at(&t) {
                    prop_assert_eq!(found, direct);
                }
                let covered = part.pieces().iter().filter(|p| piece_contains(p, &t)).count();
                prop_assert!(covered <= 1);
            }
        }
    }
}
