//! Seeded random instances. Coordinates are rationals with denominator 64
//! unless stated otherwise.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::geometry::{cross3, Point, Vector};
use crate::polyhedra::{HPolyhedron, Halfspace};
use crate::regions2d::{Region2, SimplePolygon};
use crate::scalar::Scalar;

use super::Epigraph1D;

const DEN: i64 = 64;

pub fn grid<T: Scalar, R: Rng>(rng: &mut R, lo: i64, hi: i64) -> T {
    T::ratio(rng.random_range(lo..=hi), DEN)
}

fn grid_point<T: Scalar, R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Point<T> {
    Point::xy(grid(rng, lo, hi), grid(rng, lo, hi))
}

/// Andrew's monotone chain with strict turns; counterclockwise.
pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Point<T>> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point<T>>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && !cross3(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive() {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

/// Hull of 3 to 10 grid points in `[-4, 4]²`.
pub fn convex_polygon<T: Scalar, R: Rng>(rng: &mut R) -> SimplePolygon<T> {
    loop {
        let k = rng.random_range(3..=10);
        let pts: Vec<Point<T>> = (0..k).map(|_| grid_point(rng, -256, 256)).collect();
        let hull = convex_hull(&pts);
        if hull.len() >= 3 {
            if let Ok(p) = SimplePolygon::new(hull) {
                return p;
            }
        }
    }
}

fn distinct_sorted<R: Rng>(rng: &mut R, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = rand::seq::index::sample(rng, (hi - lo + 1) as usize, count)
        .into_iter()
        .map(|i| lo + i as i64)
        .collect();
    v.sort_unstable();
    v
}

/// Orthogonal staircase with 1 to 5 steps (4 to 12 vertices).
pub fn staircase_polygon<T: Scalar, R: Rng>(rng: &mut R) -> SimplePolygon<T> {
    let steps = rng.random_range(1..=5);
    let xs = distinct_sorted(rng, steps, 1, 256);
    let mut ys = distinct_sorted(rng, steps, 1, 256);
    ys.reverse();
    let q = |n: i64| T::ratio(n, DEN);
    let mut vs = vec![Point::xy(q(0), q(0)), Point::xy(q(xs[steps - 1]), q(0))];
    for i in (0..steps).rev() {
        let x_prev = if i == 0 { 0 } else { xs[i - 1] };
        vs.push(Point::xy(q(xs[i]), q(ys[i])));
        vs.push(Point::xy(q(x_prev), q(ys[i])));
    }
    SimplePolygon::new(vs).expect("staircases are simple")
}

/// A convex polygon with one grid vertex pushed inward on an edge.
pub fn notched_polygon<T: Scalar, R: Rng>(rng: &mut R) -> SimplePolygon<T> {
    loop {
        let base = convex_polygon::<T, R>(rng);
        let vs = base.vertices();
        let n = vs.len();
        let centroid = {
            let sum = vs.iter().fold(Vector::zeros(2), |acc, v| &acc + &v.to_vector());
            Point::new(sum.scale(&T::ratio(1, n as i64)).into_coords())
        };
        let i = rng.random_range(0..n);
        let (a, b) = (&vs[i], &vs[(i + 1) % n]);
        let coords = |f: fn(&Point<T>) -> &T| {
            let vals = [f(a).approx(), f(b).approx(), f(&centroid).approx()];
            let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            ((lo * DEN as f64).floor() as i64, (hi * DEN as f64).ceil() as i64)
        };
        let (xr, yr) = (coords(Point::x), coords(Point::y));
        for _ in 0..64 {
            let p = Point::xy(grid(rng, xr.0, xr.1), grid(rng, yr.0, yr.1));
            let inside = [(a, b), (b, &centroid), (&centroid, a)].iter().all(|(u, v)| cross3(u, v, &p).is_positive());
            if inside {
                let mut out = vs.to_vec();
                out.insert(i + 1, p);
                if let Ok(poly) = SimplePolygon::new(out) {
                    return poly;
                }
            }
        }
    }
}

/// An I-shaped 12-gon; its flanges make the kernel empty.
pub fn i_beam<T: Scalar, R: Rng>(rng: &mut R) -> SimplePolygon<T> {
    let w = rng.random_range(128..=384);
    let a = rng.random_range(16..=w / 2 - 16);
    let t = rng.random_range(16..=64);
    let h = rng.random_range(2 * t + 32..=512);
    let raw = [
        (0, 0),
        (w, 0),
        (w, t),
        (w - a, t),
        (w - a, h - t),
        (w, h - t),
        (w, h),
        (0, h),
        (0, h - t),
        (a, h - t),
        (a, t),
        (0, t),
    ];
    let (dx, dy) = (rng.random_range(-128..=0), rng.random_range(-128..=0));
    let vs = raw.iter().map(|&(x, y)| Point::xy(T::ratio(x + dx, DEN), T::ratio(y + dy, DEN))).collect();
    SimplePolygon::new(vs).expect("I-beams are simple")
}

/// Half convex, the rest split between staircases, notches and I-beams.
pub fn mixed_polygon<T: Scalar, R: Rng>(rng: &mut R) -> SimplePolygon<T> {
    match rng.random_range(0..6) {
        0..=2 => convex_polygon(rng),
        3 => staircase_polygon(rng),
        4 => notched_polygon(rng),
        _ => i_beam(rng),
    }
}

pub fn disk<T: Scalar, R: Rng>(rng: &mut R) -> Region2<T> {
    Region2::disk(grid_point(rng, -128, 128), grid(rng, 16, 256)).expect("positive radius")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyMode {
    /// Random normals and offsets, filtered for non-emptiness.
    Random,
    /// The origin strictly inside and bounded.
    Bounded,
    /// An equality constraint or a lineality direction.
    Degenerate,
}

fn random_normal<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> Vector<T> {
    loop {
        let v = Vector::new((0..n).map(|_| T::int(rng.random_range(-4..=4))).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

fn pick_dim<R: Rng>(rng: &mut R) -> usize {
    *[1usize, 2, 2, 3, 3, 3].choose(rng).expect("non-empty")
}

/// A non-empty polyhedron in dimension 1 to 3 with at most 12 constraints.
pub fn hpolyhedron<T: Scalar, R: Rng>(rng: &mut R, mode: PolyMode) -> HPolyhedron<T> {
    loop {
        let n = pick_dim(rng);
        let p = match mode {
            PolyMode::Random => {
                let m = rng.random_range(1..=12);
                let hs = (0..m)
                    .map(|_| Halfspace::new(random_normal(rng, n), T::ratio(rng.random_range(-16..=16), 4)).expect("non-zero"))
                    .collect();
                HPolyhedron::new(n, hs).expect("dims agree")
            }
            PolyMode::Bounded => bounded_polytope_in(rng, n, 12),
            PolyMode::Degenerate => {
                if n > 1 && rng.random_bool(0.5) {
                    with_lineality(rng, n)
                } else {
                    let base = bounded_polytope_in::<T, R>(rng, n, 10);
                    let w = random_normal(rng, n);
                    let value = T::ratio(rng.random_range(-2..=2), 4);
                    match base.with_equality(w, value) {
                        Ok(p) => p,
                        Err(_) => continue,
                    }
                }
            }
        };
        if matches!(p.is_empty(), Ok(false)) {
            return p;
        }
    }
}

/// Bounded, with the origin strictly inside.
pub fn bounded_polytope<T: Scalar, R: Rng>(rng: &mut R) -> HPolyhedron<T> {
    let n = pick_dim(rng);
    bounded_polytope_in(rng, n, 12)
}

/// At most `budget` constraints, counting the bounding box if one is added.
fn bounded_polytope_in<T: Scalar, R: Rng>(rng: &mut R, n: usize, budget: usize) -> HPolyhedron<T> {
    let m = rng.random_range(n + 1..=budget - 2 * n);
    let hs = (0..m)
        .map(|_| Halfspace::new(random_normal(rng, n), T::ratio(rng.random_range(1..=16), 4)).expect("non-zero"))
        .collect();
    let p = HPolyhedron::new(n, hs).expect("dims agree");
    if p.is_bounded().unwrap_or(false) {
        return p;
    }
    (0..n).fold(p, |acc, j| {
        let e = Vector::unit(n, j);
        acc.with_halfspace(Halfspace::new(e.clone(), T::int(4)).expect("unit"))
            .and_then(|q| q.with_halfspace(Halfspace::new(-&e, T::int(4)).expect("unit")))
            .expect("dims agree")
    })
}

/// Every normal orthogonal to a random integer direction.
fn with_lineality<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> HPolyhedron<T> {
    let d: Vector<T> = random_normal(rng, n);
    let m = rng.random_range(1..=6);
    let mut hs = Vec::new();
    while hs.len() < m {
        let r: Vector<T> = random_normal(rng, n);
        let normal = if n == 2 {
            Vector::xy(-d[1].clone(), d[0].clone()).scale(&r[0])
        } else {
            Vector::new(vec![
                d[1].clone() * r[2].clone() - d[2].clone() * r[1].clone(),
                d[2].clone() * r[0].clone() - d[0].clone() * r[2].clone(),
                d[0].clone() * r[1].clone() - d[1].clone() * r[0].clone(),
            ])
        };
        if let Ok(h) = Halfspace::new(normal, T::ratio(rng.random_range(-8..=16), 4)) {
            hs.push(h);
        }
    }
    HPolyhedron::new(n, hs).expect("dims agree")
}

pub fn direction<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> Vector<T> {
    random_normal(rng, n)
}

/// `c0 + c1 x + c2 x²`, sometimes plus `c4 x⁴`.
pub fn epigraph<T: Scalar, R: Rng>(rng: &mut R) -> Epigraph1D<T> {
    let mut coeffs = vec![
        T::ratio(rng.random_range(-8..=8), 4),
        T::ratio(rng.random_range(-8..=8), 4),
        T::ratio(rng.random_range(1..=8), 4),
    ];
    if rng.random_bool(0.3) {
        coeffs.push(T::zero());
        coeffs.push(T::ratio(rng.random_range(1..=4), 8));
    }
    Epigraph1D::new(coeffs).expect("positive curvature")
}
