use crate::error::{GeomError, Result};
use crate::geometry::Point;
use crate::polyhedra::PointLocation;
use crate::scalar::Scalar;

/// `{(x, y) : y >= f(x)}` for a strictly convex polynomial `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Epigraph1D<T> {
    coeffs: Vec<T>,
}

/// A graph chord `(a, f(a)) -> (b, f(b))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chord<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Chord<T> {
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

/// Probe grid for the curvature check: `k / 4` for `|k| <= 64`.
const PROBE_HALF_WIDTH: i64 = 64;

impl<T: Scalar> Epigraph1D<T> {
    /// Coefficients in ascending powers. The degree must be even and at least
    /// two, the leading coefficient positive, and `f'' > 0` on the probe grid.
    pub fn new(mut coeffs: Vec<T>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let degree = coeffs.len().saturating_sub(1);
        if degree < 2 || degree % 2 == 1 {
            return Err(GeomError::InvalidEpigraph(format!("degree {degree} is not even and at least 2")));
        }
        if !coeffs[degree].is_positive() {
            return Err(GeomError::InvalidEpigraph("leading coefficient must be positive".into()));
        }
        let e = Self { coeffs };
        for k in -PROBE_HALF_WIDTH..=PROBE_HALF_WIDTH {
            let x = T::ratio(k, 4);
            if !e.second_derivative(&x).is_positive() {
                return Err(GeomError::InvalidEpigraph(format!("f'' is not positive at {x}")));
            }
        }
        Ok(e)
    }

    pub fn parabola() -> Self {
        Self::new(vec![T::zero(), T::zero(), T::one()]).expect("x² is strictly convex")
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    fn second_derivative(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .skip(2)
            .rev()
            .fold(T::zero(), |acc, (i, c)| acc * x.clone() + c.clone() * T::int((i * (i - 1)) as i64))
    }

    pub fn graph_point(&self, x: &T) -> Point<T> {
        Point::xy(x.clone(), self.eval(x))
    }

    pub fn locate(&self, p: &Point<T>) -> Result<PointLocation> {
        p.check_dim(2)?;
        let gap = p.y().clone() - self.eval(p.x());
        Ok(if gap.is_positive() {
            PointLocation::Interior
        } else if gap.is_zero() {
            PointLocation::Boundary
        } else {
            PointLocation::Exterior
        })
    }

    /// Height of the chord over `x0 - t, x0 + t` at `x0`.
    fn chord_height(&self, x0: &T, t: &T) -> T {
        (self.eval(&(x0.clone() - t.clone())) + self.eval(&(x0.clone() + t.clone()))) * T::half()
    }

    /// A graph chord through `p` or passing above it by at most `tol`. The
    /// half-width is found by doubling and then bisection on the chord height,
    /// which is increasing in the half-width.
    pub fn chord_find(&self, p: &Point<T>, tol: &T) -> Result<Chord<T>> {
        match self.locate(p)? {
            PointLocation::Exterior => return Err(GeomError::BelowGraph),
            PointLocation::Boundary => return Ok(Chord { a: p.x().clone(), b: p.x().clone() }),
            PointLocation::Interior => {}
        }
        let (x0, y) = (p.x(), p.y());
        let mut lo = T::zero();
        let mut hi = T::one();
        while self.chord_height(x0, &hi) < *y {
            lo = hi.clone();
            hi = hi * T::int(2);
        }
        while self.chord_height(x0, &hi) - y.clone() > *tol {
            let mid = T::midpoint(&lo, &hi);
            if self.chord_height(x0, &mid) < *y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(Chord { a: x0.clone() - hi.clone(), b: x0.clone() + hi })
    }

    /// Value at `x` of the line through the chord endpoints.
    pub fn chord_value(&self, chord: &Chord<T>, x: &T) -> T {
        if chord.is_degenerate() {
            return self.eval(x);
        }
        let (fa, fb) = (self.eval(&chord.a), self.eval(&chord.b));
        fa.clone() + (fb - fa) * (x.clone() - chord.a.clone()) / (chord.b.clone() - chord.a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn tau() -> Q {
        Q::pow2_neg(40)
    }

    #[test]
    fn parabola_chords() {
        let e = Epigraph1D::<Q>::parabola();
        let c = e.chord_find(&Point::from_ints(&[0, 1]), &tau()).unwrap();
        assert_eq!((c.a, c.b), (Q::int(-1), Q::int(1)));
        let c = e.chord_find(&Point::from_ints(&[0, 0]), &tau()).unwrap();
        assert!(c.is_degenerate() && c.a == Q::int(0));
        let c = e.chord_find(&Point::from_ints(&[1, 2]), &tau()).unwrap();
        assert_eq!((c.a, c.b), (Q::int(0), Q::int(2)));
        assert!(matches!(e.chord_find(&Point::from_ints(&[1, 0]), &tau()), Err(GeomError::BelowGraph)));
    }

    #[test]
    fn construction_checks() {
        assert!(Epigraph1D::<Q>::new(vec![Q::int(1), Q::int(1)]).is_err());
        assert!(Epigraph1D::<Q>::new(vec![Q::int(0), Q::int(0), Q::int(-1)]).is_err());
        assert!(Epigraph1D::<Q>::new(vec![Q::int(0), Q::int(0), Q::int(0), Q::int(1)]).is_err());
        // x⁴ is flat at the origin
        assert!(Epigraph1D::<Q>::new(vec![Q::int(0), Q::int(0), Q::int(0), Q::int(0), Q::int(1)]).is_err());
        let quartic = Epigraph1D::<Q>::new(vec![Q::int(0), Q::int(0), Q::int(1), Q::int(0), Q::int(1)]).unwrap();
        assert_eq!(quartic.eval(&Q::int(2)), Q::int(20));
    }

    proptest! {
        #[test]
        fn chord_brackets_point(xn in -48i64..=48, yn in 1i64..=160, extra in 0i64..4) {
            let e = Epigraph1D::<Q>::new(vec![Q::int(1), Q::int(-1), Q::int(1), Q::int(0), Q::ratio(extra, 8)])
                .unwrap_or_else(|_| Epigraph1D::parabola());
            let x = Q::ratio(xn, 16);
            let p = Point::xy(x.clone(), e.eval(&x) + Q::ratio(yn, 16));
            let c = e.chord_find(&p, &tau()).unwrap();
            prop_assert!(c.a <= x && x <= c.b);
            let h = e.chord_value(&c, &x);
            prop_assert!(h >= *p.y());
            prop_assert!(h - p.y().clone() <= tau());
        }
    }
}
