//! Points, vectors and segments with exact coordinates.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    coords: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T> {
    coords: Vec<T>,
}

macro_rules! coord_container {
    ($ty:ident) => {
        impl<T: Scalar> $ty<T> {
            pub fn new(coords: Vec<T>) -> Self {
                assert!(!coords.is_empty(), "coordinates must be non-empty");
                Self { coords }
            }

            pub fn zeros(dim: usize) -> Self {
                Self::new(vec![T::zero(); dim])
            }

            pub fn from_ints(values: &[i64]) -> Self {
                Self::new(values.iter().map(|&v| T::int(v)).collect())
            }

            pub fn dim(&self) -> usize {
                self.coords.len()
            }

            pub fn coords(&self) -> &[T] {
                &self.coords
            }

            pub fn into_coords(self) -> Vec<T> {
                self.coords
            }

            pub fn x(&self) -> &T {
                &self.coords[0]
            }

            pub fn y(&self) -> &T {
                &self.coords[1]
            }

            pub fn check_dim(&self, expected: usize) -> Result<()> {
                if self.dim() == expected {
                    Ok(())
                } else {
                    Err(GeomError::DimensionMismatch { expected, found: self.dim() })
                }
            }

            pub fn to_strings(&self) -> Vec<String> {
                self.coords.iter().map(ToString::to_string).collect()
            }
        }

        impl<T> Index<usize> for $ty<T> {
            type Output = T;
            fn index(&self, i: usize) -> &T {
                &self.coords[i]
            }
        }

        impl<T: fmt::Display> fmt::Display for $ty<T> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }

        impl<T: fmt::Display> Serialize for $ty<T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.coords.iter().map(ToString::to_string))
            }
        }
    };
}

coord_container!(Point);
coord_container!(Vector);

impl<T: Scalar> Point<T> {
    pub fn origin(dim: usize) -> Self {
        Self::zeros(dim)
    }

    pub fn xy(x: T, y: T) -> Self {
        Self::new(vec![x, y])
    }

    pub fn to_vector(&self) -> Vector<T> {
        Vector::new(self.coords.clone())
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Self, t: &T) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + t.clone() * (b.clone() - a.clone()))
                .collect(),
        )
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        self.lerp(other, &T::half())
    }

    /// `self + t * dir`.
    pub fn offset(&self, dir: &Vector<T>, t: &T) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&dir.coords)
                .map(|(a, d)| a.clone() + t.clone() * d.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Vector<T> {
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = vec![T::zero(); dim];
        v[axis] = T::one();
        Self::new(v)
    }

    pub fn xy(x: T, y: T) -> Self {
        Self::new(vec![x, y])
    }

    pub fn dot(&self, other: &Self) -> T {
        dot(&self.coords, &other.coords)
    }

    pub fn dot_point(&self, p: &Point<T>) -> T {
        dot(&self.coords, &p.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coords.iter().map(|c| c.clone() * k.clone()).collect())
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<T: Scalar> Sub for &Point<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Point<T>) -> Vector<T> {
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Add<&Vector<T>> for &Point<T> {
    type Output = Point<T>;
    fn add(self, rhs: &Vector<T>) -> Point<T> {
        self.offset(rhs, &T::one())
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: &Vector<T>) -> Vector<T> {
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Vector<T>) -> Vector<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector::new(self.coords.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Mul<&T> for &Vector<T> {
    type Output = Vector<T>;
    fn mul(self, k: &T) -> Vector<T> {
        self.scale(k)
    }
}

/// Which endpoints a segment includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Openness {
    Closed,
    Open,
    /// Contains `b` but not `a`.
    OpenAtStart,
    /// Contains `a` but not `b`.
    OpenAtEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
    pub openness: Openness,
}

impl<T: Scalar> Segment<T> {
    pub fn closed(a: Point<T>, b: Point<T>) -> Self {
        Self { a, b, openness: Openness::Closed }
    }

    pub fn open(a: Point<T>, b: Point<T>) -> Self {
        Self { a, b, openness: Openness::Open }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn direction(&self) -> Vector<T> {
        &self.b - &self.a
    }

    pub fn at(&self, t: &T) -> Point<T> {
        self.a.lerp(&self.b, t)
    }

    pub fn includes_start(&self) -> bool {
        matches!(self.openness, Openness::Closed | Openness::OpenAtEnd)
    }

    pub fn includes_end(&self) -> bool {
        matches!(self.openness, Openness::Closed | Openness::OpenAtStart)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Positive,
    Zero,
    Negative,
}

impl Orientation {
    pub fn of<T: Scalar>(value: &T) -> Self {
        if value.is_positive() {
            Orientation::Positive
        } else if value.is_negative() {
            Orientation::Negative
        } else {
            Orientation::Zero
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Zero => Orientation::Zero,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Twice the signed area of the triangle `abc` (2D only, unchecked).
pub(crate) fn cross3<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> T {
    let (ax, ay) = (&a.coords[0], &a.coords[1]);
    (b.coords[0].clone() - ax.clone()) * (c.coords[1].clone() - ay.clone())
        - (b.coords[1].clone() - ay.clone()) * (c.coords[0].clone() - ax.clone())
}

/// 2D cross product of two vectors (unchecked).
pub(crate) fn cross2<T: Scalar>(u: &Vector<T>, v: &Vector<T>) -> T {
    u.coords[0].clone() * v.coords[1].clone() - u.coords[1].clone() * v.coords[0].clone()
}

/// Sign of `det(b - a, c - a)`.
pub fn orientation<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> Result<Orientation> {
    for p in [a, b, c] {
        p.check_dim(2)?;
    }
    Ok(Orientation::of(&cross3(a, b, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};
    use proptest::prelude::*;

    type P = Point<BigRational>;

    fn p(x: i64, y: i64) -> P {
        P::from_ints(&[x, y])
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)).unwrap(), Orientation::Positive);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)).unwrap(), Orientation::Zero);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)).unwrap(), Orientation::Negative);
    }

    #[test]
    fn orientation_rejects_other_dimensions() {
        let q = P::from_ints(&[0, 0, 0]);
        assert_eq!(
            orientation(&q, &p(1, 0), &p(0, 1)),
            Err(GeomError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn orientation_over_fixed_width_rationals() {
        let a = Point::<Rational64>::from_ints(&[0, 0]);
        let b = Point::<Rational64>::new(vec![Rational64::new(1, 3), Rational64::new(1, 3)]);
        let c = Point::<Rational64>::from_ints(&[1, 1]);
        assert_eq!(orientation(&a, &b, &c).unwrap(), Orientation::Zero);
    }

    #[test]
    fn lerp_and_midpoint() {
        let a = p(0, 0);
        let b = p(2, 4);
        assert_eq!(a.midpoint(&b), p(1, 2));
        assert_eq!(a.lerp(&b, &BigRational::ratio(1, 4)), P::new(vec![BigRational::half(), BigRational::int(1)]));
    }

    #[test]
    fn serializes_as_rational_strings() {
        let q = P::new(vec![BigRational::ratio(1, 2), BigRational::int(-3)]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["1/2","-3"]"#);
    }

    fn rat() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::ratio(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(a.clone() + (b.clone() + c.clone()), (a.clone() + b.clone()) + c.clone());
            prop_assert_eq!(a.clone() * (b.clone() * c.clone()), (a.clone() * b.clone()) * c.clone());
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
        }

        #[test]
        fn orientation_is_antisymmetric(ax in rat(), ay in rat(), bx in rat(), by in rat(), cx in rat(), cy in rat()) {
            let (a, b, c) = (P::xy(ax, ay), P::xy(bx, by), P::xy(cx, cy));
            prop_assert_eq!(orientation(&a, &b, &c).unwrap(), orientation(&a, &c, &b).unwrap().reversed());
        }
    }
}
