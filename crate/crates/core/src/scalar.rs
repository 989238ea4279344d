//! The exact ordered-field abstraction every predicate is written against.
//!
//! Geometry here is decided by signs (on the boundary, inside, outside), so the
//! scalar must compare exactly. `Ord + Eq + Hash` rules out `f32`/`f64` at
//! compile time; the intended instantiations are [`num_rational::BigRational`]
//! and, for small inputs where overflow is excluded, `Ratio<i64>`/`Ratio<i128>`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact ordered field.
pub trait Scalar:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// The non-negative square root when it is itself exact.
    fn exact_sqrt(&self) -> Option<Self>;

    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }

    /// `num / den`; panics on `den == 0`.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::int(num) / Self::int(den)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    /// `2^-k`.
    fn pow2_neg(k: u32) -> Self {
        let two = Self::int(2);
        let mut out = Self::one();
        for _ in 0..k {
            out = out / two.clone();
        }
        out
    }

    /// Lossy conversion for display purposes only.
    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `"p/q"` or `"p"`.
    fn parse_exact(s: &str) -> Option<Self> {
        let t = s.trim();
        if t.is_empty() {
            return None;
        }
        Self::from_str(t).ok()
    }

    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) * Self::half()
    }

    /// `(numerator, denominator)` when both fit in `i64`, for fast paths that
    /// switch to machine integers.
    fn small_parts(&self) -> Option<(i64, i64)> {
        None
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Roots + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static,
    Ratio<I>: FromStr + FromPrimitive + ToPrimitive + Display,
{
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        let ok = n.clone() * n.clone() == *self.numer() && d.clone() * d.clone() == *self.denom();
        ok.then(|| Ratio::new(n, d))
    }

    fn small_parts(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }
}
