use std::collections::BTreeSet;

use crate::error::{GeomError, Result};
use crate::geometry::{Point, Vector};
use crate::linprog::{is_feasible, Constraint};
use crate::scalar::Scalar;

/// The convex hull of a non-empty finite point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VPolytope<T> {
    dim: usize,
    generators: Vec<Point<T>>,
}

impl<T: Scalar> VPolytope<T> {
    pub fn new(generators: Vec<Point<T>>) -> Result<Self> {
        let first = generators.first().ok_or(GeomError::Empty("v-polytope needs at least one generator"))?;
        let dim = first.dim();
        for g in &generators {
            g.check_dim(dim)?;
        }
        Ok(Self { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point<T>] {
        &self.generators
    }

    /// Convex-combination weights expressing `x`, if `x` lies in the hull.
    pub fn hull_weights(&self, x: &Point<T>) -> Result<Option<Vec<T>>> {
        x.check_dim(self.dim)?;
        Ok(hull_weights(&self.generators, x))
    }

    pub fn hull_contains(&self, x: &Point<T>) -> Result<bool> {
        Ok(self.hull_weights(x)?.is_some())
    }

    /// The generators that are not convex combinations of the others, after
    /// merging duplicates; equals the extreme-point set of the hull.
    pub fn profile(&self) -> Result<Vec<Point<T>>> {
        let distinct: Vec<Point<T>> = self.generators.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut out = Vec::new();
        for (i, g) in distinct.iter().enumerate() {
            let others: Vec<Point<T>> =
                distinct.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            if others.is_empty() || hull_weights(&others, g).is_none() {
                out.push(g.clone());
            }
        }
        Ok(out)
    }
}

/// Solves `λ >= 0, Σλ = 1, Σ λ_i g_i = x` for `λ`.
pub(crate) fn hull_weights<T: Scalar>(generators: &[Point<T>], x: &Point<T>) -> Option<Vec<T>> {
    let k = generators.len();
    let mut cons = Vec::with_capacity(k + x.dim() + 1);
    for i in 0..k {
        cons.push(Constraint::ge(Vector::unit(k, i), T::zero()));
    }
    cons.push(Constraint::eq(Vector::new(vec![T::one(); k]), T::one()));
    for j in 0..x.dim() {
        let row = Vector::new(generators.iter().map(|g| g[j].clone()).collect());
        cons.push(Constraint::eq(row, x[j].clone()));
    }
    is_feasible(k, &cons)
        .expect("hull system is dimensionally consistent")
        .map(Point::into_coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = BigRational;

    fn corners() -> Vec<Point<Q>> {
        [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|c| Point::from_ints(c)).collect()
    }

    fn half() -> Point<Q> {
        Point::xy(Q::half(), Q::half())
    }

    #[test]
    fn profile_drops_center() {
        let mut g = corners();
        g.push(half());
        let v = VPolytope::new(g).unwrap();
        let mut expected = corners();
        expected.sort();
        assert_eq!(v.profile().unwrap(), expected);
    }

    #[test]
    fn profile_of_singleton_and_duplicates() {
        let p = Point::<Q>::from_ints(&[3, 4]);
        assert_eq!(VPolytope::new(vec![p.clone()]).unwrap().profile().unwrap(), vec![p.clone()]);
        assert_eq!(VPolytope::new(vec![p.clone(), p.clone()]).unwrap().profile().unwrap(), vec![p]);
    }

    #[test]
    fn profile_of_triangle_with_interior_points() {
        let tri: Vec<Point<Q>> = [[0, 0], [8, 0], [0, 8]].iter().map(|c| Point::from_ints(c)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut gens = tri.clone();
        while gens.len() < 10 {
            let x = rng.random_range(0..64i64);
            let y = rng.random_range(0..64i64);
            if x + y <= 64 {
                gens.push(Point::xy(Q::ratio(x, 8), Q::ratio(y, 8)));
            }
        }
        // Brute-force oracle: each point against the hull of all the others.
        let mut expected: Vec<Point<Q>> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<Point<Q>> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            if hull_weights(&others, g).is_none() {
                expected.push(g.clone());
            }
        }
        expected.sort();
        let mut tri_sorted = tri.clone();
        tri_sorted.sort();
        assert_eq!(expected, tri_sorted);
        assert_eq!(VPolytope::new(gens).unwrap().profile().unwrap(), tri_sorted);
    }

    #[test]
    fn hull_contains_examples() {
        let v = VPolytope::new(corners()).unwrap();
        assert!(v.hull_contains(&half()).unwrap());
        assert!(!v.hull_contains(&Point::from_ints(&[2, 0])).unwrap());
        let seg = VPolytope::new(vec![Point::<Q>::from_ints(&[0, 0]), Point::from_ints(&[1, 1])]).unwrap();
        assert!(seg.hull_contains(&Point::xy(Q::ratio(1, 3), Q::ratio(1, 3))).unwrap());
        assert!(matches!(seg.hull_contains(&Point::from_ints(&[1])), Err(GeomError::DimensionMismatch { .. })));
    }

    #[test]
    fn weights_reproduce_point() {
        let v = VPolytope::new(corners()).unwrap();
        let x = Point::xy(Q::ratio(1, 3), Q::ratio(3, 4));
        let w = v.hull_weights(&x).unwrap().unwrap();
        let sum: Q = w.iter().cloned().sum();
        assert_eq!(sum, Q::int(1));
        for j in 0..2 {
            let c: Q = w.iter().zip(v.generators()).map(|(l, g)| l.clone() * g[j].clone()).sum();
            assert_eq!(c, x[j]);
        }
    }

    #[test]
    fn empty_generators_rejected() {
        assert!(VPolytope::<Q>::new(vec![]).is_err());
    }
}
