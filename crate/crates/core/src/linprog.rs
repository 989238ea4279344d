//! Exact rational linear programming.
//!
//! A dense two-phase tableau simplex with Bland's rule. Variables are free
//! (unrestricted in sign); internally each is split into a non-negative
//! positive and negative part, and equality rows are split into two
//! inequalities so that only one row shape reaches the tableau.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Point, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint<T> {
    pub coeffs: Vector<T>,
    pub relation: Relation,
    pub rhs: T,
}

impl<T: Scalar> Constraint<T> {
    pub fn le(coeffs: Vector<T>, rhs: T) -> Self {
        Self { coeffs, relation: Relation::Le, rhs }
    }

    pub fn ge(coeffs: Vector<T>, rhs: T) -> Self {
        Self { coeffs, relation: Relation::Ge, rhs }
    }

    pub fn eq(coeffs: Vector<T>, rhs: T) -> Self {
        Self { coeffs, relation: Relation::Eq, rhs }
    }

    pub fn is_satisfied_by(&self, x: &Point<T>) -> bool {
        let lhs = self.coeffs.dot_point(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }

    /// Whether moving along `dir` never violates this constraint.
    pub fn is_recession_direction(&self, dir: &Vector<T>) -> bool {
        let lhs = self.coeffs.dot(dir);
        match self.relation {
            Relation::Le => !lhs.is_positive(),
            Relation::Eq => lhs.is_zero(),
            Relation::Ge => !lhs.is_negative(),
        }
    }
}

/// Maximize `objective · x` subject to `constraints`, `x` free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram<T> {
    pub objective: Vector<T>,
    pub constraints: Vec<Constraint<T>>,
}

impl<T: Scalar> LinearProgram<T> {
    pub fn maximize(objective: Vector<T>) -> Self {
        Self { objective, constraints: Vec::new() }
    }

    pub fn subject_to(mut self, c: Constraint<T>) -> Self {
        self.constraints.push(c);
        self
    }

    pub fn dim(&self) -> usize {
        self.objective.dim()
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for c in &self.constraints {
            c.coeffs.check_dim(n)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Optimal { value: T, point: Point<T> },
    /// `point` is feasible and `point + t * ray` stays feasible for all
    /// `t >= 0` while the objective grows without bound.
    Unbounded { point: Point<T>, ray: Vector<T> },
    Infeasible,
}

impl<T: Scalar> LpOutcome<T> {
    pub fn optimal_value(&self) -> Option<&T> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }
}

pub fn solve_lp<T: Scalar>(lp: &LinearProgram<T>) -> Result<LpOutcome<T>> {
    lp.validate()?;
    Ok(Simplex::build(lp).solve(lp))
}

/// Phase-one feasibility: a witness point, or `None` when infeasible.
pub fn is_feasible<T: Scalar>(dim: usize, constraints: &[Constraint<T>]) -> Result<Option<Point<T>>> {
    let lp = LinearProgram { objective: Vector::zeros(dim), constraints: constraints.to_vec() };
    match solve_lp(&lp)? {
        LpOutcome::Optimal { point, .. } => Ok(Some(point)),
        LpOutcome::Unbounded { point, .. } => Ok(Some(point)),
        LpOutcome::Infeasible => Ok(None),
    }
}

enum Stop {
    Optimal,
    Unbounded(usize),
}

struct Simplex<T> {
    /// Each row holds `ncols` coefficients followed by the rhs.
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    ncols: usize,
    n: usize,
    artificial_from: usize,
}

impl<T: Scalar> Simplex<T> {
    fn build(lp: &LinearProgram<T>) -> Self {
        let n = lp.dim();
        let mut le_rows: Vec<(Vec<T>, T)> = Vec::new();
        for c in &lp.constraints {
            let a = c.coeffs.coords().to_vec();
            let neg: Vec<T> = a.iter().map(|v| -v.clone()).collect();
            match c.relation {
                Relation::Le => le_rows.push((a, c.rhs.clone())),
                Relation::Ge => le_rows.push((neg, -c.rhs.clone())),
                Relation::Eq => {
                    le_rows.push((a, c.rhs.clone()));
                    le_rows.push((neg, -c.rhs.clone()));
                }
            }
        }
        let m = le_rows.len();
        let needs_art: Vec<bool> = le_rows.iter().map(|(_, b)| b.is_negative()).collect();
        let n_art = needs_art.iter().filter(|&&x| x).count();
        let artificial_from = 2 * n + m;
        let ncols = artificial_from + n_art;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = artificial_from;
        for (i, (a, b)) in le_rows.into_iter().enumerate() {
            let mut row = vec![T::zero(); ncols + 1];
            let flip = needs_art[i];
            let s = if flip { -T::one() } else { T::one() };
            for (j, v) in a.iter().enumerate() {
                row[j] = s.clone() * v.clone();
                row[n + j] = -(s.clone() * v.clone());
            }
            row[2 * n + i] = s.clone();
            row[ncols] = s * b;
            if flip {
                row[next_art] = T::one();
                basis.push(next_art);
                next_art += 1;
            } else {
                basis.push(2 * n + i);
            }
            rows.push(row);
        }
        Simplex { rows, basis, ncols, n, artificial_from }
    }

    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = T::one() / self.rows[r][e].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        self.basis[r] = e;
    }

    fn reduced_cost(&self, cost: &[T], j: usize) -> T {
        let mut r = cost[j].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                r = r - cost[b].clone() * self.rows[i][j].clone();
            }
        }
        r
    }

    /// Bland's rule: lowest-index improving column enters; ratio ties leave
    /// by lowest basic variable index.
    fn run(&mut self, cost: &[T], allowed: usize) -> Stop {
        loop {
            let entering = (0..allowed)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(e) = entering else {
                return Stop::Optimal;
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, e),
                None => return Stop::Unbounded(e),
            }
        }
    }

    fn column_values(&self) -> Vec<T> {
        let mut vals = vec![T::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            vals[b] = self.rhs(i).clone();
        }
        vals
    }

    fn to_point(&self, vals: &[T]) -> Point<T> {
        Point::new((0..self.n).map(|j| vals[j].clone() - vals[self.n + j].clone()).collect())
    }

    fn solve(mut self, lp: &LinearProgram<T>) -> LpOutcome<T> {
        if self.ncols > self.artificial_from {
            let mut cost = vec![T::zero(); self.ncols];
            for c in cost.iter_mut().skip(self.artificial_from) {
                *c = -T::one();
            }
            self.run(&cost, self.ncols);
            let infeasibility = self
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| b >= self.artificial_from)
                .fold(T::zero(), |acc, (i, _)| acc + self.rhs(i).clone());
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis; rows with no
            // structural entry are redundant and dropped.
            let mut r = 0;
            while r < self.rows.len() {
                if self.basis[r] >= self.artificial_from {
                    match (0..self.artificial_from).find(|&j| !self.rows[r][j].is_zero()) {
                        Some(j) => {
                            self.pivot(r, j);
                            r += 1;
                        }
                        None => {
                            self.rows.remove(r);
                            self.basis.remove(r);
                        }
                    }
                } else {
                    r += 1;
                }
            }
        }

        let n = self.n;
        let mut cost = vec![T::zero(); self.ncols];
        for (j, c) in lp.objective.coords().iter().enumerate() {
            cost[j] = c.clone();
            cost[n + j] = -c.clone();
        }
        match self.run(&cost, self.artificial_from) {
            Stop::Optimal => {
                let point = self.to_point(&self.column_values());
                let value = lp.objective.dot_point(&point);
                LpOutcome::Optimal { value, point }
            }
            Stop::Unbounded(e) => {
                let point = self.to_point(&self.column_values());
                let mut dir = vec![T::zero(); self.ncols];
                dir[e] = T::one();
                for (i, &b) in self.basis.iter().enumerate() {
                    dir[b] = -self.rows[i][e].clone();
                }
                let ray = Vector::new((0..n).map(|j| dir[j].clone() - dir[n + j].clone()).collect());
                LpOutcome::Unbounded { point, ray }
            }
        }
    }
}

/// Maximizes `objective · x` and returns the outcome; a convenience wrapper
/// used throughout the polyhedral code.
pub(crate) fn maximize<T: Scalar>(objective: Vector<T>, constraints: &[Constraint<T>]) -> Result<LpOutcome<T>> {
    if objective.is_zero() && constraints.is_empty() {
        return Ok(LpOutcome::Optimal { value: T::zero(), point: Point::origin(objective.dim()) });
    }
    let lp = LinearProgram { objective, constraints: constraints.to_vec() };
    solve_lp(&lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use crate::error::GeomError;
    use num_traits::Signed;
    use proptest::prelude::*;

    type Q = BigRational;

    fn v(xs: &[i64]) -> Vector<Q> {
        Vector::from_ints(xs)
    }

    #[test]
    fn bounded_maximum() {
        let lp = LinearProgram::maximize(v(&[1])).subject_to(Constraint::le(v(&[1]), Q::int(3)));
        assert_eq!(
            solve_lp(&lp).unwrap(),
            LpOutcome::Optimal { value: Q::int(3), point: Point::from_ints(&[3]) }
        );
    }

    #[test]
    fn unbounded_ray() {
        let lp = LinearProgram::maximize(v(&[1])).subject_to(Constraint::ge(v(&[1]), Q::int(0)));
        match solve_lp(&lp).unwrap() {
            LpOutcome::Unbounded { ray, .. } => assert_eq!(ray, v(&[1])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_interval() {
        let lp = LinearProgram::maximize(v(&[1]))
            .subject_to(Constraint::le(v(&[1]), Q::int(0)))
            .subject_to(Constraint::ge(v(&[1]), Q::int(1)));
        assert_eq!(solve_lp(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn feasibility_examples() {
        let unit = [Constraint::ge(v(&[1]), Q::int(0)), Constraint::le(v(&[1]), Q::int(1))];
        let w = is_feasible(1, &unit).unwrap().unwrap();
        assert!(w[0] >= Q::int(0) && w[0] <= Q::int(1));
        let empty = [Constraint::le(v(&[1]), Q::int(0)), Constraint::ge(v(&[1]), Q::int(1))];
        assert_eq!(is_feasible(1, &empty).unwrap(), None);
        assert_eq!(is_feasible::<Q>(2, &[]).unwrap(), Some(Point::origin(2)));
    }

    #[test]
    fn equality_constraints_and_negative_rhs() {
        // max x + y s.t. x + y = -2, x >= -5, y >= -5
        let lp = LinearProgram::maximize(v(&[1, 1]))
            .subject_to(Constraint::eq(v(&[1, 1]), Q::int(-2)))
            .subject_to(Constraint::ge(v(&[1, 0]), Q::int(-5)))
            .subject_to(Constraint::ge(v(&[0, 1]), Q::int(-5)));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.optimal_value(), Some(&Q::int(-2)));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let lp = LinearProgram::maximize(v(&[1, 0])).subject_to(Constraint::le(v(&[1]), Q::int(1)));
        assert!(matches!(solve_lp(&lp), Err(GeomError::DimensionMismatch { .. })));
    }

    #[test]
    fn degenerate_program_terminates() {
        // A classic cycling-prone structure; Bland's rule must terminate.
        let lp = LinearProgram::maximize(Vector::new(vec![Q::ratio(3, 4), Q::int(-150), Q::ratio(1, 50), Q::int(-6)]))
            .subject_to(Constraint::le(Vector::new(vec![Q::ratio(1, 4), Q::int(-60), Q::ratio(-1, 25), Q::int(9)]), Q::int(0)))
            .subject_to(Constraint::le(Vector::new(vec![Q::ratio(1, 2), Q::int(-90), Q::ratio(-1, 50), Q::int(3)]), Q::int(0)))
            .subject_to(Constraint::le(v(&[0, 0, 1, 0]), Q::int(1)))
            .subject_to(Constraint::ge(v(&[1, 0, 0, 0]), Q::int(0)))
            .subject_to(Constraint::ge(v(&[0, 1, 0, 0]), Q::int(0)))
            .subject_to(Constraint::ge(v(&[0, 0, 1, 0]), Q::int(0)))
            .subject_to(Constraint::ge(v(&[0, 0, 0, 1]), Q::int(0)));
        assert_eq!(solve_lp(&lp).unwrap().optimal_value(), Some(&Q::ratio(1, 20)));
    }

    fn random_lp() -> impl Strategy<Value = LinearProgram<Q>> {
        (1usize..4, 1usize..7).prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(-4i64..5, n),
                proptest::collection::vec((proptest::collection::vec(-4i64..5, n), -6i64..7, 0u8..3), m),
            )
                .prop_map(move |(c, rows)| {
                    let mut lp = LinearProgram::maximize(Vector::from_ints(&c));
                    for (a, b, rel) in rows {
                        let rel = [Relation::Le, Relation::Ge, Relation::Eq][rel as usize % 3];
                        lp.constraints.push(Constraint { coeffs: Vector::from_ints(&a), relation: rel, rhs: Q::int(b) });
                    }
                    lp
                })
        })
    }

    /// Dual of `max c·x, A x <= b (x free)`: `min b·y, Aᵀ y = c, y >= 0`,
    /// solved as `max -b·y`.
    fn dual_of(lp: &LinearProgram<Q>) -> LinearProgram<Q> {
        let mut rows: Vec<(Vec<Q>, Q)> = Vec::new();
        for c in &lp.constraints {
            let a = c.coeffs.coords().to_vec();
            let neg: Vec<Q> = a.iter().map(|x| -x.clone()).collect();
            match c.relation {
                Relation::Le => rows.push((a, c.rhs.clone())),
                Relation::Ge => rows.push((neg, -c.rhs.clone())),
                Relation::Eq => {
                    rows.push((a, c.rhs.clone()));
                    rows.push((neg, -c.rhs.clone()));
                }
            }
        }
        let m = rows.len();
        let n = lp.dim();
        let mut dual = LinearProgram::maximize(Vector::new(rows.iter().map(|(_, b)| -b.clone()).collect()));
        for j in 0..n {
            let col = Vector::new(rows.iter().map(|(a, _)| a[j].clone()).collect());
            dual.constraints.push(Constraint::eq(col, lp.objective[j].clone()));
        }
        for i in 0..m {
            dual.constraints.push(Constraint::ge(Vector::unit(m, i), Q::int(0)));
        }
        dual
    }

    proptest! {
        #[test]
        fn outcomes_are_certified(lp in random_lp()) {
            match solve_lp(&lp).unwrap() {
                LpOutcome::Optimal { value, point } => {
                    prop_assert!(lp.constraints.iter().all(|c| c.is_satisfied_by(&point)));
                    prop_assert_eq!(value, lp.objective.dot_point(&point));
                }
                LpOutcome::Unbounded { point, ray } => {
                    prop_assert!(lp.objective.dot(&ray).is_positive());
                    for t in [1, 10, 100] {
                        let moved = point.offset(&ray, &Q::int(t));
                        prop_assert!(lp.constraints.iter().all(|c| c.is_satisfied_by(&moved)));
                        prop_assert!(lp.objective.dot_point(&moved) > lp.objective.dot_point(&point));
                    }
                }
                LpOutcome::Infeasible => {}
            }
        }

        #[test]
        fn strong_duality(lp in random_lp()) {
            let primal = solve_lp(&lp).unwrap();
            let dual = solve_lp(&dual_of(&lp)).unwrap();
            match (&primal, &dual) {
                (LpOutcome::Optimal { value: p, .. }, LpOutcome::Optimal { value: d, .. }) => {
                    prop_assert_eq!(p.clone(), -d.clone());
                }
                (LpOutcome::Optimal { .. }, _) | (_, LpOutcome::Optimal { .. }) => {
                    prop_assert!(false, "one side optimal, other {:?} / {:?}", primal, dual);
                }
                (LpOutcome::Unbounded { .. }, d) => prop_assert!(d.is_infeasible()),
                _ => {}
            }
        }

        #[test]
        fn solves_are_deterministic(lp in random_lp()) {
            prop_assert_eq!(solve_lp(&lp).unwrap(), solve_lp(&lp).unwrap());
        }
    }
}
