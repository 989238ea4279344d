//! Small dense exact linear algebra.

use crate::error::{GeomError, Result};
use crate::geometry::Vector;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
    cols: usize,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(GeomError::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows, cols })
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when `rows` is empty.
    pub fn with_cols(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(GeomError::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows, cols })
    }

    pub fn from_vectors(rows: &[Vector<T>], cols: usize) -> Result<Self> {
        Self::with_cols(rows.iter().map(|v| v.coords().to_vec()).collect(), cols)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::int(v)).collect()).collect())
            .expect("rectangular input")
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        Self { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self { rows, cols: self.rows.len() }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.rows.clone();
        Rref::reduce(&mut work, self.cols).pivots.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector<T>> {
        if self.cols == 0 {
            return Vec::new();
        }
        let mut work = self.rows.clone();
        let rref = Rref::reduce(&mut work, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !rref.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &pc) in rref.pivots.iter().enumerate() {
                    v[pc] = -work[row][f].clone();
                }
                Vector::new(v)
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        self.rows.iter().map(|r| crate::geometry::dot(r, v)).collect()
    }
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution<T> {
    Unique(Vector<T>),
    Underdetermined { particular: Vector<T>, nullspace_dim: usize },
    Inconsistent,
}

struct Rref {
    pivots: Vec<usize>,
}

impl Rref {
    /// Reduced row echelon form in place over the first `cols` columns.
    /// Rows may carry extra trailing columns (an augmented rhs) which are
    /// transformed but never chosen as pivots.
    fn reduce<T: Scalar>(rows: &mut [Vec<T>], cols: usize) -> Rref {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = T::one() / rows[r][c].clone();
            for v in rows[r].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for j in 0..rows[i].len() {
                        let delta = f.clone() * rows[r][j].clone();
                        rows[i][j] = rows[i][j].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { pivots }
    }
}

/// Solves `M x = rhs` exactly.
pub fn solve_linear<T: Scalar>(m: &Matrix<T>, rhs: &Vector<T>) -> Result<LinearSolution<T>> {
    if rhs.dim() != m.nrows() {
        return Err(GeomError::DimensionMismatch { expected: m.nrows(), found: rhs.dim() });
    }
    let n = m.ncols();
    let mut aug: Vec<Vec<T>> = m
        .rows
        .iter()
        .zip(rhs.coords())
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let rref = Rref::reduce(&mut aug, n);
    let rank = rref.pivots.len();
    if aug[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut x = vec![T::zero(); n];
    for (row, &pc) in rref.pivots.iter().enumerate() {
        x[pc] = aug[row][n].clone();
    }
    let x = Vector::new(x);
    if rank == n {
        Ok(LinearSolution::Unique(x))
    } else {
        Ok(LinearSolution::Underdetermined { particular: x, nullspace_dim: n - rank })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;
    type M = Matrix<Q>;

    #[test]
    fn rank_examples() {
        assert_eq!(M::identity(3).rank(), 3);
        assert_eq!(M::from_int_rows(&[&[1, 2, 3], &[1, 2, 3]]).rank(), 1);
        assert_eq!(M::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]).rank(), 2);
        assert_eq!(M::from_int_rows(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![Q::int(1)], vec![Q::int(1), Q::int(2)]];
        assert!(M::from_rows(rows).is_err());
    }

    #[test]
    fn solve_examples() {
        let one_by_one = M::from_int_rows(&[&[1]]);
        assert_eq!(
            solve_linear(&one_by_one, &Vector::from_ints(&[2])).unwrap(),
            LinearSolution::Unique(Vector::from_ints(&[2]))
        );
        let zero = M::from_int_rows(&[&[0]]);
        assert_eq!(solve_linear(&zero, &Vector::from_ints(&[1])).unwrap(), LinearSolution::Inconsistent);
        let line = M::from_int_rows(&[&[1, 1]]);
        match solve_linear(&line, &Vector::from_ints(&[1])).unwrap() {
            LinearSolution::Underdetermined { particular, nullspace_dim } => {
                assert_eq!(nullspace_dim, 1);
                assert_eq!(line.mul_vec(particular.coords()), vec![Q::int(1)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn solve_rejects_bad_rhs() {
        let m = M::identity(2);
        assert!(solve_linear(&m, &Vector::from_ints(&[1, 2, 3])).is_err());
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let m = M::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(v.coords()).iter().all(|x| x == &Q::int(0)));
        }
    }

    fn small_matrix() -> impl Strategy<Value = M> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r)
                .prop_map(|rows| M::from_rows(rows.into_iter().map(|r| r.into_iter().map(Q::int).collect()).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_bounded_and_transpose_invariant(m in small_matrix()) {
            let r = m.rank();
            prop_assert!(r <= m.nrows().min(m.ncols()));
            prop_assert_eq!(r, m.transpose().rank());
            prop_assert_eq!(m.nullspace().len(), m.ncols() - r);
        }

        #[test]
        fn unique_solutions_satisfy_system(m in small_matrix(), b in proptest::collection::vec(-5i64..6, 4)) {
            let rhs = Vector::new(b[..m.nrows()].iter().map(|&v| Q::int(v)).collect());
            match solve_linear(&m, &rhs).unwrap() {
                LinearSolution::Unique(x) | LinearSolution::Underdetermined { particular: x, .. } => {
                    prop_assert_eq!(m.mul_vec(x.coords()), rhs.coords().to_vec());
                }
                LinearSolution::Inconsistent => prop_assert!(m.rank() < m.nrows()),
            }
        }
    }
}
