//! Vertex enumeration by exhaustive basis enumeration.

use std::collections::BTreeSet;

use crate::error::{GeomError, Result};
use crate::geometry::{Point, Vector};
use crate::linalg::{solve_linear, LinearSolution, Matrix};
use crate::scalar::Scalar;

use super::HPolyhedron;

/// Largest ambient dimension accepted by [`HPolyhedron::extreme_points`].
pub const MAX_ENUM_DIM: usize = 4;

/// Largest constraint count accepted by [`HPolyhedron::extreme_points`].
pub const MAX_ENUM_CONSTRAINTS: usize = 64;

/// Calls `f` on every increasing `k`-subset of `0..n`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl<T: Scalar> HPolyhedron<T> {
    /// Every point where `dim` linearly independent constraints are tight and
    /// all constraints hold, in lexicographic order. Empty exactly when the
    /// set contains a line.
    pub fn extreme_points(&self) -> Result<Vec<Point<T>>> {
        let n = self.dim;
        if n > MAX_ENUM_DIM {
            return Err(GeomError::UnsupportedDimension(n));
        }
        if self.halfspaces.len() > MAX_ENUM_CONSTRAINTS {
            return Err(GeomError::UnsupportedDimension(self.halfspaces.len()));
        }
        if self.lineality_dim()? > 0 {
            return Ok(Vec::new());
        }
        let mut found = BTreeSet::new();
        for_each_subset(self.halfspaces.len(), n, |rows| {
            let m = Matrix::with_cols(
                rows.iter().map(|&i| self.halfspaces[i].normal.coords().to_vec()).collect(),
                n,
            )
            .expect("normals share the ambient dimension");
            let rhs = Vector::new(rows.iter().map(|&i| self.halfspaces[i].offset.clone()).collect());
            if let Ok(LinearSolution::Unique(x)) = solve_linear(&m, &rhs) {
                let p = Point::new(x.into_coords());
                if self.contains(&p) {
                    found.insert(p);
                }
            }
        });
        Ok(found.into_iter().collect())
    }

    /// Whether `x` is a vertex certified by `dim` independent tight
    /// constraints.
    pub fn is_vertex(&self, x: &Point<T>) -> Result<bool> {
        x.check_dim(self.dim)?;
        if !self.contains(x) {
            return Ok(false);
        }
        let tight: Vec<Vec<T>> = self
            .halfspaces
            .iter()
            .filter(|h| h.is_tight(x))
            .map(|h| h.normal.coords().to_vec())
            .collect();
        Ok(Matrix::with_cols(tight, self.dim)?.rank() == self.dim)
    }
}
