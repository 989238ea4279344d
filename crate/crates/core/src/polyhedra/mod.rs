//! Closed convex sets as halfspace intersections (H-polyhedra) and as
//! hulls of finitely many points (V-polytopes).

mod vertices;
mod vpolytope;

pub use vertices::MAX_ENUM_DIM;
pub use vpolytope::VPolytope;

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::geometry::{Point, Vector};
use crate::linalg::Matrix;
use crate::linprog::{is_feasible, maximize, Constraint, LpOutcome};
use crate::regions2d::PairClass;
use crate::scalar::Scalar;

/// Topological position of a point relative to a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointLocation {
    Interior,
    Boundary,
    Exterior,
}

/// `{x : normal · x <= offset}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace<T> {
    normal: Vector<T>,
    offset: T,
}

impl<T: Scalar> Halfspace<T> {
    pub fn new(normal: Vector<T>, offset: T) -> Result<Self> {
        if normal.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        Ok(Self { normal, offset })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self> {
        Self::new(Vector::from_ints(normal), T::int(offset))
    }

    pub fn normal(&self) -> &Vector<T> {
        &self.normal
    }

    pub fn offset(&self) -> &T {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `offset - normal · x`; non-negative exactly on the halfspace.
    pub fn slack(&self, x: &Point<T>) -> T {
        self.offset.clone() - self.normal.dot_point(x)
    }

    pub fn contains(&self, x: &Point<T>) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &Point<T>) -> bool {
        self.slack(x).is_zero()
    }

    pub fn negated(&self) -> Self {
        Self { normal: -&self.normal, offset: -self.offset.clone() }
    }

    pub fn to_constraint(&self) -> Constraint<T> {
        Constraint::le(self.normal.clone(), self.offset.clone())
    }

    fn homogeneous(&self) -> Constraint<T> {
        Constraint::le(self.normal.clone(), T::zero())
    }
}

/// `{base + t * direction : t >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray<T> {
    pub base: Point<T>,
    pub direction: Vector<T>,
}

impl<T: Scalar> Ray<T> {
    pub fn new(base: Point<T>, direction: Vector<T>) -> Result<Self> {
        if direction.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        direction.check_dim(base.dim())?;
        Ok(Self { base, direction })
    }

    pub fn at(&self, t: &T) -> Point<T> {
        self.base.offset(&self.direction, t)
    }
}

/// An intersection of finitely many closed halfspaces in `E^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolyhedron<T> {
    dim: usize,
    halfspaces: Vec<Halfspace<T>>,
}

/// The exposed face of a polyhedron in a direction, or the report that the
/// direction is unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Face<T> {
    Exposed {
        face: HPolyhedron<T>,
        /// `{x : w · x <= optimum}` supports the polyhedron along `face`.
        support: Halfspace<T>,
    },
    Unbounded,
}

/// The parameter interval `{t : x + t d ∈ P}`; `None` bounds are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineClip<T> {
    pub lower: Option<T>,
    pub upper: Option<T>,
}

impl<T: Scalar> HPolyhedron<T> {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::DimensionMismatch { expected: 1, found: 0 });
        }
        for h in &halfspaces {
            h.normal.check_dim(dim)?;
        }
        Ok(Self { dim, halfspaces })
    }

    pub fn whole_space(dim: usize) -> Self {
        Self { dim, halfspaces: Vec::new() }
    }

    /// Rows `(normal, offset)` meaning `normal · x <= offset`.
    pub fn from_ints(dim: usize, rows: &[(&[i64], i64)]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|(a, b)| Halfspace::from_ints(a, *b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, hs)
    }

    /// `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: T, hi: T) -> Self {
        let mut hs = Vec::with_capacity(2 * dim);
        for j in 0..dim {
            hs.push(Halfspace { normal: Vector::unit(dim, j), offset: hi.clone() });
            hs.push(Halfspace { normal: -&Vector::unit(dim, j), offset: -lo.clone() });
        }
        Self { dim, halfspaces: hs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace<T>] {
        &self.halfspaces
    }

    pub fn with_halfspace(mut self, h: Halfspace<T>) -> Result<Self> {
        h.normal.check_dim(self.dim)?;
        self.halfspaces.push(h);
        Ok(self)
    }

    /// Adds `normal · x = value` as a pair of opposite halfspaces.
    pub fn with_equality(self, normal: Vector<T>, value: T) -> Result<Self> {
        let h = Halfspace::new(normal, value)?;
        let neg = h.negated();
        self.with_halfspace(h)?.with_halfspace(neg)
    }

    pub fn constraints(&self) -> Vec<Constraint<T>> {
        self.halfspaces.iter().map(Halfspace::to_constraint).collect()
    }

    fn cone_constraints(&self) -> Vec<Constraint<T>> {
        self.halfspaces.iter().map(Halfspace::homogeneous).collect()
    }

    pub fn contains(&self, x: &Point<T>) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    pub fn normal_matrix(&self) -> Matrix<T> {
        Matrix::with_cols(
            self.halfspaces.iter().map(|h| h.normal.coords().to_vec()).collect(),
            self.dim,
        )
        .expect("normals share the ambient dimension")
    }

    pub fn feasible_point(&self) -> Result<Option<Point<T>>> {
        is_feasible(self.dim, &self.constraints())
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.feasible_point()?.is_none())
    }

    /// A member point, or [`GeomError::EmptyPolyhedron`].
    pub fn ensure_nonempty(&self) -> Result<Point<T>> {
        self.feasible_point()?.ok_or(GeomError::EmptyPolyhedron)
    }

    /// A point at which every constraint is strictly slack, if one exists.
    pub fn interior_point(&self) -> Result<Option<Point<T>>> {
        self.ensure_nonempty()?;
        let n = self.dim;
        let lift = |v: &Vector<T>, s: T| {
            let mut c = v.coords().to_vec();
            c.push(s);
            Vector::new(c)
        };
        let mut cons: Vec<Constraint<T>> = self
            .halfspaces
            .iter()
            .map(|h| Constraint::le(lift(&h.normal, T::one()), h.offset.clone()))
            .collect();
        cons.push(Constraint::le(Vector::unit(n + 1, n), T::one()));
        match maximize(Vector::unit(n + 1, n), &cons)? {
            LpOutcome::Optimal { value, point } if value.is_positive() => {
                Ok(Some(Point::new(point.coords()[..n].to_vec())))
            }
            _ => Ok(None),
        }
    }

    pub fn is_full_dimensional(&self) -> Result<bool> {
        Ok(self.interior_point()?.is_some())
    }

    fn locate_known(&self, x: &Point<T>, full_dimensional: bool) -> PointLocation {
        if !self.contains(x) {
            PointLocation::Exterior
        } else if !full_dimensional || self.halfspaces.iter().any(|h| h.is_tight(x)) {
            PointLocation::Boundary
        } else {
            PointLocation::Interior
        }
    }

    /// Interior / boundary / exterior in the ambient topology. A member of
    /// a full-dimensional polyhedron is interior exactly when every
    /// constraint is slack; members of lower-dimensional ones are boundary.
    pub fn locate_point(&self, x: &Point<T>) -> Result<PointLocation> {
        x.check_dim(self.dim)?;
        let full = self.is_full_dimensional()?;
        Ok(self.locate_known(x, full))
    }

    /// A batch locator that settles emptiness and dimensionality once.
    pub fn locator(&self) -> Result<Locator<'_, T>> {
        let full = self.is_full_dimensional()?;
        Ok(Locator { poly: self, full })
    }

    pub fn recession_cone(&self) -> Result<Self> {
        self.ensure_nonempty()?;
        Ok(Self {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace { normal: h.normal.clone(), offset: T::zero() })
                .collect(),
        })
    }

    pub fn lineality_basis(&self) -> Result<Vec<Vector<T>>> {
        self.ensure_nonempty()?;
        Ok(self.normal_matrix().nullspace())
    }

    pub fn lineality_dim(&self) -> Result<usize> {
        self.ensure_nonempty()?;
        Ok(self.dim - self.normal_matrix().rank())
    }

    /// Extreme points exist exactly when the set contains no line.
    pub fn has_extreme_point(&self) -> Result<bool> {
        Ok(self.lineality_dim()? == 0)
    }

    /// Whether some affine `(dim-1)`-flat lies inside the set.
    pub fn contains_hyperplane(&self) -> Result<bool> {
        Ok(self.lineality_dim()? + 1 >= self.dim)
    }

    /// A non-zero recession direction, if the set is unbounded.
    pub fn unbounded_direction(&self) -> Result<Option<Vector<T>>> {
        self.ensure_nonempty()?;
        nonzero_cone_vector(self.dim, &self.cone_constraints())
    }

    pub fn is_bounded(&self) -> Result<bool> {
        Ok(self.unbounded_direction()?.is_none())
    }

    /// Drops halfspaces implied by the others, one at a time in order.
    pub fn irredundant(&self) -> Result<Self> {
        self.ensure_nonempty()?;
        let mut kept: Vec<Halfspace<T>> = self.halfspaces.clone();
        let mut i = 0;
        while i < kept.len() {
            let others: Vec<Constraint<T>> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.to_constraint())
                .collect();
            let redundant = match maximize(kept[i].normal.clone(), &others)? {
                LpOutcome::Optimal { value, .. } => value <= kept[i].offset,
                LpOutcome::Unbounded { .. } => false,
                LpOutcome::Infeasible => unreachable!("non-empty polyhedron has feasible relaxations"),
            };
            if redundant {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(Self { dim: self.dim, halfspaces: kept })
    }

    pub fn maximize(&self, w: &Vector<T>) -> Result<LpOutcome<T>> {
        w.check_dim(self.dim)?;
        maximize(w.clone(), &self.constraints())
    }

    /// The face exposed by maximizing `w` over the set.
    pub fn face_in_direction(&self, w: &Vector<T>) -> Result<Face<T>> {
        w.check_dim(self.dim)?;
        if w.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        self.ensure_nonempty()?;
        match self.maximize(w)? {
            LpOutcome::Optimal { value, .. } => {
                let support = Halfspace::new(w.clone(), value.clone())?;
                let face = self.clone().with_equality(w.clone(), value)?;
                Ok(Face::Exposed { face, support })
            }
            LpOutcome::Unbounded { .. } => Ok(Face::Unbounded),
            LpOutcome::Infeasible => Err(GeomError::EmptyPolyhedron),
        }
    }

    /// Whether the boundary contains a ray, decided facet by facet: a facet
    /// `F_i = P ∩ {a_i · x = b_i}` is unbounded iff its recession cone
    /// `{d : A d <= 0, a_i · d = 0}` is non-trivial.
    pub fn boundary_has_ray(&self) -> Result<bool> {
        if !self.is_full_dimensional()? {
            return Err(GeomError::NotFullDimensional);
        }
        let facets = self.irredundant()?;
        let cone = facets.cone_constraints();
        for h in &facets.halfspaces {
            let mut cons = cone.clone();
            cons.push(Constraint::eq(h.normal.clone(), T::zero()));
            if nonzero_cone_vector(self.dim, &cons)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Exact equality of this bounded set with the hull of `v`.
    pub fn hull_equal(&self, v: &VPolytope<T>) -> Result<bool> {
        if v.dim() != self.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        self.ensure_nonempty()?;
        if !self.is_bounded()? {
            return Err(GeomError::Unbounded);
        }
        if !v.generators().iter().all(|g| self.contains(g)) {
            return Ok(false);
        }
        for e in self.extreme_points()? {
            if !v.hull_contains(&e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{t : x + t d ∈ P}` as an interval, or `None` when the line misses P.
    pub fn clip_line(&self, x: &Point<T>, d: &Vector<T>) -> Result<Option<LineClip<T>>> {
        x.check_dim(self.dim)?;
        d.check_dim(self.dim)?;
        let mut lower: Option<T> = None;
        let mut upper: Option<T> = None;
        for h in &self.halfspaces {
            let rate = h.normal.dot(d);
            let slack = h.slack(x);
            if rate.is_zero() {
                if slack.is_negative() {
                    return Ok(None);
                }
                continue;
            }
            let t = slack / rate.clone();
            if rate.is_positive() {
                if upper.as_ref().is_none_or(|u| t < *u) {
                    upper = Some(t);
                }
            } else if lower.as_ref().is_none_or(|l| t > *l) {
                lower = Some(t);
            }
        }
        if let (Some(l), Some(u)) = (&lower, &upper) {
            if l > u {
                return Ok(None);
            }
        }
        Ok(Some(LineClip { lower, upper }))
    }

    /// Whether the closed segment `[a, b]` meets the set.
    pub fn segment_meets(&self, a: &Point<T>, b: &Point<T>) -> Result<bool> {
        let d = b - a;
        Ok(match self.clip_line(a, &d)? {
            None => false,
            Some(LineClip { lower, upper }) => {
                lower.is_none_or(|l| l <= T::one()) && upper.is_none_or(|u| !u.is_negative())
            }
        })
    }

    /// Boundary-pair class of two distinct boundary points of this convex
    /// set. The open segment lies in the set, so it is either inside one
    /// supporting hyperplane (flat) or entirely interior (hyperbolic); the
    /// midpoint decides which.
    pub fn classify_pair(&self, p: &Point<T>, q: &Point<T>) -> Result<PairClass> {
        self.locator()?.classify_pair(p, q)
    }
}

/// Point location against a polyhedron whose dimensionality is known.
#[derive(Debug, Clone, Copy)]
pub struct Locator<'a, T> {
    poly: &'a HPolyhedron<T>,
    full: bool,
}

impl<T: Scalar> Locator<'_, T> {
    pub fn is_full_dimensional(&self) -> bool {
        self.full
    }

    pub fn locate(&self, x: &Point<T>) -> PointLocation {
        self.poly.locate_known(x, self.full)
    }

    pub fn classify_pair(&self, p: &Point<T>, q: &Point<T>) -> Result<PairClass> {
        p.check_dim(self.poly.dim)?;
        q.check_dim(self.poly.dim)?;
        if p == q {
            return Err(GeomError::DegenerateSegment);
        }
        for e in [p, q] {
            if self.locate(e) != PointLocation::Boundary {
                return Err(GeomError::NotOnBoundary(e.to_string()));
            }
        }
        Ok(match self.locate(&p.midpoint(q)) {
            PointLocation::Boundary => PairClass::Flat,
            PointLocation::Interior => PairClass::Hyperbolic,
            PointLocation::Exterior => unreachable!("convex set contains its chords"),
        })
    }
}

/// A non-zero member of the cone `{d : constraints}` (all homogeneous), or
/// `None` when the cone is `{0}`. Probes `±d_j` over the cone cut by the
/// unit box, which is positive for some coordinate exactly when the cone is
/// non-trivial.
pub(crate) fn nonzero_cone_vector<T: Scalar>(dim: usize, constraints: &[Constraint<T>]) -> Result<Option<Vector<T>>> {
    let mut cons = constraints.to_vec();
    for j in 0..dim {
        cons.push(Constraint::le(Vector::unit(dim, j), T::one()));
        cons.push(Constraint::ge(Vector::unit(dim, j), -T::one()));
    }
    for j in 0..dim {
        for w in [Vector::unit(dim, j), -&Vector::unit(dim, j)] {
            if let LpOutcome::Optimal { value, point } = maximize(w, &cons)? {
                if value.is_positive() {
                    return Ok(Some(point.to_vector()));
                }
            }
        }
    }
    Ok(None)
}
