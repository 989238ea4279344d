use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::Vector;
use crate::regions2d::Region2;
use crate::scalar::Scalar;
use crate::schema::Geometry;

use super::generate::{self, PolyMode};
use super::{checks, CheckConfig, TheoremId, TheoremReport};

/// A generated instance: the geometry plus the direction the face lemma
/// needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<T> {
    pub geometry: Geometry<T>,
    pub direction: Option<Vector<T>>,
}

impl<T> From<Geometry<T>> for Instance<T> {
    fn from(geometry: Geometry<T>) -> Self {
        Self { geometry, direction: None }
    }
}

pub fn check_instance<T: Scalar>(id: TheoremId, inst: &Instance<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let g = &inst.geometry;
    match id {
        TheoremId::FlatPairs => checks::check_flat_theorem(g, cfg),
        TheoremId::HyperbolicPairs => checks::check_hyperbolic_theorem(g, cfg),
        TheoremId::ConvexityByPairs => checks::check_convexity_corollary(g, cfg),
        TheoremId::KernelVisibility => checks::check_kernel_characterization(g, cfg),
        TheoremId::BoundaryHull => checks::check_boundary_hull(g, cfg),
        TheoremId::ExtremeExistence => checks::check_extreme_existence(g),
        TheoremId::FaceExtremes => {
            let w = match &inst.direction {
                Some(w) => w.clone(),
                None => Vector::unit(g.dim(), 0),
            };
            checks::check_face_lemma(g, &w)
        }
        TheoremId::KreinMilman => checks::check_krein_milman(g, cfg),
    }
}

fn theorem_rng(id: TheoremId, seed: u64) -> ChaCha8Rng {
    let index = TheoremId::ALL.iter().position(|&t| t == id).expect("listed") as u64;
    ChaCha8Rng::seed_from_u64(seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn region<T>(p: crate::regions2d::SimplePolygon<T>) -> Geometry<T> {
    Geometry::Region(Region2::Polygon { outer: p, holes: Vec::new() })
}

fn one_instance<T: Scalar>(id: TheoremId, i: usize, rng: &mut ChaCha8Rng) -> Instance<T> {
    let poly = |rng: &mut ChaCha8Rng, mode| Geometry::HPolyhedron(generate::hpolyhedron(rng, mode));
    match id {
        TheoremId::FlatPairs => match i % 5 {
            0 => {
                let n = rng.random_range(2..=3);
                let h = crate::polyhedra::Halfspace::new(generate::direction(rng, n), generate::grid(rng, -64, 64))
                    .expect("non-zero");
                Geometry::HPolyhedron(crate::polyhedra::HPolyhedron::new(n, vec![h]).expect("dims agree")).into()
            }
            1 => {
                let n = rng.random_range(2..=3);
                let w: Vector<T> = generate::direction(rng, n);
                let lo: T = generate::grid(rng, -64, 0);
                let hi: T = lo.clone() + generate::grid::<T, _>(rng, 1, 64);
                let hs = vec![
                    crate::polyhedra::Halfspace::new(w.clone(), hi).expect("non-zero"),
                    crate::polyhedra::Halfspace::new(-&w, -lo).expect("non-zero"),
                ];
                Geometry::HPolyhedron(crate::polyhedra::HPolyhedron::new(n, hs).expect("dims agree")).into()
            }
            2 => poly(rng, PolyMode::Random).into(),
            3 => region(generate::convex_polygon(rng)).into(),
            _ => poly(rng, PolyMode::Degenerate).into(),
        },
        TheoremId::HyperbolicPairs => match i % 3 {
            0 => Geometry::Region(generate::disk(rng)).into(),
            1 => region(generate::convex_polygon(rng)).into(),
            _ => region(generate::mixed_polygon(rng)).into(),
        },
        TheoremId::ConvexityByPairs | TheoremId::KernelVisibility => region(generate::mixed_polygon(rng)).into(),
        TheoremId::BoundaryHull | TheoremId::KreinMilman => match i % 4 {
            0 => poly(rng, PolyMode::Random).into(),
            1 => poly(rng, PolyMode::Bounded).into(),
            2 => poly(rng, PolyMode::Degenerate).into(),
            _ => Geometry::Epigraph(generate::epigraph(rng)).into(),
        },
        TheoremId::ExtremeExistence => match i % 3 {
            0 => poly(rng, PolyMode::Random).into(),
            1 => poly(rng, PolyMode::Bounded).into(),
            _ => poly(rng, PolyMode::Degenerate).into(),
        },
        TheoremId::FaceExtremes => {
            let p = generate::bounded_polytope(rng);
            let w = generate::direction(rng, p.dim());
            Instance { geometry: Geometry::HPolyhedron(p), direction: Some(w) }
        }
    }
}

/// `count` seeded instances for one theorem.
pub fn generate_instances<T: Scalar>(id: TheoremId, count: usize, seed: u64) -> Vec<Instance<T>> {
    let mut rng = theorem_rng(id, seed);
    (0..count).map(|i| one_instance(id, i, &mut rng)).collect()
}

/// Generates and checks `count` instances per theorem. Reports are grouped
/// by theorem in the given order and sorted by instance digest within each
/// group.
pub fn run_suite<T: Scalar>(ids: &[TheoremId], count: usize, cfg: &CheckConfig) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::with_capacity(ids.len() * count);
    for &id in ids {
        let instances = generate_instances::<T>(id, count, cfg.seed);
        let mut reports = instances
            .par_iter()
            .map(|inst| check_instance(id, inst, cfg))
            .collect::<Result<Vec<_>>>()?;
        reports.sort_by(|a, b| a.instance.digest.cmp(&b.instance.digest));
        out.extend(reports);
    }
    Ok(out)
}
