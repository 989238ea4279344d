use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::geometry::{Point, Vector};
use crate::linalg::{solve_linear, LinearSolution, Matrix};
use crate::linprog::{maximize, Constraint, LpOutcome};
use crate::polyhedra::{Face, HPolyhedron, LineClip, Locator, PointLocation, VPolytope};
use crate::regions2d::{PairClass, ProbeStrategy, Region2};
use crate::scalar::Scalar;
use crate::schema::Geometry;

use super::epigraph::Epigraph1D;
use super::{chord_tolerance, CheckConfig, Conclusion, Hypothesis, InstanceInfo, TheoremId, TheoremReport, Witness};

fn rng_for(cfg: &CheckConfig, info: &InstanceInfo) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ info.seed_mix())
}

fn dedup<T: Scalar>(pts: Vec<Point<T>>) -> Vec<Point<T>> {
    let mut seen = HashSet::new();
    pts.into_iter().filter(|p| seen.insert(p.clone())).collect()
}

/// Class counts over all probe pairs, keeping the first pair of each class.
struct PairScan<T> {
    counts: BTreeMap<PairClass, usize>,
    first: BTreeMap<PairClass, (Point<T>, Point<T>)>,
}

impl<T: Scalar> PairScan<T> {
    fn run(pts: &[Point<T>], mut classify: impl FnMut(&Point<T>, &Point<T>) -> Result<PairClass>) -> Result<Self> {
        let mut scan = Self { counts: BTreeMap::new(), first: BTreeMap::new() };
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let c = classify(&pts[i], &pts[j])?;
                *scan.counts.entry(c).or_default() += 1;
                scan.first.entry(c).or_insert_with(|| (pts[i].clone(), pts[j].clone()));
            }
        }
        Ok(scan)
    }

    fn only(&self, class: PairClass) -> bool {
        self.counts.keys().all(|&c| c == class)
    }

    fn has(&self, class: PairClass) -> bool {
        self.counts.contains_key(&class)
    }

    fn first_other(&self, class: PairClass) -> Option<Witness> {
        self.first.iter().find(|(&c, _)| c != class).map(|(c, (p, q))| {
            Witness::new("pair", &[p, q]).with_detail(serde_json::to_value(c).expect("plain enum").as_str().unwrap_or("").to_string())
        })
    }

    fn tally(&self) -> Witness {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(c, n)| format!("{}={n}", serde_json::to_value(c).expect("plain enum").as_str().unwrap_or("")))
            .collect();
        Witness::note("pair-classes", parts.join(" "))
    }
}

fn violated(report: &mut TheoremReport, witness: Option<Witness>) {
    report.hypothesis = Hypothesis::Violated;
    report.conclusion = Conclusion::NotApplicable;
    report.witnesses.extend(witness);
}

fn closed_region<T: Scalar>(g: &Geometry<T>) -> Result<&Region2<T>> {
    match g {
        Geometry::Region(r) if r.is_closed() => Ok(r),
        Geometry::Region(_) => Err(GeomError::NotClosed("open or partly open region")),
        _ => Err(GeomError::WrongInstance(g.kind())),
    }
}

fn probe_strategy<T: Scalar>(r: &Region2<T>, cfg: &CheckConfig) -> ProbeStrategy<T> {
    match r {
        Region2::Disk { .. } | Region2::DiskComplement { .. } => ProbeStrategy::CircleSamples(cfg.probe_density),
        _ => ProbeStrategy::default_for(r),
    }
}

/// Coordinate and diagonal directions.
fn axis_directions<T: Scalar>(n: usize) -> Vec<Vector<T>> {
    let mut out: Vec<Vector<T>> = (0..n).map(|i| Vector::unit(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(&Vector::unit(n, i) + &Vector::unit(n, j));
            out.push(&Vector::unit(n, i) - &Vector::unit(n, j));
        }
    }
    out
}

/// Endpoints of the chords through `c` along each direction.
fn chord_endpoints<T: Scalar>(p: &HPolyhedron<T>, c: &Point<T>, dirs: &[Vector<T>]) -> Result<Vec<Point<T>>> {
    let mut out = Vec::new();
    for d in dirs {
        if let Some(LineClip { lower, upper }) = p.clip_line(c, d)? {
            out.extend([lower, upper].into_iter().flatten().map(|t| c.offset(d, &t)));
        }
    }
    Ok(out)
}

/// A point of facet `i` at which every other constraint is slack.
fn facet_point<T: Scalar>(p: &HPolyhedron<T>, i: usize) -> Result<Option<Point<T>>> {
    let n = p.dim();
    let lift = |v: &Vector<T>, s: T| {
        let mut c = v.coords().to_vec();
        c.push(s);
        Vector::new(c)
    };
    let mut cons: Vec<Constraint<T>> = p
        .halfspaces()
        .iter()
        .enumerate()
        .map(|(j, h)| {
            if j == i {
                Constraint::eq(lift(h.normal(), T::zero()), h.offset().clone())
            } else {
                Constraint::le(lift(h.normal(), T::one()), h.offset().clone())
            }
        })
        .collect();
    cons.push(Constraint::le(Vector::unit(n + 1, n), T::one()));
    Ok(match maximize(Vector::unit(n + 1, n), &cons)? {
        LpOutcome::Optimal { value, point } if value.is_positive() => Some(Point::new(point.coords()[..n].to_vec())),
        _ => None,
    })
}

/// Boundary probes of a polyhedron: chord ends from a relative-interior
/// point plus one relative-interior point per facet.
pub fn boundary_probes<T: Scalar>(p: &HPolyhedron<T>, full: bool) -> Result<Vec<Point<T>>> {
    let n = p.dim();
    let dirs = axis_directions(n);
    if !full {
        let c = p.ensure_nonempty()?;
        return Ok(dedup(chord_endpoints(p, &c, &dirs)?));
    }
    let c = p.interior_point()?.ok_or(GeomError::NotFullDimensional)?;
    let mut probes = chord_endpoints(p, &c, &dirs)?;
    let facets = p.irredundant()?;
    for i in 0..facets.halfspaces().len() {
        probes.extend(facet_point(&facets, i)?);
    }
    Ok(dedup(probes))
}

/// Whether the probes span at most an `(n-1)`-flat that, extended past the
/// probes, stays in the boundary.
fn boundary_is_affine<T: Scalar>(probes: &[Point<T>], loc: &Locator<'_, T>, n: usize) -> Result<bool> {
    let Some(p0) = probes.first() else { return Ok(true) };
    let diffs: Vec<Vector<T>> = probes[1..].iter().map(|q| q - p0).collect();
    if Matrix::from_vectors(&diffs, n)?.rank() + 1 > n {
        return Ok(false);
    }
    Ok(diffs.iter().all(|d| {
        [T::int(2), -T::one()].iter().all(|t| loc.locate(&p0.offset(d, t)) == PointLocation::Boundary)
    }))
}

/// Exterior probes one unit outside each boundary probe along a tight
/// normal; the complement is convex on probes when no segment between two
/// of them meets the set.
fn complement_convex_on_probes<T: Scalar>(p: &HPolyhedron<T>, probes: &[Point<T>]) -> Result<bool> {
    let outside: Vec<Point<T>> = probes
        .iter()
        .filter_map(|x| p.halfspaces().iter().find(|h| h.is_tight(x)).map(|h| x + h.normal()))
        .collect();
    for i in 0..outside.len() {
        for j in i + 1..outside.len() {
            if p.segment_meets(&outside[i], &outside[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All-flat pairs force an unbounded set with affine boundary and convex
/// complement (when the interior is non-empty).
pub fn check_flat_theorem<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let info = InstanceInfo::of(g, None);
    let mut report = TheoremReport::new(TheoremId::FlatPairs, info);
    match g {
        Geometry::HPolyhedron(p) => {
            p.ensure_nonempty()?;
            let loc = p.locator()?;
            let full = loc.is_full_dimensional();
            let probes = boundary_probes(p, full)?;
            let scan = PairScan::run(&probes, |a, b| loc.classify_pair(a, b))?;
            report.witnesses.push(scan.tally());
            if !scan.only(PairClass::Flat) {
                violated(&mut report, scan.first_other(PairClass::Flat));
                return Ok(report);
            }
            report.fact("convex", true);
            report.fact("boundary-convex", true);
            if !full {
                report.fact("interior-empty", true);
                return Ok(report);
            }
            let ray = p.unbounded_direction()?;
            let affine = boundary_is_affine(&probes, &loc, p.dim())?;
            let complement = complement_convex_on_probes(p, &probes)?;
            report.fact("unbounded", ray.is_some());
            report.fact("boundary-affine", affine);
            report.fact("complement-convex", complement);
            if let Some(d) = &ray {
                report.witnesses.push(Witness::vectors("recession-direction", &[d]));
            }
            if ray.is_none() || !affine || !complement {
                report.conclusion = Conclusion::Fails;
            }
        }
        Geometry::Region(_) => {
            let r = closed_region(g)?;
            let probes = r.probe_points(&probe_strategy(r, cfg));
            let scan = PairScan::run(&probes, |a, b| r.classify_pair(a, b))?;
            report.witnesses.push(scan.tally());
            if !scan.only(PairClass::Flat) {
                violated(&mut report, scan.first_other(PairClass::Flat));
                return Ok(report);
            }
            report.fact("unbounded", !r.is_bounded());
            if r.is_bounded() {
                report.conclusion = Conclusion::Fails;
            }
        }
        _ => return Err(GeomError::WrongInstance(g.kind())),
    }
    Ok(report)
}

/// All-hyperbolic pairs force strict convexity.
pub fn check_hyperbolic_theorem<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let r = closed_region(g)?;
    let mut report = TheoremReport::new(TheoremId::HyperbolicPairs, InstanceInfo::of(g, None));
    let probes = r.probe_points(&probe_strategy(r, cfg));
    let scan = PairScan::run(&probes, |a, b| r.classify_pair(a, b))?;
    report.witnesses.push(scan.tally());
    if !scan.only(PairClass::Hyperbolic) {
        violated(&mut report, scan.first_other(PairClass::Hyperbolic));
        return Ok(report);
    }
    let convex = r.is_convex();
    let strict = convex && !scan.has(PairClass::Flat);
    report.fact("convex", convex);
    report.fact("strictly-convex", strict);
    if !strict {
        report.conclusion = Conclusion::Fails;
    }
    Ok(report)
}

/// Convex iff every probed pair is flat or hyperbolic, on closed regions.
/// The hypothesis is closedness; the pointed open box is the expected
/// counterexample when closedness is dropped.
pub fn check_convexity_corollary<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let Geometry::Region(r) = g else { return Err(GeomError::WrongInstance(g.kind())) };
    let mut report = TheoremReport::new(TheoremId::ConvexityByPairs, InstanceInfo::of(g, None));
    let verdict = r.is_convex_by_pairs(&probe_strategy(r, cfg))?;
    let truth = r.is_convex();
    report.fact("pairs-flat-or-hyperbolic", verdict.convex);
    report.fact("convex", truth);
    if let Some(w) = &verdict.witness {
        let class = serde_json::to_value(w.class).expect("plain enum");
        report.witnesses.push(Witness::new("pair", &[&w.p, &w.q]).with_detail(class.as_str().unwrap_or("")));
    }
    if r.is_closed() {
        if verdict.convex != truth {
            report.conclusion = Conclusion::Fails;
        }
        return Ok(report);
    }
    report.hypothesis = Hypothesis::Violated;
    report.conclusion = Conclusion::NotApplicable;
    if let Region2::PointedOpenBox = r {
        let probes = r.probe_points(&ProbeStrategy::Vertices);
        for i in 0..probes.len() {
            for j in i + 1..probes.len() {
                let class = serde_json::to_value(r.classify_pair(&probes[i], &probes[j])?).expect("plain enum");
                report.witnesses.push(Witness::new("corner-pair", &[&probes[i], &probes[j]]).with_detail(class.as_str().unwrap_or("")));
            }
        }
        if verdict.convex && !truth {
            report.conclusion = Conclusion::ExpectedCounterexampleOfClosedness;
        }
    }
    Ok(report)
}

/// Sample parameter `lo + (hi - lo) k / 128`.
fn grid_between<T: Scalar>(rng: &mut ChaCha8Rng, lo: &T, hi: &T) -> T {
    lo.clone() + (hi.clone() - lo.clone()) * T::ratio(rng.random_range(0..=128), 128)
}

/// Kernel membership by halfplanes agrees with visibility of the boundary.
pub fn check_kernel_characterization<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let poly = match g {
        Geometry::Region(Region2::Polygon { outer, holes }) if holes.is_empty() => outer,
        _ => return Err(GeomError::WrongInstance(g.kind())),
    };
    let info = InstanceInfo::of(g, None);
    let mut rng = rng_for(cfg, &info);
    let mut report = TheoremReport::new(TheoremId::KernelVisibility, info);
    let region = Region2::polygon(poly.clone());
    let kernel = poly.kernel();
    let starshaped = !kernel.is_empty()?;
    report.fact("starshaped", starshaped);

    let mut members = Vec::with_capacity(cfg.samples);
    if starshaped {
        let k = kernel.interior_point()?.map_or_else(|| kernel.ensure_nonempty(), Ok)?;
        members.push(k);
    }
    let (lo, hi) = poly.bounds();
    let mut attempts = 0;
    while members.len() < cfg.samples && attempts < 40 * cfg.samples.max(1) {
        attempts += 1;
        let x = Point::xy(grid_between(&mut rng, lo.x(), hi.x()), grid_between(&mut rng, lo.y(), hi.y()));
        if region.locate(&x)?.member {
            members.push(x);
        }
    }
    let mut densities = vec![8, cfg.probe_density.max(1)];
    densities.dedup();

    let (mut inside, mut outside) = (0usize, 0usize);
    for x in &members {
        let expected = kernel.contains(x);
        if expected {
            inside += 1;
        } else {
            outside += 1;
        }
        for &m in &densities {
            if poly.kernel_contains_by_visibility(x, m)? != expected {
                report.conclusion = Conclusion::Fails;
                report.witnesses.push(Witness::new("disagreement", &[x]).with_detail(format!(
                    "density {m}: halfplane kernel says {expected}, visibility says {}",
                    !expected
                )));
            }
        }
    }
    report.witnesses.push(Witness::note(
        "samples",
        format!("inside={inside} outside={outside} densities={densities:?}"),
    ));
    Ok(report)
}

fn hpolyhedron<T: Scalar>(g: &Geometry<T>) -> Result<&HPolyhedron<T>> {
    match g {
        Geometry::HPolyhedron(p) => Ok(p),
        _ => Err(GeomError::WrongInstance(g.kind())),
    }
}

/// Extreme points exist iff the set contains no line.
pub fn check_extreme_existence<T: Scalar>(g: &Geometry<T>) -> Result<TheoremReport> {
    let p = hpolyhedron(g)?;
    p.ensure_nonempty()?;
    let mut report = TheoremReport::new(TheoremId::ExtremeExistence, InstanceInfo::of(g, None));
    let extremes = p.extreme_points()?;
    let lines = p.lineality_basis()?;
    report.fact("has-extreme-point", !extremes.is_empty());
    report.fact("contains-line", !lines.is_empty());
    let mut verified = true;
    if let Some(e) = extremes.first() {
        let ok = p.is_vertex(e)?;
        verified &= ok;
        report.witnesses.push(Witness::new("extreme-point", &[e]).with_detail(if ok {
            "n independent tight constraints"
        } else {
            "tight constraints do not have full rank"
        }));
    }
    if let Some(d) = lines.first() {
        let ok = p.halfspaces().iter().all(|h| h.normal().dot(d).is_zero());
        verified &= ok;
        report.witnesses.push(Witness::vectors("line-direction", &[d]).with_detail(if ok {
            "orthogonal to every normal"
        } else {
            "not orthogonal to every normal"
        }));
    }
    if extremes.is_empty() != !lines.is_empty() || !verified {
        report.conclusion = Conclusion::Fails;
    }
    Ok(report)
}

/// Extreme points of an exposed face are extreme points of the set.
pub fn check_face_lemma<T: Scalar>(g: &Geometry<T>, w: &Vector<T>) -> Result<TheoremReport> {
    let p = hpolyhedron(g)?;
    if !p.is_bounded()? {
        return Err(GeomError::Unbounded);
    }
    if !p.is_full_dimensional()? {
        return Err(GeomError::NotFullDimensional);
    }
    let mut report = TheoremReport::new(TheoremId::FaceExtremes, InstanceInfo::of(g, Some(w)));
    let Face::Exposed { face, support } = p.face_in_direction(w)? else {
        return Err(GeomError::Unbounded);
    };
    let face_extremes = face.extreme_points()?;
    let set_extremes = p.extreme_points()?;
    let missing: Vec<&Point<T>> = face_extremes.iter().filter(|e| set_extremes.binary_search(e).is_err()).collect();
    report.witnesses.push(
        Witness::vectors("support-normal", &[support.normal()]).with_detail(format!("offset {}", support.offset())),
    );
    report.witnesses.push(Witness::new("face-extremes", &face_extremes.iter().collect::<Vec<_>>()));
    report.witnesses.push(Witness::new("set-extremes", &set_extremes.iter().collect::<Vec<_>>()));
    report.fact("face-extremes-subset", missing.is_empty());
    if !missing.is_empty() {
        report.conclusion = Conclusion::Fails;
        report.witnesses.push(Witness::new("not-extreme-in-set", &missing));
    }
    Ok(report)
}

/// A direction `d` with `a_i · d > 0` and `a_j · d < 0` for some normals,
/// so every line along `d` meets the set in a bounded chord.
pub(crate) fn chord_direction<T: Scalar>(p: &HPolyhedron<T>) -> Option<Vector<T>> {
    let normals: Vec<&Vector<T>> = p.halfspaces().iter().map(|h| h.normal()).collect();
    for a in &normals {
        if normals.iter().any(|b| b.dot(a).is_negative()) {
            return Some((*a).clone());
        }
    }
    for (i, a) in normals.iter().enumerate() {
        for b in &normals[i + 1..] {
            let gram = Matrix::from_rows(vec![vec![a.dot(a), a.dot(b)], vec![b.dot(a), b.dot(b)]]).ok()?;
            if let Ok(LinearSolution::Unique(coef)) = solve_linear(&gram, &Vector::xy(T::one(), -T::one())) {
                return Some(&a.scale(&coef[0]) + &b.scale(&coef[1]));
            }
        }
    }
    None
}

/// Member points on random chords through a relative-interior point.
fn sample_members<T: Scalar>(p: &HPolyhedron<T>, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Point<T>>> {
    let n = p.dim();
    let c = p.interior_point()?.map_or_else(|| p.ensure_nonempty(), Ok)?;
    let mut out = vec![c.clone()];
    let cap = T::int(8);
    while out.len() < count {
        let d = Vector::new((0..n).map(|_| T::int(rng.random_range(-4..=4))).collect());
        if d.is_zero() {
            continue;
        }
        let Some(LineClip { lower, upper }) = p.clip_line(&c, &d)? else { continue };
        let lo = lower.map_or(-cap.clone(), |l| l.max(-cap.clone()));
        let hi = upper.map_or(cap.clone(), |u| u.min(cap.clone()));
        let t = grid_between(rng, &lo, &hi);
        out.push(c.offset(&d, &t));
    }
    Ok(out)
}

fn epigraph_samples<T: Scalar>(e: &Epigraph1D<T>, count: usize, rng: &mut ChaCha8Rng) -> Vec<Point<T>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = T::ratio(rng.random_range(-48..=48), 16);
        let y = T::ratio(rng.random_range(0..=160), 16);
        if y > e.eval(&x) {
            out.push(Point::xy(x, y));
        }
    }
    out
}

/// Covers every sample by a graph chord; `Err` text names the first failure.
fn cover_by_chords<T: Scalar>(
    e: &Epigraph1D<T>,
    samples: &[Point<T>],
    report: &mut TheoremReport,
) -> Result<bool> {
    let tol = chord_tolerance::<T>();
    let mut ok = true;
    for (i, x) in samples.iter().enumerate() {
        let chord = e.chord_find(x, &tol)?;
        let (a, b) = (e.graph_point(&chord.a), e.graph_point(&chord.b));
        let h = e.chord_value(&chord, x.x());
        let on_graph = e.locate(&a)? == PointLocation::Boundary && e.locate(&b)? == PointLocation::Boundary;
        let good = on_graph && chord.a <= *x.x() && *x.x() <= chord.b && h >= *x.y() && h.clone() - x.y().clone() <= tol;
        if i == 0 || !good {
            let role = if good { "chord" } else { "chord-failure" };
            report.witnesses.push(Witness::new(role, &[x, &a, &b]).with_detail(format!("height excess {}", h - x.y().clone())));
        }
        ok &= good;
    }
    Ok(ok)
}

/// Whether `C(∂A) = A` for a polyhedron that contains a hyperplane.
fn hull_of_boundary_is_set<T: Scalar>(p: &HPolyhedron<T>, full: bool) -> bool {
    if !full {
        return true;
    }
    let hs = p.halfspaces();
    hs.iter().any(|a| hs.iter().any(|b| a.normal().dot(b.normal()).is_negative()))
}

/// A set without a hyperplane is the hull of its boundary.
pub fn check_boundary_hull<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let info = InstanceInfo::of(g, None);
    let mut rng = rng_for(cfg, &info);
    let mut report = TheoremReport::new(TheoremId::BoundaryHull, info);
    match g {
        Geometry::HPolyhedron(p) => {
            p.ensure_nonempty()?;
            let loc = p.locator()?;
            let hyper = p.contains_hyperplane()?;
            report.fact("contains-hyperplane", hyper);
            if hyper {
                let equal = hull_of_boundary_is_set(p, loc.is_full_dimensional());
                report.fact("hull-of-boundary-equals-set", equal);
                violated(&mut report, Some(Witness::vectors("line-direction", &p.lineality_basis()?.iter().collect::<Vec<_>>())));
                return Ok(report);
            }
            let Some(d) = chord_direction(p) else {
                report.conclusion = Conclusion::Fails;
                report.witnesses.push(Witness::note("chord-direction", "no bounded chord direction"));
                return Ok(report);
            };
            let (mut on_boundary, mut chords) = (0usize, 0usize);
            for x in sample_members(p, cfg.samples.max(1), &mut rng)? {
                if loc.locate(&x) == PointLocation::Boundary {
                    on_boundary += 1;
                    continue;
                }
                let ends = match p.clip_line(&x, &d)? {
                    Some(LineClip { lower: Some(l), upper: Some(u) }) if !l.is_positive() && !u.is_negative() => {
                        Some((x.offset(&d, &l), x.offset(&d, &u)))
                    }
                    _ => None,
                };
                match ends {
                    Some((e1, e2)) if loc.locate(&e1) == PointLocation::Boundary && loc.locate(&e2) == PointLocation::Boundary => {
                        if chords == 0 {
                            report.witnesses.push(Witness::new("chord", &[&x, &e1, &e2]));
                        }
                        chords += 1;
                    }
                    _ => {
                        report.conclusion = Conclusion::Fails;
                        report.witnesses.push(Witness::new("uncovered", &[&x]));
                    }
                }
            }
            report.witnesses.push(Witness::note("samples", format!("chords={chords} on-boundary={on_boundary}")));
        }
        Geometry::Epigraph(e) => {
            report.fact("contains-hyperplane", false);
            let samples = epigraph_samples(e, cfg.samples.max(1), &mut rng);
            if !cover_by_chords(e, &samples, &mut report)? {
                report.conclusion = Conclusion::Fails;
            }
        }
        _ => return Err(GeomError::WrongInstance(g.kind())),
    }
    Ok(report)
}

/// A set with neither a hyperplane nor a boundary ray is the hull of its
/// extreme points.
pub fn check_krein_milman<T: Scalar>(g: &Geometry<T>, cfg: &CheckConfig) -> Result<TheoremReport> {
    let info = InstanceInfo::of(g, None);
    let mut rng = rng_for(cfg, &info);
    let mut report = TheoremReport::new(TheoremId::KreinMilman, info);
    match g {
        Geometry::HPolyhedron(p) => {
            let base = p.ensure_nonempty()?;
            let full = p.is_full_dimensional()?;
            let hyper = p.contains_hyperplane()?;
            let bounded = p.is_bounded()?;
            let ray = if full { p.boundary_has_ray()? } else { !bounded };
            let extremes = p.extreme_points()?;
            report.fact("contains-hyperplane", hyper);
            report.fact("boundary-has-ray", ray);
            report.witnesses.push(Witness::new("profile", &extremes.iter().collect::<Vec<_>>()));
            let satisfied = !hyper && !ray;
            if bounded {
                let v = VPolytope::new(extremes.clone())?;
                let equal = p.hull_equal(&v)?;
                let minimal = extremes
                    .iter()
                    .enumerate()
                    .all(|(i, e)| {
                        let rest: Vec<Point<T>> =
                            extremes.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
                        rest.is_empty() || !VPolytope::new(rest).and_then(|r| r.hull_contains(e)).unwrap_or(false)
                    });
                report.fact("hull-of-extremes-equals-set", equal);
                report.fact("profile-minimal", minimal);
                if satisfied && !(equal && minimal) {
                    report.conclusion = Conclusion::Fails;
                }
            } else {
                // a bounded hull cannot contain an unbounded set
                report.fact("hull-of-extremes-equals-set", false);
                let d = p.unbounded_direction()?.expect("unbounded");
                let start = extremes.first().cloned().unwrap_or(base);
                let mut t = T::one();
                let outside = loop {
                    let x = start.offset(&d, &t);
                    if extremes.is_empty() || !VPolytope::new(extremes.clone())?.hull_contains(&x)? {
                        break x;
                    }
                    t = t * T::int(2);
                };
                report.witnesses.push(Witness::new("member-outside-hull", &[&outside]));
                if satisfied {
                    report.conclusion = Conclusion::Fails;
                }
            }
            if !satisfied {
                report.hypothesis = Hypothesis::Violated;
                report.conclusion = Conclusion::NotApplicable;
            }
        }
        Geometry::Epigraph(e) => {
            report.fact("contains-hyperplane", false);
            report.fact("boundary-has-ray", false);
            let grid: Vec<Point<T>> = (-8..=8).map(|k| e.graph_point(&T::ratio(k, 4))).collect();
            let scan = PairScan::run(&grid, |a, b| {
                let m = a.midpoint(b);
                Ok(match e.locate(&m)? {
                    PointLocation::Interior => PairClass::Hyperbolic,
                    PointLocation::Boundary => PairClass::Flat,
                    PointLocation::Exterior => PairClass::Elliptic,
                })
            })?;
            report.witnesses.push(scan.tally());
            let graph_extreme = scan.only(PairClass::Hyperbolic);
            report.fact("graph-points-extreme", graph_extreme);
            let samples = epigraph_samples(e, cfg.samples.max(1), &mut rng);
            let covered = cover_by_chords(e, &samples, &mut report)?;
            if !graph_extreme || !covered {
                report.conclusion = Conclusion::Fails;
            }
        }
        _ => return Err(GeomError::WrongInstance(g.kind())),
    }
    Ok(report)
}
