use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use convex_profile::regions2d::ProbeStrategy;
use convex_profile::schema::{self, SchemaError};
use convex_profile::theorems::{self, CheckConfig, TheoremId, TheoremReport};
use convex_profile::{GeomError, Geometry, PairClass, Point, Rational, Region2, VPolytope};

use crate::svg::{self, Overlays};
use crate::{CliError, Outcome};

type Q = Rational;

fn load(file: &Path) -> Result<Geometry, CliError> {
    let name = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Io { file: name.clone(), message: e.to_string() })?;
    Geometry::parse(&text).map_err(|error| CliError::Schema { file: name, error })
}

fn geom(file: &Path) -> impl Fn(GeomError) -> CliError + '_ {
    move |error| CliError::Geometry { file: file.display().to_string(), error }
}

fn points_json(pts: &[Point]) -> Value {
    pts.iter().map(Point::to_strings).collect()
}

fn class_name(c: PairClass) -> Value {
    serde_json::to_value(c).expect("plain enum")
}

fn single(result: Value) -> Outcome {
    Outcome { results: vec![result], counterexample: false }
}

fn from_reports(reports: Vec<TheoremReport>) -> Outcome {
    let counterexample = reports.iter().any(TheoremReport::is_counterexample);
    let results = reports.iter().map(|r| serde_json::to_value(r).expect("reports serialize")).collect();
    Outcome { results, counterexample }
}

/// Pairs from a JSON file: `{"pairs": [[p, q], ...]}` or the bare array.
fn pairs_from_file(path: &Path, dim: usize) -> Result<Vec<(Point, Point)>, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { file: name.clone(), message: e.to_string() })?;
    let schema_err = |path: &str, message: &str| CliError::Schema {
        file: name.clone(),
        error: SchemaError::new(path, "pairs", message),
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| schema_err("$", &format!("invalid JSON: {e}")))?;
    let list = value
        .get("pairs")
        .unwrap_or(&value)
        .as_array()
        .ok_or_else(|| schema_err("$", "expected an array of pairs"))?;
    list.iter()
        .enumerate()
        .map(|(i, pair)| {
            let path = format!("$.pairs[{i}]");
            match pair.as_array().map(Vec::as_slice) {
                Some([p, q]) => {
                    let parse = |v: &Value, j: usize| {
                        schema::point(v, &format!("{path}[{j}]"), dim).map_err(|error| CliError::Schema { file: name.clone(), error })
                    };
                    Ok((parse(p, 0)?, parse(q, 1)?))
                }
                _ => Err(schema_err(&path, "expected a two-point array")),
            }
        })
        .collect()
}

/// Boundary probe points for a pair strategy name.
fn probe_points(g: &Geometry, strategy: &str, cfg: &CheckConfig) -> Result<Vec<Point>, GeomError> {
    match g {
        Geometry::Region(r) => {
            let s = match (r, strategy) {
                (Region2::Disk { .. } | Region2::DiskComplement { .. }, _) => ProbeStrategy::CircleSamples(cfg.probe_density),
                (_, "all") => ProbeStrategy::VerticesAndMidpoints,
                _ => ProbeStrategy::Vertices,
            };
            Ok(r.probe_points(&s))
        }
        Geometry::HPolyhedron(p) => {
            let full = p.is_full_dimensional()?;
            let mut pts = p.extreme_points()?;
            if strategy == "all" || pts.is_empty() {
                for x in theorems::boundary_probes(p, full)? {
                    if !pts.contains(&x) {
                        pts.push(x);
                    }
                }
            }
            Ok(pts)
        }
        _ => Err(GeomError::WrongInstance(g.kind())),
    }
}

fn all_pairs(pts: &[Point]) -> Vec<(Point, Point)> {
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            out.push((pts[i].clone(), pts[j].clone()));
        }
    }
    out
}

fn selected_pairs(g: &Geometry, choice: &str, cfg: &CheckConfig) -> Result<Option<Vec<(Point, Point)>>, CliError> {
    match choice {
        "none" => Ok(None),
        "vertices" | "all" => probe_points(g, choice, cfg).map(|p| Some(all_pairs(&p))).map_err(|error| CliError::Geometry {
            file: String::new(),
            error,
        }),
        path => pairs_from_file(Path::new(path), g.dim()).map(Some),
    }
}

fn classify_all(g: &Geometry, pairs: &[(Point, Point)]) -> Result<Vec<(Point, Point, PairClass)>, GeomError> {
    match g {
        Geometry::Region(r) => pairs.iter().map(|(p, q)| Ok((p.clone(), q.clone(), r.classify_pair(p, q)?))).collect(),
        Geometry::HPolyhedron(h) => {
            let loc = h.locator()?;
            pairs.iter().map(|(p, q)| Ok((p.clone(), q.clone(), loc.classify_pair(p, q)?))).collect()
        }
        _ => Err(GeomError::WrongInstance(g.kind())),
    }
}

fn with_file(file: &Path, e: CliError) -> CliError {
    match e {
        CliError::Geometry { file: f, error } if f.is_empty() => CliError::Geometry { file: file.display().to_string(), error },
        other => other,
    }
}

pub fn classify(file: &Path, choice: &str, cfg: &CheckConfig) -> Result<Outcome, CliError> {
    let g = load(file)?;
    let pairs = selected_pairs(&g, choice, cfg).map_err(|e| with_file(file, e))?.unwrap_or_default();
    let classified = classify_all(&g, &pairs).map_err(geom(file))?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (_, _, c) in &classified {
        *counts.entry(class_name(*c).as_str().unwrap_or("").to_string()).or_default() += 1;
    }
    let list: Vec<Value> = classified
        .iter()
        .map(|(p, q, c)| json!({ "p": p.to_strings(), "q": q.to_strings(), "class": class_name(*c) }))
        .collect();
    Ok(single(json!({ "kind": g.kind(), "pairs": list, "counts": counts })))
}

pub fn convexity(file: &Path, cfg: &CheckConfig) -> Result<Outcome, CliError> {
    let g = load(file)?;
    let result = match &g {
        Geometry::Region(r) => {
            let strategy = match r {
                Region2::Disk { .. } | Region2::DiskComplement { .. } => ProbeStrategy::CircleSamples(cfg.probe_density),
                _ => ProbeStrategy::default_for(r),
            };
            let verdict = r.is_convex_by_pairs(&strategy).map_err(geom(file))?;
            let direct = r.is_convex();
            json!({
                "kind": g.kind(),
                "closed": r.is_closed(),
                "convex_by_pairs": verdict.convex,
                "convex": direct,
                "agrees": verdict.convex == direct,
                "expected_counterexample_of_closedness": !r.is_closed() && verdict.convex != direct,
                "probed_pairs": verdict.probed_pairs,
                "witness": verdict.witness.map(|w| json!({
                    "p": w.p.to_strings(),
                    "q": w.q.to_strings(),
                    "class": class_name(w.class),
                })),
            })
        }
        _ => json!({ "kind": g.kind(), "closed": true, "convex": true }),
    };
    Ok(single(result))
}

pub fn kernel(file: &Path) -> Result<Outcome, CliError> {
    let g = load(file)?;
    let Geometry::Region(Region2::Polygon { outer, holes }) = &g else {
        return Err(CliError::Geometry { file: file.display().to_string(), error: GeomError::WrongInstance(g.kind()) });
    };
    if !holes.is_empty() {
        return Err(CliError::Geometry {
            file: file.display().to_string(),
            error: GeomError::InvalidRegion("kernels are defined for simple polygons without holes".into()),
        });
    }
    let k = outer.kernel();
    let starshaped = !k.is_empty().map_err(geom(file))?;
    let (h, vertices) = if starshaped {
        let h = k.irredundant().map_err(geom(file))?;
        let v = h.extreme_points().map_err(geom(file))?;
        (h, v)
    } else {
        (k, Vec::new())
    };
    Ok(single(json!({
        "kind": g.kind(),
        "starshaped": starshaped,
        "convex": outer.convexity_oracle(),
        "kernel": Geometry::HPolyhedron(h).to_json(),
        "kernel_vertices": points_json(&vertices),
    })))
}

pub fn extremes(file: &Path) -> Result<Outcome, CliError> {
    let g = load(file)?;
    let result = match &g {
        Geometry::HPolyhedron(p) => {
            p.ensure_nonempty().map_err(geom(file))?;
            let e = p.extreme_points().map_err(geom(file))?;
            let bounded = p.is_bounded().map_err(geom(file))?;
            let reconstructs = if bounded {
                p.hull_equal(&VPolytope::new(e.clone()).map_err(geom(file))?).map_err(geom(file))?
            } else {
                false
            };
            json!({
                "kind": g.kind(),
                "extreme_points": points_json(&e),
                "lineality_dim": p.lineality_dim().map_err(geom(file))?,
                "bounded": bounded,
                "reconstructs": reconstructs,
            })
        }
        Geometry::VPolytope(v) => {
            let profile = v.profile().map_err(geom(file))?;
            json!({
                "kind": g.kind(),
                "extreme_points": points_json(&profile),
                "lineality_dim": 0,
                "bounded": true,
                "reconstructs": true,
            })
        }
        _ => return Err(CliError::Geometry { file: file.display().to_string(), error: GeomError::WrongInstance(g.kind()) }),
    };
    Ok(single(result))
}

pub fn reconstruct(file: &Path, cfg: &CheckConfig) -> Result<Outcome, CliError> {
    let g = load(file)?;
    let bounded = match &g {
        Geometry::HPolyhedron(p) => p.is_bounded().map_err(geom(file))?,
        Geometry::Epigraph(_) => false,
        _ => return Err(CliError::Geometry { file: file.display().to_string(), error: GeomError::WrongInstance(g.kind()) }),
    };
    let report = if bounded {
        theorems::check_krein_milman(&g, cfg)
    } else {
        theorems::check_boundary_hull(&g, cfg)
    }
    .map_err(geom(file))?;
    Ok(from_reports(vec![report]))
}

pub fn check(theorem: &str, instances: usize, cfg: &CheckConfig) -> Result<Outcome, CliError> {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(CliError::Usage)?]
    };
    let reports = theorems::run_suite::<Q>(&ids, instances, cfg)
        .map_err(|error| CliError::Geometry { file: String::new(), error })?;
    Ok(from_reports(reports))
}

pub fn render(file: &Path, out: &Path, choice: &str, cfg: &CheckConfig) -> Result<Outcome, CliError> {
    let g = load(file)?;
    if g.dim() != 2 {
        return Err(CliError::Geometry {
            file: file.display().to_string(),
            error: GeomError::DimensionMismatch { expected: 2, found: g.dim() },
        });
    }
    let pairs = match &g {
        Geometry::Region(_) | Geometry::HPolyhedron(_) => {
            let chosen = selected_pairs(&g, choice, cfg).map_err(|e| with_file(file, e))?.unwrap_or_default();
            classify_all(&g, &chosen).map_err(geom(file))?
        }
        _ => Vec::new(),
    };
    let kernel = match &g {
        Geometry::Region(Region2::Polygon { outer, holes }) if holes.is_empty() => {
            let k = outer.kernel();
            if k.is_empty().map_err(geom(file))? {
                None
            } else {
                Some(k.extreme_points().map_err(geom(file))?)
            }
        }
        _ => None,
    };
    let extremes = match &g {
        Geometry::HPolyhedron(p) => p.extreme_points().map_err(geom(file))?,
        Geometry::VPolytope(v) => v.profile().map_err(geom(file))?,
        _ => Vec::new(),
    };
    let overlays = Overlays { pairs, kernel, extremes };
    let doc = svg::render(&g, &overlays).map_err(geom(file))?;
    std::fs::write(out, &doc).map_err(|e| CliError::Io { file: out.display().to_string(), message: e.to_string() })?;
    Ok(single(json!({
        "kind": g.kind(),
        "svg": out.display().to_string(),
        "pairs": overlays.pairs.len(),
        "kernel": overlays.kernel.is_some(),
        "extreme_points": overlays.extremes.len(),
    })))
}
