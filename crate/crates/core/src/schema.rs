use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::GeomError;
use crate::geometry::{Point, Vector};
use crate::polyhedra::{HPolyhedron, Halfspace, VPolytope};
use crate::regions2d::{Region2, SimplePolygon};
use crate::scalar::Scalar;
use crate::theorems::Epigraph1D;

/// Any geometry the JSON files can describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Geometry<T> {
    HPolyhedron(HPolyhedron<T>),
    VPolytope(VPolytope<T>),
    Region(Region2<T>),
    Epigraph(Epigraph1D<T>),
}

/// A schema violation at a JSON path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub field: String,
    pub message: String,
}

impl SchemaError {
    /// An empty `field` defaults to the last key named in `path`.
    pub fn new(path: &str, field: &str, message: impl Into<String>) -> Self {
        let field = match field {
            "" => path.rsplit('.').next().unwrap_or("").split('[').next().unwrap_or("").trim_start_matches('$'),
            f => f,
        };
        Self { path: path.to_string(), field: field.to_string(), message: message.into() }
    }

    fn geom(path: &str, field: &str, err: GeomError) -> Self {
        Self::new(path, field, err.to_string())
    }
}

impl<T> From<HPolyhedron<T>> for Geometry<T> {
    fn from(p: HPolyhedron<T>) -> Self {
        Geometry::HPolyhedron(p)
    }
}

impl<T> From<VPolytope<T>> for Geometry<T> {
    fn from(v: VPolytope<T>) -> Self {
        Geometry::VPolytope(v)
    }
}

impl<T> From<Region2<T>> for Geometry<T> {
    fn from(r: Region2<T>) -> Self {
        Geometry::Region(r)
    }
}

impl<T> From<SimplePolygon<T>> for Geometry<T> {
    fn from(p: SimplePolygon<T>) -> Self {
        Geometry::Region(Region2::Polygon { outer: p, holes: Vec::new() })
    }
}

impl<T> From<Epigraph1D<T>> for Geometry<T> {
    fn from(e: Epigraph1D<T>) -> Self {
        Geometry::Epigraph(e)
    }
}

type Parsed<T> = std::result::Result<T, SchemaError>;

impl<T: Scalar> Geometry<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Geometry::HPolyhedron(_) => "h-polyhedron",
            Geometry::VPolytope(_) => "v-polytope",
            Geometry::Region(Region2::Polygon { .. }) => "polygon",
            Geometry::Region(Region2::Disk { .. }) => "disk",
            Geometry::Region(Region2::DiskComplement { .. }) => "disk-complement",
            Geometry::Region(Region2::PointedOpenBox) => "pointed-open-box",
            Geometry::Epigraph(_) => "epigraph",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Geometry::HPolyhedron(h) => h.dim(),
            Geometry::VPolytope(v) => v.dim(),
            Geometry::Region(_) | Geometry::Epigraph(_) => 2,
        }
    }

    pub fn parse(text: &str) -> Parsed<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| SchemaError::new("$", "", format!("invalid JSON: {e}")))?;
        Self::from_json(&value)
    }

    pub fn from_json(v: &Value) -> Parsed<Self> {
        let obj = object(v, "$")?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| SchemaError::new("$", "kind", "missing string field"))?;
        match kind {
            "h-polyhedron" => {
                let dim = dimension(obj)?;
                let list = array(field(obj, "$", "halfspaces")?, "$.halfspaces")?;
                let mut hs = Vec::with_capacity(list.len());
                for (i, h) in list.iter().enumerate() {
                    let path = format!("$.halfspaces[{i}]");
                    let ho = object(h, &path)?;
                    let normal = vector(field(ho, &path, "normal")?, &format!("{path}.normal"), dim)?;
                    let offset = rational(field(ho, &path, "offset")?, &format!("{path}.offset"))?;
                    hs.push(Halfspace::new(normal, offset).map_err(|e| SchemaError::geom(&path, "normal", e))?);
                }
                HPolyhedron::new(dim, hs)
                    .map(Geometry::HPolyhedron)
                    .map_err(|e| SchemaError::geom("$", "halfspaces", e))
            }
            "v-polytope" => {
                let dim = dimension(obj)?;
                let pts = points(field(obj, "$", "points")?, "$.points", dim)?;
                VPolytope::new(pts).map(Geometry::VPolytope).map_err(|e| SchemaError::geom("$", "points", e))
            }
            "polygon" => {
                let outer = polygon(field(obj, "$", "outer")?, "$.outer")?;
                let holes = match obj.get("holes") {
                    None | Some(Value::Null) => Vec::new(),
                    Some(h) => array(h, "$.holes")?
                        .iter()
                        .enumerate()
                        .map(|(i, h)| polygon(h, &format!("$.holes[{i}]")))
                        .collect::<Parsed<_>>()?,
                };
                Region2::polygon_with_holes(outer, holes)
                    .map(Geometry::Region)
                    .map_err(|e| SchemaError::geom("$", "holes", e))
            }
            "disk" | "disk-complement" => {
                let center = point(field(obj, "$", "center")?, "$.center", 2)?;
                let radius = rational(field(obj, "$", "radius")?, "$.radius")?;
                let r = if kind == "disk" { Region2::disk(center, radius) } else { Region2::disk_complement(center, radius) };
                r.map(Geometry::Region).map_err(|e| SchemaError::geom("$", "radius", e))
            }
            "pointed-open-box" => Ok(Geometry::Region(Region2::PointedOpenBox)),
            "epigraph" => {
                let list = array(field(obj, "$", "coeffs")?, "$.coeffs")?;
                let coeffs = list
                    .iter()
                    .enumerate()
                    .map(|(i, c)| rational(c, &format!("$.coeffs[{i}]")))
                    .collect::<Parsed<Vec<T>>>()?;
                Epigraph1D::new(coeffs).map(Geometry::Epigraph).map_err(|e| SchemaError::geom("$", "coeffs", e))
            }
            other => Err(SchemaError::new("$", "kind", format!("unknown kind {other:?}"))),
        }
    }

    /// Canonical JSON; object keys come out sorted.
    pub fn to_json(&self) -> Value {
        match self {
            Geometry::HPolyhedron(h) => json!({
                "kind": "h-polyhedron",
                "dim": h.dim(),
                "halfspaces": h.halfspaces().iter().map(|hs| json!({
                    "normal": hs.normal().to_strings(),
                    "offset": hs.offset().to_string(),
                })).collect::<Vec<_>>(),
            }),
            Geometry::VPolytope(v) => json!({
                "kind": "v-polytope",
                "dim": v.dim(),
                "points": v.generators().iter().map(Point::to_strings).collect::<Vec<_>>(),
            }),
            Geometry::Region(Region2::Polygon { outer, holes }) => json!({
                "kind": "polygon",
                "outer": polygon_json(outer),
                "holes": holes.iter().map(polygon_json).collect::<Vec<_>>(),
            }),
            Geometry::Region(Region2::Disk { center, radius } | Region2::DiskComplement { center, radius }) => json!({
                "kind": self.kind(),
                "center": center.to_strings(),
                "radius": radius.to_string(),
            }),
            Geometry::Region(Region2::PointedOpenBox) => json!({ "kind": "pointed-open-box" }),
            Geometry::Epigraph(e) => json!({
                "kind": "epigraph",
                "coeffs": e.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        }
    }
}

fn polygon_json<T: Scalar>(p: &SimplePolygon<T>) -> Value {
    Value::from(p.vertices().iter().map(|v| Value::from(v.to_strings())).collect::<Vec<_>>())
}

fn object<'a>(v: &'a Value, path: &str) -> Parsed<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| SchemaError::new(path, "", "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| SchemaError::new(path, "", "expected an array"))
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, name: &str) -> Parsed<&'a Value> {
    obj.get(name).ok_or_else(|| SchemaError::new(path, name, "missing field"))
}

fn dimension(obj: &Map<String, Value>) -> Parsed<usize> {
    match field(obj, "$", "dim")?.as_u64() {
        Some(d @ 1..=64) => Ok(d as usize),
        _ => Err(SchemaError::new("$", "dim", "expected a positive integer")),
    }
}

/// A rational: a "p/q" or "p" string, or a JSON integer. Floats are rejected.
pub fn rational<T: Scalar>(v: &Value, path: &str) -> Parsed<T> {
    match v {
        Value::String(s) => T::parse_exact(s).ok_or_else(|| SchemaError::new(path, "", format!("not a rational: {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(T::int(n.as_i64().expect("checked"))),
        Value::Number(_) => Err(SchemaError::new(path, "", "numbers must be integers or \"p/q\" strings")),
        _ => Err(SchemaError::new(path, "", "expected a rational")),
    }
}

fn coords<T: Scalar>(v: &Value, path: &str, dim: usize) -> Parsed<Vec<T>> {
    let list = array(v, path)?;
    if list.len() != dim {
        return Err(SchemaError::new(path, "", format!("expected {dim} coordinates, found {}", list.len())));
    }
    list.iter().enumerate().map(|(i, c)| rational(c, &format!("{path}[{i}]"))).collect()
}

pub fn point<T: Scalar>(v: &Value, path: &str, dim: usize) -> Parsed<Point<T>> {
    coords(v, path, dim).map(Point::new)
}

fn vector<T: Scalar>(v: &Value, path: &str, dim: usize) -> Parsed<Vector<T>> {
    coords(v, path, dim).map(Vector::new)
}

fn points<T: Scalar>(v: &Value, path: &str, dim: usize) -> Parsed<Vec<Point<T>>> {
    array(v, path)?.iter().enumerate().map(|(i, p)| point(p, &format!("{path}[{i}]"), dim)).collect()
}

fn polygon<T: Scalar>(v: &Value, path: &str) -> Parsed<SimplePolygon<T>> {
    SimplePolygon::new(points(v, path, 2)?).map_err(|e| SchemaError::geom(path, "", e))
}
