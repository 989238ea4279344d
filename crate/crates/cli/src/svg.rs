use std::fmt::Write;

use convex_profile::polyhedra::Halfspace;
use convex_profile::theorems::{boundary_probes, generate::convex_hull};
use convex_profile::{GeomError, Geometry, HPolyhedron, PairClass, Point, Rational, Region2, Result, Scalar};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

pub struct Overlays {
    pub pairs: Vec<(Point, Point, PairClass)>,
    pub kernel: Option<Vec<Point>>,
    pub extremes: Vec<Point>,
}

struct View {
    lo: (f64, f64),
    scale: f64,
    shift: (f64, f64),
}

impl View {
    fn fit(points: &[(f64, f64)]) -> Self {
        let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
        for &(x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if points.is_empty() {
            (lo, hi) = ((-1.0, -1.0), (1.0, 1.0));
        }
        let (w, h) = ((hi.0 - lo.0).max(1e-9), (hi.1 - lo.1).max(1e-9));
        let span = SIZE - 2.0 * MARGIN;
        let scale = span / w.max(h);
        let shift = (MARGIN + (span - w * scale) / 2.0, MARGIN + (span - h * scale) / 2.0);
        View { lo, scale, shift }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        self.map_f(xy(p))
    }

    fn map_f(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.shift.0 + (x - self.lo.0) * self.scale, SIZE - (self.shift.1 + (y - self.lo.1) * self.scale))
    }
}

fn xy(p: &Point) -> (f64, f64) {
    (p.x().approx(), p.y().approx())
}

fn path(view: &View, ring: &[Point]) -> String {
    let mut d = String::new();
    for (i, p) in ring.iter().enumerate() {
        let (x, y) = view.map(p);
        let _ = write!(d, "{}{x:.6},{y:.6} ", if i == 0 { "M" } else { "L" });
    }
    d.push('Z');
    d
}

fn class_colour(c: PairClass) -> &'static str {
    match c {
        PairClass::Flat => "#2b8a3e",
        PairClass::Hyperbolic => "#1c7ed6",
        PairClass::Elliptic => "#e03131",
        PairClass::Mixed => "#f08c00",
    }
}

/// The part of `p` inside an integer box around its probe points, in hull order.
fn clipped(p: &HPolyhedron) -> Result<Vec<Point>> {
    let full = p.is_full_dimensional()?;
    let mut pts = p.extreme_points()?;
    pts.extend(boundary_probes(p, full)?);
    let pad = if p.is_bounded()? { 1 } else { 2 };
    let coord = |i: usize, f: fn(f64, f64) -> f64, init: f64| pts.iter().map(|q| q.coords()[i].approx()).fold(init, f);
    let lo = [coord(0, f64::min, 0.0).floor() as i64 - pad, coord(1, f64::min, 0.0).floor() as i64 - pad];
    let hi = [coord(0, f64::max, 0.0).ceil() as i64 + pad, coord(1, f64::max, 0.0).ceil() as i64 + pad];
    let mut boxed = p.clone();
    for (normal, offset) in [([-1, 0], -lo[0]), ([0, -1], -lo[1]), ([1, 0], hi[0]), ([0, 1], hi[1])] {
        boxed = boxed.with_halfspace(Halfspace::from_ints(&normal, offset)?)?;
    }
    Ok(convex_hull(&boxed.extreme_points()?))
}

fn epigraph_curve(e: &convex_profile::Epigraph1D) -> Vec<Point> {
    (-32..=32).map(|k| e.graph_point(&Rational::ratio(k, 16))).collect()
}

/// A deterministic SVG drawing of a planar instance with its overlays.
pub fn render(g: &Geometry, ov: &Overlays) -> Result<String> {
    if g.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: g.dim() });
    }
    let mut extent: Vec<Point> = Vec::new();
    let mut shape = String::new();
    let mut body: Option<Vec<Point>> = None;
    match g {
        Geometry::Region(r) => {
            let (lo, hi) = r.bounds();
            extent.extend([lo.clone(), hi.clone()]);
            if let Region2::DiskComplement { radius, .. } = r {
                let pad = convex_profile::Vector::xy(radius.clone(), radius.clone());
                extent.extend([lo.offset(&pad, &Rational::int(-1)), &hi + &pad]);
            }
        }
        Geometry::HPolyhedron(p) => {
            let ring = clipped(p)?;
            extent.extend(ring.iter().cloned());
            body = Some(ring);
        }
        Geometry::VPolytope(v) => {
            let ring = convex_hull(v.generators());
            extent.extend(ring.iter().cloned());
            body = Some(ring);
        }
        Geometry::Epigraph(e) => extent.extend(epigraph_curve(e)),
    }
    for (p, q, _) in &ov.pairs {
        extent.extend([p.clone(), q.clone()]);
    }
    extent.extend(ov.extremes.iter().cloned());
    let view = View::fit(&extent.iter().map(xy).collect::<Vec<_>>());

    let style = r##"fill="#dee2e6" stroke="#212529" stroke-width="2""##;
    match g {
        Geometry::Region(Region2::Polygon { outer, holes }) => {
            let mut d = path(&view, outer.vertices());
            for h in holes {
                d.push(' ');
                d.push_str(&path(&view, h.vertices()));
            }
            let _ = writeln!(shape, r#"<path d="{d}" fill-rule="evenodd" {style}/>"#);
        }
        Geometry::Region(Region2::Disk { center, radius }) => {
            let (cx, cy) = view.map(center);
            let r = radius.approx() * view.scale;
            let _ = writeln!(shape, r#"<circle cx="{cx:.6}" cy="{cy:.6}" r="{r:.6}" {style}/>"#);
        }
        Geometry::Region(Region2::DiskComplement { center, radius }) => {
            let (cx, cy) = view.map(center);
            let r = radius.approx() * view.scale;
            let _ = writeln!(
                shape,
                r##"<rect x="0" y="0" width="{SIZE:.6}" height="{SIZE:.6}" fill="#dee2e6"/>
<circle cx="{cx:.6}" cy="{cy:.6}" r="{r:.6}" fill="#ffffff" stroke="#212529" stroke-width="2" stroke-dasharray="6 4"/>"##
            );
        }
        Geometry::Region(Region2::PointedOpenBox) => {
            let corners: Vec<Point> = [(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(x, y)| Point::from_ints(&[x, y])).collect();
            let d = path(&view, &corners);
            let _ = writeln!(shape, r#"<path d="{d}" {style} stroke-dasharray="6 4"/>"#);
            let (x, y) = view.map(&corners[0]);
            let _ = writeln!(shape, r##"<circle cx="{x:.6}" cy="{y:.6}" r="4.000000" fill="#212529"/>"##);
        }
        Geometry::Epigraph(e) => {
            let curve = epigraph_curve(e);
            let mut d = String::new();
            for (i, p) in curve.iter().enumerate() {
                let (x, y) = view.map(p);
                let _ = write!(d, "{}{x:.6},{y:.6} ", if i == 0 { "M" } else { "L" });
            }
            let _ = writeln!(shape, r#"<path d="{}" {style}/>"#, d.trim_end());
        }
        _ => {
            let ring = body.unwrap_or_default();
            if ring.len() >= 3 {
                let _ = writeln!(shape, r#"<path d="{}" {style}/>"#, path(&view, &ring));
            } else if let [a, b] = ring.as_slice() {
                let ((x1, y1), (x2, y2)) = (view.map(a), view.map(b));
                let _ = writeln!(shape, r##"<line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}" stroke="#212529" stroke-width="2"/>"##);
            }
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = write!(out, "<g id=\"shape\">\n{shape}</g>\n");
    if let Some(k) = &ov.kernel {
        let ring = convex_hull(k);
        if ring.len() >= 3 {
            let _ = writeln!(out, r##"<g id="kernel"><path d="{}" fill="#ffd43b" fill-opacity="0.6" stroke="none"/></g>"##, path(&view, &ring));
        }
    }
    out.push_str("<g id=\"pairs\">\n");
    for (p, q, c) in &ov.pairs {
        let ((x1, y1), (x2, y2)) = (view.map(p), view.map(q));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}" stroke="{}" stroke-width="1.5" data-class="{c:?}"/>"#,
            class_colour(*c)
        );
    }
    out.push_str("</g>\n<g id=\"extremes\">\n");
    for p in &ov.extremes {
        let (x, y) = view.map(p);
        let _ = writeln!(out, r##"<circle cx="{x:.6}" cy="{y:.6}" r="5.000000" fill="#862e9c"/>"##);
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
