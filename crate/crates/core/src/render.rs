//! Planar visualization of virtual polytopes as closed polygonal chains,
//! and SVG emission.
//!
//! The chain of a weighted sum of segments (or of a difference `K - L` of
//! convex polygons) is traced by sweeping the direction circle
//! counterclockwise: between two consecutive edge normals the face in that
//! direction is a single point, and crossing a normal jumps by the edge
//! vector of the summand that changes (negated for inverted summands).
//! Sorting happens through exact cross-product comparisons; the chain
//! closes exactly because every summand's two jumps cancel.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{SegmentBasis, VirtualFace};
use crate::point::Point;
use crate::rat::{rat, Rat};

/// An exact planar point or vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Vec2 {
        Vec2::new(rat(x), rat(y))
    }

    pub fn zero() -> Vec2 {
        Vec2::new(Rat::zero(), Rat::zero())
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, c: &Rat) -> Vec2 {
        Vec2::new(&self.x * c, &self.y * c)
    }

    pub fn cross(&self, other: &Vec2) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Clockwise quarter turn.
    pub fn rot_cw(&self) -> Vec2 {
        Vec2::new(self.y.clone(), -&self.x)
    }

    /// Counterclockwise quarter turn.
    pub fn rot_ccw(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }
}

/// Total counterclockwise angular order on nonzero vectors, starting at the
/// positive x-axis; exact, no floats.
fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    fn half(v: &Vec2) -> u8 {
        if v.y.is_negative() || (v.y.is_zero() && v.x.is_negative()) {
            1
        } else {
            0
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// A strictly convex polygon with vertices in counterclockwise order, or a
/// single point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon2 {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon2 {
    pub fn new(vertices: Vec<Vec2>) -> Result<ConvexPolygon2> {
        match vertices.len() {
            0 => Err(Error::DegeneratePolygon("no vertices".into())),
            1 => Ok(ConvexPolygon2 { vertices }),
            2 => Err(Error::DegeneratePolygon(
                "two vertices do not bound a polygon".into(),
            )),
            n => {
                for i in 0..n {
                    let a = &vertices[i];
                    let b = &vertices[(i + 1) % n];
                    let c = &vertices[(i + 2) % n];
                    let turn = b.sub(a).cross(&c.sub(b));
                    if !turn.is_positive() {
                        return Err(Error::DegeneratePolygon(
                            "vertices must be strictly convex in counterclockwise order".into(),
                        ));
                    }
                }
                Ok(ConvexPolygon2 { vertices })
            }
        }
    }

    pub fn point(p: Vec2) -> ConvexPolygon2 {
        ConvexPolygon2 { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Counterclockwise edge vectors; empty for a point.
    pub fn edge_vectors(&self) -> Vec<Vec2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].sub(&self.vertices[i]))
            .collect()
    }

    /// The vertex maximizing `<., xi>`, with ties broken towards the
    /// clockwise side (the position just before the sweep crosses `xi`).
    fn support_before(&self, xi: &Vec2) -> Vec2 {
        let tiebreak = xi.rot_cw();
        self.vertices
            .iter()
            .max_by(|a, b| {
                a.dot(xi)
                    .cmp(&b.dot(xi))
                    .then_with(|| a.dot(&tiebreak).cmp(&b.dot(&tiebreak)))
            })
            .expect("nonempty polygon")
            .clone()
    }
}

/// A closed polygonal chain; possibly non-convex or self-overlapping.
/// Edge vectors sum to zero by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain2 {
    vertices: Vec<Vec2>,
}

impl Chain2 {
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Cyclic edge vectors.
    pub fn edge_vectors(&self) -> Vec<Vec2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].sub(&self.vertices[i]))
            .collect()
    }

    /// Sum of the edge vectors; exactly zero for every produced chain.
    pub fn edge_sum(&self) -> Vec2 {
        self.edge_vectors()
            .iter()
            .fold(Vec2::zero(), |acc, e| acc.add(e))
    }

    /// Number of distinct corner points (a corner may be visited twice).
    pub fn distinct_vertex_count(&self) -> usize {
        let set: std::collections::BTreeSet<&Vec2> = self.vertices.iter().collect();
        set.len()
    }

    fn from_walk(mut vertices: Vec<Vec2>) -> Chain2 {
        // Deterministic start: lexicographically smallest corner first.
        if let Some(min) = vertices.iter().min().cloned() {
            let at = vertices.iter().position(|v| *v == min).expect("present");
            vertices.rotate_left(at);
        }
        Chain2 { vertices }
    }
}

/// Sign of a segment summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Positive,
    Negative,
}

/// One sweep event: crossing `normal` adds `jump` to the tracked corner.
struct Event {
    normal: Vec2,
    jump: Vec2,
}

fn walk_events(mut events: Vec<Event>, start: Vec2) -> Vec<Vec2> {
    events.sort_by(|a, b| angle_cmp(&a.normal, &b.normal));
    let mut corners = Vec::with_capacity(events.len());
    let mut at = start.clone();
    for e in &events {
        at = at.add(&e.jump);
        corners.push(at.clone());
    }
    assert_eq!(at, start, "chain must close exactly");
    corners
}

/// The closed chain of the Minkowski difference `K - L`: corners are the
/// points `K^xi - L^xi` over the sweep, with jumps at the edge normals of
/// either polygon. Requires mutually non-parallel edges.
pub fn minkowski_diff_chain(k: &ConvexPolygon2, l: &ConvexPolygon2) -> Result<Chain2> {
    let k_edges = k.edge_vectors();
    let l_edges = l.edge_vectors();
    for a in &k_edges {
        for b in &l_edges {
            if a.cross(b).is_zero() {
                return Err(Error::ParallelEdges(format!(
                    "edge of K parallel to edge of L (directions ({},{}) and ({},{}))",
                    a.x, a.y, b.x, b.y
                )));
            }
        }
    }
    let mut events = Vec::with_capacity(k_edges.len() + l_edges.len());
    for e in &k_edges {
        events.push(Event {
            normal: e.rot_cw(),
            jump: e.clone(),
        });
    }
    for e in &l_edges {
        events.push(Event {
            normal: e.rot_cw(),
            jump: e.neg(),
        });
    }
    if events.is_empty() {
        return Ok(Chain2::from_walk(vec![k
            .support_before(&Vec2::from_ints(1, 0))
            .sub(&l.support_before(&Vec2::from_ints(1, 0)))]));
    }
    let first_normal = events
        .iter()
        .map(|e| &e.normal)
        .min_by(|a, b| angle_cmp(a, b))
        .expect("events exist")
        .clone();
    let start = k
        .support_before(&first_normal)
        .sub(&l.support_before(&first_normal));
    Ok(Chain2::from_walk(walk_events(events, start)))
}

/// The closed chain of `anchor + sum of weighted segments [0, v]`. Parallel
/// segments of equal weight merge into a longer edge; parallel segments of
/// mixed weight are rejected.
pub fn weighted_segment_chain(segments: &[(Vec2, Weight)], anchor: &Vec2) -> Result<Chain2> {
    let live: Vec<&(Vec2, Weight)> = segments.iter().filter(|(v, _)| !v.is_zero()).collect();
    for (i, (a, wa)) in live.iter().enumerate() {
        for (b, wb) in live.iter().skip(i + 1) {
            if a.cross(b).is_zero() && wa != wb {
                return Err(Error::ParallelEdges(
                    "parallel segments with opposite weights".into(),
                ));
            }
        }
    }

    // Merge jumps sharing a normal direction.
    let mut by_normal: Vec<(Vec2, Vec2)> = Vec::new(); // (normal, total jump)
    let mut push = |normal: Vec2, jump: Vec2| {
        for (n, j) in by_normal.iter_mut() {
            if angle_cmp(n, &normal) == Ordering::Equal {
                *j = j.add(&jump);
                return;
            }
        }
        by_normal.push((normal, jump));
    };
    for (v, w) in &live {
        let sign = match w {
            Weight::Positive => rat(1),
            Weight::Negative => rat(-1),
        };
        push(v.rot_ccw(), v.scale(&-&sign));
        push(v.rot_cw(), v.scale(&sign));
    }
    let events: Vec<Event> = by_normal
        .into_iter()
        .filter(|(_, j)| !j.is_zero())
        .map(|(normal, jump)| Event { normal, jump })
        .collect();
    if events.is_empty() {
        return Ok(Chain2::from_walk(vec![anchor.clone()]));
    }

    let first_normal = events
        .iter()
        .map(|e| &e.normal)
        .min_by(|a, b| angle_cmp(a, b))
        .expect("events exist")
        .clone();
    // Corner just before the first event: include every segment whose value
    // is positive there (with the clockwise-side tiebreak on the boundary).
    let tiebreak = first_normal.rot_cw();
    let mut start = anchor.clone();
    for (v, w) in &live {
        let d = v.dot(&first_normal);
        let on = d.is_positive() || (d.is_zero() && v.dot(&tiebreak).is_positive());
        if on {
            start = match w {
                Weight::Positive => start.add(v),
                Weight::Negative => start.sub(v),
            };
        }
    }
    Ok(Chain2::from_walk(walk_events(events, start)))
}

/// The convex polygon of a plain zonotope `base + sum [0, v]`, traced
/// counterclockwise.
pub fn zonotope_polygon(generators: &[Vec2], base: &Vec2) -> Result<ConvexPolygon2> {
    let segments: Vec<(Vec2, Weight)> = generators
        .iter()
        .map(|v| (v.clone(), Weight::Positive))
        .collect();
    let chain = weighted_segment_chain(&segments, base)?;
    ConvexPolygon2::new(chain.vertices().to_vec())
}

/// An exact 2-chart of a plane in the ambient space: coordinates with
/// respect to the basis `(u, w)`, plus the Gram matrix needed to draw
/// distances faithfully.
#[derive(Debug, Clone)]
pub struct PlanarChart {
    pub u: Point,
    pub w: Point,
}

impl PlanarChart {
    pub fn new(u: Point, w: Point) -> Result<PlanarChart> {
        let chart = PlanarChart { u, w };
        let (g11, g12, g22) = chart.gram();
        if (g11 * g22 - &g12 * &g12).is_zero() {
            return Err(Error::DegeneratePolygon(
                "chart basis is linearly dependent".into(),
            ));
        }
        Ok(chart)
    }

    pub fn gram(&self) -> (Rat, Rat, Rat) {
        (
            self.u.dot(&self.u),
            self.u.dot(&self.w),
            self.w.dot(&self.w),
        )
    }

    /// Coordinates of an in-span vector; errors if `x` leaves the plane.
    pub fn solve(&self, x: &Point) -> Result<Vec2> {
        let (g11, g12, g22) = self.gram();
        let det = &g11 * &g22 - &g12 * &g12;
        let b1 = x.dot(&self.u);
        let b2 = x.dot(&self.w);
        let c1 = (&b1 * &g22 - &b2 * &g12) / det.clone();
        let c2 = (&g11 * &b2 - &g12 * &b1) / det;
        let recon = &self.u.scale(&c1) + &self.w.scale(&c2);
        if recon != *x {
            return Err(Error::DegeneratePolygon(format!(
                "{x} does not lie in the chart plane"
            )));
        }
        Ok(Vec2::new(c1, c2))
    }

    /// Orthogonal projection; the basis must be orthogonal.
    pub fn project(&self, x: &Point) -> Vec2 {
        let (g11, g12, g22) = self.gram();
        assert!(g12.is_zero(), "projection needs an orthogonal basis");
        Vec2::new(x.dot(&self.u) / g11, x.dot(&self.w) / g22)
    }
}

/// The fixed chart of the plane `x1 + x2 + x3 = const` used for drawing
/// three-coordinate scenes.
pub fn chart3() -> PlanarChart {
    PlanarChart::new(Point::from_ints(&[1, -1, 0]), Point::from_ints(&[1, 1, -2]))
        .expect("independent basis")
}

/// A drawable scene: exact chains and labeled points in one chart, plus the
/// chart's Gram matrix for metrically faithful output.
#[derive(Debug, Clone)]
pub struct Scene {
    pub chains: Vec<Chain2>,
    pub points: Vec<(Vec2, String)>,
    pub gram: (Rat, Rat, Rat),
}

impl Scene {
    fn empty() -> Scene {
        Scene {
            chains: Vec::new(),
            points: Vec::new(),
            gram: (rat(1), rat(0), rat(1)),
        }
    }
}

/// The weighted segments of a face, as chart coordinates: whole `q`
/// segments positive, inverted `r` segments negative.
fn face_segments(face: &VirtualFace, chart: &PlanarChart) -> Result<Vec<(Vec2, Weight)>> {
    let n = face.translation.dim();
    let basis = SegmentBasis::new(n);
    let mut segments = Vec::new();
    for &(i, j) in &face.positive_segments {
        segments.push((chart.solve(&basis.q_vector(i, j))?, Weight::Positive));
    }
    for &i in &face.negative_segments {
        segments.push((chart.solve(&basis.r(i))?, Weight::Negative));
    }
    Ok(segments)
}

/// A chart spanned by the face's segment vectors. Edges and vertices get an
/// orthogonal completion so they still draw (on a line, or as a point);
/// faces of dimension three and higher cannot be charted and fail later
/// when their vectors leave the plane.
pub fn face_chart(face: &VirtualFace) -> Result<PlanarChart> {
    let n = face.translation.dim();
    let basis = SegmentBasis::new(n);
    let mut vectors: Vec<Point> = face
        .positive_segments
        .iter()
        .map(|&(i, j)| basis.q_vector(i, j))
        .collect();
    vectors.extend(face.negative_segments.iter().map(|&i| basis.r(i)));
    let u = vectors
        .first()
        .cloned()
        .unwrap_or_else(|| basis.q_vector(1, 2));
    if let Some(chart) = vectors
        .iter()
        .skip(1)
        .find_map(|v| PlanarChart::new(u.clone(), v.clone()).ok())
    {
        return Ok(chart);
    }
    let uu = u.dot(&u);
    for k in 1..=n {
        let e = basis.e(k);
        let w = &e - &u.scale(&(e.dot(&u) / uu.clone()));
        if !w.is_zero() {
            return PlanarChart::new(u, w);
        }
    }
    Err(Error::DegeneratePolygon("no planar chart".into()))
}

/// The base corner of a face: its vertex with every `q` segment at the
/// second endpoint and every inverted segment at the origin. Only offsets
/// from this corner lie in the span of the segment vectors.
pub fn face_base(face: &VirtualFace) -> Point {
    let n = face.translation.dim();
    let basis = SegmentBasis::new(n);
    face.positive_segments
        .iter()
        .fold(face.translation.clone(), |acc, &(_, j)| &acc + &basis.e(j))
}

/// The closed chain of a two-dimensional face in its own chart; chart
/// coordinates are offsets from the face's base corner.
pub fn face_chain(face: &VirtualFace) -> Result<(Chain2, PlanarChart)> {
    let chart = face_chart(face)?;
    let segments = face_segments(face, &chart)?;
    let chain = weighted_segment_chain(&segments, &Vec2::zero())?;
    Ok((chain, chart))
}

/// Scene for a two-dimensional face: its chain plus its labeled vertices.
pub fn face_scene(face: &VirtualFace, vertices: &[Point]) -> Result<Scene> {
    let (chain, chart) = face_chain(face)?;
    let base = face_base(face);
    let mut points = Vec::new();
    for v in vertices {
        points.push((chart.solve(&(v - &base))?, v.to_string()));
    }
    points.sort();
    Ok(Scene {
        chains: vec![chain],
        points,
        gram: chart.gram(),
    })
}

/// Scene of the whole three-coordinate virtual polytope (all `q` segments
/// positive, all `r` segments negative), or of one of its faces, drawn in
/// the plane `x1 + x2 + x3 = 6`.
pub fn project_cp4(face: Option<&VirtualFace>) -> Result<Scene> {
    let chart = chart3();
    match face {
        None => {
            let chain = cp4_chain(&rat(0))?;
            let mut scene = Scene::empty();
            scene.gram = chart.gram();
            // Label the distinct corners with their ambient coordinates.
            let mut seen = BTreeMap::new();
            for (corner, ambient) in chain.1 {
                seen.entry(corner).or_insert(ambient);
            }
            scene.points = seen.into_iter().map(|(c, a)| (c, a.to_string())).collect();
            scene.chains = vec![chain.0];
            Ok(scene)
        }
        Some(face) => {
            let n = face.translation.dim();
            if n != 3 {
                return Err(Error::GroundSetMismatch {
                    expected: 4,
                    got: n + 1,
                });
            }
            let segments = face_segments(face, &chart)?;
            let chain = weighted_segment_chain(&segments, &chart.project(&face_base(face)))?;
            let mut points: Vec<(Vec2, String)> = face
                .label
                .vertex_labels()
                .iter()
                .map(|v| {
                    let p = crate::geometry::vertex_coordinates(&v.reduce().expect("vertex"));
                    (chart.project(&p), p.to_string())
                })
                .collect();
            points.sort();
            Ok(Scene {
                chains: vec![chain],
                points,
                gram: chart.gram(),
            })
        }
    }
}

/// Scene of the three-coordinate polytope with the inverted generators
/// tilted by `epsilon`; a generic tilt separates the doubled corners.
pub fn project_cp4_perturbed(epsilon: &Rat) -> Result<Scene> {
    let chart = chart3();
    let (chain, _) = cp4_chain(epsilon)?;
    Ok(Scene {
        chains: vec![chain],
        points: Vec::new(),
        gram: chart.gram(),
    })
}

/// The chain of `sum q_ij + S - sum r_i` in the fixed chart, with each
/// inverted generator tilted by `epsilon` times its quarter turn, plus the
/// ambient point of each corner for labeling.
fn cp4_chain(epsilon: &Rat) -> Result<(Chain2, Vec<(Vec2, Point)>)> {
    let basis = SegmentBasis::new(3);
    let chart = chart3();
    let mut segments: Vec<(Vec2, Weight)> = Vec::new();
    let mut anchor_ambient = basis.s();
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            segments.push((chart.project(&basis.q_vector(i, j)), Weight::Positive));
            anchor_ambient = &anchor_ambient + &basis.e(j);
        }
    }
    for i in 1..=3 {
        let r = chart.project(&basis.r(i));
        let tilted = r.add(&r.rot_ccw().scale(epsilon));
        segments.push((tilted, Weight::Negative));
    }
    let anchor = chart.project(&anchor_ambient);
    let chain = weighted_segment_chain(&segments, &anchor)?;

    // Recover ambient coordinates of corners from the chart (the plane's
    // third coordinate is fixed by the total sum 6).
    let ambient = |c: &Vec2| -> Point {
        // c = (a, b) with a = <p, u>/2, b = <p, w>/6 on x1+x2+x3 = 6.
        let p1 = rat(2) + &c.x + &c.y;
        let p2 = rat(2) - &c.x + &c.y;
        let p3 = rat(2) - rat(2) * &c.y;
        Point(vec![p1, p2, p3])
    };
    let labeled = chain
        .vertices()
        .iter()
        .map(|v| (v.clone(), ambient(v)))
        .collect();
    Ok((chain, labeled))
}

/// Renders a scene as a standalone SVG document: one closed path per chain,
/// circles and labels for marked points, viewBox padded ten percent.
pub fn render_svg(scene: &Scene) -> String {
    const SCALE: f64 = 60.0;
    let (g11, g12, g22) = &scene.gram;
    let g11 = g11.to_f64().expect("finite");
    let g12 = g12.to_f64().expect("finite");
    let g22 = g22.to_f64().expect("finite");
    let ax = g11.sqrt();
    let shear = g12 / ax;
    let ay = (g22 - shear * shear).sqrt();
    let draw = |v: &Vec2| -> (f64, f64) {
        let x = v.x.to_f64().expect("finite");
        let y = v.y.to_f64().expect("finite");
        (SCALE * (x * ax + y * shear), -SCALE * (y * ay))
    };

    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for chain in &scene.chains {
        for v in chain.vertices() {
            let (x, y) = draw(v);
            xs.push(x);
            ys.push(y);
        }
    }
    for (p, _) in &scene.points {
        let (x, y) = draw(p);
        xs.push(x);
        ys.push(y);
    }
    let view_box = if xs.is_empty() {
        "0 0 1 1".to_string()
    } else {
        let min_x = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min_y = ys.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_y = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let pad_x = 0.1 * (max_x - min_x).max(1.0);
        let pad_y = 0.1 * (max_y - min_y).max(1.0);
        format!(
            "{:.4} {:.4} {:.4} {:.4}",
            min_x - pad_x,
            min_y - pad_y,
            (max_x - min_x) + 2.0 * pad_x,
            (max_y - min_y) + 2.0 * pad_y
        )
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{view_box}\">"
    );
    for chain in &scene.chains {
        if chain.vertices().is_empty() {
            continue;
        }
        let mut d = String::new();
        for (i, v) in chain.vertices().iter().enumerate() {
            let (x, y) = draw(v);
            let _ = write!(d, "{}{:.4} {:.4}", if i == 0 { "M " } else { " L " }, x, y);
        }
        d.push_str(" Z");
        let _ = writeln!(
            svg,
            "  <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"
        );
    }
    for (p, label) in &scene.points {
        let (x, y) = draw(p);
        let _ = writeln!(
            svg,
            "  <circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"3\" fill=\"black\"/>"
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"12\">{}</text>",
            x + 5.0,
            y - 5.0,
            label
        );
    }
    svg.push_str("</svg>\n");
    svg
}
