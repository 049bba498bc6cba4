use super::{GeometryError, Point2};
use crate::TOLERANCE;

/// A simple polygon with counterclockwise vertex order, closed implicitly.
///
/// Construction rejects fewer than three vertices, repeated consecutive
/// vertices, self-intersections and zero area. Clockwise input is reversed.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub fn new(mut vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(invalid(format!("need at least 3 vertices, got {n}")));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(invalid(format!("vertex {i} has a non-finite coordinate")));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(invalid(format!(
                    "consecutive vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        let area = signed_area(&vertices);
        if area.abs() <= TOLERANCE {
            return Err(invalid("polygon has zero area".into()));
        }
        if let Some((i, j)) = first_self_intersection(&vertices) {
            return Err(invalid(format!("edges {i} and {j} intersect")));
        }
        if area < 0.0 {
            vertices.reverse();
        }
        Ok(Polygon { vertices })
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self, GeometryError> {
        Polygon::new(vec![
            Point2::new(x0, y0),
            Point2::new(x1, y0),
            Point2::new(x1, y1),
            Point2::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    /// Directed edges `(v_i, v_{i+1})`, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        bounding_box(&self.vertices)
    }

    /// Distance from `q` to the polygon boundary.
    pub fn boundary_distance(&self, q: Point2) -> f64 {
        self.edges()
            .map(|(a, b)| segment_distance(q, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from `q` to the filled polygon; zero inside and within
    /// [`TOLERANCE`] of the boundary.
    pub fn distance_to(&self, q: Point2) -> f64 {
        let d = self.boundary_distance(q);
        if d <= TOLERANCE || crossing_parity(&self.vertices, q) {
            0.0
        } else {
            d
        }
    }

    pub fn contains(&self, q: Point2) -> bool {
        self.distance_to(q) == 0.0
    }

    /// Every consecutive-edge turn is left or straight, with at least three
    /// strict left turns.
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        let mut strict = 0;
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let cur = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            let turn = (cur - prev).cross(next - cur);
            if turn < -TOLERANCE {
                return false;
            }
            if turn > TOLERANCE {
                strict += 1;
            }
        }
        strict >= 3
    }

    /// Whether the segment `[p, q]` lies in the filled polygon.
    ///
    /// The segment is split at every point where it meets the boundary and
    /// each piece is tested at its midpoint.
    pub fn contains_segment(&self, p: Point2, q: Point2) -> bool {
        if !self.contains(p) || !self.contains(q) {
            return false;
        }
        let mut params = vec![0.0, 1.0];
        for (a, b) in self.edges() {
            boundary_hits(p, q, a, b, &mut params);
        }
        params.sort_by(f64::total_cmp);
        params
            .windows(2)
            .filter(|w| w[1] - w[0] > f64::EPSILON)
            .all(|w| self.contains(p.lerp(q, 0.5 * (w[0] + w[1]))))
    }

    /// Whether `inner` is a subset of `self`: all vertices inside and no
    /// boundary crossing along any edge.
    pub fn contains_polygon(&self, inner: &Polygon) -> bool {
        inner.edges().all(|(p, q)| self.contains_segment(p, q))
    }

    /// Points along the boundary with consecutive samples at most `spacing`
    /// apart; every vertex is a sample.
    pub fn boundary_samples(&self, spacing: f64) -> Vec<Point2> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let k = (a.distance(b) / spacing).ceil().max(1.0) as usize;
            out.extend((0..k).map(|j| a.lerp(b, j as f64 / k as f64)));
        }
        out
    }

    /// Lattice points of pitch `pitch` that lie in the polygon.
    pub fn interior_grid(&self, pitch: f64) -> Vec<Point2> {
        let (lo, hi) = self.bounding_box();
        let nx = ((hi.x - lo.x) / pitch).floor() as usize;
        let ny = ((hi.y - lo.y) / pitch).floor() as usize;
        let mut out = Vec::new();
        for i in 0..=nx {
            for j in 0..=ny {
                let q = Point2::new(lo.x + i as f64 * pitch, lo.y + j as f64 * pitch);
                if self.contains(q) {
                    out.push(q);
                }
            }
        }
        out
    }
}

fn invalid(msg: String) -> GeometryError {
    GeometryError::InvalidPolygon(msg)
}

pub(crate) fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    0.5 * (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum::<f64>()
}

pub(crate) fn bounding_box(points: &[Point2]) -> (Point2, Point2) {
    points.iter().fold(
        (
            Point2::new(f64::INFINITY, f64::INFINITY),
            Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), p| {
            (
                Point2::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point2::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        },
    )
}

pub(crate) fn segment_distance(q: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return q.distance(a);
    }
    let t = ((q - a).dot(ab) / len2).clamp(0.0, 1.0);
    q.distance(a.lerp(b, t))
}

/// Even-odd ray casting toward +x.
fn crossing_parity(vertices: &[Point2], q: Point2) -> bool {
    let n = vertices.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (vi, vj) = (vertices[i], vertices[j]);
        if (vi.y > q.y) != (vj.y > q.y) {
            let x = vi.x + (q.y - vi.y) * (vj.x - vi.x) / (vj.y - vi.y);
            if q.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point2, b: Point2, c: Point2) -> bool {
    c.x >= a.x.min(b.x) && c.x <= a.x.max(b.x) && c.y >= a.y.min(b.y) && c.y <= a.y.max(b.y)
}

/// Closed-segment intersection test.
fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

fn first_self_intersection(v: &[Point2]) -> Option<(usize, usize)> {
    let n = v.len();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        // adjacent edges share a vertex; they may only overlap by folding back
        let c = v[(i + 2) % n];
        if orient(a, b, c) == 0.0 && (b - a).dot(c - b) < 0.0 {
            return Some((i, (i + 1) % n));
        }
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_intersect(a, b, v[j], v[(j + 1) % n]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Parameters `t ∈ [0, 1]` along `[p, q]` where it meets segment `[a, b]`.
fn boundary_hits(p: Point2, q: Point2, a: Point2, b: Point2, params: &mut Vec<f64>) {
    let d = q - p;
    let e = b - a;
    let denom = d.cross(e);
    let len2 = d.dot(d);
    if denom.abs() > f64::EPSILON * d.norm() * e.norm() {
        let w = a - p;
        let t = w.cross(e) / denom;
        let u = w.cross(d) / denom;
        if (0.0..=1.0).contains(&t) && (-1e-12..=1.0 + 1e-12).contains(&u) {
            params.push(t);
        }
    } else if len2 > 0.0 && segment_distance(a, p, q).min(segment_distance(b, p, q)) <= TOLERANCE {
        for end in [a, b] {
            let t = (end - p).dot(d) / len2;
            if (0.0..=1.0).contains(&t) {
                params.push(t);
            }
        }
    }
}
