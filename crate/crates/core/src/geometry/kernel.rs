use super::polygon::{bounding_box, segment_distance, signed_area};
use super::{CompactSet, Interval, Point2, Polygon};
use crate::TOLERANCE;

/// The kernel of a polygon: the points from which the whole polygon is
/// visible.
#[derive(Debug, Clone, PartialEq)]
pub enum PolygonKernel {
    /// A kernel with positive area.
    Region(Polygon),
    /// A zero-area kernel: one point, or the two endpoints of a segment.
    Degenerate(Vec<Point2>),
    Empty,
}

impl PolygonKernel {
    pub fn is_empty(&self) -> bool {
        matches!(self, PolygonKernel::Empty)
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, PolygonKernel::Degenerate(_))
    }

    pub fn vertices(&self) -> &[Point2] {
        match self {
            PolygonKernel::Region(p) => p.vertices(),
            PolygonKernel::Degenerate(v) => v,
            PolygonKernel::Empty => &[],
        }
    }
}

/// Kernel of an arbitrary compact set; an interval is its own kernel.
#[derive(Debug, Clone, PartialEq)]
pub enum SetKernel {
    Interval(Interval),
    Polygon(PolygonKernel),
}

impl SetKernel {
    pub fn of(set: &CompactSet) -> SetKernel {
        match set {
            CompactSet::Interval(i) => SetKernel::Interval(*i),
            CompactSet::Polygon(p) => SetKernel::Polygon(polygon_kernel(p)),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SetKernel::Polygon(PolygonKernel::Empty))
    }
}

/// Intersection of the inner half-planes of all edges.
///
/// Starts from a box enclosing the polygon and clips it by the left side of
/// each counterclockwise edge. A vertex is kept when it lies no more than
/// [`TOLERANCE`] outside the half-plane, so kernels that collapse to a
/// segment or point survive as [`PolygonKernel::Degenerate`].
pub fn polygon_kernel(polygon: &Polygon) -> PolygonKernel {
    let (lo, hi) = polygon.bounding_box();
    let pad = 1.0;
    let mut region = vec![
        Point2::new(lo.x - pad, lo.y - pad),
        Point2::new(hi.x + pad, lo.y - pad),
        Point2::new(hi.x + pad, hi.y + pad),
        Point2::new(lo.x - pad, hi.y + pad),
    ];
    for (a, b) in polygon.edges() {
        region = clip_left(&region, a, b);
        if region.is_empty() {
            return PolygonKernel::Empty;
        }
    }
    finish(region)
}

fn clip_left(region: &[Point2], a: Point2, b: Point2) -> Vec<Point2> {
    let dir = b - a;
    let len = dir.norm();
    let side = |q: Point2| dir.cross(q - a) / len;
    let mut out = Vec::with_capacity(region.len() + 1);
    let n = region.len();
    for i in 0..n {
        let prev = region[(i + n - 1) % n];
        let cur = region[i];
        let (dp, dc) = (side(prev), side(cur));
        let keep_prev = dp >= -TOLERANCE;
        let keep_cur = dc >= -TOLERANCE;
        if keep_prev != keep_cur {
            let t = (dp / (dp - dc)).clamp(0.0, 1.0);
            out.push(prev.lerp(cur, t));
        }
        if keep_cur {
            out.push(cur);
        }
    }
    out
}

fn finish(points: Vec<Point2>) -> PolygonKernel {
    let mut pts = dedup_ring(points);
    remove_collinear(&mut pts);
    if pts.is_empty() {
        return PolygonKernel::Empty;
    }
    if pts.len() >= 3 {
        let area = signed_area(&pts).abs();
        let perimeter: f64 = (0..pts.len())
            .map(|i| pts[i].distance(pts[(i + 1) % pts.len()]))
            .sum();
        // area / perimeter is half the width of a thin sliver
        if area > 10.0 * TOLERANCE * perimeter {
            if let Ok(p) = Polygon::new(pts.clone()) {
                return PolygonKernel::Region(p);
            }
        }
    }
    let (mut best, mut far) = (0.0, (pts[0], pts[0]));
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let d = p.distance(q);
            if d > best {
                best = d;
                far = (p, q);
            }
        }
    }
    if best <= 10.0 * TOLERANCE {
        let (lo, hi) = bounding_box(&pts);
        PolygonKernel::Degenerate(vec![lo.lerp(hi, 0.5)])
    } else {
        PolygonKernel::Degenerate(vec![far.0, far.1])
    }
}

fn dedup_ring(points: Vec<Point2>) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(points.len());
    for p in points {
        if out.last().is_none_or(|q| q.distance(p) > TOLERANCE) {
            out.push(p);
        }
    }
    while out.len() > 1 && out[0].distance(out[out.len() - 1]) <= TOLERANCE {
        out.pop();
    }
    out
}

fn remove_collinear(pts: &mut Vec<Point2>) {
    let mut i = 0;
    while pts.len() >= 3 && i < pts.len() {
        let n = pts.len();
        let prev = pts[(i + n - 1) % n];
        let next = pts[(i + 1) % n];
        if segment_distance(pts[i], prev, next) <= TOLERANCE {
            pts.remove(i);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
}
