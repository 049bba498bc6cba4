//! Compact sets in ℝ¹ and ℝ²: closed intervals and simple polygons.
//!
//! Interval operations are exact. Polygon Hausdorff distances are computed by
//! sampling and come with a certified error bound (see [`Estimate`]).

mod hausdorff;
mod interval;
mod kernel;
mod polygon;

use thiserror::Error;

pub use hausdorff::{directed_hausdorff, hausdorff};
pub use interval::Interval;
pub use kernel::{polygon_kernel, PolygonKernel, SetKernel};
pub use polygon::Polygon;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected m = {expected}, got m = {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid interval [{a}, {b}]: {reason}")]
    InvalidInterval {
        a: f64,
        b: f64,
        reason: &'static str,
    },
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("sampling spacing must be positive and finite, got {0}")]
    InvalidSpacing(f64),
    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),
}

/// A point of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn scale(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        Point2::new(
            self.x + t * (other.x - self.x),
            self.y + t * (other.y - self.y),
        )
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;

    fn add(self, other: Point2) -> Point2 {
        Point2::new(self.x + other.x, self.y + other.y)
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;

    fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

/// A point of ℝ¹ or ℝ². Also used as a translation vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Line(f64),
    Plane(Point2),
}

impl Point {
    pub fn dim(&self) -> usize {
        match self {
            Point::Line(_) => 1,
            Point::Plane(_) => 2,
        }
    }
}

impl From<f64> for Point {
    fn from(x: f64) -> Self {
        Point::Line(x)
    }
}

impl From<Point2> for Point {
    fn from(p: Point2) -> Self {
        Point::Plane(p)
    }
}

impl From<(f64, f64)> for Point {
    fn from(p: (f64, f64)) -> Self {
        Point::Plane(p.into())
    }
}

/// A computed value together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error_bound: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate {
            value,
            error_bound: 0.0,
        }
    }
}

/// A nonempty compact subset of ℝ¹ or ℝ².
#[derive(Debug, Clone, PartialEq)]
pub enum CompactSet {
    Interval(Interval),
    Polygon(Polygon),
}

impl CompactSet {
    pub fn dim(&self) -> usize {
        match self {
            CompactSet::Interval(_) => 1,
            CompactSet::Polygon(_) => 2,
        }
    }

    /// Membership with the global containment tolerance.
    pub fn contains(&self, x: &Point) -> Result<bool, GeometryError> {
        Ok(point_to_set_distance(x, self)? == 0.0)
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_set(&self, other: &CompactSet) -> Result<bool, GeometryError> {
        match (self, other) {
            (CompactSet::Interval(outer), CompactSet::Interval(inner)) => {
                Ok(outer.contains_interval(inner))
            }
            (CompactSet::Polygon(outer), CompactSet::Polygon(inner)) => {
                Ok(outer.contains_polygon(inner))
            }
            _ => Err(dimension_mismatch(self.dim(), other.dim())),
        }
    }

    pub fn translate(&self, t: &Point) -> Result<CompactSet, GeometryError> {
        match (self, t) {
            (CompactSet::Interval(i), Point::Line(dx)) => {
                Interval::new(i.a + dx, i.b + dx).map(CompactSet::Interval)
            }
            (CompactSet::Polygon(p), Point::Plane(v)) => {
                Polygon::new(p.vertices().iter().map(|q| *q + *v).collect())
                    .map(CompactSet::Polygon)
            }
            _ => Err(dimension_mismatch(self.dim(), t.dim())),
        }
    }

    /// Image under `x ↦ s·x` for `s > 0`.
    pub fn scale(&self, s: f64) -> Result<CompactSet, GeometryError> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(GeometryError::InvalidScale(s));
        }
        match self {
            CompactSet::Interval(i) => Interval::new(i.a * s, i.b * s).map(CompactSet::Interval),
            CompactSet::Polygon(p) => {
                Polygon::new(p.vertices().iter().map(|q| q.scale(s)).collect())
                    .map(CompactSet::Polygon)
            }
        }
    }
}

impl From<Interval> for CompactSet {
    fn from(i: Interval) -> Self {
        CompactSet::Interval(i)
    }
}

impl From<Polygon> for CompactSet {
    fn from(p: Polygon) -> Self {
        CompactSet::Polygon(p)
    }
}

pub(crate) fn dimension_mismatch(expected: usize, found: usize) -> GeometryError {
    GeometryError::DimensionMismatch { expected, found }
}

/// Euclidean distance from `x` to `set`; zero iff `x` lies in the set (up to
/// [`crate::TOLERANCE`] for polygons).
pub fn point_to_set_distance(x: &Point, set: &CompactSet) -> Result<f64, GeometryError> {
    match (x, set) {
        (Point::Line(t), CompactSet::Interval(i)) => Ok(i.distance_to(*t)),
        (Point::Plane(q), CompactSet::Polygon(p)) => Ok(p.distance_to(*q)),
        _ => Err(dimension_mismatch(set.dim(), x.dim())),
    }
}

/// Convexity test. Intervals are always convex.
pub fn is_convex(set: &CompactSet) -> bool {
    match set {
        CompactSet::Interval(_) => true,
        CompactSet::Polygon(p) => p.is_convex(),
    }
}

/// True when the set has a nonempty kernel. Degenerate (segment or point)
/// kernels count.
pub fn is_star_shaped(set: &CompactSet) -> bool {
    match set {
        CompactSet::Interval(_) => true,
        CompactSet::Polygon(p) => !polygon_kernel(p).is_empty(),
    }
}

/// `H(S, {0})`, the largest Euclidean norm attained on the set.
pub fn max_norm_on_set(set: &CompactSet) -> f64 {
    match set {
        CompactSet::Interval(i) => i.a.abs().max(i.b.abs()),
        CompactSet::Polygon(p) => p.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max),
    }
}
