use super::GeometryError;

/// A closed interval `[a, b]` with finite endpoints; `a == b` is a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self, GeometryError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeometryError::InvalidInterval {
                a,
                b,
                reason: "endpoints must be finite",
            });
        }
        if a > b {
            return Err(GeometryError::InvalidInterval {
                a,
                b,
                reason: "lower endpoint exceeds upper endpoint",
            });
        }
        Ok(Interval { a, b })
    }

    /// The degenerate interval `{x}`.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "interval endpoint must be finite");
        Interval { a: x, b: x }
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    pub fn distance_to(&self, x: f64) -> f64 {
        if x < self.a {
            self.a - x
        } else if x > self.b {
            x - self.b
        } else {
            0.0
        }
    }

    /// `sup_{x ∈ self} d(x, other)`; attained at an endpoint.
    pub fn directed_hausdorff(&self, other: &Interval) -> f64 {
        other.distance_to(self.a).max(other.distance_to(self.b))
    }

    /// `max(|a − c|, |b − d|)`.
    pub fn hausdorff(&self, other: &Interval) -> f64 {
        (self.a - other.a).abs().max((self.b - other.b).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reversed_and_nonfinite() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 0.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(1.0, 1.0).unwrap().is_degenerate());
    }

    #[test]
    fn directed_and_symmetric_distances() {
        let a = Interval::new(0.0, 1.0).unwrap();
        let b = Interval::new(2.0, 3.0).unwrap();
        assert_eq!(a.directed_hausdorff(&b), 2.0);
        assert_eq!(b.directed_hausdorff(&a), 2.0);
        let c = Interval::new(0.0, 2.0).unwrap();
        let d = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(c.hausdorff(&d), 1.0);
        // [0,1] ⊂ [0,2]: the small interval is within 0 of the big one
        assert_eq!(a.directed_hausdorff(&c), 0.0);
        assert_eq!(c.directed_hausdorff(&a), 1.0);
    }
}
