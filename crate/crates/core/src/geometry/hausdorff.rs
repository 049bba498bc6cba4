use rayon::prelude::*;

use super::{dimension_mismatch, CompactSet, Estimate, GeometryError, Point2, Polygon};

/// `H*(A, B) = sup_{a ∈ A} d(a, B)`.
///
/// Exact for intervals. For polygons the supremum is taken over a sample of
/// `A` and the returned `error_bound` (equal to `spacing`) certifies
/// `|value − H*(A, B)| ≤ error_bound`, using that `d(·, B)` is 1-Lipschitz:
///
/// * convex `B`: `d(·, B)` is convex, so its maximum over `A` sits on the
///   boundary of `A` and a boundary sample at pitch `spacing` suffices;
/// * nonconvex `B`: the maximum may be interior to `A`, so the sample is the
///   boundary at pitch `spacing / 2` plus an interior lattice of the same
///   pitch. Every point of `A` is then within `(√2 + 1/2)·spacing/2 < spacing`
///   of a sample.
pub fn directed_hausdorff(
    a: &CompactSet,
    b: &CompactSet,
    spacing: f64,
) -> Result<Estimate, GeometryError> {
    match (a, b) {
        (CompactSet::Interval(a), CompactSet::Interval(b)) => {
            Ok(Estimate::exact(a.directed_hausdorff(b)))
        }
        (CompactSet::Polygon(a), CompactSet::Polygon(b)) => {
            check_spacing(spacing)?;
            Ok(Estimate {
                value: sampled_directed(a, b, spacing),
                error_bound: spacing,
            })
        }
        _ => Err(dimension_mismatch(a.dim(), b.dim())),
    }
}

/// `H(A, B) = max{H*(A, B), H*(B, A)}`; for intervals `max(|a − c|, |b − d|)`.
pub fn hausdorff(a: &CompactSet, b: &CompactSet, spacing: f64) -> Result<Estimate, GeometryError> {
    match (a, b) {
        (CompactSet::Interval(a), CompactSet::Interval(b)) => Ok(Estimate::exact(a.hausdorff(b))),
        (CompactSet::Polygon(pa), CompactSet::Polygon(pb)) => {
            check_spacing(spacing)?;
            if pa == pb {
                return Ok(Estimate {
                    value: 0.0,
                    error_bound: spacing,
                });
            }
            let forward = sampled_directed(pa, pb, spacing);
            let backward = sampled_directed(pb, pa, spacing);
            Ok(Estimate {
                value: forward.max(backward),
                error_bound: spacing,
            })
        }
        _ => Err(dimension_mismatch(a.dim(), b.dim())),
    }
}

fn check_spacing(spacing: f64) -> Result<(), GeometryError> {
    if spacing > 0.0 && spacing.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::InvalidSpacing(spacing))
    }
}

fn sampled_directed(a: &Polygon, b: &Polygon, spacing: f64) -> f64 {
    let samples: Vec<Point2> = if b.is_convex() {
        a.boundary_samples(spacing)
    } else {
        let pitch = 0.5 * spacing;
        let mut s = a.boundary_samples(pitch);
        s.extend(a.interior_grid(pitch));
        s
    };
    samples
        .par_iter()
        .map(|&q| b.distance_to(q))
        .reduce(|| 0.0, f64::max)
}
