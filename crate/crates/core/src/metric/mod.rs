//! The `d_p` metric between fuzzy sets, the p-mean norm and the p-mean
//! left-continuity modulus.
//!
//! On step representations every integrand is piecewise constant in α, so
//! the integrals are evaluated exactly as finite sums over a merged grid of
//! breakpoints. [`quadrature`] covers cut maps that vary continuously in α.

mod quadrature;

use serde::Serialize;
use thiserror::Error;

use crate::fuzzy::LevelFuzzySet;
use crate::geometry::{
    dimension_mismatch, hausdorff, max_norm_on_set, CompactSet, Estimate, GeometryError,
};

pub use quadrature::{
    dp_distance_quadrature, left_continuity_modulus_quadrature, p_mean_norm_quadrature,
    CutFunction, LinearIntervalFuzzy, QUADRATURE_MAX_DEPTH,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("exponent p must satisfy 1 <= p < infinity, got {0}")]
    InvalidExponent(f64),
    #[error("shift h must lie in (0, 1), got {0}")]
    InvalidShift(f64),
    #[error("epsilon must be positive, got {0}")]
    InvalidEpsilon(f64),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("h grid is empty")]
    EmptyGrid,
    #[error("h grid must be strictly increasing inside (0, 1); offending value {0}")]
    InvalidGrid(f64),
    #[error("invalid interpolation knots: {0}")]
    InvalidKnots(String),
    #[error(
        "quadrature did not converge after depth {max_depth}: best estimate {estimate} \
         (integral error estimate {error_estimate})"
    )]
    NotConverged {
        estimate: f64,
        error_estimate: f64,
        max_depth: u32,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// An exponent `1 ≤ p < ∞`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self, MetricError> {
        if p >= 1.0 && p.is_finite() {
            Ok(PExponent(p))
        } else {
            Err(MetricError::InvalidExponent(p))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub(crate) fn pow(self, x: f64) -> f64 {
        if self.0 == 1.0 {
            x
        } else {
            x.powf(self.0)
        }
    }

    pub(crate) fn root(self, x: f64) -> f64 {
        if self.0 == 1.0 {
            x
        } else {
            x.powf(1.0 / self.0)
        }
    }
}

/// Accumulates `Σ w_j · H_j^p` together with the matching error sum.
#[derive(Default)]
struct PowerSum {
    value: f64,
    error: f64,
}

impl PowerSum {
    fn add(&mut self, p: PExponent, width: f64, h: Estimate) {
        self.value += width * p.pow(h.value);
        self.error += width * p.pow(h.error_bound);
    }

    /// By Minkowski's inequality `|‖H‖_p − ‖H̃‖_p| ≤ ‖H − H̃‖_p`, so the
    /// per-gap error bounds combine in the same p-norm.
    fn finish(self, p: PExponent) -> Estimate {
        Estimate {
            value: p.root(self.value),
            error_bound: p.root(self.error),
        }
    }
}

fn check_dims(u: &LevelFuzzySet, v: &LevelFuzzySet) -> Result<(), MetricError> {
    if u.dim() != v.dim() {
        return Err(dimension_mismatch(u.dim(), v.dim()).into());
    }
    Ok(())
}

fn set_distance(a: &CompactSet, b: &CompactSet, spacing: f64) -> Result<Estimate, MetricError> {
    if std::ptr::eq(a, b) {
        return Ok(Estimate::exact(0.0));
    }
    Ok(hausdorff(a, b, spacing)?)
}

/// `d_p(u, v) = (∫₀¹ H([u]_α, [v]_α)^p dα)^{1/p}`, exact on step elements.
///
/// Between consecutive breakpoints of the merged alpha grid both cuts are
/// constant, so the integral is `Σ_j (β_j − β_{j−1}) · H_j^p`. `spacing` is
/// the polygon boundary sampling pitch; the returned bound is zero in ℝ¹.
pub fn dp_distance(
    u: &LevelFuzzySet,
    v: &LevelFuzzySet,
    p: PExponent,
    spacing: f64,
) -> Result<Estimate, MetricError> {
    check_dims(u, v)?;
    let mut sum = PowerSum::default();
    let mut prev = 0.0;
    for beta in merged_alphas(u, v) {
        let h = set_distance(u.cut(beta), v.cut(beta), spacing)?;
        sum.add(p, beta - prev, h);
        prev = beta;
    }
    Ok(sum.finish(p))
}

/// Union of the two alpha grids, sorted, with exact duplicates removed.
pub fn merged_alphas(u: &LevelFuzzySet, v: &LevelFuzzySet) -> Vec<f64> {
    let mut grid: Vec<f64> = u.alphas().chain(v.alphas()).collect();
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// `d_p(u, 0̂)`, where `0̂` is the crisp origin. The integrand is
/// `H([u]_α, {0})`, the largest norm on the cut, which is exact for both
/// intervals and polygons.
pub fn p_mean_norm(u: &LevelFuzzySet, p: PExponent) -> f64 {
    let mut sum = 0.0;
    let mut prev = 0.0;
    for level in u.levels() {
        sum += (level.alpha - prev) * p.pow(max_norm_on_set(&level.set));
        prev = level.alpha;
    }
    p.root(sum)
}

pub(crate) fn check_shift(h: f64) -> Result<(), MetricError> {
    if h > 0.0 && h < 1.0 {
        Ok(())
    } else {
        Err(MetricError::InvalidShift(h))
    }
}

/// `(∫_h^1 H([u]_α, [u]_{α−h})^p dα)^{1/p}`, exact on step elements.
///
/// The integrand only changes at `α_i` and `α_i + h`; each gap of that grid
/// inside `[h, 1]` is evaluated at its midpoint.
pub fn left_continuity_modulus(
    u: &LevelFuzzySet,
    h: f64,
    p: PExponent,
    spacing: f64,
) -> Result<Estimate, MetricError> {
    check_shift(h)?;
    let mut grid: Vec<f64> = vec![h, 1.0];
    for alpha in u.alphas() {
        grid.extend([alpha, alpha + h].into_iter().filter(|&b| b > h && b < 1.0));
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let mut sum = PowerSum::default();
    for gap in grid.windows(2) {
        let mid = 0.5 * (gap[0] + gap[1]);
        let d = set_distance(u.cut(mid), u.cut(mid - h), spacing)?;
        sum.add(p, gap[1] - gap[0], d);
    }
    Ok(sum.finish(p))
}

/// Sampled map `h ↦ left_continuity_modulus(u, h, p)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModulusCurve {
    pub p: PExponent,
    /// `(h, modulus)` pairs with strictly increasing `h`.
    pub samples: Vec<(f64, f64)>,
}

impl ModulusCurve {
    pub fn sample(
        u: &LevelFuzzySet,
        p: PExponent,
        h_grid: &[f64],
        spacing: f64,
    ) -> Result<Self, MetricError> {
        check_grid(h_grid)?;
        let samples = h_grid
            .iter()
            .map(|&h| Ok((h, left_continuity_modulus(u, h, p, spacing)?.value)))
            .collect::<Result<_, MetricError>>()?;
        Ok(ModulusCurve { p, samples })
    }

    /// Largest grid value `δ` such that the modulus is below `eps` at every
    /// grid point `h ≤ δ`; `None` when the smallest grid point already fails.
    ///
    /// The modulus is not assumed monotone in `h`, so the scan stops at the
    /// first failure.
    pub fn delta(&self, eps: f64) -> Option<f64> {
        self.samples
            .iter()
            .take_while(|&&(_, m)| m < eps)
            .last()
            .map(|&(h, _)| h)
    }
}

pub(crate) fn check_grid(h_grid: &[f64]) -> Result<(), MetricError> {
    if h_grid.is_empty() {
        return Err(MetricError::EmptyGrid);
    }
    let mut prev = 0.0;
    for &h in h_grid {
        if !(h > prev && h < 1.0) {
            return Err(MetricError::InvalidGrid(h));
        }
        prev = h;
    }
    Ok(())
}

/// Grid evidence for p-mean left-continuity: see [`ModulusCurve::delta`].
/// This checks finitely many `h`, it does not prove the bound for all
/// `h < δ`.
pub fn find_delta(
    u: &LevelFuzzySet,
    eps: f64,
    p: PExponent,
    h_grid: &[f64],
    spacing: f64,
) -> Result<Option<f64>, MetricError> {
    if !(eps > 0.0) {
        return Err(MetricError::InvalidEpsilon(eps));
    }
    Ok(ModulusCurve::sample(u, p, h_grid, spacing)?.delta(eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Interval, Polygon};

    const SPACING: f64 = 0.01;

    fn iv(a: f64, b: f64) -> CompactSet {
        Interval::new(a, b).unwrap().into()
    }

    fn p(x: f64) -> PExponent {
        PExponent::new(x).unwrap()
    }

    fn step_jump() -> LevelFuzzySet {
        LevelFuzzySet::new(vec![(0.5, iv(0.0, 2.0)), (1.0, iv(0.0, 1.0))]).unwrap()
    }

    #[test]
    fn exponent_validation() {
        assert!(PExponent::new(0.5).is_err());
        assert!(PExponent::new(f64::INFINITY).is_err());
        assert!(PExponent::new(f64::NAN).is_err());
        assert_eq!(PExponent::new(1.0).unwrap().value(), 1.0);
    }

    #[test]
    fn step_distances() {
        let u = step_jump();
        let v = LevelFuzzySet::crisp(iv(0.0, 1.0));
        for q in [1.0, 2.0, 3.5] {
            assert_eq!(dp_distance(&u, &u, p(q), SPACING).unwrap().value, 0.0);
            let d = dp_distance(&u, &v, p(q), SPACING).unwrap();
            assert!((d.value - 0.5f64.powf(1.0 / q)).abs() < 1e-15);
            assert_eq!(d.error_bound, 0.0);
            let x = LevelFuzzySet::crisp(CompactSet::Interval(Interval::point(-1.5)));
            let y = LevelFuzzySet::crisp(CompactSet::Interval(Interval::point(2.0)));
            assert!((dp_distance(&x, &y, p(q), SPACING).unwrap().value - 3.5).abs() < 1e-14);
        }
    }

    #[test]
    fn polygon_distance_carries_error_bound() {
        let a = LevelFuzzySet::crisp(Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap().into());
        let b = LevelFuzzySet::crisp(Polygon::rectangle(1.0, 0.0, 2.0, 1.0).unwrap().into());
        let d = dp_distance(&a, &b, p(2.0), SPACING).unwrap();
        assert!((d.value - 1.0).abs() <= d.error_bound);
        assert!((d.error_bound - SPACING).abs() < 1e-15);
        assert!(dp_distance(&a, &step_jump(), p(1.0), SPACING).is_err());
    }

    #[test]
    fn norms() {
        let origin = LevelFuzzySet::crisp(CompactSet::Interval(Interval::point(0.0)));
        assert_eq!(p_mean_norm(&origin, p(2.0)), 0.0);
        let c = LevelFuzzySet::crisp(iv(0.0, 3.0));
        for q in [1.0, 2.0, 7.0] {
            assert!((p_mean_norm(&c, p(q)) - 3.0).abs() < 1e-14);
        }
        // ∫ = 0.5·2 + 0.5·1
        assert_eq!(p_mean_norm(&step_jump(), p(1.0)), 1.5);
    }

    #[test]
    fn modulus_of_step_jump() {
        let u = step_jump();
        for q in [1.0, 2.0, 3.0] {
            for h in [0.05, 0.1, 0.3] {
                let m = left_continuity_modulus(&u, h, p(q), SPACING).unwrap();
                assert!((m.value - h.powf(1.0 / q)).abs() < 1e-12, "h={h} p={q}");
            }
        }
        let c = LevelFuzzySet::crisp(iv(0.0, 1.0));
        assert_eq!(
            left_continuity_modulus(&c, 0.3, p(1.0), SPACING)
                .unwrap()
                .value,
            0.0
        );
        assert!(left_continuity_modulus(&u, 0.0, p(1.0), SPACING).is_err());
        assert!(left_continuity_modulus(&u, 1.0, p(1.0), SPACING).is_err());
    }

    #[test]
    fn delta_search() {
        let c = LevelFuzzySet::crisp(iv(0.0, 1.0));
        let grid = [0.1, 0.2, 0.3];
        assert_eq!(
            find_delta(&c, 0.1, p(1.0), &grid, SPACING).unwrap(),
            Some(0.3)
        );
        let u = step_jump();
        assert_eq!(
            find_delta(&u, 0.5, p(1.0), &grid, SPACING).unwrap(),
            Some(0.3)
        );
        assert_eq!(find_delta(&u, 0.05, p(1.0), &grid, SPACING).unwrap(), None);
        assert_eq!(
            find_delta(&u, 0.25, p(1.0), &grid, SPACING).unwrap(),
            Some(0.2)
        );
        assert_eq!(
            find_delta(&u, 0.5, p(1.0), &[], SPACING),
            Err(MetricError::EmptyGrid)
        );
        assert!(find_delta(&u, 0.5, p(1.0), &[0.2, 0.1], SPACING).is_err());
    }

    #[test]
    fn curve_scan_stops_at_first_failure() {
        let curve = ModulusCurve {
            p: p(1.0),
            samples: vec![(0.1, 0.01), (0.2, 0.5), (0.3, 0.02)],
        };
        assert_eq!(curve.delta(0.1), Some(0.1));
    }
}
