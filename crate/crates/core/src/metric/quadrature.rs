//! Adaptive Simpson quadrature for cut maps that vary continuously in α.

use std::borrow::Cow;

use super::{check_shift, MetricError, PExponent};
use crate::fuzzy::LevelFuzzySet;
use crate::geometry::{dimension_mismatch, hausdorff, max_norm_on_set, CompactSet, Interval};

pub const QUADRATURE_MAX_DEPTH: u32 = 40;

/// Panels the integration range is split into before adaptive refinement.
const SEED_PANELS: usize = 16;

/// A map `α ↦ [u]_α` on `[0, 1]`, nested and decreasing in α.
pub trait CutFunction {
    fn dim(&self) -> usize;
    fn cut_at(&self, alpha: f64) -> Cow<'_, CompactSet>;
}

impl CutFunction for LevelFuzzySet {
    fn dim(&self) -> usize {
        LevelFuzzySet::dim(self)
    }

    fn cut_at(&self, alpha: f64) -> Cow<'_, CompactSet> {
        Cow::Borrowed(self.cut(alpha))
    }
}

/// A fuzzy interval whose cut endpoints are linear between knots, e.g. a
/// triangular or trapezoidal fuzzy number. Only the quadrature routines
/// accept this representation.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearIntervalFuzzy {
    knots: Vec<(f64, Interval)>,
}

impl LinearIntervalFuzzy {
    /// Knots must start at α = 0, end at α = 1, increase strictly in α and
    /// be nested.
    pub fn new(knots: Vec<(f64, Interval)>) -> Result<Self, MetricError> {
        let bad = |m: &str| Err(MetricError::InvalidKnots(m.to_string()));
        if knots.len() < 2 {
            return bad("need at least two knots");
        }
        if knots[0].0 != 0.0 || knots[knots.len() - 1].0 != 1.0 {
            return bad("knots must start at alpha = 0 and end at alpha = 1");
        }
        for w in knots.windows(2) {
            if !(w[1].0 > w[0].0) {
                return bad("knot alphas must increase strictly");
            }
            if !w[0].1.contains_interval(&w[1].1) {
                return bad("knot intervals must be nested");
            }
        }
        Ok(LinearIntervalFuzzy { knots })
    }

    /// Cuts `[a + α(b − a), c − α(c − b)]`.
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self, MetricError> {
        Self::trapezoidal(a, b, b, c)
    }

    /// Cuts `[a + α(b − a), d − α(d − c)]`.
    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self, MetricError> {
        Self::new(vec![
            (0.0, Interval::new(a, d)?),
            (1.0, Interval::new(b, c)?),
        ])
    }

    pub fn interval_at(&self, alpha: f64) -> Interval {
        let alpha = alpha.clamp(0.0, 1.0);
        let i = self
            .knots
            .partition_point(|(k, _)| *k < alpha)
            .clamp(1, self.knots.len() - 1);
        let (a0, lo) = self.knots[i - 1];
        let (a1, hi) = self.knots[i];
        let t = (alpha - a0) / (a1 - a0);
        let a = lo.a + t * (hi.a - lo.a);
        let b = lo.b + t * (hi.b - lo.b);
        Interval { a, b: b.max(a) }
    }
}

impl CutFunction for LinearIntervalFuzzy {
    fn dim(&self) -> usize {
        1
    }

    fn cut_at(&self, alpha: f64) -> Cow<'_, CompactSet> {
        Cow::Owned(CompactSet::Interval(self.interval_at(alpha)))
    }
}

struct Simpson {
    value: f64,
    error: f64,
    converged: bool,
}

/// Adaptive Simpson on `[a, b]`. A panel is accepted once its Richardson
/// error estimate is within its width-proportional share of `tol`, or at
/// [`QUADRATURE_MAX_DEPTH`]. The whole run counts as converged when the sum
/// of the accepted panels' estimates is within `tol`, so isolated jumps that
/// bottom out at maximum depth do not fail the integral.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Simpson {
    let mut value = 0.0;
    let mut error = 0.0;
    let width = (b - a) / SEED_PANELS as f64;
    for k in 0..SEED_PANELS {
        let lo = a + k as f64 * width;
        let hi = if k + 1 == SEED_PANELS { b } else { lo + width };
        let (flo, fhi) = (f(lo), f(hi));
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        let panel_tol = tol * (hi - lo) / (b - a);
        refine(
            f, lo, flo, mid, fmid, hi, fhi, whole, panel_tol, 0, &mut value, &mut error,
        );
    }
    Simpson {
        value,
        error,
        converged: error <= tol,
    }
}

#[allow(clippy::too_many_arguments)]
fn refine(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    value: &mut f64,
    error: &mut f64,
) {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || depth >= QUADRATURE_MAX_DEPTH {
        *value += left + right + delta / 15.0;
        *error += delta.abs() / 15.0;
        return;
    }
    refine(
        f,
        a,
        fa,
        lm,
        flm,
        m,
        fm,
        left,
        0.5 * tol,
        depth + 1,
        value,
        error,
    );
    refine(
        f,
        m,
        fm,
        rm,
        frm,
        b,
        fb,
        right,
        0.5 * tol,
        depth + 1,
        value,
        error,
    );
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol^p` and returns the
/// p-th root of the integral.
fn pth_root_of_integral(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    p: PExponent,
    tol: f64,
) -> Result<f64, MetricError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(MetricError::InvalidTolerance(tol));
    }
    let target = p.pow(tol);
    let s = adaptive_simpson(f, a, b, target);
    let estimate = p.root(s.value.max(0.0));
    if s.converged {
        Ok(estimate)
    } else {
        Err(MetricError::NotConverged {
            estimate,
            error_estimate: s.error,
            max_depth: QUADRATURE_MAX_DEPTH,
        })
    }
}

fn cut_hausdorff(a: &CompactSet, b: &CompactSet, spacing: f64) -> f64 {
    hausdorff(a, b, spacing)
        .map(|e| e.value)
        .unwrap_or(f64::NAN)
}

/// `d_p(u, v)` by adaptive quadrature of `H([u]_α, [v]_α)^p` over `[0, 1]`,
/// refined until the estimated integral error is below `tol^p`. Polygon
/// cuts are compared with boundary sampling pitch `tol`.
pub fn dp_distance_quadrature(
    u: &dyn CutFunction,
    v: &dyn CutFunction,
    p: PExponent,
    tol: f64,
) -> Result<f64, MetricError> {
    if u.dim() != v.dim() {
        return Err(dimension_mismatch(u.dim(), v.dim()).into());
    }
    let f = |alpha: f64| p.pow(cut_hausdorff(&u.cut_at(alpha), &v.cut_at(alpha), tol));
    pth_root_of_integral(&f, 0.0, 1.0, p, tol)
}

/// `d_p(u, 0̂)` by quadrature of the largest norm on each cut.
pub fn p_mean_norm_quadrature(
    u: &dyn CutFunction,
    p: PExponent,
    tol: f64,
) -> Result<f64, MetricError> {
    let f = |alpha: f64| p.pow(max_norm_on_set(&u.cut_at(alpha)));
    pth_root_of_integral(&f, 0.0, 1.0, p, tol)
}

/// The p-mean left-continuity modulus at shift `h` by quadrature over
/// `[h, 1]`.
pub fn left_continuity_modulus_quadrature(
    u: &dyn CutFunction,
    h: f64,
    p: PExponent,
    tol: f64,
) -> Result<f64, MetricError> {
    check_shift(h)?;
    let f = |alpha: f64| p.pow(cut_hausdorff(&u.cut_at(alpha), &u.cut_at(alpha - h), tol));
    pth_root_of_integral(&f, h, 1.0, p, tol)
}
