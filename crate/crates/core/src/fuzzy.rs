//! Level-set representation of fuzzy sets on ℝ¹ and ℝ².
//!
//! A [`LevelFuzzySet`] stores finitely many α-cuts `α₁ < … < α_k = 1` with
//! nested compact sets. The cut at an arbitrary `α ∈ (0, 1]` is the stored set
//! of the smallest level `α_i ≥ α`, so the cut map is piecewise constant and
//! left-continuous: `[u]_α = ∩_{β<α} [u]_β`, which is upper semicontinuity of
//! the membership function. The cut at `α = 0` (the support) is the lowest
//! stored set.

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{is_convex, CompactSet, GeometryError, Point, PolygonKernel, SetKernel};
use crate::metric::{p_mean_norm, PExponent};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("a fuzzy set needs at least one level")]
    NoLevels,
    #[error("level alpha = {0} is outside (0, 1]")]
    InvalidLevel(f64),
    #[error("normality (i) violated: no level at alpha = 1")]
    NotNormal,
    #[error("nesting violated: level alpha = {lower} does not contain level alpha = {upper}")]
    NotNested { lower: f64, upper: f64 },
    #[error("conflicting sets given for level alpha = {0}")]
    DuplicateLevel(f64),
    #[error("level alpha = {alpha} has dimension {found}, expected {expected}")]
    MixedDimensions {
        alpha: f64,
        expected: usize,
        found: usize,
    },
    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub alpha: f64,
    pub set: CompactSet,
}

/// A normal fuzzy set with compact α-cuts, stored as a finite stack of levels.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelFuzzySet {
    dim: usize,
    levels: Vec<Level>,
}

impl LevelFuzzySet {
    /// Builds a fuzzy set from `(alpha, set)` pairs in any order.
    ///
    /// Levels are sorted by alpha; a repeated alpha with an identical set is
    /// dropped. Fails on a missing `alpha = 1` level, alphas outside
    /// `(0, 1]`, mixed dimensions, or a stack that is not nested (the first
    /// offending pair of alphas is reported).
    pub fn new(levels: Vec<(f64, CompactSet)>) -> Result<Self, FuzzyError> {
        let mut levels: Vec<Level> = levels
            .into_iter()
            .map(|(alpha, set)| Level { alpha, set })
            .collect();
        if levels.is_empty() {
            return Err(FuzzyError::NoLevels);
        }
        if let Some(l) = levels.iter().find(|l| !(l.alpha > 0.0 && l.alpha <= 1.0)) {
            return Err(FuzzyError::InvalidLevel(l.alpha));
        }
        let dim = levels[0].set.dim();
        if let Some(l) = levels.iter().find(|l| l.set.dim() != dim) {
            return Err(FuzzyError::MixedDimensions {
                alpha: l.alpha,
                expected: dim,
                found: l.set.dim(),
            });
        }
        levels.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
        let mut deduped: Vec<Level> = Vec::with_capacity(levels.len());
        for level in levels {
            match deduped.last() {
                Some(prev) if prev.alpha == level.alpha => {
                    if prev.set != level.set {
                        return Err(FuzzyError::DuplicateLevel(level.alpha));
                    }
                }
                _ => deduped.push(level),
            }
        }
        if deduped.last().map(|l| l.alpha) != Some(1.0) {
            return Err(FuzzyError::NotNormal);
        }
        for pair in deduped.windows(2) {
            if !pair[0].set.contains_set(&pair[1].set)? {
                return Err(FuzzyError::NotNested {
                    lower: pair[0].alpha,
                    upper: pair[1].alpha,
                });
            }
        }
        Ok(LevelFuzzySet {
            dim,
            levels: deduped,
        })
    }

    /// The crisp set with indicator function of `set`: a single level at 1.
    pub fn crisp(set: CompactSet) -> Self {
        LevelFuzzySet {
            dim: set.dim(),
            levels: vec![Level { alpha: 1.0, set }],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Levels in increasing alpha order; the last one has `alpha == 1`.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn alphas(&self) -> impl Iterator<Item = f64> + '_ {
        self.levels.iter().map(|l| l.alpha)
    }

    /// The support `[u]_0`, i.e. the lowest stored level.
    pub fn support(&self) -> &CompactSet {
        &self.levels[0].set
    }

    /// `[u]_α` for `α ∈ [0, 1]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<&CompactSet, FuzzyError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(FuzzyError::AlphaOutOfRange(alpha));
        }
        Ok(self.cut(alpha))
    }

    /// Cut lookup without the range check; `alpha ≤ 0` gives the support and
    /// `alpha > 1` the top level.
    pub(crate) fn cut(&self, alpha: f64) -> &CompactSet {
        let i = self.levels.partition_point(|l| l.alpha < alpha);
        &self.levels[i.min(self.levels.len() - 1)].set
    }

    /// `u(x) = max{α_i : x ∈ [u]_{α_i}}`, or 0 outside the support.
    pub fn membership(&self, x: &Point) -> Result<f64, FuzzyError> {
        let mut grade = 0.0;
        for level in &self.levels {
            if level.set.contains(x)? {
                grade = level.alpha;
            }
        }
        Ok(grade)
    }

    pub fn translate(&self, t: &Point) -> Result<Self, FuzzyError> {
        self.map_sets(|s| s.translate(t))
    }

    pub fn scale(&self, s: f64) -> Result<Self, FuzzyError> {
        self.map_sets(|set| set.scale(s))
    }

    fn map_sets(
        &self,
        f: impl Fn(&CompactSet) -> Result<CompactSet, GeometryError>,
    ) -> Result<Self, FuzzyError> {
        let levels = self
            .levels
            .iter()
            .map(|l| {
                Ok(Level {
                    alpha: l.alpha,
                    set: f(&l.set)?,
                })
            })
            .collect::<Result<Vec<_>, GeometryError>>()?;
        Ok(LevelFuzzySet {
            dim: self.dim,
            levels,
        })
    }

    /// Kernel of every stored cut. Condition (iv) only asks for each cut to
    /// be star-shaped; intersecting these gives the points that serve every
    /// level at once.
    pub fn level_kernels(&self) -> Vec<(f64, SetKernel)> {
        self.levels
            .iter()
            .map(|l| (l.alpha, SetKernel::of(&l.set)))
            .collect()
    }
}

/// Which of the two classes the element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FuzzyClass {
    /// Convex cuts (the class `E^m`).
    FuzzyNumber,
    /// Star-shaped cuts (the class `S^m`), not all convex.
    FuzzyStarShaped,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelCheck {
    pub alpha: f64,
    pub convex: bool,
    pub star_shaped: bool,
    pub degenerate_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    /// (i)
    pub normal: bool,
    /// (ii)
    pub upper_semicontinuous: bool,
    /// (iii), all cuts convex.
    pub fuzzy_convex: bool,
    /// (iv)
    pub star_shaped_cuts: bool,
    /// (v)
    pub compact_support: bool,
    /// (vi): `(∫₀¹ H([u]_α, {0})^p dα)^{1/p}` is finite.
    pub p_integrable: bool,
    pub support_p_norm: f64,
    pub p: f64,
    pub class: FuzzyClass,
    pub levels: Vec<LevelCheck>,
}

impl ClassificationReport {
    /// Conditions for a fuzzy star-shaped number hold; implied by `FuzzyNumber`.
    pub fn is_star_shaped_number(&self) -> bool {
        self.normal && self.upper_semicontinuous && self.star_shaped_cuts && self.compact_support
    }

    pub fn is_fuzzy_number(&self) -> bool {
        self.normal && self.upper_semicontinuous && self.fuzzy_convex && self.compact_support
    }
}

/// Evaluates conditions (i)–(vi) on a stored element and assigns its class.
///
/// (i), (ii) and (v) hold by construction of [`LevelFuzzySet`]; (iii) and
/// (iv) are checked cut by cut.
pub fn classify(u: &LevelFuzzySet, p: PExponent) -> ClassificationReport {
    let levels: Vec<LevelCheck> = u
        .levels
        .iter()
        .map(|l| {
            let kernel = SetKernel::of(&l.set);
            LevelCheck {
                alpha: l.alpha,
                convex: is_convex(&l.set),
                star_shaped: !kernel.is_empty(),
                degenerate_kernel: matches!(
                    kernel,
                    SetKernel::Polygon(PolygonKernel::Degenerate(_))
                ),
            }
        })
        .collect();
    let support_p_norm = p_mean_norm(u, p);
    let mut report = ClassificationReport {
        normal: true,
        upper_semicontinuous: true,
        fuzzy_convex: levels.iter().all(|l| l.convex),
        star_shaped_cuts: levels.iter().all(|l| l.star_shaped),
        compact_support: true,
        p_integrable: support_p_norm.is_finite(),
        support_p_norm,
        p: p.value(),
        class: FuzzyClass::Neither,
        levels,
    };
    report.class = if report.is_fuzzy_number() {
        FuzzyClass::FuzzyNumber
    } else if report.is_star_shaped_number() {
        FuzzyClass::FuzzyStarShaped
    } else {
        FuzzyClass::Neither
    };
    report
}
