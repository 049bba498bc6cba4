//! Fuzzy star-shaped numbers on ℝ¹ and ℝ² under the `d_p` metric.
//!
//! A fuzzy set is stored as a finite, descending stack of α-cuts
//! ([`fuzzy::LevelFuzzySet`]); every cut is a nonempty compact set, either a
//! closed interval or a simple polygon ([`geometry::CompactSet`]). On this
//! step representation the `d_p` distance, the p-mean norm and the p-mean
//! left-continuity modulus are exact sums; polygon Hausdorff distances carry
//! a certified sampling error bound.
//!
//! [`family`] evaluates the two precompactness criteria (uniform p-mean
//! boundedness, p-mean equi-left-continuity) over finite families and builds
//! greedy ε-nets. [`io`] holds the JSON document format and [`cli`] the
//! command-line front end.

// `!(x > 0.0)` is the NaN-rejecting form used by every validator.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod family;
pub mod fuzzy;
pub mod geometry;
pub mod io;
pub mod metric;

/// Absolute tolerance shared by every collinearity and containment predicate.
pub const TOLERANCE: f64 = 1e-9;

pub use family::{
    equi_modulus, greedy_epsilon_net, pairwise_distances, precompactness_report, uniform_bound,
    Assignment, EpsNet, EquiRow, FamilyError, FamilyReport, Verdict,
};
pub use fuzzy::{classify, ClassificationReport, FuzzyClass, FuzzyError, Level, LevelFuzzySet};
pub use geometry::{
    directed_hausdorff, hausdorff, is_convex, is_star_shaped, max_norm_on_set,
    point_to_set_distance, polygon_kernel, CompactSet, Estimate, GeometryError, Interval, Point,
    Point2, Polygon, PolygonKernel, SetKernel,
};
pub use metric::{
    dp_distance, dp_distance_quadrature, find_delta, left_continuity_modulus,
    left_continuity_modulus_quadrature, merged_alphas, p_mean_norm, p_mean_norm_quadrature,
    CutFunction, LinearIntervalFuzzy, MetricError, ModulusCurve, PExponent,
};
