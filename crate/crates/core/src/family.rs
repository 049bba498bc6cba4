//! Precompactness diagnostics over finite families.
//!
//! A set `U` is precompact under `d_p` exactly when it is uniformly p-mean
//! bounded and p-mean equi-left-continuous. Both criteria are evaluated here
//! on a finite sample of `U` and a finite grid of shifts `h`, so a passing
//! report is numerical evidence, never a proof.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::fuzzy::LevelFuzzySet;
use crate::geometry::{dimension_mismatch, Estimate};
use crate::metric::{
    check_grid, check_shift, dp_distance, left_continuity_modulus, p_mean_norm, MetricError,
    PExponent,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("family is empty")]
    Empty,
    #[error("epsilon must be positive, got {0}")]
    InvalidEpsilon(f64),
    #[error("bound threshold must be a non-negative number, got {0}")]
    InvalidThreshold(f64),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

const EVIDENCE_NOTE: &str = "numerical evidence only: criteria checked on a finite sample of \
    the family and a finite grid of shifts h; this is not a proof of precompactness";

fn check_family(family: &[LevelFuzzySet]) -> Result<(), FamilyError> {
    let first = family.first().ok_or(FamilyError::Empty)?;
    if let Some(u) = family.iter().find(|u| u.dim() != first.dim()) {
        return Err(MetricError::from(dimension_mismatch(first.dim(), u.dim())).into());
    }
    Ok(())
}

/// The least `M` with `d_p(u, 0̂) ≤ M` for every member.
pub fn uniform_bound(family: &[LevelFuzzySet], p: PExponent) -> Result<f64, FamilyError> {
    check_family(family)?;
    Ok(family
        .par_iter()
        .map(|u| p_mean_norm(u, p))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max))
}

/// Supremum of the left-continuity modulus at shift `h` over the family.
pub fn equi_modulus(
    family: &[LevelFuzzySet],
    h: f64,
    p: PExponent,
    spacing: f64,
) -> Result<Estimate, FamilyError> {
    check_family(family)?;
    check_shift(h)?;
    let moduli = family
        .par_iter()
        .map(|u| left_continuity_modulus(u, h, p, spacing))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(moduli
        .into_iter()
        .fold(Estimate::exact(0.0), |acc, m| Estimate {
            value: acc.value.max(m.value),
            error_bound: acc.error_bound.max(m.error_bound),
        }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquiRow {
    pub h: f64,
    /// Supremum over members of the modulus at `h`.
    pub modulus: f64,
    pub error_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    ConsistentWithPrecompact,
    BoundViolated { threshold: f64, bound: f64 },
    EquiViolated { h: f64, value: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thresholds {
    pub bound_threshold: f64,
    pub eps: f64,
    /// The grid shift at which equi-left-continuity is judged (the smallest).
    pub criterion_h: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub size: usize,
    pub p: PExponent,
    #[serde(rename = "bound_M")]
    pub bound_m: f64,
    pub bound_ok: bool,
    pub equi_table: Vec<EquiRow>,
    pub equi_ok: bool,
    pub verdict: Verdict,
    pub thresholds: Thresholds,
    pub note: &'static str,
}

impl FamilyReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::ConsistentWithPrecompact
    }
}

/// Evaluates both precompactness criteria on `family`.
///
/// Criterion (i) passes when the uniform bound is at most `bound_threshold`.
/// Criterion (ii) passes when the family modulus at the smallest grid shift
/// is below `eps`; the full table over `h_grid` is attached so a `(eps, δ)`
/// pair can be read off. When both fail the bound violation is reported.
pub fn precompactness_report(
    family: &[LevelFuzzySet],
    p: PExponent,
    h_grid: &[f64],
    bound_threshold: f64,
    eps: f64,
    spacing: f64,
) -> Result<FamilyReport, FamilyError> {
    check_family(family)?;
    check_grid(h_grid)?;
    if !(eps > 0.0) {
        return Err(FamilyError::InvalidEpsilon(eps));
    }
    if !(bound_threshold >= 0.0) {
        return Err(FamilyError::InvalidThreshold(bound_threshold));
    }
    let bound_m = uniform_bound(family, p)?;
    let equi_table = h_grid
        .iter()
        .map(|&h| {
            let m = equi_modulus(family, h, p, spacing)?;
            Ok(EquiRow {
                h,
                modulus: m.value,
                error_bound: m.error_bound,
            })
        })
        .collect::<Result<Vec<_>, FamilyError>>()?;
    let first = &equi_table[0];
    let bound_ok = bound_m <= bound_threshold;
    let equi_ok = first.modulus < eps;
    let verdict = if !bound_ok {
        Verdict::BoundViolated {
            threshold: bound_threshold,
            bound: bound_m,
        }
    } else if !equi_ok {
        Verdict::EquiViolated {
            h: first.h,
            value: first.modulus,
        }
    } else {
        Verdict::ConsistentWithPrecompact
    };
    Ok(FamilyReport {
        size: family.len(),
        p,
        bound_m,
        bound_ok,
        thresholds: Thresholds {
            bound_threshold,
            eps,
            criterion_h: first.h,
        },
        equi_table,
        equi_ok,
        verdict,
        note: EVIDENCE_NOTE,
    })
}

/// Symmetric matrix of `d_p` values with a zero diagonal.
pub fn pairwise_distances(
    family: &[LevelFuzzySet],
    p: PExponent,
    spacing: f64,
) -> Result<Vec<Vec<f64>>, FamilyError> {
    check_family(family)?;
    let n = family.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let values = pairs
        .par_iter()
        .map(|&(i, j)| dp_distance(&family[i], &family[j], p, spacing).map(|e| e.value))
        .collect::<Result<Vec<_>, _>>()?;
    let mut matrix = vec![vec![0.0; n]; n];
    for (&(i, j), d) in pairs.iter().zip(values) {
        matrix[i][j] = d;
        matrix[j][i] = d;
    }
    Ok(matrix)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assignment {
    pub member: usize,
    pub representative: usize,
    pub distance: f64,
}

/// A finite ε-net: every member lies within `eps` of its representative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsNet {
    pub eps: f64,
    /// Member indices, in selection order.
    pub representatives: Vec<usize>,
    pub assignment: Vec<Assignment>,
}

impl EpsNet {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn radius(&self) -> f64 {
        self.assignment
            .iter()
            .map(|a| a.distance)
            .fold(0.0, f64::max)
    }
}

/// Farthest-point traversal from member 0, stopped once every member is
/// within `eps` of a representative.
///
/// The traversal order does not depend on `eps`, so a larger `eps` yields a
/// prefix of the representatives chosen for a smaller one. Ties go to the
/// lowest index, both when picking the next representative and when
/// assigning members.
pub fn greedy_epsilon_net(
    family: &[LevelFuzzySet],
    eps: f64,
    p: PExponent,
    spacing: f64,
) -> Result<EpsNet, FamilyError> {
    check_family(family)?;
    if !(eps > 0.0) {
        return Err(FamilyError::InvalidEpsilon(eps));
    }
    let distances_from = |r: usize| {
        family
            .par_iter()
            .map(|u| dp_distance(&family[r], u, p, spacing).map(|e| e.value))
            .collect::<Result<Vec<_>, _>>()
    };
    let mut representatives = vec![0];
    let mut nearest = distances_from(0)?;
    let mut owner = vec![0usize; family.len()];
    loop {
        let (far, far_dist) =
            nearest
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |best, (i, &d)| {
                    if d > best.1 {
                        (i, d)
                    } else {
                        best
                    }
                });
        if far_dist <= eps {
            break;
        }
        representatives.push(far);
        for (k, d) in distances_from(far)?.into_iter().enumerate() {
            if d < nearest[k] || (d == nearest[k] && far < owner[k]) {
                nearest[k] = d;
                owner[k] = far;
            }
        }
    }
    let assignment = nearest
        .into_iter()
        .zip(owner)
        .enumerate()
        .map(|(member, (distance, representative))| Assignment {
            member,
            representative,
            distance,
        })
        .collect();
    Ok(EpsNet {
        eps,
        representatives,
        assignment,
    })
}
