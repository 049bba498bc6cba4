//! Test-only oracles and generators.
//!
//! The oracles here recompute quantities by brute force (dense grids, Riemann
//! sums, sampled visibility) without calling the library routines they are
//! used to check.
#![allow(dead_code)]

use fuzzy_star::{CompactSet, Interval, LevelFuzzySet, Point2, Polygon};
use proptest::prelude::*;
use rand::Rng;

// ---------------------------------------------------------------------------
// Brute-force geometry
// ---------------------------------------------------------------------------

/// Even-odd ray casting, independent of the library implementation.
pub fn naive_inside(vertices: &[Point2], q: Point2) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if (a.y > q.y) != (b.y > q.y) && q.x < a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y) {
            inside = !inside;
        }
    }
    inside
}

pub fn naive_segment_distance(q: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let t = (((q.x - a.x) * dx + (q.y - a.y) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    ((q.x - a.x - t * dx).powi(2) + (q.y - a.y - t * dy).powi(2)).sqrt()
}

pub fn naive_polygon_distance(vertices: &[Point2], q: Point2) -> f64 {
    let n = vertices.len();
    let d = (0..n)
        .map(|i| naive_segment_distance(q, vertices[i], vertices[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min);
    if d < 1e-9 || naive_inside(vertices, q) {
        0.0
    } else {
        d
    }
}

/// Dense lattice over the bounding box of `vertices`, kept if inside.
pub fn naive_polygon_grid(vertices: &[Point2], pitch: f64) -> Vec<Point2> {
    let (mut lo, mut hi) = (vertices[0], vertices[0]);
    for v in vertices {
        lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    let nx = ((hi.x - lo.x) / pitch).ceil() as usize;
    let ny = ((hi.y - lo.y) / pitch).ceil() as usize;
    let mut out = Vec::new();
    for i in 0..=nx {
        for j in 0..=ny {
            let q = Point2::new(
                (lo.x + i as f64 * pitch).min(hi.x),
                (lo.y + j as f64 * pitch).min(hi.y),
            );
            if naive_polygon_distance(vertices, q) == 0.0 {
                out.push(q);
            }
        }
    }
    out
}

/// Grid oracle for `H*(A, B)` between filled polygons.
pub fn grid_directed_hausdorff_polygons(a: &Polygon, b: &Polygon, pitch: f64) -> f64 {
    naive_polygon_grid(a.vertices(), pitch)
        .into_iter()
        .map(|q| naive_polygon_distance(b.vertices(), q))
        .fold(0.0, f64::max)
}

fn interval_grid(i: &Interval, pitch: f64) -> Vec<f64> {
    let n = ((i.b - i.a) / pitch).ceil().max(1.0) as usize;
    (0..=n).map(|k| (i.a + k as f64 * pitch).min(i.b)).collect()
}

/// Grid oracle for `H(A, B)` between intervals: sup-inf over dense samples
/// of both sets.
pub fn grid_hausdorff_intervals(a: &Interval, b: &Interval, pitch: f64) -> f64 {
    let (ga, gb) = (interval_grid(a, pitch), interval_grid(b, pitch));
    let directed = |from: &[f64], to: &[f64]| {
        from.iter()
            .map(|x| {
                to.iter()
                    .map(|y| (x - y).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(&ga, &gb).max(directed(&gb, &ga))
}

/// Whether every boundary sample of `vertices` is visible from `x`,
/// checking `steps` points along each sight line.
pub fn sees_everything(vertices: &[Point2], x: Point2, boundary: &[Point2], steps: usize) -> bool {
    if naive_polygon_distance(vertices, x) > 0.0 {
        return false;
    }
    boundary.iter().all(|&y| {
        (1..steps).all(|k| {
            let t = k as f64 / steps as f64;
            let q = Point2::new(x.x + t * (y.x - x.x), x.y + t * (y.y - x.y));
            naive_polygon_distance(vertices, q) == 0.0
        })
    })
}

pub fn naive_boundary(vertices: &[Point2], per_edge: usize) -> Vec<Point2> {
    let n = vertices.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        for k in 0..per_edge {
            let t = k as f64 / per_edge as f64;
            out.push(Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Riemann-sum oracles on the step representation
// ---------------------------------------------------------------------------

/// Cut lookup by linear scan: the set of the smallest stored level ≥ alpha.
pub fn naive_cut(u: &LevelFuzzySet, alpha: f64) -> Interval {
    let level = u
        .levels()
        .iter()
        .find(|l| l.alpha >= alpha)
        .unwrap_or_else(|| u.levels().last().unwrap());
    match &level.set {
        CompactSet::Interval(i) => *i,
        CompactSet::Polygon(_) => panic!("interval oracle used on a polygon"),
    }
}

fn endpoint_hausdorff(x: Interval, y: Interval) -> f64 {
    (x.a - y.a).abs().max((x.b - y.b).abs())
}

/// Midpoint Riemann sum of `H([u]_α, [v]_α)^p` with `panels` panels.
pub fn riemann_dp(u: &LevelFuzzySet, v: &LevelFuzzySet, p: f64, panels: usize) -> f64 {
    let w = 1.0 / panels as f64;
    let sum: f64 = (0..panels)
        .map(|k| {
            let alpha = (k as f64 + 0.5) * w;
            endpoint_hausdorff(naive_cut(u, alpha), naive_cut(v, alpha)).powf(p)
        })
        .sum();
    (sum * w).powf(1.0 / p)
}

/// Midpoint Riemann sum of the left-continuity modulus integrand on `[h, 1]`.
pub fn riemann_modulus(u: &LevelFuzzySet, h: f64, p: f64, panels: usize) -> f64 {
    let w = (1.0 - h) / panels as f64;
    let sum: f64 = (0..panels)
        .map(|k| {
            let alpha = h + (k as f64 + 0.5) * w;
            endpoint_hausdorff(naive_cut(u, alpha), naive_cut(u, alpha - h)).powf(p)
        })
        .sum();
    (sum * w).powf(1.0 / p)
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

pub fn iv(a: f64, b: f64) -> CompactSet {
    Interval::new(a, b).unwrap().into()
}

pub fn crisp(a: f64, b: f64) -> LevelFuzzySet {
    LevelFuzzySet::crisp(iv(a, b))
}

pub fn crisp_point(x: f64) -> LevelFuzzySet {
    LevelFuzzySet::crisp(Interval::point(x).into())
}

pub fn polygon(raw: &[(f64, f64)]) -> Polygon {
    Polygon::new(raw.iter().map(|&p| Point2::from(p)).collect()).unwrap()
}

pub fn l_shape() -> Polygon {
    polygon(&[
        (0.0, 0.0),
        (2.0, 0.0),
        (2.0, 1.0),
        (1.0, 1.0),
        (1.0, 2.0),
        (0.0, 2.0),
    ])
}

/// Three teeth, two notches; no point sees both outer teeth.
pub fn comb() -> Polygon {
    polygon(&[
        (0.0, 0.0),
        (5.0, 0.0),
        (5.0, 3.0),
        (4.0, 3.0),
        (4.0, 1.0),
        (3.0, 1.0),
        (3.0, 3.0),
        (2.0, 3.0),
        (2.0, 1.0),
        (1.0, 1.0),
        (1.0, 3.0),
        (0.0, 3.0),
    ])
}

/// `u_n = {(n^{-p}, [0, n]), (1, [0, 1])}`: bounded in p-mean but with a
/// jump of size `n − 1` on a window of width `n^{-p}`.
pub fn spike(n: u32, p: f64) -> LevelFuzzySet {
    let a = (n as f64).powf(-p);
    LevelFuzzySet::new(vec![(a, iv(0.0, n as f64)), (1.0, iv(0.0, 1.0))]).unwrap()
}

/// Hand-integrated modulus of [`spike`]: the integrand is `n − 1` exactly on
/// `(a, a + h] ∩ [h, 1]` with `a = n^{-p}`.
pub fn spike_modulus(n: u32, h: f64, p: f64) -> f64 {
    let a = (n as f64).powf(-p);
    let width = ((a + h).min(1.0) - a.max(h)).max(0.0);
    (n as f64 - 1.0) * width.powf(1.0 / p)
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

/// A random nested step fuzzy interval with 1..=max_levels levels.
pub fn random_step_interval<R: Rng>(rng: &mut R, max_levels: usize) -> LevelFuzzySet {
    let k = rng.gen_range(1..=max_levels);
    let mut alphas: Vec<f64> = (0..k - 1).map(|_| rng.gen_range(0.01..0.99)).collect();
    alphas.push(1.0);
    alphas.sort_by(f64::total_cmp);
    alphas.dedup();
    let centre = rng.gen_range(-5.0..5.0);
    let half = rng.gen_range(0.0..1.0);
    let (mut a, mut b) = (centre - half, centre + half);
    let mut levels = Vec::new();
    for &alpha in alphas.iter().rev() {
        levels.push((alpha, iv(a, b)));
        a -= rng.gen_range(0.0..2.0);
        b += rng.gen_range(0.0..2.0);
    }
    LevelFuzzySet::new(levels).unwrap()
}

pub fn arb_step_interval() -> impl Strategy<Value = LevelFuzzySet> {
    (
        prop::collection::vec((0.01f64..0.99, 0.0f64..2.0, 0.0f64..2.0), 0..5),
        -5.0f64..5.0,
        0.0f64..1.0,
    )
        .prop_map(|(steps, centre, half)| {
            let mut steps = steps;
            steps.sort_by(|x, y| y.0.total_cmp(&x.0));
            steps.dedup_by(|x, y| x.0 == y.0);
            let (mut a, mut b) = (centre - half, centre + half);
            let mut levels = vec![(1.0, iv(a, b))];
            for (alpha, left, right) in steps {
                a -= left;
                b += right;
                levels.push((alpha, iv(a, b)));
            }
            LevelFuzzySet::new(levels).unwrap()
        })
}

/// A polygon star-shaped with respect to `centre`: vertices at sorted
/// angles with random radii.
pub fn arb_star_polygon() -> impl Strategy<Value = (Polygon, Point2)> {
    (
        prop::collection::vec((0.0f64..1.0, 0.4f64..2.0), 4..9),
        -3.0f64..3.0,
        -3.0f64..3.0,
    )
        .prop_map(|(raw, cx, cy)| {
            let n = raw.len();
            let verts = raw
                .iter()
                .enumerate()
                .map(|(i, &(jitter, r))| {
                    // angular gaps stay below π, so the centre sees every vertex
                    let theta = std::f64::consts::TAU * (i as f64 + 0.5 * jitter) / n as f64;
                    Point2::new(cx + r * theta.cos(), cy + r * theta.sin())
                })
                .collect();
            (Polygon::new(verts).unwrap(), Point2::new(cx, cy))
        })
}

/// A convex polygon inscribed in a circle.
pub fn arb_convex_polygon() -> impl Strategy<Value = Polygon> {
    (
        prop::collection::vec(0.0f64..1.0, 3..9),
        0.3f64..2.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
    )
        .prop_map(|(jitter, r, cx, cy)| {
            let n = jitter.len();
            let verts = jitter
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let theta = std::f64::consts::TAU * (i as f64 + 0.8 * j) / n as f64;
                    Point2::new(cx + r * theta.cos(), cy + r * theta.sin())
                })
                .collect();
            Polygon::new(verts).unwrap()
        })
}

/// Shrinks `set` toward `centre` by factor `s`.
pub fn shrink(set: &CompactSet, centre: Point2, s: f64) -> CompactSet {
    let back = Point2::new(-centre.x, -centre.y);
    set.translate(&back.into())
        .unwrap()
        .scale(s)
        .unwrap()
        .translate(&centre.into())
        .unwrap()
}

/// A nested polygon stack built from homothetic copies of a star polygon.
pub fn arb_polygon_fuzzy() -> impl Strategy<Value = LevelFuzzySet> {
    (
        arb_star_polygon(),
        prop::collection::vec((0.05f64..0.95, 0.5f64..0.95), 0..4),
    )
        .prop_map(|((poly, centre), steps)| {
            let mut steps = steps;
            steps.sort_by(|x, y| x.0.total_cmp(&y.0));
            steps.dedup_by(|x, y| x.0 == y.0);
            let mut set: CompactSet = poly.into();
            let mut levels = Vec::new();
            for (alpha, factor) in steps {
                levels.push((alpha, set.clone()));
                set = shrink(&set, centre, factor);
            }
            levels.push((1.0, set));
            LevelFuzzySet::new(levels).unwrap()
        })
}
