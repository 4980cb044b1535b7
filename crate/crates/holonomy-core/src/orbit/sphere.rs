use serde::{Deserialize, Serialize};

use super::dedup::DedupIndex;
use super::mesh::{fibonacci_sphere, scrambled_halton, MEASUREMENT_SEED};
use crate::groups::Rot3;

/// Plane `{ x : normal . x = offset }` cutting the sphere in a circle
/// (a point when |offset| = 1). Normal is unit with canonical sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Plane {
    pub normal: [f64; 3],
    pub offset: f64,
}

impl Plane {
    pub fn deviation(&self, p: [f64; 3]) -> f64 {
        (self.normal[0] * p[0] + self.normal[1] * p[1] + self.normal[2] * p[2] - self.offset).abs()
    }

    pub fn max_deviation(&self, points: &[[f64; 3]]) -> f64 {
        points.iter().map(|&p| self.deviation(p)).fold(0.0, f64::max)
    }
}

/// Shape of an orbit's closure on the sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Confinement {
    Point,
    Circles { planes: Vec<Plane> },
    Full,
}

/// Orbit of a point on S^2 under words in the generators.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    /// Distinct points in first-visit order; `points[0]` is the start.
    pub points: Vec<[f64; 3]>,
    /// Word length at which each point first appeared.
    pub depths: Vec<u32>,
    /// Cumulative point count after each completed level.
    pub growth: Vec<usize>,
    pub saturated: bool,
    pub depth: u32,
    /// Against the fixed 4096-direction measurement mesh.
    pub covering_radius: f64,
    /// Covering radius after each completed level; nonincreasing.
    pub cr_by_depth: Vec<f64>,
    pub confinement: Confinement,
}

/// Orbit of a point pair on S^2 x S^2 under the componentwise action.
#[derive(Debug, Clone)]
pub struct ProductOrbitReport {
    pub points: Vec<([f64; 3], [f64; 3])>,
    pub growth: Vec<usize>,
    pub saturated: bool,
    pub depth: u32,
    /// Max metric, against 8192 quasi-uniform direction pairs.
    pub covering_radius: f64,
    /// Confinement of each factor's projection.
    pub confinement_plus: Confinement,
    pub confinement_minus: Confinement,
}

const SPHERE_PROBES: usize = 4096;
const PRODUCT_PROBES: usize = 8192;

fn unit3(p: [f64; 3]) -> [f64; 3] {
    let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    [p[0] / n, p[1] / n, p[2] / n]
}

fn sphere_angle(p: [f64; 3], q: [f64; 3]) -> f64 {
    (p[0] * q[0] + p[1] * q[1] + p[2] * q[2])
        .clamp(-1.0, 1.0)
        .acos()
}

/// BFS of the rotation action on `omega`, with per-depth covering-radius
/// snapshots against the fixed probe mesh.
pub fn orbit(
    gens: &[Rot3],
    omega: [f64; 3],
    max_depth: u32,
    max_size: usize,
    tol: f64,
) -> OrbitReport {
    let mut alphabet: Vec<Rot3> = gens.to_vec();
    alphabet.extend(gens.iter().map(Rot3::inverse));

    let probes = fibonacci_sphere(SPHERE_PROBES);
    let mut best_dot = vec![f64::NEG_INFINITY; probes.len()];
    let absorb = |p: [f64; 3], best: &mut Vec<f64>| {
        for (b, q) in best.iter_mut().zip(&probes) {
            let d = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
            if d > *b {
                *b = d;
            }
        }
    };
    let radius_of = |best: &[f64]| {
        best.iter()
            .map(|b| b.clamp(-1.0, 1.0).acos())
            .fold(0.0, f64::max)
    };

    let mut index = DedupIndex::new(3, tol);
    let start = unit3(omega);
    index.try_insert(&start);
    absorb(start, &mut best_dot);
    let mut points = vec![start];
    let mut depths = vec![0u32];
    let mut growth = vec![1usize];
    let mut cr_by_depth = vec![radius_of(&best_dot)];
    let mut saturated = false;
    let mut depth = 0;
    let mut frontier_lo = 0;

    'levels: while depth < max_depth {
        let frontier_hi = points.len();
        let mut grew = false;
        for i in frontier_lo..frontier_hi {
            for g in &alphabet {
                let next = unit3(g.act(points[i]));
                let (_, inserted) = index.try_insert(&next);
                if inserted {
                    absorb(next, &mut best_dot);
                    points.push(next);
                    depths.push(depth + 1);
                    grew = true;
                    if points.len() >= max_size {
                        break 'levels;
                    }
                }
            }
        }
        depth += 1;
        growth.push(points.len());
        cr_by_depth.push(radius_of(&best_dot));
        frontier_lo = frontier_hi;
        if !grew {
            saturated = true;
            break;
        }
    }

    let confinement = detect_confinement(&points, (tol * 10.0).max(1e-8));
    OrbitReport {
        covering_radius: radius_of(&best_dot),
        points,
        depths,
        growth,
        saturated,
        depth,
        cr_by_depth,
        confinement,
    }
}

/// Direction pairs from 4 unit-cube coordinates (cylinder-equal-area per
/// factor), used as the S^2 x S^2 measurement mesh.
fn product_probes(n: usize, seed: u64) -> Vec<([f64; 3], [f64; 3])> {
    scrambled_halton(n, 4, seed)
        .iter()
        .map(|u| {
            let dir = |z01: f64, v: f64| {
                let z = 2.0 * z01 - 1.0;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let phi = 2.0 * std::f64::consts::PI * v;
                [r * phi.cos(), r * phi.sin(), z]
            };
            (dir(u[0], u[1]), dir(u[2], u[3]))
        })
        .collect()
}

/// BFS of the componentwise action of generator pairs on `(p_plus, p_minus)`.
pub fn product_orbit(
    gens_pairs: &[(Rot3, Rot3)],
    p_plus: [f64; 3],
    p_minus: [f64; 3],
    max_size: usize,
    tol: f64,
) -> ProductOrbitReport {
    let mut alphabet: Vec<(Rot3, Rot3)> = gens_pairs.to_vec();
    alphabet.extend(
        gens_pairs
            .iter()
            .map(|(a, b)| (a.inverse(), b.inverse())),
    );

    let mut index = DedupIndex::new(6, tol);
    let start = (unit3(p_plus), unit3(p_minus));
    let key = |p: &([f64; 3], [f64; 3])| {
        [p.0[0], p.0[1], p.0[2], p.1[0], p.1[1], p.1[2]]
    };
    index.try_insert(&key(&start));
    let mut points = vec![start];
    let mut growth = vec![1usize];
    let mut saturated = false;
    let mut depth = 0;
    let mut frontier_lo = 0;

    'levels: loop {
        let frontier_hi = points.len();
        let mut grew = false;
        for i in frontier_lo..frontier_hi {
            for (ga, gb) in &alphabet {
                let next = (unit3(ga.act(points[i].0)), unit3(gb.act(points[i].1)));
                let (_, inserted) = index.try_insert(&key(&next));
                if inserted {
                    points.push(next);
                    grew = true;
                    if points.len() >= max_size {
                        break 'levels;
                    }
                }
            }
        }
        depth += 1;
        growth.push(points.len());
        frontier_lo = frontier_hi;
        if !grew {
            saturated = true;
            break;
        }
    }

    let probes = product_probes(PRODUCT_PROBES, MEASUREMENT_SEED);
    let covering_radius = probes
        .iter()
        .map(|(qa, qb)| {
            points
                .iter()
                .map(|(pa, pb)| sphere_angle(*pa, *qa).max(sphere_angle(*pb, *qb)))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);

    let plane_tol = (tol * 10.0).max(1e-8);
    let plus: Vec<[f64; 3]> = dedup_projection(points.iter().map(|p| p.0), tol);
    let minus: Vec<[f64; 3]> = dedup_projection(points.iter().map(|p| p.1), tol);
    ProductOrbitReport {
        confinement_plus: detect_confinement(&plus, plane_tol),
        confinement_minus: detect_confinement(&minus, plane_tol),
        points,
        growth,
        saturated,
        depth,
        covering_radius,
    }
}

fn dedup_projection(points: impl Iterator<Item = [f64; 3]>, tol: f64) -> Vec<[f64; 3]> {
    let mut index = DedupIndex::new(3, tol);
    let mut out = Vec::new();
    for p in points {
        if index.try_insert(&p).1 {
            out.push(p);
        }
    }
    out
}

fn canonical_plane(mut normal: [f64; 3], mut offset: f64) -> Plane {
    let n = (normal[0] * normal[0] + normal[1] * normal[1] + normal[2] * normal[2]).sqrt();
    for c in &mut normal {
        *c /= n;
    }
    offset /= n;
    let lead = normal.iter().find(|c| c.abs() > 1e-9).copied().unwrap_or(1.0);
    if lead < 0.0 {
        for c in &mut normal {
            *c = -*c;
        }
        offset = -offset;
    }
    Plane { normal, offset }
}

fn any_orthogonal(p: [f64; 3]) -> [f64; 3] {
    let v = if p[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    unit3([
        p[1] * v[2] - p[2] * v[1],
        p[2] * v[0] - p[0] * v[2],
        p[0] * v[1] - p[1] * v[0],
    ])
}

/// Plane through at most two distinct sphere points: the degenerate circle
/// at `p` for one, a great circle through both for two.
fn plane_through_few(points: &[[f64; 3]]) -> Plane {
    match points {
        [p] => canonical_plane(*p, 1.0),
        [p, q] => {
            let cross = [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ];
            let norm = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
            if norm > 1e-8 {
                canonical_plane(cross, 0.0)
            } else if p[0] * q[0] + p[1] * q[1] + p[2] * q[2] > 0.0 {
                // Coincident up to noise.
                canonical_plane(*p, 1.0)
            } else {
                canonical_plane(any_orthogonal(*p), 0.0)
            }
        }
        _ => unreachable!(),
    }
}

/// Evenly spaced subsample of lexicographically sorted points; the sort
/// makes the candidate set independent of enumeration order.
fn plane_candidates(points: &[[f64; 3]]) -> Vec<Plane> {
    const SUBSAMPLE: usize = 32;
    let mut sorted: Vec<[f64; 3]> = points.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let sub: Vec<[f64; 3]> = if sorted.len() <= SUBSAMPLE {
        sorted
    } else {
        (0..SUBSAMPLE)
            .map(|k| sorted[k * (sorted.len() - 1) / (SUBSAMPLE - 1)])
            .collect()
    };

    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for i in 0..sub.len() {
        for j in i + 1..sub.len() {
            for k in j + 1..sub.len() {
                let (a, b, c) = (sub[i], sub[j], sub[k]);
                let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
                let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
                let n = [
                    u[1] * v[2] - u[2] * v[1],
                    u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0],
                ];
                let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
                if len < 1e-6 {
                    continue;
                }
                let plane = canonical_plane(
                    n,
                    (n[0] * (a[0] + b[0] + c[0]) + n[1] * (a[1] + b[1] + c[1])
                        + n[2] * (a[2] + b[2] + c[2]))
                        / 3.0,
                );
                let round = |x: f64| (x * 1e4).round() as i64;
                if seen.insert([
                    round(plane.normal[0]),
                    round(plane.normal[1]),
                    round(plane.normal[2]),
                    round(plane.offset),
                ]) {
                    out.push(plane);
                }
            }
        }
    }
    out
}

/// Least-squares refit: centroid plus smallest principal direction of the
/// inliers, recovered by inverse power iteration on the 3x3 covariance.
fn refine_plane(points: &[[f64; 3]], seedling: &Plane) -> Plane {
    if points.len() < 3 {
        return *seedling;
    }
    let n = points.len() as f64;
    let mut m = [0.0; 3];
    for p in points {
        for d in 0..3 {
            m[d] += p[d];
        }
    }
    for c in &mut m {
        *c /= n;
    }
    let mut cov = [[0.0; 3]; 3];
    for p in points {
        let d = [p[0] - m[0], p[1] - m[1], p[2] - m[2]];
        for r in 0..3 {
            for c in 0..3 {
                cov[r][c] += d[r] * d[c];
            }
        }
    }
    let shift = (cov[0][0] + cov[1][1] + cov[2][2]) * 1e-12 + 1e-300;
    for d in 0..3 {
        cov[d][d] += shift;
    }
    let inv = crate::groups::Mat3(cov).inverse();
    let mut v = seedling.normal;
    for _ in 0..4 {
        v = unit3(inv.matvec(v));
    }
    canonical_plane(v, v[0] * m[0] + v[1] * m[1] + v[2] * m[2])
}

fn split_by_plane(points: &[[f64; 3]], plane: &Plane, tol: f64) -> (usize, Vec<[f64; 3]>) {
    let mut inliers = 0;
    let mut residual = Vec::new();
    for &p in points {
        if plane.deviation(p) <= tol {
            inliers += 1;
        } else {
            residual.push(p);
        }
    }
    (inliers, residual)
}

fn best_plane(points: &[[f64; 3]], tol: f64) -> Option<(Plane, Vec<[f64; 3]>)> {
    if points.len() <= 2 {
        let plane = plane_through_few(points);
        return (plane.max_deviation(points) <= tol).then(|| (plane, Vec::new()));
    }
    let mut best: Option<(usize, Plane)> = None;
    for cand in plane_candidates(points) {
        let (inliers, _) = split_by_plane(points, &cand, tol);
        if best.as_ref().is_none_or(|(n, _)| inliers > *n) {
            best = Some((inliers, cand));
        }
    }
    let (_, cand) = best?;
    let inlier_pts: Vec<[f64; 3]> = points
        .iter()
        .copied()
        .filter(|&p| cand.deviation(p) <= tol)
        .collect();
    let refined = refine_plane(&inlier_pts, &cand);
    let keep = if refined.max_deviation(&inlier_pts) <= cand.max_deviation(&inlier_pts) {
        refined
    } else {
        cand
    };
    let (_, residual) = split_by_plane(points, &keep, tol);
    Some((keep, residual))
}

/// Tests whether the points all coincide, lie on at most two circles, or
/// neither. Candidate planes come from subsample triples; every candidate
/// is verified against the full set, so a `Circles` result is exact up to
/// `tol` while `Full` only means no two planes were found.
pub fn detect_confinement(points: &[[f64; 3]], tol: f64) -> Confinement {
    assert!(!points.is_empty());
    if points.len() == 1 {
        return Confinement::Point;
    }
    let Some((first, residual)) = best_plane(points, tol) else {
        return Confinement::Full;
    };
    if residual.is_empty() {
        return Confinement::Circles { planes: vec![first] };
    }
    if residual.len() > points.len() / 2 {
        // A plane missing most points is noise, not structure.
        return Confinement::Full;
    }
    match best_plane(&residual, tol) {
        Some((second, rest)) if rest.is_empty() => Confinement::Circles {
            planes: vec![first, second],
        },
        _ => Confinement::Full,
    }
}
