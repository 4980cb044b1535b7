use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupBall, GroupElement};

/// `n` near-uniform points on the unit sphere along a Fibonacci spiral.
pub fn fibonacci_sphere(n: usize) -> Vec<[f64; 3]> {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = 2.0 * std::f64::consts::PI * (i as f64 / golden).fract();
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

/// Radical inverse of `i` in base `base`, in [0, 1).
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut x = 0.0;
    while i > 0 {
        x += (i % base) as f64 * f;
        i /= base;
        f *= inv;
    }
    x
}

const HALTON_BASES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Halton points in the unit cube with per-dimension random shifts
/// (Cranley-Patterson rotation), deterministic in `seed`.
pub fn scrambled_halton(n: usize, dims: usize, seed: u64) -> Vec<Vec<f64>> {
    assert!(dims <= HALTON_BASES.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offsets: Vec<f64> = (0..dims).map(|_| rng.gen::<f64>()).collect();
    (0..n as u64)
        .map(|i| {
            (0..dims)
                .map(|d| (radical_inverse(i + 1, HALTON_BASES[d]) + offsets[d]).fract())
                .collect()
        })
        .collect()
}

/// Quasi-uniform probe set of `n` elements of `G`, deterministic in `seed`.
pub fn probe_elements<G: GroupElement>(n: usize, seed: u64) -> Vec<G> {
    scrambled_halton(n, G::PROBE_DIMS, seed)
        .iter()
        .map(|u| G::from_unit_cube(u))
        .collect()
}

/// Fixed scramble seed for measurement meshes, so covering radii are
/// comparable across runs and independent of the user seed.
pub const MEASUREMENT_SEED: u64 = 0x5DEECE66D;

fn coords_of<G: GroupElement>(g: &G) -> [f64; 16] {
    let mut c = [0.0; 16];
    g.write_coords(&mut c[..G::DIM]);
    c
}

/// Covering radius of `points` seen from `probes`: the largest distance
/// from a probe to its nearest point.
///
/// Scans coordinates directly, maximizing the dot product per probe; the
/// monotone `dist_from_dot` map then gives the minimum distance.
pub fn covering_radius_points<G: GroupElement>(points: &[G], probes: &[G]) -> f64 {
    assert!(!points.is_empty() && !probes.is_empty());
    let pc: Vec<[f64; 16]> = points.iter().map(coords_of).collect();
    probes
        .iter()
        .map(|probe| {
            let qc = coords_of(probe);
            let best = pc
                .iter()
                .map(|c| {
                    c[..G::DIM]
                        .iter()
                        .zip(&qc[..G::DIM])
                        .map(|(x, y)| x * y)
                        .sum::<f64>()
                })
                .fold(f64::NEG_INFINITY, f64::max);
            G::dist_from_dot(best)
        })
        .fold(0.0, f64::max)
}

/// Covering radius of a ball against `n_probes` quasi-uniform group
/// elements drawn with the fixed measurement seed.
pub fn covering_radius_group<G: GroupElement>(ball: &GroupBall<G>, n_probes: usize) -> f64 {
    covering_radius_points(&ball.elements, &probe_elements::<G>(n_probes, MEASUREMENT_SEED))
}

/// Covering radius of each ball prefix `growth[0..=d]`, one entry per
/// completed level.
///
/// Streams the elements once in enumeration order, keeping the best dot
/// product per probe, so the whole profile costs one points-times-probes
/// scan.
pub fn covering_radius_profile<G: GroupElement>(ball: &GroupBall<G>, probes: &[G]) -> Vec<f64> {
    assert!(!probes.is_empty());
    let qc: Vec<[f64; 16]> = probes.iter().map(coords_of).collect();
    let mut best = vec![f64::NEG_INFINITY; probes.len()];
    let mut profile = Vec::with_capacity(ball.growth.len());
    let mut next = 0;
    for (level_end, _) in ball.growth.iter().copied().zip(0u32..) {
        while next < level_end {
            let c = coords_of(&ball.elements[next]);
            for (b, q) in best.iter_mut().zip(&qc) {
                let dot: f64 = c[..G::DIM]
                    .iter()
                    .zip(&q[..G::DIM])
                    .map(|(x, y)| x * y)
                    .sum();
                if dot > *b {
                    *b = dot;
                }
            }
            next += 1;
        }
        let r = best
            .iter()
            .map(|&b| G::dist_from_dot(b))
            .fold(0.0, f64::max);
        profile.push(r);
    }
    profile
}

/// Covering radius of a point set on the unit sphere against probe
/// directions, by the same max-dot scan.
pub fn covering_radius_sphere(points: &[[f64; 3]], probes: &[[f64; 3]]) -> f64 {
    assert!(!points.is_empty() && !probes.is_empty());
    probes
        .iter()
        .map(|q| {
            let best = points
                .iter()
                .map(|p| p[0] * q[0] + p[1] * q[1] + p[2] * q[2])
                .fold(f64::NEG_INFINITY, f64::max);
            best.clamp(-1.0, 1.0).acos()
        })
        .fold(0.0, f64::max)
}
