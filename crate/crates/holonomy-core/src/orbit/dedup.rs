//! Spatial-hash deduplication of points in a low-dimensional coordinate
//! space.
//!
//! Cells of side tol/4 are keyed by FNV over the quantized coordinates.
//! Lookup probes the candidate's cell plus the neighbor cells along every
//! dimension whose coordinate sits near a cell boundary, then confirms by
//! exact distance. Numerical copies of one point differ by far less than the
//! boundary margin, so a match is never missed for them, and the distance
//! confirmation means distinct points are never merged.

use std::collections::HashMap;

// Fraction of a cell treated as "near the boundary". Must exceed the
// coordinate noise of duplicate points divided by the cell size.
const BOUNDARY_MARGIN: f64 = 0.02;
// Probing 2^k alternate keys caps at k flagged dimensions.
const MAX_BOUNDARY_DIMS: usize = 8;

pub struct DedupIndex {
    dim: usize,
    cell: f64,
    tol: f64,
    coords: Vec<f64>,
    buckets: HashMap<u64, Vec<u32>>,
}

fn fnv1a(key: &[i64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for v in key {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

impl DedupIndex {
    pub fn new(dim: usize, tol: f64) -> DedupIndex {
        assert!(dim > 0 && dim <= 16);
        assert!(tol > 0.0);
        DedupIndex {
            dim,
            cell: tol / 4.0,
            tol,
            coords: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, id: u32) -> &[f64] {
        let i = id as usize * self.dim;
        &self.coords[i..i + self.dim]
    }

    fn quantize(&self, x: &[f64]) -> (Vec<i64>, Vec<(usize, i64)>) {
        let mut key = Vec::with_capacity(self.dim);
        let mut boundary = Vec::new();
        for (i, &v) in x.iter().enumerate() {
            let scaled = v / self.cell;
            let q = scaled.round();
            let frac = scaled - q;
            if frac.abs() >= 0.5 - BOUNDARY_MARGIN {
                boundary.push((i, if frac > 0.0 { 1 } else { -1 }));
            }
            key.push(q as i64);
        }
        (key, boundary)
    }

    fn dist_sq(&self, id: u32, x: &[f64]) -> f64 {
        self.point(id)
            .iter()
            .zip(x)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    /// Nearest already-stored point within tol, if any.
    pub fn find(&self, x: &[f64]) -> Option<u32> {
        assert_eq!(x.len(), self.dim);
        let (key, boundary) = self.quantize(x);
        let nb = boundary.len().min(MAX_BOUNDARY_DIMS);
        let mut best: Option<(f64, u32)> = None;
        let mut probe = key.clone();
        for mask in 0u32..(1 << nb) {
            probe.copy_from_slice(&key);
            for (bit, &(dim, dir)) in boundary[..nb].iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    probe[dim] += dir;
                }
            }
            if let Some(bucket) = self.buckets.get(&fnv1a(&probe)) {
                for &id in bucket {
                    let d2 = self.dist_sq(id, x);
                    if d2 <= self.tol * self.tol && best.is_none_or(|(b, _)| d2 < b) {
                        best = Some((d2, id));
                    }
                }
            }
        }
        best.map(|(_, id)| id)
    }

    /// Inserts under the canonical (unprobed) key, returning the new id.
    pub fn insert(&mut self, x: &[f64]) -> u32 {
        assert_eq!(x.len(), self.dim);
        let id = self.len() as u32;
        let (key, _) = self.quantize(x);
        self.coords.extend_from_slice(x);
        self.buckets.entry(fnv1a(&key)).or_default().push(id);
        id
    }

    /// find-or-insert; the flag is true when the point was new.
    pub fn try_insert(&mut self, x: &[f64]) -> (u32, bool) {
        match self.find(x) {
            Some(id) => (id, false),
            None => (self.insert(x), true),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_duplicates_collapse() {
        let mut idx = DedupIndex::new(3, 1e-9);
        let (a, fresh) = idx.try_insert(&[0.1, 0.2, 0.3]);
        assert!(fresh);
        let (b, fresh) = idx.try_insert(&[0.1, 0.2, 0.3]);
        assert!(!fresh);
        assert_eq!(a, b);
        assert_eq!(idx.len(), 1);
    }

    #[test]
    fn noise_below_margin_collapses_even_at_cell_boundaries() {
        let tol = 1e-9;
        let cell = tol / 4.0;
        let mut idx = DedupIndex::new(2, tol);
        // First coordinate exactly on a cell boundary; copies straddle it.
        let x = 1000.5 * cell;
        idx.try_insert(&[x - 1e-13, 0.0]);
        let (_, fresh) = idx.try_insert(&[x + 1e-13, 0.0]);
        assert!(!fresh);
        assert_eq!(idx.len(), 1);
    }

    #[test]
    fn separated_points_stay_distinct() {
        let tol = 1e-9;
        let mut idx = DedupIndex::new(3, tol);
        idx.try_insert(&[0.0, 0.0, 0.0]);
        let (_, fresh) = idx.try_insert(&[10.0 * tol, 0.0, 0.0]);
        assert!(fresh);
        // Just over tol in one coordinate.
        let (_, fresh) = idx.try_insert(&[1.5 * tol, 0.0, 0.0]);
        assert!(fresh);
        assert_eq!(idx.len(), 3);
    }

    #[test]
    fn dense_grid_has_no_false_merges() {
        let tol = 1e-6;
        let mut idx = DedupIndex::new(2, tol);
        let spacing = 3.0 * tol;
        for i in 0..20 {
            for j in 0..20 {
                let (_, fresh) = idx.try_insert(&[i as f64 * spacing, j as f64 * spacing]);
                assert!(fresh);
            }
        }
        assert_eq!(idx.len(), 400);
        for i in 0..20 {
            for j in 0..20 {
                let p = [i as f64 * spacing + 1e-9, j as f64 * spacing - 1e-9];
                let (_, fresh) = idx.try_insert(&p);
                assert!(!fresh, "({i},{j}) should match its grid point");
            }
        }
    }

    #[test]
    fn stored_points_are_retrievable() {
        let mut idx = DedupIndex::new(4, 1e-9);
        let p = [0.25, -0.5, 0.125, 0.9];
        let (id, _) = idx.try_insert(&p);
        assert_eq!(idx.point(id), &p);
    }
}
