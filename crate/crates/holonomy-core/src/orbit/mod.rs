//! Breadth-first enumeration of group balls and orbits, covering-radius
//! measurement, confinement detection, and word search toward a target
//! element.

mod approx;
mod ball;
mod dedup;
mod mesh;
mod sphere;

pub use approx::{approximate_element, eval_word, ApproxResult};
pub use ball::{group_ball, GroupBall};
pub use dedup::DedupIndex;
pub use mesh::{
    covering_radius_group, covering_radius_points, covering_radius_profile,
    covering_radius_sphere, fibonacci_sphere, probe_elements, scrambled_halton, MEASUREMENT_SEED,
};
pub use sphere::{
    detect_confinement, orbit, product_orbit, Confinement, OrbitReport, Plane, ProductOrbitReport,
};

use crate::groups::{phi_cover, psi_pair, Rot3, Rot4, C64, SU2, U2Mat};

/// The operations enumeration needs from a group, plus a flat coordinate
/// chart used for hashing and for dot-product distance evaluation.
pub trait GroupElement: Clone {
    /// Coordinate count; at most 16.
    const DIM: usize;
    /// Unit-cube dimensions consumed per quasi-random probe.
    const PROBE_DIMS: usize;
    /// Ratio of coordinate-space distance to group distance near the
    /// identity, for sizing coordinate-space cells from group tolerances.
    const COORD_PER_DIST: f64;

    fn identity() -> Self;
    fn compose(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Pulls the element back onto the group manifold when drift warrants.
    fn renormalize(&mut self);
    fn write_coords(&self, out: &mut [f64]);
    /// Group distance recovered from the coordinate dot product.
    fn dist_from_dot(dot: f64) -> f64;
    /// Quasi-uniform element from `PROBE_DIMS` unit-cube samples.
    fn from_unit_cube(u: &[f64]) -> Self;

    fn dist(&self, rhs: &Self) -> f64 {
        let mut a = [0.0; 16];
        let mut b = [0.0; 16];
        self.write_coords(&mut a[..Self::DIM]);
        rhs.write_coords(&mut b[..Self::DIM]);
        let dot = a[..Self::DIM]
            .iter()
            .zip(&b[..Self::DIM])
            .map(|(x, y)| x * y)
            .sum();
        Self::dist_from_dot(dot)
    }
}

/// Unit quaternion from three unit-cube coordinates, area-correct.
fn quaternion_from_cube(u: &[f64]) -> [f64; 4] {
    let (u1, u2, u3) = (u[0].clamp(0.0, 1.0), u[1], u[2]);
    let (r1, r2) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (t2, t3) = (
        2.0 * std::f64::consts::PI * u2,
        2.0 * std::f64::consts::PI * u3,
    );
    [r1 * t2.sin(), r1 * t2.cos(), r2 * t3.sin(), r2 * t3.cos()]
}

impl GroupElement for Rot3 {
    const DIM: usize = 9;
    const PROBE_DIMS: usize = 3;
    // Frobenius vs relative angle.
    const COORD_PER_DIST: f64 = std::f64::consts::SQRT_2;

    fn identity() -> Rot3 {
        Rot3(crate::groups::Mat3::IDENTITY)
    }

    fn compose(&self, rhs: &Rot3) -> Rot3 {
        Rot3::compose(self, rhs)
    }

    fn inverse(&self) -> Rot3 {
        Rot3::inverse(self)
    }

    fn renormalize(&mut self) {
        Rot3::renormalize(self);
    }

    fn write_coords(&self, out: &mut [f64]) {
        for i in 0..3 {
            out[3 * i..3 * i + 3].copy_from_slice(&self.0 .0[i]);
        }
    }

    // dot = tr(r^T s); relative rotation angle.
    fn dist_from_dot(dot: f64) -> f64 {
        ((dot - 1.0) / 2.0).clamp(-1.0, 1.0).acos()
    }

    fn from_unit_cube(u: &[f64]) -> Rot3 {
        let q = SU2::from_bcoords(quaternion_from_cube(u));
        phi_cover(&q)
    }
}

impl GroupElement for Rot4 {
    const DIM: usize = 16;
    const PROBE_DIMS: usize = 6;
    const COORD_PER_DIST: f64 = std::f64::consts::SQRT_2;

    fn identity() -> Rot4 {
        Rot4(crate::groups::Mat4::IDENTITY)
    }

    fn compose(&self, rhs: &Rot4) -> Rot4 {
        Rot4::compose(self, rhs)
    }

    fn inverse(&self) -> Rot4 {
        Rot4::inverse(self)
    }

    fn renormalize(&mut self) {
        Rot4::renormalize(self);
    }

    fn write_coords(&self, out: &mut [f64]) {
        for i in 0..4 {
            out[4 * i..4 * i + 4].copy_from_slice(&self.0 .0[i]);
        }
    }

    // Frobenius distance over sqrt(2): sqrt((8 - 2 dot) / 2).
    fn dist_from_dot(dot: f64) -> f64 {
        (4.0 - dot).max(0.0).sqrt()
    }

    fn from_unit_cube(u: &[f64]) -> Rot4 {
        let a = SU2::from_bcoords(quaternion_from_cube(&u[..3]));
        let b = SU2::from_bcoords(quaternion_from_cube(&u[3..6]));
        psi_pair(&a, &b)
    }
}

impl GroupElement for SU2 {
    const DIM: usize = 4;
    const PROBE_DIMS: usize = 3;
    const COORD_PER_DIST: f64 = 1.0;

    fn identity() -> SU2 {
        SU2::IDENTITY
    }

    fn compose(&self, rhs: &SU2) -> SU2 {
        SU2::compose(self, rhs)
    }

    fn inverse(&self) -> SU2 {
        SU2::inverse(self)
    }

    fn renormalize(&mut self) {
        SU2::renormalize(self);
    }

    fn write_coords(&self, out: &mut [f64]) {
        out.copy_from_slice(&self.bcoords());
    }

    // Euclidean distance on the unit 3-sphere chart.
    fn dist_from_dot(dot: f64) -> f64 {
        (2.0 - 2.0 * dot).max(0.0).sqrt()
    }

    fn from_unit_cube(u: &[f64]) -> SU2 {
        SU2::from_bcoords(quaternion_from_cube(u))
    }
}

impl GroupElement for U2Mat {
    const DIM: usize = 8;
    const PROBE_DIMS: usize = 4;
    const COORD_PER_DIST: f64 = std::f64::consts::SQRT_2;

    fn identity() -> U2Mat {
        U2Mat::IDENTITY
    }

    fn compose(&self, rhs: &U2Mat) -> U2Mat {
        U2Mat::compose(self, rhs)
    }

    fn inverse(&self) -> U2Mat {
        U2Mat::inverse(self)
    }

    fn renormalize(&mut self) {
        U2Mat::renormalize(self);
    }

    fn write_coords(&self, out: &mut [f64]) {
        let mut k = 0;
        for i in 0..2 {
            for j in 0..2 {
                out[k] = self.0 .0[i][j].re;
                out[k + 1] = self.0 .0[i][j].im;
                k += 2;
            }
        }
    }

    // Frobenius distance over sqrt(2): sqrt((4 - 2 dot) / 2).
    fn dist_from_dot(dot: f64) -> f64 {
        (2.0 - dot).max(0.0).sqrt()
    }

    // Central phase in [0, pi) times a special unitary covers the group.
    fn from_unit_cube(u: &[f64]) -> U2Mat {
        let s = SU2::from_bcoords(quaternion_from_cube(&u[..3]));
        let phase = C64::new(0.0, std::f64::consts::PI * u[3]).exp();
        U2Mat(s.matrix().scale(phase))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::c_theta;

    #[test]
    fn trait_dist_matches_native_metrics() {
        let a = c_theta(0.4);
        let b = c_theta(1.1);
        let d = GroupElement::dist(&a, &b);
        assert!((d - 0.7).abs() < 1e-12);

        let u = SU2::from_bcoords([0.5, 0.5, 0.5, 0.5]);
        let v = SU2::IDENTITY;
        let expect = {
            let db: f64 = u
                .bcoords()
                .iter()
                .zip(v.bcoords())
                .map(|(x, y)| (x - y) * (x - y))
                .sum();
            db.sqrt()
        };
        assert!((GroupElement::dist(&u, &v) - expect).abs() < 1e-12);
    }

    #[test]
    fn probes_are_valid_group_elements() {
        for k in 0..32 {
            let t = k as f64 / 32.0;
            let u = [t, (t * 7.3) % 1.0, (t * 3.1) % 1.0, (t * 1.7) % 1.0, t, 1.0 - t];
            let r: Rot3 = GroupElement::from_unit_cube(&u[..3]);
            assert!(r.0.orthonormality_error() < 1e-12);
            let q: Rot4 = GroupElement::from_unit_cube(&u[..6]);
            assert!(q.0.orthonormality_error() < 1e-12);
            let s: U2Mat = GroupElement::from_unit_cube(&u[..4]);
            assert!(s.0.unitarity_error() < 1e-12);
        }
    }

    #[test]
    fn identity_round_trips_through_coords() {
        let mut out = [0.0; 16];
        let e: Rot4 = GroupElement::identity();
        e.write_coords(&mut out);
        let dot: f64 = out.iter().map(|x| x * x).sum();
        assert_eq!(dot, 4.0);
        assert_eq!(Rot4::dist_from_dot(dot), 0.0);
    }
}
