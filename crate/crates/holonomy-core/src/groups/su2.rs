//! SU(2) and its 2-to-1 cover of SO(3).
//!
//! An element is stored as the first column `(alpha, beta)` of
//! `[[alpha, -conj(beta)], [beta, conj(alpha)]]`. The real coordinate vector
//! `b = (Re alpha, Im alpha, Re beta, Im beta)` is the unit-quaternion chart
//! used by the covering map and by the SO(4) lift.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::mat::{CMat2, Mat3};
use super::rot3::Rot3;
use super::GroupError;

/// Anti-Hermitian traceless basis with `IBASIS[0] = diag(i, -i)`;
/// `b_theta(theta) = exp(-(theta/2) * IBASIS[0])`.
pub fn ibasis() -> [CMat2; 3] {
    let i = C64::new(0.0, 1.0);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    [
        CMat2([[i, zero], [zero, -i]]),
        CMat2([[zero, -one], [one, zero]]),
        CMat2([[zero, i], [i, zero]]),
    ]
}

/// Element of SU(2).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SU2 {
    pub alpha: C64,
    pub beta: C64,
}

impl SU2 {
    pub const IDENTITY: SU2 = SU2 {
        alpha: C64::new(1.0, 0.0),
        beta: C64::new(0.0, 0.0),
    };

    /// Validates unit determinant `|alpha|^2 + |beta|^2 = 1`.
    pub fn new(alpha: C64, beta: C64, tol: f64) -> Result<SU2, GroupError> {
        let n = alpha.norm_sqr() + beta.norm_sqr();
        if (n - 1.0).abs() > tol {
            return Err(GroupError::NotUnitNorm { err: (n - 1.0).abs() });
        }
        Ok(SU2 { alpha, beta })
    }

    /// Reads the element off a unitary 2x2 matrix with determinant 1.
    pub fn from_matrix(m: &CMat2, tol: f64) -> Result<SU2, GroupError> {
        let err = m.unitarity_error();
        if err > tol {
            return Err(GroupError::NotUnitary { err });
        }
        let det = m.det();
        if (det - C64::new(1.0, 0.0)).norm() > 10.0 * tol {
            return Err(GroupError::NotUnitDeterminant { det_re: det.re, det_im: det.im });
        }
        SU2::new(m.0[0][0], m.0[1][0], 10.0 * tol)
    }

    pub fn matrix(&self) -> CMat2 {
        CMat2([
            [self.alpha, -self.beta.conj()],
            [self.beta, self.alpha.conj()],
        ])
    }

    /// Real coordinates `(Re alpha, Im alpha, Re beta, Im beta)`.
    pub fn bcoords(&self) -> [f64; 4] {
        [self.alpha.re, self.alpha.im, self.beta.re, self.beta.im]
    }

    pub fn from_bcoords(b: [f64; 4]) -> SU2 {
        SU2 {
            alpha: C64::new(b[0], b[1]),
            beta: C64::new(b[2], b[3]),
        }
    }

    pub fn compose(&self, rhs: &SU2) -> SU2 {
        SU2 {
            alpha: self.alpha * rhs.alpha - self.beta.conj() * rhs.beta,
            beta: self.beta * rhs.alpha + self.alpha.conj() * rhs.beta,
        }
    }

    pub fn inverse(&self) -> SU2 {
        SU2 {
            alpha: self.alpha.conj(),
            beta: -self.beta,
        }
    }

    pub fn neg(&self) -> SU2 {
        SU2 {
            alpha: -self.alpha,
            beta: -self.beta,
        }
    }

    pub fn pow(&self, n: i64) -> SU2 {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = SU2::IDENTITY;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn renormalize(&mut self) {
        let n = (self.alpha.norm_sqr() + self.beta.norm_sqr()).sqrt();
        self.alpha /= n;
        self.beta /= n;
    }

    pub fn trace(&self) -> f64 {
        2.0 * self.alpha.re
    }

    /// Euclidean distance in the `b` chart (Frobenius distance over sqrt(2)).
    pub fn dist(&self, rhs: &SU2) -> f64 {
        let a = self.bcoords();
        let b = rhs.bcoords();
        let mut acc = 0.0;
        for i in 0..4 {
            let d = a[i] - b[i];
            acc += d * d;
        }
        acc.sqrt()
    }

    pub fn max_abs_diff(&self, rhs: &SU2) -> f64 {
        let a = self.bcoords();
        let b = rhs.bcoords();
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            worst = worst.max((a[i] - b[i]).abs());
        }
        worst
    }

    /// Rotation angle of the covered SO(3) element, in `[0, 2*pi]`.
    pub fn covered_angle(&self) -> f64 {
        2.0 * self.alpha.re.clamp(-1.0, 1.0).acos()
    }

    /// Unit axis of the covered rotation, when defined; the direction of the
    /// imaginary part `(Im alpha, Re beta, Im beta)`.
    pub fn covered_axis(&self) -> Option<[f64; 3]> {
        let v = [self.alpha.im, self.beta.re, self.beta.im];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n < 1e-12 {
            None
        } else {
            Some([v[0] / n, v[1] / n, v[2] / n])
        }
    }
}

/// Diagonal one-parameter subgroup `diag(exp(-i theta/2), exp(i theta/2))`;
/// covers the block rotation `c_theta(theta)`.
pub fn b_theta(theta: f64) -> SU2 {
    SU2 {
        alpha: C64::from_polar(1.0, -theta / 2.0),
        beta: C64::new(0.0, 0.0),
    }
}

/// The covering homomorphism onto SO(3), written directly in the `b` chart.
/// `phi_cover(-u) = phi_cover(u)` holds exactly, entry by entry.
pub fn phi_cover(u: &SU2) -> Rot3 {
    let [b1, b2, b3, b4] = u.bcoords();
    let (s1, s2, s3, s4) = (b1 * b1, b2 * b2, b3 * b3, b4 * b4);
    Rot3(Mat3([
        [
            s1 + s2 - s3 - s4,
            2.0 * (b1 * b4 + b2 * b3),
            2.0 * (b2 * b4 - b1 * b3),
        ],
        [
            2.0 * (b2 * b3 - b1 * b4),
            s1 + s3 - s2 - s4,
            2.0 * (b1 * b2 + b3 * b4),
        ],
        [
            2.0 * (b1 * b3 + b2 * b4),
            2.0 * (b3 * b4 - b1 * b2),
            s1 + s4 - s2 - s3,
        ],
    ]))
}

/// One of the two preimages of `r` under [`phi_cover`], chosen
/// deterministically: the first coordinate of `b` of magnitude above `1e-7`
/// is made positive.
pub fn su2_from_rot3(r: &Rot3) -> SU2 {
    let m = &r.0 .0;
    let t = r.0.trace();
    // 4*b1^2 = 1 + t and 4*bk^2 = 1 + 2*m[k][k] - t; branch on the largest.
    let candidates = [
        1.0 + t,
        1.0 + 2.0 * m[0][0] - t,
        1.0 + 2.0 * m[1][1] - t,
        1.0 + 2.0 * m[2][2] - t,
    ];
    let mut pivot = 0;
    for i in 1..4 {
        if candidates[i] > candidates[pivot] {
            pivot = i;
        }
    }
    let d = candidates[pivot].max(0.0).sqrt() / 2.0;
    let b = match pivot {
        0 => {
            let b1 = d;
            [
                b1,
                (m[1][2] - m[2][1]) / (4.0 * b1),
                (m[2][0] - m[0][2]) / (4.0 * b1),
                (m[0][1] - m[1][0]) / (4.0 * b1),
            ]
        }
        1 => {
            let b2 = d;
            [
                (m[1][2] - m[2][1]) / (4.0 * b2),
                b2,
                (m[0][1] + m[1][0]) / (4.0 * b2),
                (m[2][0] + m[0][2]) / (4.0 * b2),
            ]
        }
        2 => {
            let b3 = d;
            [
                (m[2][0] - m[0][2]) / (4.0 * b3),
                (m[0][1] + m[1][0]) / (4.0 * b3),
                b3,
                (m[1][2] + m[2][1]) / (4.0 * b3),
            ]
        }
        _ => {
            let b4 = d;
            [
                (m[0][1] - m[1][0]) / (4.0 * b4),
                (m[2][0] + m[0][2]) / (4.0 * b4),
                (m[1][2] + m[2][1]) / (4.0 * b4),
                b4,
            ]
        }
    };
    let mut u = SU2::from_bcoords(b);
    u.renormalize();
    for c in u.bcoords() {
        if c.abs() > 1e-7 {
            if c < 0.0 {
                u = u.neg();
            }
            break;
        }
    }
    u
}

/// Conjugation `u * b * u^{-1}`.
pub fn conj_su2(u: &SU2, b: &SU2) -> SU2 {
    u.compose(b).compose(&u.inverse())
}

/// Splits an anti-Hermitian matrix into its central phase rate and the
/// coefficients of the trace-free part in the i-basis.
pub fn anti_hermitian_parts(x: &CMat2) -> (f64, [f64; 3]) {
    let central = (x.0[0][0].im + x.0[1][1].im) / 2.0;
    let w1 = x.0[0][0].im - central;
    let w2 = (x.0[1][0].re - x.0[0][1].re) / 2.0;
    let w3 = (x.0[0][1].im + x.0[1][0].im) / 2.0;
    (central, [w1, w2, w3])
}

/// exp of an anti-Hermitian matrix: the central phase factors out and the
/// trace-free part squares to a negative scalar.
pub fn exp_anti_hermitian(x: &CMat2) -> CMat2 {
    let (central, w) = anti_hermitian_parts(x);
    let n = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    let sinc = if n > 1e-8 { n.sin() / n } else { 1.0 - n * n / 6.0 };
    let basis = ibasis();
    let mut traceless = CMat2::zero();
    for (k, b) in basis.iter().enumerate() {
        traceless = traceless.add(&b.scale(C64::new(w[k] * sinc, 0.0)));
    }
    let special = CMat2::IDENTITY.scale(C64::new(n.cos(), 0.0)).add(&traceless);
    special.scale(C64::new(0.0, central).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn approx(a: f64, b: f64, eps: f64) -> bool {
        (a - b).abs() < eps
    }

    #[test]
    fn b_theta_special_values() {
        let e = b_theta(0.0);
        assert!(e.max_abs_diff(&SU2::IDENTITY) < 1e-15);
        let m = b_theta(2.0 * PI);
        assert!(m.max_abs_diff(&SU2::IDENTITY.neg()) < 1e-15);
        let q = b_theta(PI / 2.0);
        assert!(approx(q.alpha.re, (PI / 4.0).cos(), 1e-15));
        assert!(approx(q.alpha.im, -(PI / 4.0).sin(), 1e-15));
    }

    #[test]
    fn cover_sends_diagonal_subgroup_to_block_rotations() {
        for k in 0..=100 {
            let t = 4.0 * PI * (k as f64) / 100.0 - 2.0 * PI;
            let img = phi_cover(&b_theta(t));
            assert!(img.0.max_abs_diff(&super::super::rot3::c_theta(t).0) < 1e-12);
        }
    }

    #[test]
    fn cover_kills_center_exactly() {
        let u = SU2 {
            alpha: C64::new(0.6, -0.48),
            beta: C64::new(0.384, 0.512),
        };
        let a = phi_cover(&u);
        let b = phi_cover(&u.neg());
        assert_eq!(a.0, b.0);
    }

    #[test]
    fn cover_image_is_rotation() {
        let mut u = SU2 {
            alpha: C64::new(0.2, 0.5),
            beta: C64::new(-0.7, 0.1),
        };
        u.renormalize();
        let r = phi_cover(&u);
        assert!(r.0.orthonormality_error() < 1e-14);
        assert!((r.0.det() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn lift_round_trips_through_cover() {
        let samples = [
            b_theta(1.3),
            SU2::from_bcoords([0.5, 0.5, 0.5, 0.5]),
            SU2::from_bcoords([0.0, 1.0, 0.0, 0.0]),
            SU2::from_bcoords([0.0, 0.0, 0.0, 1.0]),
            {
                let mut u = SU2::from_bcoords([0.1, -0.3, 0.9, 0.2]);
                u.renormalize();
                u
            },
        ];
        for u in samples {
            let lifted = su2_from_rot3(&phi_cover(&u));
            let same = lifted.max_abs_diff(&u) < 1e-12;
            let negated = lifted.max_abs_diff(&u.neg()) < 1e-12;
            assert!(same || negated);
            assert!(phi_cover(&lifted).0.max_abs_diff(&phi_cover(&u).0) < 1e-12);
        }
    }

    #[test]
    fn conjugation_axis_angle_relation() {
        // Conjugating the diagonal subgroup tilts its rotation axis away from
        // e1 by the polar angle phi of the conjugator.
        let mut u = SU2::from_bcoords([0.3, 0.4, -0.5, 0.6]);
        u.renormalize();
        let theta = 1.9;
        let b = conj_su2(&u, &b_theta(theta));
        let cos_phi = u.alpha.norm_sqr() - u.beta.norm_sqr();
        let aa = super::super::rot3::axis_angle_of(&phi_cover(&b), 1e-9).unwrap();
        assert!(approx(aa.axis[0].abs(), cos_phi.abs(), 1e-10));
        assert!(approx(aa.theta.min(2.0 * PI - aa.theta), theta, 1e-10));
        assert!(approx(b.trace(), 2.0 * (theta / 2.0).cos(), 1e-12));
    }

    #[test]
    fn derivative_of_cover_doubles_generators() {
        // phi_cover(exp(-(t/2) I_k)) = exp(t J_k) for each basis index.
        let h = 1e-6;
        let ib = ibasis();
        for k in 0..3 {
            let u = CMat2::IDENTITY.add(&ib[k].scale(C64::new(-h / 2.0, 0.0)));
            let u = SU2::from_matrix(&u.polar_project(), 1e-9).unwrap();
            let img = phi_cover(&u);
            let gen = super::super::rot3::JBASIS[k];
            let expect = Mat3::IDENTITY.add(&gen.scale(h));
            assert!(img.0.max_abs_diff(&expect) < 1e-11);
        }
    }
}
