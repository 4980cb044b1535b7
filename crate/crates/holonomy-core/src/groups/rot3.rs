//! Rotations of R^3 and their axis/angle parametrization.
//!
//! Generators follow one fixed convention: `J1`, `J2`, `J3` are the
//! infinitesimal rotations about the coordinate axes with
//! `exp(theta * J1) = c_theta(theta)`, the block rotation fixing e1.

use serde::{Deserialize, Serialize};

use super::mat::Mat3;
use super::GroupError;
use crate::tol;

/// Basis of antisymmetric 3x3 matrices; `JBASIS[0]` generates rotation about
/// the x-axis, in the sense that `exp(t * JBASIS[0]) = c_theta(t)`.
pub const JBASIS: [Mat3; 3] = [
    Mat3([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]),
    Mat3([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]),
    Mat3([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
];

/// Element of SO(3).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rot3(pub Mat3);

/// Axis/angle form of a non-identity rotation.
///
/// `theta` lies in `(0, 2*pi)`. The axis is a unit vector, canonicalized so
/// that its first component of magnitude above `1e-7` is positive; flipping
/// the axis replaces `theta` by `2*pi - theta`, so the canonical choice makes
/// the angle of `c_theta(t)` recover `t` on all of `(0, 2*pi)`. At
/// `theta = pi` both axis signs describe the same rotation and the
/// canonicalized one is returned.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct AxisAngle {
    pub axis: [f64; 3],
    pub theta: f64,
}

impl Rot3 {
    pub const IDENTITY: Rot3 = Rot3(Mat3::IDENTITY);

    /// Validates orthonormality (within `orth_tol`) and positive determinant.
    pub fn new(m: Mat3, orth_tol: f64) -> Result<Rot3, GroupError> {
        let err = m.orthonormality_error();
        if err > orth_tol {
            return Err(GroupError::NotOrthonormal { err });
        }
        let det = m.det();
        if det < 0.0 {
            return Err(GroupError::NegativeDeterminant { det });
        }
        Ok(Rot3(m))
    }

    pub fn compose(&self, rhs: &Rot3) -> Rot3 {
        Rot3(self.0.mul(&rhs.0))
    }

    pub fn inverse(&self) -> Rot3 {
        Rot3(self.0.transpose())
    }

    pub fn act(&self, v: [f64; 3]) -> [f64; 3] {
        self.0.matvec(v)
    }

    pub fn pow(&self, n: i64) -> Rot3 {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Rot3::IDENTITY;
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

    /// Re-project onto SO(3) when accumulated drift calls for it.
    pub fn renormalize(&mut self) {
        if self.0.orthonormality_error() > tol::DRIFT {
            self.0 = self.0.polar_project();
        }
    }

    /// Relative rotation angle between two rotations, in `[0, pi]`.
    pub fn dist(&self, rhs: &Rot3) -> f64 {
        let c = (self.0.dot(&rhs.0) - 1.0) / 2.0;
        c.clamp(-1.0, 1.0).acos()
    }
}

/// Rotation by `theta` about the x-axis, acting as a block rotation of the
/// `(e2, e3)` plane.
pub fn c_theta(theta: f64) -> Rot3 {
    let (s, c) = theta.sin_cos();
    Rot3(Mat3([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]))
}

/// Conjugating rotation taking the x-axis to the unit vector
/// `(cos phi, sin phi cos gamma, sin phi sin gamma)` (its first column).
pub fn v_phi_gamma(phi: f64, gamma: f64) -> Rot3 {
    let (sp, cp) = phi.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    Rot3(Mat3([
        [cp, -sp * cg, -sp * sg],
        [sp * cg, sg * sg + cp * cg * cg, (cp - 1.0) * cg * sg],
        [sp * sg, (cp - 1.0) * cg * sg, cg * cg + cp * sg * sg],
    ]))
}

/// Exponential of the antisymmetric matrix with axis coordinates `w`
/// (Rodrigues form); rotation by `|w|` radians about `w/|w|`.
pub fn exp_so3(w: [f64; 3]) -> Rot3 {
    let theta = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    let k = Mat3([
        [0.0, -w[2], w[1]],
        [w[2], 0.0, -w[0]],
        [-w[1], w[0], 0.0],
    ]);
    // sin(t)/t and (1-cos(t))/t^2, stable near zero.
    let (a, b) = if theta > 1e-4 {
        (
            theta.sin() / theta,
            (1.0 - theta.cos()) / (theta * theta),
        )
    } else {
        let t2 = theta * theta;
        (1.0 - t2 / 6.0 * (1.0 - t2 / 20.0), 0.5 - t2 / 24.0 * (1.0 - t2 / 30.0))
    };
    Rot3(Mat3::IDENTITY.add(&k.scale(a)).add(&k.mul(&k).scale(b)))
}

/// Recovers the canonical axis/angle form of a non-identity rotation.
///
/// The angle comes from the trace, the axis from the antisymmetric part, and
/// near `theta = pi` (where the antisymmetric part degenerates) from the
/// dominant column of the rank-one symmetric part `(r + I)/2`.
///
/// Errors with [`GroupError::IdentityInput`] when `r` is within `angle_tol`
/// of the identity, where no axis is defined.
pub fn axis_angle_of(r: &Rot3, angle_tol: f64) -> Result<AxisAngle, GroupError> {
    let m = &r.0 .0;
    let c = ((r.0.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let theta = c.acos();
    if theta.abs() < angle_tol {
        return Err(GroupError::IdentityInput);
    }

    let skew = [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]];
    let skew_norm = (skew[0] * skew[0] + skew[1] * skew[1] + skew[2] * skew[2]).sqrt();

    let mut axis;
    if skew_norm > 1e-7 {
        axis = [skew[0] / skew_norm, skew[1] / skew_norm, skew[2] / skew_norm];
    } else {
        // theta is essentially pi: (r + I)/2 equals axis * axis^T.
        let b = [
            [(m[0][0] + 1.0) / 2.0, m[0][1] / 2.0, m[0][2] / 2.0],
            [m[1][0] / 2.0, (m[1][1] + 1.0) / 2.0, m[1][2] / 2.0],
            [m[2][0] / 2.0, m[2][1] / 2.0, (m[2][2] + 1.0) / 2.0],
        ];
        let mut best = 0;
        for i in 1..3 {
            if b[i][i] > b[best][best] {
                best = i;
            }
        }
        let d = b[best][best].max(0.0).sqrt();
        axis = [b[best][0] / d, b[best][1] / d, b[best][2] / d];
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        for a in &mut axis {
            *a /= n;
        }
    }

    let mut theta = theta;
    for i in 0..3 {
        if axis[i].abs() > 1e-7 {
            if axis[i] < 0.0 {
                for a in &mut axis {
                    *a = -*a;
                }
                theta = 2.0 * std::f64::consts::PI - theta;
            }
            break;
        }
    }
    Ok(AxisAngle { axis, theta })
}
