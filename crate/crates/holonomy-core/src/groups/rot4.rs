//! Rotations of R^4 and their splitting through the action on 2-vectors.
//!
//! A rotation of R^4 acts on the 6-dimensional space of 2-vectors, which
//! decomposes into self-dual and anti-self-dual 3-dimensional halves; the
//! induced pair of SO(3) elements determines the rotation up to global sign.
//! The inverse direction goes through unit quaternions: identifying R^4 with
//! the quaternion algebra, every rotation is `x -> u * x * conj(v)` for a
//! pair of unit quaternions, unique up to negating both.

use serde::{Deserialize, Serialize};

use super::mat::{Mat3, Mat4};
use super::rot3::Rot3;
use super::su2::{su2_from_rot3, SU2};
use super::GroupError;
use crate::tol;

/// Element of SO(4).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rot4(pub Mat4);

impl Rot4 {
    pub const IDENTITY: Rot4 = Rot4(Mat4::IDENTITY);

    pub fn new(m: Mat4, orth_tol: f64) -> Result<Rot4, GroupError> {
        let err = m.orthonormality_error();
        if err > orth_tol {
            return Err(GroupError::NotOrthonormal { err });
        }
        let det = m.det();
        if det < 0.0 {
            return Err(GroupError::NegativeDeterminant { det });
        }
        Ok(Rot4(m))
    }

    pub fn compose(&self, rhs: &Rot4) -> Rot4 {
        Rot4(self.0.mul(&rhs.0))
    }

    pub fn inverse(&self) -> Rot4 {
        Rot4(self.0.transpose())
    }

    pub fn act(&self, v: [f64; 4]) -> [f64; 4] {
        self.0.matvec(v)
    }

    pub fn pow(&self, n: i64) -> Rot4 {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Rot4::IDENTITY;
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
        if self.0.orthonormality_error() > tol::DRIFT {
            self.0 = self.0.polar_project();
        }
    }

    /// Frobenius distance over sqrt(2); diameter 2*sqrt(2).
    pub fn dist(&self, rhs: &Rot4) -> f64 {
        self.0.frobenius_dist(&rhs.0) / std::f64::consts::SQRT_2
    }
}

/// Ordered orthonormal bases of the self-dual (`+`) and anti-self-dual (`-`)
/// halves, expressed in the 2-vector coordinate order
/// `e12, e13, e14, e23, e24, e34`.
const OMEGA_PLUS: [[f64; 6]; 3] = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    [0.0, 1.0, 0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
];
const OMEGA_MINUS: [[f64; 6]; 3] = [
    [1.0, 0.0, 0.0, 0.0, 0.0, -1.0],
    [0.0, 1.0, 0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0, -1.0, 0.0, 0.0],
];

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Matrix of the induced action on 2-vectors in the `e_i /\ e_j` basis.
fn wedge_action(a: &Mat4) -> [[f64; 6]; 6] {
    let m = &a.0;
    let mut out = [[0.0; 6]; 6];
    for (col, &(i, j)) in PAIRS.iter().enumerate() {
        for (row, &(k, l)) in PAIRS.iter().enumerate() {
            out[row][col] = m[k][i] * m[l][j] - m[k][j] * m[l][i];
        }
    }
    out
}

/// Both 3x3 blocks of the 2-vector action in the `Omega` bases, along with
/// the total magnitude of the cross terms (zero for a genuine rotation).
pub fn wedge_split(a: &Rot4) -> (Mat3, Mat3, f64) {
    let w = wedge_action(&a.0);
    // Images of the Omega vectors in e_i /\ e_j coordinates. The basis
    // vectors carry a 1/sqrt(2) normalization that cancels in the inner
    // products below, so it is omitted from both sides and restored by the
    // overall factor 1/2.
    let apply = |v: &[f64; 6]| {
        let mut out = [0.0; 6];
        for (row, out_r) in out.iter_mut().enumerate() {
            for c in 0..6 {
                *out_r += w[row][c] * v[c];
            }
        }
        out
    };
    let dot = |a: &[f64; 6], b: &[f64; 6]| -> f64 { (0..6).map(|i| a[i] * b[i]).sum() };

    let mut plus = Mat3::zero();
    let mut minus = Mat3::zero();
    let mut cross: f64 = 0.0;
    for j in 0..3 {
        let img_p = apply(&OMEGA_PLUS[j]);
        let img_m = apply(&OMEGA_MINUS[j]);
        for i in 0..3 {
            plus.0[i][j] = dot(&OMEGA_PLUS[i], &img_p) / 2.0;
            minus.0[i][j] = dot(&OMEGA_MINUS[i], &img_m) / 2.0;
            cross = cross.max((dot(&OMEGA_MINUS[i], &img_p) / 2.0).abs());
            cross = cross.max((dot(&OMEGA_PLUS[i], &img_m) / 2.0).abs());
        }
    }
    (plus, minus, cross)
}

/// The pair of SO(3) elements induced on the self-dual and anti-self-dual
/// halves, in that order.
pub fn so4_to_so3_pair(a: &Rot4) -> (Rot3, Rot3) {
    let (plus, minus, _) = wedge_split(a);
    (Rot3(plus), Rot3(minus))
}

/// Quaternion product in coordinates `(x1, x2, x3, x4)`, matching the
/// algebra generated by the matrices behind [`SU2`].
pub fn qmul(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    [
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] - p[2] * q[3] + p[3] * q[2],
        p[2] * q[0] - p[3] * q[1] + p[0] * q[2] + p[1] * q[3],
        p[2] * q[1] + p[3] * q[0] + p[0] * q[3] - p[1] * q[2],
    ]
}

fn qconj(q: [f64; 4]) -> [f64; 4] {
    [q[0], -q[1], -q[2], -q[3]]
}

/// The rotation `x -> u * x * conj(v)` as a 4x4 matrix.
pub fn psi_pair(u: &SU2, v: &SU2) -> Rot4 {
    let ub = u.bcoords();
    let vc = qconj(v.bcoords());
    let mut m = Mat4::zero();
    for j in 0..4 {
        let mut e = [0.0; 4];
        e[j] = 1.0;
        let col = qmul(qmul(ub, e), vc);
        for i in 0..4 {
            m.0[i][j] = col[i];
        }
    }
    Rot4(m)
}

/// Inverts [`so4_to_so3_pair`]: produces the rotation of R^4 inducing
/// `(cp, cm)` on the two halves.
///
/// Of the two preimages (negatives of each other) the one with nonnegative
/// trace is returned; on zero trace, the one whose first entry of magnitude
/// above `1e-7` in row-major order is positive.
pub fn lift_so3_pair(cp: &Rot3, cm: &Rot3) -> Rot4 {
    let u = su2_from_rot3(cm);
    let v = su2_from_rot3(cp);
    let mut a = psi_pair(&u, &v);
    let tr = a.0.trace();
    if tr < -1e-7 {
        a = Rot4(a.0.scale(-1.0));
    } else if tr <= 1e-7 {
        'scan: for i in 0..4 {
            for j in 0..4 {
                if a.0 .0[i][j].abs() > 1e-7 {
                    if a.0 .0[i][j] < 0.0 {
                        a = Rot4(a.0.scale(-1.0));
                    }
                    break 'scan;
                }
            }
        }
    }
    a
}

/// Principal logarithm via the quaternion pair: the returned matrix is
/// antisymmetric with `exp` equal to `a`, built from principal SU(2) logs of
/// the two quaternion factors.
pub fn log_so4(a: &Rot4) -> Mat4 {
    let (cp, cm) = so4_to_so3_pair(a);
    let u = su2_from_rot3(&cm);
    let mut v = su2_from_rot3(&cp);
    if psi_pair(&u, &v).0.max_abs_diff(&a.0) > 1.0 {
        v = v.neg();
    }
    let la = su2_log(&u);
    let lb = {
        let l = su2_log(&v);
        [-l[0], -l[1], -l[2]]
    };
    let mut s = Mat4::zero();
    for j in 0..4 {
        let mut e = [0.0; 4];
        e[j] = 1.0;
        let left = qmul([0.0, la[0], la[1], la[2]], e);
        let right = qmul(e, [0.0, lb[0], lb[1], lb[2]]);
        for i in 0..4 {
            s.0[i][j] = left[i] + right[i];
        }
    }
    s
}

/// Exponential of an antisymmetric 4x4 matrix through its split into left
/// and right quaternion multiplications.
pub fn exp_so4_skew(s: &Mat4) -> Rot4 {
    let m = &s.0;
    let a = [
        (m[1][0] - m[3][2]) / 2.0,
        (m[2][0] + m[3][1]) / 2.0,
        (m[3][0] - m[2][1]) / 2.0,
    ];
    let b = [
        (m[1][0] + m[3][2]) / 2.0,
        (m[2][0] - m[3][1]) / 2.0,
        (m[3][0] + m[2][1]) / 2.0,
    ];
    let u = exp_pure_quaternion(a);
    let v = exp_pure_quaternion([-b[0], -b[1], -b[2]]);
    psi_pair(
        &SU2::from_bcoords(u),
        &SU2::from_bcoords(v),
    )
}

/// Principal log of a unit quaternion: pure-imaginary coordinates `x` with
/// `exp` returning the input and `|x| <= pi`. The sign of `-1` is resolved
/// toward the first imaginary axis.
pub fn su2_log(u: &SU2) -> [f64; 3] {
    let b = u.bcoords();
    let imag = [b[1], b[2], b[3]];
    let n = (imag[0] * imag[0] + imag[1] * imag[1] + imag[2] * imag[2]).sqrt();
    if n < 1e-12 {
        if b[0] < 0.0 {
            return [std::f64::consts::PI, 0.0, 0.0];
        }
        return [0.0, 0.0, 0.0];
    }
    let t = n.atan2(b[0]);
    [t * imag[0] / n, t * imag[1] / n, t * imag[2] / n]
}

fn exp_pure_quaternion(x: [f64; 3]) -> [f64; 4] {
    let n = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let sinc = if n > 1e-8 { n.sin() / n } else { 1.0 - n * n / 6.0 };
    [n.cos(), sinc * x[0], sinc * x[1], sinc * x[2]]
}
