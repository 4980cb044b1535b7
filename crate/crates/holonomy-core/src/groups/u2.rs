//! U(2): unitary 2x2 matrices and their central-phase decomposition.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::mat::CMat2;
use super::su2::SU2;
use super::GroupError;
use crate::tol;

/// Element of U(2).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct U2Mat(pub CMat2);

impl U2Mat {
    pub const IDENTITY: U2Mat = U2Mat(CMat2::IDENTITY);

    pub fn new(m: CMat2, unit_tol: f64) -> Result<U2Mat, GroupError> {
        let err = m.unitarity_error();
        if err > unit_tol {
            return Err(GroupError::NotUnitary { err });
        }
        Ok(U2Mat(m))
    }

    pub fn from_su2(u: &SU2) -> U2Mat {
        U2Mat(u.matrix())
    }

    pub fn compose(&self, rhs: &U2Mat) -> U2Mat {
        U2Mat(self.0.mul(&rhs.0))
    }

    pub fn inverse(&self) -> U2Mat {
        U2Mat(self.0.adjoint())
    }

    pub fn pow(&self, n: i64) -> U2Mat {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = U2Mat::IDENTITY;
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
        if self.0.unitarity_error() > tol::DRIFT {
            self.0 = self.0.polar_project();
        }
    }

    /// Frobenius distance over sqrt(2).
    pub fn dist(&self, rhs: &U2Mat) -> f64 {
        self.0.frobenius_dist(&rhs.0) / std::f64::consts::SQRT_2
    }

    pub fn det(&self) -> C64 {
        self.0.det()
    }

    /// Central phase `gamma` in `[0, pi)` with `det = exp(2 i gamma)`, and
    /// the determinant-one part `exp(-i gamma) * self`.
    pub fn phase_split(&self) -> (f64, SU2) {
        let mut delta = self.0.det().arg();
        if delta < 0.0 {
            delta += 2.0 * std::f64::consts::PI;
        }
        let gamma = delta / 2.0;
        let special = self.0.scale(C64::from_polar(1.0, -gamma));
        let mut u = SU2 {
            alpha: special.0[0][0],
            beta: special.0[1][0],
        };
        u.renormalize();
        (gamma, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::su2::b_theta;
    use std::f64::consts::PI;

    #[test]
    fn phase_split_round_trip() {
        for &gamma in &[0.0, 0.3, 1.2, PI - 1e-3, 2.0] {
            let u = b_theta(1.7);
            let b = U2Mat(u.matrix().scale(C64::from_polar(1.0, gamma)));
            let (g, s) = b.phase_split();
            let back = U2Mat(s.matrix().scale(C64::from_polar(1.0, g)));
            // gamma and gamma + pi describe the same det; the matrix must
            // round-trip up to that central sign, the branch stays in [0, pi).
            assert!((0.0..PI).contains(&g));
            let direct = back.0.max_abs_diff(&b.0);
            let negated = back.0.scale(C64::new(-1.0, 0.0)).max_abs_diff(&b.0);
            assert!(direct.min(negated) < 1e-12, "gamma={gamma}");
            assert!((b.det() - C64::from_polar(1.0, 2.0 * g)).norm() < 1e-12);
        }
    }

    #[test]
    fn unitarity_validation() {
        let mut m = CMat2::IDENTITY;
        m.0[0][0] = C64::new(1.5, 0.0);
        assert!(U2Mat::new(m, 1e-9).is_err());
        assert!(U2Mat::new(CMat2::IDENTITY, 1e-9).is_ok());
    }

    #[test]
    fn inverse_is_adjoint() {
        let b = U2Mat(b_theta(0.9).matrix().scale(C64::from_polar(1.0, 0.4)));
        let prod = b.compose(&b.inverse());
        assert!(prod.0.max_abs_diff(&CMat2::IDENTITY) < 1e-14);
    }
}
