//! Concrete matrix groups and the covering maps between them.

pub mod mat;
pub mod rot3;
pub mod rot4;
pub mod su2;
pub mod u2;

pub use mat::{C64, CMat2, Mat3, Mat4};
pub use rot3::{axis_angle_of, c_theta, exp_so3, v_phi_gamma, AxisAngle, Rot3, JBASIS};
pub use rot4::{exp_so4_skew, lift_so3_pair, log_so4, psi_pair, so4_to_so3_pair, su2_log, Rot4};
pub use su2::{
    anti_hermitian_parts, b_theta, conj_su2, exp_anti_hermitian, ibasis, phi_cover, su2_from_rot3,
    SU2,
};
pub use u2::U2Mat;

/// Rejections raised by group-element constructors and decompositions.
#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum GroupError {
    #[error("matrix is not orthonormal (max deviation {err:.3e})")]
    NotOrthonormal { err: f64 },
    #[error("matrix has negative determinant ({det:.3e})")]
    NegativeDeterminant { det: f64 },
    #[error("matrix is not unitary (max deviation {err:.3e})")]
    NotUnitary { err: f64 },
    #[error("determinant is not 1 (got {det_re:.6e} + {det_im:.6e}i)")]
    NotUnitDeterminant { det_re: f64, det_im: f64 },
    #[error("column norm deviates from 1 by {err:.3e}")]
    NotUnitNorm { err: f64 },
    #[error("rotation is the identity; no axis is defined")]
    IdentityInput,
}
