use std::f64::consts::FRAC_PI_2;

use crate::exact::AngleSpec;
use crate::groups::{c_theta, v_phi_gamma, Rot3};

use super::ClassifyError;

/// Generator pair in normal form: a rotation by `theta1` about the
/// first axis, and a rotation by `theta2` about the axis obtained by
/// tilting the first axis by `phi` at meridian angle `gamma`.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub theta1: AngleSpec,
    pub theta2: AngleSpec,
    pub phi: AngleSpec,
    pub gamma: AngleSpec,
}

impl GenConfig {
    pub fn new(theta1: AngleSpec, theta2: AngleSpec, phi: AngleSpec) -> GenConfig {
        GenConfig {
            theta1,
            theta2,
            phi,
            gamma: AngleSpec::rational_pi(0, 1),
        }
    }

    pub fn with_gamma(mut self, gamma: AngleSpec) -> GenConfig {
        self.gamma = gamma;
        self
    }

    /// The axis tilt must lie in (0, pi/2]; outside that range the
    /// normal form does not represent the pair it came from.
    pub fn validate(&self) -> Result<(), ClassifyError> {
        let phi = self.phi.radians();
        if phi > 0.0 && phi <= FRAC_PI_2 + 1e-12 {
            Ok(())
        } else {
            Err(ClassifyError::PhiOutOfRange { value: phi })
        }
    }
}

/// Materializes the configured pair as rotation matrices.
pub fn gens_from_config(cfg: &GenConfig) -> (Rot3, Rot3) {
    let c1 = c_theta(cfg.theta1.radians());
    let v = v_phi_gamma(cfg.phi.radians(), cfg.gamma.radians());
    let c2 = v.compose(&c_theta(cfg.theta2.radians())).compose(&v.inverse());
    (c1, c2)
}

/// Budget for ball and orbit enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BallLimits {
    pub tol: f64,
    pub max_size: usize,
    pub max_depth: u32,
}

impl Default for BallLimits {
    fn default() -> BallLimits {
        BallLimits {
            tol: 1e-9,
            max_size: 100_000,
            max_depth: 40,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::axis_angle_of;

    #[test]
    fn gens_match_axes() {
        let cfg = GenConfig::new(
            AngleSpec::rational_pi(2, 3),
            AngleSpec::rational_pi(2, 5),
            AngleSpec::rational_pi(1, 2),
        );
        cfg.validate().unwrap();
        let (c1, c2) = gens_from_config(&cfg);
        let a1 = axis_angle_of(&c1, 1e-9).unwrap();
        let a2 = axis_angle_of(&c2, 1e-9).unwrap();
        assert!((a1.axis[0].abs() - 1.0).abs() < 1e-12);
        // phi = pi/2, gamma = 0 tilts the axis into the y direction.
        assert!(a2.axis[0].abs() < 1e-12);
        assert!((a2.axis[1].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn phi_range_enforced() {
        let bad = GenConfig::new(
            AngleSpec::rational_pi(1, 3),
            AngleSpec::rational_pi(1, 3),
            AngleSpec::rational_pi(3, 4),
        );
        assert!(bad.validate().is_err());
        let zero = GenConfig::new(
            AngleSpec::rational_pi(1, 3),
            AngleSpec::rational_pi(1, 3),
            AngleSpec::rational_pi(0, 1),
        );
        assert!(zero.validate().is_err());
    }

    #[test]
    fn gamma_defaults_to_zero() {
        let cfg = GenConfig::new(
            AngleSpec::Numeric(1.0),
            AngleSpec::Numeric(1.0),
            AngleSpec::rational_pi(1, 4),
        );
        assert!(cfg.gamma.radians().abs() < 1e-15);
    }
}
