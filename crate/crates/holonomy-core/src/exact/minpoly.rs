//! Minimal polynomials of rotation eigenvalues and infinite-order
//! certificates.
//!
//! A rotation with eigenvalues `exp(±i*theta)` has finite order exactly when
//! `exp(i*theta)` is a root of unity, i.e. when its minimal polynomial is
//! cyclotomic. The trace determines that polynomial: with `s = 2 cos(theta)`
//! rational it is `x^2 - s x + 1`, and with `s` quadratic irrational the
//! product over the field conjugates gives a quartic.

use num::{BigRational, Signed};

use super::angle::{
    best_rational, recognize_quadratic, recognize_rational, rotation_order_of_rational_pi,
    AngleSpec, RationalApprox, Recognition,
};
use super::poly::{is_root_of_unity, RatPoly, RootOfUnity};
use super::quad::QuadExt;
use super::ExactError;
use crate::groups::{Rot3, SU2};

/// Minimal polynomial over the rationals of `exp(i*theta)` given
/// `s = 2 cos(theta)` exactly. Monic; degree 1, 2, or 4.
pub fn min_poly_from_trace(s: &QuadExt) -> Result<RatPoly, ExactError> {
    let value = s.to_f64();
    if value.abs() > 2.0 + 1e-9 {
        return Err(ExactError::TraceOutOfRange { value });
    }
    let two = BigRational::from_integer(2.into());
    let poly = if let Some(r) = s.as_rational() {
        if r.abs() > two {
            return Err(ExactError::TraceOutOfRange { value });
        }
        if *r == two {
            RatPoly::from_ints(&[-1, 1])
        } else if *r == -two {
            RatPoly::from_ints(&[1, 1])
        } else {
            RatPoly::from_coeffs(vec![BigRational::from_integer(1.into()), -r.clone(), BigRational::from_integer(1.into())])
        }
    } else {
        // (x^2 - s x + 1)(x^2 - s' x + 1) for the field conjugate s'.
        // Unimodular roots in (0, pi) rule out every rational factorization,
        // so the quartic is irreducible.
        let a = s.rational_part();
        let b = s.surd_coeff();
        let d = BigRational::from_integer(s.surd_base().into());
        let one = BigRational::from_integer(1.into());
        let c3 = -(&two * a);
        let c2 = &two + a * a - b * b * &d;
        RatPoly::from_coeffs(vec![one.clone(), c3.clone(), c2, c3, one])
    };
    debug_assert!(poly.is_irreducible() != Some(false));
    Ok(poly)
}

/// Outcome of testing whether a rotation angle generates an infinite cyclic
/// group. Exact verdicts carry their certificate; numeric inputs only ever
/// yield `NumericOnly`.
#[derive(Clone, Debug)]
pub enum ConditionC {
    /// Eigenvalue minimal polynomial is irreducible and non-cyclotomic.
    HoldsMinPoly { min_poly: RatPoly },
    /// Angle is an exact irrational multiple of pi.
    HoldsIrrationalAngle { over_pi: QuadExt },
    /// Finite order, with the order as witness.
    Fails { order: u64 },
    /// No exact route; best bounded-denominator reading of angle/pi.
    NumericOnly { over_pi_best: RationalApprox },
}

impl ConditionC {
    /// `Some(true)` when certified infinite, `Some(false)` when certified
    /// finite, `None` when only numeric evidence exists.
    pub fn holds(&self) -> Option<bool> {
        match self {
            ConditionC::HoldsMinPoly { .. } | ConditionC::HoldsIrrationalAngle { .. } => Some(true),
            ConditionC::Fails { .. } => Some(false),
            ConditionC::NumericOnly { .. } => None,
        }
    }
}

fn verdict_from_min_poly(poly: RatPoly) -> Result<ConditionC, ExactError> {
    match is_root_of_unity(&poly)? {
        RootOfUnity::Yes { order } => Ok(ConditionC::Fails { order }),
        RootOfUnity::No => Ok(ConditionC::HoldsMinPoly { min_poly: poly }),
    }
}

/// Certificate attempt from an exactly known `s = 2 cos(theta)`.
pub fn condition_c_from_two_cos_exact(s: &QuadExt) -> Result<ConditionC, ExactError> {
    verdict_from_min_poly(min_poly_from_trace(s)?)
}

/// Certificate attempt from a floating `s = 2 cos(theta)`: recognize the
/// value as rational or quadratic, else report the numeric reading of the
/// angle.
pub fn condition_c_from_two_cos(s: f64, rec: &Recognition) -> Result<ConditionC, ExactError> {
    if s.abs() > 2.0 + 1e-9 {
        return Err(ExactError::TraceOutOfRange { value: s });
    }
    if let Some(r) = recognize_rational(s, rec.max_den, rec.tol) {
        if r.abs() <= BigRational::from_integer(2.into()) {
            return condition_c_from_two_cos_exact(&QuadExt::from_rational(r));
        }
    }
    if let Some(q) = recognize_quadratic(s, &rec.quad) {
        return condition_c_from_two_cos_exact(&q);
    }
    let theta = (s / 2.0).clamp(-1.0, 1.0).acos();
    Ok(ConditionC::NumericOnly {
        over_pi_best: best_rational(theta / std::f64::consts::PI, rec.max_den),
    })
}

/// Angle-level check. Exact specs give exact verdicts; numeric specs are
/// never upgraded past `NumericOnly`.
pub fn condition_c_from_angle(spec: &AngleSpec, rec: &Recognition) -> ConditionC {
    match spec {
        AngleSpec::RationalPi(r) => ConditionC::Fails {
            order: rotation_order_of_rational_pi(r),
        },
        AngleSpec::QuadPi(q) => match q.as_rational() {
            Some(r) => ConditionC::Fails {
                order: rotation_order_of_rational_pi(r),
            },
            None => ConditionC::HoldsIrrationalAngle { over_pi: q.clone() },
        },
        AngleSpec::Numeric(x) => ConditionC::NumericOnly {
            over_pi_best: best_rational(x / std::f64::consts::PI, rec.max_den),
        },
    }
}

/// Infinite-order test for a rotation via its trace.
pub fn condition_c_for_rotation(r: &Rot3, rec: &Recognition) -> Result<ConditionC, ExactError> {
    condition_c_from_two_cos(r.0.trace() - 1.0, rec)
}

/// Infinite-order test for a special unitary via its trace; the eigenphase
/// is half the covered rotation angle.
pub fn condition_c_for_su2(u: &SU2, rec: &Recognition) -> Result<ConditionC, ExactError> {
    condition_c_from_two_cos(u.trace(), rec)
}

/// Finite order of an exactly known eigenvalue, when it has one.
pub fn exact_order_from_two_cos(s: &QuadExt) -> Result<Option<u64>, ExactError> {
    Ok(match condition_c_from_two_cos_exact(s)? {
        ConditionC::Fails { order } => Some(order),
        _ => None,
    })
}
