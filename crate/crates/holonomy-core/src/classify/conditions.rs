use std::f64::consts::{FRAC_PI_2, PI};

use num::BigRational;

use crate::exact::{condition_c_for_rotation, recognize_rational, AngleSpec, QuadExt, Recognition};
use crate::groups::{axis_angle_of, GroupError, Rot3};
use crate::tol;

use super::config::{gens_from_config, GenConfig};
use super::{
    verdict_of_slots, Certificate, Claim, ConditionCReport, EigenphaseAttempt, Evidence,
    SlotOutcome, SlotReport, SquareCheck, Verdict,
};

/// Checks the three density conditions on a generator pair and returns
/// certificates for each condition plus the two density claims they
/// jointly support, in that order.
pub fn check_abc(c1: &Rot3, c2: &Rot3) -> Vec<Certificate> {
    let a = cond_a(c1, c2);
    let b = cond_b(c1, c2);
    let c = cond_c(c1, c2);
    let joint = a.verdict.and(b.verdict).and(c.verdict);
    let conditions = Evidence::Conditions {
        cond_a: a.verdict,
        cond_b: b.verdict,
        cond_c: c.verdict,
    };
    let orbit = Certificate {
        claim: Claim::OrbitDense,
        verdict: joint,
        evidence: conditions.clone(),
    };
    let group = Certificate {
        claim: Claim::RotationsDense,
        verdict: joint,
        evidence: conditions,
    };
    vec![a, b, c, orbit, group]
}

fn square_check(g: &Rot3) -> SquareCheck {
    let sq = g.compose(g);
    let dist_identity = sq.dist(&Rot3::IDENTITY);
    SquareCheck {
        two_cos: g.0.trace() - 1.0,
        dist_identity,
        distinct: dist_identity > tol::ANGLE,
    }
}

fn cond_a(c1: &Rot3, c2: &Rot3) -> Certificate {
    let first = square_check(c1);
    let second = square_check(c2);
    let verdict = if first.distinct && second.distinct {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Certificate {
        claim: Claim::CondA,
        verdict,
        evidence: Evidence::Squares { first, second },
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn cond_b(c1: &Rot3, c2: &Rot3) -> Certificate {
    let axes = [c1, c2].map(|g| match axis_angle_of(g, tol::ANGLE) {
        Ok(aa) => Ok(aa.axis),
        Err(GroupError::IdentityInput) => Err(()),
        Err(e) => unreachable!("axis extraction on a valid rotation: {e}"),
    });
    // An identity generator fixes every vector, so an independent pair
    // of fixed eigenvectors always exists.
    let (verdict, cross_norm, full_eigenspace) = match axes {
        [Ok(a1), Ok(a2)] => {
            let n = {
                let c = cross(a1, a2);
                (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
            };
            let v = if n > tol::ANGLE {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            (v, Some(n), None)
        }
        [Err(()), _] => (Verdict::Holds, None, Some(1)),
        [_, Err(())] => (Verdict::Holds, None, Some(2)),
    };
    Certificate {
        claim: Claim::CondB,
        verdict,
        evidence: Evidence::Axes {
            first_axis: axes[0].ok(),
            second_axis: axes[1].ok(),
            cross_norm,
            full_eigenspace,
        },
    }
}

fn cond_c(c1: &Rot3, c2: &Rot3) -> Certificate {
    let rec = Recognition::default();
    let mut attempts = Vec::new();
    let mut satisfied_by = None;
    let mut verdict = Verdict::Fails;
    for (k, g) in [(1u8, c1), (2u8, c2)] {
        let cond = condition_c_for_rotation(g, &rec).expect("rotation trace in [-1, 3]");
        let (report, outcome) = ConditionCReport::from_condition(&cond);
        attempts.push(EigenphaseAttempt { k, result: report });
        match outcome {
            SlotOutcome::PassExact => {
                satisfied_by = Some(k);
                verdict = Verdict::Holds;
                break;
            }
            SlotOutcome::PassNumeric => verdict = Verdict::NumericOnly,
            SlotOutcome::Fail => {}
        }
    }
    Certificate {
        claim: Claim::CondC,
        verdict,
        evidence: Evidence::Eigenphase {
            attempts,
            satisfied_by,
        },
    }
}

/// How an angle reads as a multiple of pi, after exact inspection or
/// rational recognition of a floating-point value.
enum AngleClass {
    ExactRational(BigRational),
    ExactIrrational(QuadExt),
    NumericRational(BigRational),
    NumericUnknown,
}

fn classify_angle(spec: &AngleSpec) -> (AngleClass, f64) {
    let over_pi = spec.radians() / PI;
    let class = match spec {
        AngleSpec::RationalPi(r) => AngleClass::ExactRational(r.clone()),
        AngleSpec::QuadPi(q) => match q.as_rational() {
            Some(r) => AngleClass::ExactRational(r.clone()),
            None => AngleClass::ExactIrrational(q.clone()),
        },
        AngleSpec::Numeric(_) => {
            let rec = Recognition::default();
            match recognize_rational(over_pi, rec.max_den, rec.tol) {
                Some(r) => AngleClass::NumericRational(r),
                None => AngleClass::NumericUnknown,
            }
        }
    };
    (class, over_pi)
}

fn recognized_form(class: &AngleClass) -> Option<AngleSpec> {
    match class {
        AngleClass::ExactRational(r) | AngleClass::NumericRational(r) => {
            Some(AngleSpec::RationalPi(r.clone()))
        }
        AngleClass::ExactIrrational(q) => Some(AngleSpec::QuadPi(q.clone())),
        AngleClass::NumericUnknown => None,
    }
}

/// The angle over pi must be irrational. A floating-point value can
/// only ever support this numerically.
pub(super) fn irrational_slot(slot: &'static str, spec: &AngleSpec) -> SlotReport {
    let (class, value) = classify_angle(spec);
    let outcome = match &class {
        AngleClass::ExactIrrational(_) => SlotOutcome::PassExact,
        AngleClass::NumericUnknown => SlotOutcome::PassNumeric,
        AngleClass::ExactRational(_) | AngleClass::NumericRational(_) => SlotOutcome::Fail,
    };
    SlotReport {
        slot,
        role: "irrational",
        value,
        recognized: recognized_form(&class),
        outcome,
    }
}

/// The angle over pi must not be an integer.
pub(super) fn noninteger_slot(slot: &'static str, spec: &AngleSpec) -> SlotReport {
    let (class, value) = classify_angle(spec);
    let outcome = match &class {
        AngleClass::ExactRational(r) => {
            if r.is_integer() {
                SlotOutcome::Fail
            } else {
                SlotOutcome::PassExact
            }
        }
        AngleClass::ExactIrrational(_) => SlotOutcome::PassExact,
        AngleClass::NumericRational(r) => {
            if r.is_integer() {
                SlotOutcome::Fail
            } else {
                SlotOutcome::PassNumeric
            }
        }
        AngleClass::NumericUnknown => SlotOutcome::PassNumeric,
    };
    SlotReport {
        slot,
        role: "not_integer",
        value,
        recognized: recognized_form(&class),
        outcome,
    }
}

/// The angle over pi must be rational but not an integer.
pub(super) fn rational_noninteger_slot(slot: &'static str, spec: &AngleSpec) -> SlotReport {
    let (class, value) = classify_angle(spec);
    let outcome = match &class {
        AngleClass::ExactRational(r) => {
            if r.is_integer() {
                SlotOutcome::Fail
            } else {
                SlotOutcome::PassExact
            }
        }
        AngleClass::NumericRational(r) => {
            if r.is_integer() {
                SlotOutcome::Fail
            } else {
                SlotOutcome::PassNumeric
            }
        }
        AngleClass::ExactIrrational(_) | AngleClass::NumericUnknown => SlotOutcome::Fail,
    };
    SlotReport {
        slot,
        role: "rational_noninteger",
        value,
        recognized: recognized_form(&class),
        outcome,
    }
}

/// Interval membership is decided at floating-point resolution, so the
/// outcome is exact regardless of how the angle was given.
pub(super) fn phi_slot(slot: &'static str, spec: &AngleSpec) -> SlotReport {
    let value = spec.radians();
    let outcome = if value > 0.0 && value <= FRAC_PI_2 + 1e-12 {
        SlotOutcome::PassExact
    } else {
        SlotOutcome::Fail
    };
    SlotReport {
        slot,
        role: "in_(0,pi/2]",
        value,
        recognized: None,
        outcome,
    }
}

fn outcome_rank(o: SlotOutcome) -> u8 {
    match o {
        SlotOutcome::Fail => 0,
        SlotOutcome::PassNumeric => 1,
        SlotOutcome::PassExact => 2,
    }
}

/// Checks the sufficient angle pattern on a configured pair: one mixing
/// angle irrational over pi, the other not an integer multiple of pi,
/// with the axis tilt in (0, pi/2]. Both role assignments are tried;
/// the better one is reported. On a pass the full condition
/// certificates for the realized pair are embedded.
pub fn check_prop_cond1(cfg: &GenConfig) -> Certificate {
    let assignments = [
        [
            irrational_slot("theta1_over_pi", &cfg.theta1),
            noninteger_slot("theta2_over_pi", &cfg.theta2),
        ],
        [
            irrational_slot("theta2_over_pi", &cfg.theta2),
            noninteger_slot("theta1_over_pi", &cfg.theta1),
        ],
    ];
    let score = |pair: &[SlotReport; 2]| {
        let (r0, r1) = (outcome_rank(pair[0].outcome), outcome_rank(pair[1].outcome));
        (r0.min(r1), r0 + r1)
    };
    let best = if score(&assignments[1]) > score(&assignments[0]) {
        1
    } else {
        0
    };
    let mut slots: Vec<SlotReport> = assignments[best].to_vec();
    slots.push(phi_slot("phi", &cfg.phi));
    let verdict = verdict_of_slots(&slots);
    let embedded = if verdict.passed() {
        let (c1, c2) = gens_from_config(cfg);
        check_abc(&c1, &c2)
    } else {
        Vec::new()
    };
    Certificate {
        claim: Claim::AnglePattern,
        verdict,
        evidence: Evidence::Pattern {
            slots,
            witnesses: None,
            embedded,
        },
    }
}
