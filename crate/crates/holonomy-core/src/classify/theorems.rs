use std::f64::consts::{FRAC_PI_2, PI};

use num::{BigInt, BigRational};

use crate::exact::{condition_c_for_su2, recognize_value, AngleSpec, Recognition};
use crate::groups::{lift_so3_pair, phi_cover, C64, SU2, U2Mat};
use crate::tol;

use super::conditions::{
    check_abc, irrational_slot, phi_slot, rational_noninteger_slot,
};
use super::config::{gens_from_config, GenConfig};
use super::{
    verdict_of_slots, Certificate, Claim, ConditionCReport, EigenphaseAttempt, Evidence,
    PatternWitnesses, SlotOutcome, SlotReport, Verdict,
};

fn slot_rational(s: &SlotReport) -> Option<&BigRational> {
    match &s.recognized {
        Some(AngleSpec::RationalPi(r)) => Some(r),
        _ => None,
    }
}

fn to_parts(r: &BigRational) -> Option<(u64, u64)> {
    let p: BigInt = r.numer().clone();
    let q: BigInt = r.denom().clone();
    let p = u64::try_from(p.magnitude().clone()).ok()?;
    let q = u64::try_from(q.magnitude().clone()).ok()?;
    Some((p, q))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least N >= 1 with N * r an even integer.
fn least_even_multiple(r: &BigRational) -> Option<u64> {
    let (p, q) = to_parts(r)?;
    let two_q = q.checked_mul(2)?;
    Some(two_q / gcd(p, two_q).max(1))
}

/// Least N >= 1 with N * r / 2 an even integer.
fn least_half_even_multiple(r: &BigRational) -> Option<u64> {
    let (p, q) = to_parts(r)?;
    let four_q = q.checked_mul(4)?;
    Some(four_q / gcd(p, four_q).max(1))
}

/// Checks the mixed-rationality pattern on two configured pairs whose
/// lifts act on the two invariant-plane factors: the first pair has a
/// rational first angle and irrational second, the second pair the
/// reverse. On a pass the evidence carries the least powers sending
/// each rational factor to a half-turn pair and the lifted
/// four-dimensional generators.
pub fn check_thm_main3(cfg_plus: &GenConfig, cfg_minus: &GenConfig) -> Certificate {
    let slots = vec![
        rational_noninteger_slot("theta_plus_1_over_pi", &cfg_plus.theta1),
        irrational_slot("theta_plus_2_over_pi", &cfg_plus.theta2),
        irrational_slot("theta_minus_1_over_pi", &cfg_minus.theta1),
        rational_noninteger_slot("theta_minus_2_over_pi", &cfg_minus.theta2),
        phi_slot("phi_plus", &cfg_plus.phi),
        phi_slot("phi_minus", &cfg_minus.phi),
    ];
    let verdict = verdict_of_slots(&slots);
    let n_plus = slot_rational(&slots[0]).and_then(least_even_multiple);
    let n_minus = slot_rational(&slots[3]).and_then(least_even_multiple);
    let lifted_gens = if verdict.passed() {
        let (p1, p2) = gens_from_config(cfg_plus);
        let (m1, m2) = gens_from_config(cfg_minus);
        Some(vec![
            lift_so3_pair(&p1, &m1).0 .0,
            lift_so3_pair(&p2, &m2).0 .0,
        ])
    } else {
        None
    };
    Certificate {
        claim: Claim::Rot4Dense,
        verdict,
        evidence: Evidence::Pattern {
            slots,
            witnesses: Some(PatternWitnesses {
                n_plus,
                n_minus,
                n: None,
                lifted_gens,
            }),
            embedded: Vec::new(),
        },
    }
}

/// Checks a unitary pair for dense generation: neither fourth power is
/// the identity, the eigenvector lines are distinct, and some
/// eigenphase escapes the roots of unity. On a pass the condition
/// certificates of the rotation images are embedded.
pub fn check_thm_main4(b1: &SU2, b2: &SU2) -> Certificate {
    let d1 = b1.pow(4).dist(&SU2::IDENTITY);
    let d2 = b2.pow(4).dist(&SU2::IDENTITY);
    let powers = if d1 > tol::ANGLE && d2 > tol::ANGLE {
        Verdict::Holds
    } else {
        Verdict::Fails
    };

    // Eigenvector lines of a non-central element are the two antipodes
    // of its axis; the minimal Hermitian angle between the lines of the
    // two elements vanishes exactly on a shared eigenvector. A central
    // element shares eigenvectors with everything.
    let min_eigenvector_angle = match (b1.covered_axis(), b2.covered_axis()) {
        (Some(a1), Some(a2)) => {
            let dot = (a1[0] * a2[0] + a1[1] * a2[1] + a1[2] * a2[2]).abs().min(1.0);
            (((1.0 + dot) / 2.0).sqrt().min(1.0)).acos()
        }
        _ => 0.0,
    };
    let axes = if min_eigenvector_angle > tol::ANGLE {
        Verdict::Holds
    } else {
        Verdict::Fails
    };

    let rec = Recognition::default();
    let mut attempts = Vec::new();
    let mut satisfied_by = None;
    let mut phases = Verdict::Fails;
    for (k, u) in [(1u8, b1), (2u8, b2)] {
        let cond = condition_c_for_su2(u, &rec).expect("unitary trace in [-2, 2]");
        let (report, outcome) = ConditionCReport::from_condition(&cond);
        attempts.push(EigenphaseAttempt { k, result: report });
        match outcome {
            SlotOutcome::PassExact => {
                satisfied_by = Some(k);
                phases = Verdict::Holds;
                break;
            }
            SlotOutcome::PassNumeric => phases = Verdict::NumericOnly,
            SlotOutcome::Fail => {}
        }
    }

    let verdict = powers.and(axes).and(phases);
    let image_conditions = if verdict.passed() {
        check_abc(&phi_cover(b1), &phi_cover(b2))
    } else {
        Vec::new()
    };
    Certificate {
        claim: Claim::Su2Dense,
        verdict,
        evidence: Evidence::UnitaryPair {
            fourth_power_dists: [d1, d2],
            min_eigenvector_angle,
            attempts,
            satisfied_by,
            image_conditions,
        },
    }
}

/// Checks a pair of unitaries for dense generation of the full unitary
/// group: the first must be a diagonal special rotation with irrational
/// turn, the second a rational non-integer turn carrying an irrational
/// central phase, with the eigenaxes tilted into (0, pi/2].
///
/// The central phase is read modulo pi and the rotation angle of the
/// second element is folded so its axis cosine is nonnegative; both
/// normalizations are recorded. The `gamma_over_pi` slot reports the
/// phase over pi without gating the verdict.
pub fn check_thm_main5(b1: &U2Mat, b2: &U2Mat) -> Certificate {
    let (g1, s1) = b1.phase_split();
    let (gamma, s2) = b2.phase_split();

    let su2_det_err = {
        let m = s2.matrix().0;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        ((det.re - 1.0).powi(2) + det.im.powi(2)).sqrt()
    };
    let round_trip_err = {
        let phase = C64::new(gamma.cos(), gamma.sin());
        let m = s2.matrix().0;
        let b = b2.0 .0;
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((m[i][j] * phase - b[i][j]).norm());
            }
        }
        worst
    };

    let det_phase_err = g1.min(PI - g1);
    let b1_special = SlotReport {
        slot: "b1_det_phase",
        role: "zero_mod_pi",
        value: g1,
        recognized: None,
        outcome: if det_phase_err < tol::ANGLE {
            SlotOutcome::PassExact
        } else {
            SlotOutcome::Fail
        },
    };
    let off_diag = s1.beta.norm();
    let b1_diagonal = SlotReport {
        slot: "b1_offdiagonal",
        role: "diagonal",
        value: off_diag,
        recognized: None,
        outcome: if off_diag < tol::ANGLE {
            SlotOutcome::PassExact
        } else {
            SlotOutcome::Fail
        },
    };

    let psi_over_pi = s1.covered_angle() / PI;
    let psi = irrational_slot("psi_over_pi", &AngleSpec::Numeric(s1.covered_angle()));

    // Axis convention: the stored axis points against the rotation
    // direction, so the eigenaxis cosine is the negated first
    // component. Folding the angle through 4 pi flips it.
    let (q_over_pi, cos_phi, branch_reflected) = match s2.covered_axis() {
        Some(a) => {
            let c = -a[0];
            if c >= 0.0 {
                (Some(s2.covered_angle() / PI), Some(c.min(1.0)), false)
            } else {
                (Some(4.0 - s2.covered_angle() / PI), Some((-c).min(1.0)), true)
            }
        }
        None => (None, None, false),
    };
    let q = match q_over_pi {
        Some(qv) => rational_noninteger_slot("q_over_pi", &AngleSpec::Numeric(qv * PI)),
        None => SlotReport {
            slot: "q_over_pi",
            role: "rational_noninteger",
            value: 0.0,
            recognized: None,
            outcome: SlotOutcome::Fail,
        },
    };
    let phi = cos_phi.map(f64::acos);
    let phi_report = SlotReport {
        slot: "phi",
        role: "in_(0,pi/2]",
        value: phi.unwrap_or(0.0),
        recognized: None,
        outcome: match phi {
            Some(p) if p > tol::ANGLE && p <= FRAC_PI_2 + 1e-12 => SlotOutcome::PassExact,
            _ => SlotOutcome::Fail,
        },
    };

    let gamma_slot = SlotReport {
        slot: "gamma",
        role: "irrational",
        value: gamma,
        recognized: None,
        outcome: match recognize_value(gamma, &Recognition::default()) {
            Some(v) if v.is_rational() => SlotOutcome::Fail,
            _ => SlotOutcome::PassNumeric,
        },
    };

    let n = slot_rational(&q).and_then(least_half_even_multiple);

    let mut slots = vec![b1_special, b1_diagonal, psi, q, phi_report, gamma_slot];
    let verdict = verdict_of_slots(&slots);
    slots.push(SlotReport {
        slot: "gamma_over_pi",
        role: "irrational_informational",
        value: gamma / PI,
        recognized: None,
        outcome: match recognize_value(gamma / PI, &Recognition::default()) {
            Some(v) if v.is_rational() => SlotOutcome::Fail,
            _ => SlotOutcome::PassNumeric,
        },
    });

    Certificate {
        claim: Claim::U2Dense,
        verdict,
        evidence: Evidence::PhaseDecomposition {
            gamma,
            gamma_over_pi: gamma / PI,
            psi_over_pi,
            q_over_pi,
            phi,
            branch_reflected,
            su2_det_err,
            round_trip_err,
            slots,
            n,
        },
    }
}
