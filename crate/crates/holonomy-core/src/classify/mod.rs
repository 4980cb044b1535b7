//! Density certificates and finite-subgroup classification for generator
//! pairs.
//!
//! Everything here reports through [`Certificate`]: a named claim, a
//! three-valued verdict, and a structured evidence payload that records
//! what was actually measured or recognized. Exact verdicts come only
//! from exact inputs or from trace recognition in a quadratic field;
//! an unrecognized floating-point reading can support `NumericOnly`,
//! never `Holds`.

mod conditions;
mod config;
mod derived;
mod finite;
mod product;
mod theorems;

pub use conditions::{check_abc, check_prop_cond1};
pub use config::{gens_from_config, BallLimits, GenConfig};
pub use derived::{derived_gens, DerivedCase};
pub use finite::{
    classify_config, classify_gens, complexity_degree, Classification, ComplexityDegree,
    GroupKind,
};
pub use product::{minpoly_product, parse_word, ExactGap, GenLetter, ProductMinPoly};
pub use theorems::{check_thm_main3, check_thm_main4, check_thm_main5};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{AngleSpec, ConditionC, RatPoly};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("phi = {value} outside (0, pi/2]")]
    PhiOutOfRange { value: f64 },
    #[error("bad case parameters: {reason}")]
    BadCaseParams { reason: String },
    #[error("bad word {text:?}: expected characters 1 and 2")]
    BadWord { text: String },
}

/// Statement a certificate is about. Serialized names are the wire
/// contract consumed by the CLI and downstream tooling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// Neither generator squares to the identity.
    #[serde(rename = "condA")]
    CondA,
    /// The fixed axes of the generators are linearly independent.
    #[serde(rename = "condB")]
    CondB,
    /// Some generator has an eigenvalue that is not a root of unity.
    #[serde(rename = "condC")]
    CondC,
    /// One mixing angle irrational over pi, the other not an integer
    /// multiple of pi.
    #[serde(rename = "prop_cond1")]
    AnglePattern,
    /// The sphere orbit of the generated group is dense.
    #[serde(rename = "thm_main")]
    OrbitDense,
    /// The generated rotation group is dense in SO(3).
    #[serde(rename = "thm_main2")]
    RotationsDense,
    /// The lifted pair generates a dense subgroup of SO(4).
    #[serde(rename = "thm_main3")]
    Rot4Dense,
    /// The unitary pair generates a dense subgroup of SU(2).
    #[serde(rename = "thm_main4")]
    Su2Dense,
    /// The unitary pair generates a dense subgroup of U(2).
    #[serde(rename = "thm_main5")]
    U2Dense,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NumericOnly,
}

impl Verdict {
    /// Conjunction: any failure fails, any numeric reading demotes.
    pub fn and(self, rhs: Verdict) -> Verdict {
        use Verdict::*;
        match (self, rhs) {
            (Fails, _) | (_, Fails) => Fails,
            (Holds, Holds) => Holds,
            _ => NumericOnly,
        }
    }

    pub fn passed(self) -> bool {
        self != Verdict::Fails
    }
}

/// Outcome of one hypothesis slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotOutcome {
    PassExact,
    PassNumeric,
    Fail,
}

impl SlotOutcome {
    pub fn passed(self) -> bool {
        self != SlotOutcome::Fail
    }

    pub fn as_verdict(self) -> Verdict {
        match self {
            SlotOutcome::PassExact => Verdict::Holds,
            SlotOutcome::PassNumeric => Verdict::NumericOnly,
            SlotOutcome::Fail => Verdict::Fails,
        }
    }
}

/// One checked hypothesis slot: which input, which role it had to play,
/// the reading used, and whether it passed. `recognized` is the exact
/// or best-recognized form behind the outcome; for numeric outcomes it
/// is a reading, not a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct SlotReport {
    pub slot: &'static str,
    pub role: &'static str,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recognized: Option<AngleSpec>,
    pub outcome: SlotOutcome,
}

pub(crate) fn verdict_of_slots<'a, I>(slots: I) -> Verdict
where
    I: IntoIterator<Item = &'a SlotReport>,
{
    slots
        .into_iter()
        .fold(Verdict::Holds, |v, s| v.and(s.outcome.as_verdict()))
}

/// Serializable form of an eigenphase check on one element.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConditionCReport {
    /// Eigenvalue annihilated by a non-cyclotomic minimal polynomial.
    MinPoly { min_poly: RatPoly },
    /// Eigenphase recognized as an irrational quadratic multiple of pi.
    IrrationalAngle { over_pi: AngleSpec },
    /// Eigenvalue is a root of unity of this order.
    FiniteOrder { order: u64 },
    /// No exact reading; best rational approximation to the phase.
    Numeric {
        over_pi_num: i64,
        over_pi_den: u64,
        err: f64,
    },
}

impl ConditionCReport {
    pub(crate) fn from_condition(c: &ConditionC) -> (ConditionCReport, SlotOutcome) {
        match c {
            ConditionC::HoldsMinPoly { min_poly } => (
                ConditionCReport::MinPoly {
                    min_poly: min_poly.clone(),
                },
                SlotOutcome::PassExact,
            ),
            ConditionC::HoldsIrrationalAngle { over_pi } => (
                ConditionCReport::IrrationalAngle {
                    over_pi: AngleSpec::QuadPi(over_pi.clone()),
                },
                SlotOutcome::PassExact,
            ),
            ConditionC::Fails { order } => (
                ConditionCReport::FiniteOrder { order: *order },
                SlotOutcome::Fail,
            ),
            ConditionC::NumericOnly { over_pi_best } => (
                ConditionCReport::Numeric {
                    over_pi_num: over_pi_best.num,
                    over_pi_den: over_pi_best.den,
                    err: over_pi_best.err,
                },
                SlotOutcome::PassNumeric,
            ),
        }
    }
}

/// Eigenphase check on the `k`-th generator (1-based).
#[derive(Clone, Debug, Serialize)]
pub struct EigenphaseAttempt {
    pub k: u8,
    #[serde(flatten)]
    pub result: ConditionCReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareCheck {
    pub two_cos: f64,
    pub dist_identity: f64,
    pub distinct: bool,
}

/// Numeric witnesses attached to a pattern certificate.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PatternWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_plus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_minus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lifted_gens: Option<Vec<[[f64; 4]; 4]>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Squared-generator distances to the identity.
    Squares { first: SquareCheck, second: SquareCheck },
    /// Fixed-axis comparison. `full_eigenspace` marks a generator whose
    /// whole space is fixed (identity input), which satisfies the claim
    /// vacuously.
    Axes {
        #[serde(skip_serializing_if = "Option::is_none")]
        first_axis: Option<[f64; 3]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        second_axis: Option<[f64; 3]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        cross_norm: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        full_eigenspace: Option<u8>,
    },
    /// Per-generator eigenphase checks; `satisfied_by` names the first
    /// generator with an exact certificate.
    Eigenphase {
        attempts: Vec<EigenphaseAttempt>,
        #[serde(skip_serializing_if = "Option::is_none")]
        satisfied_by: Option<u8>,
    },
    /// Conjunction of the three generator conditions.
    Conditions {
        cond_a: Verdict,
        cond_b: Verdict,
        cond_c: Verdict,
    },
    /// Hypothesis slots of an angle-pattern statement.
    Pattern {
        slots: Vec<SlotReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witnesses: Option<PatternWitnesses>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        embedded: Vec<Certificate>,
    },
    /// Direct checks on a pair of unitaries plus the conditions of
    /// their rotation images.
    UnitaryPair {
        fourth_power_dists: [f64; 2],
        min_eigenvector_angle: f64,
        attempts: Vec<EigenphaseAttempt>,
        #[serde(skip_serializing_if = "Option::is_none")]
        satisfied_by: Option<u8>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        image_conditions: Vec<Certificate>,
    },
    /// Central-phase decomposition of a unitary pair. `branch_reflected`
    /// records that the rotation angle of the second element was folded
    /// to put its axis cosine in [0, 1].
    PhaseDecomposition {
        gamma: f64,
        gamma_over_pi: f64,
        psi_over_pi: f64,
        #[serde(skip_serializing_if = "Option::is_none")]
        q_over_pi: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        phi: Option<f64>,
        branch_reflected: bool,
        su2_det_err: f64,
        round_trip_err: f64,
        slots: Vec<SlotReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        n: Option<u64>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub claim: Claim,
    pub verdict: Verdict,
    pub evidence: Evidence,
}
