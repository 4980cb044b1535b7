use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::Serialize;

use crate::exact::{condition_c_for_rotation, recognize_rational, Recognition};
use crate::groups::{axis_angle_of, GroupError, Rot3};
use crate::orbit::{group_ball, orbit};

use super::config::{gens_from_config, BallLimits, GenConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
    Alt4,
    Sym4,
    Alt5,
    /// Ball enumeration did not close and no exact certificate was
    /// found on the shallow elements.
    InfiniteLikely,
    /// Ball enumeration did not close and some shallow element has an
    /// eigenvalue that is provably not a root of unity.
    InfiniteCertified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: GroupKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
}

/// Depth cutoff for the exact-certificate sweep on unsaturated balls.
const CERT_DEPTH: u32 = 6;

/// Order of one rotation, read from its angle. Falls back to repeated
/// composition when the angle is not recognized as a rational turn.
fn element_order(g: &Rot3, cap: u64) -> u64 {
    match axis_angle_of(g, 1e-9) {
        Err(GroupError::IdentityInput) => return 1,
        Ok(aa) => {
            // theta = 2 pi k / n in a finite group; the reduced
            // denominator of theta / 2 pi is the order.
            if let Some(r) = recognize_rational(aa.theta / (2.0 * PI), cap, 1e-8) {
                if let Ok(d) = u64::try_from(r.denom()) {
                    return d;
                }
            }
        }
        Err(e) => unreachable!("axis extraction on a valid rotation: {e}"),
    }
    let mut p = *g;
    for k in 1..=cap {
        if p.dist(&Rot3::IDENTITY) < 1e-6 {
            return k;
        }
        p = p.compose(g);
        p.renormalize();
    }
    cap + 1
}

/// Names the group generated by `gens` by enumerating its ball. A ball
/// that closes is matched against the finite rotation groups through
/// its order spectrum; one that does not close is reported infinite,
/// certified when a shallow element carries an exact eigenvalue
/// certificate.
pub fn classify_gens(gens: &[Rot3], limits: &BallLimits) -> Classification {
    let ball = group_ball(gens, limits.tol, limits.max_size, limits.max_depth);
    if !ball.saturated {
        let rec = Recognition::default();
        for (g, d) in ball.elements.iter().zip(&ball.depths) {
            if *d > CERT_DEPTH {
                break;
            }
            let cond = condition_c_for_rotation(g, &rec).expect("rotation trace in [-1, 3]");
            if cond.holds() == Some(true) {
                return Classification {
                    kind: GroupKind::InfiniteCertified,
                    order: None,
                };
            }
        }
        return Classification {
            kind: GroupKind::InfiniteLikely,
            order: None,
        };
    }

    let n = ball.elements.len() as u64;
    let orders: Vec<u64> = ball.elements.iter().map(|g| element_order(g, n)).collect();
    let max_order = orders.iter().copied().max().unwrap_or(1);
    // An element of full order generates the whole group.
    if max_order == n {
        return Classification {
            kind: GroupKind::Cyclic,
            order: Some(n),
        };
    }
    let spectrum: BTreeSet<u64> = orders.into_iter().collect();
    let spec: Vec<u64> = spectrum.into_iter().collect();
    let kind = match (n, spec.as_slice()) {
        (12, [1, 2, 3]) => GroupKind::Alt4,
        (24, [1, 2, 3, 4]) => GroupKind::Sym4,
        (60, [1, 2, 3, 5]) => GroupKind::Alt5,
        // Finite rotation groups are cyclic, dihedral, or one of the
        // three exceptional groups.
        _ => GroupKind::Dihedral,
    };
    Classification {
        kind,
        order: Some(n),
    }
}

pub fn classify_config(cfg: &GenConfig, limits: &BallLimits) -> Classification {
    let (c1, c2) = gens_from_config(cfg);
    classify_gens(&[c1, c2], limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexityDegree {
    /// The point orbit closed at this many points.
    Finite(usize),
    /// The orbit hit an enumeration limit without closing.
    InfiniteLikely,
}

/// Number of distinct images of `omega` under the generated group,
/// when the orbit closes within the given limits.
pub fn complexity_degree(gens: &[Rot3], omega: [f64; 3], limits: &BallLimits) -> ComplexityDegree {
    let report = orbit(gens, omega, limits.max_depth, limits.max_size, limits.tol);
    if report.saturated {
        ComplexityDegree::Finite(report.points.len())
    } else {
        ComplexityDegree::InfiniteLikely
    }
}
