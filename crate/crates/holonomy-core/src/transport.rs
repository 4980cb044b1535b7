//! Constant-coefficient connections on torus product bundles and parallel
//! transport along normal polygonal curves.
//!
//! A connection is the pair (P1, P2) in `d + P1 dx + P2 dy`. Transport along
//! a full x-loop is exp(-2*pi*P1), so a curve's transport is a word in the
//! two loop matrices and their inverses; segment offsets never enter because
//! the coefficients are constant.

use num::Complex;
use serde::{Deserialize, Serialize};

use crate::groups::{
    exp_anti_hermitian, exp_so4_skew, ibasis, log_so4, so4_to_so3_pair, su2_log, C64, CMat2,
    GroupError, Mat4, Rot3, Rot4, SU2, U2Mat,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TransportError {
    #[error("matrix exp(-2 pi P) misses the generator by {err}")]
    LogBranchFailure { err: f64 },
    #[error("vector does not match the connection fiber")]
    DimensionMismatch,
    #[error("operation requires the real rank-4 fiber")]
    WrongFiber,
    #[error("zero winding in curve word")]
    ZeroWinding,
    #[error("bad curve token {token:?}, expected axis:winding like x:3 or y:-2")]
    WordSyntax { token: String },
    #[error("p{index} is not skew-symmetric (defect {err})")]
    NotSkewSymmetric { index: u8, err: f64 },
    #[error("p{index} is not anti-Hermitian (defect {err})")]
    NotAntiHermitian { index: u8, err: f64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

/// A normal polygonal curve reduced to its homotopy data: a word of
/// (axis, winding) steps applied in order. Empty word = constant curve.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NPCWord {
    steps: Vec<(Axis, i32)>,
}

impl NPCWord {
    pub fn new(steps: Vec<(Axis, i32)>) -> Result<NPCWord, TransportError> {
        if steps.iter().any(|&(_, m)| m == 0) {
            return Err(TransportError::ZeroWinding);
        }
        Ok(NPCWord { steps })
    }

    pub fn empty() -> NPCWord {
        NPCWord::default()
    }

    pub fn steps(&self) -> &[(Axis, i32)] {
        &self.steps
    }

    pub fn concat(&self, rhs: &NPCWord) -> NPCWord {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&rhs.steps);
        NPCWord { steps }
    }

    /// Parses `x:3,y:-2`; the empty string is the constant curve.
    pub fn parse(text: &str) -> Result<NPCWord, TransportError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(NPCWord::empty());
        }
        let mut steps = Vec::new();
        for token in text.split(',') {
            let bad = || TransportError::WordSyntax {
                token: token.to_string(),
            };
            let (axis, winding) = token.trim().split_once(':').ok_or_else(bad)?;
            let axis = match axis.trim() {
                "x" => Axis::X,
                "y" => Axis::Y,
                _ => return Err(bad()),
            };
            let winding: i32 = winding.trim().parse().map_err(|_| bad())?;
            if winding == 0 {
                return Err(TransportError::ZeroWinding);
            }
            steps.push((axis, winding));
        }
        Ok(NPCWord { steps })
    }
}

impl std::fmt::Display for NPCWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (axis, m)) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let a = match axis {
                Axis::X => "x",
                Axis::Y => "y",
            };
            write!(f, "{a}:{m}")?;
        }
        Ok(())
    }
}

/// Loop transports generating the holonomy group.
#[derive(Clone, Debug)]
pub enum HolonomyGens {
    So4 { a1: Rot4, a2: Rot4 },
    Su2 { a1: SU2, a2: SU2 },
    U2 { a1: U2Mat, a2: U2Mat },
}

/// Coefficient pair of `d + P1 dx + P2 dy`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "fiber", rename_all = "lowercase")]
pub enum Connection {
    Real4 { p1: Mat4, p2: Mat4 },
    Complex2 { p1: CMat2, p2: CMat2 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FiberVector {
    Real4([f64; 4]),
    Complex2([C64; 2]),
}

fn skew_defect(m: &Mat4) -> f64 {
    let mut err = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            err = err.max((m.0[i][j] + m.0[j][i]).abs());
        }
    }
    err
}

fn anti_hermitian_defect(m: &CMat2) -> f64 {
    let mut err = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let s = m.0[i][j] + m.0[j][i].conj();
            err = err.max(s.norm());
        }
    }
    err
}

impl Connection {
    pub fn real4(p1: Mat4, p2: Mat4) -> Result<Connection, TransportError> {
        let conn = Connection::Real4 { p1, p2 };
        conn.validate()?;
        Ok(conn)
    }

    pub fn complex2(p1: CMat2, p2: CMat2) -> Result<Connection, TransportError> {
        let conn = Connection::Complex2 { p1, p2 };
        conn.validate()?;
        Ok(conn)
    }

    pub fn validate(&self) -> Result<(), TransportError> {
        match self {
            Connection::Real4 { p1, p2 } => {
                for (index, p) in [(1u8, p1), (2, p2)] {
                    let err = skew_defect(p);
                    if err > crate::tol::ORTH {
                        return Err(TransportError::NotSkewSymmetric { index, err });
                    }
                }
            }
            Connection::Complex2 { p1, p2 } => {
                for (index, p) in [(1u8, p1), (2, p2)] {
                    let err = anti_hermitian_defect(p);
                    if err > crate::tol::ORTH {
                        return Err(TransportError::NotAntiHermitian { index, err });
                    }
                }
            }
        }
        Ok(())
    }

    /// True when the complex coefficients are trace-free, i.e. valued in
    /// su(2) so the induced determinant-line connection is trivial.
    pub fn is_special(&self) -> bool {
        match self {
            Connection::Real4 { .. } => false,
            Connection::Complex2 { p1, p2 } => {
                p1.trace().norm() <= crate::tol::ORTH && p2.trace().norm() <= crate::tol::ORTH
            }
        }
    }

    /// The loop transports A_k = exp(-2 pi P_k).
    pub fn holonomy_gens(&self) -> Result<HolonomyGens, TransportError> {
        match self {
            Connection::Real4 { p1, p2 } => {
                let a1 = exp_so4_skew(&p1.scale(-2.0 * std::f64::consts::PI));
                let a2 = exp_so4_skew(&p2.scale(-2.0 * std::f64::consts::PI));
                Ok(HolonomyGens::So4 { a1, a2 })
            }
            Connection::Complex2 { p1, p2 } => {
                let a1 = exp_anti_hermitian(&p1.scale(Complex::new(-2.0 * std::f64::consts::PI, 0.0)));
                let a2 = exp_anti_hermitian(&p2.scale(Complex::new(-2.0 * std::f64::consts::PI, 0.0)));
                if self.is_special() {
                    Ok(HolonomyGens::Su2 {
                        a1: SU2::from_matrix(&a1, crate::tol::ORTH)?,
                        a2: SU2::from_matrix(&a2, crate::tol::ORTH)?,
                    })
                } else {
                    Ok(HolonomyGens::U2 {
                        a1: U2Mat::new(a1, crate::tol::ORTH)?,
                        a2: U2Mat::new(a2, crate::tol::ORTH)?,
                    })
                }
            }
        }
    }
}

/// Principal-branch coefficients reproducing the given loop transports:
/// P_k = -log(a_k) / (2 pi).
pub fn connection_from_gens(gens: &HolonomyGens) -> Result<Connection, TransportError> {
    let scale = -1.0 / (2.0 * std::f64::consts::PI);
    let conn = match gens {
        HolonomyGens::So4 { a1, a2 } => Connection::Real4 {
            p1: log_so4(a1).scale(scale),
            p2: log_so4(a2).scale(scale),
        },
        HolonomyGens::Su2 { a1, a2 } => Connection::Complex2 {
            p1: su2_algebra_matrix(&su2_log(a1)).scale(Complex::new(scale, 0.0)),
            p2: su2_algebra_matrix(&su2_log(a2)).scale(Complex::new(scale, 0.0)),
        },
        HolonomyGens::U2 { a1, a2 } => Connection::Complex2 {
            p1: u2_log(a1).scale(Complex::new(scale, 0.0)),
            p2: u2_log(a2).scale(Complex::new(scale, 0.0)),
        },
    };
    conn.validate()?;
    let err = round_trip_defect(&conn, gens)?;
    if err > 1e-10 {
        return Err(TransportError::LogBranchFailure { err });
    }
    Ok(conn)
}

fn su2_algebra_matrix(w: &[f64; 3]) -> CMat2 {
    let basis = ibasis();
    let mut out = CMat2::zero();
    for (k, b) in basis.iter().enumerate() {
        out = out.add(&b.scale(Complex::new(w[k], 0.0)));
    }
    out
}

/// Principal unitary logarithm: central phase from arg(det) in [0, 2 pi)
/// plus the log of the remaining special part.
fn u2_log(u: &U2Mat) -> CMat2 {
    let (gamma, special) = u.phase_split();
    let central = CMat2::IDENTITY.scale(Complex::new(0.0, gamma));
    central.add(&su2_algebra_matrix(&su2_log(&special)))
}

fn round_trip_defect(conn: &Connection, gens: &HolonomyGens) -> Result<f64, TransportError> {
    let back = conn.holonomy_gens()?;
    Ok(match (gens, &back) {
        (HolonomyGens::So4 { a1, a2 }, HolonomyGens::So4 { a1: b1, a2: b2 }) => a1
            .0
            .max_abs_diff(&b1.0)
            .max(a2.0.max_abs_diff(&b2.0)),
        (HolonomyGens::Su2 { a1, a2 }, HolonomyGens::Su2 { a1: b1, a2: b2 }) => {
            a1.max_abs_diff(b1).max(a2.max_abs_diff(b2))
        }
        (HolonomyGens::U2 { a1, a2 }, HolonomyGens::U2 { a1: b1, a2: b2 }) => a1
            .0
            .max_abs_diff(&b1.0)
            .max(a2.0.max_abs_diff(&b2.0)),
        // An su(2)-valued connection reads back as Su2 even when the inputs
        // arrived as U2 values.
        (HolonomyGens::U2 { a1, a2 }, HolonomyGens::Su2 { a1: b1, a2: b2 }) => a1
            .0
            .max_abs_diff(&b1.matrix())
            .max(a2.0.max_abs_diff(&b2.matrix())),
        _ => return Err(TransportError::DimensionMismatch),
    })
}

/// Transport of the whole word as a single group element acting on the fiber.
pub fn transport(
    conn: &Connection,
    word: &NPCWord,
    v: &FiberVector,
) -> Result<FiberVector, TransportError> {
    match (conn.holonomy_gens()?, v) {
        (HolonomyGens::So4 { a1, a2 }, FiberVector::Real4(v)) => {
            let mut acc = *v;
            for &(axis, m) in word.steps() {
                let a = match axis {
                    Axis::X => &a1,
                    Axis::Y => &a2,
                };
                acc = a.pow(m.into()).act(acc);
            }
            Ok(FiberVector::Real4(acc))
        }
        (HolonomyGens::Su2 { a1, a2 }, FiberVector::Complex2(v)) => {
            let mut acc = *v;
            for &(axis, m) in word.steps() {
                let a = match axis {
                    Axis::X => &a1,
                    Axis::Y => &a2,
                };
                acc = a.pow(m.into()).matrix().matvec(acc);
            }
            Ok(FiberVector::Complex2(acc))
        }
        (HolonomyGens::U2 { a1, a2 }, FiberVector::Complex2(v)) => {
            let mut acc = *v;
            for &(axis, m) in word.steps() {
                let a = match axis {
                    Axis::X => &a1,
                    Axis::Y => &a2,
                };
                acc = a.pow(m.into()).0.matvec(acc);
            }
            Ok(FiberVector::Complex2(acc))
        }
        _ => Err(TransportError::DimensionMismatch),
    }
}

/// Independent check of `transport`: fourth-order Runge-Kutta integration of
/// xi' = -P xi segment by segment, each winding spanning parameter 2 pi.
pub fn transport_ode_oracle(
    conn: &Connection,
    word: &NPCWord,
    v: &FiberVector,
    step: f64,
) -> Result<FiberVector, TransportError> {
    assert!(step > 0.0);
    match (conn, v) {
        (Connection::Real4 { p1, p2 }, FiberVector::Real4(v)) => {
            let mut acc = *v;
            for &(axis, m) in word.steps() {
                let p = match axis {
                    Axis::X => p1,
                    Axis::Y => p2,
                };
                let rhs = p.scale(-f64::from(m.signum()));
                acc = rk4_real(&rhs, acc, 2.0 * std::f64::consts::PI * f64::from(m.abs()), step);
            }
            Ok(FiberVector::Real4(acc))
        }
        (Connection::Complex2 { p1, p2 }, FiberVector::Complex2(v)) => {
            let mut acc = *v;
            for &(axis, m) in word.steps() {
                let p = match axis {
                    Axis::X => p1,
                    Axis::Y => p2,
                };
                let rhs = p.scale(Complex::new(-f64::from(m.signum()), 0.0));
                acc = rk4_complex(&rhs, acc, 2.0 * std::f64::consts::PI * f64::from(m.abs()), step);
            }
            Ok(FiberVector::Complex2(acc))
        }
        _ => Err(TransportError::DimensionMismatch),
    }
}

fn rk4_real(a: &Mat4, mut v: [f64; 4], length: f64, step: f64) -> [f64; 4] {
    let n = (length / step).ceil().max(1.0) as u64;
    let h = length / n as f64;
    let ax = |v: &[f64; 4]| a.matvec(*v);
    for _ in 0..n {
        let k1 = ax(&v);
        let k2 = ax(&add4(&v, &scale4(&k1, h / 2.0)));
        let k3 = ax(&add4(&v, &scale4(&k2, h / 2.0)));
        let k4 = ax(&add4(&v, &scale4(&k3, h)));
        for i in 0..4 {
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    v
}

fn rk4_complex(a: &CMat2, mut v: [C64; 2], length: f64, step: f64) -> [C64; 2] {
    let n = (length / step).ceil().max(1.0) as u64;
    let h = length / n as f64;
    let ax = |v: &[C64; 2]| a.matvec(*v);
    for _ in 0..n {
        let k1 = ax(&v);
        let k2 = ax(&[v[0] + k1[0] * (h / 2.0), v[1] + k1[1] * (h / 2.0)]);
        let k3 = ax(&[v[0] + k2[0] * (h / 2.0), v[1] + k2[1] * (h / 2.0)]);
        let k4 = ax(&[v[0] + k3[0] * h, v[1] + k3[1] * h]);
        for i in 0..2 {
            v[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
    }
    v
}

fn add4(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| a[i] + b[i])
}

fn scale4(a: &[f64; 4], k: f64) -> [f64; 4] {
    a.map(|x| x * k)
}

/// Generator pairs of the transports induced on the self-dual and
/// anti-self-dual halves of the exterior square.
#[derive(Clone, Debug)]
pub struct InducedGens {
    pub plus: (Rot3, Rot3),
    pub minus: (Rot3, Rot3),
}

pub fn lambda2_gens(conn: &Connection) -> Result<InducedGens, TransportError> {
    let HolonomyGens::So4 { a1, a2 } = conn.holonomy_gens()? else {
        return Err(TransportError::WrongFiber);
    };
    let (p1, m1) = so4_to_so3_pair(&a1);
    let (p2, m2) = so4_to_so3_pair(&a2);
    Ok(InducedGens {
        plus: (p1, p2),
        minus: (m1, m2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{b_theta, c_theta, conj_su2, su2_from_rot3, v_phi_gamma, Mat3};
    use std::f64::consts::PI;

    fn block_rotation(alpha: f64) -> Rot4 {
        let (c, s) = (alpha.cos(), alpha.sin());
        Rot4::new(Mat4([
            [c, -s, 0.0, 0.0],
            [s, c, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]), 1e-12)
        .unwrap()
    }

    fn sample_su2(seed: u32) -> SU2 {
        let t = seed as f64;
        let u = b_theta(0.7 + t);
        let c = su2_from_rot3(&v_phi_gamma(0.4 + 0.2 * t, 0.3 * t).compose(&c_theta(1.1)));
        conj_su2(&c, &u)
    }

    #[test]
    fn identity_connection_is_flat_zero() {
        let gens = HolonomyGens::So4 {
            a1: Rot4::IDENTITY,
            a2: Rot4::IDENTITY,
        };
        let conn = connection_from_gens(&gens).unwrap();
        let Connection::Real4 { p1, p2 } = &conn else {
            panic!("wrong fiber");
        };
        assert_eq!(p1.max_abs_diff(&Mat4::zero()), 0.0);
        assert_eq!(p2.max_abs_diff(&Mat4::zero()), 0.0);
    }

    #[test]
    fn quarter_block_rotation_coefficient() {
        let a = block_rotation(PI / 2.0);
        let gens = HolonomyGens::So4 {
            a1: a.clone(),
            a2: Rot4::IDENTITY,
        };
        let conn = connection_from_gens(&gens).unwrap();
        let Connection::Real4 { p1, .. } = &conn else {
            panic!("wrong fiber");
        };
        let mut expected = Mat4::zero();
        expected.0[0][1] = 0.25;
        expected.0[1][0] = -0.25;
        assert!(p1.max_abs_diff(&expected) < 1e-14);
        let HolonomyGens::So4 { a1, .. } = conn.holonomy_gens().unwrap() else {
            panic!();
        };
        assert!(a1.0.max_abs_diff(&a.0) < 1e-12);
    }

    #[test]
    fn su2_round_trip_stays_special() {
        let gens = HolonomyGens::Su2 {
            a1: sample_su2(0),
            a2: sample_su2(1),
        };
        let conn = connection_from_gens(&gens).unwrap();
        assert!(conn.is_special());
        let HolonomyGens::Su2 { a1, a2 } = conn.holonomy_gens().unwrap() else {
            panic!("lost su(2) form");
        };
        let HolonomyGens::Su2 { a1: g1, a2: g2 } = gens else {
            unreachable!();
        };
        assert!(a1.max_abs_diff(&g1) < 1e-12);
        assert!(a2.max_abs_diff(&g2) < 1e-12);
    }

    #[test]
    fn u2_round_trip_with_central_phase() {
        let phase = C64::new(0.0, 0.9).exp();
        let b1 = U2Mat::new(sample_su2(2).matrix().scale(phase), 1e-12).unwrap();
        let b2 = U2Mat::new(sample_su2(3).matrix(), 1e-12).unwrap();
        let gens = HolonomyGens::U2 {
            a1: b1.clone(),
            a2: b2.clone(),
        };
        let conn = connection_from_gens(&gens).unwrap();
        assert!(!conn.is_special());
        let HolonomyGens::U2 { a1, a2 } = conn.holonomy_gens().unwrap() else {
            panic!("expected unitary generators");
        };
        assert!(a1.0.max_abs_diff(&b1.0) < 1e-12);
        assert!(a2.0.max_abs_diff(&b2.0) < 1e-12);
    }

    #[test]
    fn word_parse_and_format() {
        let w = NPCWord::parse("x:3, y:-2,x:1").unwrap();
        assert_eq!(
            w.steps(),
            &[(Axis::X, 3), (Axis::Y, -2), (Axis::X, 1)]
        );
        assert_eq!(w.to_string(), "x:3,y:-2,x:1");
        assert_eq!(NPCWord::parse("").unwrap(), NPCWord::empty());
        assert!(matches!(
            NPCWord::parse("x:0"),
            Err(TransportError::ZeroWinding)
        ));
        assert!(matches!(
            NPCWord::parse("z:1"),
            Err(TransportError::WordSyntax { .. })
        ));
        assert!(matches!(
            NPCWord::parse("x=1"),
            Err(TransportError::WordSyntax { .. })
        ));
    }

    #[test]
    fn transport_word_semantics() {
        let a1 = block_rotation(0.8);
        let a2 = Rot4::new(
            Mat4([
                [1.0, 0.0, 0.0, 0.0],
                [0.0, (0.6f64).cos(), 0.0, -(0.6f64).sin()],
                [0.0, 0.0, 1.0, 0.0],
                [0.0, (0.6f64).sin(), 0.0, (0.6f64).cos()],
            ]),
            1e-12,
        )
        .unwrap();
        let gens = HolonomyGens::So4 {
            a1: a1.clone(),
            a2: a2.clone(),
        };
        let conn = connection_from_gens(&gens).unwrap();
        let v = [0.3, -0.5, 0.7, 0.4];

        let out = transport(&conn, &NPCWord::empty(), &FiberVector::Real4(v)).unwrap();
        assert_eq!(out, FiberVector::Real4(v));

        let FiberVector::Real4(out) =
            transport(&conn, &NPCWord::parse("x:1").unwrap(), &FiberVector::Real4(v)).unwrap()
        else {
            panic!();
        };
        let direct = a1.act(v);
        for i in 0..4 {
            assert!((out[i] - direct[i]).abs() < 1e-12);
        }

        // Commutator word against the direct product.
        let word = NPCWord::parse("x:1,y:1,x:-1,y:-1").unwrap();
        let FiberVector::Real4(out) =
            transport(&conn, &word, &FiberVector::Real4(v)).unwrap()
        else {
            panic!();
        };
        let prod = a2
            .inverse()
            .compose(&a1.inverse())
            .compose(&a2)
            .compose(&a1);
        let direct = prod.act(v);
        for i in 0..4 {
            assert!((out[i] - direct[i]).abs() < 1e-11);
        }

        assert!(matches!(
            transport(&conn, &word, &FiberVector::Complex2([C64::new(1.0, 0.0); 2])),
            Err(TransportError::DimensionMismatch)
        ));
    }

    #[test]
    fn ode_oracle_matches_and_converges() {
        let gens = HolonomyGens::Su2 {
            a1: sample_su2(4),
            a2: sample_su2(5),
        };
        let conn = connection_from_gens(&gens).unwrap();
        let v = FiberVector::Complex2([C64::new(0.6, -0.2), C64::new(0.3, 0.7)]);
        let word = NPCWord::parse("x:1").unwrap();

        let exact = transport(&conn, &word, &v).unwrap();
        let coarse = transport_ode_oracle(&conn, &word, &v, 1e-2).unwrap();
        let fine = transport_ode_oracle(&conn, &word, &v, 5e-3).unwrap();
        let (FiberVector::Complex2(e), FiberVector::Complex2(c), FiberVector::Complex2(f)) =
            (exact, coarse, fine)
        else {
            panic!();
        };
        let err = |a: &[C64; 2]| (a[0] - e[0]).norm().max((a[1] - e[1]).norm());
        let (ec, ef) = (err(&c), err(&f));
        assert!(ec < 1e-6);
        // Fourth order: halving the step cuts the error by about 16.
        let ratio = ec / ef.max(1e-18);
        assert!(ratio > 8.0, "convergence ratio {ratio}");

        let tight = transport_ode_oracle(&conn, &word, &v, 1e-3).unwrap();
        let FiberVector::Complex2(t) = tight else { panic!() };
        assert!(err(&t) < 1e-9);
    }

    #[test]
    fn induced_pair_of_block_rotation() {
        let alpha = 1.3;
        let gens = HolonomyGens::So4 {
            a1: block_rotation(alpha),
            a2: Rot4::IDENTITY,
        };
        let conn = connection_from_gens(&gens).unwrap();
        let induced = lambda2_gens(&conn).unwrap();
        assert!(induced.plus.0 .0.max_abs_diff(&c_theta(alpha).0) < 1e-12);
        assert!(induced.minus.0 .0.max_abs_diff(&c_theta(-alpha).0) < 1e-12);
        assert!(induced.plus.1 .0.max_abs_diff(&Mat3::IDENTITY) < 1e-12);

        let su2_conn = connection_from_gens(&HolonomyGens::Su2 {
            a1: sample_su2(6),
            a2: sample_su2(7),
        })
        .unwrap();
        assert!(matches!(
            lambda2_gens(&su2_conn),
            Err(TransportError::WrongFiber)
        ));
    }

    #[test]
    fn connection_json_round_trip() {
        let gens = HolonomyGens::So4 {
            a1: block_rotation(0.4),
            a2: block_rotation(-1.1),
        };
        let conn = connection_from_gens(&gens).unwrap();
        let text = serde_json::to_string(&conn).unwrap();
        assert!(text.contains(r#""fiber":"real4""#));
        let back: Connection = serde_json::from_str(&text).unwrap();
        back.validate().unwrap();
        let (Connection::Real4 { p1, .. }, Connection::Real4 { p1: q1, .. }) = (&conn, &back)
        else {
            panic!();
        };
        assert_eq!(p1.max_abs_diff(q1), 0.0);
    }
}
