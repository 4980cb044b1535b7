use std::f64::consts::PI;

use num::BigRational;
use serde::Serialize;

use crate::exact::{
    best_rational, is_root_of_unity, min_poly_from_trace, ExactError, QuadExt, RatPoly,
    RationalApprox, RootOfUnity,
};
use crate::groups::{axis_angle_of, Rot3};
use crate::tol;

use super::config::{gens_from_config, GenConfig};
use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenLetter {
    First,
    Second,
}

/// Parses a product word over the characters `1` and `2`.
pub fn parse_word(text: &str) -> Result<Vec<GenLetter>, ClassifyError> {
    text.chars()
        .map(|ch| match ch {
            '1' => Ok(GenLetter::First),
            '2' => Ok(GenLetter::Second),
            _ => Err(ClassifyError::BadWord {
                text: text.to_string(),
            }),
        })
        .collect()
}

/// Why a product trace was not computed exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactGap {
    WordTooLong,
    AngleNotRepresentable,
    FieldMismatch,
    TraceOutOfRange,
}

/// Minimal polynomial data for the rotation given by a word in the two
/// configured generators.
#[derive(Clone, Debug)]
pub enum ProductMinPoly {
    Exact {
        trace: QuadExt,
        min_poly: RatPoly,
        root_of_unity: RootOfUnity,
    },
    NumericOnly {
        trace: f64,
        /// Rotation phase over pi in (0, 1]; absent for the identity.
        eigenphase_over_pi: Option<f64>,
        best: RationalApprox,
        gap: ExactGap,
    },
}

fn field(e: ExactError) -> ExactGap {
    match e {
        ExactError::FieldMismatch { .. } => ExactGap::FieldMismatch,
        _ => ExactGap::TraceOutOfRange,
    }
}

/// Exact cosine and, on demand, sine of one configured angle.
fn cos_of(cfg: &GenConfig, letter: GenLetter) -> Result<QuadExt, ExactGap> {
    let spec = match letter {
        GenLetter::First => &cfg.theta1,
        GenLetter::Second => &cfg.theta2,
    };
    spec.exact_cos().ok_or(ExactGap::AngleNotRepresentable)
}

fn sin_of(cfg: &GenConfig, letter: GenLetter) -> Result<QuadExt, ExactGap> {
    let spec = match letter {
        GenLetter::First => &cfg.theta1,
        GenLetter::Second => &cfg.theta2,
    };
    spec.exact_sin().ok_or(ExactGap::AngleNotRepresentable)
}

/// Trace of the product of the two distinct generators. Only the tilt
/// cosine enters through the axis geometry, and the sine cross term
/// drops when the axes are perpendicular, which keeps fifth-turn
/// angles representable.
fn mixed_trace(cfg: &GenConfig) -> Result<QuadExt, ExactGap> {
    let c1 = cos_of(cfg, GenLetter::First)?;
    let c2 = cos_of(cfg, GenLetter::Second)?;
    let cphi = cfg.phi.exact_cos().ok_or(ExactGap::AngleNotRepresentable)?;
    let one = QuadExt::from_int(1);
    let sum = c1.add(&c2).and_then(|t| t.add(&c1.mul(&c2)?));
    let tilt = one
        .sub(&c1)
        .and_then(|a| one.sub(&c2).map(|b| (a, b)))
        .and_then(|(a, b)| a.mul(&b))
        .and_then(|ab| ab.mul(&cphi.mul(&cphi)?));
    let mut t = sum.and_then(|s| s.add(&tilt?)).map_err(field)?;
    if cphi != QuadExt::from_int(0) {
        let s1 = sin_of(cfg, GenLetter::First)?;
        let s2 = sin_of(cfg, GenLetter::Second)?;
        let cross = s1
            .mul(&s2)
            .and_then(|p| p.mul(&cphi))
            .map_err(field)?
            .scale(&BigRational::from_integer(2.into()));
        t = t.sub(&cross).map_err(field)?;
    }
    Ok(t)
}

struct QMat([[QuadExt; 3]; 3]);

fn qmat_zero() -> QMat {
    QMat(std::array::from_fn(|_| {
        std::array::from_fn(|_| QuadExt::from_int(0))
    }))
}

fn qmat_identity() -> QMat {
    let mut m = qmat_zero();
    for i in 0..3 {
        m.0[i][i] = QuadExt::from_int(1);
    }
    m
}

fn qmat_mul(a: &QMat, b: &QMat) -> Result<QMat, ExactError> {
    let mut out = qmat_zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = QuadExt::from_int(0);
            for (k, ak) in a.0[i].iter().enumerate() {
                acc = acc.add(&ak.mul(&b.0[k][j])?)?;
            }
            out.0[i][j] = acc;
        }
    }
    Ok(out)
}

fn qmat_transpose(a: &QMat) -> QMat {
    let mut out = qmat_zero();
    for i in 0..3 {
        for j in 0..3 {
            out.0[i][j] = a.0[j][i].clone();
        }
    }
    out
}

/// First-axis block rotation with the given cosine and sine.
fn c_qmat(c: &QuadExt, s: &QuadExt) -> Result<QMat, ExactError> {
    let mut m = qmat_identity();
    m.0[1][1] = c.clone();
    m.0[1][2] = s.scale(&BigRational::from_integer((-1).into()));
    m.0[2][1] = s.clone();
    m.0[2][2] = c.clone();
    Ok(m)
}

/// Exact mirror of the tilt conjugator, entry for entry.
fn v_qmat(cp: &QuadExt, sp: &QuadExt, cg: &QuadExt, sg: &QuadExt) -> Result<QMat, ExactError> {
    let neg = |x: &QuadExt| x.scale(&BigRational::from_integer((-1).into()));
    let one = QuadExt::from_int(1);
    let mut m = qmat_zero();
    m.0[0][0] = cp.clone();
    m.0[0][1] = neg(&sp.mul(cg)?);
    m.0[0][2] = neg(&sp.mul(sg)?);
    m.0[1][0] = sp.mul(cg)?;
    m.0[1][1] = sg.mul(sg)?.add(&cp.mul(&cg.mul(cg)?)?)?;
    m.0[1][2] = cp.sub(&one)?.mul(&cg.mul(sg)?)?;
    m.0[2][0] = sp.mul(sg)?;
    m.0[2][1] = cp.sub(&one)?.mul(&cg.mul(sg)?)?;
    m.0[2][2] = cg.mul(cg)?.add(&cp.mul(&sg.mul(sg)?)?)?;
    Ok(m)
}

/// Exact product trace through full matrices; needs every angle's
/// cosine and sine representable in one quadratic field.
fn matrix_trace(cfg: &GenConfig, word: &[GenLetter]) -> Result<QuadExt, ExactGap> {
    let c1 = cos_of(cfg, GenLetter::First)?;
    let s1 = sin_of(cfg, GenLetter::First)?;
    let c2 = cos_of(cfg, GenLetter::Second)?;
    let s2 = sin_of(cfg, GenLetter::Second)?;
    let cp = cfg.phi.exact_cos().ok_or(ExactGap::AngleNotRepresentable)?;
    let sp = cfg.phi.exact_sin().ok_or(ExactGap::AngleNotRepresentable)?;
    let cg = cfg.gamma.exact_cos().ok_or(ExactGap::AngleNotRepresentable)?;
    let sg = cfg.gamma.exact_sin().ok_or(ExactGap::AngleNotRepresentable)?;

    let build = || -> Result<QuadExt, ExactError> {
        let g1 = c_qmat(&c1, &s1)?;
        let v = v_qmat(&cp, &sp, &cg, &sg)?;
        let g2 = qmat_mul(&qmat_mul(&v, &c_qmat(&c2, &s2)?)?, &qmat_transpose(&v))?;
        let mut m = qmat_identity();
        for letter in word {
            let g = match letter {
                GenLetter::First => &g1,
                GenLetter::Second => &g2,
            };
            m = qmat_mul(&m, g)?;
        }
        m.0[0][0].add(&m.0[1][1])?.add(&m.0[2][2])
    };
    build().map_err(field)
}

fn exact_trace(cfg: &GenConfig, word: &[GenLetter]) -> Result<QuadExt, ExactGap> {
    match word {
        [] => Ok(QuadExt::from_int(3)),
        [a] => {
            let c = cos_of(cfg, *a)?;
            QuadExt::from_int(1)
                .add(&c.scale(&BigRational::from_integer(2.into())))
                .map_err(field)
        }
        [a, b] if a == b => {
            // trace of the squared rotation: 4 cos^2 - 1.
            let c = cos_of(cfg, *a)?;
            c.mul(&c)
                .map(|cc| cc.scale(&BigRational::from_integer(4.into())))
                .and_then(|t| t.sub(&QuadExt::from_int(1)))
                .map_err(field)
        }
        [_, _] => mixed_trace(cfg),
        w if w.len() <= 4 => matrix_trace(cfg, word),
        _ => Err(ExactGap::WordTooLong),
    }
}

fn numeric_fallback(cfg: &GenConfig, word: &[GenLetter], gap: ExactGap) -> ProductMinPoly {
    let (c1, c2) = gens_from_config(cfg);
    let mut m = Rot3::IDENTITY;
    for letter in word {
        m = m.compose(match letter {
            GenLetter::First => &c1,
            GenLetter::Second => &c2,
        });
    }
    let eigenphase_over_pi = axis_angle_of(&m, tol::ANGLE)
        .ok()
        .map(|aa| aa.theta.min(2.0 * PI - aa.theta) / PI);
    ProductMinPoly::NumericOnly {
        trace: m.0.trace(),
        best: best_rational(eigenphase_over_pi.unwrap_or(0.0), 1000),
        eigenphase_over_pi,
        gap,
    }
}

/// Minimal polynomial of the eigenvalues of the configured product.
/// The exact route covers words of up to four letters whose angle data
/// fit a single quadratic field, plus two-letter words that only need
/// cosines; anything else falls back to a numeric reading, tagged with
/// the reason.
pub fn minpoly_product(cfg: &GenConfig, word: &[GenLetter]) -> ProductMinPoly {
    let trace = match exact_trace(cfg, word) {
        Ok(t) => t,
        Err(gap) => return numeric_fallback(cfg, word, gap),
    };
    let s = match trace.sub(&QuadExt::from_int(1)) {
        Ok(s) => s,
        Err(e) => return numeric_fallback(cfg, word, field(e)),
    };
    match min_poly_from_trace(&s) {
        Ok(min_poly) => {
            let root_of_unity =
                is_root_of_unity(&min_poly).expect("minimal polynomial is monic");
            ProductMinPoly::Exact {
                trace,
                min_poly,
                root_of_unity,
            }
        }
        Err(_) => numeric_fallback(cfg, word, ExactGap::TraceOutOfRange),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AngleSpec;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| BigRational::from_integer(n.into())).collect()
    }

    fn halves(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter()
            .map(|&(n, d)| BigRational::new(n.into(), d.into()))
            .collect()
    }

    fn octagonal() -> GenConfig {
        GenConfig::new(
            AngleSpec::rational_pi(1, 2),
            AngleSpec::rational_pi(1, 4),
            AngleSpec::rational_pi(1, 2),
        )
    }

    fn pentagonal() -> GenConfig {
        GenConfig::new(
            AngleSpec::rational_pi(1, 2),
            AngleSpec::rational_pi(2, 5),
            AngleSpec::rational_pi(1, 2),
        )
    }

    #[test]
    fn word_parsing() {
        assert_eq!(
            parse_word("12").unwrap(),
            vec![GenLetter::First, GenLetter::Second]
        );
        assert!(parse_word("13").is_err());
        assert_eq!(parse_word("").unwrap(), Vec::new());
    }

    #[test]
    fn empty_word_is_identity() {
        match minpoly_product(&octagonal(), &[]) {
            ProductMinPoly::Exact {
                min_poly,
                root_of_unity,
                ..
            } => {
                assert_eq!(min_poly.coeffs(), &ints(&[-1, 1])[..]);
                assert_eq!(root_of_unity, RootOfUnity::Yes { order: 1 });
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn squared_letter_closed_form() {
        // theta1 = pi/2: the square is a half turn.
        let w = parse_word("11").unwrap();
        match minpoly_product(&octagonal(), &w) {
            ProductMinPoly::Exact { root_of_unity, .. } => {
                assert_eq!(root_of_unity, RootOfUnity::Yes { order: 2 });
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn octagonal_product_quartic() {
        let w = parse_word("12").unwrap();
        match minpoly_product(&octagonal(), &w) {
            ProductMinPoly::Exact {
                trace,
                min_poly,
                root_of_unity,
            } => {
                assert!((trace.to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
                assert_eq!(
                    min_poly.coeffs(),
                    &halves(&[(1, 1), (2, 1), (5, 2), (2, 1), (1, 1)])[..]
                );
                assert_eq!(root_of_unity, RootOfUnity::No);
                assert!(min_poly.is_palindromic());
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn pentagonal_product_quartic() {
        // Perpendicular axes drop the sine cross term, so the
        // fifth-turn cosine alone suffices.
        let w = parse_word("12").unwrap();
        match minpoly_product(&pentagonal(), &w) {
            ProductMinPoly::Exact {
                trace,
                min_poly,
                root_of_unity,
            } => {
                let expected = (2.0 * PI / 5.0).cos();
                assert!((trace.to_f64() - expected).abs() < 1e-15);
                assert_eq!(
                    min_poly.coeffs(),
                    &halves(&[(1, 1), (5, 2), (13, 4), (5, 2), (1, 1)])[..]
                );
                assert_eq!(root_of_unity, RootOfUnity::No);
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn exact_matches_numeric_for_longer_words() {
        let w = parse_word("1211").unwrap();
        let exact = match minpoly_product(&octagonal(), &w) {
            ProductMinPoly::Exact { trace, .. } => trace.to_f64(),
            other => panic!("expected exact result, got {other:?}"),
        };
        let (c1, c2) = gens_from_config(&octagonal());
        let numeric = c1.compose(&c2).compose(&c1).compose(&c1).0.trace();
        assert!((exact - numeric).abs() < 1e-12);
    }

    #[test]
    fn long_word_falls_back() {
        let w = parse_word("12121").unwrap();
        match minpoly_product(&octagonal(), &w) {
            ProductMinPoly::NumericOnly { gap, trace, .. } => {
                assert_eq!(gap, ExactGap::WordTooLong);
                let (c1, c2) = gens_from_config(&octagonal());
                let m = c1
                    .compose(&c2)
                    .compose(&c1)
                    .compose(&c2)
                    .compose(&c1);
                assert!((trace - m.0.trace()).abs() < 1e-12);
            }
            other => panic!("expected numeric result, got {other:?}"),
        }
    }

    #[test]
    fn unrepresentable_angle_falls_back() {
        let cfg = GenConfig::new(
            AngleSpec::rational_pi(2, 7),
            AngleSpec::rational_pi(1, 2),
            AngleSpec::rational_pi(1, 2),
        );
        let w = parse_word("12").unwrap();
        match minpoly_product(&cfg, &w) {
            ProductMinPoly::NumericOnly {
                gap,
                eigenphase_over_pi,
                ..
            } => {
                assert_eq!(gap, ExactGap::AngleNotRepresentable);
                assert!(eigenphase_over_pi.is_some());
            }
            other => panic!("expected numeric result, got {other:?}"),
        }
    }

    #[test]
    fn mixed_fields_fall_back() {
        let cfg = GenConfig::new(
            AngleSpec::rational_pi(1, 2),
            AngleSpec::rational_pi(1, 4),
            AngleSpec::rational_pi(1, 2),
        )
        .with_gamma(AngleSpec::rational_pi(1, 3));
        let w = parse_word("1221").unwrap();
        match minpoly_product(&cfg, &w) {
            ProductMinPoly::NumericOnly { gap, .. } => {
                assert_eq!(gap, ExactGap::FieldMismatch);
            }
            other => panic!("expected numeric result, got {other:?}"),
        }
    }

    #[test]
    fn three_letter_word_exact() {
        let w = parse_word("121").unwrap();
        let exact = match minpoly_product(&octagonal(), &w) {
            ProductMinPoly::Exact { trace, .. } => trace.to_f64(),
            other => panic!("expected exact result, got {other:?}"),
        };
        let (c1, c2) = gens_from_config(&octagonal());
        let numeric = c1.compose(&c2).compose(&c1).0.trace();
        assert!((exact - numeric).abs() < 1e-12);
    }
}
