//! Angle descriptions, exact trig values, and float-to-exact recognition.

use num::{BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::poly::IntRepr;
use super::quad::QuadExt;

/// An angle given exactly as a rational or quadratic multiple of pi, or as a
/// bare floating-point value in radians. Exact forms enable algebraic
/// certificates; numeric ones cap every downstream verdict at numeric-only.
#[derive(Clone, Debug, PartialEq)]
pub enum AngleSpec {
    RationalPi(BigRational),
    QuadPi(QuadExt),
    Numeric(f64),
}

impl AngleSpec {
    pub fn rational_pi(num: i64, den: i64) -> AngleSpec {
        AngleSpec::RationalPi(BigRational::new(num.into(), den.into()))
    }

    pub fn radians(&self) -> f64 {
        match self {
            AngleSpec::RationalPi(r) => r.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI,
            AngleSpec::QuadPi(q) => q.to_f64() * std::f64::consts::PI,
            AngleSpec::Numeric(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, AngleSpec::Numeric(_))
    }

    /// The multiple of pi as an exact value, when the form carries one.
    pub fn over_pi(&self) -> Option<QuadExt> {
        match self {
            AngleSpec::RationalPi(r) => Some(QuadExt::from_rational(r.clone())),
            AngleSpec::QuadPi(q) => Some(q.clone()),
            AngleSpec::Numeric(_) => None,
        }
    }

    /// Exact cosine when the angle is a supported rational multiple of pi.
    pub fn exact_cos(&self) -> Option<QuadExt> {
        match self {
            AngleSpec::RationalPi(r) => exact_cos_pi(r),
            _ => None,
        }
    }

    pub fn exact_sin(&self) -> Option<QuadExt> {
        match self {
            AngleSpec::RationalPi(r) => exact_sin_pi(r),
            _ => None,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
enum AngleRepr {
    RationalPi {
        num: IntRepr,
        den: IntRepr,
    },
    QuadPi {
        a: (IntRepr, IntRepr),
        b: (IntRepr, IntRepr),
        d: u64,
    },
    Radians {
        value: f64,
    },
}

impl Serialize for AngleSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            AngleSpec::RationalPi(r) => AngleRepr::RationalPi {
                num: IntRepr::from_bigint(r.numer()),
                den: IntRepr::from_bigint(r.denom()),
            },
            AngleSpec::QuadPi(q) => AngleRepr::QuadPi {
                a: (
                    IntRepr::from_bigint(q.rational_part().numer()),
                    IntRepr::from_bigint(q.rational_part().denom()),
                ),
                b: (
                    IntRepr::from_bigint(q.surd_coeff().numer()),
                    IntRepr::from_bigint(q.surd_coeff().denom()),
                ),
                d: q.surd_base(),
            },
            AngleSpec::Numeric(x) => AngleRepr::Radians { value: *x },
        };
        repr.serialize(serializer)
    }
}

fn mod_two(r: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    r - (r / &two).floor() * two
}

/// cos(r*pi) as an exact quadratic value. Covers the denominators whose
/// cosine lives in a real quadratic field: 1, 2, 3, 4, 5, 6.
pub fn exact_cos_pi(r: &BigRational) -> Option<QuadExt> {
    let mut r = mod_two(r);
    if r > BigRational::one() {
        r = BigRational::from_integer(2.into()) - r;
    }
    let num = r.numer().to_i64()?;
    let den = r.denom().to_i64()?;
    let rat = |n: i64, d: i64| {
        Some(QuadExt::from_rational(BigRational::new(n.into(), d.into())))
    };
    let surd = |n: i64, d: i64, base: u64| {
        QuadExt::new(
            BigRational::zero(),
            BigRational::new(n.into(), d.into()),
            base,
        )
        .ok()
    };
    let mixed = |a: (i64, i64), b: (i64, i64), base: u64| {
        QuadExt::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
            base,
        )
        .ok()
    };
    match (den, num) {
        (1, 0) => rat(1, 1),
        (1, 1) => rat(-1, 1),
        (2, _) => rat(0, 1),
        (3, 1) => rat(1, 2),
        (3, 2) => rat(-1, 2),
        (4, 1) => surd(1, 2, 2),
        (4, 3) => surd(-1, 2, 2),
        (5, 1) => mixed((1, 4), (1, 4), 5),
        (5, 2) => mixed((-1, 4), (1, 4), 5),
        (5, 3) => mixed((1, 4), (-1, 4), 5),
        (5, 4) => mixed((-1, 4), (-1, 4), 5),
        (6, 1) => surd(1, 2, 3),
        (6, 5) => surd(-1, 2, 3),
        _ => None,
    }
}

pub fn exact_sin_pi(r: &BigRational) -> Option<QuadExt> {
    exact_cos_pi(&(r - BigRational::new(1.into(), 2.into())))
}

/// Best rational approximation with bounded denominator, via the continued
/// fraction of `x` including the closing semiconvergent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RationalApprox {
    pub num: i64,
    pub den: u64,
    pub err: f64,
}

pub fn best_rational(x: f64, max_den: u64) -> RationalApprox {
    let max_den = max_den.max(1);
    if !x.is_finite() {
        return RationalApprox { num: 0, den: 1, err: f64::INFINITY };
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if frac.abs() < 1e-18 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        if a >= 1e18 {
            break;
        }
        let a_i = a as i128;
        let (p2, q2) = (a_i * p1 + p0, a_i * q1 + q0);
        if q2 > max_den as i128 {
            // Closing semiconvergent: largest partial step keeping the bound.
            let t = (max_den as i128 - q0) / q1;
            let (ps, qs) = (t * p1 + p0, t * q1 + q0);
            let err1 = (x - p1 as f64 / q1 as f64).abs();
            let errs = (x - ps as f64 / qs as f64).abs();
            if qs > 0 && errs < err1 {
                return approx_from(ps, qs, x);
            }
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        frac = inv - a;
    }
    approx_from(p1, q1, x)
}

fn approx_from(p: i128, q: i128, x: f64) -> RationalApprox {
    let err = (x - p as f64 / q as f64).abs();
    RationalApprox {
        num: p.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
        den: q.clamp(1, u64::MAX as i128) as u64,
        err,
    }
}

pub fn recognize_rational(x: f64, max_den: u64, tol: f64) -> Option<BigRational> {
    let a = best_rational(x, max_den);
    (a.err <= tol).then(|| BigRational::new(a.num.into(), (a.den as i64).into()))
}

/// Search parameters for reading a float back as `a + (p/q) sqrt(d)`.
#[derive(Clone, Debug)]
pub struct QuadRecognition {
    pub bases: Vec<u64>,
    pub max_den: u64,
    pub max_num: i64,
    pub rat_max_den: u64,
    pub tol: f64,
}

impl Default for QuadRecognition {
    fn default() -> Self {
        QuadRecognition {
            bases: vec![2, 3, 5, 6],
            max_den: 16,
            max_num: 64,
            rat_max_den: 48,
            tol: 1e-11,
        }
    }
}

/// First match in the deterministic order (d, then denominator, then
/// numerator, then sign); small heights keep distinct candidates separated
/// far beyond the tolerance.
pub fn recognize_quadratic(x: f64, params: &QuadRecognition) -> Option<QuadExt> {
    for &d in &params.bases {
        let sq = (d as f64).sqrt();
        for q in 1..=params.max_den {
            for p in 1..=params.max_num {
                if (p as u64).gcd(&q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let b = sign * p;
                    let bf = b as f64 / q as f64;
                    let a_target = x - bf * sq;
                    let Some(a) = recognize_rational(a_target, params.rat_max_den, params.tol)
                    else {
                        continue;
                    };
                    let Ok(cand) =
                        QuadExt::new(a, BigRational::new(b.into(), (q as i64).into()), d)
                    else {
                        continue;
                    };
                    if (cand.to_f64() - x).abs() <= params.tol {
                        return Some(cand);
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct Recognition {
    pub max_den: u64,
    pub tol: f64,
    pub quad: QuadRecognition,
}

impl Default for Recognition {
    fn default() -> Self {
        Recognition {
            max_den: 1000,
            tol: 1e-10,
            quad: QuadRecognition::default(),
        }
    }
}

/// Rational first, then quadratic; `None` when neither form fits.
pub fn recognize_value(x: f64, rec: &Recognition) -> Option<QuadExt> {
    if let Some(r) = recognize_rational(x, rec.max_den, rec.tol) {
        return Some(QuadExt::from_rational(r));
    }
    recognize_quadratic(x, &rec.quad)
}

/// Order of exp(i*pi*r) for rational r, i.e. the least n with n*r even.
pub fn rotation_order_of_rational_pi(r: &BigRational) -> u64 {
    let two_den = r.denom() * 2;
    let g = r.numer().abs().gcd(&two_den);
    (two_den / g).to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;
    use std::f64::consts::PI;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(n.into(), d.into())
    }

    #[test]
    fn exact_cos_table_matches_floats() {
        for (n, d) in [
            (0i64, 1i64),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (3, 4),
            (1, 5),
            (2, 5),
            (3, 5),
            (4, 5),
            (1, 6),
            (5, 6),
            (-1, 3),
            (7, 3),
            (9, 4),
            (-13, 6),
        ] {
            let r = rat(n, d);
            let got = exact_cos_pi(&r).unwrap_or_else(|| panic!("cos({n}/{d} pi)"));
            let want = (r.to_f64().unwrap() * PI).cos();
            assert!((got.to_f64() - want).abs() < 1e-14, "cos({n}/{d} pi)");
        }
        assert!(exact_cos_pi(&rat(1, 7)).is_none());
        assert!(exact_cos_pi(&rat(1, 10)).is_none());
    }

    #[test]
    fn exact_sin_follows_cos_shift() {
        for (n, d) in [(0i64, 1i64), (1, 2), (1, 3), (1, 6), (5, 6), (3, 2)] {
            let r = rat(n, d);
            let got = exact_sin_pi(&r).unwrap();
            let want = (r.to_f64().unwrap() * PI).sin();
            assert!((got.to_f64() - want).abs() < 1e-14, "sin({n}/{d} pi)");
        }
        // Quintic denominators have quadratic cosine but not sine.
        assert!(exact_sin_pi(&rat(2, 5)).is_none());
        assert!(exact_sin_pi(&rat(1, 4)).is_some());
    }

    #[test]
    fn continued_fractions_recover_rationals() {
        let a = best_rational(3.0 / 7.0, 100);
        assert_eq!((a.num, a.den), (3, 7));
        assert!(a.err < 1e-15);
        let b = best_rational(-22.0 / 7.0, 100);
        assert_eq!((b.num, b.den), (-22, 7));
        let c = best_rational(355.0 / 113.0 + 1e-13, 1000);
        assert_eq!((c.num, c.den), (355, 113));
    }

    #[test]
    fn pi_convergents() {
        let a = best_rational(PI, 120);
        assert_eq!((a.num, a.den), (355, 113));
        let b = best_rational(PI, 50);
        assert_eq!((b.num, b.den), (22, 7));
    }

    #[test]
    fn rational_recognition_rejects_irrationals() {
        assert_eq!(recognize_rational(0.625, 1000, 1e-10), Some(rat(5, 8)));
        assert!(recognize_rational(2f64.sqrt(), 1000, 1e-10).is_none());
        assert!(recognize_rational(PI / 4.0, 1000, 1e-10).is_none());
    }

    #[test]
    fn quadratic_recognition_round_trips() {
        let params = QuadRecognition::default();
        let s = -1.0 + 0.5 * 2f64.sqrt();
        let got = recognize_quadratic(s, &params).unwrap();
        assert_eq!(*got.rational_part(), rat(-1, 1));
        assert_eq!(*got.surd_coeff(), rat(1, 2));
        assert_eq!(got.surd_base(), 2);

        let t = (5f64.sqrt() - 5.0) / 4.0;
        let got = recognize_quadratic(t, &params).unwrap();
        assert_eq!(*got.rational_part(), rat(-5, 4));
        assert_eq!(*got.surd_coeff(), rat(1, 4));
        assert_eq!(got.surd_base(), 5);

        assert!(recognize_quadratic(PI / 7.0, &params).is_none());
        assert!(recognize_quadratic(0.25, &params).is_none());
    }

    #[test]
    fn rotation_orders() {
        assert_eq!(rotation_order_of_rational_pi(&rat(1, 2)), 4);
        assert_eq!(rotation_order_of_rational_pi(&rat(1, 1)), 2);
        assert_eq!(rotation_order_of_rational_pi(&rat(2, 1)), 1);
        assert_eq!(rotation_order_of_rational_pi(&rat(2, 3)), 3);
        assert_eq!(rotation_order_of_rational_pi(&rat(-3, 5)), 10);
        assert_eq!(rotation_order_of_rational_pi(&rat(4, 5)), 5);
    }

    #[test]
    fn angle_spec_values() {
        let a = AngleSpec::rational_pi(1, 2);
        assert!((a.radians() - PI / 2.0).abs() < 1e-15);
        assert!(a.exact_cos().unwrap().to_f64().abs() < 1e-15);
        let q = AngleSpec::QuadPi(QuadExt::new(rat(0, 1), rat(1, 1), 2).unwrap());
        assert!((q.radians() - 2f64.sqrt() * PI).abs() < 1e-13);
        assert!(q.is_exact());
        assert!(!AngleSpec::Numeric(1.0).is_exact());
    }

    #[test]
    fn angle_spec_json() {
        let a = AngleSpec::rational_pi(3, 4);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"form":"rational_pi","num":3,"den":4}"#);
        let n = serde_json::to_string(&AngleSpec::Numeric(0.5)).unwrap();
        assert!(n.contains("radians"));
    }
}
