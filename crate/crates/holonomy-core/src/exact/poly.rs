//! Polynomials over the rationals with exact arithmetic.
//!
//! Coefficients are stored constant term first, and that is also the wire
//! order: a polynomial serializes as a list of `[numerator, denominator]`
//! pairs, each entry an integer when it fits in an `i64` and a decimal
//! string otherwise.

use num::{BigInt, BigRational, Complex, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::QuadExt;
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    // Invariant: empty for the zero polynomial, otherwise the last entry is nonzero.
    coeffs: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootOfUnity {
    Yes { order: u64 },
    No,
}

impl RatPoly {
    pub fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> RatPoly {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> RatPoly {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn x() -> RatPoly {
        RatPoly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// Builds from constant-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial mapped to 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_palindromic(&self) -> bool {
        !self.is_zero()
            && (0..self.coeffs.len() / 2 + 1)
                .all(|k| self.coeffs[k] == self.coeffs[self.degree() - k])
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> RatPoly {
        let mut base = self.clone();
        let mut acc = RatPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn make_monic(&self) -> Result<RatPoly, ExactError> {
        let lead = self.leading().ok_or(ExactError::DivisionByZero)?;
        Ok(self.scale(&lead.recip()))
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg || (rem.len() == ddeg + 1 && ddeg == 0) {
            if rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
                continue;
            }
            if rem.len() < ddeg + 1 {
                break;
            }
            let shift = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap() / &dlead;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let v = dc * &factor;
                rem[shift + k] -= v;
            }
            quot[shift] = factor;
            rem.pop();
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    pub fn exact_div(&self, divisor: &RatPoly) -> Result<RatPoly, ExactError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InexactDivision)
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_quad(&self, x: &QuadExt) -> Result<QuadExt, ExactError> {
        let mut acc = QuadExt::from_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(&QuadExt::from_rational(c.clone()))?;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex<f64>) -> Complex<f64> {
        let mut acc = Complex::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Substitutes `num/den` for the variable and clears denominators:
    /// returns `sum_k c_k * num^k * den^(deg - k)`.
    pub fn compose_fraction(&self, num: &RatPoly, den: &RatPoly) -> RatPoly {
        let d = self.degree() as u32;
        let mut out = RatPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = num.pow(k as u32).mul(&den.pow(d - k as u32)).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// For a monic palindromic `f` of even degree `2m`, the degree-`m` monic `M`
    /// with `f(x) = x^m * M(x + 1/x)`.
    pub fn palindromic_reduction(&self) -> Result<RatPoly, ExactError> {
        if !self.is_monic() {
            return Err(ExactError::NotMonic);
        }
        if !self.is_palindromic() || self.degree() % 2 != 0 {
            return Err(ExactError::NotPalindromic);
        }
        let m = self.degree() / 2;
        // v_k(y) with v_k(x + 1/x) = x^k + x^(-k): v_0 = 2, v_1 = y, v_k = y*v_(k-1) - v_(k-2).
        let y = RatPoly::x();
        let mut v_prev = RatPoly::constant(BigRational::from_integer(2.into()));
        let mut v_cur = y.clone();
        let mut out = RatPoly::constant(self.coeff(m));
        for k in 1..=m {
            out = out.add(&v_cur.scale(&self.coeff(m + k)));
            if k < m {
                let next = y.mul(&v_cur).sub(&v_prev);
                v_prev = v_cur;
                v_cur = next;
            }
        }
        Ok(out)
    }

    /// Decides irreducibility over the rationals for degree at most 4.
    /// `None` when the degree is out of range or coefficients overflow.
    pub fn is_irreducible(&self) -> Option<bool> {
        match self.degree() {
            0 => Some(false),
            1 => Some(true),
            2 | 3 => Some(!self.has_rational_root()?),
            4 => {
                if self.has_rational_root()? {
                    return Some(false);
                }
                Some(!self.has_quadratic_factor()?)
            }
            _ => None,
        }
    }

    /// Content-free integer coefficients with positive leading term.
    fn primitive_ints(&self) -> Option<Vec<i128>> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut gcd = BigInt::zero();
        for c in &scaled {
            gcd = gcd.gcd(c);
        }
        let sign = if scaled.last()?.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        gcd *= sign;
        scaled.iter().map(|c| (c / &gcd).to_i128()).collect()
    }

    fn has_rational_root(&self) -> Option<bool> {
        let ints = self.primitive_ints()?;
        let c0 = *ints.first()?;
        let lead = *ints.last()?;
        if c0 == 0 {
            return Some(true);
        }
        for p in divisors(c0.unsigned_abs())? {
            for q in divisors(lead.unsigned_abs())? {
                for s in [1i128, -1] {
                    let x = BigRational::new((s * p as i128).into(), (q as i128).into());
                    if self.eval_rational(&x).is_zero() {
                        return Some(true);
                    }
                }
            }
        }
        Some(false)
    }

    fn has_quadratic_factor(&self) -> Option<bool> {
        let ints = self.primitive_ints()?;
        let [c0, c1, c2, c3, c4] = ints.as_slice() else {
            return None;
        };
        // f = (a x^2 + b x + c)(e x^2 + g x + h): fix a, e, c, h from divisor
        // pairs, enumerate b within the coefficient bound, solve for g.
        let norm = ints.iter().map(|&c| (c as f64).powi(2)).sum::<f64>().sqrt();
        let bound = (4.0 * (1.0 + norm / *c4 as f64)).ceil();
        if bound > 1e6 {
            return None;
        }
        let bound = bound as i128;
        for a in divisors(c4.unsigned_abs())? {
            let a = a as i128;
            if c4 % a != 0 {
                continue;
            }
            let e = c4 / a;
            for c in divisors(c0.unsigned_abs())? {
                for cs in [1i128, -1] {
                    let c = cs * c as i128;
                    if c == 0 || c0 % c != 0 {
                        continue;
                    }
                    let h = c0 / c;
                    for b in -bound..=bound {
                        // x^3 and x^1 constraints determine g twice; both must agree.
                        let g_num = c3 - b * e;
                        if g_num % a != 0 {
                            continue;
                        }
                        let g = g_num / a;
                        if b * h + c * g != *c1 {
                            continue;
                        }
                        if a * h + b * g + c * e == *c2 {
                            return Some(true);
                        }
                    }
                }
            }
        }
        Some(false)
    }
}

fn divisors(n: u128) -> Option<Vec<u128>> {
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut k = 1u128;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k != n / k {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out.sort_unstable();
    Some(out)
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            phi *= p - 1;
            while n % p == 0 {
                n /= p;
                phi *= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// The n-th cyclotomic polynomial, monic with integer coefficients.
pub fn cyclotomic(n: u64) -> RatPoly {
    assert!(n >= 1);
    if n == 1 {
        return RatPoly::from_ints(&[-1, 1]);
    }
    let mut xn_minus_1 = vec![BigRational::zero(); n as usize + 1];
    xn_minus_1[0] = -BigRational::one();
    xn_minus_1[n as usize] = BigRational::one();
    let mut f = RatPoly::from_coeffs(xn_minus_1);
    for d in 1..n {
        if n % d == 0 {
            f = f
                .exact_div(&cyclotomic(d))
                .expect("cyclotomic polynomials divide x^n - 1");
        }
    }
    f
}

/// Tests whether the roots of a monic irreducible integer polynomial are
/// roots of unity, returning their common order if so.
pub fn is_root_of_unity(f: &RatPoly) -> Result<RootOfUnity, ExactError> {
    if f.is_zero() || f.degree() == 0 {
        return Ok(RootOfUnity::No);
    }
    if !f.is_monic() {
        return Err(ExactError::NotMonic);
    }
    if !f.has_integer_coeffs() {
        return Ok(RootOfUnity::No);
    }
    let d = f.degree() as u64;
    // phi(n) >= sqrt(n/2), so phi(n) = d forces n <= 2d^2.
    for n in 1..=(2 * d * d + 2) {
        if euler_phi(n) == d && *f == cyclotomic(n) {
            return Ok(RootOfUnity::Yes { order: n });
        }
    }
    Ok(RootOfUnity::No)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    pub(crate) fn from_bigint(n: &BigInt) -> IntRepr {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }

    fn to_bigint<E: serde::de::Error>(&self) -> Result<BigInt, E> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(*v)),
            IntRepr::Big(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(IntRepr, IntRepr)> = self
            .coeffs
            .iter()
            .map(|c| (IntRepr::from_bigint(c.numer()), IntRepr::from_bigint(c.denom())))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<RatPoly, D::Error> {
        let pairs = Vec::<(IntRepr, IntRepr)>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(pairs.len());
        for (n, d) in &pairs {
            let den: BigInt = d.to_bigint()?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n.to_bigint()?, den));
        }
        Ok(RatPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(n.into(), d.into())
    }

    #[test]
    fn division_round_trips() {
        let f = RatPoly::from_ints(&[2, -3, 0, 1, 5]);
        let g = RatPoly::from_ints(&[1, 4, 2]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), RatPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(4), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        // prime p: 1 + x + ... + x^(p-1)
        assert_eq!(cyclotomic(7), RatPoly::from_ints(&[1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn cyclotomic_degrees_match_totient() {
        for n in 1..=60 {
            assert_eq!(cyclotomic(n).degree() as u64, euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(
            is_root_of_unity(&cyclotomic(15)).unwrap(),
            RootOfUnity::Yes { order: 15 }
        );
        assert_eq!(
            is_root_of_unity(&RatPoly::from_ints(&[1, 1, 0, 0, 1])).unwrap(),
            RootOfUnity::No
        );
        // x^2 + (5/3)x + 1 has non-integer coefficients, so unit-circle roots
        // of infinite order.
        let f = RatPoly::from_coeffs(vec![rat(1, 1), rat(5, 3), rat(1, 1)]);
        assert_eq!(is_root_of_unity(&f).unwrap(), RootOfUnity::No);
        assert!(is_root_of_unity(&RatPoly::from_ints(&[2, 0, 2])).is_err());
    }

    #[test]
    fn palindromic_reduction_halves_cyclotomics() {
        // Phi_5 -> y^2 + y - 1, roots 2cos(2pi/5), 2cos(4pi/5).
        let m5 = cyclotomic(5).palindromic_reduction().unwrap();
        assert_eq!(m5, RatPoly::from_ints(&[-1, 1, 1]));
        let x = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!(m5.eval_f64(x).abs() < 1e-14);

        // Phi_12 -> y^2 - 3.
        let m12 = cyclotomic(12).palindromic_reduction().unwrap();
        assert_eq!(m12, RatPoly::from_ints(&[-3, 0, 1]));

        for n in [3u64, 5, 7, 8, 9, 11, 13, 15] {
            let m = cyclotomic(n).palindromic_reduction().unwrap();
            assert_eq!(m.degree() as u64, euler_phi(n) / 2);
            let y = 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
            assert!(m.eval_f64(y).abs() < 1e-12, "n = {n}");
        }

        assert!(RatPoly::from_ints(&[1, 2, 1, 1]).palindromic_reduction().is_err());
    }

    #[test]
    fn fraction_composition_clears_denominators() {
        // M(y) = y + 1 under y -> (2x^2 + 2x + 2)/x gives 2x^2 + 3x + 2.
        let m = RatPoly::from_ints(&[1, 1]);
        let num = RatPoly::from_ints(&[2, 2, 2]);
        let den = RatPoly::x();
        assert_eq!(m.compose_fraction(&num, &den), RatPoly::from_ints(&[2, 3, 2]));
    }

    #[test]
    fn irreducibility_small_degrees() {
        assert_eq!(RatPoly::from_ints(&[1, 0, 1]).is_irreducible(), Some(true));
        assert_eq!(RatPoly::from_ints(&[-1, 0, 1]).is_irreducible(), Some(false));
        assert_eq!(RatPoly::from_ints(&[-2, 0, 0, 1]).is_irreducible(), Some(true));
        // (x^2+1)(x^2+2) reducible without rational roots.
        assert_eq!(
            RatPoly::from_ints(&[2, 0, 3, 0, 1]).is_irreducible(),
            Some(false)
        );
        assert_eq!(RatPoly::from_ints(&[1, 0, 0, 0, 1]).is_irreducible(), Some(true));
        // x^4 + 2x^3 + 5/2 x^2 + 2x + 1 from the quadratic-trace family.
        let f = RatPoly::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(5, 2), rat(2, 1), rat(1, 1)]);
        assert_eq!(f.is_irreducible(), Some(true));
    }

    #[test]
    fn eval_consistency() {
        let f = RatPoly::from_coeffs(vec![rat(1, 2), rat(-2, 3), rat(0, 1), rat(1, 1)]);
        let x = rat(3, 7);
        let exact = f.eval_rational(&x);
        let approx = f.eval_f64(3.0 / 7.0);
        assert!((exact.to_f64().unwrap() - approx).abs() < 1e-15);
        let q = QuadExt::new(rat(1, 3), rat(0, 1), 1).unwrap();
        assert_eq!(f.eval_quad(&q).unwrap().as_rational(), Some(&f.eval_rational(&rat(1, 3))));
    }

    #[test]
    fn json_round_trip_with_big_coefficients() {
        let big = BigRational::new(
            "123456789012345678901234567890".parse().unwrap(),
            7.into(),
        );
        let f = RatPoly::from_coeffs(vec![rat(1, 1), big.clone()]);
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.contains(&big.numer().to_string()));
        let back: RatPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let simple: RatPoly = serde_json::from_str("[[1,1],[5,2],[1,1]]").unwrap();
        assert_eq!(simple.coeff(1), rat(5, 2));
    }
}
