//! Real quadratic extensions `a + b*sqrt(d)` over the rationals.

use num::{BigRational, ToPrimitive, Zero};

use super::ExactError;

/// Element of `Q(sqrt(d))` with `d` a squarefree positive integer.
/// Rational values are canonicalized to `b = 0, d = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: u64,
}

pub fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<QuadExt, ExactError> {
        if b.is_zero() {
            return Ok(QuadExt { a, b, d: 1 });
        }
        if d == 1 {
            return Ok(QuadExt {
                a: a + b,
                b: BigRational::zero(),
                d: 1,
            });
        }
        if !is_squarefree(d) {
            return Err(ExactError::NotSquarefree { d });
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn from_rational(a: BigRational) -> QuadExt {
        QuadExt {
            a,
            b: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_int(n: i64) -> QuadExt {
        QuadExt::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn surd_base(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    fn unified_base(&self, rhs: &QuadExt) -> Result<u64, ExactError> {
        match (self.is_rational(), rhs.is_rational()) {
            (true, _) => Ok(rhs.d),
            (false, true) => Ok(self.d),
            (false, false) => {
                if self.d == rhs.d {
                    Ok(self.d)
                } else {
                    Err(ExactError::FieldMismatch {
                        d1: self.d,
                        d2: rhs.d,
                    })
                }
            }
        }
    }

    pub fn add(&self, rhs: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.unified_base(rhs)?;
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }

    pub fn sub(&self, rhs: &QuadExt) -> Result<QuadExt, ExactError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.unified_base(rhs)?;
        let dq = BigRational::from_integer(d.into());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &dq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::new(a, b, d)
    }

    pub fn scale(&self, k: &BigRational) -> QuadExt {
        QuadExt {
            a: &self.a * k,
            b: &self.b * k,
            d: self.d,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }
}
