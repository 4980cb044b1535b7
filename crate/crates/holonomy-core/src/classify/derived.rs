use crate::groups::Rot3;

use super::ClassifyError;

/// Recipe for passing from a finite-complexity pair to a derived pair
/// whose conditions can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedCase {
    /// Both products of the original generators.
    Products,
    /// Second generator raised to 2^(m-3), for a 2^m-gonal pair.
    DihedralPow2 { m: u32 },
    /// Second generator raised to n/p for an odd prime p dividing n.
    DihedralPrime { n: u64, p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Derived generator pair: the two one-sided products of `c1` with a
/// case-dependent power of `c2`. The two results are conjugate, so
/// their eigenvalue data coincide.
pub fn derived_gens(
    case: DerivedCase,
    c1: &Rot3,
    c2: &Rot3,
) -> Result<(Rot3, Rot3), ClassifyError> {
    let power: i64 = match case {
        DerivedCase::Products => 1,
        DerivedCase::DihedralPow2 { m } => {
            if !(3..=62).contains(&m) {
                return Err(ClassifyError::BadCaseParams {
                    reason: format!("power-of-two case needs 3 <= m <= 62, got m = {m}"),
                });
            }
            1i64 << (m - 3)
        }
        DerivedCase::DihedralPrime { n, p } => {
            if p <= 2 || !is_prime(p) || n % p != 0 {
                return Err(ClassifyError::BadCaseParams {
                    reason: format!("prime case needs an odd prime p dividing n, got n = {n}, p = {p}"),
                });
            }
            (n / p) as i64
        }
    };
    let cp = c2.pow(power);
    Ok((c1.compose(&cp), cp.compose(c1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    use crate::groups::{c_theta, v_phi_gamma};

    fn tilted(theta: f64) -> Rot3 {
        let v = v_phi_gamma(PI / 2.0, 0.0);
        v.compose(&c_theta(theta)).compose(&v.inverse())
    }

    #[test]
    fn products_case_multiplies() {
        let c1 = c_theta(1.0);
        let c2 = tilted(0.7);
        let (g1, g2) = derived_gens(DerivedCase::Products, &c1, &c2).unwrap();
        assert!(g1.dist(&c1.compose(&c2)) < 1e-12);
        assert!(g2.dist(&c2.compose(&c1)) < 1e-12);
    }

    // The angle metric floors out near sqrt(f64::EPSILON), so comparisons
    // between separately built equal rotations use 1e-7.

    #[test]
    fn pow2_case_power() {
        // m = 4: the power is 2, turning an eighth turn into a quarter
        // turn inside the products.
        let c1 = c_theta(PI / 2.0);
        let c2 = tilted(PI / 4.0);
        let (g1, _) = derived_gens(DerivedCase::DihedralPow2 { m: 4 }, &c1, &c2).unwrap();
        let expected = c1.compose(&tilted(PI / 2.0));
        assert!(g1.dist(&expected) < 1e-7);
    }

    #[test]
    fn prime_case_power() {
        // n = 15, p = 5: the fifteenth turn is cubed to a fifth turn.
        let c1 = c_theta(PI / 2.0);
        let c2 = tilted(2.0 * PI / 15.0);
        let (_, g2) = derived_gens(DerivedCase::DihedralPrime { n: 15, p: 5 }, &c1, &c2).unwrap();
        let expected = tilted(3.0 * 2.0 * PI / 15.0).compose(&c1);
        assert!(g2.dist(&expected) < 1e-7);
    }

    #[test]
    fn derived_pair_shares_trace() {
        let c1 = c_theta(1.1);
        let c2 = tilted(0.4);
        let (g1, g2) = derived_gens(DerivedCase::Products, &c1, &c2).unwrap();
        assert!((g1.0.trace() - g2.0.trace()).abs() < 1e-12);
    }

    #[test]
    fn bad_params_rejected() {
        let c1 = c_theta(1.0);
        let c2 = tilted(1.0);
        assert!(derived_gens(DerivedCase::DihedralPow2 { m: 2 }, &c1, &c2).is_err());
        assert!(derived_gens(DerivedCase::DihedralPrime { n: 8, p: 2 }, &c1, &c2).is_err());
        assert!(derived_gens(DerivedCase::DihedralPrime { n: 9, p: 5 }, &c1, &c2).is_err());
        assert!(derived_gens(DerivedCase::DihedralPrime { n: 15, p: 9 }, &c1, &c2).is_err());
    }
}
