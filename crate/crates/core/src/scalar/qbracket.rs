//! The coefficient `(j r)_q` appearing in the reduction of `y0^i y1^j`
//! modulo the left ideal generated by `z_{-1}`.
//!
//! Two closed forms agree for `j <= 3` and first differ at `(4, 2)`: the
//! `q^2`-integer of the ordinary binomial coefficient, and the Gaussian
//! binomial coefficient in `q^2`. The rule in force is the one that agrees
//! with the brute-force reduction in `koszul::nu_reduce_oracle`; the
//! `qbracket` tests and the acceptance suite re-derive that choice.

use num_bigint::BigInt;
use num_traits::One;

use super::{Poly, RatFunc, ScalarError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBracketRule {
    /// `1 + q^2 + ... + q^(2 C(j,r) - 2)`.
    BinomialQ2Integer,
    /// Gaussian binomial `[j choose r]` evaluated at `q^2`.
    GaussianQ2,
}

impl QBracketRule {
    pub const ALL: [QBracketRule; 2] = [QBracketRule::BinomialQ2Integer, QBracketRule::GaussianQ2];

    pub fn eval(self, j: i64, r: i64) -> Result<RatFunc, ScalarError> {
        if j < 0 || r < 0 || r > j {
            return Err(ScalarError::BadBracket { j, r });
        }
        let (j, r) = (j as u64, r as u64);
        Ok(match self {
            QBracketRule::BinomialQ2Integer => q2_integer(binomial(j, r)),
            QBracketRule::GaussianQ2 => gaussian_binomial_q2(j, r),
        })
    }
}

/// Adopted rule; see the module docs.
pub const Q_BRACKET_RULE: QBracketRule = QBracketRule::GaussianQ2;

/// `(j r)_q` under [`Q_BRACKET_RULE`].
pub fn q_bracket(j: i64, r: i64) -> Result<RatFunc, ScalarError> {
    Q_BRACKET_RULE.eval(j, r)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `1 + q^2 + ... + q^(2n-2)`; zero for `n = 0`.
pub fn q2_integer(n: BigInt) -> RatFunc {
    let n: usize = n.try_into().expect("q2_integer: count out of range");
    let mut coeffs = vec![BigInt::from(0); 2 * n.max(1) - 1];
    for i in 0..n {
        coeffs[2 * i] = BigInt::one();
    }
    RatFunc::from_poly(Poly::from_coeffs(coeffs))
}

/// Gaussian binomial `[n choose k]_x` at `x = q^2`, via Pascal's rule
/// `[n,k] = [n-1,k-1] + x^k [n-1,k]`.
pub fn gaussian_binomial_q2(n: u64, k: u64) -> RatFunc {
    let n = n as usize;
    let k = k as usize;
    // row[k] holds [m, k]_x as a polynomial in x
    let mut row: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let mut next = vec![Poly::zero(); m + 1];
        for (kk, slot) in next.iter_mut().enumerate() {
            let left = if kk >= 1 { row[kk - 1].clone() } else { Poly::zero() };
            let right = row.get(kk).map(|p| p.shift_up(kk)).unwrap_or_else(Poly::zero);
            *slot = left.add(&right);
        }
        row = next;
    }
    let p = row.get(k).cloned().unwrap_or_else(Poly::zero);
    RatFunc::from_poly(p.square_variable())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    #[test]
    fn paper_cases_agree_for_both_rules() {
        for rule in QBracketRule::ALL {
            assert_eq!(rule.eval(2, 1).unwrap(), parse_scalar("1+q^2").unwrap());
            assert_eq!(rule.eval(3, 1).unwrap(), parse_scalar("1+q^2+q^4").unwrap());
        }
    }

    #[test]
    fn rules_first_differ_at_four_two() {
        let a = QBracketRule::BinomialQ2Integer.eval(4, 2).unwrap();
        let b = QBracketRule::GaussianQ2.eval(4, 2).unwrap();
        assert_eq!(a, parse_scalar("1+q^2+q^4+q^6+q^8+q^10").unwrap());
        assert_eq!(b, parse_scalar("1+q^2+2*q^4+q^6+q^8").unwrap());
        for j in 0..4 {
            for r in 0..=j {
                assert_eq!(
                    QBracketRule::BinomialQ2Integer.eval(j, r).unwrap(),
                    QBracketRule::GaussianQ2.eval(j, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn ends_are_one() {
        for j in 0..=8 {
            assert_eq!(q_bracket(j, 0).unwrap(), RatFunc::from_int(1));
            assert_eq!(q_bracket(j, j).unwrap(), RatFunc::from_int(1));
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(q_bracket(2, 3).is_err());
        assert!(q_bracket(-1, 0).is_err());
        assert!(q_bracket(2, -1).is_err());
    }

    #[test]
    fn coefficients_are_nonnegative() {
        for j in 0..=8 {
            for r in 0..=j {
                let v = q_bracket(j, r).unwrap();
                assert!(v.denom().is_one());
                assert!(v.numer().coeffs().iter().all(|c| c >= &BigInt::from(0)));
            }
        }
    }
}
