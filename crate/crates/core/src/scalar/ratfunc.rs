//! The field `Q(q)` of rational functions with integer coefficients.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ScalarError;

/// A reduced fraction `num / den` of integer polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1` in `Z[q]` (content included), `den`
/// has a positive leading coefficient, and zero is `0 / 1`. Two values are
/// equal exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// The deformation parameter `q`.
    pub fn q() -> Self {
        RatFunc {
            num: Poly::monomial(BigInt::one(), 1),
            den: Poly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let e = k.unsigned_abs() as usize;
        if k >= 0 {
            RatFunc { num: Poly::monomial(BigInt::one(), e), den: Poly::one() }
        } else {
            RatFunc { num: Poly::one(), den: Poly::monomial(BigInt::one(), e) }
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Self::zero();
        }
        RatFunc { num: Poly::constant(n), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// True if the value is a Laurent polynomial, i.e. the denominator is a
    /// power of `q`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.leading().is_some_and(|c| c.is_one())
    }

    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.try_inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Evaluates at `q = q0`. Fails if the denominator vanishes there.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval_rational(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAt(q0.to_string()));
        }
        Ok(self.num.eval_rational(q0) / d)
    }

    /// Rough size measure used to prefer cheap pivots in elimination.
    pub fn cost(&self) -> usize {
        let spread = |p: &Poly| p.degree().unwrap_or(0) - p.low_degree().unwrap_or(0);
        let bits = |p: &Poly| p.coeffs().iter().map(|c| c.bits() as usize).sum::<usize>();
        4 * (spread(&self.num) + spread(&self.den)) + bits(&self.num) + bits(&self.den)
    }

    /// Renders as `num/den` with both sides as plain polynomials in `q`,
    /// e.g. `(1 + q^2)/(q)`. Used by the JSON reports.
    pub fn to_fraction_text(&self) -> String {
        if self.den.is_one() {
            format!("{}", self.num)
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
}

/// `num / q^k` in canonical form: cancels the common power of `q`, which is
/// the only possible common factor.
fn laurent(num: Poly, k: usize) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    let s = num.low_degree().unwrap().min(k);
    RatFunc { num: num.shift_down(s), den: Poly::monomial(BigInt::one(), k - s) }
}

fn add_impl(a: &RatFunc, b: &RatFunc, negate_b: bool) -> RatFunc {
    let bn = if negate_b { b.num.neg() } else { b.num.clone() };
    if a.num.is_zero() {
        return RatFunc { num: bn, den: b.den.clone() };
    }
    if b.num.is_zero() {
        return a.clone();
    }
    if let (Some(j), Some(k)) = (a.den.as_power_of_q(), b.den.as_power_of_q()) {
        let m = j.max(k);
        return laurent(a.num.shift_up(m - j).add(&bn.shift_up(m - k)), m);
    }
    if a.den == b.den {
        return RatFunc::reduce(a.num.add(&bn), a.den.clone());
    }
    // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d' g), and only g can
    // share factors with the new numerator.
    let g = a.den.gcd(&b.den);
    let bd = a.den.div_exact(&g);
    let dd = b.den.div_exact(&g);
    let num = a.num.mul(&dd).add(&bn.mul(&bd));
    if num.is_zero() {
        return RatFunc::zero();
    }
    let den = bd.mul(&dd).mul(&g);
    if g.is_one() {
        let mut r = RatFunc { num, den };
        if r.den.leading().unwrap().is_negative() {
            r.num = r.num.neg();
            r.den = r.den.neg();
        }
        return r;
    }
    RatFunc::reduce(num, den)
}

fn mul_impl(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.num.is_zero() || b.num.is_zero() {
        return RatFunc::zero();
    }
    if let (Some(j), Some(k)) = (a.den.as_power_of_q(), b.den.as_power_of_q()) {
        return laurent(a.num.mul(&b.num), j + k);
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let an = a.num.div_exact(&g1);
    let bd = b.den.div_exact(&g1);
    let bn = b.num.div_exact(&g2);
    let ad = a.den.div_exact(&g2);
    let mut num = an.mul(&bn);
    let mut den = ad.mul(&bd);
    if den.leading().unwrap().is_negative() {
        num = num.neg();
        den = den.neg();
    }
    RatFunc { num, den }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        mul_impl(self, rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on division by zero; use [`RatFunc::checked_div`] when the divisor
/// is not known to be nonzero.
impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl fmt::Display for RatFunc {
    /// Laurent polynomials print as sums of `c*q^k` (negative `k` allowed);
    /// anything else prints as `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            let shift = self.den.degree().unwrap() as i64;
            self.num.write_laurent(f, shift)
        } else {
            f.write_str("(")?;
            self.num.write_laurent(f, 0)?;
            f.write_str(")/(")?;
            self.den.write_laurent(f, 0)?;
            f.write_str(")")
        }
    }
}
