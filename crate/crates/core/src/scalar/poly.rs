//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients. Only what the fraction field needs: ring operations,
//! pseudo-division, exact division and a content-aware gcd.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients are stored lowest degree first, without trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `Some(k)` when the polynomial is exactly `q^k`.
    pub fn as_power_of_q(&self) -> Option<usize> {
        match self.coeffs.split_last() {
            Some((top, rest)) if top.is_one() && rest.iter().all(|c| c.is_zero()) => Some(rest.len()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; `c` must divide the content.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `q^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Poly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = rd - dd;
            // r := lc*r - lr*q^shift*d
            let mut t = r.scale(&lc);
            let sub = d.scale(&lr).shift_up(shift);
            t = t.sub(&sub);
            r = t;
        }
        r
    }

    /// Exact quotient `self / d`. Panics (debug) if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if d.coeffs.len() == 1 {
            return self.div_scalar_exact(&d.coeffs[0]);
        }
        let dd = d.degree().unwrap();
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let n = self.degree().unwrap();
        if n < dd {
            debug_assert!(false, "div_exact: degree too small");
            return Self::zero();
        }
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let (c, rem) = r.leading().unwrap().div_rem(lc);
            debug_assert!(rem.is_zero(), "div_exact: inexact coefficient");
            let shift = rd - dd;
            r = r.sub(&d.scale(&c).shift_up(shift));
            quot[shift] = c;
        }
        debug_assert!(r.is_zero(), "div_exact: nonzero remainder");
        Self::from_coeffs(quot)
    }

    /// Greatest common divisor in `Z[q]`, normalised to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        // Pull out the common power of q first: it is the common case.
        let k = self.low_degree().unwrap().min(other.low_degree().unwrap());
        let a = self.shift_down(self.low_degree().unwrap());
        let b = other.shift_down(other.low_degree().unwrap());
        let cont = a.content().gcd(&b.content());
        let g = if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
            Poly::one()
        } else {
            primitive_prs_gcd(a.primitive_part(), b.primitive_part())
        };
        g.scale(&cont).shift_up(k)
    }

    fn normalize_sign(&self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Evaluates at a rational point by Horner's rule on numerator/denominator
    /// pairs.
    pub fn eval_rational(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Substitutes `q -> q^2`.
    pub fn square_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Writes the polynomial with exponents offset by `shift` (which may make
    /// them negative), ascending, e.g. `1 + q^2` or `-q^-1 + 3*q`.
    pub(crate) fn write_laurent(&self, f: &mut fmt::Formatter<'_>, shift: i64) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 - shift;
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write_q_power(f, e)?,
                (_, false) => {
                    write!(f, "{abs}*")?;
                    write_q_power(f, e)?;
                }
            }
        }
        Ok(())
    }
}

fn write_q_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

fn primitive_prs_gcd(mut a: Poly, mut b: Poly) -> Poly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_laurent(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_factored_polys() {
        // (q-1)(q+2) and (q-1)(q^2+1)
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[1, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_content_and_q_power() {
        let a = p(&[0, 0, 4, 6]); // 2q^2 (2 + 3q)
        let b = p(&[0, 6]); // 6q
        assert_eq!(a.gcd(&b), p(&[0, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), p(&[1, 1]));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(p(&[1, 0, 1]).to_string(), "1 + q^2");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "-2*q + q^3");
    }
}
