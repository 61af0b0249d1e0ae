use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use super::{AlgId, Monomial};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A finite combination of normal monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<F> {
    alg: AlgId,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero(alg: AlgId) -> Self {
        NCPoly { alg, terms: BTreeMap::new() }
    }

    pub fn one(alg: AlgId) -> Self {
        Self::monomial(Monomial::one(alg))
    }

    pub fn scalar(alg: AlgId, c: F) -> Self {
        Self::term(Monomial::one(alg), c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let mut p = Self::zero(m.alg());
        p.add_term(m, c);
        p
    }

    /// A single generator, by letter index.
    pub fn generator(alg: AlgId, letter: u8) -> Self {
        Self::monomial(Monomial::from_normal_word(alg, &[letter]).expect("single letters are normal"))
    }

    pub fn from_terms(alg: AlgId, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(alg);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn alg(&self) -> AlgId {
        self.alg
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// If `self = c * m` for a single monomial, returns `(m, c)`.
    pub fn as_single_term(&self) -> Option<(&Monomial, &F)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The scalar `c` if `self = c * 1`.
    pub fn as_scalar(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Filtration degree: the longest word in the support (0 for zero).
    pub fn filtration_degree(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        debug_assert_eq!(m.alg(), self.alg);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        debug_assert_eq!(other.alg, self.alg);
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, a.clone() * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &F::one());
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &-F::one());
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.alg);
        }
        NCPoly { alg: self.alg, terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c)).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> std::result::Result<G, crate::scalar::ScalarError>) -> Result<NCPoly<G>> {
        let mut out = NCPoly::zero(self.alg);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Normal form of the product, after checking both factors live in the
    /// same algebra.
    pub fn try_mul(&self, ctx: &Context<F>, other: &Self) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch { left: self.alg, right: other.alg });
        }
        Ok(self.mul(ctx, other))
    }

    /// Normal form of the product. Panics on an algebra mismatch.
    pub fn mul(&self, ctx: &Context<F>, other: &Self) -> Self {
        assert_eq!(self.alg, other.alg, "multiplying across algebras");
        let mut out = Self::zero(self.alg);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_scaled(&ctx.mul_monomials(m1, m2), &(c1.clone() * c2));
            }
        }
        out
    }

    pub fn pow(&self, ctx: &Context<F>, k: u32) -> Self {
        let mut acc = Self::one(self.alg);
        for _ in 0..k {
            acc = acc.mul(ctx, self);
        }
        acc
    }
}

impl<F: Field> fmt::Display for NCPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single = self.terms.len() == 1;
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            let compound = is_compound(&cs);
            let text = if m.is_one() {
                if compound && !single {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if cs == "1" {
                m.to_string()
            } else if cs == "-1" {
                format!("-{m}")
            } else if compound {
                format!("({cs})*{m}")
            } else {
                format!("{cs}*{m}")
            };
            if k == 0 {
                f.write_str(&text)?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
        }
        Ok(())
    }
}

// A coefficient needs parentheses when it is itself a sum; fraction text
// "(num)/(den)" already binds tighter than `*`.
fn is_compound(s: &str) -> bool {
    if s.starts_with('(') {
        return false;
    }
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(" + ") || body.contains(" - ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;

    #[test]
    fn display_orders_longest_first() {
        let ctx = Context::symbolic();
        let y1 = NCPoly::<RatFunc>::generator(AlgId::Podles, 2);
        let ym = NCPoly::generator(AlgId::Podles, 0);
        assert_eq!(y1.mul(&ctx, &ym).to_string(), "q^-2*y0^2 + q^-1*y0");
    }

    #[test]
    fn compound_coefficients_are_parenthesised() {
        let c = RatFunc::from_int(1) + RatFunc::q();
        let p = NCPoly::term(Monomial::podles(1, 0), c.clone()).add(&NCPoly::scalar(AlgId::Podles, -c));
        assert_eq!(p.to_string(), "(1 + q)*y0 + (-1 - q)");
        assert_eq!(NCPoly::scalar(AlgId::Podles, RatFunc::q_pow(2) + RatFunc::from_int(1)).to_string(), "1 + q^2");
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let ctx = Context::symbolic();
        let a = NCPoly::<RatFunc>::one(AlgId::Qsl2);
        let b = NCPoly::one(AlgId::Podles);
        assert!(matches!(a.try_mul(&ctx, &b), Err(Error::AlgebraMismatch { .. })));
    }
}
