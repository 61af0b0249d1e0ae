use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;

use crate::ncalg::rewrite::{reduce_words, RuleSet, Strategy};
use crate::ncalg::{AlgId, Monomial, NCPoly};
use crate::scalar::{check_admissible, Field, RatFunc, ScalarError};

const CACHED_POWERS: i64 = 64;

type Memo<K, F> = Arc<RwLock<HashMap<K, NCPoly<F>>>>;

/// Coefficient field plus the rewrite tables of every preset, built for
/// one value of `q` (a symbol for [`RatFunc`], a number for [`BigRational`]).
///
/// Normal forms of products of two basis monomials are memoised; clones
/// share the memo.
#[derive(Debug, Clone)]
pub struct Context<F: Field> {
    q: F,
    // q^k for k in -CACHED_POWERS..=CACHED_POWERS
    powers: Vec<F>,
    rules: [RuleSet<F>; 4],
    products: Memo<(Monomial, Monomial), F>,
    letters: Memo<(Monomial, u8), F>,
}

impl Context<RatFunc> {
    /// Symbolic context over `Q(q)`.
    pub fn symbolic() -> Self {
        Context::new(RatFunc::q()).expect("q is invertible in Q(q)")
    }
}

impl Context<BigRational> {
    /// Context with `q` replaced by an admissible rational number.
    pub fn specialized(q0: BigRational) -> Result<Self, ScalarError> {
        check_admissible(&q0)?;
        Context::new(q0)
    }
}

impl<F: Field> Context<F> {
    pub fn new(q: F) -> Result<Self, ScalarError> {
        let qinv = q.try_inv()?;
        let mut powers = vec![F::one(); (2 * CACHED_POWERS + 1) as usize];
        for k in 1..=CACHED_POWERS {
            let up = powers[(CACHED_POWERS + k - 1) as usize].clone() * &q;
            let down = powers[(CACHED_POWERS - k + 1) as usize].clone() * &qinv;
            powers[(CACHED_POWERS + k) as usize] = up;
            powers[(CACHED_POWERS - k) as usize] = down;
        }
        let mut ctx = Context { q, powers, rules: Default::default(), products: Default::default(), letters: Default::default() };
        ctx.rules = AlgId::ALL.map(|alg| RuleSet::preset(alg, &ctx));
        Ok(ctx)
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `q^k`.
    pub fn qp(&self, k: i64) -> F {
        if k.abs() <= CACHED_POWERS {
            self.powers[(k + CACHED_POWERS) as usize].clone()
        } else {
            self.q.powi(k).expect("q is invertible")
        }
    }

    pub fn rules(&self, alg: AlgId) -> &RuleSet<F> {
        &self.rules[alg as usize]
    }

    /// Normal form of `x y` for basis monomials of the same algebra,
    /// built by appending the letters of `y` one at a time.
    pub fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> NCPoly<F> {
        if x.is_one() {
            return NCPoly::monomial(*y);
        }
        if y.is_one() {
            return NCPoly::monomial(*x);
        }
        if let Some(p) = self.products.read().expect("product memo").get(&(*x, *y)) {
            return p.clone();
        }
        let mut acc = NCPoly::monomial(*x);
        for l in y.word() {
            let mut next = NCPoly::zero(x.alg());
            for (m, c) in acc.terms() {
                next.add_scaled(&self.mul_letter(m, l), c);
            }
            acc = next;
        }
        self.products.write().expect("product memo").insert((*x, *y), acc.clone());
        acc
    }

    /// Normal form of `x l` for a basis monomial `x` and a letter `l`.
    fn mul_letter(&self, x: &Monomial, l: u8) -> NCPoly<F> {
        if let Some(p) = self.letters.read().expect("letter memo").get(&(*x, l)) {
            return p.clone();
        }
        let mut w = x.word();
        w.push(l);
        let p = reduce_words(self, x.alg(), [(w, F::one())], Strategy::Leftmost);
        self.letters.write().expect("letter memo").insert((*x, l), p.clone());
        p
    }

    pub fn int(&self, n: i64) -> F {
        F::from_i64(n)
    }

    /// Value of a rational function of `q` at this context's `q`.
    pub fn lift(&self, r: &RatFunc) -> Result<F, ScalarError> {
        let horner = |p: &crate::scalar::Poly| {
            p.coeffs().iter().rev().fold(F::zero(), |acc, c| acc * &self.q + F::from_bigint(c))
        };
        horner(r.numer()).try_div(&horner(r.denom()))
    }
}
