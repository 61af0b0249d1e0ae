use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::context::Context;
use crate::ncalg::{AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// Element of a tensor product of preset algebras, fully expanded over
/// pairs (triples, ...) of normal monomials. Legs may live in different
/// algebras.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<F> {
    algs: Vec<AlgId>,
    terms: BTreeMap<Vec<Monomial>, F>,
}

impl<F: Field> Tensor<F> {
    pub fn zero(algs: &[AlgId]) -> Self {
        Tensor { algs: algs.to_vec(), terms: BTreeMap::new() }
    }

    /// `p_1 ⊗ p_2 ⊗ ...`.
    pub fn pure(legs: &[&NCPoly<F>]) -> Self {
        let algs: Vec<AlgId> = legs.iter().map(|p| p.alg()).collect();
        let mut acc: Vec<(Vec<Monomial>, F)> = vec![(Vec::new(), F::one())];
        for leg in legs {
            let mut next = Vec::with_capacity(acc.len() * leg.len());
            for (key, c) in &acc {
                for (m, d) in leg.terms() {
                    let mut k = key.clone();
                    k.push(*m);
                    next.push((k, c.clone() * d));
                }
            }
            acc = next;
        }
        let mut t = Tensor::zero(&algs);
        for (k, c) in acc {
            t.add_term(k, c);
        }
        t
    }

    pub fn pair(left: &NCPoly<F>, right: &NCPoly<F>) -> Self {
        Self::pure(&[left, right])
    }

    pub fn one(algs: &[AlgId]) -> Self {
        let mut t = Self::zero(algs);
        t.add_term(algs.iter().map(|a| Monomial::one(*a)).collect(), F::one());
        t
    }

    pub fn algs(&self) -> &[AlgId] {
        &self.algs
    }

    pub fn arity(&self) -> usize {
        self.algs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &F)> {
        self.terms.iter()
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

    pub fn add_term(&mut self, key: Vec<Monomial>, c: F) {
        debug_assert!(key.iter().map(Monomial::alg).eq(self.algs.iter().copied()));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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
        assert_eq!(self.algs, other.algs, "adding tensors of different shapes");
        if c.is_zero() {
            return;
        }
        for (k, a) in &other.terms {
            self.add_term(k.clone(), a.clone() * c);
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

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(&self.algs);
        r.add_scaled(self, c);
        r
    }

    /// Legwise product.
    pub fn mul(&self, ctx: &Context<F>, other: &Self) -> Self {
        assert_eq!(self.algs, other.algs, "multiplying tensors of different shapes");
        let mut out = Self::zero(&self.algs);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let legs: Vec<NCPoly<F>> = k1
                    .iter()
                    .zip(k2)
                    .map(|(a, b)| NCPoly::monomial(*a).mul(ctx, &NCPoly::monomial(*b)))
                    .collect();
                let refs: Vec<&NCPoly<F>> = legs.iter().collect();
                out.add_scaled(&Tensor::pure(&refs), &(c1.clone() * c2));
            }
        }
        out
    }

    /// Replaces leg `i` of every term by the legs of `f(leg)`.
    pub fn expand_leg(&self, i: usize, out_algs: &[AlgId], mut f: impl FnMut(&Monomial) -> Tensor<F>) -> Self {
        let mut algs = self.algs[..i].to_vec();
        algs.extend_from_slice(out_algs);
        algs.extend_from_slice(&self.algs[i + 1..]);
        let mut out = Self::zero(&algs);
        let mut cache: BTreeMap<Monomial, Tensor<F>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let img = cache.entry(k[i]).or_insert_with(|| f(&k[i]));
            assert_eq!(img.algs, out_algs, "leg map produced the wrong shape");
            for (ik, ic) in &img.terms {
                let mut key = k[..i].to_vec();
                key.extend_from_slice(ik);
                key.extend_from_slice(&k[i + 1..]);
                out.add_term(key, c.clone() * ic);
            }
        }
        out
    }

    /// Applies a linear map to leg `i`.
    pub fn map_leg(&self, i: usize, out_alg: AlgId, mut f: impl FnMut(&Monomial) -> NCPoly<F>) -> Self {
        self.expand_leg(i, &[out_alg], |m| Tensor::pure(&[&f(m)]))
    }

    /// Evaluates a functional on leg `i`, removing it.
    pub fn contract_leg(&self, i: usize, mut f: impl FnMut(&Monomial) -> F) -> Self {
        self.expand_leg(i, &[], |m| Tensor::one(&[]).scale(&f(m)))
    }

    /// Sums `c * f(legs)` over all terms.
    pub fn flat_map(&self, out_algs: &[AlgId], mut f: impl FnMut(&[Monomial]) -> Tensor<F>) -> Self {
        let mut out = Self::zero(out_algs);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a multilinear map to every term and sums the results.
    pub fn fold(&self, alg: AlgId, mut f: impl FnMut(&[Monomial]) -> NCPoly<F>) -> NCPoly<F> {
        let mut out = NCPoly::zero(alg);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Multiplies the legs together (all legs in one algebra).
    pub fn multiply_out(&self, ctx: &Context<F>) -> NCPoly<F> {
        let alg = self.algs[0];
        assert!(self.algs.iter().all(|a| *a == alg), "multiplying legs of different algebras");
        self.fold(alg, |k| {
            k.iter().fold(NCPoly::one(alg), |acc, m| acc.mul(ctx, &NCPoly::monomial(*m)))
        })
    }

    /// For a one-leg tensor, the underlying polynomial.
    pub fn to_poly(&self) -> NCPoly<F> {
        assert_eq!(self.arity(), 1);
        NCPoly::from_terms(self.algs[0], self.terms.iter().map(|(k, c)| (k[0], c.clone())))
    }

    /// For a zero-leg tensor, the underlying scalar.
    pub fn to_scalar(&self) -> F {
        assert_eq!(self.arity(), 0);
        self.terms.values().next().cloned().unwrap_or_else(F::zero)
    }

    /// Two-leg tensors grouped by left leg: `(left monomial, right poly)`.
    pub fn by_left(&self) -> Vec<(Monomial, NCPoly<F>)> {
        assert_eq!(self.arity(), 2);
        let mut groups: BTreeMap<Monomial, NCPoly<F>> = BTreeMap::new();
        for (k, c) in &self.terms {
            groups.entry(k[0]).or_insert_with(|| NCPoly::zero(self.algs[1])).add_term(k[1], c.clone());
        }
        groups.into_iter().rev().collect()
    }

    /// Rendering as a list of `left ⊗ right` strings, one per left leg.
    pub fn to_lines(&self) -> Vec<String> {
        if self.arity() != 2 {
            return self
                .terms
                .iter()
                .rev()
                .map(|(k, c)| {
                    let legs: Vec<String> = k.iter().map(|m| m.to_string()).collect();
                    format!("{c}*({})", legs.join(" ⊗ "))
                })
                .collect();
        }
        self.by_left()
            .into_iter()
            .map(|(l, r)| {
                let rs = r.to_string();
                if r.len() > 1 {
                    format!("{l} ⊗ ({rs})")
                } else {
                    format!("{l} ⊗ {rs}")
                }
            })
            .collect()
    }
}

impl<F: Field> fmt::Display for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&self.to_lines().join(" + "))
    }
}
