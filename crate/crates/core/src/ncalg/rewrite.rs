//! Word rewriting modulo the preset relations.
//!
//! Every rule has a two-letter left-hand side, so a word is in normal form
//! exactly when none of its adjacent letter pairs is a left-hand side.

use std::collections::BTreeMap;

use super::monomial::*;
use super::{AlgId, NCPoly};
use crate::context::Context;
use crate::scalar::Field;

/// Right-hand side of a rule: a combination of words.
pub type Rhs<F> = Vec<(F, Vec<u8>)>;

/// Which redex a reduction step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Clone)]
pub struct RuleSet<F> {
    ngens: usize,
    table: Vec<Option<Rhs<F>>>,
}

impl<F> Default for RuleSet<F> {
    fn default() -> Self {
        RuleSet { ngens: 0, table: Vec::new() }
    }
}

impl<F: Field> RuleSet<F> {
    pub(crate) fn preset(alg: AlgId, ctx: &Context<F>) -> Self {
        let ngens = alg.generators().len();
        let mut rs = RuleSet { ngens, table: vec![None; ngens * ngens] };
        let one = F::one;
        let q = |k: i64| ctx.qp(k);
        match alg {
            AlgId::Qsl2 => {
                rs.set(B, A, vec![(q(-1), vec![A, B])]);
                rs.set(C, A, vec![(q(-1), vec![A, C])]);
                rs.set(C, B, vec![(one(), vec![B, C])]);
                rs.set(B, D, vec![(q(1), vec![D, B])]);
                rs.set(C, D, vec![(q(1), vec![D, C])]);
                rs.set(A, D, vec![(one(), vec![]), (q(1), vec![B, C])]);
                rs.set(D, A, vec![(one(), vec![]), (q(-1), vec![B, C])]);
            }
            AlgId::Podles => {
                rs.set(YP, Y0, vec![(q(-2), vec![Y0, YP])]);
                rs.set(YM, Y0, vec![(q(2), vec![Y0, YM])]);
                rs.set(YP, YM, vec![(q(-2), vec![Y0, Y0]), (q(-1), vec![Y0])]);
                rs.set(YM, YP, vec![(q(2), vec![Y0, Y0]), (q(1), vec![Y0])]);
            }
            AlgId::Laurent => {
                rs.set(Z, ZI, vec![(one(), vec![])]);
                rs.set(ZI, Z, vec![(one(), vec![])]);
            }
            AlgId::SmashZ2 => {
                rs.set(X, X, vec![(one(), vec![])]);
                rs.set(Y, X, vec![(-one(), vec![X, Y])]);
            }
        }
        rs
    }

    fn set(&mut self, x: u8, y: u8, rhs: Rhs<F>) {
        self.table[x as usize * self.ngens + y as usize] = Some(rhs);
    }

    pub fn rule(&self, x: u8, y: u8) -> Option<&Rhs<F>> {
        self.table[x as usize * self.ngens + y as usize].as_ref()
    }

    /// All rules as `(lhs, rhs)`.
    pub fn rules(&self) -> impl Iterator<Item = ([u8; 2], &Rhs<F>)> {
        self.table.iter().enumerate().filter_map(move |(k, r)| {
            r.as_ref().map(|r| ([(k / self.ngens) as u8, (k % self.ngens) as u8], r))
        })
    }

    fn find_redex(&self, w: &[u8], strategy: Strategy) -> Option<usize> {
        let hit = |p: &usize| self.rule(w[*p], w[*p + 1]).is_some();
        let n = w.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find(hit),
            Strategy::Rightmost => (0..n).rev().find(hit),
        }
    }
}

/// Reduces a combination of words to normal form, rewriting one redex at a
/// time with the given strategy. Equal intermediate words are merged.
pub fn reduce_words<F: Field>(
    ctx: &Context<F>,
    alg: AlgId,
    input: impl IntoIterator<Item = (Vec<u8>, F)>,
    strategy: Strategy,
) -> NCPoly<F> {
    let rules = ctx.rules(alg);
    let mut pending: BTreeMap<Vec<u8>, F> = BTreeMap::new();
    for (w, c) in input {
        accumulate(&mut pending, w, c);
    }
    let mut out = NCPoly::zero(alg);
    while let Some((w, c)) = pending.pop_first() {
        match rules.find_redex(&w, strategy) {
            None => {
                let m = Monomial::from_normal_word(alg, &w)
                    .expect("word without redex must be a normal monomial");
                out.add_term(m, c);
            }
            Some(p) => {
                let rhs = rules.rule(w[p], w[p + 1]).expect("redex has a rule");
                for (k, r) in rhs {
                    let mut nw = Vec::with_capacity(w.len() + r.len());
                    nw.extend_from_slice(&w[..p]);
                    nw.extend_from_slice(r);
                    nw.extend_from_slice(&w[p + 2..]);
                    accumulate(&mut pending, nw, c.clone() * k);
                }
            }
        }
    }
    out
}

fn accumulate<F: Field>(map: &mut BTreeMap<Vec<u8>, F>, w: Vec<u8>, c: F) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().clone() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;

    #[test]
    fn rule_counts() {
        let ctx = Context::symbolic();
        let counts: Vec<usize> = AlgId::ALL.iter().map(|a| ctx.rules(*a).rules().count()).collect();
        assert_eq!(counts, vec![7, 4, 2, 2]);
    }

    #[test]
    fn strategies_agree_on_overlaps() {
        let ctx = Context::symbolic();
        for alg in AlgId::ALL {
            let n = alg.generators().len() as u8;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let w = vec![x, y, z];
                        let l = reduce_words(&ctx, alg, [(w.clone(), RatFunc::from_int(1))], Strategy::Leftmost);
                        let r = reduce_words(&ctx, alg, [(w, RatFunc::from_int(1))], Strategy::Rightmost);
                        assert_eq!(l, r, "{alg} {x}{y}{z}");
                    }
                }
            }
        }
    }
}
