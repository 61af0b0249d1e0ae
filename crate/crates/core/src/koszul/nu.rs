//! The quotient `B / B z_{-1}` of the Podles sphere by a left ideal, with
//! the basis `ν(y0^{i+1})`, `ν(y1^i)` (`i >= 0`).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{z_minus, z_plus};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ncalg::letters::{Y0, YM};
use crate::ncalg::{filtration_basis, AlgId, Monomial, NCPoly};
use crate::scalar::{Field, QBracketRule, Q_BRACKET_RULE};

/// Coordinates of a class in `B / B z_{-1}`, keyed by the basis monomial
/// `y0^k` (`k >= 1`) or `y1^k` (`k >= 0`).
pub type NuCoords<F> = BTreeMap<Monomial, F>;

/// Whether `m` is one of the quotient basis representatives.
pub fn is_quotient_basis(m: &Monomial) -> bool {
    let (i, j) = m.podles_indices();
    (j == 0 && i >= 1) || (i == 0 && j >= 0)
}

/// Quotient basis representatives of word length `<= n`.
pub fn quotient_basis(n: usize) -> Vec<Monomial> {
    filtration_basis(AlgId::Podles, n).into_iter().filter(is_quotient_basis).collect()
}

/// Reduction modulo `B z_{-1}` on the filtration piece `F_n`, by row
/// reduction of the truncated left ideal.
///
/// Columns are numbered so that pivots fall first on monomials outside
/// `F_n`, then on non-representatives, and only then on the quotient
/// basis; the remainder of an element of `F_n` is therefore supported on
/// the quotient basis whenever the truncation is large enough.
#[derive(Debug, Clone)]
pub struct NuReducer<F> {
    level: usize,
    source_level: usize,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon<F>,
}

impl<F: Field> NuReducer<F> {
    pub fn new(ctx: &Context<F>, level: usize) -> Self {
        let source_level = level;
        let inside = filtration_basis(AlgId::Podles, level);
        let outside: Vec<Monomial> = filtration_basis(AlgId::Podles, source_level + 1)
            .into_iter()
            .filter(|m| m.len() > level)
            .collect();
        let mut columns: Vec<Monomial> = inside.iter().copied().filter(is_quotient_basis).collect();
        columns.extend(inside.iter().copied().filter(|m| !is_quotient_basis(m)));
        columns.extend(outside);
        let index: HashMap<Monomial, usize> = columns.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let zm = z_minus(ctx);
        let mut echelon = Echelon::new();
        for m in filtration_basis(AlgId::Podles, source_level) {
            let row = NCPoly::monomial(m).mul(ctx, &zm);
            echelon.insert(row.terms().map(|(t, c)| (index[t], c.clone())).collect());
        }
        NuReducer { level, source_level, columns, index, echelon }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn source_level(&self) -> usize {
        self.source_level
    }

    fn vector(&self, p: &NCPoly<F>) -> Result<SparseVec<F>> {
        if p.filtration_degree() > self.level {
            return Err(Error::FiltrationTooSmall { required: p.filtration_degree(), given: self.level });
        }
        Ok(p.terms().map(|(m, c)| (self.index[m], c.clone())).collect())
    }

    /// Coordinates of `ν(p)` in the quotient basis.
    pub fn reduce(&self, p: &NCPoly<F>) -> Result<NuCoords<F>> {
        let r = self.echelon.remainder(&self.vector(p)?);
        let mut out = NuCoords::new();
        for (k, c) in r {
            let m = self.columns[k];
            if !is_quotient_basis(&m) {
                return Err(Error::Internal(format!(
                    "remainder of {p} modulo B z_-1 involves {m} at level {}",
                    self.level
                )));
            }
            out.insert(m, c);
        }
        Ok(out)
    }

    /// Quotient basis monomials that are linearly dependent modulo the
    /// truncated ideal (empty when the classes are independent).
    pub fn dependent_representatives(&self) -> Vec<Monomial> {
        self.echelon
            .pivots()
            .map(|k| self.columns[k])
            .filter(|m| m.len() <= self.level && is_quotient_basis(m))
            .collect()
    }

    /// Monomials of `F_n` that are neither representatives nor reducible
    /// (empty when the representatives span).
    pub fn unreduced_monomials(&self) -> Vec<Monomial> {
        let pivots: std::collections::HashSet<usize> = self.echelon.pivots().collect();
        self.columns
            .iter()
            .enumerate()
            .filter(|(k, m)| m.len() <= self.level && !is_quotient_basis(m) && !pivots.contains(k))
            .map(|(_, m)| *m)
            .collect()
    }
}

/// `ν(p)`, reducing at the filtration degree of `p`.
pub fn nu_reduce<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<NuCoords<F>> {
    if p.alg() != AlgId::Podles {
        return Err(Error::AlgebraMismatch { left: p.alg(), right: AlgId::Podles });
    }
    NuReducer::new(ctx, p.filtration_degree().max(1)).reduce(p)
}

/// Independent reduction of `ν(y0^i y1^j)` (`y-1^{-j}` for `j < 0`) by
/// rewriting: a trailing `y-1` is traded for `-y0` (and vice versa), using
/// `w z_{-1} = w y-1 + w y0 ∈ B z_{-1}`, with commutations done in the
/// algebra.
#[derive(Debug)]
pub struct NuOracle<'a, F: Field> {
    ctx: &'a Context<F>,
    memo: HashMap<(i32, i32), NuCoords<F>>,
}

impl<'a, F: Field> NuOracle<'a, F> {
    pub fn new(ctx: &'a Context<F>) -> Self {
        NuOracle { ctx, memo: HashMap::new() }
    }

    pub fn reduce_monomial(&mut self, i: i32, j: i32) -> NuCoords<F> {
        if let Some(v) = self.memo.get(&(i, j)) {
            return v.clone();
        }
        let ctx = self.ctx;
        let m = Monomial::podles(i, j);
        let out = if is_quotient_basis(&m) {
            NuCoords::from([(m, F::one())])
        } else if i == 0 && j == 0 {
            unreachable!("1 is a representative")
        } else {
            let y0 = NCPoly::generator(AlgId::Podles, Y0);
            let ym = NCPoly::generator(AlgId::Podles, YM);
            let rewritten = if j < 0 {
                // y0^i y-1^k = (y0^i y-1^{k-1}) y-1  ≡  -(y0^i y-1^{k-1}) y0
                NCPoly::monomial(Monomial::podles(i, j + 1)).mul(ctx, &y0).neg()
            } else {
                // y0^i y1^j = q^{2j} (y0^{i-1} y1^j) y0  ≡  -q^{2j} (y0^{i-1} y1^j) y-1
                let w = NCPoly::monomial(Monomial::podles(i - 1, j));
                let check = w.mul(ctx, &y0).scale(&ctx.qp(2 * j as i64));
                assert_eq!(check, NCPoly::monomial(m), "commutation y0 y1^j = q^2j y1^j y0");
                w.mul(ctx, &ym).scale(&-ctx.qp(2 * j as i64))
            };
            self.reduce(&rewritten)
        };
        self.memo.insert((i, j), out.clone());
        out
    }

    pub fn reduce(&mut self, p: &NCPoly<F>) -> NuCoords<F> {
        let mut acc: NuCoords<F> = NuCoords::new();
        for (m, c) in p.terms() {
            let (i, j) = m.podles_indices();
            for (k, v) in self.reduce_monomial(i, j) {
                let s = acc.remove(&k).unwrap_or_else(F::zero) + v * c;
                if !s.is_zero() {
                    acc.insert(k, s);
                }
            }
        }
        acc
    }
}

/// `ν(y0^i y1^j)` by the rewriting oracle.
pub fn nu_reduce_oracle<F: Field>(ctx: &Context<F>, i: i32, j: i32) -> NuCoords<F> {
    NuOracle::new(ctx).reduce_monomial(i, j)
}

/// `ζ(ν(a)) = ν(a z_1)` for a representative `a`, reduced with `reducer`.
pub fn zeta_apply<F: Field>(ctx: &Context<F>, reducer: &NuReducer<F>, a: &NCPoly<F>) -> Result<NuCoords<F>> {
    reducer.reduce(&a.mul(ctx, &z_plus(ctx)))
}

/// `ν(y0^i y-1^k) = (-1)^k q^{(k-1)k} ν(y0^{i+k})`.
pub fn nu_closed_form_ym<F: Field>(ctx: &Context<F>, i: i32, k: i32) -> NuCoords<F> {
    let sign = if k % 2 == 0 { F::one() } else { -F::one() };
    let c = sign * ctx.qp(((k - 1) * k) as i64);
    if i + k == 0 {
        return NuCoords::from([(Monomial::one(AlgId::Podles), c)]);
    }
    NuCoords::from([(Monomial::podles(i + k, 0), c)])
}

/// `ν(y0^i y1^j)` for `i >= 1` as
/// `s^j Σ_r q^{(1-2r)j + r^2} (j r)_q ν(y0^{i+r})` with bracket `rule`,
/// where `s = -1` if `signed` and `s = 1` otherwise.
pub fn nu_closed_form_y1<F: Field>(
    ctx: &Context<F>,
    i: i32,
    j: i32,
    rule: QBracketRule,
    signed: bool,
) -> Result<NuCoords<F>> {
    if i < 1 || j < 0 {
        return Err(Error::InvalidArgument(format!("closed form needs i >= 1, j >= 0, got ({i}, {j})")));
    }
    let sign = if signed && j % 2 == 1 { -F::one() } else { F::one() };
    let mut out = NuCoords::new();
    for r in 0..=j {
        let c = ctx.lift(&rule.eval(j as i64, r as i64)?)? * &ctx.qp(((1 - 2 * r) * j + r * r) as i64) * &sign;
        out.insert(Monomial::podles(i + r, 0), c);
    }
    Ok(out)
}

/// Agreement of each bracket rule with the rewriting oracle on
/// `ν(y0^i y1^j)`, `1 <= i <= imax`, `j <= jmax`.
#[derive(Debug, Clone, Serialize)]
pub struct BracketReport {
    pub imax: i32,
    pub jmax: i32,
    /// Rules agreeing with the oracle once the `(-1)^j` sign is included.
    pub consistent_signed: Vec<String>,
    /// Rules agreeing with the oracle without the sign.
    pub consistent_unsigned: Vec<String>,
    /// First `(i, j)` where each rule fails (signed form).
    pub first_failure: BTreeMap<String, (i32, i32)>,
    pub adopted: String,
}

impl BracketReport {
    /// The adopted rule is the only one consistent with the oracle.
    pub fn pass(&self) -> bool {
        self.consistent_signed == [self.adopted.clone()]
    }
}

pub fn bracket_consistency<F: Field>(ctx: &Context<F>, imax: i32, jmax: i32) -> Result<BracketReport> {
    let mut oracle = NuOracle::new(ctx);
    let mut consistent_signed = Vec::new();
    let mut consistent_unsigned = Vec::new();
    let mut first_failure = BTreeMap::new();
    for rule in QBracketRule::ALL {
        let name = format!("{rule:?}");
        for signed in [true, false] {
            let mut fail = None;
            'grid: for j in 0..=jmax {
                for i in 1..=imax {
                    if nu_closed_form_y1(ctx, i, j, rule, signed)? != oracle.reduce_monomial(i, j) {
                        fail = Some((i, j));
                        break 'grid;
                    }
                }
            }
            match (fail, signed) {
                (None, true) => consistent_signed.push(name.clone()),
                (None, false) => consistent_unsigned.push(name.clone()),
                (Some(at), true) => {
                    first_failure.insert(name.clone(), at);
                }
                (Some(_), false) => {}
            }
        }
    }
    Ok(BracketReport {
        imax,
        jmax,
        consistent_signed,
        consistent_unsigned,
        first_failure,
        adopted: format!("{Q_BRACKET_RULE:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, RatFunc};

    fn ctx() -> Context<RatFunc> {
        Context::symbolic()
    }

    fn coords(entries: &[((i32, i32), &str)]) -> NuCoords<RatFunc> {
        entries.iter().map(|((i, j), c)| (Monomial::podles(*i, *j), parse_scalar(c).unwrap())).collect()
    }

    #[test]
    fn oracle_small_values() {
        let ctx = ctx();
        assert_eq!(nu_reduce_oracle(&ctx, 1, 1), coords(&[((1, 0), "-q"), ((2, 0), "-1")]));
        assert_eq!(
            nu_reduce_oracle(&ctx, 1, 2),
            coords(&[((1, 0), "q^2"), ((2, 0), "q^-1 + q"), ((3, 0), "q^-2")])
        );
        assert_eq!(nu_reduce_oracle(&ctx, 2, -2), coords(&[((4, 0), "q^2")]));
        assert_eq!(nu_reduce_oracle(&ctx, 0, -1), coords(&[((1, 0), "-1")]));
    }

    #[test]
    fn gaussian_coefficient_at_four_two() {
        let ctx = ctx();
        let v = nu_reduce_oracle(&ctx, 1, 4);
        let want = parse_scalar("q^-8 + q^-6 + 2*q^-4 + q^-2 + 1").unwrap();
        assert_eq!(v[&Monomial::podles(3, 0)], want);
    }

    #[test]
    fn reducer_agrees_with_oracle() {
        let ctx = ctx();
        let red = NuReducer::new(&ctx, 5);
        assert!(red.dependent_representatives().is_empty());
        assert!(red.unreduced_monomials().is_empty());
        for m in filtration_basis(AlgId::Podles, 5) {
            let (i, j) = m.podles_indices();
            assert_eq!(red.reduce(&NCPoly::monomial(m)).unwrap(), nu_reduce_oracle(&ctx, i, j), "{m}");
        }
    }

    #[test]
    fn closed_forms() {
        let ctx = ctx();
        for i in 0..4 {
            for k in 0..4 {
                if i + k > 0 {
                    assert_eq!(nu_closed_form_ym(&ctx, i, k), nu_reduce_oracle(&ctx, i, -k));
                }
            }
        }
        let r = bracket_consistency(&ctx, 3, 6).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.consistent_unsigned.is_empty());
        assert_eq!(r.first_failure["BinomialQ2Integer"], (1, 4));
    }
}
