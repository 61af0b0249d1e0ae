use std::collections::HashMap;

use serde::Serialize;

use super::character::PodlesCharacter;
use super::module::omega_monomials;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::hopf::{antipode, antipode_pow, podles_coproduct};
use crate::linalg::{kernel, SparseVec};
use crate::ncalg::letters::{Y0, YM, YP};
use crate::ncalg::{embed_podles, express_in_podles, generator_image, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// `H^0(B, ω_{i,j})` at one truncation level.
#[derive(Debug, Clone, Serialize)]
pub struct H0Cell {
    pub i: i32,
    pub j: i32,
    pub level: usize,
    pub domain_dim: usize,
    pub dim: usize,
    /// Solution basis, rendered.
    pub basis: Vec<String>,
    /// `b^m c^n` with `m - n = i`, `m + n = 2j`, when it exists.
    pub expected: Option<String>,
    /// Every solution lies in `A_0` (no `a` or `d`).
    pub in_a0: bool,
    pub matches: bool,
}

/// Smallest admissible truncation for cell `(i, j)`.
pub fn h0_min_level(i: i32, j: i32) -> usize {
    (2 * j.unsigned_abs() + i.unsigned_abs() + 2) as usize
}

/// Closed form for the twisted centre of `ω_{i,j}`: `(m, n)` with
/// `m - n = i`, `m + n = 2j`, `m, n >= 0`.
pub fn h0_expected(i: i32, j: i32) -> Option<(i32, i32)> {
    if (i + 2 * j) % 2 != 0 {
        return None;
    }
    let m = (i + 2 * j) / 2;
    let n = 2 * j - m;
    (m >= 0 && n >= 0).then_some((m, n))
}

/// Solves `y_k f = f S^{2j}(y_k)`, `k ∈ {-1, 0, 1}`, for `f` in the span
/// of `{f_{lmn} : l + m - n = i, length <= level}`.
pub fn h0_twisted_center<F: Field>(ctx: &Context<F>, i: i32, j: i32, level: usize) -> Result<Vec<NCPoly<F>>> {
    let need = h0_min_level(i, j);
    if level < need {
        return Err(Error::FiltrationTooSmall { required: need, given: level });
    }
    let domain = omega_monomials(i, level);
    let gens: Vec<(NCPoly<F>, NCPoly<F>)> = [YM, Y0, YP]
        .iter()
        .map(|l| {
            let g = generator_image(ctx, *l);
            let s = antipode_pow(ctx, &g, 2 * j)?;
            Ok((g, s))
        })
        .collect::<Result<_>>()?;
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut columns: Vec<SparseVec<F>> = Vec::with_capacity(domain.len());
    for f in &domain {
        let fp = NCPoly::monomial(*f);
        let mut col = SparseVec::new();
        for (k, (g, s)) in gens.iter().enumerate() {
            let img = g.mul(ctx, &fp).sub(&fp.mul(ctx, s));
            for (m, c) in img.terms() {
                let next = index.len();
                let r = *index.entry((k, *m)).or_insert(next);
                col.insert(r, c.clone());
            }
        }
        columns.push(col);
    }
    Ok(kernel(&columns)
        .into_iter()
        .map(|v| {
            // normalise so the last monomial has coefficient one
            let p = NCPoly::from_terms(AlgId::Qsl2, v.into_iter().map(|(k, c)| (domain[k], c)));
            let lead = p.terms().next_back().map(|(_, c)| c.clone()).expect("nonzero kernel vector");
            p.scale(&lead.try_inv().expect("nonzero"))
        })
        .collect())
}

/// Runs [`h0_twisted_center`] and compares with the closed form.
pub fn h0_cell<F: Field>(ctx: &Context<F>, i: i32, j: i32, level: Option<usize>) -> Result<H0Cell> {
    let level = level.unwrap_or_else(|| h0_min_level(i, j)).max(h0_min_level(i, j));
    let sol = h0_twisted_center(ctx, i, j, level)?;
    let expected = h0_expected(i, j).map(|(m, n)| Monomial::qsl2(0, m, n));
    let in_a0 = sol.iter().all(|p| p.monomials().all(|f| f.qsl2_indices().0 == 0));
    let matches = match expected {
        None => sol.is_empty(),
        Some(f) => sol.len() == 1 && sol[0] == NCPoly::monomial(f),
    };
    Ok(H0Cell {
        i,
        j,
        level,
        domain_dim: omega_monomials(i, level).len(),
        dim: sol.len(),
        basis: sol.iter().map(|p| p.to_string()).collect(),
        expected: expected.map(|f| f.to_string()),
        in_a0,
        matches,
    })
}

/// All cells `|i| <= imax`, `0 <= j <= jmax`, ordered by `(j, i)`; cells
/// are solved in parallel.
pub fn h0_table<F: Field>(ctx: &Context<F>, imax: i32, jmax: i32, level: Option<usize>) -> Result<Vec<H0Cell>> {
    let cells: Vec<(i32, i32)> = (0..=jmax).flat_map(|j| (-imax..=imax).map(move |i| (i, j))).collect();
    let results: Vec<Result<H0Cell>> = std::thread::scope(|s| {
        let handles: Vec<_> = cells.iter().map(|&(i, j)| s.spawn(move || h0_cell(ctx, i, j, level))).collect();
        handles.into_iter().map(|h| h.join().expect("h0 worker panicked")).collect()
    });
    results.into_iter().collect()
}

/// `σ(x) = χ(x_(1)) S^2(x_(2))`. The result is returned in the sphere when
/// it lies there, otherwise in quantum SL(2).
pub fn sigma_map<F: Field>(ctx: &Context<F>, p: &NCPoly<F>, chi: &PodlesCharacter<F>) -> Result<NCPoly<F>> {
    let img = sigma_in_qsl2(ctx, p, chi)?;
    Ok(express_in_podles(ctx, &img).unwrap_or(img))
}

/// [`sigma_map`] without pulling back to the sphere.
pub fn sigma_in_qsl2<F: Field>(ctx: &Context<F>, p: &NCPoly<F>, chi: &PodlesCharacter<F>) -> Result<NCPoly<F>> {
    let mut out = NCPoly::zero(AlgId::Qsl2);
    for (u, w) in podles_coproduct(ctx, p)?.by_left() {
        let c = chi.eval_monomial(&u);
        if !c.is_zero() {
            out.add_scaled(&antipode(ctx, &w, 2)?, &c);
        }
    }
    Ok(out)
}

/// Checks of `σ` (with `χ = ε` unless given) on the Podles basis.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaReport {
    pub max_len: usize,
    pub checked: usize,
    /// Basis monomials with `σ(e_{ij}) != q^{-2j} e_{ij}`.
    pub scaling_failures: Vec<String>,
    /// Relations `xy → rhs` with `σ(x)σ(y) != σ(rhs)`.
    pub relation_failures: Vec<String>,
}

impl SigmaReport {
    pub fn pass(&self) -> bool {
        self.scaling_failures.is_empty() && self.relation_failures.is_empty()
    }
}

pub fn sigma_check<F: Field>(ctx: &Context<F>, max_len: usize) -> Result<SigmaReport> {
    let chi = PodlesCharacter::counit();
    let basis = crate::ncalg::filtration_basis(AlgId::Podles, max_len);
    let mut scaling_failures = Vec::new();
    for m in &basis {
        let (_, j) = m.podles_indices();
        let got = sigma_in_qsl2(ctx, &NCPoly::monomial(*m), &chi)?;
        let want = embed_podles(ctx, &NCPoly::monomial(*m))?.scale(&ctx.qp(-2 * j as i64));
        if got != want {
            scaling_failures.push(m.to_string());
        }
    }
    let names = AlgId::Podles.generators();
    let sigma_word = |w: &[u8]| -> Result<NCPoly<F>> {
        let mut acc = NCPoly::one(AlgId::Qsl2);
        for l in w {
            acc = acc.mul(ctx, &sigma_in_qsl2(ctx, &NCPoly::generator(AlgId::Podles, *l), &chi)?);
        }
        Ok(acc)
    };
    let mut relation_failures = Vec::new();
    for ([x, y], rhs) in ctx.rules(AlgId::Podles).rules() {
        let lhs = sigma_word(&[x, y])?;
        let mut r = NCPoly::zero(AlgId::Qsl2);
        for (c, w) in rhs {
            r.add_scaled(&sigma_word(w)?, c);
        }
        if lhs != r {
            relation_failures.push(format!("{}*{}", names[x as usize], names[y as usize]));
        }
    }
    Ok(SigmaReport { max_len, checked: basis.len(), scaling_failures, relation_failures })
}
