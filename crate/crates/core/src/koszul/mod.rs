//! The Koszul resolution `0 → B → B ⊕ B → B → k` of the counit module of
//! the Podles sphere, the quotient `B / B z_{-1}`, the map `ζ` and the
//! truncated `Ext_B(k, B)`.
//!
//! Truncation is by word length. Kernels are taken on `F_N`, images from
//! the enlarged source `F_{N+1}`; both levels are recorded in each report.

mod nu;
mod zeta;

pub use nu::{
    bracket_consistency, is_quotient_basis, nu_closed_form_y1, nu_closed_form_ym, nu_reduce, nu_reduce_oracle,
    quotient_basis, zeta_apply, BracketReport, NuCoords, NuOracle, NuReducer,
};
pub use zeta::{zeta_matrix, ZetaReport};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::{coords, kernel, BasisElem, Echelon, SparseVec, TruncatedMap};
use crate::ncalg::letters::{Y0, YM, YP};
use crate::ncalg::{filtration_basis, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// `z_1 = y1 + y0`.
pub fn z_plus<F: Field>(_ctx: &Context<F>) -> NCPoly<F> {
    NCPoly::generator(AlgId::Podles, YP).add(&NCPoly::generator(AlgId::Podles, Y0))
}

/// `z_{-1} = y-1 + y0`.
pub fn z_minus<F: Field>(_ctx: &Context<F>) -> NCPoly<F> {
    NCPoly::generator(AlgId::Podles, YM).add(&NCPoly::generator(AlgId::Podles, Y0))
}

/// `d_2(a) = (a z_{-1}, -q^2 a z_1)`.
pub fn koszul_d2<F: Field>(ctx: &Context<F>, a: &NCPoly<F>) -> (NCPoly<F>, NCPoly<F>) {
    (a.mul(ctx, &z_minus(ctx)), a.mul(ctx, &z_plus(ctx)).scale(&-ctx.qp(2)))
}

/// `d_1(b, c) = b z_1 + c z_{-1}`.
pub fn koszul_d1<F: Field>(ctx: &Context<F>, b: &NCPoly<F>, c: &NCPoly<F>) -> NCPoly<F> {
    b.mul(ctx, &z_plus(ctx)).add(&c.mul(ctx, &z_minus(ctx)))
}

#[derive(Debug, Clone, Serialize)]
pub struct D1D2Report {
    /// `z_{-1} z_1 - q^2 z_1 z_{-1}` reduces to zero.
    pub relation_vanishes: bool,
    pub max_len: usize,
    pub checked: usize,
    /// Basis monomials `a` with `d_1(d_2(a)) != 0`.
    pub failures: Vec<String>,
}

impl D1D2Report {
    pub fn pass(&self) -> bool {
        self.relation_vanishes && self.failures.is_empty()
    }
}

/// Checks `d_1 ∘ d_2 = 0` on the relation itself and on every basis
/// monomial of length `<= max_len`.
pub fn koszul_d2_d1_zero<F: Field>(ctx: &Context<F>, max_len: usize) -> D1D2Report {
    let zp = z_plus(ctx);
    let zm = z_minus(ctx);
    let rel = zm.mul(ctx, &zp).sub(&zp.mul(ctx, &zm).scale(&ctx.qp(2)));
    let basis = filtration_basis(AlgId::Podles, max_len);
    let failures = basis
        .iter()
        .filter(|m| {
            let (u, v) = koszul_d2(ctx, &NCPoly::monomial(**m));
            !koszul_d1(ctx, &u, &v).is_zero()
        })
        .map(|m| m.to_string())
        .collect();
    D1D2Report { relation_vanishes: rel.is_zero(), max_len, checked: basis.len(), failures }
}

fn blocks(n: usize, count: u8) -> Vec<BasisElem> {
    let base = filtration_basis(AlgId::Podles, n);
    (0..count).flat_map(|b| base.iter().map(move |m| BasisElem::new(b, *m))).collect()
}

/// Number of kernel vectors of `ker` (in `ker_domain` coordinates) not in
/// the span of the columns of `image`.
fn homology_defect<F: Field>(ker_domain: &[BasisElem], ker: &[SparseVec<F>], image: &TruncatedMap<F>) -> usize {
    let index: BTreeMap<BasisElem, usize> = image.codomain.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut e = Echelon::new();
    for col in &image.columns {
        e.insert(col.clone());
    }
    ker.iter()
        .filter(|v| {
            let w: SparseVec<F> = v.iter().map(|(k, c)| (index[&ker_domain[*k]], c.clone())).collect();
            e.insert(w).is_some()
        })
        .count()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    pub kernel_level: usize,
    pub image_level: usize,
    pub dim_f_n: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub dim_ker_d1: usize,
    pub h1_defect: usize,
    pub h2_defect: usize,
}

impl ExactnessReport {
    pub fn pass(&self) -> bool {
        self.h1_defect == 0 && self.h2_defect == 0
    }
}

/// Truncated homology of the Koszul complex at `B ⊕ B` and the left `B`.
pub fn exactness_check<F: Field>(ctx: &Context<F>, n: usize) -> Result<ExactnessReport> {
    if n < 2 {
        return Err(Error::FiltrationTooSmall { required: 2, given: n });
    }
    let d2 = |level: usize| {
        TruncatedMap::build(blocks(level, 1), blocks(level + 1, 2), (level, level + 1), |b| {
            let (u, v) = koszul_d2(ctx, &NCPoly::monomial(b.mono));
            let mut out = coords(0, &u);
            out.extend(coords(1, &v));
            out
        })
    };
    let d1 = TruncatedMap::build(blocks(n, 2), blocks(n + 1, 1), (n, n + 1), |b| {
        let p = NCPoly::monomial(b.mono);
        let img = if b.block == 0 { p.mul(ctx, &z_plus(ctx)) } else { p.mul(ctx, &z_minus(ctx)) };
        coords(0, &img)
    })?;
    let d2_n = d2(n)?;
    let d2_big = d2(n + 1)?;
    let ker_d1 = kernel(&d1.columns);
    let h1 = homology_defect(&d1.domain, &ker_d1, &d2_big);
    let rank_d2 = d2_n.rank();
    Ok(ExactnessReport {
        n,
        kernel_level: n,
        image_level: n + 1,
        dim_f_n: d2_n.domain.len(),
        rank_d1: d1.rank(),
        rank_d2,
        dim_ker_d1: ker_d1.len(),
        h1_defect: h1,
        h2_defect: d2_n.domain.len() - rank_d2,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(bound = "F: std::fmt::Display")]
pub struct ExtReport<F> {
    pub n: usize,
    pub image_level: usize,
    pub dims: [usize; 3],
    /// Right action of each generator on the class of `1` in `Ext^2`.
    #[serde(serialize_with = "crate::scalar::text_serde::display_map")]
    pub character: BTreeMap<String, F>,
    /// Set when the truncation is too small to trust the numbers.
    pub unstable: bool,
}

impl<F: Field> ExtReport<F> {
    pub fn pass(&self) -> bool {
        self.dims == [0, 0, 1] && self.character.values().all(|c| c.is_zero()) && !self.unstable
    }
}

/// `Ext^n_B(k, B)` from the dual Koszul complex
/// `B → B ⊕ B → B`, `f ↦ (z_1 f, z_{-1} f)`, `(f, g) ↦ q^{-1} z_{-1} f - q z_1 g`,
/// truncated at `F_n`.
pub fn ext_counit_module<F: Field>(ctx: &Context<F>, n: usize) -> Result<ExtReport<F>> {
    if n < 2 {
        return Err(Error::FiltrationTooSmall { required: 2, given: n });
    }
    let zp = z_plus(ctx);
    let zm = z_minus(ctx);
    let delta0 = |level: usize| {
        TruncatedMap::build(blocks(level, 1), blocks(level + 1, 2), (level, level + 1), |b| {
            let f = NCPoly::monomial(b.mono);
            let mut out = coords(0, &zp.mul(ctx, &f));
            out.extend(coords(1, &zm.mul(ctx, &f)));
            out
        })
    };
    let delta1 = |level: usize| {
        TruncatedMap::build(blocks(level, 2), blocks(level + 1, 1), (level, level + 1), |b| {
            let f = NCPoly::monomial(b.mono);
            let img = if b.block == 0 {
                zm.mul(ctx, &f).scale(&ctx.qp(-1))
            } else {
                zp.mul(ctx, &f).scale(&-ctx.qp(1))
            };
            coords(0, &img)
        })
    };
    let d0_map = delta0(n)?;
    let dim0 = kernel(&d0_map.columns).len();
    let d1_map = delta1(n)?;
    let ker1 = kernel(&d1_map.columns);
    let dim1 = homology_defect(&d1_map.domain, &ker1, &delta0(n + 1)?);

    // Ext^2 = B / (z_1 B + z_{-1} B): reduce F_n against the image of F_{n+1}^2,
    // pivoting first outside F_n and last on the constant 1.
    let big = delta1(n + 1)?;
    let one = BasisElem::new(0, Monomial::one(AlgId::Podles));
    let mut order: Vec<BasisElem> = vec![one];
    order.extend(big.codomain.iter().copied().filter(|b| b.mono.len() <= n && *b != one));
    order.extend(big.codomain.iter().copied().filter(|b| b.mono.len() > n));
    let col: BTreeMap<BasisElem, usize> = order.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut e = Echelon::new();
    for c in &big.columns {
        e.insert(c.iter().map(|(k, v)| (col[&big.codomain[*k]], v.clone())).collect());
    }
    let dim_f_n = filtration_basis(AlgId::Podles, n).len();
    let inside_pivots = e.pivots().filter(|k| order[*k].mono.len() <= n).count();
    let dim2 = dim_f_n - inside_pivots;
    let mut unstable = n < 4;
    let mut character = BTreeMap::new();
    let one_rem = e.remainder(&SparseVec::from([(0, F::one())]));
    if one_rem.get(&0).map(|c| *c != F::one()).unwrap_or(true) || one_rem.len() != 1 {
        unstable = true;
    }
    for (name, letter) in [("y-1", YM), ("y0", Y0), ("y1", YP)] {
        let g = NCPoly::<F>::generator(AlgId::Podles, letter);
        let v: SparseVec<F> = g.terms().map(|(m, c)| (col[&BasisElem::new(0, *m)], c.clone())).collect();
        let r = e.remainder(&v);
        if r.keys().any(|k| *k != 0) {
            unstable = true;
        }
        character.insert(name.to_string(), r.get(&0).cloned().unwrap_or_else(F::zero));
    }
    Ok(ExtReport { n, image_level: n + 1, dims: [dim0, dim1, dim2], character, unstable })
}
