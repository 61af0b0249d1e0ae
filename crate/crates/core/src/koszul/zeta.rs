use serde::Serialize;

use super::nu::{zeta_apply, NuReducer};
use crate::context::Context;
use crate::error::Result;
use crate::linalg::{determinant, BasisElem, TruncatedMap};
use crate::ncalg::{Monomial, NCPoly};
use crate::scalar::Field;

/// `{ν(y0), ..., ν(y0^{j+1}), ν(1), ν(y1), ..., ν(y1^j)}`.
pub fn v_basis(j: i32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (1..=j + 1).map(|i| Monomial::podles(i, 0)).collect();
    out.extend((0..=j).map(|k| Monomial::podles(0, k)));
    out
}

/// `ζ|_{V_j}` together with checks of its shape.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "F: std::fmt::Display")]
pub struct ZetaReport<F> {
    pub j: usize,
    #[serde(skip)]
    pub map: TruncatedMap<F>,
    pub rank: usize,
    pub full_column_rank: bool,
    /// Diagonal entries of the `y0` block, `ν(y0^i) → ν(y0^i)`.
    #[serde(serialize_with = "crate::scalar::text_serde::display_seq")]
    pub y0_diagonal: Vec<F>,
    /// Subdiagonal entries of the `y0` block, `ν(y0^i) → ν(y0^{i+1})`.
    #[serde(serialize_with = "crate::scalar::text_serde::display_seq")]
    pub y0_subdiagonal: Vec<F>,
    pub diagonal_is_q: bool,
    pub subdiagonal_is_two: bool,
    /// `ν(y1^k) → ν(y1^{k+1})` is one, the `ν(1)` row vanishes, and
    /// `ν(y1^k)` has no other `y1` components.
    pub shifted_identity_block: bool,
    /// `ν(y1^k) → ν(y0^{1+r})` is nonzero for `0 <= r <= k`.
    pub upper_right_nonzero: bool,
    /// Determinant after projecting to `V_{j+1} / span{ν(y0), ν(1)}`.
    #[serde(serialize_with = "crate::scalar::text_serde::display")]
    pub composite_determinant: F,
    #[serde(serialize_with = "crate::scalar::text_serde::display")]
    pub expected_determinant: F,
}

impl<F: Field> ZetaReport<F> {
    pub fn pattern_matches(&self) -> bool {
        self.diagonal_is_q && self.subdiagonal_is_two && self.shifted_identity_block && self.upper_right_nonzero
    }

    pub fn determinant_matches(&self) -> bool {
        self.composite_determinant == self.expected_determinant
    }
}

/// Matrix of `ζ: V_j → V_{j+1}`, `ν(a) ↦ ν(a z_1)`.
pub fn zeta_matrix<F: Field>(ctx: &Context<F>, j: usize) -> Result<ZetaReport<F>> {
    let ji = j as i32;
    let reducer = NuReducer::new(ctx, j + 2);
    let dom: Vec<BasisElem> = v_basis(ji).into_iter().map(|m| BasisElem::new(0, m)).collect();
    let cod: Vec<BasisElem> = v_basis(ji + 1).into_iter().map(|m| BasisElem::new(0, m)).collect();
    let mut images = Vec::new();
    for d in &dom {
        images.push(zeta_apply(ctx, &reducer, &NCPoly::monomial(d.mono))?);
    }
    let mut it = images.into_iter();
    let map = TruncatedMap::build(dom.clone(), cod.clone(), (j + 1, j + 2), |_| {
        it.next().expect("one image per column").into_iter().map(|(m, c)| (BasisElem::new(0, m), c)).collect()
    })?;
    let pos = |m: Monomial| cod.iter().position(|b| b.mono == m).expect("codomain basis");
    let q = ctx.q().clone();
    let two = F::from_i64(2);

    let y0_diagonal: Vec<F> = (1..=ji + 1).map(|i| map.entry(pos(Monomial::podles(i, 0)), (i - 1) as usize)).collect();
    let y0_subdiagonal: Vec<F> =
        (1..=ji + 1).map(|i| map.entry(pos(Monomial::podles(i + 1, 0)), (i - 1) as usize)).collect();
    let y0_block_rest_zero = (1..=ji + 1).all(|i| {
        (1..=ji + 2).filter(|r| *r != i && *r != i + 1).all(|r| map.entry(pos(Monomial::podles(r, 0)), (i - 1) as usize).is_zero())
            && (0..=ji + 1).all(|k| map.entry(pos(Monomial::podles(0, k)), (i - 1) as usize).is_zero())
    });
    let diagonal_is_q = y0_diagonal.iter().all(|d| *d == q) && y0_block_rest_zero;
    let subdiagonal_is_two = y0_subdiagonal.iter().all(|d| *d == two) && y0_block_rest_zero;

    let y1_col = |k: i32| (ji + 1 + k) as usize;
    let shifted_identity_block = (0..=ji).all(|k| {
        (0..=ji + 1).all(|r| {
            let e = map.entry(pos(Monomial::podles(0, r)), y1_col(k));
            if r == k + 1 {
                e == F::one()
            } else {
                e.is_zero()
            }
        })
    });
    let upper_right_nonzero =
        (0..=ji).all(|k| (0..=k).all(|r| !map.entry(pos(Monomial::podles(1 + r, 0)), y1_col(k)).is_zero()));

    let skip = [pos(Monomial::podles(1, 0)), pos(Monomial::one(crate::ncalg::AlgId::Podles))];
    let rows: Vec<Vec<F>> = (0..cod.len())
        .filter(|r| !skip.contains(r))
        .map(|r| (0..dom.len()).map(|c| map.entry(r, c)).collect())
        .collect();
    let composite_determinant = determinant(rows);
    let rank = map.rank();
    Ok(ZetaReport {
        j,
        rank,
        full_column_rank: rank == dom.len(),
        y0_diagonal,
        y0_subdiagonal,
        diagonal_is_q,
        subdiagonal_is_two,
        shifted_identity_block,
        upper_right_nonzero,
        composite_determinant,
        expected_determinant: F::from_i64(1 << j),
        map,
    })
}
