//! The Podles sphere as the subalgebra of quantum SL(2) generated by
//! `y-1 = ca`, `y0 = bc`, `y1 = bd`.

use super::monomial::{A, B, C, D, Y0, YM, YP};
use super::{AlgId, Monomial, NCPoly};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Image of a Podles generator (by letter index) in quantum SL(2).
pub fn generator_image<F: Field>(ctx: &Context<F>, letter: u8) -> NCPoly<F> {
    let pair = match letter {
        YM => [C, A],
        Y0 => [B, C],
        YP => [B, D],
        _ => panic!("not a Podles generator: {letter}"),
    };
    let x = NCPoly::generator(AlgId::Qsl2, pair[0]);
    let y = NCPoly::generator(AlgId::Qsl2, pair[1]);
    x.mul(ctx, &y)
}

/// Image of a basis monomial `e_{ij}`: always `q^k` times one `f_{lmn}`.
pub fn embed_monomial<F: Field>(ctx: &Context<F>, m: &Monomial) -> NCPoly<F> {
    assert_eq!(m.alg(), AlgId::Podles);
    let mut acc = NCPoly::one(AlgId::Qsl2);
    for letter in m.word() {
        acc = acc.mul(ctx, &generator_image(ctx, letter));
    }
    acc
}

/// The algebra map from the Podles sphere into quantum SL(2).
pub fn embed_podles<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<NCPoly<F>> {
    if p.alg() != AlgId::Podles {
        return Err(Error::AlgebraMismatch { left: p.alg(), right: AlgId::Podles });
    }
    let mut out = NCPoly::zero(AlgId::Qsl2);
    for (m, c) in p.terms() {
        out.add_scaled(&embed_monomial(ctx, m), c);
    }
    Ok(out)
}

/// The Podles monomial whose image has `f` in its support, if `f` has
/// coaction weight zero.
pub fn podles_preimage(f: &Monomial) -> Option<Monomial> {
    let (l, m, n) = f.qsl2_indices();
    if l + m - n != 0 {
        return None;
    }
    // e_{ij} -> d^j b^{i+j} c^i (j >= 0), a^{-j} b^i c^{i-j} (j < 0)
    Some(if l <= 0 { Monomial::podles(n, -l) } else { Monomial::podles(m, -l) })
}

/// Inverse of [`embed_podles`] on its image; errors on anything else.
pub fn express_in_podles<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<NCPoly<F>> {
    if p.alg() != AlgId::Qsl2 {
        return Err(Error::AlgebraMismatch { left: p.alg(), right: AlgId::Qsl2 });
    }
    let mut out = NCPoly::zero(AlgId::Podles);
    for (f, c) in p.terms() {
        let e = podles_preimage(f).ok_or_else(|| Error::NotInPodles(p.to_string()))?;
        let img = embed_monomial(ctx, &e);
        let (g, k) = img.as_single_term().ok_or_else(|| Error::Internal(format!("image of {e} is not a monomial")))?;
        if g != f {
            return Err(Error::Internal(format!("image of {e} is {img}, expected a multiple of {f}")));
        }
        out.add_term(e, c.try_div(k)?);
    }
    Ok(out)
}
