//! Noncommutative polynomials over the preset algebras, reduced to normal
//! form by rewriting.

mod basis;
mod embed;
mod grading;
pub(crate) mod monomial;
mod parse;
mod poly;
pub mod rewrite;

pub use basis::{filtration_basis, graded_piece};
pub use embed::{embed_monomial, embed_podles, express_in_podles, generator_image, podles_preimage};
pub use grading::{grade_decompose, Grading};
pub use monomial::{AlgId, Monomial};
pub use parse::parse_poly;
pub use poly::NCPoly;
pub use rewrite::Strategy;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Letter indices of the generators, by name.
pub mod letters {
    pub use super::monomial::{A, B, C, D, X, Y, Y0, YM, YP, Z, ZI};
}

/// Normal form of a combination of generator words (letter indices).
pub fn normal_form<F: Field>(
    ctx: &Context<F>,
    alg: AlgId,
    words: impl IntoIterator<Item = (Vec<u8>, F)>,
    strategy: Strategy,
) -> Result<NCPoly<F>> {
    let n = alg.generators().len() as u8;
    let words: Vec<(Vec<u8>, F)> = words.into_iter().collect();
    if let Some(bad) = words.iter().flat_map(|(w, _)| w.iter()).find(|&&l| l >= n) {
        return Err(Error::InvalidArgument(format!("letter {bad} is not a generator of {alg}")));
    }
    Ok(rewrite::reduce_words(ctx, alg, words, strategy))
}

/// Normal form of `p * r`.
pub fn multiply<F: Field>(ctx: &Context<F>, p: &NCPoly<F>, r: &NCPoly<F>) -> Result<NCPoly<F>> {
    p.try_mul(ctx, r)
}
