use std::sync::Arc;

use serde::Serialize;

use super::cochain::{Cochain, Hochschild};
use super::module::Carrier;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::hopf::{coproduct, podles_coproduct, Tensor};
use crate::ncalg::letters::{Y0, YM, YP};
use crate::ncalg::{embed_podles, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// The character `X_t` of quantum SL(2): `a ↦ t`, `d ↦ t^{-1}`,
/// `b, c ↦ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "F: std::fmt::Display")]
pub struct CharacterFunctional<F> {
    #[serde(serialize_with = "crate::scalar::text_serde::display")]
    t: F,
}

impl<F: Field> CharacterFunctional<F> {
    pub fn new(t: F) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::InvalidArgument("character parameter t must be nonzero".into()));
        }
        Ok(CharacterFunctional { t })
    }

    /// The counit `ε = X_1`.
    pub fn counit() -> Self {
        CharacterFunctional { t: F::one() }
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    /// `X(f_{lmn}) = δ_{m0} δ_{n0} t^l`.
    pub fn eval_monomial(&self, f: &Monomial) -> F {
        let (l, m, n) = f.qsl2_indices();
        if m == 0 && n == 0 {
            self.t.powi(l as i64).expect("t is nonzero")
        } else {
            F::zero()
        }
    }

    /// Value on an element of quantum SL(2) or of the sphere.
    pub fn eval(&self, ctx: &Context<F>, p: &NCPoly<F>) -> Result<F> {
        let p = match p.alg() {
            AlgId::Qsl2 => p.clone(),
            AlgId::Podles => embed_podles(ctx, p)?,
            other => return Err(Error::AlgebraMismatch { left: other, right: AlgId::Qsl2 }),
        };
        Ok(p.terms().fold(F::zero(), |acc, (m, c)| acc + self.eval_monomial(m) * c))
    }

    /// `X ∘ S^k`; for a character this is `X_{t^{(-1)^k}}`.
    pub fn compose_antipode(&self, k: i32) -> Self {
        if k % 2 == 0 {
            self.clone()
        } else {
            CharacterFunctional { t: self.t.try_inv().expect("t is nonzero") }
        }
    }

    /// Convolution product `X_s X_t = X_{st}`.
    pub fn convolve(&self, other: &Self) -> Self {
        CharacterFunctional { t: self.t.clone() * &other.t }
    }

    /// `X.p = p_(0) X(p_(1))` for the right coaction given by the
    /// coproduct; Podles input stays in the sphere.
    pub fn act(&self, ctx: &Context<F>, p: &NCPoly<F>) -> Result<NCPoly<F>> {
        match p.alg() {
            AlgId::Podles => {
                let mut out = NCPoly::zero(AlgId::Podles);
                for (u, w) in podles_coproduct(ctx, p)?.by_left() {
                    out.add_term(u, self.eval(ctx, &w)?);
                }
                Ok(out)
            }
            AlgId::Qsl2 => {
                let mut out = NCPoly::zero(AlgId::Qsl2);
                for (u, w) in coproduct(ctx, p)?.by_left() {
                    out.add_term(u, self.eval(ctx, &w)?);
                }
                Ok(out)
            }
            other => Err(Error::AlgebraMismatch { left: other, right: AlgId::Qsl2 }),
        }
    }

    /// `(X ⊗ Y) ▷ v` on `B ⊗ A`.
    pub fn act_pair(ctx: &Context<F>, x: &Self, y: &Self, v: &Tensor<F>) -> Result<Tensor<F>> {
        let mut out = Tensor::zero(&[AlgId::Podles, AlgId::Qsl2]);
        for (k, c) in v.terms() {
            let l = x.act(ctx, &NCPoly::monomial(k[0]))?;
            let r = y.act(ctx, &NCPoly::monomial(k[1]))?;
            out.add_scaled(&Tensor::pair(&l, &r), c);
        }
        Ok(out)
    }
}

/// `(Xφ)(b^1, …, b^n) = (S^2(X) ⊗ X) ▷ φ(S(X).b^1, …, S(X).b^n)` for a
/// character `X`, whose Sweedler legs all equal `X`. Defined on cochains
/// with values in `B ⊗ A`.
pub fn character_action<F: Field>(
    hs: &Arc<Hochschild<F>>,
    x: &CharacterFunctional<F>,
    phi: &Cochain<F>,
) -> Result<Cochain<F>> {
    if phi.module().carrier != Carrier::BA {
        return Err(Error::InvalidArgument(format!("character action needs B⊗A, got {}", phi.module().carrier)));
    }
    let hs = hs.clone();
    let phi2 = phi.clone();
    let x = x.clone();
    let s1 = x.compose_antipode(1);
    let s2 = x.compose_antipode(2);
    Ok(Cochain::derived(
        phi.degree(),
        phi.module(),
        phi.level(),
        Arc::new(move |args: &[Monomial]| {
            let ctx = hs.ctx();
            let moved: Vec<NCPoly<F>> =
                args.iter().map(|m| s1.act(ctx, &NCPoly::monomial(*m))).collect::<Result<_>>()?;
            let v = phi2.eval_poly(&moved)?;
            CharacterFunctional::act_pair(ctx, &s2, &x, &v)
        }),
    ))
}

/// A character `χ` of the Podles sphere, given by its values on the
/// generators. Only tuples compatible with the relations are accepted.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "F: std::fmt::Display")]
pub struct PodlesCharacter<F> {
    #[serde(serialize_with = "crate::scalar::text_serde::display_seq")]
    values: [F; 3],
}

impl<F: Field> PodlesCharacter<F> {
    /// Values on `y-1, y0, y1`; errors if a relation is violated.
    pub fn new(ctx: &Context<F>, values: [F; 3]) -> Result<Self> {
        let chi = PodlesCharacter { values };
        chi.validate(ctx)?;
        Ok(chi)
    }

    /// The restriction of the counit: all generators to zero.
    pub fn counit() -> Self {
        PodlesCharacter { values: [F::zero(), F::zero(), F::zero()] }
    }

    pub fn values(&self) -> &[F; 3] {
        &self.values
    }

    fn letter(&self, l: u8) -> F {
        match l {
            YM => self.values[0].clone(),
            Y0 => self.values[1].clone(),
            YP => self.values[2].clone(),
            _ => unreachable!("not a Podles letter"),
        }
    }

    fn word(&self, w: &[u8]) -> F {
        w.iter().fold(F::one(), |acc, l| acc * self.letter(*l))
    }

    /// Checks `χ(x)χ(y) = χ(rhs)` on every defining relation `xy → rhs`.
    pub fn validate(&self, ctx: &Context<F>) -> Result<()> {
        for ([x, y], rhs) in ctx.rules(AlgId::Podles).rules() {
            let lhs = self.letter(x) * self.letter(y);
            let r = rhs.iter().fold(F::zero(), |acc, (c, w)| acc + self.word(w) * c);
            if lhs != r {
                let names = AlgId::Podles.generators();
                return Err(Error::NotACharacter(
                    format!("({}, {}, {})", self.values[0], self.values[1], self.values[2]),
                    format!("{}*{}", names[x as usize], names[y as usize]),
                ));
            }
        }
        Ok(())
    }

    pub fn eval_monomial(&self, m: &Monomial) -> F {
        self.word(&m.word())
    }

    pub fn eval(&self, p: &NCPoly<F>) -> Result<F> {
        if p.alg() != AlgId::Podles {
            return Err(Error::AlgebraMismatch { left: p.alg(), right: AlgId::Podles });
        }
        Ok(p.terms().fold(F::zero(), |acc, (m, c)| acc + self.eval_monomial(m) * c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{parse_poly, Grading};
    use crate::scalar::{parse_scalar, RatFunc};

    #[test]
    fn action_scales_by_right_weight() {
        let ctx = Context::<RatFunc>::symbolic();
        let t = parse_scalar("2*q + 1").unwrap();
        let x = CharacterFunctional::new(t.clone()).unwrap();
        let w = Grading::qsl2_right_weight();
        for f in crate::ncalg::filtration_basis(AlgId::Qsl2, 3) {
            let got = x.act(&ctx, &NCPoly::monomial(f)).unwrap();
            let want = NCPoly::monomial(f).scale(&t.powi(w.degree(&f) as i64).unwrap());
            assert_eq!(got, want, "{f}");
        }
        let y1 = parse_poly(&ctx, AlgId::Podles, "y1").unwrap();
        let inv2 = t.powi(-2).unwrap();
        assert_eq!(x.act(&ctx, &y1).unwrap(), y1.scale(&inv2));
    }

    #[test]
    fn podles_characters() {
        let ctx = Context::<RatFunc>::symbolic();
        let z = RatFunc::from_int(0);
        assert!(PodlesCharacter::new(&ctx, [RatFunc::from_int(3), z.clone(), z.clone()]).is_ok());
        assert!(PodlesCharacter::new(&ctx, [z.clone(), RatFunc::from_int(1), z.clone()]).is_err());
        assert!(PodlesCharacter::new(&ctx, [RatFunc::from_int(1), z.clone(), RatFunc::from_int(1)]).is_err());
        assert!(CharacterFunctional::new(z).is_err());
    }
}
