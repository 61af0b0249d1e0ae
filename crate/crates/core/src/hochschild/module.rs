use std::fmt;

use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hopf::{antipode_pow, Tensor};
use crate::ncalg::{embed_podles, filtration_basis, AlgId, Grading, Monomial, NCPoly};
use crate::scalar::Field;

/// Underlying space of a coefficient bimodule over the Podles sphere `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Carrier {
    /// `B` with multiplication on both sides.
    B,
    /// `B ⊗ A` with `x (b ⊗ a) y = x b ⊗ a y`; right `A`-action on the
    /// second leg.
    BA,
    /// `A_{S^{2m}}`: `x · a · y = x a S^{2m}(y)`.
    Twisted { m: i32 },
    /// `ω_{n,m} ⊂ A_{S^{2m}}`, the elements with left coaction `z^n ⊗ a`.
    Omega { n: i32, m: i32 },
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::B => f.write_str("B"),
            Carrier::BA => f.write_str("B⊗A"),
            Carrier::Twisted { m } => write!(f, "A_S^{}", 2 * m),
            Carrier::Omega { n, m } => write!(f, "ω_{{{n},{m}}}"),
        }
    }
}

/// A `B`-bimodule: its carrier together with the action rules, which are
/// fixed by the carrier. Elements are [`Tensor`]s of the carrier's shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BimoduleDesc {
    pub carrier: Carrier,
}

impl BimoduleDesc {
    pub fn new(carrier: Carrier) -> Self {
        BimoduleDesc { carrier }
    }

    pub fn b() -> Self {
        Self::new(Carrier::B)
    }

    pub fn ba() -> Self {
        Self::new(Carrier::BA)
    }

    pub fn twisted(m: i32) -> Self {
        Self::new(Carrier::Twisted { m })
    }

    pub fn omega(n: i32, m: i32) -> Self {
        Self::new(Carrier::Omega { n, m })
    }

    pub fn shape(&self) -> &'static [AlgId] {
        match self.carrier {
            Carrier::B => &[AlgId::Podles],
            Carrier::BA => &[AlgId::Podles, AlgId::Qsl2],
            Carrier::Twisted { .. } | Carrier::Omega { .. } => &[AlgId::Qsl2],
        }
    }

    pub fn left_rule(&self) -> &'static str {
        match self.carrier {
            Carrier::B => "x·b = xb",
            Carrier::BA => "x·(b⊗a) = xb⊗a",
            Carrier::Twisted { .. } | Carrier::Omega { .. } => "x·a = xa",
        }
    }

    pub fn right_rule(&self) -> &'static str {
        match self.carrier {
            Carrier::B => "b·y = by",
            Carrier::BA => "(b⊗a)·y = b⊗ay",
            Carrier::Twisted { .. } | Carrier::Omega { .. } => "a·y = aS^{2m}(y)",
        }
    }

    fn twist(&self) -> Option<i32> {
        match self.carrier {
            Carrier::Twisted { m } | Carrier::Omega { m, .. } => Some(m),
            _ => None,
        }
    }

    /// Whether the right `B`-action extends to a right `A`-action.
    pub fn has_right_a_action(&self) -> bool {
        matches!(self.carrier, Carrier::BA | Carrier::Twisted { .. })
    }

    pub fn zero<F: Field>(&self) -> Tensor<F> {
        Tensor::zero(self.shape())
    }

    /// Checks shape, and coaction weight for `ω_{n,m}`.
    pub fn check<F: Field>(&self, m: &Tensor<F>) -> Result<()> {
        if m.algs() != self.shape() {
            return Err(Error::InvalidArgument(format!("element {m} does not lie in {}", self.carrier)));
        }
        if let Carrier::Omega { n, .. } = self.carrier {
            let w = Grading::qsl2_weight();
            if let Some((k, _)) = m.terms().find(|(k, _)| w.degree(&k[0]) != n) {
                return Err(Error::InvalidArgument(format!("{} has weight {} in ω_{{{n},·}}", k[0], w.degree(&k[0]))));
            }
        }
        Ok(())
    }

    /// Truncated basis of the carrier: all pure tensors of basis monomials
    /// of length `<= n` in each leg.
    pub fn basis(&self, n: usize) -> Vec<Vec<Monomial>> {
        match self.carrier {
            Carrier::B => filtration_basis(AlgId::Podles, n).into_iter().map(|m| vec![m]).collect(),
            Carrier::BA => {
                let right = filtration_basis(AlgId::Qsl2, n);
                filtration_basis(AlgId::Podles, n)
                    .into_iter()
                    .flat_map(|l| right.iter().map(move |r| vec![l, *r]))
                    .collect()
            }
            Carrier::Twisted { .. } => filtration_basis(AlgId::Qsl2, n).into_iter().map(|m| vec![m]).collect(),
            Carrier::Omega { n: w, .. } => omega_monomials(w, n).into_iter().map(|m| vec![m]).collect(),
        }
    }

    /// `x · v` for `x` in the Podles sphere.
    pub fn left<F: Field>(&self, ctx: &Context<F>, x: &NCPoly<F>, v: &Tensor<F>) -> Result<Tensor<F>> {
        require_podles(x)?;
        let factor = match self.carrier {
            Carrier::B => Tensor::pure(&[x]),
            Carrier::BA => Tensor::pair(x, &NCPoly::one(AlgId::Qsl2)),
            Carrier::Twisted { .. } | Carrier::Omega { .. } => Tensor::pure(&[&embed_podles(ctx, x)?]),
        };
        Ok(factor.mul(ctx, v))
    }

    /// `v · y` for `y` in the Podles sphere.
    pub fn right<F: Field>(&self, ctx: &Context<F>, v: &Tensor<F>, y: &NCPoly<F>) -> Result<Tensor<F>> {
        require_podles(y)?;
        match self.carrier {
            Carrier::B => Ok(v.mul(ctx, &Tensor::pure(&[y]))),
            _ => self.act_right_qsl2(ctx, v, &embed_podles(ctx, y)?),
        }
    }

    /// `v · a` for `a` in quantum SL(2), on carriers that are `B`-`A`-bimodules.
    pub fn right_a<F: Field>(&self, ctx: &Context<F>, v: &Tensor<F>, a: &NCPoly<F>) -> Result<Tensor<F>> {
        if a.alg() != AlgId::Qsl2 {
            return Err(Error::AlgebraMismatch { left: a.alg(), right: AlgId::Qsl2 });
        }
        if !self.has_right_a_action() {
            return Err(Error::InvalidArgument(format!("{} is not a right A-module", self.carrier)));
        }
        self.act_right_qsl2(ctx, v, a)
    }

    fn act_right_qsl2<F: Field>(&self, ctx: &Context<F>, v: &Tensor<F>, a: &NCPoly<F>) -> Result<Tensor<F>> {
        match self.carrier {
            Carrier::BA => Ok(v.mul(ctx, &Tensor::pair(&NCPoly::one(AlgId::Podles), a))),
            _ => {
                let m = self.twist().expect("twisted carrier");
                let a = if m == 0 { a.clone() } else { antipode_pow(ctx, a, 2 * m)? };
                Ok(v.mul(ctx, &Tensor::pure(&[&a])))
            }
        }
    }
}

fn require_podles<F: Field>(x: &NCPoly<F>) -> Result<()> {
    if x.alg() != AlgId::Podles {
        return Err(Error::AlgebraMismatch { left: x.alg(), right: AlgId::Podles });
    }
    Ok(())
}

/// Monomials `f_{lmn}` of word length `<= len` with `l + m - n = weight`.
pub fn omega_monomials(weight: i32, len: usize) -> Vec<Monomial> {
    let w = Grading::qsl2_weight();
    filtration_basis(AlgId::Qsl2, len).into_iter().filter(|f| w.degree(f) == weight).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{letters::*, parse_poly};
    use crate::scalar::RatFunc;

    #[test]
    fn actions_on_carriers() {
        let ctx = Context::<RatFunc>::symbolic();
        let y0 = NCPoly::generator(AlgId::Podles, Y0);
        let y1 = NCPoly::generator(AlgId::Podles, YP);
        let one_a = NCPoly::one(AlgId::Qsl2);

        let ba = BimoduleDesc::ba();
        let v = Tensor::pair(&NCPoly::one(AlgId::Podles), &one_a);
        let r = ba.right(&ctx, &ba.left(&ctx, &y0, &v).unwrap(), &y1).unwrap();
        let bd = parse_poly(&ctx, AlgId::Qsl2, "b*d").unwrap();
        assert_eq!(r, Tensor::pair(&y0, &bd));

        // S^2(bd) = q^-2 bd
        let tw = BimoduleDesc::twisted(1);
        let r = tw.right(&ctx, &Tensor::pure(&[&one_a]), &y1).unwrap();
        assert_eq!(r, Tensor::pure(&[&bd.scale(&ctx.qp(-2))]));
        assert!(BimoduleDesc::omega(0, 1).right_a(&ctx, &r, &one_a).is_err());
    }

    #[test]
    fn omega_check_and_basis() {
        let ctx = Context::<RatFunc>::symbolic();
        let om = BimoduleDesc::omega(1, 0);
        let b = parse_poly(&ctx, AlgId::Qsl2, "b").unwrap();
        let c = parse_poly(&ctx, AlgId::Qsl2, "c").unwrap();
        assert!(om.check(&Tensor::pure(&[&b])).is_ok());
        assert!(om.check(&Tensor::pure(&[&c])).is_err());
        assert_eq!(omega_monomials(1, 1), vec![Monomial::qsl2(0, 1, 0), Monomial::qsl2(1, 0, 0)]);
    }
}
