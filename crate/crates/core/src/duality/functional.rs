use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hochschild::{CharacterFunctional, PodlesCharacter};
use crate::hopf::{coproduct, counit_monomial, podles_coproduct};
use crate::ncalg::{AlgId, Monomial, NCPoly};
use crate::scalar::Field;

type EvalFn<F> = Arc<dyn Fn(&Context<F>, &Monomial) -> Result<F> + Send + Sync>;

/// A linear functional on quantum SL(2) or on the Podles sphere, evaluated
/// lazily on basis monomials.
#[derive(Clone)]
pub struct Functional<F: Field> {
    domain: AlgId,
    label: String,
    eval: EvalFn<F>,
}

impl<F: Field> fmt::Debug for Functional<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional({} on {})", self.label, self.domain)
    }
}

impl<F: Field> Functional<F> {
    pub fn new(
        domain: AlgId,
        label: impl Into<String>,
        eval: impl Fn(&Context<F>, &Monomial) -> Result<F> + Send + Sync + 'static,
    ) -> Result<Self> {
        if !matches!(domain, AlgId::Qsl2 | AlgId::Podles) {
            return Err(Error::Unsupported { op: "functional", alg: domain });
        }
        Ok(Functional { domain, label: label.into(), eval: Arc::new(eval) })
    }

    pub fn domain(&self) -> AlgId {
        self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn counit(domain: AlgId) -> Result<Self> {
        Self::new(domain, "ε", |_, m| Ok(counit_monomial(m)))
    }

    /// Finitely supported functional; zero off the table.
    pub fn table(domain: AlgId, values: BTreeMap<Monomial, F>) -> Result<Self> {
        if let Some(m) = values.keys().find(|m| m.alg() != domain) {
            return Err(Error::AlgebraMismatch { left: m.alg(), right: domain });
        }
        Self::new(domain, "table", move |_, m| Ok(values.get(m).cloned().unwrap_or_else(F::zero)))
    }

    pub fn character(x: &CharacterFunctional<F>) -> Self {
        let x = x.clone();
        Self::new(AlgId::Qsl2, format!("X_{}", x.t()), move |_, m| Ok(x.eval_monomial(m))).expect("valid domain")
    }

    pub fn podles_character(chi: &PodlesCharacter<F>) -> Self {
        let chi = chi.clone();
        Self::new(AlgId::Podles, "χ", move |_, m| Ok(chi.eval_monomial(m))).expect("valid domain")
    }

    pub fn eval_monomial(&self, ctx: &Context<F>, m: &Monomial) -> Result<F> {
        if m.alg() != self.domain {
            return Err(Error::AlgebraMismatch { left: m.alg(), right: self.domain });
        }
        (self.eval)(ctx, m)
    }

    pub fn apply(&self, ctx: &Context<F>, p: &NCPoly<F>) -> Result<F> {
        let mut acc = F::zero();
        for (m, c) in p.terms() {
            acc = acc + self.eval_monomial(ctx, m)? * c;
        }
        Ok(acc)
    }
}

/// `(φψ)(a) = φ(a_(1)) ψ(a_(2))`. With `φ` on the sphere and `ψ` on quantum
/// SL(2) the product is a functional on the sphere, using `Δ(B) ⊂ B ⊗ A`.
pub fn convolution<F: Field>(phi: &Functional<F>, psi: &Functional<F>) -> Result<Functional<F>> {
    if psi.domain != AlgId::Qsl2 {
        return Err(Error::AlgebraMismatch { left: psi.domain, right: AlgId::Qsl2 });
    }
    let domain = phi.domain;
    let (phi, psi) = (phi.clone(), psi.clone());
    let label = format!("{}*{}", phi.label, psi.label);
    Functional::new(domain, label, move |ctx, m| {
        let delta = match m.alg() {
            AlgId::Podles => podles_coproduct(ctx, &NCPoly::monomial(*m))?,
            _ => coproduct(ctx, &NCPoly::monomial(*m))?,
        };
        let mut acc = F::zero();
        for (u, w) in delta.by_left() {
            let a = phi.eval_monomial(ctx, &u)?;
            if !a.is_zero() {
                acc = acc + a * psi.apply(ctx, &w)?;
            }
        }
        Ok(acc)
    })
}
