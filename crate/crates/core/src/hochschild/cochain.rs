use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use super::module::BimoduleDesc;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::hopf::{antipode, counit_monomial, podles_coproduct, Tensor};
use crate::ncalg::{AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// Sweedler legs `b_(1) ⊗ b_(2)` of a Podles monomial, grouped by the
/// first leg (a Podles monomial).
pub type Legs<F> = Arc<Vec<(Monomial, NCPoly<F>)>>;

/// Shared state for cochain computations: the context and a memo of
/// Podles coproducts.
#[derive(Debug)]
pub struct Hochschild<F: Field> {
    ctx: Context<F>,
    legs: Mutex<HashMap<Monomial, Legs<F>>>,
}

impl<F: Field> Hochschild<F> {
    pub fn new(ctx: Context<F>) -> Arc<Self> {
        Arc::new(Hochschild { ctx, legs: Mutex::new(HashMap::new()) })
    }

    pub fn ctx(&self) -> &Context<F> {
        &self.ctx
    }

    pub fn legs(&self, m: &Monomial) -> Result<Legs<F>> {
        if let Some(l) = self.legs.lock().expect("legs cache").get(m) {
            return Ok(l.clone());
        }
        let l: Legs<F> = Arc::new(podles_coproduct(&self.ctx, &NCPoly::monomial(*m))?.by_left());
        self.legs.lock().expect("legs cache").insert(*m, l.clone());
        Ok(l)
    }

    /// `ad(x) v = x_(1) v S(x_(2))` for a Podles monomial `x`.
    pub fn ad(&self, module: &BimoduleDesc, x: &Monomial, v: &Tensor<F>) -> Result<Tensor<F>> {
        let mut out = module.zero();
        for (u, w) in self.legs(x)?.iter() {
            let left = module.left(&self.ctx, &NCPoly::monomial(*u), v)?;
            let s = antipode(&self.ctx, w, 1)?;
            out = out.add(&module.right_a(&self.ctx, &left, &s)?);
        }
        Ok(out)
    }
}

type EvalFn<F> = Arc<dyn Fn(&[Monomial]) -> Result<Tensor<F>> + Send + Sync>;

/// An `n`-cochain `B^{⊗n} → M`, evaluated lazily on tuples of Podles
/// basis monomials and extended multilinearly.
///
/// Tabulated cochains carry a filtration level: they are known on tuples
/// whose entries all have length `<= level` (zero where no value is
/// listed) and refuse to evaluate beyond it.
#[derive(Clone)]
pub struct Cochain<F: Field> {
    degree: usize,
    module: BimoduleDesc,
    level: Option<usize>,
    eval: EvalFn<F>,
}

impl<F: Field> fmt::Debug for Cochain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("degree", &self.degree)
            .field("module", &self.module)
            .field("level", &self.level)
            .finish_non_exhaustive()
    }
}

impl<F: Field> Cochain<F> {
    pub(crate) fn derived(degree: usize, module: BimoduleDesc, level: Option<usize>, eval: EvalFn<F>) -> Self {
        Cochain { degree, module, level, eval }
    }

    /// Cochain given by a finite table of values on monomial tuples.
    pub fn from_table(
        module: BimoduleDesc,
        degree: usize,
        level: usize,
        table: BTreeMap<Vec<Monomial>, Tensor<F>>,
    ) -> Result<Self> {
        for (args, v) in &table {
            if args.len() != degree || args.iter().any(|m| m.alg() != AlgId::Podles) {
                return Err(Error::InvalidArgument(format!("bad argument tuple for a {degree}-cochain")));
            }
            if let Some(m) = args.iter().find(|m| m.len() > level) {
                return Err(Error::FiltrationTooSmall { required: m.len(), given: level });
            }
            module.check(v)?;
        }
        let table = Arc::new(table);
        let eval: EvalFn<F> = Arc::new(move |args: &[Monomial]| {
            if let Some(m) = args.iter().find(|m| m.len() > level) {
                return Err(Error::FiltrationTooSmall { required: m.len(), given: level });
            }
            Ok(table.get(args).cloned().unwrap_or_else(|| module.zero()))
        });
        Ok(Cochain { degree, module, level: Some(level), eval })
    }

    /// The 0-cochain with value `v`.
    pub fn constant(module: BimoduleDesc, v: Tensor<F>) -> Result<Self> {
        module.check(&v)?;
        Ok(Cochain { degree: 0, module, level: None, eval: Arc::new(move |_| Ok(v.clone())) })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> BimoduleDesc {
        self.module
    }

    /// Arguments of length `<= level` are always evaluable; `None` when
    /// there is no bound.
    pub fn level(&self) -> Option<usize> {
        self.level
    }

    pub fn eval(&self, args: &[Monomial]) -> Result<Tensor<F>> {
        if args.len() != self.degree {
            return Err(Error::InvalidArgument(format!(
                "{}-cochain evaluated at {} arguments",
                self.degree,
                args.len()
            )));
        }
        if let Some(m) = args.iter().find(|m| m.alg() != AlgId::Podles) {
            return Err(Error::AlgebraMismatch { left: m.alg(), right: AlgId::Podles });
        }
        (self.eval)(args)
    }

    /// Multilinear evaluation at polynomial arguments.
    pub fn eval_poly(&self, args: &[NCPoly<F>]) -> Result<Tensor<F>> {
        let mut out = self.module.zero();
        let mut stack: Vec<(Vec<Monomial>, F)> = vec![(Vec::new(), F::one())];
        for a in args {
            let mut next = Vec::with_capacity(stack.len() * a.len());
            for (k, c) in &stack {
                for (m, d) in a.terms() {
                    let mut k = k.clone();
                    k.push(*m);
                    next.push((k, c.clone() * d));
                }
            }
            stack = next;
        }
        for (k, c) in stack {
            out.add_scaled(&self.eval(&k)?, &c);
        }
        Ok(out)
    }
}

fn sign<F: Field>(k: usize) -> F {
    if k.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

/// Sum of the inner terms `Σ_{i=1}^{n} (-1)^i φ(b^1, …, b^i b^{i+1}, …, b^{n+1})`.
fn inner_terms<F: Field>(ctx: &Context<F>, phi: &Cochain<F>, args: &[Monomial]) -> Result<Tensor<F>> {
    let n = phi.degree;
    let mut out = phi.module.zero();
    for i in 1..=n {
        let mut polys: Vec<NCPoly<F>> = Vec::with_capacity(n);
        polys.extend(args[..i - 1].iter().map(|m| NCPoly::monomial(*m)));
        polys.push(NCPoly::monomial(args[i - 1]).mul(ctx, &NCPoly::monomial(args[i])));
        polys.extend(args[i + 1..].iter().map(|m| NCPoly::monomial(*m)));
        out.add_scaled(&phi.eval_poly(&polys)?, &sign(i));
    }
    Ok(out)
}

/// The standard Hochschild coboundary
/// `(bφ)(b^1, …, b^{n+1}) = b^1 φ(b^2, …) + Σ (-1)^i φ(…, b^i b^{i+1}, …) + (-1)^{n+1} φ(b^1, …, b^n) b^{n+1}`.
pub fn hochschild_b<F: Field>(hs: &Arc<Hochschild<F>>, phi: &Cochain<F>) -> Cochain<F> {
    let hs = hs.clone();
    let phi = phi.clone();
    let module = phi.module;
    let n = phi.degree;
    let level = phi.level.map(|l| l / 2);
    Cochain::derived(
        n + 1,
        module,
        level,
        Arc::new(move |args: &[Monomial]| {
            let ctx = hs.ctx();
            let first = NCPoly::monomial(args[0]);
            let mut out = module.left(ctx, &first, &phi.eval(&args[1..])?)?;
            out = out.add(&inner_terms(ctx, &phi, args)?);
            let last = module.right(ctx, &phi.eval(&args[..n])?, &NCPoly::monomial(args[n]))?;
            out.add_scaled(&last, &sign(n + 1));
            Ok(out)
        }),
    )
}

/// The coboundary computing `Ext_B(k, ad(M))`:
/// `(dφ)(b^1, …, b^{n+1}) = ad(b^1) φ(b^2, …) + Σ (-1)^i φ(…, b^i b^{i+1}, …) + (-1)^{n+1} φ(b^1, …, b^n) ε(b^{n+1})`.
pub fn twisted_d<F: Field>(hs: &Arc<Hochschild<F>>, phi: &Cochain<F>) -> Result<Cochain<F>> {
    if !phi.module.has_right_a_action() {
        return Err(Error::InvalidArgument(format!("ad is undefined on {}", phi.module.carrier)));
    }
    let hs = hs.clone();
    let phi = phi.clone();
    let module = phi.module;
    let n = phi.degree;
    let level = phi.level.map(|l| l / 2);
    Ok(Cochain::derived(
        n + 1,
        module,
        level,
        Arc::new(move |args: &[Monomial]| {
            let mut out = hs.ad(&module, &args[0], &phi.eval(&args[1..])?)?;
            out = out.add(&inner_terms(hs.ctx(), &phi, args)?);
            let e = counit_monomial::<F>(&args[n]);
            if !e.is_zero() {
                out.add_scaled(&phi.eval(&args[..n])?, &(sign::<F>(n + 1) * &e));
            }
            Ok(out)
        }),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiDirection {
    Forward,
    Inverse,
}

/// `ξ(φ)(b^1, …, b^n) = φ(b^1_(1), …, b^n_(1)) b^1_(2) ⋯ b^n_(2)`; the
/// inverse multiplies by `S(b^1_(2) ⋯ b^n_(2))` instead.
pub fn xi<F: Field>(hs: &Arc<Hochschild<F>>, phi: &Cochain<F>, direction: XiDirection) -> Result<Cochain<F>> {
    if !phi.module.has_right_a_action() {
        return Err(Error::InvalidArgument(format!("{} is not a right A-module", phi.module.carrier)));
    }
    let hs = hs.clone();
    let phi = phi.clone();
    let module = phi.module;
    Ok(Cochain::derived(
        phi.degree,
        module,
        phi.level,
        Arc::new(move |args: &[Monomial]| {
            let ctx = hs.ctx();
            if args.is_empty() {
                return phi.eval(args);
            }
            let legs: Vec<Legs<F>> = args.iter().map(|m| hs.legs(m)).collect::<Result<_>>()?;
            // Collect Σ φ(u^1, …, u^n) ⊗ (w^1 ⋯ w^n) grouped by the tuple u.
            let mut grouped: BTreeMap<Vec<Monomial>, NCPoly<F>> = BTreeMap::new();
            let mut stack: Vec<(Vec<Monomial>, NCPoly<F>)> = vec![(Vec::new(), NCPoly::one(AlgId::Qsl2))];
            for l in &legs {
                let mut next = Vec::with_capacity(stack.len() * l.len());
                for (us, w) in &stack {
                    for (u, w2) in l.iter() {
                        let mut us = us.clone();
                        us.push(*u);
                        next.push((us, w.mul(ctx, w2)));
                    }
                }
                stack = next;
            }
            for (us, w) in stack {
                let e = grouped.entry(us).or_insert_with(|| NCPoly::zero(AlgId::Qsl2));
                *e = e.add(&w);
            }
            let mut out = module.zero();
            for (us, w) in grouped {
                let w = match direction {
                    XiDirection::Forward => w,
                    XiDirection::Inverse => antipode(ctx, &w, 1)?,
                };
                if w.is_zero() {
                    continue;
                }
                out = out.add(&module.right_a(ctx, &phi.eval(&us)?, &w)?);
            }
            Ok(out)
        }),
    ))
}
