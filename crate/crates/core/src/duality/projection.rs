use std::collections::HashMap;
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::functional::{convolution, Functional};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::hochschild::{h0_cell, sigma_in_qsl2, H0Cell, PodlesCharacter};
use crate::hopf::{antipode, coideal_membership, coproduct, counit_monomial};
use crate::ncalg::{embed_podles, express_in_podles, filtration_basis, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// `β(a) = h(π(a_(1))) a_(2)` with the Haar functional `h(z^k) = δ_{k0}`
/// on Laurent polynomials; the result lies in the sphere.
pub fn beta_projection<F: Field>(ctx: &Context<F>, x: &NCPoly<F>) -> Result<NCPoly<F>> {
    if x.alg() != AlgId::Qsl2 {
        return Err(Error::AlgebraMismatch { left: x.alg(), right: AlgId::Qsl2 });
    }
    let one = Monomial::one(AlgId::Qsl2);
    // π(f_{lmn}) = δ_{m0} δ_{n0} z^l, so only the first leg 1 survives h ∘ π
    let w = coproduct(ctx, x)?
        .by_left()
        .into_iter()
        .find(|(u, _)| *u == one)
        .map(|(_, w)| w)
        .unwrap_or_else(|| NCPoly::zero(AlgId::Qsl2));
    express_in_podles(ctx, &w).map_err(|_| Error::Internal(format!("β({x}) = {w} is not in the sphere")))
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaReport {
    pub max_len: usize,
    pub checked: usize,
    /// `β(b) != b` for `b` in the sphere.
    pub identity_failures: Vec<String>,
    /// `β(β(x)) != β(x)`.
    pub idempotence_failures: Vec<String>,
    /// `β(x)` outside the right coideal.
    pub coideal_failures: Vec<String>,
    pub linearity_trials: usize,
    /// `β(x b) != β(x) b`.
    pub linearity_failures: Vec<String>,
}

impl BetaReport {
    pub fn pass(&self) -> bool {
        self.identity_failures.is_empty()
            && self.idempotence_failures.is_empty()
            && self.coideal_failures.is_empty()
            && self.linearity_failures.is_empty()
    }
}

fn random_poly<F: Field>(rng: &mut ChaCha8Rng, ctx: &Context<F>, alg: AlgId, max_len: usize) -> NCPoly<F> {
    let basis = filtration_basis(alg, max_len);
    let mut p = NCPoly::zero(alg);
    for _ in 0..rng.gen_range(1..=3) {
        let c = F::from_i64(rng.gen_range(1..=3)) * ctx.qp(rng.gen_range(-2..=2));
        p.add_term(*basis.choose(rng).expect("nonempty"), c);
    }
    p
}

/// `β` restricted to the sphere, idempotence and coideal membership on
/// all basis monomials of length `<= max_len`; right `B`-linearity on
/// random pairs.
pub fn beta_check<F: Field>(ctx: &Context<F>, max_len: usize, trials: usize, seed: u64) -> Result<BetaReport> {
    let mut identity_failures = Vec::new();
    for e in filtration_basis(AlgId::Podles, max_len) {
        let b = NCPoly::monomial(e);
        if beta_projection(ctx, &embed_podles(ctx, &b)?)? != b {
            identity_failures.push(e.to_string());
        }
    }
    let mut idempotence_failures = Vec::new();
    let mut coideal_failures = Vec::new();
    let qbasis = filtration_basis(AlgId::Qsl2, max_len);
    for f in &qbasis {
        let once = embed_podles(ctx, &beta_projection(ctx, &NCPoly::monomial(*f))?)?;
        if !coideal_membership(ctx, &once)? {
            coideal_failures.push(f.to_string());
        }
        if embed_podles(ctx, &beta_projection(ctx, &once)?)? != once {
            idempotence_failures.push(f.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut linearity_failures = Vec::new();
    for _ in 0..trials {
        let x = random_poly(&mut rng, ctx, AlgId::Qsl2, 3);
        let b = random_poly(&mut rng, ctx, AlgId::Podles, 2);
        let lhs = beta_projection(ctx, &x.mul(ctx, &embed_podles(ctx, &b)?))?;
        let rhs = beta_projection(ctx, &x)?.mul(ctx, &b);
        if lhs != rhs {
            linearity_failures.push(format!("x = {x}, b = {b}"));
        }
    }
    Ok(BetaReport {
        max_len,
        checked: qbasis.len(),
        identity_failures,
        idempotence_failures,
        coideal_failures,
        linearity_trials: trials,
        linearity_failures,
    })
}

/// `γ(a) = χ(β(S^{-1}(a)))`, memoised per monomial.
pub fn gamma_functional<F: Field>(chi: &PodlesCharacter<F>) -> Functional<F> {
    let chi = chi.clone();
    let memo: Mutex<HashMap<Monomial, F>> = Mutex::new(HashMap::new());
    Functional::new(AlgId::Qsl2, "γ", move |ctx, m| {
        if let Some(v) = memo.lock().expect("γ memo").get(m) {
            return Ok(v.clone());
        }
        let s = antipode(ctx, &NCPoly::monomial(*m), -1)?;
        let v = chi.eval(&beta_projection(ctx, &s)?)?;
        memo.lock().expect("γ memo").insert(*m, v.clone());
        Ok(v)
    })
    .expect("valid domain")
}

#[derive(Debug, Clone, Serialize)]
pub struct TransesReport {
    pub max_len: usize,
    pub checked: usize,
    /// Monomials `b` with `(χγ)(b) != ε(b)`.
    pub failures: Vec<String>,
}

impl TransesReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `(χγ)(b) = ε(b)` on the Podles basis of length `<= max_len`.
pub fn transes_check<F: Field>(ctx: &Context<F>, chi: &PodlesCharacter<F>, max_len: usize) -> Result<TransesReport> {
    let prod = convolution(&Functional::podles_character(chi), &gamma_functional(chi))?;
    let basis = filtration_basis(AlgId::Podles, max_len);
    let mut failures = Vec::new();
    for b in &basis {
        let got = prod.eval_monomial(ctx, b)?;
        if got != counit_monomial(b) {
            failures.push(format!("{b}: {got}"));
        }
    }
    Ok(TransesReport { max_len, checked: basis.len(), failures })
}

/// `σ^{-1}(a) = γ(S^{-2}(a_(1))) S^{-2}(a_(2))`, the left inverse of `σ`.
pub fn sigma_inverse<F: Field>(ctx: &Context<F>, a: &NCPoly<F>, gamma: &Functional<F>) -> Result<NCPoly<F>> {
    let mut out = NCPoly::zero(AlgId::Qsl2);
    for (u, w) in coproduct(ctx, a)?.by_left() {
        let c = gamma.apply(ctx, &antipode(ctx, &NCPoly::monomial(u), -2)?)?;
        if !c.is_zero() {
            out.add_scaled(&antipode(ctx, &w, -2)?, &c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaInverseReport {
    pub max_len: usize,
    pub checked: usize,
    /// `σ^{-1}(σ(b)) != b`.
    pub roundtrip_failures: Vec<String>,
    /// `σ(e_{ij}) != q^{-2j} e_{ij}`.
    pub scaling_failures: Vec<String>,
}

impl SigmaInverseReport {
    pub fn pass(&self) -> bool {
        self.roundtrip_failures.is_empty() && self.scaling_failures.is_empty()
    }
}

/// Round trip `σ^{-1} ∘ σ = id` and the scaling of basis rays, for `χ = ε`.
pub fn sigma_inverse_check<F: Field>(ctx: &Context<F>, max_len: usize) -> Result<SigmaInverseReport> {
    let chi = PodlesCharacter::counit();
    let gamma = gamma_functional(&chi);
    let basis = filtration_basis(AlgId::Podles, max_len);
    let mut roundtrip_failures = Vec::new();
    let mut scaling_failures = Vec::new();
    for e in &basis {
        let b = embed_podles(ctx, &NCPoly::monomial(*e))?;
        let s = sigma_in_qsl2(ctx, &NCPoly::monomial(*e), &chi)?;
        if s != b.scale(&ctx.qp(-2 * e.podles_indices().1 as i64)) {
            scaling_failures.push(e.to_string());
        }
        if sigma_inverse(ctx, &s, &gamma)? != b {
            roundtrip_failures.push(e.to_string());
        }
    }
    Ok(SigmaInverseReport { max_len, checked: basis.len(), roundtrip_failures, scaling_failures })
}

#[derive(Debug, Clone, Serialize)]
pub struct AntipodeSquareReport {
    pub max_len: usize,
    pub checked: usize,
    /// `(power, monomial)` with `S^{power}(b)` outside the sphere.
    pub failures: Vec<String>,
}

impl AntipodeSquareReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `S^2(B) ⊆ B` and `S^{-2}(B) ⊆ B` on the basis of length `<= max_len`.
pub fn antipode_square_check<F: Field>(ctx: &Context<F>, max_len: usize) -> Result<AntipodeSquareReport> {
    let basis = filtration_basis(AlgId::Podles, max_len);
    let mut failures = Vec::new();
    for e in &basis {
        let b = embed_podles(ctx, &NCPoly::monomial(*e))?;
        for power in [2, -2] {
            if !coideal_membership(ctx, &antipode(ctx, &b, power)?)? {
                failures.push(format!("S^{power}({e})"));
            }
        }
    }
    Ok(AntipodeSquareReport { max_len, checked: basis.len(), failures })
}

/// `H^0(B, ω_{-n,0})` for `|n| <= nmax`: one-dimensional exactly at `n = 0`.
pub fn untwisted_slice<F: Field>(ctx: &Context<F>, nmax: i32) -> Result<Vec<H0Cell>> {
    (-nmax..=nmax).map(|n| h0_cell(ctx, -n, 0, None)).collect()
}
