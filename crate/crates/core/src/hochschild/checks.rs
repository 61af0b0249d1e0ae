use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::character::{character_action, CharacterFunctional};
use super::cochain::{hochschild_b, twisted_d, xi, Cochain, Hochschild, XiDirection};
use super::module::BimoduleDesc;
use crate::error::Result;
use crate::hopf::Tensor;
use crate::ncalg::{filtration_basis, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// Small random coefficient: `±k q^e`.
fn random_coeff<F: Field>(rng: &mut ChaCha8Rng, hs: &Hochschild<F>) -> F {
    let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    F::from_i64(k) * hs.ctx().qp(rng.gen_range(-2..=2))
}

/// Random element of the carrier with up to three terms of length `<= 1`
/// per leg.
pub fn random_element<F: Field>(rng: &mut ChaCha8Rng, hs: &Hochschild<F>, module: &BimoduleDesc) -> Tensor<F> {
    let basis = module.basis(1);
    let mut v = module.zero();
    if basis.is_empty() {
        return v;
    }
    for _ in 0..rng.gen_range(1..=3) {
        v.add_term(basis.choose(rng).expect("nonempty").clone(), random_coeff(rng, hs));
    }
    v
}

/// Random tabulated cochain of the given degree: dense on tuples of
/// monomials of length `<= 1`, plus a few values on tuples of length
/// `<= 2` entries, declared at filtration `level`.
pub fn random_cochain<F: Field>(
    rng: &mut ChaCha8Rng,
    hs: &Hochschild<F>,
    module: BimoduleDesc,
    degree: usize,
    level: usize,
) -> Result<Cochain<F>> {
    let short = filtration_basis(AlgId::Podles, 1);
    let long = filtration_basis(AlgId::Podles, level.min(2));
    let mut tuples: Vec<Vec<Monomial>> = vec![Vec::new()];
    for _ in 0..degree {
        tuples = tuples.into_iter().flat_map(|t| short.iter().map(move |m| [t.clone(), vec![*m]].concat())).collect();
    }
    let mut table = BTreeMap::new();
    for t in tuples {
        if rng.gen_bool(0.7) {
            table.insert(t, random_element(rng, hs, &module));
        }
    }
    for _ in 0..3 {
        let t: Vec<Monomial> = (0..degree).map(|_| *long.choose(rng).expect("nonempty")).collect();
        table.insert(t, random_element(rng, hs, &module));
    }
    Cochain::from_table(module, degree, level, table)
}

fn random_args(rng: &mut ChaCha8Rng, n: usize) -> Vec<Monomial> {
    let short = filtration_basis(AlgId::Podles, 1);
    (0..n).map(|_| *short.choose(rng).expect("nonempty")).collect()
}

/// Outcome of a randomized identity check.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub trials: usize,
    pub seed: u64,
    /// Evaluations with a nonzero left-hand side.
    pub nontrivial: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn compare<F: Field>(
    report: &mut IdentityReport,
    lhs: &Cochain<F>,
    rhs: &Cochain<F>,
    args: &[Monomial],
) -> Result<()> {
    let l = lhs.eval(args)?;
    let r = rhs.eval(args)?;
    if !l.is_zero() {
        report.nontrivial += 1;
    }
    if l != r {
        let a: Vec<String> = args.iter().map(|m| m.to_string()).collect();
        report.failures.push(format!("({}): {} != {}", a.join(", "), l, r));
    }
    Ok(())
}

fn report(identity: &str, trials: usize, seed: u64) -> IdentityReport {
    IdentityReport { identity: identity.into(), trials, seed, nontrivial: 0, failures: Vec::new() }
}

/// `b ∘ ξ = ξ ∘ d` on random cochains with values in `B ⊗ A`, degrees
/// cycling through `0, 1, 2`, declared at filtration `level`.
pub fn xi_conjugation_check<F: Field>(
    hs: &Arc<Hochschild<F>>,
    trials: usize,
    seed: u64,
    level: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = report("b∘ξ = ξ∘d", trials, seed);
    for t in 0..trials {
        let phi = random_cochain(&mut rng, hs, BimoduleDesc::ba(), t % 3, level)?;
        let lhs = hochschild_b(hs, &xi(hs, &phi, XiDirection::Forward)?);
        let rhs = xi(hs, &twisted_d(hs, &phi)?, XiDirection::Forward)?;
        compare(&mut rep, &lhs, &rhs, &random_args(&mut rng, phi.degree() + 1))?;
    }
    Ok(rep)
}

/// `ξ^{-1} ∘ ξ = id` and `ξ ∘ ξ^{-1} = id`.
pub fn xi_inverse_check<F: Field>(
    hs: &Arc<Hochschild<F>>,
    trials: usize,
    seed: u64,
    level: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = report("ξ^-1∘ξ = ξ∘ξ^-1 = id", trials, seed);
    for t in 0..trials {
        let phi = random_cochain(&mut rng, hs, BimoduleDesc::ba(), t % 3, level)?;
        let fwd = xi(hs, &phi, XiDirection::Forward)?;
        let inv = xi(hs, &phi, XiDirection::Inverse)?;
        let args = random_args(&mut rng, phi.degree());
        compare(&mut rep, &xi(hs, &fwd, XiDirection::Inverse)?, &phi, &args)?;
        compare(&mut rep, &xi(hs, &inv, XiDirection::Forward)?, &phi, &args)?;
    }
    Ok(rep)
}

/// `b ∘ b = 0` and `d ∘ d = 0` on random cochains of degree `<= 1` with
/// values in `B ⊗ A`.
pub fn square_zero_check<F: Field>(
    hs: &Arc<Hochschild<F>>,
    trials: usize,
    seed: u64,
    level: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = report("b∘b = 0, d∘d = 0", trials, seed);
    for t in 0..trials {
        let phi = random_cochain(&mut rng, hs, BimoduleDesc::ba(), t % 2, level)?;
        let args = random_args(&mut rng, phi.degree() + 2);
        if !phi.eval(&args[..phi.degree()])?.is_zero() {
            rep.nontrivial += 1;
        }
        let bb = hochschild_b(hs, &hochschild_b(hs, &phi)).eval(&args)?;
        let dd = twisted_d(hs, &twisted_d(hs, &phi)?)?.eval(&args)?;
        for (name, v) in [("bb", bb), ("dd", dd)] {
            if !v.is_zero() {
                let a: Vec<String> = args.iter().map(|m| m.to_string()).collect();
                rep.failures.push(format!("{name}({}) = {v}", a.join(", ")));
            }
        }
    }
    Ok(rep)
}

/// Random nonzero character parameter `±k q^e` or `k / 2`.
fn random_parameter<F: Field>(rng: &mut ChaCha8Rng, hs: &Hochschild<F>) -> F {
    if rng.gen_bool(0.5) {
        random_coeff(rng, hs)
    } else {
        F::from_i64(rng.gen_range(1..=5)) * F::from_i64(2).try_inv().expect("2 is invertible")
    }
}

/// `b(Xφ) = X(bφ)` for random characters `X_t` and cochains of degree
/// `<= 1`.
pub fn character_commutes_check<F: Field>(
    hs: &Arc<Hochschild<F>>,
    trials: usize,
    seed: u64,
    level: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = report("b(Xφ) = X(bφ)", trials, seed);
    for t in 0..trials {
        let x = CharacterFunctional::new(random_parameter(&mut rng, hs))?;
        let phi = random_cochain(&mut rng, hs, BimoduleDesc::ba(), t % 2, level)?;
        let lhs = hochschild_b(hs, &character_action(hs, &x, &phi)?);
        let rhs = character_action(hs, &x, &hochschild_b(hs, &phi))?;
        compare(&mut rep, &lhs, &rhs, &random_args(&mut rng, phi.degree() + 1))?;
    }
    Ok(rep)
}

/// `(XY)φ = X(Yφ)` and `εφ = φ` for random characters.
pub fn character_action_law_check<F: Field>(
    hs: &Arc<Hochschild<F>>,
    trials: usize,
    seed: u64,
    level: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = report("(XY)φ = X(Yφ), εφ = φ", trials, seed);
    for t in 0..trials {
        let x = CharacterFunctional::new(random_parameter(&mut rng, hs))?;
        let y = CharacterFunctional::new(random_parameter(&mut rng, hs))?;
        let phi = random_cochain(&mut rng, hs, BimoduleDesc::ba(), t % 3, level)?;
        let args = random_args(&mut rng, phi.degree());
        let xy = character_action(hs, &x.convolve(&y), &phi)?;
        let x_y = character_action(hs, &x, &character_action(hs, &y, &phi)?)?;
        compare(&mut rep, &xy, &x_y, &args)?;
        compare(&mut rep, &character_action(hs, &CharacterFunctional::counit(), &phi)?, &phi, &args)?;
    }
    Ok(rep)
}

/// Random element of the sphere, for callers that need Podles arguments.
pub fn random_podles<F: Field>(rng: &mut ChaCha8Rng, hs: &Hochschild<F>, max_len: usize) -> NCPoly<F> {
    let basis = filtration_basis(AlgId::Podles, max_len);
    let mut p = NCPoly::zero(AlgId::Podles);
    for _ in 0..rng.gen_range(1..=3) {
        p.add_term(*basis.choose(rng).expect("nonempty"), random_coeff(rng, hs));
    }
    p
}
