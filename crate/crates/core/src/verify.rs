//! The acceptance checks, one function per criterion, each producing a
//! [`CheckResult`] with machine-diffable JSON.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::context::Context;
use crate::duality::{antipode_square_check, beta_check, fridge_grid, sigma_inverse_check, transes_check};
use crate::error::Result;
use crate::hochschild::{
    character_commutes_check, h0_table, sigma_check, xi_conjugation_check, Hochschild, PodlesCharacter,
};
use crate::koszul::{
    bracket_consistency, exactness_check, ext_counit_module, koszul_d2_d1_zero, nu_closed_form_y1,
    nu_closed_form_ym, z_minus, z_plus, zeta_matrix, NuOracle, NuReducer,
};
use crate::ncalg::{normal_form, AlgId, Monomial, NCPoly, Strategy};
use crate::scalar::{Field, Q_BRACKET_RULE};

/// Outcome of one check. `elapsed_ms` is `None` when timings are disabled,
/// which makes reports byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: Value,
    pub result: Value,
    pub expected: Value,
    pub pass: bool,
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    pub fn new(check: &str, params: Value, result: impl Serialize, expected: Value, pass: bool) -> Self {
        CheckResult {
            check: check.into(),
            params,
            result: serde_json::to_value(result).unwrap_or_else(|e| json!({ "serialize_error": e.to_string() })),
            expected,
            pass,
            elapsed_ms: None,
        }
    }

    /// Runs `f` and records its wall time when `timed`.
    pub fn timed(timed: bool, f: impl FnOnce() -> Result<CheckResult>) -> Result<CheckResult> {
        let start = Instant::now();
        let mut r = f()?;
        if timed {
            r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(r)
    }
}

/// Parameters of the acceptance suite. The defaults are the smallest
/// levels at which each identity is stable, or the sizes fixed by the
/// acceptance criteria.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub timings: bool,
    pub words_per_preset: usize,
    pub word_len: usize,
    pub exactness_levels: Vec<usize>,
    pub ext_level: usize,
    pub nu_max: i32,
    pub bracket_jmax: i32,
    pub zeta_jmax: usize,
    pub h0_imax: i32,
    pub h0_jmax: i32,
    pub xi_trials: usize,
    pub character_trials: usize,
    pub cochain_level: usize,
    pub sigma_len: usize,
    pub antipode_len: usize,
    pub transes_len: usize,
    pub beta_len: usize,
    pub beta_trials: usize,
    pub fridge_level: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            timings: true,
            words_per_preset: 1000,
            word_len: 8,
            exactness_levels: vec![2, 6, 10],
            ext_level: 8,
            nu_max: 10,
            bracket_jmax: 6,
            zeta_jmax: 8,
            h0_imax: 6,
            h0_jmax: 3,
            xi_trials: 100,
            character_trials: 50,
            cochain_level: 3,
            sigma_len: 8,
            antipode_len: 5,
            transes_len: 5,
            beta_len: 5,
            beta_trials: 100,
            fridge_level: 4,
        }
    }
}

/// Criterion names, in report order.
pub const CHECKS: [&str; 11] = [
    "01_relations",
    "02_koszul_exactness",
    "03_ext_concentration",
    "04_nu_closed_forms",
    "05_zeta_injectivity",
    "06_h0_grid",
    "07_conjugation_law",
    "08_character_action",
    "09_sigma_inverse",
    "10_convolution_transes",
    "11_composition_law",
];

/// Runs one criterion by its name in [`CHECKS`].
pub fn run_check<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig, name: &str) -> Result<CheckResult> {
    CheckResult::timed(cfg.timings, || match name {
        "01_relations" => relations(ctx, cfg),
        "02_koszul_exactness" => koszul_exactness(ctx, cfg),
        "03_ext_concentration" => ext_concentration(ctx, cfg),
        "04_nu_closed_forms" => nu_closed_forms(ctx, cfg),
        "05_zeta_injectivity" => zeta_injectivity(ctx, cfg),
        "06_h0_grid" => h0_grid(ctx, cfg),
        "07_conjugation_law" => conjugation_law(ctx, cfg),
        "08_character_action" => character_action_law(ctx, cfg),
        "09_sigma_inverse" => sigma_and_inverse(ctx, cfg),
        "10_convolution_transes" => convolution_transes(ctx, cfg),
        "11_composition_law" => composition_law(ctx, cfg),
        other => Err(crate::Error::InvalidArgument(format!("unknown check `{other}`"))),
    })
}

/// All criteria, run concurrently and reported in [`CHECKS`] order.
pub fn run_all<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let results: Vec<Result<CheckResult>> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS.iter().map(|name| s.spawn(move || run_check(ctx, cfg, name))).collect();
        handles.into_iter().map(|h| h.join().expect("check worker panicked")).collect()
    });
    results.into_iter().collect()
}

#[derive(Debug, Serialize)]
struct WordsReport {
    preset: String,
    words: usize,
    disagreements: Vec<String>,
}

/// Criterion 1: random words reduce to the same normal form under both
/// redex strategies, and `z_{-1} z_1 = q^2 z_1 z_{-1}`.
pub fn relations<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reports = Vec::new();
    for alg in AlgId::ALL {
        let n = alg.generators().len() as u8;
        let mut disagreements = Vec::new();
        for _ in 0..cfg.words_per_preset {
            let len = rng.gen_range(0..=cfg.word_len);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let l = normal_form(ctx, alg, [(w.clone(), F::one())], Strategy::Leftmost)?;
            let r = normal_form(ctx, alg, [(w.clone(), F::one())], Strategy::Rightmost)?;
            if l != r {
                let names: Vec<&str> = w.iter().map(|k| alg.generators()[*k as usize]).collect();
                disagreements.push(names.join("*"));
            }
        }
        reports.push(WordsReport { preset: alg.name().into(), words: cfg.words_per_preset, disagreements });
    }
    let (zp, zm) = (z_plus(ctx), z_minus(ctx));
    let rel = zm.mul(ctx, &zp).sub(&zp.mul(ctx, &zm).scale(&ctx.qp(2)));
    let pass = rel.is_zero() && reports.iter().all(|r| r.disagreements.is_empty());
    Ok(CheckResult::new(
        "01_relations",
        json!({ "seed": cfg.seed, "words_per_preset": cfg.words_per_preset, "max_word_len": cfg.word_len }),
        json!({ "presets": reports, "z-1*z1 - q^2*z1*z-1": rel.to_string() }),
        json!({ "disagreements": 0, "z-1*z1 - q^2*z1*z-1": "0" }),
        pass,
    ))
}

/// Criterion 2: `d_1 ∘ d_2 = 0` and vanishing truncated homology.
pub fn koszul_exactness<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let top = cfg.exactness_levels.iter().copied().max().unwrap_or(2);
    let d = koszul_d2_d1_zero(ctx, top);
    let reports = cfg.exactness_levels.iter().map(|&n| exactness_check(ctx, n)).collect::<Result<Vec<_>>>()?;
    let pass = d.pass() && reports.iter().all(|r| r.pass());
    Ok(CheckResult::new(
        "02_koszul_exactness",
        json!({ "levels": cfg.exactness_levels }),
        json!({ "d1_d2": d, "homology": reports }),
        json!({ "d1_d2_failures": 0, "h1_defect": 0, "h2_defect": 0 }),
        pass,
    ))
}

/// Criterion 3: `Ext_B(k, B)` is concentrated in degree 2 with character `ε`.
pub fn ext_concentration<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let r = ext_counit_module(ctx, cfg.ext_level)?;
    let pass = r.pass();
    Ok(CheckResult::new(
        "03_ext_concentration",
        json!({ "N": cfg.ext_level }),
        &r,
        json!({ "dims": [0, 0, 1], "character": { "y-1": "0", "y0": "0", "y1": "0" } }),
        pass,
    ))
}

/// Criterion 4: closed forms for `ν`, agreement of the truncated reducer
/// with the rewriting oracle, and uniqueness of the bracket rule.
pub fn nu_closed_forms<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let nmax = cfg.nu_max;
    let reducer = NuReducer::new(ctx, nmax as usize);
    let mut oracle = NuOracle::new(ctx);
    let mut ym_failures = Vec::new();
    let mut oracle_failures = Vec::new();
    let mut y1_failures = Vec::new();
    let mut checked = 0usize;
    for i in 0..=nmax {
        for j in -(nmax - i)..=(nmax - i) {
            let m = Monomial::podles(i, j);
            let reduced = reducer.reduce(&NCPoly::monomial(m))?;
            checked += 1;
            if reduced != oracle.reduce_monomial(i, j) {
                oracle_failures.push(m.to_string());
            }
            if j < 0 && reduced != nu_closed_form_ym(ctx, i, -j) {
                ym_failures.push(m.to_string());
            }
            if i >= 1 && j >= 0 && reduced != nu_closed_form_y1(ctx, i, j, Q_BRACKET_RULE, true)? {
                y1_failures.push(m.to_string());
            }
        }
    }
    let bracket = bracket_consistency(ctx, 4, cfg.bracket_jmax)?;
    let pass = ym_failures.is_empty() && oracle_failures.is_empty() && y1_failures.is_empty() && bracket.pass();
    Ok(CheckResult::new(
        "04_nu_closed_forms",
        json!({ "max_i_plus_abs_j": nmax, "bracket_imax": 4, "bracket_jmax": cfg.bracket_jmax }),
        json!({
            "checked": checked,
            "y-1_closed_form_failures": ym_failures,
            "oracle_failures": oracle_failures,
            "y1_closed_form_failures": y1_failures,
            "bracket": bracket,
        }),
        json!({ "failures": 0, "consistent_bracket_rules": [format!("{Q_BRACKET_RULE:?}")] }),
        pass,
    ))
}

#[derive(Debug, Serialize)]
struct ZetaSummary {
    j: usize,
    full_column_rank: bool,
    pattern_matches: bool,
    determinant_matches: bool,
    y0_diagonal: Vec<String>,
    y0_subdiagonal: Vec<String>,
    composite_determinant: String,
    expected_determinant: String,
}

/// Criterion 5: `ζ` has full column rank on every `V_j`, with the
/// displayed entry pattern (diagonal `q`, subdiagonal `2`) and composite
/// determinant `2^j`.
pub fn zeta_injectivity<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let mut rows = Vec::new();
    for j in 0..=cfg.zeta_jmax {
        let r = zeta_matrix(ctx, j)?;
        rows.push(ZetaSummary {
            j,
            full_column_rank: r.full_column_rank,
            pattern_matches: r.pattern_matches(),
            determinant_matches: r.determinant_matches(),
            y0_diagonal: r.y0_diagonal.iter().map(|c| c.to_string()).collect(),
            y0_subdiagonal: r.y0_subdiagonal.iter().map(|c| c.to_string()).collect(),
            composite_determinant: r.composite_determinant.to_string(),
            expected_determinant: r.expected_determinant.to_string(),
        });
    }
    let rank = rows.iter().all(|r| r.full_column_rank);
    let pattern = rows.iter().all(|r| r.pattern_matches);
    let det = rows.iter().all(|r| r.determinant_matches);
    Ok(CheckResult::new(
        "05_zeta_injectivity",
        json!({ "jmax": cfg.zeta_jmax }),
        json!({ "full_column_rank": rank, "pattern_matches": pattern, "determinant_matches": det, "blocks": rows }),
        json!({ "full_column_rank": true, "pattern_matches": true, "determinant_matches": true }),
        rank && pattern && det,
    ))
}

/// Criterion 6: the twisted centre on `|i| <= imax`, `0 <= j <= jmax`.
pub fn h0_grid<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let cells = h0_table(ctx, cfg.h0_imax, cfg.h0_jmax, None)?;
    let mismatches: Vec<(i32, i32)> = cells.iter().filter(|c| !(c.matches && c.in_a0)).map(|c| (c.i, c.j)).collect();
    let slice: Vec<i32> = cells.iter().filter(|c| c.j == 0 && c.dim > 0).map(|c| c.i).collect();
    let pass = mismatches.is_empty() && slice == [0];
    Ok(CheckResult::new(
        "06_h0_grid",
        json!({ "imax": cfg.h0_imax, "jmax": cfg.h0_jmax, "level": "2|j| + |i| + 2 per cell" }),
        json!({ "mismatches": mismatches, "j0_nonzero_at": slice, "cells": cells }),
        json!({ "mismatches": [], "j0_nonzero_at": [0], "cell": "b^m c^n with m - n = i, m + n = 2j, else 0" }),
        pass,
    ))
}

/// Criterion 7: `b ∘ ξ = ξ ∘ d` on random cochains.
pub fn conjugation_law<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let hs = Hochschild::new(ctx.clone());
    let r = xi_conjugation_check(&hs, cfg.xi_trials, cfg.seed, cfg.cochain_level)?;
    let pass = r.pass() && r.nontrivial > 0;
    Ok(CheckResult::new(
        "07_conjugation_law",
        json!({ "trials": cfg.xi_trials, "seed": cfg.seed, "level": cfg.cochain_level, "carrier": "B⊗A" }),
        &r,
        json!({ "failures": [] }),
        pass,
    ))
}

/// Criterion 8: `b(Xφ) = X(bφ)` for random characters and cochains.
pub fn character_action_law<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let hs = Hochschild::new(ctx.clone());
    let r = character_commutes_check(&hs, cfg.character_trials, cfg.seed, cfg.cochain_level)?;
    let pass = r.pass() && r.nontrivial > 0;
    Ok(CheckResult::new(
        "08_character_action",
        json!({ "trials": cfg.character_trials, "seed": cfg.seed, "level": cfg.cochain_level }),
        &r,
        json!({ "failures": [] }),
        pass,
    ))
}

/// Criterion 9: scaling of `σ`, its relations, its left inverse and
/// `S^{±2}(B) ⊆ B`.
pub fn sigma_and_inverse<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let sigma = sigma_check(ctx, cfg.sigma_len)?;
    let inverse = sigma_inverse_check(ctx, cfg.sigma_len)?;
    let antipode = antipode_square_check(ctx, cfg.antipode_len)?;
    let pass = sigma.pass() && inverse.pass() && antipode.pass();
    Ok(CheckResult::new(
        "09_sigma_inverse",
        json!({ "sigma_len": cfg.sigma_len, "antipode_len": cfg.antipode_len }),
        json!({ "sigma": sigma, "inverse": inverse, "antipode_square": antipode }),
        json!({ "failures": 0 }),
        pass,
    ))
}

/// Criterion 10: `χγ = ε` on the sphere and the projection `β`.
pub fn convolution_transes<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let transes = transes_check(ctx, &PodlesCharacter::counit(), cfg.transes_len)?;
    let beta = beta_check(ctx, cfg.beta_len, cfg.beta_trials, cfg.seed)?;
    let pass = transes.pass() && beta.pass();
    Ok(CheckResult::new(
        "10_convolution_transes",
        json!({ "transes_len": cfg.transes_len, "beta_len": cfg.beta_len, "beta_trials": cfg.beta_trials, "seed": cfg.seed }),
        json!({ "transes": transes, "beta": beta }),
        json!({ "failures": 0 }),
        pass,
    ))
}

/// Criterion 11: products of `ω`-basis elements land in the right piece.
pub fn composition_law<F: Field>(ctx: &Context<F>, cfg: &VerifyConfig) -> Result<CheckResult> {
    let grid = fridge_grid(ctx, cfg.fridge_level)?;
    let failures: usize = grid.iter().map(|c| c.membership_failures.len()).sum();
    let defect: usize = grid.iter().map(|c| c.spanning_defect).sum();
    Ok(CheckResult::new(
        "11_composition_law",
        json!({ "level": cfg.fridge_level, "labels": "{-1,0,1} x {0,1}" }),
        json!({ "membership_failures": failures, "total_spanning_defect": defect, "cells": grid }),
        json!({ "membership_failures": 0 }),
        failures == 0,
    ))
}
