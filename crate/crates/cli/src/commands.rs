use qsphere::duality::{
    beta_check, beta_projection, omega_basis, omega_membership, sigma_inverse_check, transes_check,
};
use qsphere::hochschild::{
    h0_table, sigma_check, sigma_map, square_zero_check, xi_conjugation_check, xi_inverse_check, Hochschild,
    PodlesCharacter,
};
use qsphere::hopf::{antipode, coideal_membership, coproduct, podles_coproduct, project_pi};
use qsphere::ncalg::{embed_podles, parse_poly, AlgId, NCPoly};
use qsphere::scalar::parse_scalar;
use qsphere::verify::{self, CheckResult, VerifyConfig, CHECKS};
use qsphere::{Context, Error, Field, Result};
use serde_json::{json, Value};

use crate::output::Format;
use crate::{Algebra, Cli, Command};

/// What a subcommand produced: one or more check results plus, for
/// queries, a plain rendering used by the text format.
#[derive(Debug)]
pub struct Report {
    pub results: Vec<CheckResult>,
    /// Emit a JSON array even for a single result.
    pub list: bool,
    pub text: Option<String>,
    pub default_format: Format,
}

impl Report {
    fn check(r: CheckResult) -> Self {
        Report { results: vec![r], list: false, text: None, default_format: Format::Json }
    }

    fn query(r: CheckResult, text: String) -> Self {
        Report { results: vec![r], list: false, text: Some(text), default_format: Format::Text }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

fn alg_id(a: Algebra) -> AlgId {
    match a {
        Algebra::Qsl2 => AlgId::Qsl2,
        Algebra::Podles => AlgId::Podles,
        Algebra::Laurent => AlgId::Laurent,
        Algebra::Smash => AlgId::SmashZ2,
    }
}

fn timed(cli: &Cli, f: impl FnOnce() -> Result<CheckResult>) -> Result<CheckResult> {
    CheckResult::timed(!cli.no_timings, f)
}

fn config(cli: &Cli) -> VerifyConfig {
    VerifyConfig { seed: cli.seed, timings: !cli.no_timings, ..VerifyConfig::default() }
}

/// A query never fails as a check; its answer is the result.
fn answer(name: &str, params: Value, result: Value) -> CheckResult {
    CheckResult::new(name, params, result, Value::Null, true)
}

/// Runs the subcommand in `cli`; `mode` is recorded in every report's
/// parameters.
pub fn run<F: Field>(ctx: &Context<F>, cli: &Cli, mode: &str) -> Result<Report> {
    let mut report = match &cli.command {
        Command::Nf { algebra, expr } => {
            let p = parse_poly(ctx, alg_id(*algebra), expr)?;
            let r = answer("nf", json!({ "algebra": alg_id(*algebra).name(), "expr": expr }), json!(p.to_string()));
            Report::query(r, p.to_string())
        }
        Command::Delta { algebra, expr } => {
            let alg = alg_id(*algebra);
            let p = parse_poly(ctx, alg, expr)?;
            let t = if alg == AlgId::Podles { podles_coproduct(ctx, &p)? } else { coproduct(ctx, &p)? };
            let lines = t.to_lines();
            let r = answer("delta", json!({ "algebra": alg.name(), "expr": expr }), json!(lines));
            Report::query(r, lines.join("\n"))
        }
        Command::Antipode { algebra, power, expr } => {
            let alg = alg_id(*algebra);
            let p = parse_poly(ctx, alg, expr)?;
            let s = antipode(ctx, &p, *power)?;
            let r = answer(
                "antipode",
                json!({ "algebra": alg.name(), "power": power, "expr": expr }),
                json!(s.to_string()),
            );
            Report::query(r, s.to_string())
        }
        Command::Pi { expr } => {
            let p = project_pi(&parse_poly(ctx, AlgId::Qsl2, expr)?)?;
            Report::query(answer("pi", json!({ "expr": expr }), json!(p.to_string())), p.to_string())
        }
        Command::Member { algebra, expr } => {
            let alg = alg_id(*algebra);
            let p = parse_poly(ctx, alg, expr)?;
            let p = if alg == AlgId::Podles { embed_podles(ctx, &p)? } else { p };
            let member = coideal_membership(ctx, &p)?;
            let r = answer("member", json!({ "algebra": alg.name(), "expr": expr }), json!({ "member": member }));
            Report::query(r, member.to_string())
        }
        Command::KoszulVerify { n } => {
            let cfg = VerifyConfig { exactness_levels: vec![*n], ..config(cli) };
            Report::check(rename(timed(cli, || verify::koszul_exactness(ctx, &cfg))?, "koszul-verify"))
        }
        Command::Ext { n } => {
            let cfg = VerifyConfig { ext_level: *n, ..config(cli) };
            Report::check(rename(timed(cli, || verify::ext_concentration(ctx, &cfg))?, "ext"))
        }
        Command::Zeta { jmax } => {
            let cfg = VerifyConfig { zeta_jmax: *jmax, ..config(cli) };
            Report::check(rename(timed(cli, || verify::zeta_injectivity(ctx, &cfg))?, "zeta"))
        }
        Command::H0Table { imax, jmax, n } => {
            let mut text = String::new();
            let r = timed(cli, || {
                let cells = h0_table(ctx, *imax, *jmax, *n)?;
                for c in &cells {
                    let basis = if c.basis.is_empty() { "0".to_string() } else { c.basis.join(", ") };
                    text.push_str(&format!("i={:>3} j={:>2} N={:>2}  {basis}\n", c.i, c.j, c.level));
                }
                let pass = cells.iter().all(|c| c.matches && c.in_a0);
                Ok(CheckResult::new(
                    "h0-table",
                    json!({ "imax": imax, "jmax": jmax, "N": n }),
                    &cells,
                    json!({ "cell": "b^m c^n with m - n = i, m + n = 2j, else 0" }),
                    pass,
                ))
            })?;
            Report { text: Some(text), ..Report::check(r) }
        }
        Command::XiCheck { trials, n } => {
            let hs = Hochschild::new(ctx.clone());
            let r = timed(cli, || {
                let reports = [
                    xi_conjugation_check(&hs, *trials, cli.seed, *n)?,
                    xi_inverse_check(&hs, *trials, cli.seed, *n)?,
                    square_zero_check(&hs, *trials, cli.seed, *n)?,
                ];
                let pass = reports.iter().all(|r| r.pass() && r.nontrivial > 0);
                Ok(CheckResult::new(
                    "xi-check",
                    json!({ "trials": trials, "seed": cli.seed, "level": n, "carrier": "B⊗A" }),
                    &reports,
                    json!({ "failures": [] }),
                    pass,
                ))
            })?;
            Report::check(r)
        }
        Command::Sigma { apply: Some(expr), .. } => {
            let p = parse_poly(ctx, AlgId::Podles, expr)?;
            let s = sigma_map(ctx, &p, &PodlesCharacter::counit())?;
            let r = answer("sigma", json!({ "apply": expr, "chi": "ε" }), json!(s.to_string()));
            Report::query(r, s.to_string())
        }
        Command::Sigma { apply: None, n } => {
            let r = timed(cli, || {
                let s = sigma_check(ctx, *n)?;
                let pass = s.pass();
                Ok(CheckResult::new("sigma", json!({ "N": n }), &s, json!({ "failures": 0 }), pass))
            })?;
            Report::check(r)
        }
        Command::OmegaBasis { n, m, level } => {
            let basis = omega_basis(*n, *m, *level);
            let mut failures = Vec::new();
            for f in &basis {
                if !omega_membership(ctx, &NCPoly::monomial(*f), *n, *m)? {
                    failures.push(f.to_string());
                }
            }
            let names: Vec<String> = basis.iter().map(|f| f.to_string()).collect();
            let r = CheckResult::new(
                "omega-basis",
                json!({ "n": n, "m": m, "N": level }),
                json!({ "count": names.len(), "basis": names, "membership_failures": failures }),
                json!({ "membership_failures": [] }),
                failures.is_empty(),
            );
            Report::query(r, names.join("\n"))
        }
        Command::FridgeCheck { n } => {
            let cfg = VerifyConfig { fridge_level: *n, ..config(cli) };
            Report::check(rename(timed(cli, || verify::composition_law(ctx, &cfg))?, "fridge-check"))
        }
        Command::Beta { apply: Some(expr), .. } => {
            let p = parse_poly(ctx, AlgId::Qsl2, expr)?;
            let b = beta_projection(ctx, &p)?;
            Report::query(answer("beta", json!({ "apply": expr }), json!(b.to_string())), b.to_string())
        }
        Command::Beta { apply: None, n, trials } => {
            let r = timed(cli, || {
                let b = beta_check(ctx, *n, *trials, cli.seed)?;
                let pass = b.pass();
                Ok(CheckResult::new(
                    "beta",
                    json!({ "N": n, "trials": trials, "seed": cli.seed }),
                    &b,
                    json!({ "failures": 0 }),
                    pass,
                ))
            })?;
            Report::check(r)
        }
        Command::TransesCheck { n, chi } => {
            let character = match chi {
                None => PodlesCharacter::counit(),
                Some(s) => parse_character(ctx, s)?,
            };
            let r = timed(cli, || {
                let t = transes_check(ctx, &character, *n)?;
                let pass = t.pass();
                Ok(CheckResult::new(
                    "transes-check",
                    json!({ "N": n, "chi": chi.as_deref().unwrap_or("0,0,0") }),
                    &t,
                    json!({ "failures": 0 }),
                    pass,
                ))
            })?;
            Report::check(r)
        }
        Command::SigmaInvCheck { n } => {
            let r = timed(cli, || {
                let s = sigma_inverse_check(ctx, *n)?;
                let pass = s.pass();
                Ok(CheckResult::new("sigma-inv-check", json!({ "N": n }), &s, json!({ "failures": 0 }), pass))
            })?;
            Report::check(r)
        }
        Command::VerifyAll { only, trials } => {
            let mut cfg = config(cli);
            if let Some(t) = trials {
                cfg.xi_trials = *t;
                cfg.character_trials = *t;
            }
            let names = select_checks(only)?;
            let results = if names.len() == CHECKS.len() {
                verify::run_all(ctx, &cfg)?
            } else {
                names.iter().map(|name| verify::run_check(ctx, &cfg, name)).collect::<Result<_>>()?
            };
            Report { results, list: true, text: None, default_format: Format::Json }
        }
    };
    for r in &mut report.results {
        if let Value::Object(params) = &mut r.params {
            params.insert("mode".into(), json!(mode));
        }
    }
    Ok(report)
}

fn rename(mut r: CheckResult, name: &str) -> CheckResult {
    r.check = name.into();
    r
}

fn select_checks(only: &[String]) -> Result<Vec<&'static str>> {
    if only.is_empty() {
        return Ok(CHECKS.to_vec());
    }
    let mut out = Vec::new();
    for want in only {
        let hit = CHECKS
            .iter()
            .find(|c| *c == want || c.starts_with(&format!("{want}_")))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{want}`")))?;
        if !out.contains(hit) {
            out.push(*hit);
        }
    }
    out.sort_by_key(|c| CHECKS.iter().position(|k| k == c));
    Ok(out)
}

/// `v-1,v0,v1` in scalar text syntax, specialised to the context.
fn parse_character<F: Field>(ctx: &Context<F>, s: &str) -> Result<PodlesCharacter<F>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidArgument(format!("--chi needs three comma-separated values, got `{s}`")));
    }
    let mut values = Vec::with_capacity(3);
    for p in parts {
        values.push(ctx.lift(&parse_scalar(p)?)?);
    }
    let values: [F; 3] = values.try_into().map_err(|_| Error::Internal("three values expected".into()))?;
    PodlesCharacter::new(ctx, values)
}
