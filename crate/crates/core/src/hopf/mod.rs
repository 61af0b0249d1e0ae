//! Hopf structure of the presets: coproduct, counit, antipode, the quotient
//! map onto Laurent polynomials, coactions and coideal membership.
//!
//! The Podles sphere has no coproduct of its own; its elements are pushed
//! into quantum SL(2) first, and first legs are pulled back when they are
//! known to lie in the sphere.

mod tensor;

pub use tensor::Tensor;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::ncalg::letters::*;
use crate::ncalg::{embed_podles, express_in_podles, AlgId, Monomial, NCPoly};
use crate::scalar::Field;

fn gen<F: Field>(alg: AlgId, letter: u8) -> NCPoly<F> {
    NCPoly::generator(alg, letter)
}

fn pair<F: Field>(alg: AlgId, terms: &[(u8, u8)]) -> Tensor<F> {
    let mut t = Tensor::zero(&[alg, alg]);
    for &(x, y) in terms {
        t = t.add(&Tensor::pair(&gen(alg, x), &gen(alg, y)));
    }
    t
}

/// `Δ` of a single generator.
fn coproduct_letter<F: Field>(alg: AlgId, letter: u8) -> Tensor<F> {
    match (alg, letter) {
        (AlgId::Qsl2, A) => pair(alg, &[(A, A), (B, C)]),
        (AlgId::Qsl2, B) => pair(alg, &[(A, B), (B, D)]),
        (AlgId::Qsl2, C) => pair(alg, &[(C, A), (D, C)]),
        (AlgId::Qsl2, D) => pair(alg, &[(C, B), (D, D)]),
        (AlgId::Laurent, l) => pair(alg, &[(l, l)]),
        (AlgId::SmashZ2, X) => pair(alg, &[(X, X)]),
        (AlgId::SmashZ2, Y) => {
            Tensor::pair(&NCPoly::one(alg), &gen(alg, Y)).add(&pair(alg, &[(Y, X)]))
        }
        _ => unreachable!("no coproduct for letter {letter} of {alg}"),
    }
}

/// `Δ` of a normal monomial of a Hopf preset.
pub fn coproduct_monomial<F: Field>(ctx: &Context<F>, m: &Monomial) -> Tensor<F> {
    let alg = m.alg();
    assert_ne!(alg, AlgId::Podles, "the Podles sphere is not a Hopf algebra");
    let mut acc = Tensor::one(&[alg, alg]);
    // Δ(x^k) for each run of equal letters, then one product per run
    for run in m.word().chunk_by(|x, y| x == y) {
        let step = coproduct_letter(alg, run[0]);
        let mut power = step.clone();
        for _ in 1..run.len() {
            power = power.mul(ctx, &step);
        }
        acc = acc.mul(ctx, &power);
    }
    acc
}

/// `Δ(p)`. Podles elements are embedded into quantum SL(2) first.
pub fn coproduct<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<Tensor<F>> {
    let p = if p.alg() == AlgId::Podles { embed_podles(ctx, p)? } else { p.clone() };
    let alg = p.alg();
    let mut out = Tensor::zero(&[alg, alg]);
    for (m, c) in p.terms() {
        out.add_scaled(&coproduct_monomial(ctx, m), c);
    }
    Ok(out)
}

/// `Δ(b)` for `b` in the Podles sphere, with first legs expressed in the
/// sphere (a right coideal: `Δ(B) ⊂ B ⊗ A`).
pub fn podles_coproduct<F: Field>(ctx: &Context<F>, b: &NCPoly<F>) -> Result<Tensor<F>> {
    if b.alg() != AlgId::Podles {
        return Err(Error::AlgebraMismatch { left: b.alg(), right: AlgId::Podles });
    }
    let full = coproduct(ctx, b)?;
    let mut out = Tensor::zero(&[AlgId::Podles, AlgId::Qsl2]);
    for (left, right) in full.by_left() {
        let l = express_in_podles(ctx, &NCPoly::monomial(left))
            .map_err(|_| Error::Internal(format!("first leg {left} of Δ({b}) is not in the Podles sphere")))?;
        out.add_scaled(&Tensor::pair(&l, &right), &F::one());
    }
    Ok(out)
}

fn counit_letter<F: Field>(alg: AlgId, letter: u8) -> F {
    let one = match alg {
        AlgId::Qsl2 => letter == A || letter == D,
        AlgId::Podles => false,
        AlgId::Laurent => true,
        AlgId::SmashZ2 => letter == X,
    };
    if one {
        F::one()
    } else {
        F::zero()
    }
}

/// `ε` of a normal monomial.
pub fn counit_monomial<F: Field>(m: &Monomial) -> F {
    m.word().iter().fold(F::one(), |acc, l| acc * counit_letter::<F>(m.alg(), *l))
}

/// The counit. On the Podles sphere it is the restriction of the counit of
/// quantum SL(2).
pub fn counit<F: Field>(p: &NCPoly<F>) -> F {
    p.terms().fold(F::zero(), |acc, (m, c)| acc + counit_monomial::<F>(m) * c)
}

/// `S^k` of a single generator for `k` in `{-2, -1, 1, 2}`.
fn antipode_letter<F: Field>(ctx: &Context<F>, alg: AlgId, letter: u8, power: i32) -> NCPoly<F> {
    let g = |l: u8| gen::<F>(alg, l);
    let scaled = |l: u8, c: F| gen::<F>(alg, l).scale(&c);
    match alg {
        AlgId::Qsl2 => match (power, letter) {
            (1 | -1, A) => g(D),
            (1 | -1, D) => g(A),
            (2 | -2, A) => g(A),
            (2 | -2, D) => g(D),
            (1, B) => scaled(B, -ctx.qp(-1)),
            (1, C) => scaled(C, -ctx.qp(1)),
            (-1, B) => scaled(B, -ctx.qp(1)),
            (-1, C) => scaled(C, -ctx.qp(-1)),
            (2, B) => scaled(B, ctx.qp(-2)),
            (2, C) => scaled(C, ctx.qp(2)),
            (-2, B) => scaled(B, ctx.qp(2)),
            (-2, C) => scaled(C, ctx.qp(-2)),
            _ => unreachable!(),
        },
        AlgId::Laurent => {
            if power % 2 == 0 {
                g(letter)
            } else {
                g(1 - letter)
            }
        }
        AlgId::SmashZ2 => match (power, letter) {
            (_, X) => g(X),
            (1, Y) => g(Y).mul(ctx, &g(X)).neg(),
            (-1, Y) => g(Y).mul(ctx, &g(X)),
            (2 | -2, Y) => g(Y).neg(),
            _ => unreachable!(),
        },
        AlgId::Podles => unreachable!("antipode on the sphere goes through the embedding"),
    }
}

/// `S^k` of a normal monomial of a Hopf preset, `k` in `{-2, -1, 1, 2}`.
pub fn antipode_monomial<F: Field>(ctx: &Context<F>, m: &Monomial, power: i32) -> NCPoly<F> {
    let alg = m.alg();
    let mut word = m.word();
    if power % 2 != 0 {
        word.reverse();
    }
    let mut acc = NCPoly::one(alg);
    for l in word {
        acc = acc.mul(ctx, &antipode_letter(ctx, alg, l, power));
    }
    acc
}

/// `S^k(p)` for `k` in `{-2, -1, 1, 2}`. For Podles input the result is
/// computed in quantum SL(2); even powers are pulled back to the sphere
/// (which they preserve), odd powers stay in quantum SL(2).
pub fn antipode<F: Field>(ctx: &Context<F>, p: &NCPoly<F>, power: i32) -> Result<NCPoly<F>> {
    if ![-2, -1, 1, 2].contains(&power) {
        return Err(Error::InvalidArgument(format!("antipode power {power} not in {{-2, -1, 1, 2}}")));
    }
    if p.alg() == AlgId::Podles {
        let img = antipode(ctx, &embed_podles(ctx, p)?, power)?;
        return if power % 2 == 0 { express_in_podles(ctx, &img) } else { Ok(img) };
    }
    let mut out = NCPoly::zero(p.alg());
    for (m, c) in p.terms() {
        out.add_scaled(&antipode_monomial(ctx, m, power), c);
    }
    Ok(out)
}

/// `S^k` for any integer `k`, by composing the basic powers.
pub fn antipode_pow<F: Field>(ctx: &Context<F>, p: &NCPoly<F>, power: i32) -> Result<NCPoly<F>> {
    let mut acc = p.clone();
    let step = if power >= 0 { 2 } else { -2 };
    let mut left = power;
    while left.abs() >= 2 {
        acc = antipode(ctx, &acc, step)?;
        left -= step;
    }
    if left != 0 {
        acc = antipode(ctx, &acc, left)?;
    }
    Ok(acc)
}

/// `π(f_{lmn}) = δ_{m0} δ_{n0} z^l`.
pub fn project_pi_monomial(m: &Monomial) -> Option<Monomial> {
    let (l, b, c) = m.qsl2_indices();
    (b == 0 && c == 0).then(|| Monomial::laurent(l))
}

/// The Hopf quotient `π` of quantum SL(2) onto Laurent polynomials.
pub fn project_pi<F: Field>(p: &NCPoly<F>) -> Result<NCPoly<F>> {
    if p.alg() != AlgId::Qsl2 {
        return Err(Error::Unsupported { op: "pi", alg: p.alg() });
    }
    Ok(NCPoly::from_terms(
        AlgId::Laurent,
        p.terms().filter_map(|(m, c)| project_pi_monomial(m).map(|z| (z, c.clone()))),
    ))
}

/// `(π ⊗ id)Δ(p)`, with left legs powers of `z`.
pub fn left_coaction<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<Tensor<F>> {
    if p.alg() != AlgId::Qsl2 {
        return Err(Error::Unsupported { op: "left coaction", alg: p.alg() });
    }
    let d = coproduct(ctx, p)?;
    Ok(d.map_leg(0, AlgId::Laurent, |m| {
        project_pi_monomial(m).map(NCPoly::monomial).unwrap_or_else(|| NCPoly::zero(AlgId::Laurent))
    }))
}

/// `(id ⊗ π)Δ(p)`.
pub fn right_coaction<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<Tensor<F>> {
    if p.alg() != AlgId::Qsl2 {
        return Err(Error::Unsupported { op: "right coaction", alg: p.alg() });
    }
    let d = coproduct(ctx, p)?;
    Ok(d.map_leg(1, AlgId::Laurent, |m| {
        project_pi_monomial(m).map(NCPoly::monomial).unwrap_or_else(|| NCPoly::zero(AlgId::Laurent))
    }))
}

/// Whether `(π ⊗ id)Δ(p) = 1 ⊗ p`, i.e. `p` lies in the Podles sphere.
pub fn coideal_membership<F: Field>(ctx: &Context<F>, p: &NCPoly<F>) -> Result<bool> {
    Ok(left_coaction(ctx, p)? == Tensor::pair(&NCPoly::one(AlgId::Laurent), p))
}

/// `ρ(b ⊗ a) = b_(1) ⊗ a S^2(b_(2))` on `B ⊗ A`.
pub fn rho<F: Field>(ctx: &Context<F>, t: &Tensor<F>) -> Result<Tensor<F>> {
    rho_with_power(ctx, t, 2)
}

/// `ρ^{-1}(b ⊗ a) = b_(1) ⊗ a S(b_(2))`.
pub fn rho_inv<F: Field>(ctx: &Context<F>, t: &Tensor<F>) -> Result<Tensor<F>> {
    rho_with_power(ctx, t, 1)
}

fn rho_with_power<F: Field>(ctx: &Context<F>, t: &Tensor<F>, power: i32) -> Result<Tensor<F>> {
    let shape = [AlgId::Podles, AlgId::Qsl2];
    if t.algs() != shape {
        return Err(Error::InvalidArgument("ρ acts on B ⊗ A".into()));
    }
    let mut err = None;
    let out = t.flat_map(&shape, |k| {
        let r = (|| -> Result<Tensor<F>> {
            let db = podles_coproduct(ctx, &NCPoly::monomial(k[0]))?;
            let a = NCPoly::monomial(k[1]);
            let mut acc = Tensor::zero(&shape);
            for (u, w) in db.by_left() {
                let right = a.mul(ctx, &antipode(ctx, &w, power)?);
                acc = acc.add(&Tensor::pair(&NCPoly::monomial(u), &right));
            }
            Ok(acc)
        })();
        r.unwrap_or_else(|e| {
            err = Some(e);
            Tensor::zero(&shape)
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Verifies `ρ(x_(1) b y ⊗ z a S(x_(2))) = x ρ(b ⊗ a) ◁ (y ⊗ z)` and
/// `ρ^{-1} ρ = ρ ρ^{-1} = id` on `b ⊗ a`, where `x, b, y` are in the sphere
/// and `a, z` in quantum SL(2).
pub fn rho_check<F: Field>(
    ctx: &Context<F>,
    x: &NCPoly<F>,
    b: &NCPoly<F>,
    a: &NCPoly<F>,
    y: &NCPoly<F>,
    z: &NCPoly<F>,
) -> Result<bool> {
    for (p, want) in [(x, AlgId::Podles), (b, AlgId::Podles), (y, AlgId::Podles), (a, AlgId::Qsl2), (z, AlgId::Qsl2)] {
        if p.alg() != want {
            return Err(Error::AlgebraMismatch { left: p.alg(), right: want });
        }
    }
    let shape = [AlgId::Podles, AlgId::Qsl2];
    // left side: the ad-type action of x followed by the right action of y ⊗ z
    let mut lhs_arg = Tensor::zero(&shape);
    for (u, w) in podles_coproduct(ctx, x)?.by_left() {
        let left = NCPoly::monomial(u).mul(ctx, b).mul(ctx, y);
        let right = z.mul(ctx, a).mul(ctx, &antipode(ctx, &w, 1)?);
        lhs_arg = lhs_arg.add(&Tensor::pair(&left, &right));
    }
    let lhs = rho(ctx, &lhs_arg)?;
    // right side: x ρ(b ⊗ a) ◁ (y ⊗ z), with (u ⊗ v) ◁ (y ⊗ z) = u y_(1) ⊗ z v S^2(y_(2))
    let rb = rho(ctx, &Tensor::pair(b, a))?;
    let dy = podles_coproduct(ctx, y)?;
    let mut rhs = Tensor::zero(&shape);
    for (u, v) in rb.by_left() {
        let xu = x.mul(ctx, &NCPoly::monomial(u));
        for (y1, y2) in dy.by_left() {
            let left = xu.mul(ctx, &NCPoly::monomial(y1));
            let right = z.mul(ctx, &v).mul(ctx, &antipode(ctx, &y2, 2)?);
            rhs = rhs.add(&Tensor::pair(&left, &right));
        }
    }
    let ba = Tensor::pair(b, a);
    let round1 = rho_inv(ctx, &rho(ctx, &ba)?)?;
    let round2 = rho(ctx, &rho_inv(ctx, &ba)?)?;
    Ok(lhs == rhs && round1 == ba && round2 == ba)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_poly;
    use crate::scalar::RatFunc;

    fn ctx() -> Context<RatFunc> {
        Context::symbolic()
    }

    fn p(alg: AlgId, s: &str) -> NCPoly<RatFunc> {
        parse_poly(&ctx(), alg, s).unwrap()
    }

    #[test]
    fn generator_coproducts() {
        let c = ctx();
        assert_eq!(coproduct(&c, &p(AlgId::Qsl2, "a")).unwrap().to_string(), "a ⊗ a + b ⊗ c");
        assert_eq!(coproduct(&c, &p(AlgId::Qsl2, "1")).unwrap().to_string(), "1 ⊗ 1");
    }

    #[test]
    fn coproduct_of_y_minus_one() {
        let c = ctx();
        let got = coproduct(&c, &p(AlgId::Podles, "y-1")).unwrap();
        let q = |s: &str| p(AlgId::Qsl2, s);
        let want = Tensor::pair(&q("c*a"), &q("a^2"))
            .add(&Tensor::pair(&q("b*c"), &q("a*c")))
            .add(&Tensor::pair(&q("1 + q^-1*b*c"), &q("c*a")))
            .add(&Tensor::pair(&q("q^-1*b*d"), &q("c^2")));
        assert_eq!(got, want);
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&p(AlgId::Qsl2, "a")), RatFunc::from_int(1));
        assert_eq!(counit(&p(AlgId::Podles, "y0")), RatFunc::from_int(0));
        assert_eq!(counit(&p(AlgId::Podles, "1")), RatFunc::from_int(1));
    }

    #[test]
    fn antipode_examples() {
        let c = ctx();
        assert_eq!(antipode(&c, &p(AlgId::Qsl2, "b"), 1).unwrap(), p(AlgId::Qsl2, "-q^-1*b"));
        assert_eq!(antipode(&c, &p(AlgId::SmashZ2, "y"), 2).unwrap(), p(AlgId::SmashZ2, "-y"));
        assert_eq!(antipode(&c, &p(AlgId::Podles, "y-1"), 2).unwrap(), p(AlgId::Podles, "q^2*y-1"));
        for s in ["a*b", "d*c^2", "b*c*a"] {
            let x = p(AlgId::Qsl2, s);
            let there = antipode(&c, &x, 1).unwrap();
            assert_eq!(antipode(&c, &there, -1).unwrap(), x);
            let there = antipode(&c, &x, 2).unwrap();
            assert_eq!(antipode(&c, &there, -2).unwrap(), x);
            assert_eq!(antipode_pow(&c, &x, 2).unwrap(), antipode(&c, &antipode(&c, &x, 1).unwrap(), 1).unwrap());
        }
    }

    #[test]
    fn pi_examples() {
        assert_eq!(project_pi(&p(AlgId::Qsl2, "a")).unwrap(), p(AlgId::Laurent, "z"));
        assert!(project_pi(&p(AlgId::Qsl2, "a^2*b")).unwrap().is_zero());
        assert_eq!(project_pi(&p(AlgId::Qsl2, "a*d")).unwrap(), p(AlgId::Laurent, "1"));
    }

    #[test]
    fn coaction_examples() {
        let c = ctx();
        let b = p(AlgId::Qsl2, "b");
        assert_eq!(left_coaction(&c, &b).unwrap(), Tensor::pair(&p(AlgId::Laurent, "z"), &b));
        assert!(coideal_membership(&c, &p(AlgId::Qsl2, "b*c")).unwrap());
        assert!(!coideal_membership(&c, &b).unwrap());
        assert!(coideal_membership(&c, &p(AlgId::Qsl2, "1")).unwrap());
    }

    #[test]
    fn rho_examples() {
        let c = ctx();
        let one_b = p(AlgId::Podles, "1");
        let one_a = p(AlgId::Qsl2, "1");
        let y0 = p(AlgId::Podles, "y0");
        assert!(rho_check(&c, &one_b, &y0, &p(AlgId::Qsl2, "c"), &one_b, &one_a).unwrap());
        assert!(rho_check(&c, &y0, &one_b, &one_a, &one_b, &one_a).unwrap());
        let t = Tensor::pair(&y0, &p(AlgId::Qsl2, "c"));
        assert_eq!(rho_inv(&c, &rho(&c, &t).unwrap()).unwrap(), t);
    }
}
