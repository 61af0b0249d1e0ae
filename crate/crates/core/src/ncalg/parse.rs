use num_traits::ToPrimitive;

use super::{AlgId, NCPoly};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::scalar::Field;

/// Parses an element of `alg` written in the plain-text grammar, e.g.
/// `y1*y-1 - q^-2*y0^2` or `(1+q)*a*d`, and returns its normal form.
///
/// Negative powers are accepted for nonzero scalars and for `z`, `zinv`.
pub fn parse_poly<F: Field>(ctx: &Context<F>, alg: AlgId, input: &str) -> Result<NCPoly<F>> {
    let e = expr::parse(input, alg.generators())?;
    eval(ctx, alg, &e)
}

fn eval<F: Field>(ctx: &Context<F>, alg: AlgId, e: &Expr) -> Result<NCPoly<F>> {
    Ok(match e {
        Expr::Int(n) => {
            let n = n.to_i64().ok_or_else(|| Error::InvalidArgument(format!("integer {n} out of range")))?;
            NCPoly::scalar(alg, F::from_i64(n))
        }
        Expr::Q => NCPoly::scalar(alg, ctx.q().clone()),
        Expr::Gen(g) => NCPoly::generator(alg, *g as u8),
        Expr::Add(a, b) => eval(ctx, alg, a)?.add(&eval(ctx, alg, b)?),
        Expr::Sub(a, b) => eval(ctx, alg, a)?.sub(&eval(ctx, alg, b)?),
        Expr::Mul(a, b) => eval(ctx, alg, a)?.mul(ctx, &eval(ctx, alg, b)?),
        Expr::Div(a, b) => {
            let d = eval(ctx, alg, b)?;
            let inv = invert(alg, &d)?;
            eval(ctx, alg, a)?.mul(ctx, &inv)
        }
        Expr::Neg(a) => eval(ctx, alg, a)?.neg(),
        Expr::Pow(a, k) => {
            let base = eval(ctx, alg, a)?;
            let base = if *k < 0 { invert(alg, &base)? } else { base };
            let k = u32::try_from(k.unsigned_abs())
                .map_err(|_| Error::InvalidArgument(format!("exponent {k} out of range")))?;
            base.pow(ctx, k)
        }
    })
}

fn invert<F: Field>(alg: AlgId, p: &NCPoly<F>) -> Result<NCPoly<F>> {
    if let Some(c) = p.as_scalar() {
        return Ok(NCPoly::scalar(alg, c.try_inv()?));
    }
    if alg == AlgId::Laurent {
        if let Some((m, c)) = p.as_single_term() {
            let inv = super::Monomial::laurent(-m.laurent_exponent());
            return Ok(NCPoly::term(inv, c.try_inv()?));
        }
    }
    Err(Error::NotInvertible { alg, name: p.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;

    #[test]
    fn parses_and_normalises() {
        let ctx = Context::<RatFunc>::symbolic();
        let p = parse_poly(&ctx, AlgId::Podles, "y1*y-1").unwrap();
        assert_eq!(p.to_string(), "q^-2*y0^2 + q^-1*y0");
        let p = parse_poly(&ctx, AlgId::Qsl2, "d*a").unwrap();
        assert_eq!(p.to_string(), "q^-1*b*c + 1");
        let p = parse_poly(&ctx, AlgId::Laurent, "z^-2*z").unwrap();
        assert_eq!(p.to_string(), "z^-1");
        let p = parse_poly(&ctx, AlgId::Podles, "(y1+y0)/(1+q)").unwrap();
        assert_eq!(p.to_string(), "(1)/(1 + q)*y1 + (1)/(1 + q)*y0");
        assert_eq!(parse_poly(&ctx, AlgId::Podles, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        let ctx = Context::<RatFunc>::symbolic();
        assert!(parse_poly(&ctx, AlgId::Qsl2, "a^-1").is_err());
        assert!(parse_poly(&ctx, AlgId::Qsl2, "a*w").is_err());
        assert!(parse_poly(&ctx, AlgId::Qsl2, "a/b").is_err());
    }
}
