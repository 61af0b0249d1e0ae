use num_rational::BigRational;

use super::{RatFunc, ScalarError};
use crate::expr::{self, Expr};

/// Parses a scalar such as `q^-2 + 3*q`, `(1+q)/q` or `(q^2-1)/(q-1)`.
pub fn parse_scalar(input: &str) -> Result<RatFunc, ScalarError> {
    let e = expr::parse(input, &[]).map_err(|e| ScalarError::Parse {
        input: input.to_string(),
        reason: e.reason,
    })?;
    eval(&e).map_err(|reason| ScalarError::Parse { input: input.to_string(), reason })
}

fn eval(e: &Expr) -> Result<RatFunc, String> {
    Ok(match e {
        Expr::Int(n) => RatFunc::from_int(n.clone()),
        Expr::Q => RatFunc::q(),
        Expr::Gen(_) => return Err("generators are not scalars".into()),
        Expr::Add(a, b) => &eval(a)? + &eval(b)?,
        Expr::Sub(a, b) => &eval(a)? - &eval(b)?,
        Expr::Mul(a, b) => &eval(a)? * &eval(b)?,
        Expr::Div(a, b) => eval(a)?.checked_div(&eval(b)?).map_err(|e| e.to_string())?,
        Expr::Neg(a) => -eval(a)?,
        Expr::Pow(a, k) => eval(a)?.pow(*k).map_err(|e| e.to_string())?,
    })
}

/// Parses an exact rational such as `3/2` or `-5`.
pub fn parse_rational(input: &str) -> Result<BigRational, ScalarError> {
    let s = input.trim();
    let r: BigRational = s.parse().map_err(|_| ScalarError::Parse {
        input: input.to_string(),
        reason: "expected an integer or n/d".into(),
    })?;
    Ok(r)
}
