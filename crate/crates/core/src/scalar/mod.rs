//! Exact scalars: the field `Q(q)`, its specialisations at rational points,
//! and the `q`-coefficient helpers used by the quotient reductions.

mod field;
mod poly;
mod qbracket;
mod ratfunc;
mod text;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use field::Field;
pub use poly::Poly;
pub use qbracket::{gaussian_binomial_q2, q2_integer, q_bracket, QBracketRule, Q_BRACKET_RULE};
pub use ratfunc::RatFunc;
pub use text::{parse_rational, parse_scalar};

/// Serde helpers writing scalars (and anything else with `Display`) in
/// their text syntax.
pub mod text_serde {
    use std::collections::BTreeMap;
    use std::fmt::Display;

    use serde::ser::{SerializeMap, SerializeSeq};
    use serde::Serializer;

    pub fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn display_seq<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn display_map<K: Display, V: Display, S: Serializer>(v: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(v.len()))?;
        for (k, x) in v {
            map.serialize_entry(&k.to_string(), &x.to_string())?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    PoleAt(String),
    #[error("q = {0} is not admissible (must be nonzero and not a root of unity)")]
    InadmissibleParameter(String),
    #[error("q-bracket ({j} {r}) needs 0 <= r <= j")]
    BadBracket { j: i64, r: i64 },
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Arithmetic operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on two scalars.
pub fn arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc, ScalarError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Rational values of `q` for which the specialised computations are
/// meaningful: nonzero and not a root of unity, i.e. not `0`, `1` or `-1`.
pub fn check_admissible(q0: &BigRational) -> Result<(), ScalarError> {
    if q0.is_zero() || q0.abs().is_one() {
        return Err(ScalarError::InadmissibleParameter(q0.to_string()));
    }
    Ok(())
}

/// Evaluates a scalar at an admissible rational `q0`.
pub fn specialize(a: &RatFunc, q0: &BigRational) -> Result<BigRational, ScalarError> {
    check_admissible(q0)?;
    a.specialize(q0)
}
