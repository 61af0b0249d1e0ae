//! Exact computations for quantum SL(2) and the standard Podles sphere.
//!
//! Everything is generic over the coefficient [`Field`]: [`RatFunc`] keeps
//! `q` symbolic, [`BigRational`] works at a fixed admissible rational `q`.
//! The aliases below fix the two modes.

pub mod context;
pub mod duality;
pub mod error;
pub mod hochschild;
pub mod hopf;
pub mod koszul;
pub mod linalg;
pub mod expr;
pub mod ncalg;
pub mod scalar;
pub mod verify;

pub use context::Context;
pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use scalar::{Field, RatFunc};

/// Scalars of the symbolic mode: exact rational functions in `q`.
pub type Scalar = RatFunc;
/// Context of the symbolic mode.
pub type SymbolicContext = Context<RatFunc>;
/// Context with `q` specialised to a rational number.
pub type SpecializedContext = Context<BigRational>;
/// Polynomial in one of the preset algebras, symbolic coefficients.
pub type Poly = ncalg::NCPoly<RatFunc>;
