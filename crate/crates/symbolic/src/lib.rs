//! Exact rational-function arithmetic over ℚ with jet-aware differentiation.
//!
//! Expressions live in a frozen [`Context`] that names every coordinate,
//! parameter and jet symbol. Unknown functions of the coordinates are
//! represented by jet symbols (`f`, `f3`, `f34`, …) whose derivatives are
//! looked up in a [`JetTable`], so the field stays purely rational and
//! zero-testing is exact.

pub mod coeff;
pub mod context;
pub mod error;
pub mod gcd;
pub mod parse;
pub mod point;
pub mod poly;
pub mod ratfn;

pub use coeff::Coefficient;
pub use context::{Context, ContextBuilder, JetRule, JetTable, Symbol, SymbolKind};
pub use error::SymbolicError;
pub use point::{is_identically_zero, random_point, spot_check_zero, Point};
pub use poly::{Monomial, Poly, Var};
pub use ratfn::RatFn;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact expression with arbitrary-precision rational coefficients.
pub type Expr = RatFn<BigRational>;
/// Polynomial with arbitrary-precision rational coefficients.
pub type ExprPoly = Poly<BigRational>;
