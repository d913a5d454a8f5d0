//! Exact scalar arithmetic: rationals, Gaussian rationals, Laurent
//! polynomials in a formal parameter `t` and rational functions in `t`.
//!
//! Textual forms: scalars are `a`, `a/b`, optionally `re + im i`;
//! Laurent polynomials are sums of terms `c`, `c*t^e`, `t^e` joined by `+`/`-`,
//! with Gaussian coefficients that have both parts written in parentheses.
//! Printing and parsing round-trip exactly.

mod field;
mod ratfn;
mod scalar;
mod tmatrix;
mod tpoly;

pub use field::Field;
pub use ratfn::{ratfn, RatFn};
pub use scalar::{FieldKind, Gaussian, Rational, Scalar};
pub use tmatrix::{as_laurent, tmatrix_inverse, to_ratfn};
pub use tpoly::TPoly;
