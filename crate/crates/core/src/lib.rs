//! Exact rational approximation of `e` and `pi` through integrals with
//! nonnegative integrands.
//!
//! The integrals `I(n, m) = ∫₀¹ xⁿ(1−x)ᵐ eˣ dx` evaluate exactly to integer
//! combinations `a·e + b`. Setting such a value to zero yields the rational
//! approximation `e ≈ −b/a`, and for `|n − m| ≤ 1` that rational is always a
//! convergent of the continued fraction `e = [2; 1, 2, 1, 1, 4, 1, …]`. This
//! crate computes those integrals, the convergents, verifies the identities
//! linking them, and turns the sign of the diagonal integrals into certified
//! brackets of `e`. A companion family of integrals with a `1 + x²`
//! denominator does the same for `pi`.

pub mod arith;
pub mod cf;
pub mod constants;
mod error;
pub mod integral;
pub mod pi;
#[cfg(feature = "quadrature")]
pub mod quadrature;
pub mod theorem;

pub use arith::{EForm, PiForm, Poly, Rational, RationalInterval};
pub use error::{Error, Result};
