//! Exact arithmetic substrate: rationals, integer linear forms in `e`,
//! rational linear forms in `pi` and `ln 2`, dense polynomials and
//! rational intervals.

mod decimal;
mod eform;
mod interval;
mod piform;
mod poly;
mod rational;

pub use decimal::{truncate_decimal, certify_decimal};
pub use eform::EForm;
pub use interval::RationalInterval;
pub use piform::PiForm;
pub use poly::Poly;
pub use rational::{checked_div, format_rational, parse_rational, pow10, rat, Rational};
