use num_bigint::BigInt;
use num_traits::Signed;

use super::interval::RationalInterval;
use super::rational::{pow10, Rational};
use crate::error::{Error, Result};

fn scaled_trunc(x: &Rational, digits: usize) -> BigInt {
    (x * pow10(digits)).trunc().to_integer()
}

fn render_scaled(t: &BigInt, digits: usize) -> String {
    let mut body = t.abs().to_string();
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
    }
    let split = body.len() - digits;
    let sign = if t.is_negative() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{body}")
    } else {
        format!("{sign}{}.{}", &body[..split], &body[split..])
    }
}

/// Decimal expansion of `x` truncated toward zero after `digits` fractional
/// digits.
pub fn truncate_decimal(x: &Rational, digits: usize) -> String {
    render_scaled(&scaled_trunc(x, digits), digits)
}

/// Truncated decimal shared by every point of `encl`, or an error when the
/// interval straddles a truncation boundary.
pub fn certify_decimal(encl: &RationalInterval, digits: usize) -> Result<String> {
    let lo = scaled_trunc(encl.lo(), digits);
    let hi = scaled_trunc(encl.hi(), digits);
    if lo != hi {
        return Err(Error::EnclosureTooWide { digits });
    }
    Ok(render_scaled(&lo, digits))
}
